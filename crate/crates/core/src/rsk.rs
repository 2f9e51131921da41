//! The Knuth-Viennot step and the recursive RSK transform of multisegments.
//!
//! One Knuth-Viennot step splits a multisegment into a ladder and a rest by
//! sorting occurrences into depth classes, cycling the end points inside
//! each class, and collecting the last element of every class into the
//! ladder. Iterating on the rest until it is itself a ladder yields the RSK
//! transform, whose length is the width.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multisegment::{Multisegment, Segment};
use crate::tableaux::{ladders_of, BitableauPair, InvertedSsyt};

/// An ordered list of ladder multisegments.
///
/// Entries may be empty only when the sequence was produced by reading a
/// bitableau whose rows collapse (see [`crate::tableaux::ladders_of`]); the
/// RSK transform itself never produces gaps.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Multisegment>", into = "Vec<Multisegment>")]
pub struct LadderSequence {
    ladders: Vec<Multisegment>,
}

impl TryFrom<Vec<Multisegment>> for LadderSequence {
    type Error = Error;
    fn try_from(ladders: Vec<Multisegment>) -> Result<Self> {
        Self::new(ladders)
    }
}

impl From<LadderSequence> for Vec<Multisegment> {
    fn from(s: LadderSequence) -> Self {
        s.ladders
    }
}

impl LadderSequence {
    /// Accepts entries that are ladders or empty.
    pub fn new(ladders: Vec<Multisegment>) -> Result<Self> {
        if let Some(bad) = ladders.iter().find(|l| !l.is_empty() && !l.is_ladder()) {
            return Err(Error::NotALadder(bad.to_string()));
        }
        Ok(Self { ladders })
    }

    /// Validates the RSK-output shape: gapless ladders with weakly
    /// decreasing sizes.
    pub fn from_rsk(ladders: Vec<Multisegment>) -> Result<Self> {
        if let Some(bad) = ladders.iter().find(|l| !l.is_ladder()) {
            return Err(Error::NotALadder(bad.to_string()));
        }
        if let Some(w) = ladders.windows(2).find(|w| w[0].len() < w[1].len()) {
            return Err(Error::ShapeViolation(format!(
                "ladder sizes increase: {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self { ladders })
    }

    pub fn ladders(&self) -> &[Multisegment] {
        &self.ladders
    }

    pub fn len(&self) -> usize {
        self.ladders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ladders.is_empty()
    }

    pub fn has_gaps(&self) -> bool {
        self.ladders.iter().any(Multisegment::is_empty)
    }

    /// Drops empty entries.
    pub fn without_gaps(&self) -> LadderSequence {
        Self {
            ladders: self
                .ladders
                .iter()
                .filter(|l| !l.is_empty())
                .cloned()
                .collect(),
        }
    }

    /// Entrywise derivative; entries may become empty.
    pub fn derive(&self) -> LadderSequence {
        Self {
            ladders: self.ladders.iter().map(Multisegment::derive).collect(),
        }
    }

    /// Sum of all entries.
    pub fn total(&self) -> Multisegment {
        self.ladders
            .iter()
            .fold(Multisegment::empty(), |acc, l| acc.sum(l))
    }
}

impl fmt::Display for LadderSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.ladders.iter().enumerate() {
            if n > 0 {
                write!(f, " ; ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LadderSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LadderSequence({self})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthEntry {
    /// Position of the occurrence in [`Multisegment::segments`].
    pub occurrence: usize,
    pub segment: Segment,
    pub depth: usize,
}

/// Depth of every occurrence: the length of the longest `<<`-chain that
/// starts at it and goes up, counted in steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthTable {
    pub entries: Vec<DepthEntry>,
    pub max_depth: usize,
}

impl DepthTable {
    pub fn depth_of(&self, occurrence: usize) -> usize {
        self.entries[occurrence].depth
    }

    /// Occurrences of each depth class in the default enumeration order:
    /// begins ascending, ends descending, stable in occurrence order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.max_depth + 1];
        for e in &self.entries {
            classes[e.depth].push(e.occurrence);
        }
        for class in &mut classes {
            class.sort_by(|&x, &y| {
                let (sx, sy) = (&self.entries[x].segment, &self.entries[y].segment);
                sx.begin().cmp(&sy.begin()).then(sy.end().cmp(&sx.end()))
            });
        }
        classes
    }
}

pub fn depth_function(m: &Multisegment) -> Result<DepthTable> {
    if m.is_empty() {
        return Err(Error::EmptyInput);
    }
    let segs = m.segments();
    let n = segs.len();
    let mut depth = vec![0usize; n];
    // Stored order is ascending by end, and `<<` strictly increases ends,
    // so every successor of `i` sits to its right.
    for i in (0..n).rev() {
        depth[i] = (i + 1..n)
            .filter(|&j| segs[i].precedes(&segs[j]))
            .map(|j| depth[j] + 1)
            .max()
            .unwrap_or(0);
    }
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    let entries = segs
        .iter()
        .zip(depth)
        .enumerate()
        .map(|(occurrence, (&segment, depth))| DepthEntry {
            occurrence,
            segment,
            depth,
        })
        .collect();
    Ok(DepthTable { entries, max_depth })
}

/// One Knuth-Viennot step with explicit per-class enumerations.
///
/// `classes[k]` must list exactly the occurrences of depth `k`, ordered with
/// begins weakly increasing and ends weakly decreasing. Returns
/// `(ladder, rest)`.
pub fn knuth_viennot_with(
    m: &Multisegment,
    classes: &[Vec<usize>],
) -> Result<(Multisegment, Multisegment)> {
    let table = depth_function(m)?;
    let segs = m.segments();
    if classes.len() != table.max_depth + 1 {
        return Err(Error::Precondition(format!(
            "expected {} depth classes, got {}",
            table.max_depth + 1,
            classes.len()
        )));
    }
    let mut seen = vec![false; segs.len()];
    let mut ladder = Vec::with_capacity(classes.len());
    let mut rest = Vec::with_capacity(segs.len() - classes.len());
    for (k, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::Precondition(format!("depth class {k} is empty")));
        }
        for &i in class {
            if i >= segs.len() || seen[i] || table.depth_of(i) != k {
                return Err(Error::Precondition(format!(
                    "occurrence {i} does not belong to depth class {k}"
                )));
            }
            seen[i] = true;
        }
        for w in class.windows(2) {
            let (x, y) = (&segs[w[0]], &segs[w[1]]);
            if x.begin() > y.begin() || x.end() < y.end() {
                return Err(Error::Precondition(format!(
                    "enumeration of depth class {k} is not nested at {x}, {y}"
                )));
            }
        }
        // The cycle i_1 -> i_2 -> ... -> i_l -> i_1 moves each end one slot back.
        let l = class.len();
        for r in 0..l {
            let begin = segs[class[r]].begin();
            let end = segs[class[(r + 1) % l]].end();
            let star = Segment::new(begin, end).expect("nested enumeration keeps begin <= end");
            if r + 1 == l {
                ladder.push(star);
            } else {
                rest.push(star);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Precondition(
            "depth classes do not cover every occurrence".into(),
        ));
    }
    Ok((Multisegment::new(ladder), Multisegment::new(rest)))
}

/// One Knuth-Viennot step `m -> (ladder, rest)` with postconditions checked.
pub fn knuth_viennot(m: &Multisegment) -> Result<(Multisegment, Multisegment)> {
    let classes = depth_function(m)?.classes();
    let (ladder, rest) = knuth_viennot_with(m, &classes)?;
    if !ladder.is_ladder() {
        return Err(Error::Counterexample(format!(
            "Knuth-Viennot step on {m} produced non-ladder {ladder}"
        )));
    }
    if &ladder.wt() + &rest.wt() != m.wt() {
        return Err(Error::Counterexample(format!(
            "Knuth-Viennot step on {m} changed the weight"
        )));
    }
    if !is_permissible_pair(&ladder, &rest)? {
        return Err(Error::Counterexample(format!(
            "Knuth-Viennot step on {m} produced non-permissible pair ({ladder}, {rest})"
        )));
    }
    Ok((ladder, rest))
}

/// The RSK transform; the empty multisegment maps to the empty sequence.
pub fn rsk_transform(m: &Multisegment) -> Result<LadderSequence> {
    let mut ladders = Vec::new();
    let mut current = m.clone();
    while !current.is_empty() {
        if current.is_ladder() {
            ladders.push(current);
            break;
        }
        let (ladder, rest) = knuth_viennot(&current)?;
        ladders.push(ladder);
        current = rest;
    }
    LadderSequence::from_rsk(ladders)
}

/// Minimal number of ladders summing to `m`.
pub fn width(m: &Multisegment) -> Result<usize> {
    Ok(rsk_transform(m)?.len())
}

/// Tests whether every `<<`-chain of `m` embeds into the ladder `l` in the
/// interval sense: chain element `t` (counted from the top) maps to a
/// distinct ladder segment `phi(t)`, increasing in `t`, whose interval
/// contains the chain element's end.
pub fn is_permissible_pair(l: &Multisegment, m: &Multisegment) -> Result<bool> {
    if !l.is_ladder() {
        return Err(Error::NotALadder(l.to_string()));
    }
    if m.is_empty() {
        return Ok(true);
    }
    // Top-down order for both the ladder and the chains.
    let ladder: Vec<Segment> = l.segments().iter().rev().copied().collect();
    let segs = m.segments();
    let n = segs.len();
    let covers: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| {
                    segs[x].precedes(&segs[y])
                        && !(0..n).any(|z| segs[x].precedes(&segs[z]) && segs[z].precedes(&segs[y]))
                })
                .collect()
        })
        .collect();
    let minimal: Vec<usize> = (0..n)
        .filter(|&x| !(0..n).any(|z| segs[z].precedes(&segs[x])))
        .collect();

    // Depth-first over maximal chains, bottom-up; each complete chain is
    // checked top-down with greedy matching.
    let mut stack: Vec<(usize, usize)> = minimal.iter().map(|&x| (x, 0)).collect();
    let mut path: Vec<usize> = Vec::new();
    while let Some((x, depth)) = stack.pop() {
        path.truncate(depth);
        path.push(x);
        if covers[x].is_empty() {
            let chain_ends: Vec<i64> = path.iter().rev().map(|&i| segs[i].end()).collect();
            if !greedy_embeds(&ladder, &chain_ends) {
                return Ok(false);
            }
        } else {
            for &y in &covers[x] {
                stack.push((y, depth + 1));
            }
        }
    }
    Ok(true)
}

/// Greedy earliest matching of strictly decreasing chain ends into the
/// top-down ladder intervals.
fn greedy_embeds(ladder: &[Segment], chain_ends: &[i64]) -> bool {
    let mut next = 0;
    for &e in chain_ends {
        match (next..ladder.len()).find(|&j| ladder[j].begin() <= e && e <= ladder[j].end()) {
            Some(j) => next = j + 1,
            None => return false,
        }
    }
    true
}

/// The permissible bitableau `(P, Q)` whose ladders are the RSK transform of
/// `m`: row `i` of `P` holds the begins of the `i`-th ladder in decreasing
/// order, row `i` of `Q` the matching `end + 1` values.
pub fn bitableau_of(m: &Multisegment) -> Result<BitableauPair> {
    if m.is_empty() {
        return Err(Error::EmptyInput);
    }
    let rsk = rsk_transform(m)?;
    let mut p_rows = Vec::with_capacity(rsk.len());
    let mut q_rows = Vec::with_capacity(rsk.len());
    for l in rsk.ladders() {
        p_rows.push(l.segments().iter().rev().map(Segment::begin).collect());
        q_rows.push(l.segments().iter().rev().map(|s| s.end() + 1).collect());
    }
    let p =
        InvertedSsyt::new(p_rows).map_err(|e| Error::ShapeViolation(format!("P of {m}: {e}")))?;
    let q =
        InvertedSsyt::new(q_rows).map_err(|e| Error::ShapeViolation(format!("Q of {m}: {e}")))?;
    let pair = BitableauPair::new(p, q)?;
    if !pair.is_permissible() {
        return Err(Error::NotPermissible(format!("bitableau of {m}")));
    }
    if ladders_of(&pair)? != rsk {
        return Err(Error::Counterexample(format!(
            "bitableau of {m} does not reproduce its RSK transform"
        )));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    fn seq(parts: &[&str]) -> LadderSequence {
        LadderSequence::new(parts.iter().map(|s| ms(s)).collect()).unwrap()
    }

    #[test]
    fn depths() {
        let t = depth_function(&ms("[1,2]+[2,3]")).unwrap();
        assert_eq!(t.max_depth, 1);
        let by_seg: Vec<(String, usize)> = t
            .entries
            .iter()
            .map(|e| (e.segment.to_string(), e.depth))
            .collect();
        assert_eq!(by_seg, vec![("[1,2]".into(), 1), ("[2,3]".into(), 0)]);

        let t = depth_function(&ms("[5,5]")).unwrap();
        assert_eq!((t.max_depth, t.entries[0].depth), (0, 0));

        let t = depth_function(&ms("[1,1]+[1,1]")).unwrap();
        assert!(t.entries.iter().all(|e| e.depth == 0));

        assert_eq!(
            depth_function(&Multisegment::empty()),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn knuth_viennot_examples() {
        assert_eq!(
            knuth_viennot(&ms("[1,2]+[2,3]")).unwrap(),
            (ms("[1,2]+[2,3]"), ms("0"))
        );
        assert_eq!(
            knuth_viennot(&ms("[1,1]+[1,2]")).unwrap(),
            (ms("[1,2]"), ms("[1,1]"))
        );
        assert_eq!(
            knuth_viennot(&ms("[1,1]+[1,1]")).unwrap(),
            (ms("[1,1]"), ms("[1,1]"))
        );
        assert_eq!(
            knuth_viennot(&Multisegment::empty()),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn knuth_viennot_rejects_bad_enumerations() {
        let m = ms("[1,1]+[1,2]");
        // [1,1] is at position 0, [1,2] at 1; ends must weakly decrease.
        assert!(knuth_viennot_with(&m, &[vec![0, 1]]).is_err());
        assert!(knuth_viennot_with(&m, &[vec![1, 0]]).is_ok());
        assert!(knuth_viennot_with(&m, &[vec![1]]).is_err());
        assert!(knuth_viennot_with(&m, &[vec![1, 0], vec![]]).is_err());
    }

    #[test]
    fn rsk_examples() {
        assert_eq!(
            rsk_transform(&ms("[1,2]+[2,3]")).unwrap(),
            seq(&["[1,2]+[2,3]"])
        );
        assert_eq!(
            rsk_transform(&ms("[1,1]+[1,2]")).unwrap(),
            seq(&["[1,2]", "[1,1]"])
        );
        assert_eq!(
            rsk_transform(&ms("[1,1]+[1,1]")).unwrap(),
            seq(&["[1,1]", "[1,1]"])
        );
        assert!(rsk_transform(&Multisegment::empty()).unwrap().is_empty());
    }

    #[test]
    fn widths() {
        assert_eq!(width(&ms("[1,1]+[1,1]")).unwrap(), 2);
        assert_eq!(width(&ms("[0,0]+[1,2]+[3,3]")).unwrap(), 1);
        assert_eq!(width(&ms("[1,1]+[1,2]")).unwrap(), 2);
        assert_eq!(width(&Multisegment::empty()).unwrap(), 0);
    }

    #[test]
    fn permissible_pairs() {
        assert!(is_permissible_pair(&ms("[1,2]"), &ms("[1,1]")).unwrap());
        assert!(!is_permissible_pair(&ms("[5,5]"), &ms("[1,1]")).unwrap());
        assert!(is_permissible_pair(&ms("[3,4]"), &Multisegment::empty()).unwrap());
        assert!(is_permissible_pair(&ms("[1,1]+[1,1]"), &ms("[0,0]")).is_err());
        // a two-element chain needs two ladder segments
        assert!(!is_permissible_pair(&ms("[1,3]"), &ms("[1,1]+[2,2]")).unwrap());
        assert!(is_permissible_pair(&ms("[1,1]+[2,2]"), &ms("[1,1]+[2,2]")).unwrap());
    }

    #[test]
    fn bitableaux() {
        let pq = bitableau_of(&ms("[1,1]+[1,2]")).unwrap();
        assert_eq!(pq.p().rows(), &[vec![1], vec![1]]);
        assert_eq!(pq.q().rows(), &[vec![3], vec![2]]);

        let pq = bitableau_of(&ms("[1,1]+[1,1]")).unwrap();
        assert_eq!(pq.p().rows(), &[vec![1], vec![1]]);
        assert_eq!(pq.q().rows(), &[vec![2], vec![2]]);

        let pq = bitableau_of(&ms("[1,2]+[2,3]")).unwrap();
        assert_eq!(pq.p().rows(), &[vec![2, 1]]);
        assert_eq!(pq.q().rows(), &[vec![4, 3]]);

        assert_eq!(bitableau_of(&Multisegment::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn ladder_sequence_validation() {
        assert!(LadderSequence::from_rsk(vec![ms("[1,1]"), ms("[1,1]+[2,2]")]).is_err());
        assert!(LadderSequence::from_rsk(vec![ms("[1,1]+[1,1]")]).is_err());
        assert!(LadderSequence::new(vec![ms("0"), ms("[1,1]")]).is_ok());
        assert_eq!(seq(&["[1,2]", "[1,1]"]).to_string(), "[1,2] ; [1,1]");
    }
}
