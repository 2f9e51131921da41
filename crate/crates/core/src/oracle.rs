//! Brute-force reference implementations.
//!
//! Everything here is deliberately naive and shares no code paths with the
//! main algorithms beyond the basic data types.

use crate::error::{Error, Result};
use crate::multisegment::{Multisegment, Segment};
use crate::rsk::{depth_function, knuth_viennot_with};
use crate::specht::{Multicharge, Multipartition};
use crate::tableaux::Partition;

/// Occurrence limit for [`brute_permissible`].
pub const BRUTE_PERMISSIBLE_LIMIT: usize = 8;
/// Occurrence limit for [`kv_choice_independence`].
pub const KV_CHOICE_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub support_min: i64,
    pub support_max: i64,
    pub max_segments: usize,
}

impl EnumerationBounds {
    pub fn new(support_min: i64, support_max: i64, max_segments: usize) -> Result<Self> {
        if support_min > support_max {
            return Err(Error::Precondition(format!(
                "empty support [{support_min}, {support_max}]"
            )));
        }
        Ok(Self {
            support_min,
            support_max,
            max_segments,
        })
    }

    /// Segments inside the support, in ascending order.
    pub fn segments(&self) -> Vec<Segment> {
        let mut segs: Vec<Segment> = (self.support_min..=self.support_max)
            .flat_map(|b| (b..=self.support_max).map(move |e| Segment::new(b, e).unwrap()))
            .collect();
        segs.sort();
        segs
    }
}

/// Every multiset of at most `max_segments` segments within the support,
/// each exactly once, by size and then lexicographically in the segment
/// indices.
pub fn enumerate_multisegments(b: EnumerationBounds) -> MultisegmentEnumeration {
    MultisegmentEnumeration {
        segments: b.segments(),
        max: b.max_segments,
        current: Some(Vec::new()),
    }
}

pub struct MultisegmentEnumeration {
    segments: Vec<Segment>,
    max: usize,
    /// Weakly increasing indices into `segments`.
    current: Option<Vec<usize>>,
}

impl MultisegmentEnumeration {
    fn advance(&self, idx: &[usize]) -> Option<Vec<usize>> {
        let n = self.segments.len();
        let mut next = idx.to_vec();
        // Rightmost position that can still grow.
        for pos in (0..next.len()).rev() {
            if next[pos] + 1 < n {
                let v = next[pos] + 1;
                for slot in &mut next[pos..] {
                    *slot = v;
                }
                return Some(next);
            }
        }
        let size = idx.len() + 1;
        (size <= self.max && n > 0).then(|| vec![0; size])
    }
}

impl Iterator for MultisegmentEnumeration {
    type Item = Multisegment;

    fn next(&mut self) -> Option<Multisegment> {
        let idx = self.current.take()?;
        self.current = self.advance(&idx);
        Some(Multisegment::new(idx.iter().map(|&i| self.segments[i])))
    }
}

/// Occurrence count minus a maximum matching on the strict comparability
/// graph `x << y`.
pub fn dilworth_width(m: &Multisegment) -> usize {
    let segs = m.segments();
    let n = segs.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| segs[x].precedes(&segs[y])).collect())
        .collect();
    let mut matched_to: Vec<Option<usize>> = vec![None; n];

    fn augment(
        x: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        matched_to: &mut [Option<usize>],
    ) -> bool {
        for &y in &adj[x] {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            if matched_to[y].is_none_or(|x2| augment(x2, adj, seen, matched_to)) {
                matched_to[y] = Some(x);
                return true;
            }
        }
        false
    }

    let mut matching = 0;
    for x in 0..n {
        let mut seen = vec![false; n];
        if augment(x, &adj, &mut seen, &mut matched_to) {
            matching += 1;
        }
    }
    n - matching
}

/// Exhaustive permissibility: every `<<`-chain of `m` (not only maximal
/// ones) against every injective increasing map into the ladder.
pub fn brute_permissible(l: &Multisegment, m: &Multisegment) -> Result<bool> {
    if !l.is_ladder() {
        return Err(Error::NotALadder(l.to_string()));
    }
    if m.len() > BRUTE_PERMISSIBLE_LIMIT {
        return Err(Error::SizeGuard {
            size: m.len(),
            limit: BRUTE_PERMISSIBLE_LIMIT,
        });
    }
    // Both indexed top-down: index 1 is the <<-largest.
    let ladder: Vec<Segment> = l.segments().iter().rev().copied().collect();
    let segs = m.segments();
    let n = segs.len();
    for mask in 1u32..(1 << n) {
        let mut chain: Vec<Segment> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| segs[i])
            .collect();
        chain.sort();
        if !chain.windows(2).all(|w| w[0].precedes(&w[1])) {
            continue;
        }
        chain.reverse();
        if !some_increasing_map(&chain, &ladder) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn some_increasing_map(chain: &[Segment], ladder: &[Segment]) -> bool {
    let mut phi: Vec<usize> = Vec::with_capacity(chain.len());
    fn search(t: usize, chain: &[Segment], ladder: &[Segment], phi: &mut Vec<usize>) -> bool {
        if t == chain.len() {
            return true;
        }
        let start = phi.last().map_or(0, |&p| p + 1);
        for j in start..ladder.len() {
            let e = chain[t].end();
            if ladder[j].begin() <= e && e <= ladder[j].end() {
                phi.push(j);
                if search(t + 1, chain, ladder, phi) {
                    return true;
                }
                phi.pop();
            }
        }
        false
    }
    search(0, chain, ladder, &mut phi)
}

/// `|mu|! / product of hook lengths`.
pub fn hook_length_count(mu: &Partition) -> u128 {
    let conj = mu.conjugate();
    let mut numerator: u128 = (1..=mu.size() as u128).product();
    let mut denominator: u128 = 1;
    for (i, j) in mu.cells() {
        let arm = mu.part(i) - j;
        let leg = conj.part(j) - i;
        denominator *= (arm + leg + 1) as u128;
        let g = gcd(numerator, denominator);
        numerator /= g;
        denominator /= g;
    }
    numerator / denominator
}

/// `a(mu)` by counting, for every cell, twice the cells strictly below it
/// in the same column.
pub fn a_invariant_by_cells(mu: &Partition) -> i64 {
    let cells: Vec<(usize, usize)> = mu.cells().collect();
    cells
        .iter()
        .map(|&(i, j)| 2 * cells.iter().filter(|&&(i2, j2)| j2 == j && i2 > i).count() as i64)
        .sum()
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Runs one Knuth-Viennot step under every valid enumeration of every depth
/// class and checks that the output never changes.
pub fn kv_choice_independence(m: &Multisegment) -> Result<bool> {
    if m.len() > KV_CHOICE_LIMIT {
        return Err(Error::SizeGuard {
            size: m.len(),
            limit: KV_CHOICE_LIMIT,
        });
    }
    if m.is_empty() {
        return Ok(true);
    }
    let table = depth_function(m)?;
    let segs = m.segments();
    let options: Vec<Vec<Vec<usize>>> = (0..=table.max_depth)
        .map(|k| {
            let members: Vec<usize> = (0..segs.len())
                .filter(|&i| table.depth_of(i) == k)
                .collect();
            permutations(&members)
                .into_iter()
                .filter(|p| {
                    p.windows(2).all(|w| {
                        segs[w[0]].begin() <= segs[w[1]].begin()
                            && segs[w[0]].end() >= segs[w[1]].end()
                    })
                })
                .collect()
        })
        .collect();

    let mut first = None;
    let mut choice = vec![0usize; options.len()];
    loop {
        let classes: Vec<Vec<usize>> = choice
            .iter()
            .zip(&options)
            .map(|(&c, o)| o[c].clone())
            .collect();
        let out = knuth_viennot_with(m, &classes)?;
        match &first {
            None => first = Some(out),
            Some(f) if *f != out => return Ok(false),
            Some(_) => {}
        }
        // Odometer over the per-class choices.
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(true);
            }
            choice[pos] += 1;
            if choice[pos] < options[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Weakly decreasing charge tuples of the given level with entries in
/// `[min, max]`.
pub fn enumerate_multicharges(level: usize, min: i64, max: i64) -> Vec<Multicharge> {
    fn rec(level: usize, min: i64, top: i64, prefix: &mut Vec<i64>, out: &mut Vec<Multicharge>) {
        if prefix.len() == level {
            out.push(Multicharge::new(prefix.clone()).unwrap());
            return;
        }
        for k in (min..=top).rev() {
            prefix.push(k);
            rec(level, min, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(level, min, max, &mut Vec::new(), &mut out);
    out
}

/// All multipartitions of the given level and total size at most `max_size`.
pub fn enumerate_multipartitions(level: usize, max_size: usize) -> Vec<Multipartition> {
    let by_size: Vec<Vec<Partition>> = (0..=max_size).map(Partition::all_of_size).collect();
    fn rec(
        level: usize,
        budget: usize,
        by_size: &[Vec<Partition>],
        prefix: &mut Vec<Partition>,
        out: &mut Vec<Multipartition>,
    ) {
        if prefix.len() == level {
            out.push(Multipartition::new(prefix.clone()));
            return;
        }
        for (size, parts) in by_size.iter().enumerate().take(budget + 1) {
            for p in parts {
                prefix.push(p.clone());
                rec(level, budget - size, by_size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(level, max_size, &by_size, &mut Vec::new(), &mut out);
    out
}
