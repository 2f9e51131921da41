//! Partitions, inverted semistandard bitableaux and standard tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::multisegment::{Multisegment, Segment};
use crate::rsk::{bitableau_of, LadderSequence};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; any other violation is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("{parts:?} is not a partition")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Removes the first column: every part drops by one.
    pub fn derived(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|&&p| p > 1)
                .map(|p| p - 1)
                .collect(),
        }
    }

    /// `sum_j c_j (c_j - 1)` over the conjugate parts `c_j`.
    pub fn a_invariant(&self) -> i64 {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| (c as i64) * (c as i64 - 1))
            .sum()
    }

    /// Cells `(row, column)`, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, p) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Comma-separated parts, e.g. `"4,2,2"`; an empty string is the empty
/// partition.
impl FromStr for Partition {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| ParseError::new(s, "parts must be non-negative integers"))?;
        Partition::new(parts).map_err(|e| ParseError::new(s, e.to_string()))
    }
}

/// A tableau whose rows strictly decrease and whose columns weakly decrease.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct InvertedSsyt {
    rows: Vec<Vec<i64>>,
}

impl InvertedSsyt {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::ShapeViolation("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::ShapeViolation("row lengths increase".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::ShapeViolation(format!(
                    "row {} is not strictly descending",
                    i + 1
                )));
            }
        }
        for (i, pair) in rows.windows(2).enumerate().map(|(i, w)| (i + 1, w)) {
            for (j, (above, below)) in pair[0].iter().zip(&pair[1]).enumerate() {
                if above < below {
                    return Err(Error::ShapeViolation(format!(
                        "column {} ascends between rows {} and {}",
                        j + 1,
                        i,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    /// Adds one to every entry.
    pub fn increment(&self) -> InvertedSsyt {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c + 1).collect())
                .collect(),
        }
    }
}

impl fmt::Debug for InvertedSsyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InvertedSsyt{:?}", self.rows)
    }
}

impl<'de> Deserialize<'de> for InvertedSsyt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        InvertedSsyt::new(rows).map_err(serde::de::Error::custom)
    }
}

/// A pair `(P, Q)` of inverted semistandard tableaux of the same shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct BitableauPair {
    #[serde(rename = "P")]
    p: InvertedSsyt,
    #[serde(rename = "Q")]
    q: InvertedSsyt,
}

#[derive(Deserialize)]
struct RawPair {
    #[serde(rename = "P")]
    p: InvertedSsyt,
    #[serde(rename = "Q")]
    q: InvertedSsyt,
}

impl TryFrom<RawPair> for BitableauPair {
    type Error = Error;
    fn try_from(raw: RawPair) -> Result<Self> {
        Self::new(raw.p, raw.q)
    }
}

impl BitableauPair {
    pub fn new(p: InvertedSsyt, q: InvertedSsyt) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::ShapeMismatch);
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> &InvertedSsyt {
        &self.p
    }

    pub fn q(&self) -> &InvertedSsyt {
        &self.q
    }

    pub fn shape(&self) -> Partition {
        self.p.shape()
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, i64, i64)> + '_ {
        self.p
            .rows
            .iter()
            .zip(&self.q.rows)
            .enumerate()
            .flat_map(|(i, (pr, qr))| {
                pr.iter()
                    .zip(qr)
                    .enumerate()
                    .map(move |(j, (&c, &d))| (i, j, c, d))
            })
    }

    /// `c <= d` entrywise.
    pub fn is_admissible(&self) -> bool {
        self.entries().all(|(_, _, c, d)| c <= d)
    }

    /// `c + 1 <= d` entrywise, i.e. `(P', Q)` is admissible.
    pub fn is_permissible(&self) -> bool {
        self.entries().all(|(_, _, c, d)| c < d)
    }

    /// `(P', Q)`.
    pub fn increment_p(&self) -> BitableauPair {
        Self {
            p: self.p.increment(),
            q: self.q.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairChecks {
    pub admissible: bool,
    pub permissible: bool,
}

pub fn pair_checks(pq: &BitableauPair) -> PairChecks {
    PairChecks {
        admissible: pq.is_admissible(),
        permissible: pq.is_permissible(),
    }
}

pub fn increment(p: &InvertedSsyt) -> InvertedSsyt {
    p.increment()
}

/// Row `i` becomes `sum_j [c_ij, d_ij - 1]`, with `c = d` entries dropped.
/// Rows that vanish entirely are kept as empty entries.
pub fn ladders_of(pq: &BitableauPair) -> Result<LadderSequence> {
    if let Some((i, j, _, _)) = pq.entries().find(|&(_, _, c, d)| c > d) {
        return Err(Error::NotAdmissiblePair {
            row: i + 1,
            col: j + 1,
        });
    }
    let ladders =
        pq.p.rows
            .iter()
            .zip(&pq.q.rows)
            .map(|(pr, qr)| {
                Multisegment::new(
                    pr.iter()
                        .zip(qr)
                        .filter_map(|(&c, &d)| Segment::new(c, d - 1)),
                )
            })
            .collect();
    LadderSequence::new(ladders)
}

/// Number of pairs of cells `(i, j)`, `(i', j')` with `i < i'` and
/// `c_ij = d_i'j'`: a begin in a higher row meeting `end + 1` in a lower row.
pub fn c_count(pq: &BitableauPair) -> usize {
    let (p, q) = (&pq.p.rows, &pq.q.rows);
    let mut count = 0;
    for i in 0..p.len() {
        for &c in &p[i] {
            for lower in &q[i + 1..] {
                count += lower.iter().filter(|&&d| d == c).count();
            }
        }
    }
    count
}

/// Ladder data and grading shift of the RSK-standard module of `m`
/// (`derived = false`) or its derived variant (`derived = true`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDescriptor {
    /// Empty entries are gaps left by rows that vanished.
    pub ladders: LadderSequence,
    pub shift: i64,
    pub shape: Partition,
    pub a_invariant: i64,
    pub c_count: usize,
}

pub fn gamma_descriptor(m: &Multisegment, derived: bool) -> Result<GammaDescriptor> {
    let pq = bitableau_of(m)?;
    if !pq.is_permissible() {
        return Err(Error::NotPermissible(format!("bitableau of {m}")));
    }
    let pair = if derived { pq.increment_p() } else { pq };
    let shape = pair.shape();
    let a = shape.a_invariant();
    let c = c_count(&pair);
    Ok(GammaDescriptor {
        ladders: ladders_of(&pair)?,
        shift: a - c as i64,
        a_invariant: a,
        c_count: c,
        shape,
    })
}

/// A standard filling `T`; `cells[i - 1] = T(i) = (row, column)`, 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct StandardTableau {
    cells: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Rows of the filling, each listing the values `i` in column order.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (i, &(a, b)) in self.cells.iter().enumerate() {
            if rows.len() < a {
                rows.resize(a, Vec::new());
            }
            let row = &mut rows[a - 1];
            if row.len() < b {
                row.resize(b, 0);
            }
            row[b - 1] = i + 1;
        }
        rows
    }
}

/// All standard fillings of `shape`, ordered lexicographically by the cell
/// sequence `(T(1), T(2), ...)`.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn go(
        shape: &[usize],
        filled: &mut Vec<usize>,
        cells: &mut Vec<(usize, usize)>,
        out: &mut Vec<StandardTableau>,
    ) {
        if cells.len() == shape.iter().sum::<usize>() {
            out.push(StandardTableau {
                cells: cells.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let can_grow = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if can_grow {
                filled[r] += 1;
                cells.push((r + 1, filled[r]));
                go(shape, filled, cells, out);
                cells.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(
        shape.parts(),
        &mut vec![0; shape.len()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// `nu_i = k - a_i + b_i` where `T(i) = (a_i, b_i)`.
pub fn residue_sequence(k: i64, t: &StandardTableau) -> Vec<i64> {
    t.cells
        .iter()
        .map(|&(a, b)| k - a as i64 + b as i64)
        .collect()
}
