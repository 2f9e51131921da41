//! String data for derivative operators.
//!
//! This module covers admissible index sequences and the monoid of string
//! vectors with its non-symmetric form. It provides the grading-shift
//! constants produced when derivatives pass through products, and the
//! begin-weight string attached to a BZ sequence `(T, T-1, ..., -T)`. The
//! BZ derivative is realized combinatorially as a sweep of single-index
//! derivatives, and graded multiplicity tables are transported along it.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{add_exact, cartan_form, ell_form, mul_exact, LaurentPoly, Weight};
use crate::multisegment::Multisegment;

/// Index sequence with no two equal neighbours.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct AdmissibleSequence {
    indices: Vec<i64>,
}

impl AdmissibleSequence {
    pub fn new(indices: Vec<i64>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotAdmissible(indices));
        }
        Ok(Self { indices })
    }

    /// `(T, T-1, ..., -T)`.
    pub fn bz(t: i64) -> Result<Self> {
        if t <= 0 {
            return Err(Error::NonPositiveBound(t));
        }
        Ok(Self {
            indices: (-t..=t).rev().collect(),
        })
    }

    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// An element of the additive monoid of non-negative integer vectors,
/// compared lexicographically from the left.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct StringVector {
    coords: Vec<u64>,
}

impl StringVector {
    pub fn new(coords: Vec<u64>) -> Self {
        Self { coords }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            coords: vec![0; len],
        }
    }

    /// The `r`-th standard generator (0-based).
    pub fn unit(len: usize, r: usize) -> Self {
        let mut v = Self::zeros(len);
        v.coords[r] = 1;
        v
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn checked_add(&self, other: &StringVector) -> Result<StringVector> {
        check_len(self.len(), other.len())?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

fn check_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

fn as_i64(x: u64) -> i64 {
    i64::try_from(x).expect("string coordinate exceeds i64")
}

/// `sum_r a_r * a(i_r)`.
pub fn beta_of(i: &AdmissibleSequence, a: &StringVector) -> Result<Weight> {
    check_len(i.len(), a.len())?;
    Ok(Weight::from_pairs(
        i.indices
            .iter()
            .zip(&a.coords)
            .map(|(&idx, &c)| (idx, as_i64(c))),
    ))
}

/// Bilinear form on string vectors with `(e_r, e_r) = 1`,
/// `(e_r, e_u) = (a(i_r), a(i_u))` for `r > u` and `0` for `r < u`.
pub fn string_form(i: &AdmissibleSequence, a1: &StringVector, a2: &StringVector) -> Result<i64> {
    check_len(i.len(), a1.len())?;
    check_len(i.len(), a2.len())?;
    let idx = &i.indices;
    let mut total = 0;
    for (r, &x) in a1.coords.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let mut pairing = as_i64(a2.coords[r]);
        for (u, &y) in a2.coords[..r].iter().enumerate() {
            let g = cartan_form(&Weight::simple(idx[r]), &Weight::simple(idx[u]));
            pairing = add_exact(pairing, mul_exact(g, as_i64(y)));
        }
        total = add_exact(total, mul_exact(as_i64(x), pairing));
    }
    Ok(total)
}

/// Shift constant for string decompositions of a product:
/// `sum_{j<k} ((a_j, a_k)_i - (beta_k, beta(i, a_j)))`.
pub fn phi_weights(
    i: &AdmissibleSequence,
    strings: &[StringVector],
    betas: &[Weight],
) -> Result<i64> {
    check_len(strings.len(), betas.len())?;
    let images = strings
        .iter()
        .map(|a| beta_of(i, a))
        .collect::<Result<Vec<_>>>()?;
    for (img, beta) in images.iter().zip(betas) {
        if !img.leq(beta) {
            return Err(Error::Precondition(format!(
                "string weight {img} exceeds {beta}"
            )));
        }
    }
    let mut total = 0;
    for j in 0..strings.len() {
        for k in j + 1..strings.len() {
            let term =
                string_form(i, &strings[j], &strings[k])? - cartan_form(&betas[k], &images[j]);
            total = add_exact(total, term);
        }
    }
    Ok(total)
}

/// Number of ordered pairs `(s1 in n1, s2 in n2)` with `b(s1) = e(s2) + 1`.
pub fn c_pair(n1: &Multisegment, n2: &Multisegment) -> usize {
    n1.iter()
        .map(|s1| n2.iter().filter(|s2| s1.begin() == s2.end() + 1).count())
        .sum()
}

/// `sum_{j<k} C(m_j, m_k)`.
pub fn c_tuple(ms: &[Multisegment]) -> usize {
    pairs(ms).map(|(x, y)| c_pair(x, y)).sum()
}

/// `sum_{j<k} C(shift_right(m_j), m_k)`.
pub fn c_prime_tuple(ms: &[Multisegment]) -> usize {
    pairs(ms).map(|(x, y)| c_pair(&x.shift_right(), y)).sum()
}

fn pairs(ms: &[Multisegment]) -> impl Iterator<Item = (&Multisegment, &Multisegment)> {
    ms.iter()
        .enumerate()
        .flat_map(move |(j, x)| ms[j + 1..].iter().map(move |y| (x, y)))
}

/// `sum_{j<k} ((b(m_j), b(m_k))_l - (b(m_j), wt(m_k)))`.
pub fn phi_multiseg(ms: &[Multisegment]) -> i64 {
    phi_multiseg_with(ms, ell_form)
}

/// [`phi_multiseg`] with the non-symmetric form supplied by the caller.
pub fn phi_multiseg_with(ms: &[Multisegment], ell: impl Fn(&Weight, &Weight) -> i64) -> i64 {
    let bs: Vec<Weight> = ms.iter().map(Multisegment::b_invariant).collect();
    let ws: Vec<Weight> = ms.iter().map(Multisegment::wt).collect();
    let mut total = 0;
    for j in 0..ms.len() {
        for k in j + 1..ms.len() {
            total = add_exact(total, ell(&bs[j], &bs[k]) - cartan_form(&bs[j], &ws[k]));
        }
    }
    total
}

fn check_support(m: &Multisegment, t: i64) -> Result<()> {
    if t <= 0 {
        return Err(Error::NonPositiveBound(t));
    }
    let w = m.wt();
    if !w.in_subcone(t) {
        return Err(Error::SupportOutOfRange {
            weight: w.to_string(),
            bound: t,
        });
    }
    Ok(())
}

/// The BZ sequence for `T` and the string vector whose weight is the begin
/// weight of `m`.
pub fn bz_string(m: &Multisegment, t: i64) -> Result<(AdmissibleSequence, StringVector)> {
    check_support(m, t)?;
    let seq = AdmissibleSequence::bz(t)?;
    let b = m.b_invariant();
    let coords = seq.indices.iter().map(|&i| b.coeff(i) as u64).collect();
    Ok((seq, StringVector::new(coords)))
}

/// `m - m_j + m_j'` where `m_j` collects the segments beginning at `j`.
/// Requires that no segment begins at `j + 1`.
pub fn single_derivative(m: &Multisegment, j: i64) -> Result<Multisegment> {
    if let Some(s) = m.iter().find(|s| s.begin() == j + 1) {
        return Err(Error::BeginOccupied {
            segment: s.to_string(),
            begin: j + 1,
        });
    }
    Ok(Multisegment::new(m.iter().filter_map(|s| {
        if s.begin() == j {
            s.derive()
        } else {
            Some(*s)
        }
    })))
}

/// Sweeps [`single_derivative`] over `j = T, T-1, ..., -T`.
pub fn bz_derivative(m: &Multisegment, t: i64) -> Result<Multisegment> {
    check_support(m, t)?;
    let mut current = m.clone();
    for j in (-t..=t).rev() {
        current = single_derivative(&current, j)?;
    }
    let expected = m.derive();
    if current != expected {
        return Err(Error::Counterexample(format!(
            "BZ sweep of {m} gave {current}, expected {expected}"
        )));
    }
    Ok(current)
}

/// Graded multiplicities keyed by multisegment, all keys of one weight.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct MultiplicityTable {
    rows: BTreeMap<Multisegment, LaurentPoly>,
}

impl MultiplicityTable {
    pub fn new(rows: BTreeMap<Multisegment, LaurentPoly>) -> Result<Self> {
        let mut weights = rows.keys().map(Multisegment::wt);
        if let Some(first) = weights.next() {
            if let Some(other) = weights.find(|w| *w != first) {
                return Err(Error::WeightMismatch(format!("{first} vs {other}")));
            }
        }
        if let Some((k, p)) = rows.iter().find(|(_, p)| !p.has_nonnegative_coeffs()) {
            return Err(Error::Precondition(format!(
                "multiplicity of {k} has a negative coefficient: {p}"
            )));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &BTreeMap<Multisegment, LaurentPoly> {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, key: &Multisegment) -> Option<&LaurentPoly> {
        self.rows.get(key)
    }

    /// Common weight of the keys, `None` for an empty table.
    pub fn weight(&self) -> Option<Weight> {
        self.rows.keys().next().map(Multisegment::wt)
    }
}

#[derive(Serialize, Deserialize)]
struct TableRow {
    key: String,
    poly: LaurentPoly,
}

/// JSON: `[{"key": "<multisegment>", "poly": {"exp": coeff}}, ...]`.
impl Serialize for MultiplicityTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows
            .iter()
            .map(|(k, p)| TableRow {
                key: k.to_string(),
                poly: p.clone(),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiplicityTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows = Vec::<TableRow>::deserialize(d)?;
        let mut map = BTreeMap::new();
        for row in rows {
            let key: Multisegment = row.key.parse().map_err(D::Error::custom)?;
            if map.insert(key, row.poly).is_some() {
                return Err(D::Error::custom(format!("duplicate key {}", row.key)));
            }
        }
        MultiplicityTable::new(map).map_err(D::Error::custom)
    }
}

impl fmt::Display for MultiplicityTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in &self.rows {
            writeln!(f, "{k}\t{p}")?;
        }
        Ok(())
    }
}

/// Transports multiplicities of a product of simples along the BZ
/// derivative: keys whose begin weight is the total begin weight of `ms`
/// survive, are re-keyed by their derivative and shifted by `q^(-Phi)`.
pub fn transfer_multiplicities(
    table: &MultiplicityTable,
    ms: &[Multisegment],
) -> Result<MultiplicityTable> {
    let total_wt: Weight = ms.iter().map(Multisegment::wt).sum();
    if let Some(bad) = table.rows.keys().find(|n| n.wt() != total_wt) {
        return Err(Error::WeightMismatch(format!(
            "key {bad} has weight {}, product has {total_wt}",
            bad.wt()
        )));
    }
    let total_b: Weight = ms.iter().map(Multisegment::b_invariant).sum();
    let shift = -phi_multiseg(ms);
    let mut rows = BTreeMap::new();
    for (n, p) in &table.rows {
        if n.b_invariant() != total_b {
            continue;
        }
        let key = n.derive();
        if rows.insert(key.clone(), p.shift(shift)).is_some() {
            return Err(Error::KeyCollision(key.to_string()));
        }
    }
    MultiplicityTable::new(rows)
}
