//! Multicharges, multipartitions and the dictionary to ladder multisegments.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::lattice::{DominantWeight, Weight};
use crate::multisegment::{Multisegment, Segment};
use crate::rsk::{rsk_transform, LadderSequence};
use crate::tableaux::{gamma_descriptor, Partition};

/// A weakly decreasing tuple of integer charges.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Multicharge {
    charges: Vec<i64>,
}

impl TryFrom<Vec<i64>> for Multicharge {
    type Error = Error;
    fn try_from(charges: Vec<i64>) -> Result<Self> {
        Self::new(charges)
    }
}

impl From<Multicharge> for Vec<i64> {
    fn from(k: Multicharge) -> Self {
        k.charges
    }
}

impl Multicharge {
    pub fn new(charges: Vec<i64>) -> Result<Self> {
        if charges.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadMulticharge(charges));
        }
        Ok(Self { charges })
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    /// `(-k_l, ..., -k_1)`.
    pub fn dagger(&self) -> Multicharge {
        Self {
            charges: self.charges.iter().rev().map(|k| -k).collect(),
        }
    }

    /// `L(k_1) + ... + L(k_l)`.
    pub fn dominant_weight(&self) -> DominantWeight {
        DominantWeight::from_pairs(self.charges.iter().map(|&k| (k, 1)))
            .expect("fundamental weights are dominant")
    }
}

impl FromStr for Multicharge {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let charges = s
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| ParseError::new(s, "charges must be comma-separated integers"))?;
        Multicharge::new(charges).map_err(|e| ParseError::new(s, e.to_string()))
    }
}

/// A tuple of partitions; empty components are allowed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Reversed order with every component conjugated.
    pub fn dagger(&self) -> Multipartition {
        Self {
            components: self
                .components
                .iter()
                .rev()
                .map(Partition::conjugate)
                .collect(),
        }
    }

    /// Componentwise first-column removal.
    pub fn derived(&self) -> Multipartition {
        Self {
            components: self.components.iter().map(Partition::derived).collect(),
        }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.components.iter().enumerate() {
            if n > 0 {
                write!(f, "|")?;
            }
            let parts: Vec<String> = p.parts().iter().map(usize::to_string).collect();
            write!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multipartition({self})")
    }
}

/// Components separated by `|`, parts by `,`: `"4,2,2,2,1|3,3,2,2|3,2"`.
impl FromStr for Multipartition {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        s.split('|')
            .map(|c| {
                c.parse::<Partition>()
                    .map_err(|e| ParseError::new(s, e.message))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Multipartition::new)
    }
}

fn check_level(kappa: &Multicharge, mp: &Multipartition) -> Result<()> {
    if kappa.level() != mp.level() {
        return Err(Error::LengthMismatch {
            left: kappa.level(),
            right: mp.level(),
        });
    }
    Ok(())
}

/// `sum over cells (i, j) of a(k + j - i)`.
pub fn content(k: i64, mu: &Partition) -> Weight {
    let mut w = Weight::zero();
    for (i, j) in mu.cells() {
        w.add_simple(k + j as i64 - i as i64, 1);
    }
    w
}

pub fn content_multi(kappa: &Multicharge, mp: &Multipartition) -> Result<Weight> {
    check_level(kappa, mp)?;
    Ok(kappa
        .charges
        .iter()
        .zip(&mp.components)
        .map(|(&k, mu)| content(k, mu))
        .sum())
}

/// `mu^i_(j + k_i - k_(i+1)) <= mu^(i+1)_j` for all `i < l` and `j >= 1`.
pub fn is_restricted(kappa: &Multicharge, mp: &Multipartition) -> Result<bool> {
    check_level(kappa, mp)?;
    let (k, mu) = (&kappa.charges, &mp.components);
    for i in 0..mu.len().saturating_sub(1) {
        let offset = (k[i] - k[i + 1]) as usize;
        for j in 1..=mu[i].len() {
            if mu[i].part(j + offset) > mu[i + 1].part(j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Restricted with `len(mu^i) - k_i` independent of `i`.
pub fn is_proper(kappa: &Multicharge, mp: &Multipartition) -> Result<bool> {
    if !is_restricted(kappa, mp)? {
        return Ok(false);
    }
    let mut offsets = kappa
        .charges
        .iter()
        .zip(&mp.components)
        .map(|(&k, mu)| mu.len() as i64 - k);
    Ok(match offsets.next() {
        Some(first) => offsets.all(|o| o == first),
        None => true,
    })
}

/// The proper restricted multipartition whose first-column removal is `mp`.
///
/// With `r = len(mu^l) - k_l`, every part of component `i` grows by one and
/// `r + k_i - len(mu^i)` parts equal to one are appended.
pub fn pad(kappa: &Multicharge, mp: &Multipartition) -> Result<Multipartition> {
    if !is_restricted(kappa, mp)? {
        return Err(Error::NotRestricted);
    }
    let Some(last) = mp.components.last() else {
        return Ok(mp.clone());
    };
    let r = last.len() as i64 - kappa.charges[kappa.level() - 1];
    let mut components = Vec::with_capacity(mp.level());
    for (&k, mu) in kappa.charges.iter().zip(&mp.components) {
        let ones = r + k - mu.len() as i64;
        if ones < 0 {
            return Err(Error::Counterexample(format!(
                "negative padding {ones} for component {mu} of restricted {mp}"
            )));
        }
        let mut parts: Vec<usize> = mu.parts().iter().map(|p| p + 1).collect();
        parts.extend(std::iter::repeat_n(1, ones as usize));
        components.push(Partition::new(parts)?);
    }
    let padded = Multipartition::new(components);
    if !is_proper(kappa, &padded)? || padded.derived() != *mp {
        return Err(Error::Counterexample(format!(
            "padding of {mp} gave {padded}"
        )));
    }
    Ok(padded)
}

/// `sum_i [k - mu_i + i, k + i - 1]`: a ladder of weight `cont(k, mu^T)`.
pub fn ladder_of_partition(k: i64, mu: &Partition) -> Multisegment {
    let m = Multisegment::new(mu.parts().iter().enumerate().map(|(idx, &p)| {
        let i = idx as i64 + 1;
        Segment::new(k - p as i64 + i, k + i - 1).expect("positive parts give nonempty segments")
    }));
    assert!(
        m.is_empty() || m.is_ladder(),
        "m({k}, {mu}) = {m} is not a ladder"
    );
    assert_eq!(
        m.wt(),
        content(k, &mu.conjugate()),
        "weight of m({k}, {mu})"
    );
    m
}

/// The ladders `m(-k_i, mu^i)` in component order, empty components kept.
pub fn component_ladders(kappa: &Multicharge, mp: &Multipartition) -> Result<Vec<Multisegment>> {
    check_level(kappa, mp)?;
    Ok(kappa
        .charges
        .iter()
        .zip(&mp.components)
        .map(|(&k, mu)| ladder_of_partition(-k, mu))
        .collect())
}

/// `m(-k_1, mu^1) + ... + m(-k_l, mu^l)`.
pub fn multiseg_of(kappa: &Multicharge, mp: &Multipartition) -> Result<Multisegment> {
    Ok(component_ladders(kappa, mp)?
        .iter()
        .fold(Multisegment::empty(), |acc, l| acc.sum(l)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpechtRskReport {
    pub multisegment: Multisegment,
    pub padded: Multipartition,
    /// `n = m^+ + points(gamma)`, the multisegment of the padded input.
    pub antiderivative: Multisegment,
    pub gamma: Weight,
    pub rsk_of_antiderivative: LadderSequence,
    /// Entrywise derivative of the RSK transform of `n`, aligned with the
    /// components; empty components appear as gaps.
    pub ladders: LadderSequence,
    /// Grading shift of the derived RSK descriptor of `n`, if `n` is nonempty.
    pub derived_shift: Option<i64>,
    pub proper_case: bool,
}

fn fail(what: String) -> Error {
    Error::Counterexample(what)
}

/// Runs the multipartition-to-RSK dictionary on a restricted input and
/// checks every identity along the way.
pub fn specht_rsk_verify(kappa: &Multicharge, mp: &Multipartition) -> Result<SpechtRskReport> {
    if !is_restricted(kappa, mp)? {
        return Err(Error::NotRestricted);
    }
    let proper_case = is_proper(kappa, mp)?;
    let m = multiseg_of(kappa, mp)?;
    let expected = component_ladders(kappa, mp)?;

    if proper_case {
        let rsk = rsk_transform(&m)?;
        let want = LadderSequence::new(expected.clone())?.without_gaps();
        if rsk != want {
            return Err(fail(format!(
                "proper {mp}: RSK({m}) = {rsk}, expected {want}"
            )));
        }
    }

    let padded = pad(kappa, mp)?;
    let n = multiseg_of(kappa, &padded)?;
    let padded_ladders = LadderSequence::new(component_ladders(kappa, &padded)?)?;
    // Component lengths of a proper multipartition weakly decrease, so empty
    // components can only trail.
    let live = padded_ladders
        .ladders()
        .iter()
        .take_while(|l| !l.is_empty())
        .count();
    if padded_ladders.ladders()[live..]
        .iter()
        .any(|l| !l.is_empty())
    {
        return Err(fail(format!(
            "padded {padded} has an empty component before a nonempty one"
        )));
    }
    let rsk_n = rsk_transform(&n)?;
    if rsk_n != padded_ladders.without_gaps() {
        return Err(fail(format!(
            "padded {padded}: RSK({n}) = {rsk_n}, expected {}",
            padded_ladders.without_gaps()
        )));
    }

    if n.derive() != m {
        return Err(fail(format!("derivative of {n} is not {m}")));
    }
    let points = n
        .checked_sub(&m.extend())
        .ok_or_else(|| fail(format!("{} is not contained in {n}", m.extend())))?;
    if !points.iter().all(|s| s.is_point()) {
        return Err(fail(format!(
            "{n} - {} = {points} is not a sum of points",
            m.extend()
        )));
    }
    let gamma = points.wt();

    let mut derived = rsk_n.derive().ladders().to_vec();
    derived.resize(mp.level(), Multisegment::empty());
    let ladders = LadderSequence::new(derived)?;
    if ladders.ladders() != expected.as_slice() {
        return Err(fail(format!(
            "derived RSK of {n} is {ladders}, expected {}",
            LadderSequence::new(expected)?
        )));
    }

    let derived_shift = if n.is_empty() {
        None
    } else {
        let g = gamma_descriptor(&n, true)?;
        let mut aligned = g.ladders.ladders().to_vec();
        aligned.resize(mp.level(), Multisegment::empty());
        if aligned != ladders.ladders() {
            return Err(fail(format!(
                "derived descriptor of {n} has ladders {}",
                g.ladders
            )));
        }
        Some(g.shift)
    };

    Ok(SpechtRskReport {
        multisegment: m,
        padded,
        antiderivative: n,
        gamma,
        rsk_of_antiderivative: rsk_n,
        ladders,
        derived_shift,
        proper_case,
    })
}

/// First-column removal on the multipartition side matches the derivative
/// on the multisegment side, and preserves restrictedness.
pub fn column_removal_check(kappa: &Multicharge, mp: &Multipartition) -> Result<bool> {
    if !is_restricted(kappa, mp)? {
        return Err(Error::NotRestricted);
    }
    let removed = mp.derived();
    Ok(is_restricted(kappa, &removed)?
        && multiseg_of(kappa, mp)?.derive() == multiseg_of(kappa, &removed)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kc(v: &[i64]) -> Multicharge {
        Multicharge::new(v.to_vec()).unwrap()
    }

    fn mpart(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    #[test]
    fn multicharges() {
        assert!(Multicharge::new(vec![0, 1]).is_err());
        let k = kc(&[2, 1, -1]);
        assert_eq!(k.dagger().charges(), &[1, -1, -2]);
        assert_eq!(k.dominant_weight().level(), 3);
        assert_eq!("2,1,-1".parse::<Multicharge>().unwrap(), k);
    }

    #[test]
    fn contents() {
        let w = Weight::from_pairs([(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(content(0, &part("2,1")), w);
        assert_eq!(content(7, &part("1")), Weight::simple(7));
        assert_eq!(content(0, &Partition::empty()), Weight::zero());
        assert!(content_multi(&kc(&[0]), &mpart("1|1")).is_err());
        assert_eq!(
            content_multi(&kc(&[1, 0]), &mpart("1|1")).unwrap(),
            Weight::from_pairs([(0, 1), (1, 1)])
        );
    }

    #[test]
    fn classification_of_level_three_examples() {
        let k = kc(&[2, 1, -1]);
        let mu = mpart("4,2,2,2,1|3,3,2,2|3,2");
        assert!(is_restricted(&k, &mu).unwrap());
        assert!(is_proper(&k, &mu).unwrap());
        let nu = mpart("4,3,2|3,3,2|3,1");
        assert!(is_restricted(&k, &nu).unwrap());
        assert!(!is_proper(&k, &nu).unwrap());
        assert!(is_restricted(&kc(&[0]), &mpart("3,1")).unwrap());
        assert!(is_proper(&kc(&[0]), &mpart("3,1")).unwrap());
        assert!(!is_restricted(&kc(&[0, 0]), &mpart("2|1")).unwrap());
        assert!(is_restricted(&kc(&[0]), &mpart("3,1|1")).is_err());
    }

    #[test]
    fn padding() {
        assert_eq!(
            pad(&kc(&[1, 0]), &mpart("2|2,1")).unwrap(),
            mpart("3,1,1|3,2")
        );
        assert_eq!(pad(&kc(&[0]), &mpart("1")).unwrap(), mpart("2"));
        let k = kc(&[2, 1, -1]);
        let mu = mpart("4,2,2,2,1|3,3,2,2|3,2");
        assert_eq!(pad(&k, &mu).unwrap(), mpart("5,3,3,3,2|4,4,3,3|4,3"));
        assert_eq!(pad(&kc(&[0, 0]), &mpart("2|1")), Err(Error::NotRestricted));
    }

    #[test]
    fn partition_ladders() {
        assert_eq!(ladder_of_partition(0, &part("2,1")), ms("[-1,0]+[1,1]"));
        assert_eq!(ladder_of_partition(5, &part("1")), ms("[5,5]"));
        assert_eq!(
            ladder_of_partition(0, &part("2,1")).derive(),
            ladder_of_partition(0, &part("1"))
        );
        assert_eq!(
            ladder_of_partition(3, &Partition::empty()),
            Multisegment::empty()
        );
    }

    #[test]
    fn multisegments_of_multipartitions() {
        assert_eq!(
            multiseg_of(&kc(&[1, 0]), &mpart("2|2,1")).unwrap(),
            ms("[-2,-1]+[-1,0]+[1,1]")
        );
        assert_eq!(multiseg_of(&kc(&[0]), &mpart("1")).unwrap(), ms("[0,0]"));
        assert_eq!(
            multiseg_of(&kc(&[4]), &mpart("")).unwrap(),
            Multisegment::empty()
        );
    }

    #[test]
    fn dictionary_on_a_single_box() {
        let r = specht_rsk_verify(&kc(&[0]), &mpart("1")).unwrap();
        assert_eq!(r.multisegment, ms("[0,0]"));
        assert_eq!(r.padded, mpart("2"));
        assert_eq!(r.antiderivative, ms("[-1,0]"));
        assert_eq!(r.gamma, Weight::zero());
        assert_eq!(r.rsk_of_antiderivative.ladders(), &[ms("[-1,0]")]);
        assert_eq!(r.ladders.ladders(), &[ms("[0,0]")]);
        assert!(r.proper_case);
    }

    #[test]
    fn dictionary_with_padding() {
        let r = specht_rsk_verify(&kc(&[1, 0]), &mpart("2|2,1")).unwrap();
        // n = m(-1,(3,1,1)) + m(0,(3,2)); the two padded ones give points
        assert_eq!(r.antiderivative, ms("[-3,-1]+[0,0]+[1,1]+[-2,0]+[0,1]"));
        assert_eq!(r.gamma, Weight::from_pairs([(0, 1), (1, 1)]));
        assert_eq!(r.ladders.ladders(), &[ms("[-2,-1]"), ms("[-1,0]+[1,1]")]);
        assert!(!r.proper_case);
        assert_eq!(
            specht_rsk_verify(&kc(&[0, 0]), &mpart("2|1")),
            Err(Error::NotRestricted)
        );
    }

    #[test]
    fn column_removal() {
        assert!(column_removal_check(&kc(&[0]), &mpart("2,1")).unwrap());
        assert!(column_removal_check(&kc(&[1, 0]), &mpart("1,1|1")).unwrap());
        let k = kc(&[2, 1, -1]);
        assert!(column_removal_check(&k, &mpart("4,2,2,2,1|3,3,2,2|3,2")).unwrap());
        assert!(column_removal_check(&k, &mpart("4,3,2|3,3,2|3,1")).unwrap());
    }

    #[test]
    fn multipartition_text() {
        let mp = mpart("2,1||3");
        assert_eq!(mp.level(), 3);
        assert!(mp.components()[1].is_empty());
        assert_eq!(mp.to_string(), "2,1||3");
        assert_eq!(mp.size(), 6);
        assert_eq!(mp.dagger(), mpart("1,1,1||2,1"));
        assert!("2,x".parse::<Multipartition>().is_err());
        assert!("1,2".parse::<Multipartition>().is_err());
    }
}
