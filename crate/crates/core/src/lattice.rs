//! Type-A root lattice arithmetic.
//!
//! Weights are finitely supported integer combinations of simple roots
//! `a(i)`, stored sparsely with no zero coefficients so that structural
//! equality is lattice equality. Dominant weights and Laurent polynomials in
//! `q` follow the same storage rule.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;

#[inline]
pub(crate) fn add_exact(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("integer overflow in lattice arithmetic")
}

#[inline]
pub(crate) fn mul_exact(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("integer overflow in lattice arithmetic")
}

fn insert_sparse(map: &mut BTreeMap<i64, i64>, key: i64, delta: i64) {
    if delta == 0 {
        return;
    }
    let entry = map.entry(key).or_insert(0);
    *entry = add_exact(*entry, delta);
    if *entry == 0 {
        map.remove(&key);
    }
}

/// An element of the root lattice: `sum_i c_i * a(i)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coeffs: BTreeMap<i64, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The simple root `a(i)`.
    pub fn simple(i: i64) -> Self {
        let mut w = Self::zero();
        w.add_simple(i, 1);
        w
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut w = Self::zero();
        for (i, c) in pairs {
            w.add_simple(i, c);
        }
        w
    }

    /// Adds `c * a(i)` in place.
    pub fn add_simple(&mut self, i: i64, c: i64) {
        insert_sparse(&mut self.coeffs, i, c);
    }

    pub fn coeff(&self, i: i64) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero coefficients in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Membership in the positive cone `Q_+`.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Sum of coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.values().fold(0, |acc, &c| add_exact(acc, c))
    }

    /// Cone order: `self <= other` iff `other - self` is positive.
    pub fn leq(&self, other: &Weight) -> bool {
        (other - self).is_positive()
    }

    /// The involution `a(i) -> a(-i)`.
    pub fn dagger(&self) -> Weight {
        Weight::from_pairs(self.iter().map(|(i, c)| (-i, c)))
    }

    /// True iff the support lies in `[-n, n]`.
    pub fn in_subcone(&self, n: i64) -> bool {
        self.coeffs.keys().all(|&i| -n <= i && i <= n)
    }

    pub fn support_min(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn support_max(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::from_pairs(self.iter().map(|(i, c)| (i, mul_exact(c, k))))
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += &rhs;
        self
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (i, c) in rhs.iter() {
            self.add_simple(i, c);
        }
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        let mut out = self.clone();
        for (i, c) in rhs.iter() {
            out.add_simple(i, c.checked_neg().expect("integer overflow"));
        }
        out
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl std::iter::Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |acc, w| acc + w)
    }
}

fn write_combination(
    f: &mut fmt::Formatter<'_>,
    terms: &BTreeMap<i64, i64>,
    sym: &str,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (n, (&i, &c)) in terms.iter().enumerate() {
        let sign = if c < 0 {
            "-"
        } else if n > 0 {
            "+"
        } else {
            ""
        };
        write!(f, "{sign}")?;
        let abs = c.unsigned_abs();
        if abs != 1 {
            write!(f, "{abs}*")?;
        }
        write!(f, "{sym}({i})")?;
    }
    Ok(())
}

/// Parses `"2*a(1)+a(3)-a(-2)"`; `"0"` is the zero element.
fn parse_combination(s: &str, sym: &str) -> Result<BTreeMap<i64, i64>, ParseError> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = BTreeMap::new();
    if text == "0" {
        return Ok(out);
    }
    if text.is_empty() {
        return Err(ParseError::new(s, "empty weight"));
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        } else if pos > 0 {
            return Err(ParseError::new(s, "expected '+' or '-' between terms"));
        }
        let rest = &text[pos..];
        let head = format!("{sym}(");
        let (coeff, after) = match rest.find('*') {
            Some(star) if !rest[..star].contains('(') => {
                let c: i64 = rest[..star]
                    .parse()
                    .map_err(|_| ParseError::new(s, "bad coefficient"))?;
                (c, &rest[star + 1..])
            }
            _ => (1, rest),
        };
        if !after.starts_with(&head) {
            return Err(ParseError::new(s, format!("expected '{head}'")));
        }
        let close = after
            .find(')')
            .ok_or_else(|| ParseError::new(s, "unclosed parenthesis"))?;
        let index: i64 = after[head.len()..close]
            .parse()
            .map_err(|_| ParseError::new(s, "bad index"))?;
        insert_sparse(&mut out, index, mul_exact(sign, coeff));
        pos = text.len() - (after.len() - close - 1);
    }
    Ok(out)
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.coeffs, "a")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

impl FromStr for Weight {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_combination(s, "a").map(|coeffs| Weight { coeffs })
    }
}

fn serialize_int_map<S: Serializer>(
    map: &BTreeMap<i64, i64>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    let mut m = serializer.serialize_map(Some(map.len()))?;
    for (k, v) in map {
        m.serialize_entry(&k.to_string(), v)?;
    }
    m.end()
}

struct IntMapVisitor;

impl<'de> Visitor<'de> for IntMapVisitor {
    type Value = BTreeMap<i64, i64>;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "an object with integer-string keys and integer values")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
        let mut out = BTreeMap::new();
        while let Some((k, v)) = access.next_entry::<String, i64>()? {
            let key: i64 = k
                .parse()
                .map_err(|_| de::Error::custom(format!("bad key {k:?}")))?;
            insert_sparse(&mut out, key, v);
        }
        Ok(out)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_int_map(&self.coeffs, serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer
            .deserialize_map(IntMapVisitor)
            .map(|coeffs| Weight { coeffs })
    }
}

/// `(a(i), a(j)) = 2, -1, 0` for `|i - j| = 0, 1, >1`, extended bilinearly.
pub fn cartan_form(b1: &Weight, b2: &Weight) -> i64 {
    let mut total = 0;
    for (i, c) in b1.iter() {
        let pairing = 2 * b2.coeff(i) - b2.coeff(i - 1) - b2.coeff(i + 1);
        total = add_exact(total, mul_exact(c, pairing));
    }
    total
}

/// The non-symmetric form with `(a(i), a(i))_l = 1`, `(a(i), a(i+1))_l = -1`
/// and zero otherwise.
pub fn ell_form(b1: &Weight, b2: &Weight) -> i64 {
    let mut total = 0;
    for (i, c) in b1.iter() {
        let pairing = b2.coeff(i) - b2.coeff(i + 1);
        total = add_exact(total, mul_exact(c, pairing));
    }
    total
}

/// A dominant integral weight `sum_i c_i * L(i)` with `c_i >= 0`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    coeffs: BTreeMap<i64, i64>,
}

impl DominantWeight {
    pub fn fundamental(i: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, 1);
        Self { coeffs }
    }

    /// Returns `None` if any coefficient is negative.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Option<Self> {
        let mut coeffs = BTreeMap::new();
        for (i, c) in pairs {
            insert_sparse(&mut coeffs, i, c);
        }
        coeffs.values().all(|&c| c >= 0).then_some(Self { coeffs })
    }

    pub fn coeff(&self, i: i64) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn level(&self) -> i64 {
        self.coeffs.values().fold(0, |acc, &c| add_exact(acc, c))
    }

    pub fn dagger(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&i, &c)| (-i, c)).collect(),
        }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.coeffs, "L")
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DominantWeight({self})")
    }
}

/// A Laurent polynomial in `q` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        let mut p = Self::zero();
        insert_sparse(&mut p.terms, k, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            insert_sparse(&mut p.terms, k, c);
        }
        p
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (add_exact(e, k), c))
                .collect(),
        }
    }

    pub fn eval_at_1(&self) -> i64 {
        self.terms.values().fold(0, |acc, &c| add_exact(acc, c))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            insert_sparse(&mut out.terms, k, c);
        }
        out
    }
}

impl std::ops::Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in rhs.terms() {
                insert_sparse(&mut out.terms, add_exact(k1, k2), mul_exact(c1, c2));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&k, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            let abs = c.unsigned_abs();
            write!(f, "{sign}")?;
            match (abs, k) {
                (_, 0) => write!(f, "{abs}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "q^{k}")?,
                (_, 1) => write!(f, "{abs}*q")?,
                _ => write!(f, "{abs}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_int_map(&self.terms, serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer
            .deserialize_map(IntMapVisitor)
            .map(|terms| LaurentPoly { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(i: i64) -> Weight {
        Weight::simple(i)
    }

    #[test]
    fn cartan_table() {
        assert_eq!(cartan_form(&a(0), &a(0)), 2);
        assert_eq!(cartan_form(&a(0), &a(1)), -1);
        assert_eq!(cartan_form(&a(0), &a(5)), 0);
    }

    #[test]
    fn ell_table() {
        assert_eq!(ell_form(&a(1), &a(1)), 1);
        assert_eq!(ell_form(&a(1), &a(2)), -1);
        assert_eq!(ell_form(&a(2), &a(1)), 0);
    }

    #[test]
    fn weight_ops() {
        let w: Weight = "a(1)+2*a(2)".parse().unwrap();
        assert_eq!(w.height(), 3);
        assert!(a(1).leq(&(&a(1) + &a(2))));
        assert!(!a(1).leq(&a(2)));
        assert_eq!((&a(1) + &a(3)).dagger(), &a(-1) + &a(-3));
        assert!(w.in_subcone(2));
        assert!(!w.in_subcone(1));
    }

    #[test]
    fn weight_text_round_trip() {
        let w: Weight = "2*a(1)+a(3)".parse().unwrap();
        assert_eq!(w, Weight::from_pairs([(1, 2), (3, 1)]));
        assert_eq!(w.to_string(), "2*a(1)+a(3)");
        let neg: Weight = "-a(-2) + 3*a(0)".parse().unwrap();
        assert_eq!(neg.to_string(), "-a(-2)+3*a(0)");
        assert_eq!("0".parse::<Weight>().unwrap(), Weight::zero());
        assert!("a(1".parse::<Weight>().is_err());
        assert!("a(1)a(2)".parse::<Weight>().is_err());
        assert!("".parse::<Weight>().is_err());
    }

    #[test]
    fn weight_json() {
        let w = Weight::from_pairs([(-1, 1), (2, 3)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"-1":1,"2":3}"#);
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), w);
        assert!(serde_json::from_str::<Weight>(r#"{"x":1}"#).is_err());
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let w = &a(1) - &a(1);
        assert!(w.is_zero());
        assert_eq!(w, Weight::zero());
        let p = &LaurentPoly::monomial(1, 1) + &LaurentPoly::one();
        let q = &p + &LaurentPoly::monomial(-1, 0);
        assert_eq!(q, LaurentPoly::monomial(1, 1));
    }

    #[test]
    fn laurent_ops() {
        assert_eq!(LaurentPoly::one().shift(-2), LaurentPoly::monomial(1, -2));
        assert_eq!(LaurentPoly::from_terms([(2, 1), (1, 2)]).eval_at_1(), 3);
        let p = LaurentPoly::from_terms([(1, 1), (0, 1)]);
        assert_eq!((&p * &p).to_string(), "1+2*q+q^2");
        assert_eq!(LaurentPoly::monomial(-1, -1).to_string(), "-q^-1");
    }

    #[test]
    fn dominant_weight_level_and_dagger() {
        let l = DominantWeight::from_pairs([(2, 1), (1, 1), (-1, 1)]).unwrap();
        assert_eq!(l.level(), 3);
        assert_eq!(l.dagger().coeff(1), 1);
        assert_eq!(l.dagger().coeff(-2), 1);
        assert!(DominantWeight::from_pairs([(0, -1)]).is_none());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_detected() {
        let w = Weight::from_pairs([(0, i64::MAX)]);
        let _ = &w + &Weight::simple(0);
    }

    fn small_weight() -> impl Strategy<Value = Weight> {
        prop::collection::vec((-4i64..=4, -3i64..=3), 0..5).prop_map(Weight::from_pairs)
    }

    proptest! {
        #[test]
        fn cartan_is_symmetric(b1 in small_weight(), b2 in small_weight()) {
            prop_assert_eq!(cartan_form(&b1, &b2), cartan_form(&b2, &b1));
        }

        #[test]
        fn ell_form_polarizes_to_cartan(b1 in small_weight(), b2 in small_weight()) {
            prop_assert_eq!(ell_form(&b1, &b2) + ell_form(&b2, &b1), cartan_form(&b1, &b2));
        }

        #[test]
        fn dagger_is_an_isometric_involution(b1 in small_weight(), b2 in small_weight()) {
            prop_assert_eq!(b1.dagger().dagger(), b1.clone());
            prop_assert_eq!(b1.dagger().height(), b1.height());
            prop_assert_eq!(cartan_form(&b1.dagger(), &b2.dagger()), cartan_form(&b1, &b2));
        }

        #[test]
        fn weight_text_parses_back(b in small_weight()) {
            prop_assert_eq!(b.to_string().parse::<Weight>().unwrap(), b);
        }
    }
}
