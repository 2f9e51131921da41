//! Segments `[b, e]` of consecutive simple-root indices and finite multisets
//! of them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::lattice::Weight;

/// A segment `[begin, end]` with `begin <= end`.
///
/// The derived `Ord` is the right-lexicographic order: ends decide, begins
/// break ties.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    end: i64,
    begin: i64,
}

#[allow(clippy::len_without_is_empty)]
impl Segment {
    /// `None` when `begin > end`; this covers the zero segment `[k, k-1]`.
    pub fn new(begin: i64, end: i64) -> Option<Self> {
        (begin <= end).then_some(Self { end, begin })
    }

    /// The point segment `[i, i]`.
    pub fn point(i: i64) -> Self {
        Self { end: i, begin: i }
    }

    pub fn begin(&self) -> i64 {
        self.begin
    }

    pub fn end(&self) -> i64 {
        self.end
    }

    pub fn len(&self) -> i64 {
        self.end - self.begin + 1
    }

    pub fn is_point(&self) -> bool {
        self.begin == self.end
    }

    /// Lexicographic order: begins decide, ends break ties.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        (self.begin, self.end).cmp(&(other.begin, other.end))
    }

    /// Right-lexicographic order (the canonical storage order).
    pub fn cmp_rlex(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    /// The strict partial order `<<`: both endpoints strictly smaller.
    pub fn precedes(&self, other: &Self) -> bool {
        self.begin < other.begin && self.end < other.end
    }

    /// `[b+1, e]`, or `None` for a point segment.
    pub fn derive(&self) -> Option<Self> {
        Self::new(self.begin + 1, self.end)
    }

    /// `[b-1, e]`.
    pub fn extend(&self) -> Self {
        Self {
            end: self.end,
            begin: self.begin - 1,
        }
    }

    /// `[-e, -b]`.
    pub fn dagger(&self) -> Self {
        Self {
            end: -self.begin,
            begin: -self.end,
        }
    }

    /// `[b+1, e+1]`.
    pub fn shift_right(&self) -> Self {
        Self {
            end: self.end + 1,
            begin: self.begin + 1,
        }
    }

    pub fn wt(&self) -> Weight {
        Weight::from_pairs((self.begin..=self.end).map(|i| (i, 1)))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.begin, self.end)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite multiset of segments, kept sorted in right-lexicographic order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = Segment>>(segments: I) -> Self {
        let mut segments: Vec<Segment> = segments.into_iter().collect();
        segments.sort_unstable();
        Self { segments }
    }

    /// Builds from `(begin, end)` pairs, dropping zero segments `[k, k-1]`.
    ///
    /// Returns `None` if some pair has `begin > end + 1`.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Option<Self> {
        let mut segs = Vec::new();
        for (b, e) in pairs {
            match Segment::new(b, e) {
                Some(s) => segs.push(s),
                None if b == e + 1 => {}
                None => return None,
            }
        }
        Some(Self::new(segs))
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn iter(&self) -> impl Iterator<Item = &Segment> + '_ {
        self.segments.iter()
    }

    /// Cardinality counted with multiplicity.
    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn count(&self, seg: &Segment) -> usize {
        self.segments.iter().filter(|s| *s == seg).count()
    }

    pub fn sum(&self, other: &Multisegment) -> Multisegment {
        Self::new(self.segments.iter().chain(other.segments.iter()).copied())
    }

    /// Multiset difference `self - other`; `None` unless `other <= self`.
    pub fn checked_sub(&self, other: &Multisegment) -> Option<Multisegment> {
        let mut rest = self.segments.clone();
        for s in &other.segments {
            let pos = rest.iter().position(|r| r == s)?;
            rest.remove(pos);
        }
        Some(Self { segments: rest })
    }

    /// The segments beginning at `j`.
    pub fn beginning_at(&self, j: i64) -> Multisegment {
        Self {
            segments: self
                .segments
                .iter()
                .filter(|s| s.begin == j)
                .copied()
                .collect(),
        }
    }

    /// `sum of a(b) + ... + a(e)` over all segments.
    pub fn wt(&self) -> Weight {
        let mut w = Weight::zero();
        for s in &self.segments {
            for i in s.begin..=s.end {
                w.add_simple(i, 1);
            }
        }
        w
    }

    /// The begin weight `sum of a(b(segment))`.
    pub fn b_invariant(&self) -> Weight {
        let mut w = Weight::zero();
        for s in &self.segments {
            w.add_simple(s.begin, 1);
        }
        w
    }

    /// Shrinks every segment from the left; point segments vanish.
    pub fn derive(&self) -> Multisegment {
        Self::new(self.segments.iter().filter_map(Segment::derive))
    }

    /// Extends every segment one step to the left.
    pub fn extend(&self) -> Multisegment {
        Self::new(self.segments.iter().map(Segment::extend))
    }

    pub fn dagger(&self) -> Multisegment {
        Self::new(self.segments.iter().map(Segment::dagger))
    }

    pub fn shift_right(&self) -> Multisegment {
        Self::new(self.segments.iter().map(Segment::shift_right))
    }

    /// True iff the segments form a nonempty chain under `<<`.
    pub fn is_ladder(&self) -> bool {
        !self.segments.is_empty() && self.segments.windows(2).all(|w| w[0].precedes(&w[1]))
    }

    pub fn has_point_segments(&self) -> bool {
        self.segments.iter().any(Segment::is_point)
    }

    /// Smallest begin and largest end, or `None` when empty.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = self.segments.iter().map(|s| s.begin).min()?;
        let hi = self.segments.iter().map(|s| s.end).max()?;
        Some((lo, hi))
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Self::new(iter)
    }
}

/// `sum of c_i copies of [i, i]` for a positive weight `sum c_i a(i)`.
pub fn point_multisegment(g: &Weight) -> Result<Multisegment> {
    if !g.is_positive() {
        return Err(Error::NegativeWeight(g.to_string()));
    }
    Ok(Multisegment::new(g.iter().flat_map(|(i, c)| {
        std::iter::repeat_n(Segment::point(i), c as usize)
    })))
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            return write!(f, "0");
        }
        for (n, s) in self.segments.iter().enumerate() {
            if n > 0 {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multisegment({self})")
    }
}

impl FromStr for Segment {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| ParseError::new(s, "segment must look like [b,e]"))?;
        let (b, e) = inner
            .split_once(',')
            .ok_or_else(|| ParseError::new(s, "segment must look like [b,e]"))?;
        let b: i64 = b
            .trim()
            .parse()
            .map_err(|_| ParseError::new(s, "bad begin"))?;
        let e: i64 = e
            .trim()
            .parse()
            .map_err(|_| ParseError::new(s, "bad end"))?;
        Segment::new(b, e).ok_or_else(|| ParseError::new(s, format!("begin {b} exceeds end {e}")))
    }
}

/// Grammar: `"[b,e]+[b,e]+..."`, with `"0"` for the empty multisegment.
impl FromStr for Multisegment {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let t = s.trim();
        if t == "0" {
            return Ok(Self::empty());
        }
        if t.is_empty() {
            return Err(ParseError::new(
                s,
                "empty input; use \"0\" for the empty multisegment",
            ));
        }
        t.split('+')
            .map(|tok| {
                tok.parse::<Segment>()
                    .map_err(|e| ParseError::new(s, e.message))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.begin, self.end].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Segment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [b, e] = <[i64; 2]>::deserialize(deserializer)?;
        Segment::new(b, e)
            .ok_or_else(|| serde::de::Error::custom(format!("begin {b} exceeds end {e}")))
    }
}

impl Serialize for Multisegment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.segments.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multisegment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<Segment>::deserialize(deserializer).map(Multisegment::new)
    }
}
