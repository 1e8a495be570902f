//! Height-bounded multisets over the ground set `{0, .., n-1}`.
//!
//! Labels are zero-based everywhere in the Rust API. The JSON form and the
//! `Display` impl use one-based labels, matching the usual `c/i` notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A multiset over `n` labels whose counts never exceed `height`.
///
/// The count mapping is total: an absent label simply has count zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mset {
    height: u32,
    counts: Vec<u32>,
}

impl Mset {
    pub fn new(height: u32, counts: Vec<u32>) -> Result<Self> {
        if let Some((label, &count)) = counts.iter().enumerate().find(|(_, &c)| c > height) {
            return Err(Error::CountOutOfRange {
                label: label + 1,
                count,
                height,
            });
        }
        Ok(Mset { height, counts })
    }

    /// The empty mset (all counts zero).
    pub fn empty(n: usize, height: u32) -> Self {
        Mset {
            height,
            counts: vec![0; n],
        }
    }

    /// The regular mset: every label at full height.
    pub fn regular(n: usize, height: u32) -> Self {
        Mset {
            height,
            counts: vec![height; n],
        }
    }

    /// Builds an mset from `(count, label)` pairs with zero-based labels.
    pub fn from_pairs(n: usize, height: u32, pairs: &[(u32, usize)]) -> Result<Self> {
        let mut counts = vec![0; n];
        for &(count, label) in pairs {
            if label >= n {
                return Err(Error::LabelOutOfRange {
                    label: label + 1,
                    n,
                });
            }
            counts[label] = count;
        }
        Mset::new(height, counts)
    }

    pub(crate) fn from_counts_unchecked(height: u32, counts: Vec<u32>) -> Self {
        debug_assert!(counts.iter().all(|&c| c <= height));
        Mset { height, counts }
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn count(&self, label: usize) -> u32 {
        self.counts[label]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// `p/a ∈ M` in the usual membership sense: `count(a) >= p`.
    pub fn contains(&self, p: u32, label: usize) -> bool {
        p >= 1 && self.counts.get(label).is_some_and(|&c| c >= p)
    }

    pub fn cardinality(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Labels with a positive count, ascending.
    pub fn root_set(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn root_size(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// True when every label in the root set carries the full height.
    pub fn is_full_count(&self) -> bool {
        self.counts.iter().all(|&c| c == 0 || c == self.height)
    }

    fn check_shape(&self, other: &Mset) -> Result<()> {
        if self.n() != other.n() || self.height != other.height {
            return Err(Error::ShapeMismatch(format!(
                "msets over ({}, h={}) and ({}, h={})",
                self.n(),
                self.height,
                other.n(),
                other.height
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Mset, f: impl Fn(u32, u32) -> u32) -> Result<Mset> {
        self.check_shape(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Mset {
            height: self.height,
            counts,
        })
    }

    pub fn is_submset(&self, other: &Mset) -> Result<bool> {
        self.check_shape(other)?;
        Ok(self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b))
    }

    pub fn union(&self, other: &Mset) -> Result<Mset> {
        self.zip_with(other, u32::max)
    }

    pub fn intersection(&self, other: &Mset) -> Result<Mset> {
        self.zip_with(other, u32::min)
    }

    /// Pointwise sum, capped at the height.
    pub fn sum(&self, other: &Mset) -> Result<Mset> {
        let h = self.height;
        self.zip_with(other, |a, b| (a + b).min(h))
    }

    /// Pointwise truncated difference `max(a - b, 0)`.
    pub fn difference(&self, other: &Mset) -> Result<Mset> {
        self.zip_with(other, u32::saturating_sub)
    }

    pub fn complement(&self) -> Mset {
        Mset {
            height: self.height,
            counts: self.counts.iter().map(|&c| self.height - c).collect(),
        }
    }
}

impl fmt::Display for Mset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (i, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{}/{}", c, i + 1)?;
        }
        f.write_str("}")
    }
}

/// JSON form: `{"n": .., "h": .., "counts": {"<label>": count}}`, one-based
/// labels, zero counts omitted.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MsetJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<u32>,
    pub counts: std::collections::BTreeMap<String, u32>,
}

impl From<&Mset> for MsetJson {
    fn from(m: &Mset) -> Self {
        let counts = m
            .counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| ((i + 1).to_string(), c))
            .collect();
        MsetJson {
            n: Some(m.n()),
            h: Some(m.height),
            counts,
        }
    }
}

impl MsetJson {
    /// Resolves into an [`Mset`], filling `n` and `h` from the defaults when
    /// they are absent and rejecting them when they disagree.
    pub fn into_mset(self, default_n: Option<usize>, default_h: Option<u32>) -> Result<Mset> {
        let n = resolve("n", self.n, default_n)?;
        let h = resolve("h", self.h, default_h)?;
        let mut counts = vec![0; n];
        for (key, count) in self.counts {
            let label: usize = key
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("label {key:?} is not a positive integer")))?;
            if label == 0 || label > n {
                return Err(Error::LabelOutOfRange { label, n });
            }
            counts[label - 1] = count;
        }
        Mset::new(h, counts)
    }
}

fn resolve<T: PartialEq + fmt::Display + Copy>(
    name: &str,
    given: Option<T>,
    default: Option<T>,
) -> Result<T> {
    match (given, default) {
        (Some(g), Some(d)) if g != d => Err(Error::ShapeMismatch(format!(
            "mset field {name} = {g} disagrees with the context value {d}"
        ))),
        (Some(g), _) => Ok(g),
        (None, Some(d)) => Ok(d),
        (None, None) => Err(Error::Parse(format!("mset is missing field {name:?}"))),
    }
}

impl Serialize for Mset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MsetJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MsetJson::deserialize(d)?
            .into_mset(None, None)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(h: u32, c: &[u32]) -> Mset {
        Mset::new(h, c.to_vec()).unwrap()
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(Mset::regular(3, 5).cardinality(), 15);
        assert_eq!(Mset::empty(4, 3).cardinality(), 0);
        assert_eq!(m(2, &[2, 0, 1]).cardinality(), 3);
    }

    #[test]
    fn root_sets() {
        assert_eq!(m(5, &[0, 2, 5]).root_set(), vec![1, 2]);
        assert!(Mset::empty(3, 5).root_set().is_empty());
        assert_eq!(Mset::regular(4, 2).root_set(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn submset_examples() {
        let big = m(5, &[0, 2, 5]);
        assert!(m(5, &[0, 1, 0]).is_submset(&big).unwrap());
        assert!(!m(5, &[0, 3, 0]).is_submset(&big).unwrap());
        assert!(big.is_submset(&big).unwrap());
        assert!(matches!(
            m(4, &[0, 1, 0]).is_submset(&big),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(Mset::empty(2, 5).is_submset(&big).is_err());
    }

    #[test]
    fn pointwise_operations() {
        assert_eq!(m(2, &[2]).sum(&m(2, &[1])).unwrap(), m(2, &[2]));
        assert_eq!(m(5, &[0, 2, 5]).complement(), m(5, &[5, 3, 0]));
        assert_eq!(
            m(2, &[2, 1]).difference(&m(2, &[1, 1])).unwrap(),
            m(2, &[1, 0])
        );
        assert_eq!(m(3, &[1, 3]).union(&m(3, &[2, 0])).unwrap(), m(3, &[2, 3]));
        assert_eq!(
            m(3, &[1, 3]).intersection(&m(3, &[2, 0])).unwrap(),
            m(3, &[1, 0])
        );
    }

    #[test]
    fn membership_and_display() {
        let x = m(5, &[0, 2, 5]);
        assert!(x.contains(2, 1) && x.contains(1, 1) && !x.contains(3, 1));
        assert!(!x.contains(0, 0));
        assert_eq!(x.to_string(), "{2/2, 5/3}");
        assert!(Mset::new(2, vec![3]).is_err());
    }

    #[test]
    fn json_omits_zero_counts() {
        let x = m(5, &[0, 2, 5]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":3,"h":5,"counts":{"2":2,"3":5}}"#);
        let back: Mset = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let partial: MsetJson = serde_json::from_str(r#"{"counts":{"2":2,"3":5}}"#).unwrap();
        assert_eq!(partial.clone().into_mset(Some(3), Some(5)).unwrap(), x);
        assert!(partial.clone().into_mset(None, Some(5)).is_err());
        assert!(partial.into_mset(Some(2), Some(5)).is_err());
    }

    fn arb_pair() -> impl Strategy<Value = (Mset, Mset, Mset)> {
        (1usize..6, 1u32..6).prop_flat_map(|(n, h)| {
            let v = proptest::collection::vec(0..=h, n);
            (v.clone(), v.clone(), v).prop_map(move |(a, b, c)| {
                (
                    Mset::new(h, a).unwrap(),
                    Mset::new(h, b).unwrap(),
                    Mset::new(h, c).unwrap(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn inclusion_exclusion((a, b, _c) in arb_pair()) {
            let lhs = a.intersection(&b).unwrap().cardinality() + a.union(&b).unwrap().cardinality();
            prop_assert_eq!(lhs, a.cardinality() + b.cardinality());
        }

        #[test]
        fn complement_is_involution((a, _b, _c) in arb_pair()) {
            prop_assert_eq!(a.complement().complement(), a);
        }

        #[test]
        fn submset_is_partial_order((a, b, c) in arb_pair()) {
            prop_assert!(a.is_submset(&a).unwrap());
            if a.is_submset(&b).unwrap() && b.is_submset(&a).unwrap() {
                prop_assert_eq!(&a, &b);
            }
            if a.is_submset(&b).unwrap() && b.is_submset(&c).unwrap() {
                prop_assert!(a.is_submset(&c).unwrap());
            }
        }

        #[test]
        fn sum_stays_within_height((a, b, _c) in arb_pair()) {
            let s = a.sum(&b).unwrap();
            prop_assert!(s.counts().iter().all(|&x| x <= a.height()));
        }
    }
}
