//! Pomsets on the regular mset of height `h`, represented by the partial
//! order they induce on the labels, and their ideals.
//!
//! An mset `I` is an ideal when its root set is downward closed and every
//! root element lying strictly below another root element has full count.
//! Partial counts can therefore only appear at elements that are maximal
//! within `I*`.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mset::{Mset, MsetJson};

/// Largest supported ground set; orders are stored as `u64` bitmasks.
pub const MAX_LABELS: usize = 64;

/// A strict partial order on `{0, .., n-1}` together with the height of the
/// underlying regular mset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pomset {
    height: u32,
    /// `below[a]` has bit `b` set iff `b < a`.
    below: Vec<u64>,
    /// `above[a]` has bit `b` set iff `a < b`.
    above: Vec<u64>,
}

fn check_shape(n: usize, height: u32) -> Result<()> {
    if n == 0 || n > MAX_LABELS {
        return Err(Error::InvalidConfig(format!(
            "pomset needs between 1 and {MAX_LABELS} labels, got {n}"
        )));
    }
    if height == 0 {
        return Err(Error::InvalidConfig(
            "pomset height must be positive".into(),
        ));
    }
    Ok(())
}

impl Pomset {
    pub fn antichain(n: usize, height: u32) -> Result<Self> {
        Self::from_relations(n, height, &[])
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize, height: u32) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relations(n, height, &pairs)
    }

    /// Builds the transitive closure of the pairs `(a, b)` meaning `a < b`.
    pub fn from_relations(n: usize, height: u32, pairs: &[(usize, usize)]) -> Result<Self> {
        check_shape(n, height)?;
        let mut below = vec![0u64; n];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::LabelOutOfRange { label: x + 1, n });
                }
            }
            below[b] |= 1 << a;
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            let down_k = below[k];
            for row in below.iter_mut() {
                if *row & (1 << k) != 0 {
                    *row |= down_k;
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| below[a] & (1 << a) != 0) {
            return Err(Error::Cycle(a + 1));
        }
        let mut above = vec![0u64; n];
        for (a, &row) in below.iter().enumerate() {
            for b in bits(row) {
                above[b] |= 1 << a;
            }
        }
        Ok(Pomset {
            height,
            below,
            above,
        })
    }

    pub fn n(&self) -> usize {
        self.below.len()
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// `a < b` in the order.
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        self.below[b] & (1 << a) != 0
    }

    /// Bitmask of labels strictly below `a`.
    pub fn below_mask(&self, a: usize) -> u64 {
        self.below[a]
    }

    /// Bitmask of labels strictly above `a`.
    pub fn above_mask(&self, a: usize) -> u64 {
        self.above[a]
    }

    /// Every comparable pair `(a, b)` with `a < b`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|b| bits(self.below[b]).map(move |a| (a, b)))
            .collect()
    }

    /// Cover relations of the Hasse diagram.
    pub fn covering_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| self.above[a] & self.below[b] == 0)
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n()).all(|a| (self.below[a] | self.above[a]).count_ones() as usize == self.n() - 1)
    }

    pub fn is_antichain(&self) -> bool {
        self.below.iter().all(|&r| r == 0)
    }

    /// Same mset, reversed order.
    pub fn dual(&self) -> Pomset {
        Pomset {
            height: self.height,
            below: self.above.clone(),
            above: self.below.clone(),
        }
    }

    pub fn regular_mset(&self) -> Mset {
        Mset::regular(self.n(), self.height)
    }

    fn check_mset(&self, m: &Mset) -> Result<()> {
        if m.n() != self.n() || m.height() != self.height {
            return Err(Error::ShapeMismatch(format!(
                "mset over ({}, h={}) used with pomset over ({}, h={})",
                m.n(),
                m.height(),
                self.n(),
                self.height
            )));
        }
        Ok(())
    }

    /// Checks the ideal predicate without allocating an [`Ideal`].
    pub fn is_ideal(&self, m: &Mset) -> bool {
        m.n() == self.n()
            && m.height() == self.height
            && (0..self.n())
                .all(|a| m.count(a) == 0 || bits(self.below[a]).all(|b| m.count(b) == self.height))
    }

    pub fn ideal(&self, m: Mset) -> Result<Ideal> {
        self.check_mset(&m)?;
        for a in m.root_set() {
            if let Some(b) = bits(self.below[a]).find(|&b| m.count(b) != self.height) {
                return Err(Error::NotAnIdeal(format!(
                    "{m}: label {} lies below root label {} but has count {} < {}",
                    b + 1,
                    a + 1,
                    m.count(b),
                    self.height
                )));
            }
        }
        Ok(Ideal(m))
    }

    pub fn empty_ideal(&self) -> Ideal {
        Ideal(Mset::empty(self.n(), self.height))
    }

    pub fn full_ideal(&self) -> Ideal {
        Ideal(self.regular_mset())
    }

    /// Smallest ideal containing `s`: each root label keeps its count and
    /// everything strictly below it is raised to full count.
    pub fn generated_ideal(&self, s: &Mset) -> Result<Ideal> {
        self.check_mset(s)?;
        let mut counts = s.counts().to_vec();
        for a in s.root_set() {
            for b in bits(self.below[a]) {
                counts[b] = self.height;
            }
        }
        Ok(Ideal(Mset::from_counts_unchecked(self.height, counts)))
    }

    /// Cardinality of the ideal generated by the mset with these counts.
    /// Allocation-free hot path for weight computations.
    pub(crate) fn closure_cardinality(&self, counts: &[u32]) -> u32 {
        let mut support = 0u64;
        for (i, &c) in counts.iter().enumerate() {
            if c > 0 {
                support |= 1 << i;
            }
        }
        counts
            .iter()
            .enumerate()
            .map(|(a, &c)| {
                if self.above[a] & support != 0 {
                    self.height
                } else {
                    c
                }
            })
            .sum()
    }

    /// Down-closure of the label set `mask`, as a mask.
    pub fn down_closure(&self, mask: u64) -> u64 {
        bits(mask).fold(mask, |acc, a| acc | self.below[a])
    }

    /// Root elements of `m` not lying below another root element.
    pub fn maximal_elements(&self, m: &Mset) -> Vec<usize> {
        let roots = m.root_set();
        let mask = roots.iter().fold(0u64, |acc, &a| acc | 1 << a);
        roots
            .into_iter()
            .filter(|&a| self.above[a] & mask == 0)
            .collect()
    }

    /// All ideals passing `filter`, in lexicographic order of the count
    /// vector (label 0 most significant).
    pub fn enumerate_ideals(&self, filter: &IdealFilter) -> Vec<Ideal> {
        let mut out = Vec::new();
        let mut counts = vec![0u32; self.n()];
        self.extend_ideals(0, 0, &mut counts, filter, &mut out);
        out
    }

    fn extend_ideals(
        &self,
        i: usize,
        total: u32,
        counts: &mut Vec<u32>,
        filter: &IdealFilter,
        out: &mut Vec<Ideal>,
    ) {
        let n = self.n();
        let h = self.height;
        if i == n {
            let m = Mset::from_counts_unchecked(h, counts.clone());
            if filter.accepts(self, &m) {
                out.push(Ideal(m));
            }
            return;
        }
        for c in 0..=h {
            let total = total + c;
            if let Some(t) = filter.cardinality {
                if total > t || total + h * ((n - i - 1) as u32) < t {
                    continue;
                }
            }
            let compatible = (0..i).all(|j| {
                let below_ok = !(self.is_below(j, i) && c > 0 && counts[j] != h);
                let above_ok = !(self.is_below(i, j) && counts[j] > 0 && c != h);
                below_ok && above_ok
            });
            if compatible {
                counts[i] = c;
                self.extend_ideals(i + 1, total, counts, filter, out);
            }
        }
        counts[i] = 0;
    }

    /// Ideals of cardinality `t` whose root set has exactly `r` labels.
    pub fn ideals_with(&self, t: u32, r: usize) -> Vec<Ideal> {
        self.enumerate_ideals(&IdealFilter {
            cardinality: Some(t),
            root_size: Some(r),
            maximal: None,
        })
    }

    /// Ideals of cardinality `t`.
    pub fn ideals_of_cardinality(&self, t: u32) -> Vec<Ideal> {
        self.enumerate_ideals(&IdealFilter::cardinality(t))
    }

    /// Down-sets of the induced poset with exactly `size` labels, as bitmasks.
    pub fn downsets(&self, size: usize) -> Vec<u64> {
        self.ideals_with(self.height * size as u32, size)
            .into_iter()
            .map(|i| i.root_mask())
            .collect()
    }

    /// `I ↦ I^c`: the complement of an ideal, as an ideal of the dual pomset.
    pub fn ideal_complement(&self, ideal: &Ideal) -> Result<Ideal> {
        self.dual().ideal(ideal.0.complement())
    }

    pub fn to_json(&self, modulus: u32) -> PomsetJson {
        PomsetJson {
            n: self.n(),
            m: Some(modulus),
            relations: self
                .covering_relations()
                .into_iter()
                .map(|(a, b)| [a + 1, b + 1])
                .collect(),
        }
    }
}

/// Iterates over the set bits of a mask.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Optional restrictions for [`Pomset::enumerate_ideals`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdealFilter {
    /// `|I|`
    pub cardinality: Option<u32>,
    /// `|I*|`
    pub root_size: Option<usize>,
    /// number of maximal elements
    pub maximal: Option<usize>,
}

impl IdealFilter {
    pub fn cardinality(t: u32) -> Self {
        IdealFilter {
            cardinality: Some(t),
            ..Default::default()
        }
    }

    fn accepts(&self, p: &Pomset, m: &Mset) -> bool {
        self.cardinality.is_none_or(|t| m.cardinality() == t)
            && self.root_size.is_none_or(|r| m.root_size() == r)
            && self
                .maximal
                .is_none_or(|j| p.maximal_elements(m).len() == j)
    }
}

/// An mset known to be an ideal of some pomset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Ideal(Mset);

impl Ideal {
    pub fn as_mset(&self) -> &Mset {
        &self.0
    }

    pub fn into_mset(self) -> Mset {
        self.0
    }

    /// Root set as a bitmask.
    pub fn root_mask(&self) -> u64 {
        self.0.root_set().into_iter().fold(0, |acc, a| acc | 1 << a)
    }
}

impl Deref for Ideal {
    type Target = Mset;

    fn deref(&self) -> &Mset {
        &self.0
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// JSON form of a pomset: `{"n": .., "m": .., "relations": [[a, b], ..]}`
/// with one-based labels and `[a, b]` meaning `a < b`. The height is
/// `⌊m/2⌋`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PomsetJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default)]
    pub relations: Vec<[usize; 2]>,
}

impl PomsetJson {
    /// Builds the pomset; `context_modulus` fills in (or must agree with) `m`.
    pub fn build(&self, context_modulus: Option<u32>) -> Result<(Pomset, u32)> {
        let m = match (self.m, context_modulus) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::ShapeMismatch(format!(
                    "pomset modulus {a} disagrees with configuration modulus {b}"
                )))
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => return Err(Error::Parse("pomset is missing field \"m\"".into())),
        };
        if m < 2 {
            return Err(Error::InvalidConfig(format!(
                "modulus must be at least 2, got {m}"
            )));
        }
        let mut pairs = Vec::with_capacity(self.relations.len());
        for &[a, b] in &self.relations {
            for x in [a, b] {
                if x == 0 || x > self.n {
                    return Err(Error::LabelOutOfRange {
                        label: x,
                        n: self.n,
                    });
                }
            }
            pairs.push((a - 1, b - 1));
        }
        Ok((Pomset::from_relations(self.n, m / 2, &pairs)?, m))
    }
}

/// Parses an ideal given in mset JSON form, filling `n` and `h` from `p`.
pub fn ideal_from_json(p: &Pomset, json: MsetJson) -> Result<Ideal> {
    p.ideal(json.into_mset(Some(p.n()), Some(p.height()))?)
}
