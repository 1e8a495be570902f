//! The ambient space `Z_m^N` split into `n` blocks by a label map, with the
//! pomset block weight, the comparison poset block weight, and balls.

use std::collections::BTreeSet;
use std::ops::{Deref, Range};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mset::Mset;
use crate::pomset::{bits, Ideal, Pomset, PomsetJson};

/// Default refusal threshold for anything that materializes vectors.
pub const DEFAULT_MAX_SPACE: usize = 1_000_000;

/// Lee weight `min(x, m - x)` of a residue.
pub fn lee_weight(x: u32, m: u32) -> u32 {
    let x = x % m;
    x.min(m - x)
}

/// A vector of `Z_m^N`, stored as residues in `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockVector(Vec<u32>);

impl BlockVector {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl Deref for BlockVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

/// Modulus, label map and pomset of a pomset block space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceConfig {
    modulus: u32,
    pi: Vec<usize>,
    offsets: Vec<usize>,
    pomset: Pomset,
}

impl SpaceConfig {
    /// `pi[i]` is the length of block `i`; the pomset must have `pi.len()`
    /// labels and height `⌊m/2⌋`.
    pub fn new(modulus: u32, pi: Vec<usize>, pomset: Pomset) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidConfig(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        if pi.len() != pomset.n() {
            return Err(Error::InvalidConfig(format!(
                "label map has {} blocks but the pomset has {} labels",
                pi.len(),
                pomset.n()
            )));
        }
        if let Some(i) = pi.iter().position(|&k| k == 0) {
            return Err(Error::InvalidConfig(format!(
                "block {} has length 0",
                i + 1
            )));
        }
        if pomset.height() != modulus / 2 {
            return Err(Error::InvalidConfig(format!(
                "pomset height {} differs from ⌊{modulus}/2⌋",
                pomset.height()
            )));
        }
        let mut offsets = Vec::with_capacity(pi.len() + 1);
        offsets.push(0);
        for &k in &pi {
            offsets.push(offsets.last().unwrap() + k);
        }
        Ok(SpaceConfig {
            modulus,
            pi,
            offsets,
            pomset,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `⌊m/2⌋`, the largest Lee weight.
    pub fn height(&self) -> u32 {
        self.modulus / 2
    }

    /// Number of blocks.
    pub fn n(&self) -> usize {
        self.pi.len()
    }

    /// Total length `N`.
    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn block_len(&self, block: usize) -> usize {
        self.pi[block]
    }

    pub fn block_range(&self, block: usize) -> Range<usize> {
        self.offsets[block]..self.offsets[block + 1]
    }

    /// Block containing coordinate `j`.
    pub fn block_of(&self, j: usize) -> usize {
        self.offsets.partition_point(|&o| o <= j) - 1
    }

    pub fn pomset(&self) -> &Pomset {
        &self.pomset
    }

    /// Same space with a different order on the labels.
    pub fn with_pomset(&self, pomset: Pomset) -> Result<SpaceConfig> {
        SpaceConfig::new(self.modulus, self.pi.clone(), pomset)
    }

    /// Same space ordered by the dual pomset.
    pub fn dual(&self) -> SpaceConfig {
        SpaceConfig {
            pomset: self.pomset.dual(),
            ..self.clone()
        }
    }

    /// Sum of block lengths over the labels in `mask`.
    pub fn block_mass(&self, mask: u64) -> usize {
        bits(mask).map(|i| self.pi[i]).sum()
    }

    /// `m^N`, or `None` on overflow.
    pub fn space_size(&self) -> Option<u128> {
        checked_pow(self.modulus as u128, self.len())
    }

    /// Returns `m^N` if it does not exceed `cap`.
    pub fn ensure_enumerable(&self, cap: usize) -> Result<usize> {
        match self.space_size() {
            Some(s) if s <= cap as u128 => Ok(s as usize),
            s => Err(Error::CapExceeded {
                required: s.unwrap_or(u128::MAX),
                cap,
            }),
        }
    }

    pub fn vector(&self, entries: Vec<u32>) -> Result<BlockVector> {
        if entries.len() != self.len() {
            return Err(Error::InvalidVector(format!(
                "expected {} entries, got {}",
                self.len(),
                entries.len()
            )));
        }
        if let Some(x) = entries.iter().find(|&&x| x >= self.modulus) {
            return Err(Error::InvalidVector(format!(
                "entry {x} is not a residue mod {}",
                self.modulus
            )));
        }
        Ok(BlockVector(entries))
    }

    pub(crate) fn vector_unchecked(&self, entries: Vec<u32>) -> BlockVector {
        debug_assert_eq!(entries.len(), self.len());
        BlockVector(entries)
    }

    pub fn zero(&self) -> BlockVector {
        BlockVector(vec![0; self.len()])
    }

    fn check(&self, v: &BlockVector) -> Result<()> {
        if v.len() != self.len() || v.iter().any(|&x| x >= self.modulus) {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} does not belong to Z_{}^{}",
                v.len(),
                self.modulus,
                self.len()
            )));
        }
        Ok(())
    }

    /// Lexicographic rank of `v` (first coordinate most significant).
    pub fn index_of(&self, v: &[u32]) -> usize {
        v.iter()
            .fold(0usize, |acc, &x| acc * self.modulus as usize + x as usize)
    }

    pub fn vector_at(&self, mut index: usize) -> BlockVector {
        let m = self.modulus as usize;
        let mut entries = vec![0u32; self.len()];
        for e in entries.iter_mut().rev() {
            *e = (index % m) as u32;
            index /= m;
        }
        BlockVector(entries)
    }

    /// Visits every vector of the space in lexicographic order.
    pub fn for_each_vector(&self, cap: usize, mut f: impl FnMut(&[u32])) -> Result<()> {
        self.ensure_enumerable(cap)?;
        let mut v = vec![0u32; self.len()];
        loop {
            f(&v);
            if !odometer_step(&mut v, self.modulus) {
                return Ok(());
            }
        }
    }

    pub fn vectors(&self, cap: usize) -> Result<Vec<BlockVector>> {
        let mut out = Vec::with_capacity(self.ensure_enumerable(cap)?);
        self.for_each_vector(cap, |v| out.push(BlockVector(v.to_vec())))?;
        Ok(out)
    }

    pub fn add(&self, u: &BlockVector, v: &BlockVector) -> BlockVector {
        let m = self.modulus;
        BlockVector(u.iter().zip(v.iter()).map(|(&a, &b)| (a + b) % m).collect())
    }

    pub fn sub(&self, u: &BlockVector, v: &BlockVector) -> BlockVector {
        let m = self.modulus;
        BlockVector(
            u.iter()
                .zip(v.iter())
                .map(|(&a, &b)| (a + m - b) % m)
                .collect(),
        )
    }

    pub fn neg(&self, v: &BlockVector) -> BlockVector {
        let m = self.modulus;
        BlockVector(v.iter().map(|&a| (m - a) % m).collect())
    }

    pub fn scale(&self, s: u32, v: &BlockVector) -> BlockVector {
        let m = self.modulus as u64;
        BlockVector(
            v.iter()
                .map(|&a| ((s as u64 * a as u64) % m) as u32)
                .collect(),
        )
    }

    fn support_into(&self, v: &[u32], counts: &mut [u32]) {
        for (i, c) in counts.iter_mut().enumerate() {
            *c = v[self.block_range(i)]
                .iter()
                .map(|&x| lee_weight(x, self.modulus))
                .max()
                .unwrap_or(0);
        }
    }

    /// Block support: each nonzero block contributes its largest Lee weight.
    pub fn support(&self, v: &BlockVector) -> Mset {
        let mut counts = vec![0; self.n()];
        self.support_into(v, &mut counts);
        Mset::from_counts_unchecked(self.height(), counts)
    }

    /// Pomset block weight of a raw residue slice.
    pub(crate) fn weight_of(&self, v: &[u32]) -> u32 {
        let mut buf = [0u32; crate::pomset::MAX_LABELS];
        let counts = &mut buf[..self.n()];
        self.support_into(v, counts);
        self.pomset.closure_cardinality(counts)
    }

    /// Cardinality of the ideal generated by the block support.
    pub fn weight(&self, v: &BlockVector) -> u32 {
        self.weight_of(v)
    }

    pub fn distance(&self, u: &BlockVector, v: &BlockVector) -> Result<u32> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.weight(&self.sub(u, v)))
    }

    /// Bitmask of the nonzero blocks.
    pub fn block_mask(&self, v: &[u32]) -> u64 {
        (0..self.n())
            .filter(|&i| v[self.block_range(i)].iter().any(|&x| x != 0))
            .fold(0, |acc, i| acc | 1 << i)
    }

    /// Poset block weight: number of labels in the down-closure of the
    /// nonzero blocks.
    pub fn poset_weight(&self, v: &BlockVector) -> u32 {
        self.pomset.down_closure(self.block_mask(v)).count_ones()
    }

    pub fn poset_distance(&self, u: &BlockVector, v: &BlockVector) -> u32 {
        self.poset_weight(&self.sub(u, v))
    }

    /// `v ∈ B_K(u)`, i.e. the block support of `u - v` is a submset of `k`.
    /// For an ideal this is the same as the generated ideal lying in `k`.
    pub fn in_ball(&self, u: &BlockVector, v: &BlockVector, k: &Mset) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        self.check_mset(k)?;
        self.support(&self.sub(u, v)).is_submset(k)
    }

    fn check_mset(&self, k: &Mset) -> Result<()> {
        if k.n() != self.n() || k.height() != self.height() {
            return Err(Error::ShapeMismatch(format!(
                "mset over ({}, h={}) used in a space with {} blocks and height {}",
                k.n(),
                k.height(),
                self.n(),
                self.height()
            )));
        }
        Ok(())
    }

    /// Residues with Lee weight at most `c`, ascending.
    pub fn residues_within(&self, c: u32) -> Vec<u32> {
        (0..self.modulus)
            .filter(|&x| lee_weight(x, self.modulus) <= c)
            .collect()
    }

    /// `|B_K| = Π_{i ∈ K*} min(2 C_K(i) + 1, m)^{k_i}`.
    pub fn ball_cardinality(&self, k: &Mset) -> Result<u128> {
        self.check_mset(k)?;
        let mut total: u128 = 1;
        for i in k.root_set() {
            let per = (2 * k.count(i) + 1).min(self.modulus) as u128;
            total = checked_pow(per, self.pi[i])
                .and_then(|f| total.checked_mul(f))
                .ok_or(Error::CapExceeded {
                    required: u128::MAX,
                    cap: usize::MAX,
                })?;
        }
        Ok(total)
    }

    /// `B_K(0)`: vectors whose block support lies in `k`.
    pub fn ball_offsets(&self, k: &Mset, cap: usize) -> Result<Vec<BlockVector>> {
        let size = self.ball_cardinality(k)?;
        if size > cap as u128 {
            return Err(Error::CapExceeded {
                required: size,
                cap,
            });
        }
        let mut choices: Vec<(usize, Vec<u32>)> = Vec::new();
        for i in k.root_set() {
            let allowed = self.residues_within(k.count(i));
            for j in self.block_range(i) {
                choices.push((j, allowed.clone()));
            }
        }
        let mut out = Vec::with_capacity(size as usize);
        let mut digits = vec![0usize; choices.len()];
        loop {
            let mut v = vec![0u32; self.len()];
            for ((j, allowed), &d) in choices.iter().zip(&digits) {
                v[*j] = allowed[d];
            }
            out.push(BlockVector(v));
            let mut pos = digits.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < choices[pos].1.len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    /// `B_K(u) = u + B_K(0)`.
    pub fn enumerate_ball(
        &self,
        u: &BlockVector,
        k: &Mset,
        cap: usize,
    ) -> Result<Vec<BlockVector>> {
        self.check(u)?;
        Ok(self
            .ball_offsets(k, cap)?
            .iter()
            .map(|e| self.add(u, e))
            .collect())
    }

    /// Radius-`r` ball assembled as the union of `B_I(u)` over ideals of
    /// cardinality `r`, sorted and deduplicated.
    pub fn r_ball(&self, u: &BlockVector, r: u32, cap: usize) -> Result<Vec<BlockVector>> {
        self.check(u)?;
        let max = self.n() as u32 * self.height();
        if r > max {
            return Err(Error::Precondition(format!(
                "radius {r} exceeds the largest weight {max}"
            )));
        }
        let mut out = BTreeSet::new();
        for ideal in self.pomset.ideals_of_cardinality(r) {
            for v in self.enumerate_ball(u, &ideal, cap)? {
                out.insert(v);
            }
            if out.len() > cap {
                return Err(Error::CapExceeded {
                    required: out.len() as u128,
                    cap,
                });
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Ideal of this space's pomset, validated.
    pub fn ideal(&self, m: Mset) -> Result<Ideal> {
        self.pomset.ideal(m)
    }

    pub fn to_json(&self) -> ConfigJson {
        ConfigJson {
            m: self.modulus,
            pi: self.pi.clone(),
            pomset: self.pomset.to_json(self.modulus),
        }
    }
}

/// Advances `v` to the next vector in lexicographic order; false on wrap.
pub(crate) fn odometer_step(v: &mut [u32], m: u32) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x < m {
            return true;
        }
        *x = 0;
    }
    false
}

pub(crate) fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    (0..exp).try_fold(1u128, |acc, _| acc.checked_mul(base))
}

/// JSON form: `{"m": .., "pi": [k_1, ..], "pomset": <pomset JSON>}`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ConfigJson {
    pub m: u32,
    pub pi: Vec<usize>,
    pub pomset: PomsetJson,
}

impl ConfigJson {
    pub fn build(&self) -> Result<SpaceConfig> {
        let (pomset, _) = self.pomset.build(Some(self.m))?;
        SpaceConfig::new(self.m, self.pi.clone(), pomset)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee_z5() -> SpaceConfig {
        let p = Pomset::from_relations(3, 2, &[(0, 1), (0, 2)]).unwrap();
        SpaceConfig::new(5, vec![2, 4, 1], p).unwrap()
    }

    fn z10_antichain() -> SpaceConfig {
        SpaceConfig::new(10, vec![1, 1, 1], Pomset::antichain(3, 5).unwrap()).unwrap()
    }

    fn mset(h: u32, c: &[u32]) -> Mset {
        Mset::new(h, c.to_vec()).unwrap()
    }

    #[test]
    fn lee_weights() {
        assert_eq!(lee_weight(3, 10), 3);
        assert_eq!(lee_weight(7, 10), 3);
        assert_eq!(lee_weight(0, 7), 0);
        assert_eq!(lee_weight(5, 10), 5);
        assert_eq!(lee_weight(2, 5), 2);
    }

    #[test]
    fn config_validation() {
        let p = Pomset::antichain(2, 2).unwrap();
        assert!(SpaceConfig::new(5, vec![1, 1], p.clone()).is_ok());
        assert!(SpaceConfig::new(5, vec![1], p.clone()).is_err());
        assert!(SpaceConfig::new(5, vec![1, 0], p.clone()).is_err());
        assert!(SpaceConfig::new(7, vec![1, 1], p.clone()).is_err());
        assert!(SpaceConfig::new(1, vec![1, 1], p).is_err());
        let c = vee_z5();
        assert_eq!((c.len(), c.n(), c.height()), (7, 3, 2));
        assert_eq!(c.block_range(1), 2..6);
        assert_eq!(
            (c.block_of(0), c.block_of(2), c.block_of(5), c.block_of(6)),
            (0, 1, 1, 2)
        );
    }

    #[test]
    fn supports() {
        let c = vee_z5();
        let v = c.vector(vec![0, 3, 0, 2, 0, 0, 1]).unwrap();
        assert_eq!(c.support(&v), mset(2, &[2, 2, 1]));
        assert!(c.support(&c.zero()).is_empty());
        let z = z10_antichain();
        assert_eq!(
            z.support(&z.vector(vec![0, 5, 0]).unwrap()),
            mset(5, &[0, 5, 0])
        );
    }

    #[test]
    fn weights() {
        let c = vee_z5();
        let v = c.vector(vec![0, 3, 0, 2, 0, 0, 1]).unwrap();
        assert_eq!(c.weight(&v), 5);
        assert_eq!(c.weight(&c.zero()), 0);
        assert_eq!(c.poset_weight(&v), 3);
        assert_eq!(c.poset_weight(&c.zero()), 0);
        // weight 1 in block 2 drags block 1 up to full count
        let w = c.vector(vec![0, 0, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(c.weight(&w), 3);
        assert_eq!(c.poset_weight(&w), 2);
        let z = z10_antichain();
        assert_eq!(z.poset_weight(&z.vector(vec![3, 0, 9]).unwrap()), 2);
        assert_eq!(c.distance(&v, &w).unwrap(), c.weight(&c.sub(&v, &w)));
        assert!(c.vector(vec![5, 0, 0, 0, 0, 0, 0]).is_err());
        assert!(c.vector(vec![0; 6]).is_err());
    }

    #[test]
    fn weight_is_bounded() {
        let c = vee_z5();
        let bound = c.n() as u32 * c.height();
        c.for_each_vector(DEFAULT_MAX_SPACE, |v| assert!(c.weight_of(v) <= bound))
            .unwrap();
    }

    #[test]
    fn ball_cardinalities() {
        let z = z10_antichain();
        assert_eq!(z.ball_cardinality(&mset(5, &[0, 2, 5])).unwrap(), 50);
        let c = vee_z5();
        assert_eq!(
            c.ball_cardinality(&mset(2, &[2, 2, 0])).unwrap(),
            5u128.pow(6)
        );
        let chain = c.with_pomset(Pomset::chain(3, 2).unwrap()).unwrap();
        assert_eq!(chain.ball_cardinality(&mset(2, &[2, 1, 0])).unwrap(), 2025);
        assert_eq!(c.ball_cardinality(&Mset::empty(3, 2)).unwrap(), 1);
    }

    #[test]
    fn ball_enumeration() {
        let z = z10_antichain();
        let u = z.vector(vec![4, 0, 0]).unwrap();
        let i = mset(5, &[0, 2, 5]);
        let ball = z.enumerate_ball(&u, &i, DEFAULT_MAX_SPACE).unwrap();
        assert_eq!(ball.len(), 50);
        assert!(ball.iter().all(|v| v[0] == 4 && lee_weight(v[1], 10) <= 2));
        assert!(ball.iter().all(|v| z.in_ball(&u, v, &i).unwrap()));
        let e = z.enumerate_ball(&u, &Mset::empty(3, 5), 10).unwrap();
        assert_eq!(e, vec![u.clone()]);
        let full = z
            .enumerate_ball(&u, &Mset::regular(3, 5), DEFAULT_MAX_SPACE)
            .unwrap();
        assert_eq!(full.len(), 1000);
        assert!(matches!(
            z.enumerate_ball(&u, &Mset::regular(3, 5), 999),
            Err(Error::CapExceeded {
                required: 1000,
                cap: 999
            })
        ));
    }

    #[test]
    fn r_balls() {
        let z = z10_antichain();
        let u = z.vector(vec![1, 2, 3]).unwrap();
        assert_eq!(z.r_ball(&u, 0, 10).unwrap(), vec![u.clone()]);
        assert_eq!(z.r_ball(&u, 15, 1000).unwrap().len(), 1000);
        assert!(z.r_ball(&u, 16, 1000).is_err());
    }

    #[test]
    fn indexing_roundtrip() {
        let c = vee_z5();
        for idx in [0usize, 1, 77, 78_124] {
            assert_eq!(c.index_of(&c.vector_at(idx)), idx);
        }
        let mut seen = 0usize;
        c.for_each_vector(DEFAULT_MAX_SPACE, |v| {
            assert_eq!(c.index_of(v), seen);
            seen += 1;
        })
        .unwrap();
        assert_eq!(seen, 78_125);
        assert!(c.for_each_vector(1000, |_| {}).is_err());
    }

    #[test]
    fn json() {
        let j: ConfigJson = serde_json::from_str(
            r#"{"m":5,"pi":[2,4,1],"pomset":{"n":3,"m":5,"relations":[[1,2],[1,3]]}}"#,
        )
        .unwrap();
        assert_eq!(j.build().unwrap(), vee_z5());
        assert_eq!(vee_z5().to_json(), j);
        let no_m: ConfigJson =
            serde_json::from_str(r#"{"m":5,"pi":[2,4,1],"pomset":{"n":3,"relations":[]}}"#)
                .unwrap();
        assert!(no_m.build().is_ok());
        let bad: ConfigJson =
            serde_json::from_str(r#"{"m":5,"pi":[2,4],"pomset":{"n":3,"m":5}}"#).unwrap();
        assert!(bad.build().is_err());
    }
}
