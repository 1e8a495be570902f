//! Block codes in a pomset block space: minimum distance, the Singleton
//! bound and MDS tests, I-perfect and r-perfect tests, duals and systematic
//! maps.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mset::Mset;
use crate::pomset::Ideal;
use crate::space::{BlockVector, ConfigJson, SpaceConfig};

/// How a code was handed to us.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Codewords,
    Generators(Vec<BlockVector>),
}

/// A nonempty code in a pomset block space. Codewords are kept sorted and
/// deduplicated; linearity is detected on construction.
#[derive(Clone, Debug)]
pub struct BlockCode {
    config: SpaceConfig,
    words: Vec<BlockVector>,
    presentation: Presentation,
    /// A generating set, present iff the code is linear.
    basis: Option<Vec<BlockVector>>,
}

/// Smallest `e` with `m^e >= size`.
pub fn ceil_log(m: u32, size: u128) -> usize {
    let mut e = 0;
    let mut p: u128 = 1;
    while p < size {
        p = p.saturating_mul(m as u128);
        e += 1;
    }
    e
}

/// Adds `g` to a span: `{s + a·g : s ∈ span, a ∈ Z_m}`.
fn extend_span(
    config: &SpaceConfig,
    span: &mut Vec<BlockVector>,
    seen: &mut HashSet<BlockVector>,
    g: &BlockVector,
    cap: usize,
) -> Result<()> {
    let mut multiples = vec![config.zero()];
    loop {
        let next = config.add(multiples.last().unwrap(), g);
        if next.is_zero() {
            break;
        }
        multiples.push(next);
    }
    let base = span.clone();
    for s in &base {
        for a in &multiples[1..] {
            let v = config.add(s, a);
            if seen.insert(v.clone()) {
                span.push(v);
                if span.len() > cap {
                    return Err(Error::CapExceeded {
                        required: span.len() as u128,
                        cap,
                    });
                }
            }
        }
    }
    Ok(())
}

impl BlockCode {
    /// Code given by an explicit list of codewords.
    pub fn from_codewords(config: SpaceConfig, words: Vec<Vec<u32>>) -> Result<Self> {
        let words: BTreeSet<BlockVector> = words
            .into_iter()
            .map(|w| config.vector(w))
            .collect::<Result<_>>()?;
        Self::from_vectors(config, words.into_iter().collect(), Presentation::Codewords)
    }

    fn from_vectors(
        config: SpaceConfig,
        words: Vec<BlockVector>,
        presentation: Presentation,
    ) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::Precondition(
                "a code needs at least one codeword".into(),
            ));
        }
        let basis = detect_linear(&config, &words);
        Ok(BlockCode {
            config,
            words,
            presentation,
            basis,
        })
    }

    /// All `Z_m`-linear combinations of `rows`.
    pub fn span(config: SpaceConfig, rows: Vec<Vec<u32>>, cap: usize) -> Result<Self> {
        let rows: Vec<BlockVector> = rows
            .into_iter()
            .map(|r| config.vector(r))
            .collect::<Result<_>>()?;
        let mut span = vec![config.zero()];
        let mut seen: HashSet<BlockVector> = span.iter().cloned().collect();
        let mut basis = Vec::new();
        for g in &rows {
            if seen.contains(g) {
                continue;
            }
            basis.push(g.clone());
            extend_span(&config, &mut span, &mut seen, g, cap)?;
        }
        span.sort();
        Ok(BlockCode {
            config,
            words: span,
            presentation: Presentation::Generators(rows),
            basis: Some(basis),
        })
    }

    pub fn config(&self) -> &SpaceConfig {
        &self.config
    }

    pub fn codewords(&self) -> &[BlockVector] {
        &self.words
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_linear(&self) -> bool {
        self.basis.is_some()
    }

    /// Generating set of a linear code.
    pub fn basis(&self) -> Option<&[BlockVector]> {
        self.basis.as_deref()
    }

    pub fn contains(&self, v: &BlockVector) -> bool {
        self.words.binary_search(v).is_ok()
    }

    /// Same codewords read in another space of identical shape.
    pub fn with_config(&self, config: SpaceConfig) -> Result<BlockCode> {
        if config.len() != self.config.len() || config.modulus() != self.config.modulus() {
            return Err(Error::ShapeMismatch(
                "codes can only move between spaces of equal length and modulus".into(),
            ));
        }
        Ok(BlockCode {
            config,
            ..self.clone()
        })
    }

    /// `⌈log_m |C|⌉`, by exact integer arithmetic.
    pub fn log_size(&self) -> usize {
        ceil_log(self.config.modulus(), self.len() as u128)
    }

    /// `k` with `|C| = m^k`, if the size is a power of `m`.
    pub fn exact_dimension(&self) -> Option<usize> {
        let k = self.log_size();
        (crate::space::checked_pow(self.config.modulus() as u128, k) == Some(self.len() as u128))
            .then_some(k)
    }

    fn require_two(&self) -> Result<()> {
        if self.len() < 2 {
            return Err(Error::Precondition(
                "minimum distance needs at least two codewords".into(),
            ));
        }
        Ok(())
    }

    /// Minimum pomset block distance; linear codes use the minimum nonzero
    /// weight.
    pub fn min_distance(&self) -> Result<u32> {
        self.require_two()?;
        if self.is_linear() {
            Ok(self
                .words
                .iter()
                .filter(|w| !w.is_zero())
                .map(|w| self.config.weight(w))
                .min()
                .unwrap())
        } else {
            self.min_distance_pairwise()
        }
    }

    /// Minimum over all pairs of distinct codewords.
    pub fn min_distance_pairwise(&self) -> Result<u32> {
        self.require_two()?;
        let mut best = u32::MAX;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                best = best.min(self.config.weight(&self.config.sub(u, v)));
            }
        }
        Ok(best)
    }

    /// Minimum poset block distance.
    pub fn poset_min_distance(&self) -> Result<u32> {
        self.require_two()?;
        let cfg = &self.config;
        if self.is_linear() {
            return Ok(self
                .words
                .iter()
                .filter(|w| !w.is_zero())
                .map(|w| cfg.poset_weight(w))
                .min()
                .unwrap());
        }
        let mut best = u32::MAX;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                best = best.min(cfg.poset_distance(u, v));
            }
        }
        Ok(best)
    }

    /// Minimum distance, with the convention `n⌊m/2⌋ + 1` for a one-word
    /// code (no pair of distinct codewords exists).
    fn min_distance_or_trivial(&self) -> u32 {
        self.min_distance()
            .unwrap_or(self.config.n() as u32 * self.config.height() + 1)
    }

    /// Singleton bound data with `t = r⌊m/2⌋`.
    pub fn singleton(&self) -> SingletonReport {
        let cfg = &self.config;
        let h = cfg.height();
        let d = self.min_distance_or_trivial();
        let r = ((d - 1) / h) as usize;
        let max_sum = cfg
            .pomset()
            .downsets(r)
            .into_iter()
            .map(|m| cfg.block_mass(m))
            .max()
            .unwrap_or(0);
        SingletonReport {
            min_distance: d,
            r,
            t: r as u32 * h,
            max_sum,
            bound: cfg.len() - self.log_size(),
        }
    }

    /// Ideals with `r = ⌊(d-1)/⌊m/2⌋⌋` roots and cardinality between
    /// `r⌊m/2⌋` (when `strict`) or `r` and `d - 1`.
    pub fn singleton_family(&self, strict: bool) -> Vec<Ideal> {
        let s = self.singleton();
        let p = self.config.pomset();
        let lo = if strict { s.t } else { s.r as u32 };
        let hi = if strict { s.t } else { s.min_distance - 1 };
        (lo..=hi).flat_map(|t| p.ideals_with(t, s.r)).collect()
    }

    /// Largest `Σ_{i∈J*} k_i` over `J` in [`BlockCode::singleton_family`].
    pub fn singleton_max_sum(&self, strict: bool) -> usize {
        self.singleton_family(strict)
            .iter()
            .map(|j| self.config.block_mass(j.root_mask()))
            .max()
            .unwrap_or(0)
    }

    /// MDS: some `J ∈ I_{*r}^{r⌊m/2⌋}` attains `N - ⌈log_m|C|⌉`.
    pub fn is_mds(&self) -> bool {
        self.singleton().attained()
    }

    /// MDS with respect to the poset block metric of the induced poset.
    pub fn is_mds_poset_block(&self) -> bool {
        let cfg = &self.config;
        let d = self.poset_min_distance().unwrap_or(cfg.n() as u32 + 1);
        let best = cfg
            .pomset()
            .downsets(d as usize - 1)
            .into_iter()
            .map(|m| cfg.block_mass(m))
            .max()
            .unwrap_or(0);
        best == cfg.len() - self.log_size()
    }

    /// Marks every translate `c + e` over codewords `c` and offsets `e`.
    fn pack(&self, offsets: &[BlockVector], cap: usize) -> Result<Packing> {
        let cfg = &self.config;
        let size = cfg.ensure_enumerable(cap)?;
        let m = cfg.modulus();
        let mut hit = vec![false; size];
        let mut marked = 0usize;
        for c in &self.words {
            for e in offsets {
                let idx = c.iter().zip(e.iter()).fold(0usize, |acc, (&a, &b)| {
                    acc * m as usize + ((a + b) % m) as usize
                });
                if hit[idx] {
                    return Ok(Packing {
                        disjoint: false,
                        covers: false,
                    });
                }
                hit[idx] = true;
                marked += 1;
            }
        }
        Ok(Packing {
            disjoint: true,
            covers: marked == size,
        })
    }

    /// I-perfect: the balls `B_I(c)` partition the space. Full-count ideals
    /// go through [`BlockCode::is_i_perfect_full_count`].
    pub fn is_i_perfect(&self, ideal: &Ideal, cap: usize) -> Result<bool> {
        if ideal.is_full_count() {
            self.config.ensure_enumerable(cap)?;
            self.is_i_perfect_full_count(ideal)
        } else {
            self.is_i_perfect_exhaustive(ideal, cap)
        }
    }

    /// Marks every ball over an array indexed by the whole space.
    pub fn is_i_perfect_exhaustive(&self, ideal: &Mset, cap: usize) -> Result<bool> {
        let size = self.config.ensure_enumerable(cap)? as u128;
        if self.config.ball_cardinality(ideal)? * self.len() as u128 != size {
            return Ok(false);
        }
        let offsets = self.config.ball_offsets(ideal, cap)?;
        Ok(self.pack(&offsets, cap)?.is_perfect())
    }

    /// For a full-count ideal the balls are cosets of the blocks in `I*`:
    /// perfect iff `|C| m^{Σ_{I*} k_i} = m^N` (covering) and codewords
    /// differ outside the `I*` blocks (packing).
    pub fn is_i_perfect_full_count(&self, ideal: &Ideal) -> Result<bool> {
        if !ideal.is_full_count() {
            return Err(Error::Precondition(format!("{ideal} is not of full count")));
        }
        let cfg = &self.config;
        let inside = cfg.block_mass(ideal.root_mask());
        let covering = self
            .exact_dimension()
            .is_some_and(|k| inside == cfg.len() - k.min(cfg.len()) && k <= cfg.len());
        if !covering {
            return Ok(false);
        }
        let outside = self.outside_coords(ideal);
        let mut seen = HashSet::with_capacity(self.len());
        Ok(self
            .words
            .iter()
            .all(|w| seen.insert(outside.iter().map(|&j| w[j]).collect::<Vec<u32>>())))
    }

    fn outside_coords(&self, ideal: &Mset) -> Vec<usize> {
        let cfg = &self.config;
        (0..cfg.n())
            .filter(|&i| ideal.count(i) == 0)
            .flat_map(|i| cfg.block_range(i))
            .collect()
    }

    fn inside_coords(&self, ideal: &Mset) -> Vec<usize> {
        let cfg = &self.config;
        (0..cfg.n())
            .filter(|&i| ideal.count(i) > 0)
            .flat_map(|i| cfg.block_range(i))
            .collect()
    }

    /// Radius-`r` balls partition the space.
    pub fn is_r_perfect(&self, r: u32, cap: usize) -> Result<bool> {
        let table = RadiusTable::new(&self.config, cap)?;
        Ok(self.radius_packing(&table, r, cap)?.is_perfect())
    }

    /// Radius-`r` balls are pairwise disjoint (the definition).
    pub fn is_r_error_correcting(&self, r: u32, cap: usize) -> Result<bool> {
        let table = RadiusTable::new(&self.config, cap)?;
        Ok(self.radius_packing(&table, r, cap)?.disjoint)
    }

    fn radius_packing(&self, table: &RadiusTable, r: u32, cap: usize) -> Result<Packing> {
        let offsets = table.within(&self.config, r);
        if self.len() as u128 * offsets.len() as u128 > table.weights.len() as u128 * 2 {
            // Far more marks than cells: some cell is hit twice.
            return Ok(Packing {
                disjoint: false,
                covers: false,
            });
        }
        self.pack(&offsets, cap)
    }

    /// Support-union test for r-error correction: no difference of distinct
    /// codewords has its block support inside `I ∪ J` for ideals `I, J` of
    /// cardinality `r`.
    pub fn r_error_correcting_criterion(&self, r: u32) -> bool {
        self.r_error_correcting_criterion_with(r, Combine::Union)
    }

    /// The same test with `I ∪ J` replaced by `combine`.
    pub fn r_error_correcting_criterion_with(&self, r: u32, combine: Combine) -> bool {
        let cfg = &self.config;
        let supports = self.difference_supports();
        let ideals = cfg.pomset().ideals_of_cardinality(r);
        let mut unions = BTreeSet::new();
        for (a, i) in ideals.iter().enumerate() {
            for j in &ideals[a..] {
                unions.insert(
                    match combine {
                        Combine::Union => i.union(j),
                        Combine::Sum => i.sum(j),
                    }
                    .expect("same pomset"),
                );
            }
        }
        !supports
            .iter()
            .any(|s| unions.iter().any(|u| s.is_submset(u).unwrap_or(false)))
    }

    /// Distinct block supports of `u - v` over distinct codewords.
    fn difference_supports(&self) -> BTreeSet<Mset> {
        let cfg = &self.config;
        if self.is_linear() {
            return self
                .words
                .iter()
                .filter(|w| !w.is_zero())
                .map(|w| cfg.support(w))
                .collect();
        }
        let mut out = BTreeSet::new();
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                out.insert(cfg.support(&cfg.sub(u, v)));
            }
        }
        out
    }

    /// Both r-error-correction tests for every radius `0..=n⌊m/2⌋`, sharing
    /// one weight table.
    pub fn radius_profile(&self, cap: usize) -> Result<Vec<RadiusReport>> {
        let cfg = &self.config;
        let table = RadiusTable::new(cfg, cap)?;
        (0..=cfg.n() as u32 * cfg.height())
            .map(|r| {
                let packing = self.radius_packing(&table, r, cap)?;
                Ok(RadiusReport {
                    radius: r,
                    error_correcting: packing.disjoint,
                    criterion: self.r_error_correcting_criterion(r),
                    perfect: packing.is_perfect(),
                })
            })
            .collect()
    }

    /// Annihilator under the coordinatewise inner product, by scanning the
    /// space.
    pub fn dual(&self, cap: usize) -> Result<BlockCode> {
        let basis = self.basis.as_ref().ok_or_else(|| {
            Error::Precondition("the dual is only defined here for linear codes".into())
        })?;
        let cfg = &self.config;
        let m = cfg.modulus() as u64;
        let mut words = Vec::new();
        cfg.for_each_vector(cap, |x| {
            let orthogonal = basis.iter().all(|g| {
                x.iter()
                    .zip(g.iter())
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    % m
                    == 0
            });
            if orthogonal {
                words.push(cfg.vector_unchecked(x.to_vec()));
            }
        })?;
        Self::from_vectors(cfg.clone(), words, Presentation::Codewords)
    }

    /// Splits codewords into coordinates outside and inside the `I*` blocks
    /// and reads off `outside ↦ inside`, provided the code is I-perfect.
    pub fn systematic_function(&self, ideal: &Ideal, cap: usize) -> Result<Systematic> {
        if !self.is_i_perfect(ideal, cap)? {
            return Err(Error::Precondition(format!("code is not {ideal}-perfect")));
        }
        let info_coords = self.outside_coords(ideal);
        let parity_coords = self.inside_coords(ideal);
        let mut images: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
        for w in &self.words {
            let info: Vec<u32> = info_coords.iter().map(|&j| w[j]).collect();
            let parity: Vec<u32> = parity_coords.iter().map(|&j| w[j]).collect();
            images.entry(info).or_default().push(parity);
        }
        let collisions: Vec<Collision> = images
            .iter()
            .filter(|(_, v)| v.len() > 1)
            .map(|(info, v)| Collision {
                info: info.clone(),
                images: v.clone(),
            })
            .collect();
        if !collisions.is_empty() {
            return Ok(Systematic::NotAFunction { collisions });
        }
        let map = images
            .into_iter()
            .map(|(k, mut v)| (k, v.pop().unwrap()))
            .collect();
        Ok(Systematic::Function(SystematicMap {
            modulus: self.config.modulus(),
            info_coords,
            parity_coords,
            map,
        }))
    }
}

/// JSON form: `{"config": .., "generators": [[..], ..]}` or
/// `{"config": .., "codewords": [[..], ..]}`. The config may be left out
/// when the caller supplies one.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CodeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codewords: Option<Vec<Vec<u32>>>,
}

impl CodeJson {
    pub fn build(self, context: Option<&SpaceConfig>, cap: usize) -> Result<BlockCode> {
        let own = self.config.as_ref().map(ConfigJson::build).transpose()?;
        let config = match (own, context) {
            (Some(a), Some(b)) if a != *b => {
                return Err(Error::InvalidConfig(
                    "code config disagrees with the given config".into(),
                ))
            }
            (Some(a), _) => a,
            (None, Some(b)) => b.clone(),
            (None, None) => return Err(Error::InvalidConfig("code has no config".into())),
        };
        match (self.generators, self.codewords) {
            (Some(rows), None) => BlockCode::span(config, rows, cap),
            (None, Some(words)) => BlockCode::from_codewords(config, words),
            _ => Err(Error::Parse(
                "code needs exactly one of \"generators\" or \"codewords\"".into(),
            )),
        }
    }
}

impl BlockCode {
    /// Codeword listing with its config.
    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            config: Some(self.config.to_json()),
            generators: None,
            codewords: Some(self.words.iter().map(|w| w.to_vec()).collect()),
        }
    }
}

/// Returns a generating set if `words` is closed under addition and holds
/// zero. Finite additive closure makes it a submodule of `Z_m^N`, so scalar
/// closure follows.
fn detect_linear(config: &SpaceConfig, words: &[BlockVector]) -> Option<Vec<BlockVector>> {
    let set: HashSet<&BlockVector> = words.iter().collect();
    if !set.contains(&config.zero()) {
        return None;
    }
    let mut span = vec![config.zero()];
    let mut seen: HashSet<BlockVector> = span.iter().cloned().collect();
    let mut basis = Vec::new();
    for w in words {
        if seen.contains(w) {
            continue;
        }
        basis.push(w.clone());
        extend_span(config, &mut span, &mut seen, w, words.len()).ok()?;
        if span.iter().any(|v| !set.contains(v)) {
            return None;
        }
    }
    (span.len() == words.len()).then_some(basis)
}

#[derive(Clone, Copy, Debug)]
struct Packing {
    disjoint: bool,
    covers: bool,
}

impl Packing {
    fn is_perfect(&self) -> bool {
        self.disjoint && self.covers
    }
}

/// Weights of every vector of the space, by lexicographic index.
struct RadiusTable {
    weights: Vec<u32>,
}

impl RadiusTable {
    fn new(cfg: &SpaceConfig, cap: usize) -> Result<Self> {
        let mut weights = Vec::with_capacity(cfg.ensure_enumerable(cap)?);
        cfg.for_each_vector(cap, |v| weights.push(cfg.weight_of(v)))?;
        Ok(RadiusTable { weights })
    }

    fn within(&self, cfg: &SpaceConfig, r: u32) -> Vec<BlockVector> {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w <= r)
            .map(|(i, _)| cfg.vector_at(i))
            .collect()
    }
}

/// Singleton bound data for a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingletonReport {
    pub min_distance: u32,
    /// `⌊(d-1)/⌊m/2⌋⌋`
    pub r: usize,
    /// `r⌊m/2⌋`
    pub t: u32,
    /// `max Σ_{i∈J*} k_i` over `J ∈ I_{*r}^t`
    pub max_sum: usize,
    /// `N - ⌈log_m |C|⌉`
    pub bound: usize,
}

impl SingletonReport {
    pub fn holds(&self) -> bool {
        self.max_sum <= self.bound
    }

    pub fn attained(&self) -> bool {
        self.max_sum == self.bound
    }
}

/// How two ideals are merged in the support test for r-error correction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Combine {
    /// Pointwise maximum.
    Union,
    /// Pointwise sum, capped at `⌊m/2⌋`.
    Sum,
}

/// Both r-error-correction tests and the perfection test at one radius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadiusReport {
    pub radius: u32,
    pub error_correcting: bool,
    pub criterion: bool,
    pub perfect: bool,
}

/// Result of [`BlockCode::systematic_function`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Systematic {
    Function(SystematicMap),
    NotAFunction { collisions: Vec<Collision> },
}

/// Information coordinates with more than one parity image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub info: Vec<u32>,
    pub images: Vec<Vec<u32>>,
}

/// `f : ⊕_{j∉I*} Z_m^{k_j} → ⊕_{i∈I*} Z_m^{k_i}` as a lookup table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystematicMap {
    pub modulus: u32,
    /// Codeword coordinates forming the argument, ascending.
    pub info_coords: Vec<usize>,
    /// Codeword coordinates forming the image, ascending.
    pub parity_coords: Vec<usize>,
    pub map: BTreeMap<Vec<u32>, Vec<u32>>,
}

impl SystematicMap {
    pub fn apply(&self, info: &[u32]) -> Option<&[u32]> {
        self.map.get(info).map(Vec::as_slice)
    }

    /// Defined on all of `Z_m^{|info|}`.
    pub fn is_total(&self) -> bool {
        crate::space::checked_pow(self.modulus as u128, self.info_coords.len())
            == Some(self.map.len() as u128)
    }

    /// Total and additive: `f(0) = 0` and `f(x + e_j) = f(x) + f(e_j)` for
    /// every unit vector `e_j`, which forces `f(a + b) = f(a) + f(b)`.
    pub fn is_linear(&self) -> bool {
        let m = self.modulus;
        let k = self.info_coords.len();
        if !self.is_total()
            || self
                .map
                .get(&vec![0; k])
                .is_none_or(|z| z.iter().any(|&x| x != 0))
        {
            return false;
        }
        let units: Vec<&Vec<u32>> = (0..k)
            .map(|j| {
                let mut e = vec![0; k];
                e[j] = 1;
                &self.map[&e]
            })
            .collect();
        self.map.iter().all(|(x, fx)| {
            (0..k).all(|j| {
                let mut y = x.clone();
                y[j] = (y[j] + 1) % m;
                let expected: Vec<u32> = fx
                    .iter()
                    .zip(units[j])
                    .map(|(&a, &b)| (a + b) % m)
                    .collect();
                self.map[&y] == expected
            })
        })
    }
}
