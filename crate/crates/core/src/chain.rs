//! Closed forms for spaces whose pomset is a chain. Any total order is
//! accepted; positions count from the bottom of the chain.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::code::BlockCode;
use crate::error::{Error, Result};
use crate::mset::Mset;
use crate::pomset::Ideal;
use crate::space::{checked_pow, lee_weight, BlockVector, SpaceConfig};

/// A chain space with its labels listed bottom to top.
#[derive(Clone, Debug)]
pub struct ChainContext {
    config: SpaceConfig,
    order: Vec<usize>,
    position: Vec<usize>,
}

fn pow(base: u128, exp: usize) -> u128 {
    checked_pow(base, exp).unwrap_or(u128::MAX)
}

impl ChainContext {
    pub fn new(config: SpaceConfig) -> Result<Self> {
        let p = config.pomset();
        if !p.is_chain() {
            return Err(Error::Precondition("pomset is not a chain".into()));
        }
        let mut order: Vec<usize> = (0..p.n()).collect();
        order.sort_by_key(|&a| p.below_mask(a).count_ones());
        let mut position = vec![0; order.len()];
        for (pos, &label) in order.iter().enumerate() {
            position[label] = pos;
        }
        Ok(ChainContext {
            config,
            order,
            position,
        })
    }

    pub fn config(&self) -> &SpaceConfig {
        &self.config
    }

    /// Labels from the bottom of the chain to the top.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, label: usize) -> usize {
        self.position[label]
    }

    /// Block length at a chain position.
    pub fn k_at(&self, pos: usize) -> usize {
        self.config.block_len(self.order[pos])
    }

    /// `Σ k` over the lowest `count` positions.
    pub fn mass_below(&self, count: usize) -> usize {
        (0..count).map(|p| self.k_at(p)).sum()
    }

    /// `c + pos·⌊m/2⌋` for the topmost nonzero block, `c` its largest Lee
    /// weight.
    pub fn chain_weight(&self, v: &BlockVector) -> u32 {
        let cfg = &self.config;
        let m = cfg.modulus();
        (0..cfg.n())
            .rev()
            .map(|pos| {
                let block = &v[cfg.block_range(self.order[pos])];
                (
                    pos,
                    block.iter().map(|&x| lee_weight(x, m)).max().unwrap_or(0),
                )
            })
            .find(|&(_, c)| c > 0)
            .map_or(0, |(pos, c)| c + pos as u32 * cfg.height())
    }

    /// The unique ideal of cardinality `t`.
    pub fn ideal_of_cardinality(&self, t: u32) -> Result<Ideal> {
        let cfg = &self.config;
        let h = cfg.height();
        if t > cfg.n() as u32 * h {
            return Err(Error::Precondition(format!("no ideal of cardinality {t}")));
        }
        let mut counts = vec![0; cfg.n()];
        let mut left = t;
        for &label in &self.order {
            let c = left.min(h);
            counts[label] = c;
            left -= c;
        }
        cfg.ideal(Mset::new(h, counts)?)
    }

    /// `(1 + 2c)^{k_top} m^{Σ others}` for a partial-count ideal with
    /// `c = |I| - (|I*| - 1)⌊m/2⌋`; `m^{Σ k}` at full count.
    pub fn chain_ball_cardinality(&self, ideal: &Ideal) -> u128 {
        let cfg = &self.config;
        let m = cfg.modulus() as u128;
        let roots = ideal.root_size();
        if roots == 0 {
            return 1;
        }
        let all = self.mass_below(roots);
        if ideal.is_full_count() {
            return pow(m, all);
        }
        let c = ideal.cardinality() - (roots as u32 - 1) * cfg.height();
        let top = self.k_at(roots - 1);
        pow(1 + 2 * c as u128, top).saturating_mul(pow(m, all - top))
    }

    /// The chain form of the Singleton bound, evaluated on the unique
    /// full-count ideal with `⌊(d-1)/⌊m/2⌋⌋` roots.
    pub fn chain_singleton_check(&self, code: &BlockCode) -> ChainSingleton {
        let generic = code.singleton();
        let sum = self.mass_below(generic.r);
        ChainSingleton {
            r: generic.r,
            sum,
            bound: generic.bound,
            holds: sum <= generic.bound,
            agrees: sum == generic.max_sum,
        }
    }

    /// I-perfect and `|I|`-perfect coincide on a chain; returns the common
    /// value.
    pub fn chain_perfect_equivalence(
        &self,
        code: &BlockCode,
        ideal: &Ideal,
        cap: usize,
    ) -> Result<bool> {
        let i_perfect = code.is_i_perfect(ideal, cap)?;
        let r_perfect = code.is_r_perfect(ideal.cardinality(), cap)?;
        if i_perfect != r_perfect {
            return Err(Error::InvariantViolation(format!(
                "{ideal}-perfect is {i_perfect} but {}-perfect is {r_perfect}",
                ideal.cardinality()
            )));
        }
        Ok(i_perfect)
    }

    fn require_mds(&self, code: &BlockCode) -> Result<usize> {
        if !code.is_linear() {
            return Err(Error::Precondition("code is not linear".into()));
        }
        let k = code.exact_dimension().ok_or_else(|| {
            Error::Precondition(format!("|C| = {} is not a power of m", code.len()))
        })?;
        if !code.is_mds() {
            return Err(Error::Precondition("code is not MDS".into()));
        }
        Ok(k)
    }

    /// Codewords inside `B_I(0)`, next to the closed form under the threshold
    /// `|I| ≤ ⌊m/2⌋r` and under the threshold `|I| ≤ ⌊m/2⌋(N - k)`.
    pub fn mds_ball_intersection(
        &self,
        code: &BlockCode,
        ideal: &Ideal,
    ) -> Result<BallIntersection> {
        let k = self.require_mds(code)?;
        let cfg = &self.config;
        let h = cfg.height();
        let n_minus_k = cfg.len() - k;
        let r = code.singleton().r as u32;
        let mut exhaustive = 0u128;
        for c in code.codewords() {
            if cfg.in_ball(&cfg.zero(), c, ideal)? {
                exhaustive += 1;
            }
        }
        let above = self.intersection_above_threshold(ideal, n_minus_k);
        let size = ideal.cardinality();
        Ok(BallIntersection {
            exhaustive,
            closed_form: if size <= h * r { 1 } else { above },
            literal_closed_form: if size <= h * n_minus_k as u32 {
                1
            } else {
                above
            },
        })
    }

    fn intersection_above_threshold(&self, ideal: &Ideal, n_minus_k: usize) -> u128 {
        let m = self.config.modulus() as u128;
        let roots = ideal.root_size();
        let exp = self.mass_below(roots) as i64 - n_minus_k as i64;
        if exp < 0 {
            return 0;
        }
        if ideal.is_full_count() {
            return pow(m, exp as usize);
        }
        let c = ideal.cardinality() - (roots as u32 - 1) * self.config.height();
        let top = self.k_at(roots - 1);
        if exp < top as i64 {
            return 0;
        }
        pow(1 + 2 * c as u128, top).saturating_mul(pow(m, exp as usize - top))
    }

    /// `A_i` for `0 ≤ i ≤ n⌊m/2⌋` by counting codeword weights.
    pub fn weight_histogram(&self, code: &BlockCode) -> BTreeMap<u32, u128> {
        let cfg = &self.config;
        let mut a: BTreeMap<u32, u128> = (0..=cfg.n() as u32 * cfg.height())
            .map(|i| (i, 0))
            .collect();
        for c in code.codewords() {
            *a.get_mut(&cfg.weight(c)).unwrap() += 1;
        }
        a
    }

    /// Closed-form `A_i` for a linear MDS code with `|C| = m^k` and
    /// `d = min distance`. Write `i = ⌊m/2⌋t + j` with `0 < j ≤ ⌊m/2⌋`; the
    /// top block of a weight-`i` codeword is position `t`. `reading` picks
    /// the block length used at `j = 1`.
    pub fn closed_form_count(&self, i: u32, d: u32, k: usize, reading: Reading) -> Option<u128> {
        let cfg = &self.config;
        let h = cfg.height();
        let m = cfg.modulus() as u128;
        let n_minus_k = (cfg.len() - k) as i64;
        if i == 0 {
            return Some(1);
        }
        if i < d {
            return Some(0);
        }
        // one-based: full case at i = ht uses k_t and Σ_{1..t-1}
        if i.is_multiple_of(h) {
            let t = (i / h) as usize;
            let exp = self.mass_below(t - 1) as i64 - n_minus_k;
            let kt = self.k_at(t - 1);
            return (exp >= 0)
                .then(|| (pow(m, kt) - pow(2 * h as u128 - 1, kt)) * pow(m, exp as usize));
        }
        let t = (i / h) as usize;
        let j = (i % h) as u128;
        let exp = self.mass_below(t) as i64 - n_minus_k;
        if exp < 0 {
            return None;
        }
        let scale = pow(m, exp as usize);
        // one-based k_{t+1} is position t
        let next = self.k_at(t);
        if j == 1 {
            let kk = match reading {
                Reading::Next => next,
                Reading::Literal => self.k_at(t.checked_sub(1)?),
            };
            return Some((pow(3, kk) - 1) * scale);
        }
        Some((pow(2 * j + 1, next) - pow(2 * j - 1, next)) * scale)
    }

    /// Weight distribution of a linear MDS code, compared against the
    /// closed form under both readings.
    pub fn mds_weight_distribution(&self, code: &BlockCode) -> Result<WeightDistributionReport> {
        let k = self.require_mds(code)?;
        let d = code
            .min_distance()
            .unwrap_or(self.config.n() as u32 * self.config.height() + 1);
        let a = self.weight_histogram(code);
        let compare = |reading| -> Vec<Mismatch> {
            a.iter()
                .filter_map(|(&i, &count)| {
                    let closed = self.closed_form_count(i, d, k, reading);
                    (closed != Some(count)).then_some(Mismatch {
                        i,
                        oracle: count,
                        closed_form: closed,
                    })
                })
                .collect()
        };
        let mismatches = compare(Reading::Next);
        let literal_mismatches = compare(Reading::Literal);
        let total: u128 = a.values().sum();
        if total != code.len() as u128 {
            return Err(Error::InvariantViolation(format!(
                "Σ A_i = {total} but |C| = {}",
                code.len()
            )));
        }
        Ok(WeightDistributionReport {
            closed_form_match: mismatches.is_empty(),
            literal_match: literal_mismatches.is_empty(),
            a,
            mismatches,
            literal_mismatches,
        })
    }

    /// MDS status of `C` here and of `C⊥` in the reversed chain.
    pub fn duality_check(&self, code: &BlockCode, cap: usize) -> Result<DualityReport> {
        if code.exact_dimension().is_none() {
            return Err(Error::Precondition(format!(
                "|C| = {} is not a power of m",
                code.len()
            )));
        }
        let dual = code.dual(cap)?.with_config(self.config.dual())?;
        let code_mds = code.is_mds();
        let dual_mds = dual.is_mds();
        Ok(DualityReport {
            code_mds,
            dual_mds,
            dual_size: dual.len(),
            agree: code_mds == dual_mds,
        })
    }

    /// `{(L(v), v)}` with the lowest `r` positions as parity: row `j` of
    /// `matrix` is `L` applied to the `j`-th information coordinate, both
    /// sides listed in block-label order.
    pub fn systematic_code(&self, r: usize, matrix: &[Vec<u32>], cap: usize) -> Result<BlockCode> {
        let cfg = &self.config;
        if r > cfg.n() {
            return Err(Error::Precondition(format!(
                "{r} parity positions exceed {} blocks",
                cfg.n()
            )));
        }
        let parity = self.coords(0..r);
        let info = self.coords(r..cfg.n());
        if matrix.len() != info.len() || matrix.iter().any(|row| row.len() != parity.len()) {
            return Err(Error::ShapeMismatch(format!(
                "expected a {}×{} matrix",
                info.len(),
                parity.len()
            )));
        }
        let mut rows = Vec::with_capacity(info.len());
        for (row, &j) in matrix.iter().zip(&info) {
            let mut v = vec![0; cfg.len()];
            v[j] = 1;
            for (&x, &p) in row.iter().zip(&parity) {
                v[p] = x % cfg.modulus();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            rows.push(vec![0; cfg.len()]);
        }
        BlockCode::span(cfg.clone(), rows, cap)
    }

    /// Coordinates of the blocks at the given chain positions, ascending.
    pub fn coords(&self, positions: std::ops::Range<usize>) -> Vec<usize> {
        let mut out: Vec<usize> = positions
            .flat_map(|pos| self.config.block_range(self.order[pos]))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Which block length the `j = 1` case uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    /// One-based `k_{t+1}`: the block holding the top nonzero entry.
    Next,
    /// One-based `k_t`, as printed.
    Literal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainSingleton {
    pub r: usize,
    /// `Σ k_i` over the unique full-count ideal with `r` roots.
    pub sum: usize,
    pub bound: usize,
    pub holds: bool,
    /// Equal to the generic `max_sum`.
    pub agrees: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BallIntersection {
    pub exhaustive: u128,
    pub closed_form: u128,
    pub literal_closed_form: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub i: u32,
    pub oracle: u128,
    /// `None` when the formula is undefined at `i`.
    pub closed_form: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDistributionReport {
    #[serde(rename = "A", serialize_with = "string_keys")]
    pub a: BTreeMap<u32, u128>,
    pub closed_form_match: bool,
    pub mismatches: Vec<Mismatch>,
    pub literal_match: bool,
    pub literal_mismatches: Vec<Mismatch>,
}

fn string_keys<S: serde::Serializer>(
    a: &BTreeMap<u32, u128>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(a.iter().map(|(i, c)| (i.to_string(), *c as u64)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub code_mds: bool,
    pub dual_mds: bool,
    pub dual_size: usize,
    pub agree: bool,
}
