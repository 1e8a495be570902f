//! Seeded randomized sweeps and bundled example instances, each checked
//! against the brute-force oracle.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chain::ChainContext;
use crate::code::{BlockCode, Combine, Systematic};
use crate::error::Result;
use crate::mset::Mset;
use crate::oracle::{self, OracleReport};
use crate::pomset::{bits, Ideal, Pomset};
use crate::space::{checked_pow, SpaceConfig};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Failures kept per claim in a summary.
const KEPT_FAILURES: usize = 5;

/// Claim identifiers checked by [`check_instance`] and
/// [`check_chain_instance`].
pub mod claims {
    pub const SINGLETON_BOUND: &str = "singleton_bound";
    pub const MDS_IMPLIES_POSET_MDS: &str = "mds_implies_poset_block_mds";
    pub const FULL_COUNT_PARTITION: &str = "full_count_balls_partition";
    pub const MDS_IMPLIES_PERFECT: &str = "mds_implies_i_perfect";
    pub const MDS_IMPLIES_PERFECT_ATTAINING: &str = "mds_implies_i_perfect_on_attaining_ideals";
    pub const PERFECT_IMPLIES_MDS: &str = "i_perfect_implies_mds";
    pub const PERFECT_IMPLIES_MDS_VACUOUS: &str = "i_perfect_implies_mds_vacuous_premise";
    pub const ERROR_CORRECTING_PATHS: &str = "error_correcting_paths_agree";
    pub const ERROR_CORRECTING_SUM_READING: &str = "error_correcting_paths_agree_with_capped_sum";
    pub const ERROR_CORRECTING_ORACLE: &str = "error_correcting_matches_oracle";
    pub const MIN_DISTANCE_PATHS: &str = "min_distance_paths_agree";
    pub const MIN_DISTANCE_ORACLE: &str = "min_distance_matches_oracle";
    pub const CHAIN_BALL: &str = "chain_ball_closed_form";
    pub const CHAIN_WEIGHT: &str = "chain_weight_closed_form";
    pub const CHAIN_SINGLETON: &str = "chain_singleton_agrees";
    pub const CHAIN_PERFECT: &str = "chain_i_perfect_iff_r_perfect";
    pub const CHAIN_LINEAR_MAP: &str = "chain_r_perfect_gives_linear_map";
    pub const DUALITY: &str = "mds_iff_dual_mds";
    pub const WEIGHT_DISTRIBUTION: &str = "mds_weight_distribution";
    pub const WEIGHT_DISTRIBUTION_LITERAL: &str = "mds_weight_distribution_printed_index";
    pub const BALL_INTERSECTION: &str = "mds_ball_intersection";
    pub const BALL_INTERSECTION_LITERAL: &str = "mds_ball_intersection_printed_threshold";
}

/// Parameters of a randomized sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepParams {
    pub seed: u64,
    pub count: usize,
    pub moduli: Vec<u32>,
    pub max_labels: usize,
    pub max_block: usize,
    /// Largest `m^N` generated.
    pub max_space: usize,
}

impl SweepParams {
    /// General pomsets, `m^N ≤ 10^6`.
    pub fn general(seed: u64, count: usize) -> Self {
        SweepParams {
            seed,
            count,
            moduli: (3..=7).collect(),
            max_labels: 4,
            max_block: 3,
            max_space: 1_000_000,
        }
    }

    /// Chains, `m^N ≤ 10^5` so every vector can be visited.
    pub fn chain(seed: u64, count: usize) -> Self {
        SweepParams {
            max_space: 100_000,
            ..Self::general(seed, count)
        }
    }
}

/// How a sweep code was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Span of random rows.
    Span { rows: usize },
    /// `{(L(v), v)}` with parity on a random down-set of blocks.
    Systematic { parity_blocks: Vec<usize> },
    /// A random subset of the space.
    Subset,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: usize,
    pub config: SpaceConfig,
    pub code: BlockCode,
    pub origin: Origin,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cfg = &self.config;
        let rel: Vec<String> = cfg
            .pomset()
            .covering_relations()
            .iter()
            .map(|(a, b)| format!("{}<{}", a + 1, b + 1))
            .collect();
        write!(
            f,
            "#{} m={} pi={:?} order=[{}] |C|={} {:?}",
            self.id,
            cfg.modulus(),
            cfg.pi(),
            rel.join(","),
            self.code.len(),
            self.origin
        )
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_shape(rng: &mut ChaCha8Rng, params: &SweepParams) -> (u32, Vec<usize>) {
    loop {
        let m = params.moduli[rng.random_range(0..params.moduli.len())];
        let n = rng.random_range(1..=params.max_labels);
        let pi: Vec<usize> = (0..n)
            .map(|_| rng.random_range(1..=params.max_block))
            .collect();
        if checked_pow(m as u128, pi.iter().sum()).is_some_and(|s| s <= params.max_space as u128) {
            return (m, pi);
        }
    }
}

/// Random partial order: each pair of a random linear extension is related
/// with probability 0.35, then closed transitively.
pub fn random_pomset(rng: &mut ChaCha8Rng, n: usize, h: u32) -> Pomset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(0.35) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    Pomset::from_relations(n, h, &pairs).expect("acyclic by construction")
}

/// Chain with labels in random order.
pub fn random_chain(rng: &mut ChaCha8Rng, n: usize, h: u32) -> Pomset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let pairs: Vec<(usize, usize)> = perm.windows(2).map(|w| (w[0], w[1])).collect();
    Pomset::from_relations(n, h, &pairs).expect("acyclic by construction")
}

fn random_vector(rng: &mut ChaCha8Rng, cfg: &SpaceConfig) -> Vec<u32> {
    let m = cfg.modulus();
    let mut v = vec![0; cfg.len()];
    for b in 0..cfg.n() {
        if rng.random_bool(0.6) {
            for j in cfg.block_range(b) {
                v[j] = rng.random_range(0..m);
            }
        }
    }
    v
}

/// `{(v, L(v))}` with parity coordinates on the blocks of `parity` (a
/// down-set mask) and a random `L`.
pub fn random_systematic(
    rng: &mut ChaCha8Rng,
    cfg: &SpaceConfig,
    parity: u64,
    cap: usize,
) -> Result<BlockCode> {
    let m = cfg.modulus();
    let (inside, outside): (Vec<usize>, Vec<usize>) =
        (0..cfg.len()).partition(|&j| parity >> cfg.block_of(j) & 1 == 1);
    let mut rows: Vec<Vec<u32>> = outside
        .iter()
        .map(|&j| {
            let mut v = vec![0; cfg.len()];
            v[j] = 1;
            for &p in &inside {
                v[p] = rng.random_range(0..m);
            }
            v
        })
        .collect();
    if rows.is_empty() {
        rows.push(vec![0; cfg.len()]);
    }
    BlockCode::span(cfg.clone(), rows, cap)
}

fn random_code(rng: &mut ChaCha8Rng, cfg: &SpaceConfig) -> Result<(BlockCode, Origin)> {
    let cap = cfg.ensure_enumerable(usize::MAX)?;
    let roll: f64 = rng.random();
    if roll < 0.45 {
        let g = rng.random_range(1..=3);
        let rows = (0..g).map(|_| random_vector(rng, cfg)).collect();
        Ok((
            BlockCode::span(cfg.clone(), rows, cap)?,
            Origin::Span { rows: g },
        ))
    } else if roll < 0.85 {
        let size = rng.random_range(0..=cfg.n());
        let sets = cfg.pomset().downsets(size);
        let mask = sets[rng.random_range(0..sets.len())];
        let code = random_systematic(rng, cfg, mask, cap)?;
        Ok((
            code,
            Origin::Systematic {
                parity_blocks: bits(mask).collect(),
            },
        ))
    } else {
        let size = rng.random_range(1..=8);
        let words = (0..size).map(|_| random_vector(rng, cfg)).collect();
        Ok((
            BlockCode::from_codewords(cfg.clone(), words)?,
            Origin::Subset,
        ))
    }
}

/// Instance `id` of the general sweep. Each id draws from its own stream,
/// so instances do not depend on evaluation order.
pub fn general_instance(params: &SweepParams, id: usize) -> Result<Instance> {
    let mut rng = rng_for(params.seed, id as u64);
    let (m, pi) = random_shape(&mut rng, params);
    let p = random_pomset(&mut rng, pi.len(), m / 2);
    let config = SpaceConfig::new(m, pi, p)?;
    let (code, origin) = random_code(&mut rng, &config)?;
    Ok(Instance {
        id,
        config,
        code,
        origin,
    })
}

/// Instance `id` of the chain sweep: half constructed MDS codes, half spans.
pub fn chain_instance(params: &SweepParams, id: usize) -> Result<Instance> {
    let mut rng = rng_for(params.seed, (1 << 32) + id as u64);
    let (m, pi) = random_shape(&mut rng, params);
    let p = random_chain(&mut rng, pi.len(), m / 2);
    let config = SpaceConfig::new(m, pi, p)?;
    let cap = config.ensure_enumerable(usize::MAX)?;
    let ctx = ChainContext::new(config.clone())?;
    if rng.random_bool(0.5) {
        let r = rng.random_range(0..=config.n());
        let mask = ctx.order()[..r].iter().fold(0u64, |acc, &l| acc | 1 << l);
        let code = random_systematic(&mut rng, &config, mask, cap)?;
        Ok(Instance {
            id,
            config,
            code,
            origin: Origin::Systematic {
                parity_blocks: bits(mask).collect(),
            },
        })
    } else {
        let g = rng.random_range(1..=3);
        let rows = (0..g).map(|_| random_vector(&mut rng, &config)).collect();
        let code = BlockCode::span(config.clone(), rows, cap)?;
        Ok(Instance {
            id,
            config,
            code,
            origin: Origin::Span { rows: g },
        })
    }
}

fn full_count_ideal(cfg: &SpaceConfig, mask: u64) -> Ideal {
    let counts = (0..cfg.n())
        .map(|a| if mask >> a & 1 == 1 { cfg.height() } else { 0 })
        .collect();
    cfg.ideal(Mset::new(cfg.height(), counts).expect("bounded"))
        .expect("down-set")
}

fn words(code: &BlockCode) -> Vec<Vec<u32>> {
    code.codewords().iter().map(|w| w.to_vec()).collect()
}

/// General claims on one instance.
pub fn check_instance(inst: &Instance) -> Result<Vec<OracleReport>> {
    use claims::*;
    let cfg = &inst.config;
    let code = &inst.code;
    let cap = cfg.ensure_enumerable(usize::MAX)?;
    let size = cap as u128;
    let name = inst.to_string();
    let mut out = Vec::new();

    let s = code.singleton();
    out.push(OracleReport::verdict(SINGLETON_BOUND, &name, s.holds(), &s));
    let mds = s.attained();
    if mds {
        out.push(OracleReport::new(
            MDS_IMPLIES_POSET_MDS,
            &name,
            true,
            code.is_mds_poset_block(),
        ));
    }

    if code.len() >= 2 {
        let d = code.min_distance()?;
        if code.len() <= 3000 {
            out.push(OracleReport::new(
                MIN_DISTANCE_PATHS,
                &name,
                code.min_distance_pairwise()?,
                d,
            ));
        }
        if code.len() <= 400 {
            out.push(OracleReport::new(
                MIN_DISTANCE_ORACLE,
                &name,
                oracle::exhaustive_min_distance(cfg, &words(code)),
                Some(d),
            ));
        }
    }

    // Balls of full-count ideals: a greedy sweep assigns classes and must
    // never hit a marked vector; sampled pairs are identical or disjoint.
    let m = cfg.modulus();
    for s in 0..=cfg.n() {
        for mask in cfg.pomset().downsets(s) {
            let ideal = full_count_ideal(cfg, mask);
            let expected = checked_pow(m as u128, cfg.block_mass(mask)).unwrap();
            let offsets = cfg.ball_offsets(&ideal, cap)?;
            let mut ok =
                cfg.ball_cardinality(&ideal)? == expected && offsets.len() as u128 == expected;
            let mut class = vec![u32::MAX; cap];
            let mut classes = 0u32;
            for x in 0..cap {
                if !ok || class[x] != u32::MAX {
                    continue;
                }
                let u = cfg.vector_at(x);
                for o in &offsets {
                    let y = cfg.index_of(&cfg.add(&u, o));
                    if class[y] != u32::MAX {
                        ok = false;
                        break;
                    }
                    class[y] = classes;
                }
                classes += 1;
            }
            ok &= classes as u128 * expected == size;
            if ok && size <= 20_000 {
                let zero = vec![0; cfg.len()];
                ok &= oracle::exhaustive_ball(cfg, &zero, ideal.counts(), cap)?.len() as u128
                    == expected;
            }
            if ok {
                let mut rng = rng_for(inst.id as u64, mask);
                for _ in 0..4 {
                    let u = cfg.vector_at(rng.random_range(0..cap));
                    let v = cfg.vector_at(rng.random_range(0..cap));
                    let same = cfg.in_ball(&u, &v, &ideal)?;
                    let hits = offsets
                        .iter()
                        .filter(|o| {
                            let w = cfg.add(&u, o);
                            oracle::support(cfg, &cfg.sub(&w, &v))
                                .iter()
                                .zip(ideal.counts())
                                .all(|(a, b)| a <= b)
                        })
                        .count();
                    ok &= if same {
                        hits == offsets.len()
                    } else {
                        hits == 0
                    };
                }
            }
            out.push(OracleReport::verdict(
                FULL_COUNT_PARTITION,
                format!("{name} I={ideal}"),
                ok,
                false,
            ));
        }
    }

    if let Some(k) = code.exact_dimension() {
        let h = cfg.height();
        if mds {
            let mut bad = Vec::new();
            let mut bad_attaining = Vec::new();
            for ideal in cfg.pomset().ideals_with(s.t, s.r) {
                if !code.is_i_perfect_exhaustive(&ideal, cap)? {
                    bad.push(ideal.to_string());
                    if cfg.block_mass(ideal.root_mask()) == s.bound {
                        bad_attaining.push(ideal.to_string());
                    }
                }
            }
            out.push(OracleReport::new(
                MDS_IMPLIES_PERFECT,
                &name,
                Vec::<String>::new(),
                bad,
            ));
            out.push(OracleReport::new(
                MDS_IMPLIES_PERFECT_ATTAINING,
                &name,
                Vec::<String>::new(),
                bad_attaining,
            ));
        }
        let t = h as usize * (cfg.len() - k);
        let family = if t <= cfg.n() * h as usize {
            cfg.pomset().ideals_of_cardinality(t as u32)
        } else {
            vec![]
        };
        let mut premise = true;
        for ideal in &family {
            if !code.is_i_perfect_exhaustive(ideal, cap)? {
                premise = false;
                break;
            }
        }
        if premise {
            let claim = if family.is_empty() {
                PERFECT_IMPLIES_MDS_VACUOUS
            } else {
                PERFECT_IMPLIES_MDS
            };
            out.push(OracleReport::new(claim, &name, true, mds));
        }
    }

    let profile = code.radius_profile(cap)?;
    let disagreements: Vec<u32> = profile
        .iter()
        .filter(|p| p.error_correcting != p.criterion)
        .map(|p| p.radius)
        .collect();
    out.push(OracleReport::new(
        ERROR_CORRECTING_PATHS,
        &name,
        Vec::<u32>::new(),
        disagreements,
    ));
    let sum_disagreements: Vec<u32> = profile
        .iter()
        .filter(|p| {
            p.error_correcting != code.r_error_correcting_criterion_with(p.radius, Combine::Sum)
        })
        .map(|p| p.radius)
        .collect();
    out.push(OracleReport::new(
        ERROR_CORRECTING_SUM_READING,
        &name,
        Vec::<u32>::new(),
        sum_disagreements,
    ));
    if size * code.len() as u128 <= 40_000 {
        let w = words(code);
        let expected: Vec<bool> = profile
            .iter()
            .map(|p| oracle::is_r_error_correcting(cfg, &w, p.radius, cap))
            .collect::<Result<_>>()?;
        let computed: Vec<bool> = profile.iter().map(|p| p.error_correcting).collect();
        out.push(OracleReport::new(
            ERROR_CORRECTING_ORACLE,
            &name,
            expected,
            computed,
        ));
    }
    Ok(out)
}

/// Chain claims on one instance.
pub fn check_chain_instance(inst: &Instance) -> Result<Vec<OracleReport>> {
    use claims::*;
    let cfg = &inst.config;
    let code = &inst.code;
    let ctx = ChainContext::new(cfg.clone())?;
    let cap = cfg.ensure_enumerable(usize::MAX)?;
    let name = inst.to_string();
    let h = cfg.height();
    let top = cfg.n() as u32 * h;
    let mut out = Vec::new();
    let zero = vec![0; cfg.len()];

    let ideals: Vec<Ideal> = (0..=top)
        .map(|t| ctx.ideal_of_cardinality(t))
        .collect::<Result<_>>()?;
    let mut ball_bad = Vec::new();
    for ideal in &ideals {
        let exhaustive = oracle::exhaustive_ball(cfg, &zero, ideal.counts(), cap)?.len() as u128;
        let closed = ctx.chain_ball_cardinality(ideal);
        if exhaustive != closed {
            ball_bad.push((ideal.to_string(), exhaustive, closed));
        }
    }
    out.push(OracleReport::new(
        CHAIN_BALL,
        &name,
        Vec::<(String, u128, u128)>::new(),
        ball_bad,
    ));

    let mut weight_bad = 0usize;
    cfg.for_each_vector(cap, |v| {
        let v = cfg.vector_unchecked(v.to_vec());
        if ctx.chain_weight(&v) != cfg.weight(&v) {
            weight_bad += 1;
        }
    })?;
    out.push(OracleReport::new(CHAIN_WEIGHT, &name, 0, weight_bad));

    let cs = ctx.chain_singleton_check(code);
    out.push(OracleReport::verdict(
        CHAIN_SINGLETON,
        &name,
        cs.agrees && cs.holds,
        &cs,
    ));

    let mut perfect_bad = Vec::new();
    for ideal in &ideals {
        let i = code.is_i_perfect(ideal, cap)?;
        let r = code.is_r_perfect(ideal.cardinality(), cap)?;
        if i != r {
            perfect_bad.push(ideal.to_string());
        }
        if r && code.is_linear() && ideal.is_full_count() {
            let linear = matches!(code.systematic_function(ideal, cap)?, Systematic::Function(f) if f.is_linear() && f.is_total());
            out.push(OracleReport::new(
                CHAIN_LINEAR_MAP,
                format!("{name} r={}", ideal.cardinality()),
                true,
                linear,
            ));
        }
    }
    out.push(OracleReport::new(
        CHAIN_PERFECT,
        &name,
        Vec::<String>::new(),
        perfect_bad,
    ));

    if code.is_linear() && code.exact_dimension().is_some() {
        let d = ctx.duality_check(code, cap)?;
        out.push(OracleReport::verdict(DUALITY, &name, d.agree, &d));
    }

    let constructed = matches!(inst.origin, Origin::Systematic { .. });
    if constructed && code.exact_dimension().is_some() && code.is_mds() {
        let report = ctx.mds_weight_distribution(code)?;
        let mut hist = oracle::exhaustive_weight_histogram(cfg, &words(code));
        for i in 0..=top {
            hist.entry(i).or_insert(0);
        }
        let ok = report.closed_form_match && hist == report.a;
        out.push(OracleReport::verdict(
            WEIGHT_DISTRIBUTION,
            &name,
            ok,
            &report,
        ));
        out.push(OracleReport::verdict(
            WEIGHT_DISTRIBUTION_LITERAL,
            &name,
            report.literal_match,
            &report.literal_mismatches,
        ));
        let mut bad = Vec::new();
        let mut literal_bad = Vec::new();
        for ideal in &ideals {
            let b = ctx.mds_ball_intersection(code, ideal)?;
            if b.exhaustive != b.closed_form {
                bad.push((ideal.to_string(), b));
            }
            if b.exhaustive != b.literal_closed_form {
                literal_bad.push((ideal.to_string(), b));
            }
        }
        out.push(OracleReport::verdict(
            BALL_INTERSECTION,
            &name,
            bad.is_empty(),
            &bad,
        ));
        out.push(OracleReport::verdict(
            BALL_INTERSECTION_LITERAL,
            &name,
            literal_bad.is_empty(),
            &literal_bad,
        ));
    }
    Ok(out)
}

/// Pass/fail tally for one claim.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimSummary {
    pub claim: String,
    pub checked: usize,
    pub violations: usize,
    pub failures: Vec<OracleReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub params: SweepParams,
    pub instances: usize,
    pub errors: Vec<String>,
    pub claims: Vec<ClaimSummary>,
}

impl SweepReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimSummary> {
        self.claims.iter().find(|c| c.claim == id)
    }

    pub fn violations(&self, id: &str) -> usize {
        self.claim(id).map_or(0, |c| c.violations)
    }

    pub fn checked(&self, id: &str) -> usize {
        self.claim(id).map_or(0, |c| c.checked)
    }

    pub fn all_pass(&self) -> bool {
        self.errors.is_empty() && self.claims.iter().all(|c| c.violations == 0)
    }
}

/// Tallies reports by claim, keeping the first few failures of each.
pub fn summarize(reports: impl IntoIterator<Item = OracleReport>) -> Vec<ClaimSummary> {
    let mut by_claim: BTreeMap<String, ClaimSummary> = BTreeMap::new();
    for r in reports {
        let s = by_claim
            .entry(r.claim.clone())
            .or_insert_with(|| ClaimSummary {
                claim: r.claim.clone(),
                checked: 0,
                violations: 0,
                failures: Vec::new(),
            });
        s.checked += 1;
        if !r.pass {
            s.violations += 1;
            if s.failures.len() < KEPT_FAILURES {
                s.failures.push(r);
            }
        }
    }
    by_claim.into_values().collect()
}

fn run(
    params: SweepParams,
    build: fn(&SweepParams, usize) -> Result<Instance>,
    check: fn(&Instance) -> Result<Vec<OracleReport>>,
) -> SweepReport {
    let results: Vec<Result<Vec<OracleReport>>> = (0..params.count)
        .into_par_iter()
        .map(|id| check(&build(&params, id)?))
        .collect();
    let mut errors = Vec::new();
    let mut reports = Vec::new();
    for (id, r) in results.into_iter().enumerate() {
        match r {
            Ok(rs) => reports.extend(rs),
            Err(e) => errors.push(format!("#{id}: {e}")),
        }
    }
    SweepReport {
        instances: params.count,
        errors,
        claims: summarize(reports),
        params,
    }
}

/// General sweep over the current rayon pool.
pub fn run_general_sweep(params: SweepParams) -> SweepReport {
    run(params, general_instance, check_instance)
}

/// Chain sweep over the current rayon pool.
pub fn run_chain_sweep(params: SweepParams) -> SweepReport {
    run(params, chain_instance, check_chain_instance)
}

/// The worked examples used throughout the tests and by `verify --all`.
pub mod bundled {
    use super::*;

    /// `Z_10^3`, antichain on three labels of height 5, `π = (1,1,1)`.
    pub fn z10_config() -> SpaceConfig {
        SpaceConfig::new(10, vec![1, 1, 1], Pomset::antichain(3, 5).unwrap()).unwrap()
    }

    /// `{(a,0,0), (a,5,0)}`.
    pub fn z10_code() -> BlockCode {
        let words = (0..10)
            .flat_map(|a| [vec![a, 0, 0], vec![a, 5, 0]])
            .collect();
        BlockCode::from_codewords(z10_config(), words).unwrap()
    }

    /// `Z_5^7`, `1 < 2`, `1 < 3`, height 2, `π = (2,4,1)`.
    pub fn z5_config() -> SpaceConfig {
        let p = Pomset::from_relations(3, 2, &[(0, 1), (0, 2)]).unwrap();
        SpaceConfig::new(5, vec![2, 4, 1], p).unwrap()
    }

    pub fn z5_code() -> BlockCode {
        BlockCode::span(z5_config(), vec![vec![0, 3, 0, 2, 0, 0, 1]], 1_000_000).unwrap()
    }

    /// `Z_5^7` with the chain `1 < 2 < 3`.
    pub fn z5_chain_config() -> SpaceConfig {
        SpaceConfig::new(5, vec![2, 4, 1], Pomset::chain(3, 2).unwrap()).unwrap()
    }

    pub fn ideal(cfg: &SpaceConfig, counts: &[u32]) -> Ideal {
        cfg.ideal(Mset::new(cfg.height(), counts.to_vec()).unwrap())
            .unwrap()
    }
}

/// Every claim about the bundled examples.
pub fn bundled_reports(cap: usize) -> Result<Vec<OracleReport>> {
    use bundled::*;
    let mut out = Vec::new();

    let cfg = z10_config();
    let code = z10_code();
    let name = "Z_10^3 antichain, {(a,0,0),(a,5,0)}";
    let i = ideal(&cfg, &[0, 2, 5]);
    let zero = vec![0; 3];
    out.push(OracleReport::new("code_size", name, 20, code.len()));
    out.push(OracleReport::new(
        "ball_cardinality",
        name,
        50,
        cfg.ball_cardinality(&i)?,
    ));
    out.push(OracleReport::new(
        "ball_cardinality_oracle",
        name,
        50,
        oracle::exhaustive_ball(&cfg, &zero, i.counts(), cap)?.len(),
    ));
    out.push(OracleReport::new(
        "i_perfect",
        name,
        true,
        code.is_i_perfect(&i, cap)?,
    ));
    out.push(OracleReport::new(
        "i_perfect_oracle",
        name,
        true,
        oracle::is_i_perfect(&cfg, &words(&code), i.counts(), cap)?,
    ));
    let witness = match code.systematic_function(&i, cap)? {
        Systematic::NotAFunction { collisions } => collisions
            .into_iter()
            .find(|c| c.info == vec![1])
            .map(|c| c.images),
        Systematic::Function(_) => None,
    };
    out.push(OracleReport::new(
        "systematic_collision",
        name,
        Some(vec![vec![0, 0], vec![5, 0]]),
        witness,
    ));
    out.push(OracleReport::new(
        "min_distance",
        name,
        oracle::exhaustive_min_distance(&cfg, &words(&code)),
        Some(code.min_distance()?),
    ));

    let cfg = z5_config();
    let code = z5_code();
    let name = "Z_5^7, 1<2, 1<3, (0,3,0,2,0,0,1)";
    out.push(OracleReport::new("code_size", name, 5, code.len()));
    out.push(OracleReport::new(
        "codeword_weights",
        name,
        vec![0, 5, 5, 5, 5],
        code.codewords()
            .iter()
            .map(|w| cfg.weight(w))
            .collect::<Vec<_>>(),
    ));
    out.push(OracleReport::new(
        "min_distance",
        name,
        5,
        code.min_distance()?,
    ));
    out.push(OracleReport::new(
        "min_distance_oracle",
        name,
        Some(5),
        oracle::exhaustive_min_distance(&cfg, &words(&code)),
    ));
    let s = code.singleton();
    out.push(OracleReport::new(
        "singleton",
        name,
        (2, 6, 6),
        (s.r, s.max_sum, s.bound),
    ));
    let mut family: Vec<String> = code
        .singleton_family(false)
        .iter()
        .map(|i| i.to_string())
        .collect();
    family.sort();
    let mut listed = vec!["{2/1, 2/2}", "{2/1, 2/3}", "{2/1, 1/2}", "{2/1, 1/3}"];
    listed.sort();
    out.push(OracleReport::new("singleton_family", name, listed, family));
    out.push(OracleReport::new("is_mds", name, true, code.is_mds()));
    out.push(OracleReport::new(
        "is_mds_poset_block",
        name,
        true,
        code.is_mds_poset_block(),
    ));
    for (counts, expected) in [
        ([2, 2, 0], true),
        ([2, 0, 2], true),
        ([2, 1, 0], false),
        ([2, 0, 1], false),
    ] {
        let i = ideal(&cfg, &counts);
        out.push(OracleReport::new(
            format!("i_perfect {i}"),
            name,
            expected,
            code.is_i_perfect(&i, cap)?,
        ));
        out.push(OracleReport::new(
            format!("i_perfect_oracle {i}"),
            name,
            expected,
            oracle::is_i_perfect(&cfg, &words(&code), i.counts(), cap)?,
        ));
    }
    out.push(OracleReport::new(
        "dual_size",
        name,
        5usize.pow(6),
        code.dual(cap)?.len(),
    ));

    let cfg = z5_chain_config();
    let ctx = ChainContext::new(cfg.clone())?;
    let name = "Z_5^7 chain";
    let v = cfg.vector(vec![0, 0, 0, 0, 0, 0, 2])?;
    out.push(OracleReport::new(
        "chain_weight",
        name,
        oracle::weight(&cfg, &v),
        ctx.chain_weight(&v),
    ));
    let i = ideal(&cfg, &[2, 1, 0]);
    out.push(OracleReport::new(
        "chain_ball",
        name,
        oracle::exhaustive_ball(&cfg, &[0; 7], i.counts(), cap)?.len() as u128,
        ctx.chain_ball_cardinality(&i),
    ));
    Ok(out)
}
