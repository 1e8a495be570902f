//! Brute-force reference implementations.
//!
//! Everything here works straight from the definitions: ideals by their
//! membership predicate over `(count, label)` elements, weights by building
//! generated ideals element by element, balls and distances by scanning the
//! whole space. Nothing here calls the optimized paths in `pomset`,
//! `space`, `code` or `chain`; only plain data accessors are used.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pomset::Pomset;
use crate::space::SpaceConfig;

/// Outcome of checking one claim on one instance.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub claim: String,
    pub instance: String,
    pub expected: serde_json::Value,
    pub computed: serde_json::Value,
    pub pass: bool,
}

impl OracleReport {
    pub fn new(
        claim: impl Into<String>,
        instance: impl Into<String>,
        expected: impl Serialize,
        computed: impl Serialize,
    ) -> Self {
        let expected = serde_json::to_value(expected).unwrap_or(serde_json::Value::Null);
        let computed = serde_json::to_value(computed).unwrap_or(serde_json::Value::Null);
        let pass = expected == computed;
        OracleReport {
            claim: claim.into(),
            instance: instance.into(),
            expected,
            computed,
            pass,
        }
    }

    /// A report whose verdict is decided by the caller.
    pub fn verdict(
        claim: impl Into<String>,
        instance: impl Into<String>,
        pass: bool,
        detail: impl Serialize,
    ) -> Self {
        let detail = serde_json::to_value(detail).unwrap_or(serde_json::Value::Null);
        OracleReport {
            claim: claim.into(),
            instance: instance.into(),
            expected: serde_json::Value::Bool(true),
            computed: if pass {
                serde_json::Value::Bool(true)
            } else {
                detail
            },
            pass,
        }
    }
}

fn lee(x: u32, m: u32) -> u32 {
    let a = x % m;
    let b = (m - a) % m;
    if a < b {
        a
    } else {
        b
    }
}

/// The element set `{(p, a) : 1 <= p <= counts[a]}` of an mset.
fn elements(counts: &[u32]) -> BTreeSet<(u32, usize)> {
    let mut out = BTreeSet::new();
    for (a, &c) in counts.iter().enumerate() {
        for p in 1..=c {
            out.insert((p, a));
        }
    }
    out
}

/// `q/b R p/a` for `b != a`: the relation holds for every count pair when
/// `b` lies below `a`.
fn related(p: &Pomset, b: usize, a: usize) -> bool {
    b != a && p.is_below(b, a)
}

/// Ideal predicate read off the definition: `p/a ∈ I` and `q/b R p/a`
/// (`b ≠ a`) imply `q/b ∈ I`.
pub fn is_ideal(p: &Pomset, counts: &[u32]) -> bool {
    let h = p.height();
    if counts.len() != p.n() || counts.iter().any(|&c| c > h) {
        return false;
    }
    let members = elements(counts);
    members.iter().all(|&(_, a)| {
        (0..p.n()).all(|b| !related(p, b, a) || (1..=h).all(|q| members.contains(&(q, b))))
    })
}

/// Every count vector in `{0..h}^n` passing [`is_ideal`], lexicographic.
pub fn exhaustive_ideals(p: &Pomset, cap: usize) -> Result<Vec<Vec<u32>>> {
    let h = p.height();
    let total = (h as u128 + 1)
        .checked_pow(p.n() as u32)
        .unwrap_or(u128::MAX);
    if total > cap as u128 {
        return Err(Error::CapExceeded {
            required: total,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut v = vec![0u32; p.n()];
    loop {
        if is_ideal(p, &v) {
            out.push(v.clone());
        }
        let mut i = v.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if v[i] < h {
                v[i] += 1;
                break;
            }
            v[i] = 0;
        }
    }
}

/// `⟨S⟩ = ⋃_{p/a ∈ S} ({p/a} ∪ {q/b ∈ M : q/b R p/a})`, as counts.
pub fn generated_ideal(p: &Pomset, s: &[u32]) -> Vec<u32> {
    let h = p.height();
    let mut members = BTreeSet::new();
    for (pa, a) in elements(s) {
        members.insert((pa, a));
        for b in 0..p.n() {
            if related(p, b, a) {
                for q in 1..=h {
                    members.insert((q, b));
                }
            }
        }
    }
    let mut counts = vec![0u32; p.n()];
    for (q, b) in members {
        counts[b] = counts[b].max(q);
    }
    counts
}

/// Intersection of all ideals containing `s`.
pub fn smallest_ideal_containing(p: &Pomset, s: &[u32], cap: usize) -> Result<Vec<u32>> {
    let mut best = vec![p.height(); p.n()];
    for ideal in exhaustive_ideals(p, cap)? {
        if s.iter().zip(&ideal).all(|(a, b)| a <= b) {
            for (x, y) in best.iter_mut().zip(&ideal) {
                *x = (*x).min(*y);
            }
        }
    }
    Ok(best)
}

/// Block support counts: largest Lee weight in each block.
pub fn support(cfg: &SpaceConfig, v: &[u32]) -> Vec<u32> {
    (0..cfg.n())
        .map(|i| {
            let mut best = 0;
            for j in cfg.block_range(i) {
                best = best.max(lee(v[j], cfg.modulus()));
            }
            best
        })
        .collect()
}

fn diff(cfg: &SpaceConfig, u: &[u32], v: &[u32]) -> Vec<u32> {
    let m = cfg.modulus();
    u.iter()
        .zip(v)
        .map(|(&a, &b)| (a + m - b % m) % m)
        .collect()
}

pub fn weight(cfg: &SpaceConfig, v: &[u32]) -> u32 {
    elements(&generated_ideal(cfg.pomset(), &support(cfg, v))).len() as u32
}

pub fn distance(cfg: &SpaceConfig, u: &[u32], v: &[u32]) -> u32 {
    weight(cfg, &diff(cfg, u, v))
}

/// Number of labels in the order-ideal closure of the nonzero blocks.
pub fn poset_weight(cfg: &SpaceConfig, v: &[u32]) -> u32 {
    let p = cfg.pomset();
    let nonzero: Vec<usize> = (0..cfg.n())
        .filter(|&i| cfg.block_range(i).any(|j| v[j] != 0))
        .collect();
    (0..cfg.n())
        .filter(|&b| nonzero.iter().any(|&a| a == b || p.is_below(b, a)))
        .count() as u32
}

/// All vectors of the space, lexicographic.
pub fn all_vectors(cfg: &SpaceConfig, cap: usize) -> Result<Vec<Vec<u32>>> {
    let m = cfg.modulus() as u128;
    let total = m.checked_pow(cfg.len() as u32).unwrap_or(u128::MAX);
    if total > cap as u128 {
        return Err(Error::CapExceeded {
            required: total,
            cap,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total as usize {
        let mut v = vec![0u32; cfg.len()];
        let mut rest = idx;
        for x in v.iter_mut().rev() {
            *x = (rest % m as usize) as u32;
            rest /= m as usize;
        }
        out.push(v);
    }
    Ok(out)
}

fn submset(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `{v : supp(u - v) ⊆ K}` by scanning the space.
pub fn exhaustive_ball(
    cfg: &SpaceConfig,
    u: &[u32],
    k: &[u32],
    cap: usize,
) -> Result<Vec<Vec<u32>>> {
    Ok(all_vectors(cfg, cap)?
        .into_iter()
        .filter(|v| submset(&support(cfg, &diff(cfg, u, v)), k))
        .collect())
}

/// `{v : d(u, v) <= r}` by scanning the space.
pub fn exhaustive_metric_ball(
    cfg: &SpaceConfig,
    u: &[u32],
    r: u32,
    cap: usize,
) -> Result<Vec<Vec<u32>>> {
    Ok(all_vectors(cfg, cap)?
        .into_iter()
        .filter(|v| distance(cfg, u, v) <= r)
        .collect())
}

/// Minimum distance over all pairs of distinct words.
pub fn exhaustive_min_distance(cfg: &SpaceConfig, words: &[Vec<u32>]) -> Option<u32> {
    let mut best = None;
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            if u != v {
                let d = distance(cfg, u, v);
                best = Some(best.map_or(d, |b: u32| b.min(d)));
            }
        }
    }
    best
}

pub fn exhaustive_weight_histogram(cfg: &SpaceConfig, words: &[Vec<u32>]) -> BTreeMap<u32, u128> {
    let mut out = BTreeMap::new();
    for w in words {
        *out.entry(weight(cfg, w)).or_insert(0) += 1;
    }
    out
}

/// All `x` with `Σ_j x_j c_j ≡ 0 (mod m)` for every word `c`.
pub fn exhaustive_dual(cfg: &SpaceConfig, words: &[Vec<u32>], cap: usize) -> Result<Vec<Vec<u32>>> {
    let m = cfg.modulus() as u64;
    Ok(all_vectors(cfg, cap)?
        .into_iter()
        .filter(|x| {
            words.iter().all(|c| {
                x.iter()
                    .zip(c)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum::<u64>()
                    % m
                    == 0
            })
        })
        .collect())
}

/// Span of `rows` by running over all coefficient tuples in `{0..m-1}^g`.
pub fn exhaustive_span(cfg: &SpaceConfig, rows: &[Vec<u32>], cap: usize) -> Result<Vec<Vec<u32>>> {
    let m = cfg.modulus();
    let tuples = (m as u128)
        .checked_pow(rows.len() as u32)
        .unwrap_or(u128::MAX);
    if tuples > cap as u128 {
        return Err(Error::CapExceeded {
            required: tuples,
            cap,
        });
    }
    let mut out = BTreeSet::new();
    for t in 0..tuples as usize {
        let mut rest = t;
        let mut v = vec![0u32; cfg.len()];
        for row in rows {
            let a = (rest % m as usize) as u32;
            rest /= m as usize;
            for (x, &r) in v.iter_mut().zip(row) {
                *x = (*x + a * r) % m;
            }
        }
        out.insert(v);
    }
    Ok(out.into_iter().collect())
}

/// For every vector of the space, the number of codewords whose ball
/// contains it. `member(c, v)` decides `v ∈ ball(c)`.
fn coverage(
    cfg: &SpaceConfig,
    words: &[Vec<u32>],
    cap: usize,
    member: impl Fn(&[u32], &[u32]) -> bool,
) -> Result<Vec<usize>> {
    Ok(all_vectors(cfg, cap)?
        .iter()
        .map(|v| words.iter().filter(|c| member(c, v)).count())
        .collect())
}

/// I-perfect by definition: every vector lies in exactly one `B_K(c)`.
pub fn is_i_perfect(cfg: &SpaceConfig, words: &[Vec<u32>], k: &[u32], cap: usize) -> Result<bool> {
    let cov = coverage(cfg, words, cap, |c, v| {
        submset(&support(cfg, &diff(cfg, c, v)), k)
    })?;
    Ok(cov.iter().all(|&x| x == 1))
}

/// r-perfect by definition.
pub fn is_r_perfect(cfg: &SpaceConfig, words: &[Vec<u32>], r: u32, cap: usize) -> Result<bool> {
    let cov = coverage(cfg, words, cap, |c, v| distance(cfg, c, v) <= r)?;
    Ok(cov.iter().all(|&x| x == 1))
}

/// r-error-correcting by definition: radius-r balls pairwise disjoint.
pub fn is_r_error_correcting(
    cfg: &SpaceConfig,
    words: &[Vec<u32>],
    r: u32,
    cap: usize,
) -> Result<bool> {
    let cov = coverage(cfg, words, cap, |c, v| distance(cfg, c, v) <= r)?;
    Ok(cov.iter().all(|&x| x <= 1))
}

/// Checks closure under addition and presence of zero.
pub fn is_linear(cfg: &SpaceConfig, words: &[Vec<u32>]) -> bool {
    let m = cfg.modulus();
    let set: HashSet<&Vec<u32>> = words.iter().collect();
    set.contains(&vec![0u32; cfg.len()])
        && words.iter().all(|a| {
            words.iter().all(|b| {
                let s: Vec<u32> = a.iter().zip(b).map(|(&x, &y)| (x + y) % m).collect();
                set.contains(&s)
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1_000_000;

    #[test]
    fn ideal_counts() {
        assert_eq!(
            exhaustive_ideals(&Pomset::antichain(3, 5).unwrap(), CAP)
                .unwrap()
                .len(),
            216
        );
        let chain = exhaustive_ideals(&Pomset::chain(2, 2).unwrap(), CAP).unwrap();
        assert_eq!(
            chain,
            vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![2, 1], vec![2, 2]]
        );
        let vee = Pomset::from_relations(3, 2, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(exhaustive_ideals(&vee, CAP).unwrap().len(), 11);
        assert!(exhaustive_ideals(&Pomset::antichain(10, 5).unwrap(), 1000).is_err());
    }

    #[test]
    fn worked_instances() {
        let vee = Pomset::from_relations(3, 2, &[(0, 1), (0, 2)]).unwrap();
        let cfg = SpaceConfig::new(5, vec![2, 4, 1], vee).unwrap();
        assert_eq!(weight(&cfg, &[0, 3, 0, 2, 0, 0, 1]), 5);
        let words = exhaustive_span(&cfg, &[vec![0, 3, 0, 2, 0, 0, 1]], CAP).unwrap();
        assert_eq!(words.len(), 5);
        assert_eq!(exhaustive_min_distance(&cfg, &words), Some(5));

        let z = SpaceConfig::new(10, vec![1, 1, 1], Pomset::antichain(3, 5).unwrap()).unwrap();
        assert_eq!(
            exhaustive_ball(&z, &[3, 0, 0], &[0, 2, 5], CAP)
                .unwrap()
                .len(),
            50
        );
        assert_eq!(
            exhaustive_dual(&z, &[vec![0, 0, 0]], CAP).unwrap().len(),
            1000
        );
    }

    #[test]
    fn generated_is_smallest() {
        let vee = Pomset::from_relations(3, 2, &[(0, 1), (0, 2)]).unwrap();
        let s = [2, 2, 1];
        assert_eq!(generated_ideal(&vee, &s), vec![2, 2, 1]);
        assert_eq!(
            smallest_ideal_containing(&vee, &s, CAP).unwrap(),
            vec![2, 2, 1]
        );
        assert_eq!(generated_ideal(&vee, &[0, 0, 1]), vec![2, 0, 1]);
    }
}
