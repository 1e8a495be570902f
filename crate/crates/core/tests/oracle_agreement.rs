//! Library paths against the brute-force oracle on small random spaces.

use std::collections::BTreeSet;

use proptest::prelude::*;

use pbm_core::oracle;
use pbm_core::{BlockCode, IdealFilter, Mset, Pomset, SpaceConfig};

const CAP: usize = 1_000_000;

/// Relations come from pairs `i < j` of the label order, so no cycles.
fn arb_pomset(n: usize, h: u32) -> impl Strategy<Value = Pomset> {
    proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if bits[i * n + j] {
                    pairs.push((i, j));
                }
            }
        }
        Pomset::from_relations(n, h, &pairs).unwrap()
    })
}

/// Spaces with `m ≤ 11` (so `h ≤ 5`), `n ≤ 5` and `m^N ≤ limit`.
fn arb_config(limit: u128) -> impl Strategy<Value = SpaceConfig> {
    (2u32..=11, proptest::collection::vec(1usize..=2, 1..=5)).prop_flat_map(move |(m, mut pi)| {
        while pi.len() > 1 && (m as u128).pow(pi.iter().sum::<usize>() as u32) > limit {
            pi.pop();
        }
        if (m as u128).pow(pi[0] as u32) > limit {
            pi[0] = 1;
        }
        let n = pi.len();
        arb_pomset(n, m / 2).prop_map(move |p| SpaceConfig::new(m, pi.clone(), p).unwrap())
    })
}

fn arb_vector(cfg: &SpaceConfig) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..cfg.modulus(), cfg.len())
}

fn arb_counts(n: usize, h: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..=h, n)
}

fn sorted(v: Vec<Vec<u32>>) -> BTreeSet<Vec<u32>> {
    v.into_iter().collect()
}

fn entries(code_words: &[pbm_core::BlockVector]) -> Vec<Vec<u32>> {
    code_words.iter().map(|w| w.to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn ideals_match_the_definition(p in (1usize..=5, 1u32..=5).prop_flat_map(|(n, h)| arb_pomset(n, h))) {
        let fast: BTreeSet<Vec<u32>> =
            p.enumerate_ideals(&IdealFilter::default()).iter().map(|i| i.counts().to_vec()).collect();
        let slow = sorted(oracle::exhaustive_ideals(&p, CAP).unwrap());
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn filtered_ideals_match(p in (1usize..=4, 1u32..=4).prop_flat_map(|(n, h)| arb_pomset(n, h)), t in 0u32..=16) {
        let fast: BTreeSet<Vec<u32>> = p.ideals_of_cardinality(t).iter().map(|i| i.counts().to_vec()).collect();
        let slow: BTreeSet<Vec<u32>> = oracle::exhaustive_ideals(&p, CAP)
            .unwrap()
            .into_iter()
            .filter(|c| c.iter().sum::<u32>() == t)
            .collect();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn ideal_predicate_and_closures(
        (p, s) in (1usize..=5, 1u32..=5).prop_flat_map(|(n, h)| (arb_pomset(n, h), arb_counts(n, h)))
    ) {
        let m = Mset::new(p.height(), s.clone()).unwrap();
        prop_assert_eq!(p.is_ideal(&m), oracle::is_ideal(&p, &s));
        let g = p.generated_ideal(&m).unwrap();
        prop_assert_eq!(g.counts().to_vec(), oracle::generated_ideal(&p, &s));
        prop_assert_eq!(g.counts().to_vec(), oracle::smallest_ideal_containing(&p, &s, CAP).unwrap());
        if let Ok(i) = p.ideal(m) {
            let c = p.ideal_complement(&i).unwrap();
            prop_assert!(p.dual().is_ideal(&c));
            prop_assert_eq!(i.cardinality() + c.cardinality(), p.n() as u32 * p.height());
        }
    }

    #[test]
    fn weights_match(
        (cfg, v) in arb_config(1 << 40).prop_flat_map(|c| { let s = arb_vector(&c); (Just(c), s) })
    ) {
        let bv = cfg.vector(v.clone()).unwrap();
        prop_assert_eq!(cfg.weight(&bv), oracle::weight(&cfg, &v));
        prop_assert_eq!(cfg.poset_weight(&bv), oracle::poset_weight(&cfg, &v));
        prop_assert_eq!(cfg.support(&bv).counts().to_vec(), oracle::support(&cfg, &v));
    }

    #[test]
    fn metric_axioms(
        (cfg, u, v, w) in arb_config(1 << 40).prop_flat_map(|c| {
            let (a, b, d) = (arb_vector(&c), arb_vector(&c), arb_vector(&c));
            (Just(c), a, b, d)
        })
    ) {
        let (u, v, w) = (cfg.vector(u).unwrap(), cfg.vector(v).unwrap(), cfg.vector(w).unwrap());
        let d = |a, b| cfg.distance(a, b).unwrap();
        prop_assert_eq!(d(&u, &v) == 0, u == v);
        prop_assert_eq!(d(&u, &v), d(&v, &u));
        prop_assert!(d(&u, &w) <= d(&u, &v) + d(&v, &w));
        prop_assert!(cfg.poset_distance(&u, &w) <= cfg.poset_distance(&u, &v) + cfg.poset_distance(&v, &w));
    }

    #[test]
    fn balls_match(
        (cfg, k, u) in arb_config(3000).prop_flat_map(|c| {
            let k = arb_counts(c.n(), c.height());
            let u = arb_vector(&c);
            (Just(c), k, u)
        })
    ) {
        let k = cfg.pomset().generated_ideal(&Mset::new(cfg.height(), k).unwrap()).unwrap();
        let slow = sorted(oracle::exhaustive_ball(&cfg, &u, k.counts(), CAP).unwrap());
        prop_assert_eq!(cfg.ball_cardinality(&k).unwrap(), slow.len() as u128);
        let center = cfg.vector(u.clone()).unwrap();
        let fast = sorted(cfg.enumerate_ball(&center, &k, CAP).unwrap().into_iter().map(|v| v.to_vec()).collect());
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn radius_balls_match(
        (cfg, r) in arb_config(2000).prop_flat_map(|c| { let top = c.n() as u32 * c.height(); (Just(c), 0..=top) })
    ) {
        let zero = cfg.zero();
        let fast = sorted(cfg.r_ball(&zero, r, CAP).unwrap().into_iter().map(|v| v.to_vec()).collect());
        let slow = sorted(oracle::exhaustive_metric_ball(&cfg, &zero, r, CAP).unwrap());
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn spans_duals_and_distances(
        (cfg, rows) in arb_config(3000).prop_flat_map(|c| {
            let rows = proptest::collection::vec(arb_vector(&c), 1..=3);
            (Just(c), rows)
        })
    ) {
        let code = BlockCode::span(cfg.clone(), rows.clone(), CAP).unwrap();
        let words = entries(code.codewords());
        prop_assert_eq!(sorted(words.clone()), sorted(oracle::exhaustive_span(&cfg, &rows, CAP).unwrap()));
        prop_assert!(oracle::is_linear(&cfg, &words));
        let dual = code.dual(CAP).unwrap();
        prop_assert_eq!(sorted(entries(dual.codewords())), sorted(oracle::exhaustive_dual(&cfg, &words, CAP).unwrap()));
        prop_assert_eq!(code.len() as u128 * dual.len() as u128, cfg.space_size().unwrap());
        prop_assert_eq!(code.min_distance().ok(), oracle::exhaustive_min_distance(&cfg, &words));
        if code.len() >= 2 {
            prop_assert_eq!(code.min_distance().unwrap(), code.min_distance_pairwise().unwrap());
        }
        prop_assert!(code.singleton().holds());
        if code.is_mds() {
            prop_assert!(code.is_mds_poset_block());
        }
    }

    #[test]
    fn linearity_detection(
        (cfg, words) in arb_config(3000).prop_flat_map(|c| {
            let w = proptest::collection::vec(arb_vector(&c), 1..=6);
            (Just(c), w)
        })
    ) {
        let code = BlockCode::from_codewords(cfg.clone(), words).unwrap();
        prop_assert_eq!(code.is_linear(), oracle::is_linear(&cfg, &entries(code.codewords())));
    }

    #[test]
    fn perfection_matches(
        (cfg, rows, k) in arb_config(800).prop_flat_map(|c| {
            let rows = proptest::collection::vec(arb_vector(&c), 1..=2);
            let k = arb_counts(c.n(), c.height());
            (Just(c), rows, k)
        })
    ) {
        let code = BlockCode::span(cfg.clone(), rows, CAP).unwrap();
        let words = entries(code.codewords());
        let k = cfg.pomset().generated_ideal(&Mset::new(cfg.height(), k).unwrap()).unwrap();
        prop_assert_eq!(code.is_i_perfect(&k, CAP).unwrap(), oracle::is_i_perfect(&cfg, &words, k.counts(), CAP).unwrap());
        prop_assert_eq!(
            code.is_i_perfect_exhaustive(&k, CAP).unwrap(),
            oracle::is_i_perfect(&cfg, &words, k.counts(), CAP).unwrap()
        );
        for r in 0..=cfg.n() as u32 * cfg.height() {
            prop_assert_eq!(code.is_r_perfect(r, CAP).unwrap(), oracle::is_r_perfect(&cfg, &words, r, CAP).unwrap());
            prop_assert_eq!(
                code.is_r_error_correcting(r, CAP).unwrap(),
                oracle::is_r_error_correcting(&cfg, &words, r, CAP).unwrap()
            );
        }
    }
}
