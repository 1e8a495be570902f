//! Fixed instances for the structural claims, including the ones that fail.

use pbm_core::chain::Reading;
use pbm_core::code::Systematic;
use pbm_core::oracle;
use pbm_core::verify::bundled;
use pbm_core::{BlockCode, ChainContext, Mset, Pomset, SpaceConfig};

const CAP: usize = 1_000_000;

fn antichain(m: u32, pi: Vec<usize>) -> SpaceConfig {
    let n = pi.len();
    SpaceConfig::new(m, pi, Pomset::antichain(n, m / 2).unwrap()).unwrap()
}

fn chain(m: u32, pi: Vec<usize>) -> ChainContext {
    let n = pi.len();
    ChainContext::new(SpaceConfig::new(m, pi, Pomset::chain(n, m / 2).unwrap()).unwrap()).unwrap()
}

#[test]
fn example_weights_and_ideals() {
    let cfg = bundled::z5_config();
    let code = bundled::z5_code();
    for w in code.codewords().iter().filter(|w| !w.is_zero()) {
        assert_eq!(cfg.weight(w), 5);
        assert_eq!(oracle::weight(&cfg, w), 5);
    }
    assert_eq!(code.singleton_family(true).len(), 2);
    assert_eq!(code.singleton_family(false).len(), 4);
}

#[test]
fn example_perfection_by_oracle() {
    let cfg = bundled::z5_config();
    let words: Vec<Vec<u32>> = bundled::z5_code()
        .codewords()
        .iter()
        .map(|w| w.to_vec())
        .collect();
    let perfect = |c: &[u32]| oracle::is_i_perfect(&cfg, &words, c, CAP).unwrap();
    assert!(perfect(&[2, 2, 0]));
    // 5 balls of 5^3 vectors each cannot cover 5^7 vectors.
    assert!(!perfect(&[2, 0, 2]));
    assert!(!perfect(&[2, 1, 0]));
    assert!(!perfect(&[2, 0, 1]));
}

#[test]
fn mds_code_need_not_be_perfect_for_every_full_count_ideal() {
    // Antichain over Z_3, blocks of length 1 and 2, C = span{(1,1,0)}.
    let cfg = antichain(3, vec![1, 2]);
    let code = BlockCode::span(cfg.clone(), vec![vec![1, 1, 0]], CAP).unwrap();
    let s = code.singleton();
    assert_eq!((s.min_distance, s.r, s.max_sum, s.bound), (2, 1, 2, 2));
    assert!(code.is_mds());
    let small = cfg.ideal(Mset::new(1, vec![1, 0]).unwrap()).unwrap();
    let large = cfg.ideal(Mset::new(1, vec![0, 1]).unwrap()).unwrap();
    assert!(!code.is_i_perfect(&small, CAP).unwrap());
    assert!(code.is_i_perfect(&large, CAP).unwrap());
}

#[test]
fn perfect_for_every_ideal_of_size_n_minus_k_gives_mds() {
    let code = bundled::z5_code();
    let cfg = code.config();
    let family = cfg.pomset().ideals_of_cardinality(2 * 6);
    assert!(family.is_empty(), "N - k = 6 exceeds n = 3");
    let ctx = chain(5, vec![1, 2, 1]);
    let code = ctx
        .systematic_code(1, &[vec![1], vec![2], vec![3]], CAP)
        .unwrap();
    let family = ctx.config().pomset().ideals_of_cardinality(2);
    assert!(family.iter().all(|i| code.is_i_perfect(i, CAP).unwrap()));
    assert!(code.is_mds());
}

/// All size-`m^k` subsets of the space that are `r`-perfect.
fn perfect_codes(cfg: &SpaceConfig, size: usize, r: u32) -> Vec<Vec<Vec<u32>>> {
    let all = oracle::all_vectors(cfg, CAP).unwrap();
    let mut found = Vec::new();
    let mut pick = vec![0usize];
    // subsets containing the zero vector: perfection is translation invariant
    fn rec(
        all: &[Vec<u32>],
        pick: &mut Vec<usize>,
        size: usize,
        cfg: &SpaceConfig,
        r: u32,
        found: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if pick.len() == size {
            let words: Vec<Vec<u32>> = pick.iter().map(|&i| all[i].clone()).collect();
            if oracle::is_r_perfect(cfg, &words, r, CAP).unwrap() {
                found.push(words);
            }
            return;
        }
        let start = pick.last().unwrap() + 1;
        for i in start..all.len() {
            // balls of radius r must be disjoint, so every pair is far apart
            if pick
                .iter()
                .all(|&j| oracle::distance(cfg, &all[i], &all[j]) > 2 * r)
            {
                pick.push(i);
                rec(all, pick, size, cfg, r, found);
                pick.pop();
            }
        }
    }
    rec(&all, &mut pick, size, cfg, r, &mut found);
    found
}

#[test]
fn perfect_codes_of_radius_n_minus_k_can_exist_with_two_ideals() {
    // Antichain, n = 2, k_i = 1, |C| = m: the ideals of cardinality
    // N - k = 1 are {1/1} and {1/2}.
    let z5 = antichain(5, vec![1, 1]);
    assert_eq!(z5.pomset().ideals_of_cardinality(1).len(), 2);
    let found = perfect_codes(&z5, 5, 1);
    assert!(found.contains(&vec![
        vec![0, 0],
        vec![1, 2],
        vec![2, 4],
        vec![3, 1],
        vec![4, 3]
    ]));
    let graph = BlockCode::span(z5, vec![vec![1, 2]], CAP).unwrap();
    assert!(graph.is_r_perfect(1, CAP).unwrap());
    assert_eq!(graph.min_distance().unwrap(), 3);

    // over Z_3 the radius-1 ball has 5 points and 3 * 5 != 9
    let z3 = antichain(3, vec![1, 1]);
    assert!(perfect_codes(&z3, 3, 1).is_empty());
}

#[test]
fn support_union_criterion_disagrees_once_lee_weights_add() {
    let cfg = SpaceConfig::new(7, vec![3], Pomset::antichain(1, 3).unwrap()).unwrap();
    let code = BlockCode::span(cfg.clone(), vec![vec![1, 2, 3]], CAP).unwrap();
    let words: Vec<Vec<u32>> = code.codewords().iter().map(|w| w.to_vec()).collect();
    let direct = code.is_r_error_correcting(2, CAP).unwrap();
    assert_eq!(
        direct,
        oracle::is_r_error_correcting(&cfg, &words, 2, CAP).unwrap()
    );
    assert_eq!(code.min_distance().unwrap(), 3);
    assert!(!direct);
    assert!(code.r_error_correcting_criterion(2));
}

#[test]
fn chain_perfection_through_a_systematic_map() {
    // h = 3, so |I| = 3 fills the bottom block.
    let ctx = chain(7, vec![1, 1]);
    let code = ctx.systematic_code(1, &[vec![3]], CAP).unwrap();
    let i = ctx.ideal_of_cardinality(3).unwrap();
    assert!(ctx.chain_perfect_equivalence(&code, &i, CAP).unwrap());
    match code.systematic_function(&i, CAP).unwrap() {
        Systematic::Function(f) => {
            assert!(f.is_linear());
            assert_eq!(f.apply(&[1]).unwrap(), &[3]);
        }
        other => panic!("{other:?}"),
    }
    let random =
        BlockCode::from_codewords(ctx.config().clone(), vec![vec![0, 0], vec![1, 3]]).unwrap();
    assert!(!ctx.chain_perfect_equivalence(&random, &i, CAP).unwrap());
}

#[test]
fn ball_intersection_threshold_depends_on_block_lengths() {
    let ctx = chain(5, vec![2, 1, 1]);
    let code = ctx
        .systematic_code(1, &[vec![1, 2], vec![3, 4]], CAP)
        .unwrap();
    assert!(code.is_mds());
    // r = 1 parity block of length 2, so N - k = 2 but d - 1 = 2
    assert_eq!(code.min_distance().unwrap(), 3);
    for t in 0..=6 {
        let i = ctx.ideal_of_cardinality(t).unwrap();
        let b = ctx.mds_ball_intersection(&code, &i).unwrap();
        assert_eq!(b.exhaustive, b.closed_form, "|I| = {t}");
        if t == 3 || t == 4 {
            assert_ne!(b.exhaustive, b.literal_closed_form, "|I| = {t}");
        }
    }
}

#[test]
fn weight_distribution_readings_on_equal_blocks_coincide() {
    let ctx = chain(5, vec![2, 2, 2]);
    let code = ctx
        .systematic_code(1, &[vec![1, 0], vec![0, 1], vec![2, 3], vec![4, 4]], CAP)
        .unwrap();
    let report = ctx.mds_weight_distribution(&code).unwrap();
    assert!(report.closed_form_match && report.literal_match);
    let d = code.min_distance().unwrap();
    for i in 0..=6 {
        assert_eq!(
            ctx.closed_form_count(i, d, 4, Reading::Next),
            ctx.closed_form_count(i, d, 4, Reading::Literal)
        );
    }
}

#[test]
fn weight_distribution_matches_the_oracle_histogram() {
    let ctx = chain(5, vec![1, 2, 1]);
    let code = ctx
        .systematic_code(1, &[vec![1], vec![2], vec![3]], CAP)
        .unwrap();
    let report = ctx.mds_weight_distribution(&code).unwrap();
    let words: Vec<Vec<u32>> = code.codewords().iter().map(|w| w.to_vec()).collect();
    let hist = oracle::exhaustive_weight_histogram(ctx.config(), &words);
    for (i, c) in &report.a {
        assert_eq!(hist.get(i).copied().unwrap_or(0), *c);
    }
    assert!(report.closed_form_match);
}

#[test]
fn duality_on_composite_moduli() {
    for m in [4, 6] {
        let ctx = chain(m, vec![1, 2]);
        let code = ctx
            .systematic_code(1, &[vec![1], vec![m - 1]], CAP)
            .unwrap();
        let report = ctx.duality_check(&code, CAP).unwrap();
        assert!(report.code_mds && report.agree, "m = {m}: {report:?}");
        assert_eq!(report.dual_size as u32, m);
    }
}
