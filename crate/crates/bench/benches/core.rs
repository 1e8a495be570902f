use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use pbm_bench::{chain_code, z10_code, z5_code, z5_config};
use pbm_core::{ChainContext, IdealFilter, Mset, Pomset, DEFAULT_MAX_SPACE};

fn weights(c: &mut Criterion) {
    let cfg = z5_config();
    let vectors = cfg.vectors(DEFAULT_MAX_SPACE).unwrap();
    c.bench_function("weight/all of Z_5^7", |b| {
        b.iter(|| {
            vectors
                .iter()
                .map(|v| cfg.weight(black_box(v)))
                .sum::<u32>()
        })
    });
}

fn ideals(c: &mut Criterion) {
    let anti = Pomset::antichain(6, 3).unwrap();
    let vee = Pomset::from_relations(6, 3, &[(0, 1), (0, 2), (1, 3), (2, 4), (2, 5)]).unwrap();
    c.bench_function("ideals/antichain n=6 h=3", |b| {
        b.iter(|| {
            anti.enumerate_ideals(black_box(&IdealFilter::default()))
                .len()
        })
    });
    c.bench_function("ideals/tree n=6 h=3, |I|=9", |b| {
        b.iter(|| vee.ideals_of_cardinality(black_box(9)).len())
    });
}

fn perfection(c: &mut Criterion) {
    let code = z5_code();
    let cfg = code.config().clone();
    let full = cfg.ideal(Mset::new(2, vec![2, 2, 0]).unwrap()).unwrap();
    let partial = cfg.ideal(Mset::new(2, vec![2, 1, 0]).unwrap()).unwrap();
    c.bench_function("i_perfect/full count fast path", |b| {
        b.iter(|| code.is_i_perfect_full_count(black_box(&full)).unwrap())
    });
    c.bench_function("i_perfect/full count exhaustive", |b| {
        b.iter(|| {
            code.is_i_perfect_exhaustive(black_box(&full), DEFAULT_MAX_SPACE)
                .unwrap()
        })
    });
    c.bench_function("i_perfect/partial count", |b| {
        b.iter(|| {
            code.is_i_perfect(black_box(&partial), DEFAULT_MAX_SPACE)
                .unwrap()
        })
    });
    let z10 = z10_code();
    c.bench_function("radius_profile/Z_10^3", |b| {
        b.iter(|| z10.radius_profile(DEFAULT_MAX_SPACE).unwrap().len())
    });
}

fn chains(c: &mut Criterion) {
    let code = chain_code();
    let ctx = ChainContext::new(code.config().clone()).unwrap();
    c.bench_function("chain/weight distribution", |b| {
        b.iter(|| {
            ctx.mds_weight_distribution(black_box(&code))
                .unwrap()
                .closed_form_match
        })
    });
    let mut group = c.benchmark_group("chain");
    group.sample_size(10);
    group.bench_function("duality", |b| {
        b.iter(|| ctx.duality_check(&code, DEFAULT_MAX_SPACE).unwrap().agree)
    });
    group.finish();
}

criterion_group!(benches, weights, ideals, perfection, chains);
criterion_main!(benches);
