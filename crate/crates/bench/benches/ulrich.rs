use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ulrich_core::{
    classify, degree, enumerate_ulrich, irr_closed, irr_generic, verify_twist_vanishing, weyl_dim,
    EnumerateOptions, IsotropicGrassmannian, LieFamily, Weight,
};

fn x(family: LieFamily, n: usize, k: usize) -> IsotropicGrassmannian {
    IsotropicGrassmannian::new(family, n, k).unwrap()
}

fn irr(c: &mut Criterion) {
    let v = x(LieFamily::C, 10, 2);
    let w: Weight = "9,8,8,8,6,6,4,4,2,2".parse().unwrap();
    c.bench_function("irr_generic IGr(2,20)", |b| {
        b.iter(|| irr_generic(black_box(&v), black_box(&w)))
    });
    c.bench_function("irr_closed IGr(2,20)", |b| {
        b.iter(|| irr_closed(black_box(&v), black_box(&w)))
    });
}

fn bbw(c: &mut Criterion) {
    let w = Weight::from_integers(&[40, 30, 30, 20, 10, 10, 5, 0]);
    c.bench_function("weyl_dim D8", |b| {
        b.iter(|| weyl_dim(LieFamily::D, 8, black_box(&w)))
    });
    let v = x(LieFamily::C, 6, 3);
    c.bench_function("degree IGr(3,12)", |b| b.iter(|| degree(black_box(&v))));
    let q = x(LieFamily::B, 5, 1);
    let s = Weight::from_doubled(vec![1; 5]);
    c.bench_function("twist check Q9 spinor", |b| {
        b.iter(|| verify_twist_vanishing(black_box(&q), black_box(&s)))
    });
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (family, n, k) in [
        (LieFamily::C, 6, 3),
        (LieFamily::D, 6, 2),
        (LieFamily::C, 10, 2),
    ] {
        let v = x(family, n, k);
        group.bench_function(v.label(), |b| {
            b.iter(|| enumerate_ulrich(black_box(&v), EnumerateOptions { force: true }))
        });
    }
    group.finish();
    let v = x(LieFamily::C, 40, 2);
    c.bench_function("classify IGr(2,80)", |b| b.iter(|| classify(black_box(&v))));
}

criterion_group!(benches, irr, bbw, search);
criterion_main!(benches);
