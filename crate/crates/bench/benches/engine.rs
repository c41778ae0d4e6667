use std::hint::black_box;

use cotor_bench::dense_matrix;
use cotor_core::derived::{cotor, hochschild_dims, pseudo_coext};
use cotor_core::linalg::{kernel, reduce};
use cotor_core::{fixtures, Bimodule, FieldSpec, HochschildVariant};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for (label, field) in [("Q", FieldSpec::Rationals), ("F5", FieldSpec::prime(5).unwrap())] {
        for n in [8, 16, 32] {
            let m = dense_matrix(field, n);
            group.bench_with_input(BenchmarkId::new(label, n), &m, |b, m| b.iter(|| reduce(black_box(m))));
        }
    }
    group.finish();
    let m = dense_matrix(FieldSpec::Rationals, 24);
    c.bench_function("kernel/Q/24", |b| b.iter(|| kernel(black_box(&m))));
}

fn cobar(c: &mut Criterion) {
    let dp2 = fixtures::dp2().into_ref();
    let k = fixtures::k_c0(&dp2);
    let (r, l) = (k.right_part(), k.left_part());
    let mut group = c.benchmark_group("cotor/DP2");
    for max in [2, 4, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(max), &max, |b, &max| b.iter(|| cotor(&r, &l, max)));
    }
    group.finish();
    c.bench_function("pseudo_coext/DP2/2", |b| b.iter(|| pseudo_coext(&k, &k, 2)));
}

fn hochschild(c: &mut Criterion) {
    let mut group = c.benchmark_group("hochschild");
    for (label, a) in [("dual", fixtures::dual_numbers()), ("M2", fixtures::m2())] {
        let m = Bimodule::regular(&a);
        group.bench_function(BenchmarkId::new(label, 2), |b| {
            b.iter(|| hochschild_dims(&m, 2, HochschildVariant::Cochain))
        });
    }
    group.finish();
}

criterion_group!(benches, elimination, cobar, hochschild);
criterion_main!(benches);
