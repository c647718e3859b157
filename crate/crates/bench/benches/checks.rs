use std::hint::black_box;

use bihom_bench::{adjoint_cochains, algebras, definition_text};
use bihom_cli::dsl::{parse, serialize};
use bihom_core::check_algebra;
use bihom_core::derivations::solve_derivations;
use bihom_core::gallery;
use bihom_core::rep::check_d_squared;
use bihom_core::Parity;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_algebra");
    for (name, a) in algebras() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &a, |b, a| {
            b.iter(|| check_algebra(black_box(a)))
        });
    }
    group.finish();
}

fn d_squared(c: &mut Criterion) {
    let mut group = c.benchmark_group("d_squared");
    group.sample_size(20);
    for degree in [0, 1, 2] {
        let (a, m, space) = adjoint_cochains(degree);
        group.bench_with_input(BenchmarkId::from_parameter(degree), &space, |b, space| {
            b.iter(|| {
                for g in space {
                    black_box(check_d_squared(&a, &m, g).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn derivations(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_derivations");
    group.sample_size(20);
    let a = gallery::ex25();
    for degree in [0, 1, 2] {
        group.bench_with_input(BenchmarkId::from_parameter(degree), &degree, |b, &d| {
            b.iter(|| solve_derivations(black_box(&a), 0, 0, Parity::Even, d))
        });
    }
    group.finish();
}

fn definitions(c: &mut Criterion) {
    let text = definition_text();
    let doc = parse(&text).unwrap();
    c.bench_function("parse", |b| b.iter(|| parse(black_box(&text)).unwrap()));
    c.bench_function("serialize", |b| b.iter(|| serialize(black_box(&doc))));
}

criterion_group!(benches, axioms, d_squared, derivations, definitions);
criterion_main!(benches);
