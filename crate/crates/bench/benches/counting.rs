use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use latpath_core::closed_form::uq_multiplicity;
use latpath_core::{count_paths, decompose, ModelSpec};

fn dp(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_paths");
    for n in [40, 120] {
        for (name, model) in [
            ("auxiliary", ModelSpec::auxiliary(5).unwrap()),
            ("uq", ModelSpec::uq(5).unwrap()),
        ] {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| count_paths(black_box(&model), n).unwrap())
            });
        }
    }
    group.finish();
}

fn closed_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("uq_multiplicity");
    for n in [40, 120] {
        group.bench_with_input(BenchmarkId::new("row", n), &n, |b, &n| {
            b.iter(|| {
                for m in (0..=n).step_by(2) {
                    black_box(uq_multiplicity(5, m, n).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for n in [40, 120] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| decompose(black_box(n), 5).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, dp, closed_form, recursion);
criterion_main!(benches);
