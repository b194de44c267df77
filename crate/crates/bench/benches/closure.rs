use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hornlearn::gd::gd_basis;
use hornlearn::horn::{closure, ClosureEngine};
use hornlearn::VarSet;
use hornlearn_bench::{reversed_chain, start_sets, target};

fn closures(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    for (n, m) in [(16, 16), (64, 64), (128, 256)] {
        let h = target(n, m);
        let starts = start_sets(n, 64);
        let label = format!("n{n}_m{m}");
        group.bench_with_input(BenchmarkId::new("naive", &label), &starts, |b, starts| {
            b.iter(|| {
                for s in starts {
                    black_box(closure(s, &h).unwrap());
                }
            })
        });
        let engine = ClosureEngine::new(&h);
        group.bench_with_input(BenchmarkId::new("engine", &label), &starts, |b, starts| {
            b.iter(|| {
                for s in starts {
                    black_box(engine.closure(s));
                }
            })
        });
    }
    for n in [64, 256] {
        let h = reversed_chain(n);
        let start = VarSet::from_indices(n, [0]).unwrap();
        let label = format!("chain{n}");
        group.bench_function(BenchmarkId::new("naive", &label), |b| {
            b.iter(|| black_box(closure(&start, &h).unwrap()))
        });
        let engine = ClosureEngine::new(&h);
        group.bench_function(BenchmarkId::new("engine", &label), |b| {
            b.iter(|| black_box(engine.closure(&start)))
        });
    }
    group.finish();
}

fn basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("gd_basis");
    for (n, m) in [(10, 10), (20, 30), (40, 60)] {
        let h = target(n, m);
        group.bench_function(BenchmarkId::from_parameter(format!("n{n}_m{m}")), |b| {
            b.iter(|| black_box(gd_basis(&h)))
        });
    }
    group.finish();
}

criterion_group!(benches, closures, basis);
criterion_main!(benches);
