//! Sequential-versus-parallel benchmarks for the search kernels.
//!
//! Run with `cargo bench`. With the default `parallel` feature both modes
//! are exercised; without it only the sequential entries run.

use criterion::{criterion_group, criterion_main, Criterion};
use rsl_core::catalog::named_graph;
use rsl_core::exec::{Budget, ExecConfig, Parallelism};
use rsl_core::minsearch::{minimal_density_critical, SearchLimits};
use rsl_core::ramsey::{arrows, ramsey_exact, RamseyOptions};
use rsl_core::{canonical_code, Graph};
use std::hint::black_box;

fn modes() -> Vec<(&'static str, ExecConfig)> {
    let mut out = vec![(
        "seq",
        ExecConfig {
            parallelism: Parallelism::Sequential,
            budget: Budget::unlimited(),
        },
    )];
    #[cfg(feature = "parallel")]
    out.push((
        "par",
        ExecConfig {
            parallelism: Parallelism::Rayon,
            budget: Budget::unlimited(),
        },
    ));
    out
}

fn bench_arrows(c: &mut Criterion) {
    let k3 = named_graph("K3").unwrap();
    let k4 = named_graph("K4").unwrap();
    let mut group = c.benchmark_group("arrows_k3_k4_n9");
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| black_box(arrows(&k3, &k4, 9, &exec).unwrap()))
        });
    }
    group.finish();
}

fn bench_ramsey_exact(c: &mut Criterion) {
    let k3 = named_graph("K3").unwrap();
    let m3 = named_graph("M3").unwrap();
    let opts = RamseyOptions::default();
    let mut group = c.benchmark_group("ramsey_k3_3k2");
    group.sample_size(20);
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| black_box(ramsey_exact(&k3, &m3, &opts, &exec).unwrap()))
        });
    }
    group.finish();
}

fn bench_minsearch(c: &mut Criterion) {
    let k44 = named_graph("K4_4").unwrap();
    let limits = SearchLimits::default();
    let mut group = c.benchmark_group("minsearch_k44");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| black_box(minimal_density_critical(&k44, &limits, &exec).unwrap()))
        });
    }
    group.finish();
}

fn bench_canonical_code(c: &mut Criterion) {
    let petersen = named_graph("petersen").unwrap();
    let k44 = named_graph("K4_4").unwrap();
    c.bench_function("canon_petersen", |b| {
        b.iter(|| black_box(canonical_code(&petersen).unwrap()))
    });
    c.bench_function("canon_k44", |b| {
        b.iter(|| black_box(canonical_code(&k44).unwrap()))
    });
}

fn bench_girth(c: &mut Criterion) {
    let (g, _) = rsl_core::construct::deletion_high_girth(
        80,
        5,
        rsl_core::Rational::new(1, 10),
        3,
    )
    .unwrap();
    let g: Graph = g;
    c.bench_function("girth_order80", |b| b.iter(|| black_box(g.girth())));
}

criterion_group!(
    benches,
    bench_arrows,
    bench_ramsey_exact,
    bench_minsearch,
    bench_canonical_code,
    bench_girth
);
criterion_main!(benches);
