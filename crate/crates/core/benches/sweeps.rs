//! Sweeps run on a single-thread pool versus the full pool. Build with
//! `--no-default-features` to time the rayon-free sequential fallback.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jsbranch::js::{chi_direct, verify_rectangle_cores};
use jsbranch::paths::{branching, verify_fow_theorem, Method};
use jsbranch::qseries::fermionic_series;
use jsbranch::Partition;

fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let full = rayon::current_num_threads();
    let mut out = vec![(
        "threads=1".to_string(),
        rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap(),
    )];
    if full > 1 {
        out.push((
            format!("threads={full}"),
            rayon::ThreadPoolBuilder::new().num_threads(full).build().unwrap(),
        ));
    }
    out
}

fn branching_methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("branching n=3 j=1 k=0 order=8");
    group.sample_size(10);
    for (label, pool) in pools() {
        for method in [Method::Paths, Method::Fow, Method::Crystal, Method::Fermionic] {
            group.bench_with_input(BenchmarkId::new(method.name(), &label), &method, |b, &m| {
                b.iter(|| pool.install(|| black_box(branching(3, 1, 0, 8, m).unwrap())))
            });
        }
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (label, pool) in pools() {
        group.bench_function(BenchmarkId::new("fow n=3 size<=14", &label), |b| {
            b.iter(|| pool.install(|| black_box(verify_fow_theorem(3, 14).unwrap())))
        });
        group.bench_function(BenchmarkId::new("rectangle cores n=4 size<=16", &label), |b| {
            b.iter(|| pool.install(|| black_box(verify_rectangle_cores(4, 16).unwrap())))
        });
        group.bench_function(BenchmarkId::new("chi n=3 core=- order=5", &label), |b| {
            b.iter(|| pool.install(|| black_box(chi_direct(3, &Partition::empty(), 5).unwrap())))
        });
        group.bench_function(BenchmarkId::new("fermionic n=4 s=1 t=2 order=16", &label), |b| {
            b.iter(|| pool.install(|| black_box(fermionic_series(4, 1, 2, 16).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(benches, branching_methods, sweeps);
criterion_main!(benches);
