//! Sequential vs parallel timings for the preclusion search and the probe
//! sampler. With `--no-default-features` only the sequential lane runs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fsmp_core::generators::{complete, torus};
use fsmp_core::{preclusion_number, randomized_preclusion_probe};
use fsmp_core::{PreclusionVariant, ProbeConfig, SearchConfig};

fn lanes() -> Vec<(&'static str, bool)> {
    if cfg!(feature = "parallel") {
        vec![("sequential", false), ("parallel", true)]
    } else {
        vec![("sequential", false)]
    }
}

fn bench_fmp_torus_4x4(c: &mut Criterion) {
    let g = torus(&[4, 4]).unwrap();
    let mut group = c.benchmark_group("fmp_torus_4x4");
    group.sample_size(10);
    for (name, parallel) in lanes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &parallel, |b, &parallel| {
            let cfg = SearchConfig {
                parallel,
                ..SearchConfig::default()
            };
            b.iter(|| preclusion_number(&g, PreclusionVariant::Fmp, &cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_fsmp_k6(c: &mut Criterion) {
    let g = complete(6).unwrap();
    let mut group = c.benchmark_group("fsmp_k6");
    group.sample_size(10);
    for (name, parallel) in lanes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &parallel, |b, &parallel| {
            let cfg = SearchConfig {
                parallel,
                ..SearchConfig::default()
            };
            b.iter(|| preclusion_number(&g, PreclusionVariant::Fsmp, &cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_probe_torus_5x5(c: &mut Criterion) {
    let g = torus(&[5, 5]).unwrap();
    let mut group = c.benchmark_group("probe_torus_5x5_size3");
    group.sample_size(10);
    for (name, parallel) in lanes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &parallel, |b, &parallel| {
            let cfg = ProbeConfig {
                trials: 2_000,
                seed: 42,
                directed: false,
                parallel,
            };
            b.iter(|| randomized_preclusion_probe(&g, PreclusionVariant::Fsmp, 3, &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_fmp_torus_4x4,
    bench_fsmp_k6,
    bench_probe_torus_5x5
);
criterion_main!(benches);
