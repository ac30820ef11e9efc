use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use steklov_core::steklov_ball::Family;
use steklov_core::sweep::{evaluate_sequential, SweepSpec};

fn figure_spec(samples: usize) -> SweepSpec {
    SweepSpec { family: Family::One, l_min: 1, l_max: 10, k2_min: -100.0, k2_max: 100.0, samples, theta: 1.0 }
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for samples in [201usize, 2001] {
        let spec = figure_spec(samples);
        group.bench_with_input(BenchmarkId::new("sequential", samples), &spec, |b, s| {
            b.iter(|| evaluate_sequential(s).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", samples), &spec, |b, s| {
            b.iter(|| steklov_core::sweep::evaluate_parallel(s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
