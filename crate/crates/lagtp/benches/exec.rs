use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use lagtp::exec::Exec;
use lagtp::matrix::{tp_check_sampled_with, tp_check_symbolic_with, Sampler};
use lagtp::quadtp::{build_variant_quad, QuadVariantParams};
use lagtp::verify::{laguerre_hankel, run_suite, Suite, VerifyOptions};

const PATHS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn tp_symbolic(c: &mut Criterion) {
    let h = laguerre_hankel(5);
    let mut g = c.benchmark_group("tp3-symbolic-hankel-5x5");
    g.sample_size(10);
    for (name, exec) in PATHS {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| b.iter(|| black_box(tp_check_symbolic_with(&h, 3, e))));
    }
    g.finish();
}

fn tp_sampled(c: &mut Criterion) {
    let m = build_variant_quad(&QuadVariantParams::symbolic(7)).truncate(7);
    let s = Sampler { seed: 42, samples: 100 };
    let mut g = c.benchmark_group("tp4-sampled-variant-7x7");
    g.sample_size(10);
    for (name, exec) in PATHS {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| b.iter(|| black_box(tp_check_sampled_with(&m, 4, s, e))));
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify-quadtp");
    g.sample_size(10);
    for (name, exec) in PATHS {
        let opts = VerifyOptions { exec, ..Default::default() };
        g.bench_function(name, |b| b.iter(|| black_box(run_suite(Suite::Quadtp, &opts).ok())));
    }
    g.finish();
}

criterion_group!(benches, tp_symbolic, tp_sampled, suite);
criterion_main!(benches);
