//! Catalog verification throughput: the rayon fan-out against the
//! sequential path. With `--no-default-features` both arms run
//! sequentially and should coincide.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hypersum::catalog::{verify_all, VerifyOptions};

fn bench_verify_all(c: &mut Criterion) {
    for precision in [192usize, 384] {
        let opts = VerifyOptions { precision, ..VerifyOptions::default() };
        let mut group = c.benchmark_group(format!("verify_all/{precision}-bit"));
        group.sample_size(10);
        group.bench_function("sequential", |b| {
            b.iter(|| black_box(verify_all(black_box(&opts), false)))
        });
        group.bench_function("parallel", |b| {
            b.iter(|| black_box(verify_all(black_box(&opts), true)))
        });
        group.finish();
    }
}

criterion_group!(benches, bench_verify_all);
criterion_main!(benches);
