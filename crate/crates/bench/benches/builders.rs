use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rct_core::coding::{build_sk, build_tk, build_tr, check_kfbc};
use std::hint::black_box;

fn builders(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for n in [6, 10, 14] {
        g.bench_with_input(BenchmarkId::new("sk3", n), &n, |b, &n| {
            b.iter(|| build_sk(3, black_box(n)))
        });
        g.bench_with_input(BenchmarkId::new("tk3", n), &n, |b, &n| {
            b.iter(|| build_tk(3, black_box(n)))
        });
        g.bench_with_input(BenchmarkId::new("tr", n), &n, |b, &n| b.iter(|| build_tr(black_box(n))));
    }
    g.finish();

    let host = rct_bench::henson_host(4, 8);
    c.bench_function("check_kfbc/sk4-8", |b| b.iter(|| check_kfbc(black_box(&host), 4)));
}

criterion_group!(benches, builders);
criterion_main!(benches);
