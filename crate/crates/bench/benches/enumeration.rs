use criterion::{criterion_group, criterion_main, Criterion};
use rct_core::seqtree::enumerate_strong_subtrees;
use rct_core::similarity::enumerate_types;
use rct_core::{LevelTree, Mode};
use std::hint::black_box;

fn enumeration(c: &mut Criterion) {
    let full = LevelTree::full_binary(5);
    c.bench_function("strong_subtrees/h5-k2", |b| {
        b.iter(|| enumerate_strong_subtrees(black_box(&full), 2, None))
    });

    let edge = rct_bench::edge();
    let rado = rct_bench::rado_host(12);
    c.bench_function("types/edge-tr-strong", |b| {
        b.iter(|| enumerate_types(black_box(&edge), &rado, Mode::Strong, 12))
    });
    let henson = rct_bench::henson_host(3, 8);
    c.bench_function("types/edge-s3-strict", |b| {
        b.iter(|| enumerate_types(black_box(&edge), &henson, Mode::Strict, 8))
    });
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
