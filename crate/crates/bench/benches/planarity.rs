use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use thickness_bench::largest_page;
use thickness_core::oracle::{exact_thickness, DEFAULT_NODE_BUDGET};
use thickness_core::planarity::graphs;
use thickness_core::{is_planar, naive_is_planar, planar_embedding, GraphFamily};

fn planarity(c: &mut Criterion) {
    let page = largest_page(&GraphFamily::K2nn, 48);
    c.bench_function("is_planar k2nn n=48 page", |b| {
        b.iter(|| is_planar(black_box(&page)))
    });
    c.bench_function("planar_embedding k2nn n=48 page", |b| {
        b.iter(|| planar_embedding(black_box(&page)))
    });
    let grid = graphs::grid(30, 30);
    c.bench_function("is_planar 30x30 grid", |b| {
        b.iter(|| is_planar(black_box(&grid)))
    });
    let k5 = graphs::complete(5);
    c.bench_function("naive_is_planar K5", |b| {
        b.iter(|| naive_is_planar(black_box(&k5)))
    });
}

fn oracle(c: &mut Criterion) {
    let g = graphs::complete_multipartite(&[1, 3, 3]);
    c.bench_function("exact_thickness K_{1,3,3}", |b| {
        b.iter(|| exact_thickness(black_box(&g), 3, DEFAULT_NODE_BUDGET))
    });
}

criterion_group!(benches, planarity, oracle);
criterion_main!(benches);
