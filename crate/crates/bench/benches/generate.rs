use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use thickness_core::constructions::generate;
use thickness_core::{save, GraphFamily};

fn generation(c: &mut Criterion) {
    for (family, n) in [
        (GraphFamily::K1nn, 48),
        (GraphFamily::K2nn, 48),
        (GraphFamily::K11nn, 48),
    ] {
        c.bench_function(&format!("generate {family} n={n}"), |b| {
            b.iter(|| generate(black_box(&family), black_box(n)).unwrap())
        });
    }
    let d = generate(&GraphFamily::K2nn, 48).unwrap();
    c.bench_function("save k2nn n=48", |b| b.iter(|| save(black_box(&d))));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = generation
}
criterion_main!(benches);
