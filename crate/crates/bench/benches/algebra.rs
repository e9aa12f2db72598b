use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use modloc_bench::{boolean_cube, mulset, regular, zn};
use modloc_core::{localize_module, sweep, Corpus, CorpusConfig};

fn lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("submodules");
    for (name, ring) in [("Z12", zn(12)), ("Z2^3", boolean_cube()), ("Z32", zn(32))] {
        group.bench_function(name, |b| {
            b.iter_batched(|| regular(&ring), |m| m.submodules().map(<[_]>::len), BatchSize::SmallInput)
        });
    }
    group.finish();
}

fn localization(c: &mut Criterion) {
    let mut group = c.benchmark_group("localize");
    let z12 = zn(12);
    let m12 = regular(&z12);
    for (name, s) in [("Z12 at {1,5,7,11}", &[1, 5, 7, 11][..]), ("Z12 at {4}", &[4]), ("Z12 at {2,4,8}", &[2, 4, 8])] {
        let s = mulset(&z12, s);
        group.bench_function(name, |b| b.iter(|| localize_module(black_box(&m12), &s).map(|l| l.module().size())));
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(20);
    group.bench_function("build z6 corpus", |b| b.iter(|| Corpus::build(CorpusConfig::z6()).map(|c| c.len_modules())));
    group.bench_function("3.11 over z6", |b| {
        b.iter_batched(
            || Corpus::build(CorpusConfig::z6()).expect("z6 corpus builds"),
            |corpus| sweep("3.11", &corpus).map(|r| r.violations.len()),
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

criterion_group!(benches, lattice, localization, sweeps);
criterion_main!(benches);
