use std::hint::black_box;

use adnil::affine::{normalizer_by_zwall, w_max, w_min};
use adnil::counting::{gf_count, lattice_count, Lattice, Simplex, Target};
use adnil::ideals::enumerate_ideals;
use adnil::normalizers::{normalizer, normalizer_by_weight};
use adnil::shi::normalizer_by_walls;
use adnil_bench::{ideals, system, ENUMERATION_TYPES, SWEEP_TYPES};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_ideals");
    for ty in ENUMERATION_TYPES {
        let rs = system(ty);
        g.bench_with_input(BenchmarkId::from_parameter(ty), &rs, |b, rs| b.iter(|| enumerate_ideals(rs).len()));
    }
    g.finish();
}

fn normalizer_oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("normalizer");
    for ty in SWEEP_TYPES {
        let (rs, all) = ideals(ty);
        g.bench_function(BenchmarkId::new("generators", ty), |b| {
            b.iter(|| all.iter().map(|i| normalizer(&rs, i).semisimple_rank()).sum::<usize>())
        });
        g.bench_function(BenchmarkId::new("weight", ty), |b| {
            b.iter(|| all.iter().map(|i| normalizer_by_weight(&rs, i).semisimple_rank()).sum::<usize>())
        });
        g.bench_function(BenchmarkId::new("z-walls", ty), |b| {
            b.iter(|| all.iter().filter_map(|i| normalizer_by_zwall(&rs, i).ok()).count())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("shi_walls");
    g.sample_size(10);
    for ty in ["A4", "B3", "G2"] {
        let (rs, all) = ideals(ty);
        g.bench_function(ty, |b| b.iter(|| all.iter().map(|i| normalizer_by_walls(&rs, i)).collect::<Vec<_>>()));
    }
    g.finish();
}

fn extremal_elements(c: &mut Criterion) {
    let mut g = c.benchmark_group("extremal_elements");
    for ty in SWEEP_TYPES {
        let (rs, all) = ideals(ty);
        g.bench_function(BenchmarkId::new("w_min", ty), |b| {
            b.iter(|| all.iter().filter_map(|i| w_min(&rs, i).ok()).map(|w| w.length()).sum::<usize>())
        });
        g.bench_function(BenchmarkId::new("w_max", ty), |b| {
            b.iter(|| all.iter().filter_map(|i| w_max(&rs, i).ok()).map(|w| w.length()).sum::<usize>())
        });
    }
    g.finish();
}

fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("counting");
    for ty in ["E6", "E7", "E8", "F4", "D8"] {
        let ct = ty.parse().unwrap();
        g.bench_function(BenchmarkId::new("gf", ty), |b| b.iter(|| gf_count(black_box(ct), Target::All).unwrap()));
    }
    for ty in ["E6", "F4", "D5"] {
        let rs = system(ty);
        g.bench_function(BenchmarkId::new("lattice", ty), |b| {
            b.iter(|| lattice_count(&rs, Simplex::Min, true, Lattice::Coroot))
        });
    }
    g.finish();
}

criterion_group!(benches, enumeration, normalizer_oracles, extremal_elements, counting);
criterion_main!(benches);
