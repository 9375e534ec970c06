use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use sroman_core::graph::{self, Family, FamilySpec, Graph};
use sroman_core::{
    solve_branch_bound, solve_branch_bound_with, solve_circular_ladder_dp, solve_exhaustive,
    solve_ladder_dp, validate, BranchBoundOptions,
};

fn family(family: Family, n: usize) -> Graph {
    graph::family(FamilySpec::new(family, n).unwrap()).unwrap()
}

fn ladder_dp(c: &mut Criterion) {
    let mut group = c.benchmark_group("ladder_dp");
    group.sample_size(10);
    for n in [1_000, 10_000, 100_000] {
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("ladder", n), &n, |b, &n| {
            b.iter(|| solve_ladder_dp(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("circular_ladder", n), &n, |b, &n| {
            b.iter(|| solve_circular_ladder_dp(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let cases = [
        (Family::Ladder, 5),
        (Family::Ladder, 7),
        (Family::CircularLadder, 6),
        (Family::LadderComplement, 6),
        (Family::CircularLadderComplement, 7),
    ];
    for (fam, n) in cases {
        let g = family(fam, n);
        let id = format!("{fam}-{n}");
        group.bench_function(BenchmarkId::new("branch_bound", &id), |b| {
            b.iter(|| solve_branch_bound(black_box(&g)).unwrap())
        });
        group.bench_function(BenchmarkId::new("branch_bound_weight_only", &id), |b| {
            let options = BranchBoundOptions {
                canonical_witness: false,
                ..Default::default()
            };
            b.iter(|| solve_branch_bound_with(black_box(&g), &options).unwrap())
        });
        if g.vertex_count() <= 12 {
            group.bench_function(BenchmarkId::new("exhaustive", &id), |b| {
                b.iter(|| solve_exhaustive(black_box(&g)).unwrap())
            });
        }
    }
    group.finish();
}

fn validation(c: &mut Criterion) {
    let n = 100_000;
    let g = family(Family::CircularLadder, n);
    let labeling = solve_circular_ladder_dp(n).unwrap().labeling;
    let mut group = c.benchmark_group("validate");
    group.throughput(Throughput::Elements(g.vertex_count() as u64));
    group.bench_function("circular_ladder_100000", |b| {
        b.iter(|| validate(black_box(&g), black_box(&labeling)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, ladder_dp, search, validation);
criterion_main!(benches);
