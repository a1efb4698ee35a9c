//! Benchmarks for the election mechanisms, the polynomial verifiers, the
//! matching engine, and the brute-force oracle.
//!
//! The serial dictatorship group doubles the input size per step; near-
//! linear scaling shows up as near-constant throughput in the criterion
//! report.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::Rng;
use std::hint::black_box;

use parcom::extensions::Extension;
use parcom::graph::{max_matching, min_vertex_cover, BipartiteGraph};
use parcom::mechanisms::{committee_sd, worst_sd, Permutation};
use parcom::model::Committee;
use parcom::oracle::verify_bruteforce;
use parcom::polyalgos::{rs_improve_dichotomous_tw2, rs_score_elect, worst_verify};
use parcom::sampling::{random_dichotomous_tw2_profile, random_profile, seeded_rng};

fn bench_serial_dictatorship(c: &mut Criterion) {
    let mut group = c.benchmark_group("committee_sd");
    for scale in [1usize, 2, 4, 8, 16] {
        let (m, n, k) = (50 * scale, 20 * scale, 10 * scale);
        let mut rng = seeded_rng(7);
        let profile = random_profile(m, n, k, 6, &mut rng);
        let perm = Permutation::identity(n);
        // input size is roughly the sum of preference list lengths
        group.throughput(Throughput::Elements((m * n) as u64));
        group.bench_with_input(BenchmarkId::from_parameter(m * n), &profile, |b, p| {
            b.iter(|| committee_sd(black_box(p), &perm));
        });
    }
    group.finish();
}

fn bench_worst_sd(c: &mut Criterion) {
    let mut group = c.benchmark_group("worst_sd");
    for scale in [1usize, 2, 4] {
        let (m, n, k) = (40 * scale, 15 * scale, 8 * scale);
        let mut rng = seeded_rng(8);
        let profile = random_profile(m, n, k, 5, &mut rng);
        let perm = Permutation::identity(n);
        group.bench_with_input(BenchmarkId::from_parameter(m * n), &profile, |b, p| {
            b.iter(|| worst_sd(black_box(p), &perm));
        });
    }
    group.finish();
}

fn bench_polynomial_verifiers(c: &mut Criterion) {
    let mut rng = seeded_rng(9);
    let dich = random_dichotomous_tw2_profile(60, 40, 12, &mut rng);
    let members = (1..=12).map(parcom::model::Alt).collect();
    let committee = Committee::new(members).unwrap();
    c.bench_function("rs_improve_dichotomous_tw2/m60_n40", |b| {
        b.iter(|| rs_improve_dichotomous_tw2(black_box(&dich), &committee).unwrap());
    });

    let general = random_profile(60, 40, 12, 6, &mut rng);
    c.bench_function("worst_verify/m60_n40", |b| {
        b.iter(|| worst_verify(black_box(&general), &committee).unwrap());
    });
    c.bench_function("rs_score_elect/m60_n40", |b| {
        b.iter(|| rs_score_elect(black_box(&general)));
    });
}

fn bench_matching(c: &mut Criterion) {
    let mut rng = seeded_rng(10);
    let sizes = [(20u32, 20u32), (60, 60), (120, 120)];
    let mut group = c.benchmark_group("bipartite");
    for (nl, nr) in sizes {
        let left: Vec<u32> = (1..=nl).collect();
        let right: Vec<u32> = (nl + 1..=nl + nr).collect();
        let mut edges = Vec::new();
        for &u in &left {
            for &v in &right {
                if rng.random_bool(0.15) {
                    edges.push((u, v));
                }
            }
        }
        let g = BipartiteGraph::new(left, right, edges);
        group.bench_with_input(BenchmarkId::new("max_matching", nl), &g, |b, g| {
            b.iter(|| max_matching(black_box(g)));
        });
        group.bench_with_input(BenchmarkId::new("min_vertex_cover", nl), &g, |b, g| {
            b.iter(|| min_vertex_cover(black_box(g)));
        });
    }
    group.finish();
}

fn bench_bruteforce_oracle(c: &mut Criterion) {
    let mut rng = seeded_rng(11);
    let profile = random_profile(12, 6, 4, 6, &mut rng);
    // an efficient committee forces a full scan of all C(12,4) candidates
    let efficient = rs_score_elect(&profile);
    c.bench_function("verify_bruteforce/rs_m12_k4_full_scan", |b| {
        b.iter(|| verify_bruteforce(black_box(&profile), Extension::Rs, &efficient).unwrap());
    });
}

criterion_group!(
    benches,
    bench_serial_dictatorship,
    bench_worst_sd,
    bench_polynomial_verifiers,
    bench_matching,
    bench_bruteforce_oracle
);
criterion_main!(benches);
