use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fermionant::generate::{generate_eulerian_digraph, instance_rng, random_matrix};
use fermionant::{
    character, circuit_partition_poly, fermionant, medial, partitions, tutte, BigInt,
    FermionantAlgorithm, Multigraph, PlaneGraph,
};

fn fermionants(c: &mut Criterion) {
    let mut group = c.benchmark_group("fermionant");
    let k = BigInt::from(2);
    for n in [6usize, 8] {
        let a = random_matrix(&mut instance_rng(1, 0, n as u64), n, -3, 3);
        group.bench_with_input(BenchmarkId::new("brute", n), &a, |b, a| {
            b.iter(|| fermionant(black_box(a), &k, FermionantAlgorithm::Brute).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("immanants", n), &a, |b, a| {
            b.iter(|| fermionant(black_box(a), &k, FermionantAlgorithm::Immanants).unwrap())
        });
    }
    for n in [8usize, 12, 14] {
        let a = random_matrix(&mut instance_rng(1, 1, n as u64), n, 0, 1);
        group.bench_with_input(BenchmarkId::new("dp", n), &a, |b, a| {
            b.iter(|| fermionant(black_box(a), &k, FermionantAlgorithm::Dp).unwrap())
        });
    }
    group.finish();
}

fn wheel(rim: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Multigraph::new(rim + 1, edges).unwrap()
}

fn graph_polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph_poly");
    group.bench_function("tutte/wheel_14_edges", |b| {
        b.iter(|| tutte(black_box(&wheel(7))).unwrap())
    });
    group.bench_function("tutte/k5", |b| {
        b.iter(|| tutte(black_box(&Multigraph::complete(5))).unwrap())
    });
    let k4_medial = medial(&PlaneGraph::k4()).unwrap();
    group.bench_function("circuit/k4_medial", |b| {
        b.iter(|| circuit_partition_poly(black_box(&k4_medial)).unwrap())
    });
    let eulerian = generate_eulerian_digraph(5, 12);
    group.bench_function("circuit/eulerian_12_arcs", |b| {
        b.iter(|| circuit_partition_poly(black_box(&eulerian)).unwrap())
    });
    group.finish();
}

fn characters(c: &mut Criterion) {
    let mut group = c.benchmark_group("character");
    for n in [8usize, 12] {
        let shapes = partitions(n);
        group.bench_with_input(BenchmarkId::new("table", n), &shapes, |b, shapes| {
            b.iter(|| {
                for l in shapes {
                    for mu in shapes {
                        black_box(character(l, mu).unwrap());
                    }
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, fermionants, graph_polynomials, characters);
criterion_main!(benches);
