//! Benchmarks the decompositions on layered synthetic graphs, comparing the
//! default (rayon) exact search against the sequential driver.
//!
//! Run with `cargo bench -p densify-core`. Building with
//! `--no-default-features` turns the default entry points sequential; the
//! explicit `_seq` series stays meaningful either way.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use densify_core::{core_decomposition, exact_ld, exact_ld_seq, greedy_ld, peel, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A graph with planted density layers: `layers` nested vertex groups, the
/// inner ones denser. Produces chains long enough to give the interval
/// search real work.
fn layered_graph(layers: usize, layer_size: usize, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = layers * layer_size;
    let mut edges = Vec::new();
    for layer in 0..layers {
        let start = layer * layer_size;
        let p = 0.9 * (layers - layer) as f64 / layers as f64;
        // edges inside the layer
        for u in start..start + layer_size {
            for w in u + 1..start + layer_size {
                if rng.random_bool(p) {
                    edges.push((u as u32, w as u32));
                }
            }
        }
        // sparse attachment to the inner layers
        for u in start..start + layer_size {
            for w in 0..start {
                if rng.random_bool(p / (layers as f64 * 4.0)) {
                    edges.push((w as u32, u as u32));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_unlabeled_edges(n, &edges)
}

fn bench_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_ld");
    group.sample_size(10);
    // the small sizes sit below the parallel crossover on a couple of
    // cores; the largest one is where the interval search fans out
    for &(layers, layer_size) in &[(4usize, 30usize), (6, 50), (8, 80), (12, 250)] {
        let graph = layered_graph(layers, layer_size, 7);
        let edges = graph.edge_count() as u64;
        group.throughput(Throughput::Elements(edges));
        let label = format!("{}x{}", layers, layer_size);
        group.bench_with_input(BenchmarkId::new("parallel", &label), &graph, |b, g| {
            b.iter(|| exact_ld(g))
        });
        group.bench_with_input(BenchmarkId::new("sequential", &label), &graph, |b, g| {
            b.iter(|| exact_ld_seq(g))
        });
    }
    group.finish();
}

fn bench_linear_passes(c: &mut Criterion) {
    let mut group = c.benchmark_group("linear_time");
    let graph = layered_graph(8, 80, 7);
    group.throughput(Throughput::Elements(graph.edge_count() as u64));
    group.bench_function("peel", |b| b.iter(|| peel(&graph)));
    group.bench_function("greedy_ld", |b| b.iter(|| greedy_ld(&graph)));
    group.bench_function("core_decomposition", |b| b.iter(|| core_decomposition(&graph)));
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let graph = layered_graph(2, 7, 11); // 14 vertices, chain-oracle sized
    group.bench_function("brute_densest_14", |b| {
        b.iter(|| densify_core::oracle::brute_densest(&graph).unwrap())
    });
    group.bench_function("brute_chain_14", |b| {
        b.iter(|| densify_core::oracle::brute_locally_dense_chain(&graph).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_exact, bench_linear_passes, bench_oracle);
criterion_main!(benches);
