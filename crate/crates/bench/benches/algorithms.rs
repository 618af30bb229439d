use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use wgraph::apsp::{faster_all_pairs, floyd_warshall, johnson};
use wgraph::mst::{boruvka_mst, kruskal_mst, prim_matrix_mst, prim_mst};
use wgraph::sssp::{bellman_ford, dijkstra, dijkstra_matrix};
use wgraph_bench::{complete, sparse_connected, sparse_directed};

fn mst(c: &mut Criterion) {
    let mut group = c.benchmark_group("mst");
    for (label, g) in [("sparse", sparse_connected(1000, 4.0)), ("complete", complete(200, false))] {
        group.bench_with_input(BenchmarkId::new("boruvka", label), &g, |b, g| b.iter(|| boruvka_mst(black_box(g))));
        group.bench_with_input(BenchmarkId::new("kruskal", label), &g, |b, g| b.iter(|| kruskal_mst(black_box(g))));
        group.bench_with_input(BenchmarkId::new("prim", label), &g, |b, g| b.iter(|| prim_mst(black_box(g), Some(0))));
        group.bench_with_input(BenchmarkId::new("prim_matrix", label), &g, |b, g| {
            b.iter(|| prim_matrix_mst(black_box(g), Some(0)))
        });
    }
    group.finish();
}

// heap against linear scan: the heap should win on sparse input, the scan
// on dense input
fn sssp(c: &mut Criterion) {
    let mut group = c.benchmark_group("sssp");
    for (label, g) in [("sparse", sparse_directed(1000, 4.0)), ("complete", complete(200, true))] {
        group.bench_with_input(BenchmarkId::new("dijkstra", label), &g, |b, g| b.iter(|| dijkstra(black_box(g), &0)));
        group.bench_with_input(BenchmarkId::new("dijkstra_matrix", label), &g, |b, g| {
            b.iter(|| dijkstra_matrix(black_box(g), &0))
        });
    }
    let g = sparse_directed(300, 4.0);
    group.bench_function("bellman_ford/sparse", |b| b.iter(|| bellman_ford(black_box(&g), &0)));
    group.finish();
}

fn apsp(c: &mut Criterion) {
    let mut group = c.benchmark_group("apsp");
    group.sample_size(20);
    for n in [50, 100] {
        let dense = complete(n, true);
        let sparse = sparse_directed(n, 3.0);
        group.bench_with_input(BenchmarkId::new("floyd_warshall/complete", n), &dense, |b, g| {
            b.iter(|| floyd_warshall(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("johnson/complete", n), &dense, |b, g| b.iter(|| johnson(black_box(g))));
        group.bench_with_input(BenchmarkId::new("johnson/sparse", n), &sparse, |b, g| b.iter(|| johnson(black_box(g))));
        group.bench_with_input(BenchmarkId::new("faster_all_pairs/complete", n), &dense, |b, g| {
            b.iter(|| faster_all_pairs(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(benches, mst, sssp, apsp);
criterion_main!(benches);
