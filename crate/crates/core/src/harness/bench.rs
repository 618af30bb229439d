//! Wall-clock scaling measurements.
//!
//! [`bench`] times one algorithm over generated instances of increasing size
//! and [`fit_log_log`] fits `log(time) = slope * log(V) + c` through the
//! per-size medians. For an algorithm running in Θ(V^k) the slope should
//! come out near `k`. The acceptance bands are ±0.3 around the exponent for
//! Θ(V^2) and ±0.4 for Θ(V^3), which leaves room for constant factors and
//! cache effects at these modest sizes.

use std::fmt;
use std::hint::black_box;
use std::io::{Read, Write};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::apsp;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::generate::{generate, GeneratorSpec};
use crate::{mst, sssp, topo_sort};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Boruvka,
    Prim,
    PrimMatrix,
    Kruskal,
    BellmanFord,
    Dijkstra,
    DijkstraMatrix,
    DagShortestPath,
    FloydWarshall,
    Johnson,
    SlowAllPairs,
    FasterAllPairs,
    TopologicalSort,
}

impl Algorithm {
    pub const ALL: [Algorithm; 13] = [
        Algorithm::Boruvka,
        Algorithm::Prim,
        Algorithm::PrimMatrix,
        Algorithm::Kruskal,
        Algorithm::BellmanFord,
        Algorithm::Dijkstra,
        Algorithm::DijkstraMatrix,
        Algorithm::DagShortestPath,
        Algorithm::FloydWarshall,
        Algorithm::Johnson,
        Algorithm::SlowAllPairs,
        Algorithm::FasterAllPairs,
        Algorithm::TopologicalSort,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Boruvka => "boruvka",
            Algorithm::Prim => "prim",
            Algorithm::PrimMatrix => "prim_matrix",
            Algorithm::Kruskal => "kruskal",
            Algorithm::BellmanFord => "bellman_ford",
            Algorithm::Dijkstra => "dijkstra",
            Algorithm::DijkstraMatrix => "dijkstra_matrix",
            Algorithm::DagShortestPath => "dag_shortest_path",
            Algorithm::FloydWarshall => "floyd_warshall",
            Algorithm::Johnson => "johnson",
            Algorithm::SlowAllPairs => "slow_all_pairs",
            Algorithm::FasterAllPairs => "faster_all_pairs",
            Algorithm::TopologicalSort => "topological_sort",
        }
    }

    /// Spanning tree algorithms need undirected input, everything else
    /// directed input.
    pub fn wants_directed(self) -> bool {
        !matches!(
            self,
            Algorithm::Boruvka | Algorithm::Prim | Algorithm::PrimMatrix | Algorithm::Kruskal
        )
    }

    /// Runs the algorithm once, from the smallest node where a source is
    /// needed, discarding the result.
    pub fn run_once(self, g: &Graph<u32>) -> Result<()> {
        let source = g.nodes().min().copied().unwrap_or_default();
        match self {
            Algorithm::Boruvka => drop(black_box(mst::boruvka_mst(g)?)),
            Algorithm::Prim => drop(black_box(mst::prim_mst(g, Some(source))?)),
            Algorithm::PrimMatrix => drop(black_box(mst::prim_matrix_mst(g, Some(source))?)),
            Algorithm::Kruskal => drop(black_box(mst::kruskal_mst(g)?)),
            Algorithm::BellmanFord => drop(black_box(sssp::bellman_ford(g, &source)?)),
            Algorithm::Dijkstra => drop(black_box(sssp::dijkstra(g, &source)?)),
            Algorithm::DijkstraMatrix => drop(black_box(sssp::dijkstra_matrix(g, &source)?)),
            Algorithm::DagShortestPath => drop(black_box(sssp::dag_shortest_path(g, &source)?)),
            Algorithm::FloydWarshall => drop(black_box(apsp::floyd_warshall(g)?)),
            Algorithm::Johnson => drop(black_box(apsp::johnson(g)?)),
            Algorithm::SlowAllPairs => drop(black_box(apsp::slow_all_pairs(g)?)),
            Algorithm::FasterAllPairs => drop(black_box(apsp::faster_all_pairs(g)?)),
            Algorithm::TopologicalSort => drop(black_box(topo_sort::topological_sort(g)?)),
        }
        Ok(())
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.replace('-', "_");
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == wanted)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// One timed run. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algorithm: String,
    pub v: usize,
    pub e: usize,
    pub trial: usize,
    pub seed: u64,
    #[serde(rename = "wall_time_s")]
    pub wall_time: f64,
}

/// Seed of one generated instance; distinct across sizes and trials.
fn instance_seed(base: u64, size: usize, trial: usize) -> u64 {
    base ^ (size as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (trial as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
}

/// Times `algorithm` on one fresh instance per `(size, trial)`.
///
/// `template` fixes the model, density, weights and base seed; its `n` is
/// replaced by each size and its direction by what the algorithm needs.
/// Only the algorithm is timed, never instance generation. Runs are strictly
/// sequential.
pub fn bench(algorithm: &str, sizes: &[usize], trials: usize, template: &GeneratorSpec) -> Result<Vec<BenchRecord>> {
    let algo: Algorithm = algorithm.parse()?;
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSpec("sizes must be non-empty and strictly ascending".into()));
    }
    let mut records = Vec::with_capacity(sizes.len() * trials);
    for &size in sizes {
        for trial in 0..trials {
            let seed = instance_seed(template.seed, size, trial);
            let spec = GeneratorSpec {
                n: size,
                directed: algo.wants_directed(),
                seed,
                ..template.clone()
            };
            let g = generate(&spec)?;
            let start = Instant::now();
            algo.run_once(&g)?;
            let wall_time = start.elapsed().as_secs_f64();
            records.push(BenchRecord {
                algorithm: algo.name().to_string(),
                v: g.node_count(),
                e: g.edge_count(),
                trial,
                seed,
                wall_time,
            });
        }
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    /// `(V, median seconds)` per size.
    pub points: Vec<(usize, f64)>,
}

/// Least-squares line through `(ln V, ln median time)`.
///
/// Needs at least two distinct sizes.
pub fn fit_log_log(records: &[BenchRecord]) -> Option<SlopeFit> {
    let mut sizes: Vec<usize> = records.iter().map(|r| r.v).collect();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() < 2 {
        return None;
    }
    let points: Vec<(usize, f64)> = sizes
        .into_iter()
        .map(|v| {
            let mut times: Vec<f64> = records.iter().filter(|r| r.v == v).map(|r| r.wall_time).collect();
            times.sort_unstable_by(f64::total_cmp);
            let mid = times.len() / 2;
            let median = if times.len() % 2 == 1 {
                times[mid]
            } else {
                (times[mid - 1] + times[mid]) / 2.0
            };
            (v, median)
        })
        .collect();
    let xs: Vec<f64> = points.iter().map(|(v, _)| (*v as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|(_, t)| t.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    Some(SlopeFit {
        slope,
        intercept: my - slope * mx,
        points,
    })
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(io)?;
    }
    if records.is_empty() {
        w.write_record(["algorithm", "v", "e", "trial", "seed", "wall_time_s"])
            .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<BenchRecord>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .enumerate()
        .map(|(i, row)| {
            row.map_err(|e| Error::Parse {
                line: i + 2,
                message: e.to_string(),
            })
        })
        .collect()
}
