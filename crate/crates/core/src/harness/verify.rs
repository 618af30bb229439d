//! Randomised correctness sweeps: every algorithm against the brute-force
//! oracles and against each other.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::apsp::{faster_all_pairs, floyd_warshall, johnson_detailed, slow_all_pairs};
use crate::edge::Edge;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::generate::{generate, GeneratorSpec, Model};
use crate::harness::oracle::{oracle_mst_weight, oracle_shortest_path};
use crate::mst::{boruvka_mst, kruskal_mst, prim_matrix_mst, prim_mst};
use crate::sssp::{bellman_ford, dag_shortest_path, dijkstra, dijkstra_matrix, SsspResult};

/// Outcome of checking one instance; the message says what disagreed.
pub type Check = std::result::Result<(), String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Mst,
    Sssp,
    Apsp,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mst" => Ok(Suite::Mst),
            "sssp" => Ok(Suite::Sssp),
            "apsp" => Ok(Suite::Apsp),
            _ => Err(Error::InvalidSpec(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Mst => "mst",
            Suite::Sssp => "sssp",
            Suite::Apsp => "apsp",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub instances: usize,
    /// `(instance seed, message)` for every failed instance.
    pub failures: Vec<(u64, String)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `instances` random graphs with between 2 and `max_n` nodes.
pub fn verify(suite: Suite, instances: usize, max_n: usize, seed: u64) -> Result<VerifyReport> {
    let limit = match suite {
        Suite::Mst => super::oracle::MST_LIMIT,
        Suite::Sssp => super::oracle::SHORTEST_PATH_LIMIT,
        Suite::Apsp => super::oracle::SHORTEST_PATH_LIMIT,
    };
    if !(2..=limit).contains(&max_n) {
        return Err(Error::InvalidSpec(format!("max-n must lie in [2, {limit}] for the {suite} suite")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..instances {
        let n = rng.random_range(2..=max_n);
        let s: u64 = rng.random();
        let outcome = match suite {
            Suite::Mst => check_mst_instance(&mst_instance(n, s)?),
            Suite::Sssp => {
                let dag = dag_instance(n, s)?;
                check_sssp_instance(&sssp_instance(n, s)?).and_then(|()| check_dag_instance(&dag))
            }
            Suite::Apsp => check_apsp_instance(&apsp_instance(n, s)?),
        };
        if let Err(message) = outcome {
            failures.push((s, message));
        }
    }
    Ok(VerifyReport {
        suite,
        instances,
        failures,
    })
}

/// Connected undirected graph with distinct integer weights.
pub fn mst_instance(n: usize, seed: u64) -> Result<Graph<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = rng.random_range(0.0..=1.0);
    generate(&GeneratorSpec::new(Model::RandomConnected, n).density(density).distinct(true).seed(seed))
}

/// Directed graph with integer weights in `[0, 20]`.
pub fn sssp_instance(n: usize, seed: u64) -> Result<Graph<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = rng.random_range(0.1..=0.9);
    generate(
        &GeneratorSpec::new(Model::RandomGnp, n)
            .directed(true)
            .density(density)
            .weights(0.0, 20.0)
            .seed(seed),
    )
}

/// DAG with integer weights in `[-10, 10]`.
pub fn dag_instance(n: usize, seed: u64) -> Result<Graph<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = rng.random_range(0.1..=0.9);
    generate(&GeneratorSpec::new(Model::Dag, n).density(density).weights(-10.0, 10.0).seed(seed))
}

/// Directed graph with mixed-sign integer weights and no negative cycle.
///
/// Weights are `base + p(u) - p(v)` with `base` in `[0, 20]` and a random
/// integer potential `p`; the potential cancels around every cycle, so
/// cycles keep the non-negative weight of their bases.
pub fn apsp_instance(n: usize, seed: u64) -> Result<Graph<u32>> {
    let base = sssp_instance(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(17));
    let p: Vec<i32> = (0..n).map(|_| rng.random_range(-10..=10)).collect();
    let mut g = Graph::new(n, true);
    for v in base.nodes() {
        g.add_node(*v);
    }
    for e in base.edges() {
        let w = e.weight + f64::from(p[e.source as usize] - p[e.target as usize]);
        g.add_edge(Edge::new(e.source, e.target, w))?;
    }
    Ok(g)
}

/// An [`apsp_instance`] with a negative cycle planted on 2 to 4 nodes.
/// Returns the graph and a node on the cycle.
pub fn negative_cycle_instance(n: usize, seed: u64) -> Result<(Graph<u32>, u32)> {
    if n < 2 {
        return Err(Error::InvalidSpec("a cycle needs two nodes".into()));
    }
    let mut g = apsp_instance(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(33));
    let len = rng.random_range(2..=n.min(4));
    let cycle: Vec<u32> = rand::seq::index::sample(&mut rng, n, len)
        .into_iter()
        .map(|i| i as u32)
        .collect();
    let mut weights: Vec<f64> = (0..len).map(|_| f64::from(rng.random_range(-10..=10))).collect();
    // fix the last arc so the cycle totals -1 to -5
    let partial: f64 = weights[..len - 1].iter().sum();
    weights[len - 1] = -f64::from(rng.random_range(1..=5)) - partial;
    for (i, w) in weights.into_iter().enumerate() {
        let (s, t) = (cycle[i], cycle[(i + 1) % len]);
        let _ = g.del_edge(&Edge::unit(s, t));
        g.add_edge(Edge::new(s, t, w))?;
    }
    Ok((g, cycle[0]))
}

fn fail(msg: impl fmt::Display) -> String {
    msg.to_string()
}

/// Every MST algorithm against the exhaustive oracle. With distinct weights
/// the edge sets must coincide as well.
pub fn check_mst_instance(g: &Graph<u32>) -> Check {
    let best = oracle_mst_weight(g).map_err(fail)?;
    let kruskal = kruskal_mst(g).map_err(fail)?;
    let forests = [
        ("boruvka", boruvka_mst(g).map_err(fail)?),
        ("prim", prim_mst(g, None).map_err(fail)?.to_forest()),
        ("prim_matrix", prim_matrix_mst(g, None).map_err(fail)?.to_forest()),
    ];
    if kruskal.total_weight != best {
        return Err(format!("kruskal weight {} != oracle {best}", kruskal.total_weight));
    }
    let mut weights: Vec<f64> = g.edges().map(|e| e.weight).collect();
    weights.sort_unstable_by(f64::total_cmp);
    let distinct = weights.windows(2).all(|w| w[0] != w[1]);
    let reference = kruskal.tree.sorted_edges();
    for (name, forest) in forests {
        if forest.total_weight != best {
            return Err(format!("{name} weight {} != oracle {best}", forest.total_weight));
        }
        if distinct && forest.tree.sorted_edges() != reference {
            return Err(format!("{name} edge set differs from kruskal"));
        }
    }
    if kruskal.tree.edge_count() + 1 != g.node_count() {
        return Err("spanning tree has the wrong number of edges".into());
    }
    Ok(())
}

/// A reconstructed path must run source to target over existing arcs and
/// weigh exactly the reported distance.
pub fn check_path(g: &Graph<u32>, path: &[u32], source: u32, target: u32, distance: f64) -> Check {
    if path.first() != Some(&source) || path.last() != Some(&target) {
        return Err(format!("path {path:?} does not join {source} to {target}"));
    }
    let w = g.path_weight(path).map_err(fail)?;
    if w != distance {
        return Err(format!("path {path:?} weighs {w}, distance is {distance}"));
    }
    Ok(())
}

fn check_sssp_paths(g: &Graph<u32>, name: &str, r: &SsspResult<u32>) -> Check {
    for (&t, &d) in &r.distance {
        if d.is_finite() {
            let path = r.path_to(&t).map_err(|e| format!("{name}: {e}"))?;
            check_path(g, &path, r.source, t, d).map_err(|e| format!("{name}: {e}"))?;
        }
    }
    Ok(())
}

/// Dijkstra (both variants) and Bellman-Ford against simple-path enumeration
/// for every source/target pair, plus path soundness.
pub fn check_sssp_instance(g: &Graph<u32>) -> Check {
    for s in g.sorted_nodes() {
        let runs = [
            ("bellman_ford", bellman_ford(g, &s).map_err(fail)?),
            ("dijkstra", dijkstra(g, &s).map_err(fail)?),
            ("dijkstra_matrix", dijkstra_matrix(g, &s).map_err(fail)?),
        ];
        for t in g.sorted_nodes() {
            let want = oracle_shortest_path(g, &s, &t).map_err(fail)?;
            for (name, r) in &runs {
                if r.distance[&t] != want {
                    return Err(format!("{name} {s}->{t}: {} != oracle {want}", r.distance[&t]));
                }
            }
        }
        for (name, r) in &runs {
            check_sssp_paths(g, name, r)?;
        }
    }
    Ok(())
}

/// DAG relaxation against Bellman-Ford from every source.
pub fn check_dag_instance(g: &Graph<u32>) -> Check {
    for s in g.sorted_nodes() {
        let dag = dag_shortest_path(g, &s).map_err(fail)?;
        let bf = bellman_ford(g, &s).map_err(fail)?;
        if dag.distance != bf.distance {
            return Err(format!("dag_shortest_path from {s} differs from bellman_ford"));
        }
        check_sssp_paths(g, "dag_shortest_path", &dag)?;
    }
    Ok(())
}

/// The four all-pairs algorithms must agree exactly, every row must equal
/// Bellman-Ford from that source, Floyd-Warshall paths must be sound and
/// Johnson's reweighted graph must have no negative arc.
pub fn check_apsp_instance(g: &Graph<u32>) -> Check {
    let fw = floyd_warshall(g).map_err(fail)?;
    let jo = johnson_detailed(g).map_err(fail)?;
    if let Some(e) = jo.reweighted.edges().find(|e| e.weight < 0.0) {
        return Err(format!("johnson reweighted arc {e} is negative"));
    }
    if jo.distance != fw.distance {
        return Err("johnson differs from floyd_warshall".into());
    }
    if slow_all_pairs(g).map_err(fail)? != fw.distance {
        return Err("slow_all_pairs differs from floyd_warshall".into());
    }
    if faster_all_pairs(g).map_err(fail)? != fw.distance {
        return Err("faster_all_pairs differs from floyd_warshall".into());
    }
    for s in g.sorted_nodes() {
        let bf = bellman_ford(g, &s).map_err(fail)?;
        if fw.distance.row(&s).expect("node of g") != bf.distance {
            return Err(format!("row {s} differs from bellman_ford"));
        }
        for t in g.sorted_nodes() {
            let d = fw.distance.get(&s, &t).expect("node of g");
            if d.is_finite() {
                let path = fw.path(&s, &t).map_err(fail)?;
                check_path(g, &path, s, t, d)?;
            }
        }
    }
    Ok(())
}
