//! Exhaustive reference answers for small graphs.
//!
//! These deliberately share no code with the algorithms they check.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

pub const SHORTEST_PATH_LIMIT: usize = 12;
pub const MST_LIMIT: usize = 8;

/// Minimum weight over all simple paths from `source` to `target`, or
/// infinity when there is none. Exact on graphs without negative cycles.
pub fn oracle_shortest_path<N: NodeId>(g: &Graph<N>, source: &N, target: &N) -> Result<f64> {
    let n = g.node_count();
    if n > SHORTEST_PATH_LIMIT {
        return Err(Error::TooLarge {
            nodes: n,
            limit: SHORTEST_PATH_LIMIT,
        });
    }
    let nodes: Vec<&N> = g.nodes().collect();
    let id: HashMap<&N, usize> = nodes.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let (Some(&s), Some(&t)) = (id.get(source), id.get(target)) else {
        return Err(Error::MissingNode(format!("{source:?} or {target:?}")));
    };
    let arcs: Vec<Vec<(usize, f64)>> = nodes
        .iter()
        .map(|u| g.neighbours(u).map(|(v, w)| (id[v], w)).collect())
        .collect();

    fn walk(arcs: &[Vec<(usize, f64)>], at: usize, target: usize, visited: u32, sum: f64, best: &mut f64) {
        if at == target {
            *best = best.min(sum);
            return;
        }
        for &(next, w) in &arcs[at] {
            if visited & (1 << next) == 0 {
                walk(arcs, next, target, visited | (1 << next), sum + w, best);
            }
        }
    }

    let mut best = f64::INFINITY;
    walk(&arcs, s, t, 1 << s, 0.0, &mut best);
    Ok(best)
}

/// Minimum total weight over all spanning trees of a connected undirected
/// graph with at most eight nodes.
pub fn oracle_mst_weight<N: NodeId>(g: &Graph<N>) -> Result<f64> {
    if g.is_directed() {
        return Err(Error::WrongMode("graph is directed"));
    }
    let n = g.node_count();
    if n > MST_LIMIT {
        return Err(Error::TooLarge { nodes: n, limit: MST_LIMIT });
    }
    if n == 0 {
        return Ok(0.0);
    }
    let nodes: Vec<&N> = g.nodes().collect();
    let id: HashMap<&N, usize> = nodes.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let edges: Vec<(usize, usize, f64)> = g
        .edges()
        .map(|e| (id[&e.source], id[&e.target], e.weight))
        .collect();

    // Choose or skip each edge in turn; `label` names the component of each
    // node among the chosen edges so far, which rules out cycles.
    fn choose(edges: &[(usize, usize, f64)], pos: usize, needed: usize, label: [usize; MST_LIMIT], sum: f64, best: &mut f64) {
        if needed == 0 {
            *best = best.min(sum);
            return;
        }
        if edges.len() - pos < needed {
            return;
        }
        let (a, b, w) = edges[pos];
        if label[a] != label[b] {
            let (from, to) = (label[b], label[a]);
            let mut merged = label;
            for l in merged.iter_mut() {
                if *l == from {
                    *l = to;
                }
            }
            choose(edges, pos + 1, needed - 1, merged, sum + w, best);
        }
        choose(edges, pos + 1, needed, label, sum, best);
    }

    let mut label = [0; MST_LIMIT];
    for (i, l) in label.iter_mut().enumerate() {
        *l = i;
    }
    let mut best = f64::INFINITY;
    choose(&edges, 0, n - 1, label, 0.0, &mut best);
    if best == f64::INFINITY {
        return Err(Error::Disconnected);
    }
    Ok(best)
}
