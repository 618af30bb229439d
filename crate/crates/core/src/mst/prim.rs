use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::queue::{MinScored, NodeIndex};

use super::PrimTree;

fn pick_source<N: NodeId>(g: &Graph<N>, source: Option<N>) -> Result<N> {
    match source {
        Some(s) if g.has_node(&s) => Ok(s),
        Some(s) => Err(Error::MissingNode(format!("{s:?}"))),
        None => g
            .nodes()
            .min()
            .cloned()
            .ok_or_else(|| Error::MissingNode("(graph is empty)".into())),
    }
}

/// Prim's algorithm with a binary heap. Stale heap entries are skipped when
/// popped instead of being decreased in place. O(E log V).
///
/// The tree spans the component of `source` (the smallest node when `None`).
/// Negative weights are fine.
pub fn prim_mst<N: NodeId>(g: &Graph<N>, source: Option<N>) -> Result<PrimTree<N>> {
    g.require_undirected()?;
    let source = pick_source(g, source)?;
    let mut distance = HashMap::from([(source.clone(), 0.0)]);
    let mut parent = HashMap::from([(source.clone(), None)]);
    let mut settled = HashSet::new();
    let mut pq = BinaryHeap::from([MinScored(0.0, source.clone())]);
    while let Some(MinScored(_, node)) = pq.pop() {
        if !settled.insert(node.clone()) {
            continue;
        }
        for (target, weight) in g.neighbours(&node) {
            if settled.contains(target) {
                continue;
            }
            let best = distance.get(target).copied().unwrap_or(f64::INFINITY);
            if weight < best {
                distance.insert(target.clone(), weight);
                parent.insert(target.clone(), Some(node.clone()));
                pq.push(MinScored(weight, target.clone()));
            }
        }
    }
    let total_weight = distance.values().sum();
    Ok(PrimTree {
        source,
        parent,
        distance,
        total_weight,
    })
}

/// Prim's algorithm selecting the next node by a linear scan. O(V^2), which
/// suits dense graphs.
pub fn prim_matrix_mst<N: NodeId>(g: &Graph<N>, source: Option<N>) -> Result<PrimTree<N>> {
    g.require_undirected()?;
    let source = pick_source(g, source)?;
    let idx = NodeIndex::of_graph(g);
    let arcs = idx.arcs(g);
    let n = idx.len();
    let mut distance = vec![f64::INFINITY; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut in_queue = vec![true; n];
    let mut reached = Vec::new();
    distance[idx.index[&source]] = 0.0;
    for _ in 0..n {
        let mut next: Option<usize> = None;
        for v in 0..n {
            if in_queue[v] && distance[v] < next.map_or(f64::INFINITY, |u| distance[u]) {
                next = Some(v);
            }
        }
        // only nodes outside the source's component remain
        let Some(u) = next else { break };
        in_queue[u] = false;
        reached.push(u);
        for &(t, w) in &arcs[u] {
            if in_queue[t] && w < distance[t] {
                distance[t] = w;
                parent[t] = Some(u);
            }
        }
    }
    let total_weight = reached.iter().map(|&v| distance[v]).sum();
    Ok(PrimTree {
        source,
        parent: reached
            .iter()
            .map(|&v| (idx.nodes[v].clone(), parent[v].map(|p| idx.nodes[p].clone())))
            .collect(),
        distance: reached
            .iter()
            .map(|&v| (idx.nodes[v].clone(), distance[v]))
            .collect(),
        total_weight,
    })
}
