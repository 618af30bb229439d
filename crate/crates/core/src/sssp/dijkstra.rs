use std::collections::{BinaryHeap, HashSet};

use crate::error::Result;
use crate::graph::{Graph, NodeId};
use crate::queue::{MinScored, NodeIndex};

use super::{check_non_negative, parents_from_index, relax, SsspResult};

/// Dijkstra's algorithm with a binary heap and lazy deletion. O(E log V).
///
/// All weights must be non-negative; this is checked up front and reported
/// as [`crate::Error::NegativeWeight`].
pub fn dijkstra<N: NodeId>(g: &Graph<N>, source: &N) -> Result<SsspResult<N>> {
    run(g, source, |_| ())
}

/// Like [`dijkstra`], also returning nodes in the order they were settled.
pub fn dijkstra_traced<N: NodeId>(g: &Graph<N>, source: &N) -> Result<(SsspResult<N>, Vec<N>)> {
    let mut order = Vec::new();
    let r = run(g, source, |n| order.push(n.clone()))?;
    Ok((r, order))
}

fn run<N: NodeId>(g: &Graph<N>, source: &N, mut on_settle: impl FnMut(&N)) -> Result<SsspResult<N>> {
    g.require_directed()?;
    check_non_negative(g)?;
    let mut r = SsspResult::init(g, source)?;
    let mut settled = HashSet::new();
    let mut pq = BinaryHeap::from([MinScored(0.0, source.clone())]);
    while let Some(MinScored(_, node)) = pq.pop() {
        if !settled.insert(node.clone()) {
            continue;
        }
        on_settle(&node);
        for edge in g.out_edges(&node)? {
            if !settled.contains(&edge.target) && relax(&mut r.distance, &mut r.parent, &edge) {
                pq.push(MinScored(r.distance[&edge.target], edge.target));
            }
        }
    }
    Ok(r)
}

/// Dijkstra's algorithm selecting the next node by a linear scan. O(V^2),
/// which suits dense graphs.
pub fn dijkstra_matrix<N: NodeId>(g: &Graph<N>, source: &N) -> Result<SsspResult<N>> {
    g.require_directed()?;
    check_non_negative(g)?;
    let init = SsspResult::init(g, source)?;
    let idx = NodeIndex::of_graph(g);
    let arcs = idx.arcs(g);
    let n = idx.len();
    let mut distance = vec![f64::INFINITY; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut in_queue = vec![true; n];
    distance[idx.index[source]] = 0.0;
    for _ in 0..n {
        let mut next: Option<usize> = None;
        for v in 0..n {
            if in_queue[v] && distance[v] < next.map_or(f64::INFINITY, |u| distance[u]) {
                next = Some(v);
            }
        }
        let Some(u) = next else { break };
        in_queue[u] = false;
        for &(t, w) in &arcs[u] {
            if in_queue[t] && distance[u] + w < distance[t] {
                distance[t] = distance[u] + w;
                parent[t] = Some(u);
            }
        }
    }
    Ok(SsspResult {
        source: init.source,
        distance: idx.nodes.iter().cloned().zip(distance).collect(),
        parent: parents_from_index(&idx.nodes, &parent),
    })
}
