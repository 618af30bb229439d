//! Topological ordering (Kahn's method).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Orders the nodes of a directed acyclic graph so that every arc points
/// forward. Among nodes that are ready at the same time the smallest id is
/// emitted first, which makes the result deterministic.
pub fn topological_sort<N: NodeId>(g: &Graph<N>) -> Result<Vec<N>> {
    g.require_directed()?;
    let mut indegree: HashMap<&N, usize> = g.nodes().map(|n| (n, 0)).collect();
    for n in g.nodes() {
        for (t, _) in g.neighbours(n) {
            *indegree.get_mut(t).expect("targets are nodes") += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<&N>> = indegree
        .iter()
        .filter(|(_, d)| **d == 0)
        .map(|(n, _)| Reverse(*n))
        .collect();
    let mut order = Vec::with_capacity(g.node_count());
    while let Some(Reverse(n)) = ready.pop() {
        order.push(n.clone());
        for (t, _) in g.neighbours(n) {
            let d = indegree.get_mut(t).expect("targets are nodes");
            *d -= 1;
            if *d == 0 {
                ready.push(Reverse(t));
            }
        }
    }
    // nodes still holding in-arcs sit on or behind a cycle
    if order.len() != g.node_count() {
        return Err(Error::CyclicGraph);
    }
    Ok(order)
}
