use std::collections::BTreeMap;

use crate::disjoint_set::UnionFind;
use crate::edge::Edge;
use crate::error::Result;
use crate::graph::{Graph, NodeId};

use super::SpanningForest;

/// Borůvka's algorithm. Each phase picks the cheapest edge leaving every
/// component and merges along all of them, so there are O(log V) phases of
/// O(E) work each.
///
/// Works on disconnected graphs (the result is a spanning forest) and with
/// repeated weights, since edges with equal weight are still ordered by
/// their endpoints.
pub fn boruvka_mst<N: NodeId>(g: &Graph<N>) -> Result<SpanningForest<N>> {
    run(g, |_| ())
}

fn run<N: NodeId>(g: &Graph<N>, mut on_phase: impl FnMut(usize)) -> Result<SpanningForest<N>> {
    g.require_undirected()?;
    let mut uf = UnionFind::new();
    let mut tree = Graph::new(g.node_count(), false);
    for node in g.nodes() {
        uf.create(node.clone())?;
        tree.add_node(node.clone());
    }
    let edges: Vec<Edge<N>> = g.edges().collect();
    let mut total_weight = 0.0;
    on_phase(uf.set_count());
    while uf.set_count() > 1 {
        // component root -> cheapest outgoing edge; a missing entry plays the
        // role of an infinitely heavy dummy edge
        let mut cheapest: BTreeMap<N, &Edge<N>> = BTreeMap::new();
        for edge in &edges {
            let source = uf.find(&edge.source)?;
            let target = uf.find(&edge.target)?;
            if source == target {
                continue;
            }
            for root in [source, target] {
                let best = cheapest.entry(root).or_insert(edge);
                if edge < *best {
                    *best = edge;
                }
            }
        }
        if cheapest.is_empty() {
            // every remaining component is finished: disconnected input
            break;
        }
        for edge in cheapest.into_values() {
            if uf.union(&edge.source, &edge.target)? {
                total_weight += edge.weight;
                tree.add_edge(edge.clone())?;
            }
        }
        on_phase(uf.set_count());
    }
    Ok(SpanningForest { tree, total_weight })
}

/// Component counts observed before the first phase and after each phase.
#[cfg(test)]
pub(super) fn phase_component_counts<N: NodeId>(g: &Graph<N>) -> Vec<usize> {
    let mut counts = Vec::new();
    run(g, |c| counts.push(c)).unwrap();
    counts
}
