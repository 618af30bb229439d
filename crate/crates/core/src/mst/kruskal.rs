use crate::disjoint_set::UnionFind;
use crate::error::Result;
use crate::graph::{Graph, NodeId};

use super::SpanningForest;

/// Kruskal's algorithm: scan edges in increasing order and keep those that
/// join two different trees. O(E log V).
pub fn kruskal_mst<N: NodeId>(g: &Graph<N>) -> Result<SpanningForest<N>> {
    g.require_undirected()?;
    let mut uf = UnionFind::new();
    let mut tree = Graph::new(g.node_count(), false);
    for node in g.nodes() {
        uf.create(node.clone())?;
        tree.add_node(node.clone());
    }
    let mut total_weight = 0.0;
    for edge in g.sorted_edges() {
        if uf.union(&edge.source, &edge.target)? {
            total_weight += edge.weight;
            tree.add_edge(edge)?;
        }
    }
    Ok(SpanningForest { tree, total_weight })
}
