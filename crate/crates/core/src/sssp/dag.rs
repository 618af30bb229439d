use crate::error::Result;
use crate::graph::{Graph, NodeId};
use crate::topo_sort::topological_sort;

use super::{relax, SsspResult};

/// Shortest paths in a DAG: relax out-arcs once, in topological order.
/// Any weights are allowed. O(V + E).
pub fn dag_shortest_path<N: NodeId>(g: &Graph<N>, source: &N) -> Result<SsspResult<N>> {
    g.require_directed()?;
    let mut r = SsspResult::init(g, source)?;
    for node in topological_sort(g)? {
        for edge in g.out_edges(&node)? {
            relax(&mut r.distance, &mut r.parent, &edge);
        }
    }
    Ok(r)
}
