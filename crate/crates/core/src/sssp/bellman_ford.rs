use crate::edge::Edge;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

use super::{relax, SsspResult};

/// Bellman-Ford: |V|-1 passes relaxing every edge, then one checking pass.
/// Negative weights are allowed. O(V E).
///
/// Fails with [`Error::NegativeCycle`] when a cycle of negative weight is
/// reachable from `source`.
pub fn bellman_ford<N: NodeId>(g: &Graph<N>, source: &N) -> Result<SsspResult<N>> {
    g.require_directed()?;
    let mut r = SsspResult::init(g, source)?;
    let edges: Vec<Edge<N>> = g.edges().collect();
    for _ in 1..g.node_count() {
        for edge in &edges {
            relax(&mut r.distance, &mut r.parent, edge);
        }
    }
    for edge in &edges {
        if r.distance[&edge.source] + edge.weight < r.distance[&edge.target] {
            return Err(Error::NegativeCycle);
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_signs() {
        // paths to C: A->C = 7, A->B->C = 3
        let g = Graph::from_edges(true, [('A', 'B', 5.0), ('B', 'C', -2.0), ('A', 'C', 7.0)]).unwrap();
        let r = bellman_ford(&g, &'A').unwrap();
        assert_eq!((r.distance[&'A'], r.distance[&'B'], r.distance[&'C']), (0.0, 5.0, 3.0));
    }

    #[test]
    fn single_node() {
        let mut g = Graph::directed();
        g.add_node(1);
        let r = bellman_ford(&g, &1).unwrap();
        assert_eq!(r.distance[&1], 0.0);
        assert_eq!(r.parent[&1], None);
    }

    #[test]
    fn negative_two_cycle() {
        let g = Graph::from_edges(true, [('A', 'B', 1.0), ('B', 'A', -3.0)]).unwrap();
        assert_eq!(bellman_ford(&g, &'A'), Err(Error::NegativeCycle));
    }

    #[test]
    fn unreachable_negative_cycle_is_not_reported() {
        let g = Graph::from_edges(true, [('A', 'B', 1.0), ('C', 'D', 1.0), ('D', 'C', -3.0)]).unwrap();
        let r = bellman_ford(&g, &'A').unwrap();
        assert_eq!(r.distance[&'C'], f64::INFINITY);
        assert_eq!(bellman_ford(&g, &'C'), Err(Error::NegativeCycle));
    }

    #[test]
    fn zero_weight_cycle_is_fine() {
        let g = Graph::from_edges(true, [(0, 1, 2.0), (1, 2, -1.0), (2, 1, 1.0)]).unwrap();
        assert_eq!(bellman_ford(&g, &0).unwrap().distance[&2], 1.0);
    }

    #[test]
    fn rejects_undirected_and_missing_source() {
        let g = Graph::from_edges(false, [(0, 1, 2.0)]).unwrap();
        assert!(matches!(bellman_ford(&g, &0), Err(Error::WrongMode(_))));
        let d = Graph::from_edges(true, [(0, 1, 2.0)]).unwrap();
        assert!(matches!(bellman_ford(&d, &5), Err(Error::MissingNode(_))));
    }
}
