use crate::edge::Edge;
use crate::error::Result;
use crate::graph::{DistanceMap, Graph, NodeId};
use crate::sssp::{bellman_ford, dijkstra};

use super::matrix::DistanceMatrix;

/// Node type of the augmented graph. `Virtual` is the extra source joined to
/// every node by a zero-weight arc; it cannot collide with a user id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Augmented<N> {
    Node(N),
    Virtual,
}

#[derive(Debug, Clone)]
pub struct JohnsonOutput<N: NodeId> {
    pub distance: DistanceMatrix<N>,
    /// Bellman-Ford distances from the virtual source.
    pub potential: DistanceMap<N>,
    /// Input graph with every weight replaced by `w + h(u) - h(v)`.
    pub reweighted: Graph<N>,
}

/// Johnson's algorithm: reweight with Bellman-Ford potentials, then run
/// Dijkstra from every node. O(V E log V).
pub fn johnson<N: NodeId>(g: &Graph<N>) -> Result<DistanceMatrix<N>> {
    Ok(johnson_detailed(g)?.distance)
}

/// [`johnson`] together with the potentials and the reweighted graph.
/// The input graph is left untouched.
pub fn johnson_detailed<N: NodeId>(g: &Graph<N>) -> Result<JohnsonOutput<N>> {
    g.require_directed()?;
    let mut augmented = Graph::new(g.node_count() + 1, true);
    augmented.add_node(Augmented::Virtual);
    for node in g.nodes() {
        augmented.add_edge(Edge::new(Augmented::Virtual, Augmented::Node(node.clone()), 0.0))?;
    }
    for e in g.edges() {
        augmented.add_edge(Edge::new(Augmented::Node(e.source), Augmented::Node(e.target), e.weight))?;
    }
    let bf = bellman_ford(&augmented, &Augmented::Virtual)?;
    let potential: DistanceMap<N> = bf
        .distance
        .into_iter()
        .filter_map(|(node, h)| match node {
            Augmented::Node(n) => Some((n, h)),
            Augmented::Virtual => None,
        })
        .collect();

    let reweighted = reweight(g, &potential)?;
    let mut distance = DistanceMatrix::identity(g.nodes().cloned());
    let n = distance.len();
    for (i, source) in distance.index.nodes.iter().enumerate() {
        let reduced = dijkstra(&reweighted, source)?;
        for (j, target) in distance.index.nodes.iter().enumerate() {
            distance.data[i * n + j] = reduced.distance[target] - potential[source] + potential[target];
        }
    }
    Ok(JohnsonOutput {
        distance,
        potential,
        reweighted,
    })
}

/// Copy of `g` with weights `w(u, v) + h(u) - h(v)`.
///
/// When `h` satisfies `h(v) <= h(u) + w(u, v)` on every arc (as shortest
/// path distances do) the result has no negative weights. The sum is
/// evaluated as `(h(u) + w) - h(v)` so that this also holds in floating
/// point, where rounding is monotone.
pub fn reweight<N: NodeId>(g: &Graph<N>, potential: &DistanceMap<N>) -> Result<Graph<N>> {
    let mut out = Graph::new(g.node_count(), g.is_directed());
    for node in g.nodes() {
        out.add_node(node.clone());
    }
    for e in g.edges() {
        let w = (potential[&e.source] + e.weight) - potential[&e.target];
        out.add_edge(Edge::new(e.source, e.target, w))?;
    }
    Ok(out)
}
