use crate::error::Result;
use crate::graph::{Graph, NodeId};

use super::matrix::{min_plus_product, DistanceMatrix};

/// Extends shortest paths one edge at a time: `L(m) = L(m-1) ⊗ W` up to
/// `m = V - 1`. O(V^4).
///
/// Negative cycles are not detected; the input must be free of them.
pub fn slow_all_pairs<N: NodeId>(g: &Graph<N>) -> Result<DistanceMatrix<N>> {
    g.require_directed()?;
    let w = DistanceMatrix::from_graph(g);
    let mut l = w.clone();
    for _ in 2..w.len() {
        l = min_plus_product(&l, &w)?;
    }
    Ok(l)
}

/// Repeated squaring `L(2m) = L(m) ⊗ L(m)` until `m >= V - 1`.
/// O(V^3 log V).
pub fn faster_all_pairs<N: NodeId>(g: &Graph<N>) -> Result<DistanceMatrix<N>> {
    g.require_directed()?;
    Ok(square_until_done(DistanceMatrix::from_graph(g))?.0)
}

/// Returns the closure and the number of products computed.
pub(crate) fn square_until_done<N: NodeId>(w: DistanceMatrix<N>) -> Result<(DistanceMatrix<N>, usize)> {
    let target = w.len().saturating_sub(1);
    let mut l = w;
    let mut m = 1;
    let mut products = 0;
    while m < target {
        l = min_plus_product(&l, &l)?;
        m *= 2;
        products += 1;
    }
    Ok((l, products))
}
