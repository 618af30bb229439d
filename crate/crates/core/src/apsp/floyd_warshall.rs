use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, Path};

use super::matrix::{reconstruct_path_apsp, DistanceMatrix, ParentMatrix};

/// Distances and predecessors for every ordered pair of nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct AllPairsPaths<N: NodeId> {
    pub distance: DistanceMatrix<N>,
    pub parent: ParentMatrix<N>,
}

impl<N: NodeId> AllPairsPaths<N> {
    pub fn path(&self, source: &N, target: &N) -> Result<Path<N>> {
        reconstruct_path_apsp(&self.parent, source, target)
    }
}

/// Floyd-Warshall: admit intermediate nodes one at a time. Θ(V^3).
///
/// Negative weights are allowed; a negative entry left on the diagonal means
/// a negative cycle and is reported as [`Error::NegativeCycle`].
pub fn floyd_warshall<N: NodeId>(g: &Graph<N>) -> Result<AllPairsPaths<N>> {
    run(g, |_| ())
}

/// `after_round` sees the distance table after each intermediate node.
pub(crate) fn run<N: NodeId>(g: &Graph<N>, mut after_round: impl FnMut(&[f64])) -> Result<AllPairsPaths<N>> {
    g.require_directed()?;
    let mut distance = DistanceMatrix::identity(g.nodes().cloned());
    let n = distance.len();
    // plain indices with a sentinel keep the inner loop free of 16-byte options
    const NONE: usize = usize::MAX;
    let mut parent = vec![NONE; n * n];
    for (i, arcs) in distance.index.arcs(g).into_iter().enumerate() {
        for (j, w) in arcs {
            distance.data[i * n + j] = w;
            parent[i * n + j] = i;
        }
    }
    let d = &mut distance.data;
    let mut row_k = vec![0.0; n];
    let mut parent_k = vec![NONE; n];
    for k in 0..n {
        // row k cannot improve while k is the intermediate, so a copy is exact
        row_k.copy_from_slice(&d[k * n..(k + 1) * n]);
        parent_k.copy_from_slice(&parent[k * n..(k + 1) * n]);
        for (row_i, parent_i) in d.chunks_exact_mut(n).zip(parent.chunks_exact_mut(n)) {
            let dik = row_i[k];
            if dik == f64::INFINITY {
                continue;
            }
            // branch-free select; how often an update fires varies a lot
            // between rounds and would otherwise dominate through mispredictions
            for ((dij, pij), (&dkj, &pkj)) in row_i.iter_mut().zip(parent_i.iter_mut()).zip(row_k.iter().zip(&parent_k)) {
                let alt = dik + dkj;
                let better = alt < *dij;
                *dij = if better { alt } else { *dij };
                *pij = if better { pkj } else { *pij };
            }
        }
        after_round(d);
    }
    if (0..n).any(|i| d[i * n + i] < 0.0) {
        return Err(Error::NegativeCycle);
    }
    let index = distance.index.clone();
    let data = parent.into_iter().map(|p| (p != NONE).then_some(p)).collect();
    Ok(AllPairsPaths {
        distance,
        parent: ParentMatrix { index, data },
    })
}
