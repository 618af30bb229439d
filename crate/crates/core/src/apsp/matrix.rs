use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DistanceMap, Graph, NodeId, Path};
use crate::queue::NodeIndex;

/// Dense all-pairs distance table indexed by node ids.
///
/// Nodes are kept in ascending order; absent pairs hold `f64::INFINITY`.
#[derive(Clone, PartialEq)]
pub struct DistanceMatrix<N: NodeId> {
    pub(crate) index: NodeIndex<N>,
    pub(crate) data: Vec<f64>,
}

impl<N: NodeId> DistanceMatrix<N> {
    /// Min-plus identity: zero on the diagonal, infinity elsewhere.
    pub fn identity<I: IntoIterator<Item = N>>(nodes: I) -> Self {
        let mut nodes: Vec<N> = nodes.into_iter().collect();
        nodes.sort_unstable();
        nodes.dedup();
        let n = nodes.len();
        let mut data = vec![f64::INFINITY; n * n];
        for i in 0..n {
            data[i * n + i] = 0.0;
        }
        DistanceMatrix {
            index: NodeIndex::from_sorted(nodes),
            data,
        }
    }

    /// Weight matrix of `g`: arc weights, zero diagonal, infinity elsewhere.
    pub fn from_graph(g: &Graph<N>) -> Self {
        let mut m = Self::identity(g.nodes().cloned());
        let n = m.len();
        for (i, arcs) in m.index.arcs(g).into_iter().enumerate() {
            for (j, w) in arcs {
                m.data[i * n + j] = w;
            }
        }
        m
    }

    pub fn nodes(&self) -> &[N] {
        &self.index.nodes
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.len() == 0
    }

    /// Distance from `u` to `v`, or `None` if either node is unknown.
    pub fn get(&self, u: &N, v: &N) -> Option<f64> {
        let (i, j) = (self.index.get(u)?, self.index.get(v)?);
        Some(self.data[i * self.len() + j])
    }

    pub fn set(&mut self, u: &N, v: &N, d: f64) -> Result<()> {
        let n = self.len();
        let i = self.index.get(u).ok_or_else(|| Error::MissingNode(format!("{u:?}")))?;
        let j = self.index.get(v).ok_or_else(|| Error::MissingNode(format!("{v:?}")))?;
        self.data[i * n + j] = d;
        Ok(())
    }

    /// Distances from `u` to every node.
    pub fn row(&self, u: &N) -> Option<DistanceMap<N>> {
        let i = self.index.get(u)?;
        let n = self.len();
        Some(
            self.index
                .nodes
                .iter()
                .cloned()
                .zip(self.data[i * n..(i + 1) * n].iter().copied())
                .collect(),
        )
    }

    /// All `(u, v, distance)` triples, row by row.
    pub fn iter(&self) -> impl Iterator<Item = (&N, &N, f64)> + '_ {
        let nodes = &self.index.nodes;
        let n = nodes.len();
        self.data
            .iter()
            .enumerate()
            .map(move |(k, d)| (&nodes[k / n], &nodes[k % n], *d))
    }
}

impl<N: NodeId> fmt::Debug for DistanceMatrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        let mut m = f.debug_map();
        for (i, u) in self.index.nodes.iter().enumerate() {
            m.entry(u, &&self.data[i * n..(i + 1) * n]);
        }
        m.finish()
    }
}

/// `parent(s, t)` is the predecessor of `t` on a shortest `s -> t` path.
#[derive(Debug, Clone, PartialEq)]
pub struct ParentMatrix<N: NodeId> {
    pub(crate) index: NodeIndex<N>,
    pub(crate) data: Vec<Option<usize>>,
}

impl<N: NodeId> ParentMatrix<N> {
    pub fn nodes(&self) -> &[N] {
        &self.index.nodes
    }

    pub fn parent(&self, source: &N, target: &N) -> Option<&N> {
        let (i, j) = (self.index.get(source)?, self.index.get(target)?);
        self.data[i * self.index.len() + j].map(|p| &self.index.nodes[p])
    }

    /// Shortest path from `source` to `target`; see [`reconstruct_path_apsp`].
    pub fn path(&self, source: &N, target: &N) -> Result<Path<N>> {
        reconstruct_path_apsp(self, source, target)
    }
}

/// Follows predecessors from `target` back to `source`.
pub fn reconstruct_path_apsp<N: NodeId>(parent: &ParentMatrix<N>, source: &N, target: &N) -> Result<Path<N>> {
    let idx = &parent.index;
    let n = idx.len();
    let s = idx.get(source).ok_or_else(|| Error::MissingNode(format!("{source:?}")))?;
    let t = idx.get(target).ok_or_else(|| Error::MissingNode(format!("{target:?}")))?;
    let mut path = vec![t];
    let mut cur = t;
    for _ in 0..n {
        if cur == s {
            return Ok(path.into_iter().rev().map(|i| idx.nodes[i].clone()).collect());
        }
        match parent.data[s * n + cur] {
            Some(p) => {
                path.push(p);
                cur = p;
            }
            None if cur == t => return Err(Error::NoPath(format!("{target:?}"))),
            None => break,
        }
    }
    Err(Error::BrokenParentChain(format!("{target:?}")))
}

/// Min-plus product: `z[i][j] = min_k x[i][k] + y[k][j]`.
pub fn min_plus_product<N: NodeId>(x: &DistanceMatrix<N>, y: &DistanceMatrix<N>) -> Result<DistanceMatrix<N>> {
    if x.index.nodes != y.index.nodes {
        return Err(Error::ShapeMismatch);
    }
    let n = x.len();
    let mut data = vec![f64::INFINITY; n * n];
    for i in 0..n {
        let out = &mut data[i * n..(i + 1) * n];
        for k in 0..n {
            let xik = x.data[i * n + k];
            if xik == f64::INFINITY {
                continue;
            }
            for (z, ykj) in out.iter_mut().zip(&y.data[k * n..(k + 1) * n]) {
                let alt = xik + ykj;
                if alt < *z {
                    *z = alt;
                }
            }
        }
    }
    Ok(DistanceMatrix {
        index: x.index.clone(),
        data,
    })
}
