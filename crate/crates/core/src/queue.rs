//! Priority-queue entries and dense node numbering shared by the algorithms.

use std::cmp::Ordering;
use std::collections::HashMap;

use rustc_hash::FxBuildHasher;

use crate::graph::{Graph, NodeId};

/// Heap entry ordered so that `BinaryHeap` pops the smallest score first,
/// ties going to the smallest node.
#[derive(Debug, Clone)]
pub(crate) struct MinScored<N>(pub f64, pub N);

impl<N: Ord> Ord for MinScored<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .0
            .total_cmp(&self.0)
            .then_with(|| other.1.cmp(&self.1))
    }
}

impl<N: Ord> PartialOrd for MinScored<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<N: Ord> PartialEq for MinScored<N> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<N: Ord> Eq for MinScored<N> {}

/// Nodes numbered `0..n` in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct NodeIndex<N: NodeId> {
    pub nodes: Vec<N>,
    pub index: HashMap<N, usize, FxBuildHasher>,
}

impl<N: NodeId> NodeIndex<N> {
    pub fn of_graph(g: &Graph<N>) -> Self {
        Self::from_sorted(g.sorted_nodes())
    }

    pub fn from_sorted(nodes: Vec<N>) -> Self {
        let index = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        NodeIndex { nodes, index }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn get(&self, node: &N) -> Option<usize> {
        self.index.get(node).copied()
    }

    /// Out-arcs of every node as `(target index, weight)` lists.
    pub fn arcs(&self, g: &Graph<N>) -> Vec<Vec<(usize, f64)>> {
        self.nodes
            .iter()
            .map(|n| g.neighbours(n).map(|(t, w)| (self.index[t], w)).collect())
            .collect()
    }
}
