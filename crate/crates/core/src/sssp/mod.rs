//! Single-source shortest paths.
//!
//! Every algorithm here requires a directed graph and returns an
//! [`SsspResult`]: distances to all nodes (`f64::INFINITY` when unreachable)
//! plus the shortest-path tree as a parent map.

mod bellman_ford;
mod dag;
mod dijkstra;

pub use bellman_ford::bellman_ford;
pub use dag::dag_shortest_path;
pub use dijkstra::{dijkstra, dijkstra_matrix, dijkstra_traced};

use std::collections::HashMap;

use crate::edge::Edge;
use crate::error::{Error, Result};
use crate::graph::{DistanceMap, Graph, NodeId, ParentTree, Path};

#[derive(Debug, Clone, PartialEq)]
pub struct SsspResult<N: NodeId> {
    pub source: N,
    pub distance: DistanceMap<N>,
    pub parent: ParentTree<N>,
}

impl<N: NodeId> SsspResult<N> {
    /// Fresh state for `source`: every distance infinite except the source.
    pub(crate) fn init(g: &Graph<N>, source: &N) -> Result<Self> {
        if !g.has_node(source) {
            return Err(Error::MissingNode(format!("{source:?}")));
        }
        let mut distance: DistanceMap<N> = g.nodes().map(|n| (n.clone(), f64::INFINITY)).collect();
        let parent: ParentTree<N> = g.nodes().map(|n| (n.clone(), None)).collect();
        distance.insert(source.clone(), 0.0);
        Ok(SsspResult {
            source: source.clone(),
            distance,
            parent,
        })
    }

    pub fn distance_to(&self, target: &N) -> Option<f64> {
        self.distance.get(target).copied()
    }

    /// Shortest path from the source to `target`.
    pub fn path_to(&self, target: &N) -> Result<Path<N>> {
        reconstruct_path(self, target)
    }
}

/// Relaxes `edge`: if going through it shortens the distance to its target,
/// records the new distance and parent and returns true.
///
/// An infinite source distance never relaxes anything (`inf + w` is not
/// below `inf`).
pub fn relax<N: NodeId>(distance: &mut DistanceMap<N>, parent: &mut ParentTree<N>, edge: &Edge<N>) -> bool {
    let from = distance.get(&edge.source).copied().unwrap_or(f64::INFINITY);
    let alt = from + edge.weight;
    let current = distance.entry(edge.target.clone()).or_insert(f64::INFINITY);
    if alt < *current {
        *current = alt;
        parent.insert(edge.target.clone(), Some(edge.source.clone()));
        true
    } else {
        false
    }
}

/// Walks parent links from `target` back to the source.
///
/// The walk is bounded by the number of nodes, so a corrupted parent map
/// yields an error instead of looping.
pub fn reconstruct_path<N: NodeId>(result: &SsspResult<N>, target: &N) -> Result<Path<N>> {
    if !result.parent.contains_key(target) {
        return Err(Error::MissingNode(format!("{target:?}")));
    }
    let mut path = vec![target.clone()];
    let mut cur = target;
    for _ in 0..result.parent.len() {
        if *cur == result.source {
            path.reverse();
            return Ok(path);
        }
        match result.parent.get(cur) {
            Some(Some(p)) => {
                path.push(p.clone());
                cur = p;
            }
            _ if cur == target => return Err(Error::NoPath(format!("{target:?}"))),
            _ => return Err(Error::BrokenParentChain(format!("{target:?}"))),
        }
    }
    Err(Error::BrokenParentChain(format!("{target:?}")))
}

pub(crate) fn check_non_negative<N: NodeId>(g: &Graph<N>) -> Result<()> {
    match g.edges().find(|e| e.weight < 0.0) {
        Some(e) => Err(Error::NegativeWeight(e.to_string())),
        None => Ok(()),
    }
}

pub(crate) fn parents_from_index<N: NodeId>(nodes: &[N], parent: &[Option<usize>]) -> ParentTree<N> {
    nodes
        .iter()
        .zip(parent)
        .map(|(n, p)| (n.clone(), p.map(|p| nodes[p].clone())))
        .collect::<HashMap<_, _>>()
}
