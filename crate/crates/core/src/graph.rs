//! Simple weighted graphs stored as a map of adjacency maps.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use rustc_hash::FxBuildHasher;

use crate::edge::Edge;
use crate::error::{not_directed, not_undirected, Error, Result};

/// Anything usable as a node: comparable, ordered and hashable.
pub trait NodeId: Clone + Eq + Ord + Hash + fmt::Debug {}

impl<T: Clone + Eq + Ord + Hash + fmt::Debug> NodeId for T {}

/// Unseeded hasher: iteration order depends only on the sequence of
/// insertions, never on per-process random state. Also much cheaper than
/// SipHash for the small keys graphs usually carry.
type Adjacency<N> = HashMap<N, HashMap<N, f64, FxBuildHasher>, FxBuildHasher>;

/// A path is the list of visited nodes, source first.
pub type Path<N> = Vec<N>;

/// Rooted tree or forest as `node -> parent`; roots map to `None`.
pub type ParentTree<N> = HashMap<N, Option<N>>;

/// Per-node distance estimates; `f64::INFINITY` marks unreachable nodes.
pub type DistanceMap<N> = HashMap<N, f64>;

/// A simple weighted graph, directed or undirected.
///
/// Loops and parallel edges are rejected. An undirected edge `{s, t}` is
/// stored as the two arcs `(s, t)` and `(t, s)` carrying the same weight and
/// counts as a single edge.
///
/// Iteration order over nodes and edges is unspecified. It is stable for a
/// given sequence of mutations but callers that compare output should sort.
/// Mutating the graph while an iterator is alive is rejected by the borrow
/// checker.
#[derive(Clone, PartialEq)]
pub struct Graph<N: NodeId> {
    directed: bool,
    adj: Adjacency<N>,
}

impl<N: NodeId> Graph<N> {
    /// An empty graph. The node-count hint is accepted for compatibility with
    /// matrix-backed graphs and otherwise ignored.
    pub fn new(_capacity_hint: usize, directed: bool) -> Self {
        Graph {
            directed,
            adj: Adjacency::default(),
        }
    }

    pub fn directed() -> Self {
        Graph::new(0, true)
    }

    pub fn undirected() -> Self {
        Graph::new(0, false)
    }

    /// Builds a graph from `(source, target, weight)` triples.
    pub fn from_edges<I>(directed: bool, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (N, N, f64)>,
    {
        let mut g = Graph::new(0, directed);
        for (s, t, w) in edges {
            g.add_edge(Edge::new(s, t, w))?;
        }
        Ok(g)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges; an undirected edge counts once.
    pub fn edge_count(&self) -> usize {
        let arcs: usize = self.adj.values().map(HashMap::len).sum();
        if self.directed {
            arcs
        } else {
            arcs / 2
        }
    }

    /// Adds an isolated node. Adding an existing node does nothing.
    pub fn add_node(&mut self, node: N) {
        self.adj.entry(node).or_default();
    }

    pub fn has_node(&self, node: &N) -> bool {
        self.adj.contains_key(node)
    }

    /// Removes a node together with every edge touching it.
    pub fn del_node(&mut self, node: &N) -> Result<()> {
        let out = self
            .adj
            .remove(node)
            .ok_or_else(|| Error::MissingNode(format!("{node:?}")))?;
        if self.directed {
            for neighbours in self.adj.values_mut() {
                neighbours.remove(node);
            }
        } else {
            for other in out.keys() {
                if let Some(neighbours) = self.adj.get_mut(other) {
                    neighbours.remove(node);
                }
            }
        }
        Ok(())
    }

    /// Adds an edge, creating missing endpoints.
    pub fn add_edge(&mut self, edge: Edge<N>) -> Result<()> {
        if edge.source == edge.target {
            return Err(Error::InvalidEdge(edge.to_string()));
        }
        if self.has_edge(&edge) {
            return Err(Error::DuplicateEdge(edge.to_string()));
        }
        let Edge {
            source,
            target,
            weight,
        } = edge;
        self.add_node(target.clone());
        if !self.directed {
            self.adj
                .get_mut(&target)
                .expect("target inserted above")
                .insert(source.clone(), weight);
        }
        self.adj.entry(source).or_default().insert(target, weight);
        Ok(())
    }

    /// Removes an edge. On undirected graphs either orientation may be given
    /// and both stored arcs are removed.
    pub fn del_edge(&mut self, edge: &Edge<N>) -> Result<()> {
        let removed = self
            .adj
            .get_mut(&edge.source)
            .and_then(|m| m.remove(&edge.target));
        if removed.is_none() {
            return Err(Error::MissingEdge(edge.to_string()));
        }
        if !self.directed {
            if let Some(m) = self.adj.get_mut(&edge.target) {
                m.remove(&edge.source);
            }
        }
        Ok(())
    }

    /// True if the arc `source -> target` is stored; the weight is ignored.
    pub fn has_edge(&self, edge: &Edge<N>) -> bool {
        self.adj
            .get(&edge.source)
            .is_some_and(|m| m.contains_key(&edge.target))
    }

    /// Weight of the stored arc `source -> target`, or zero if absent.
    pub fn weight(&self, edge: &Edge<N>) -> f64 {
        self.arc_weight(&edge.source, &edge.target).unwrap_or(0.0)
    }

    /// Weight of the arc `source -> target`, if present.
    pub fn arc_weight(&self, source: &N, target: &N) -> Option<f64> {
        self.adj.get(source).and_then(|m| m.get(target)).copied()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &N> + '_ {
        self.adj.keys()
    }

    /// Nodes in ascending order.
    pub fn sorted_nodes(&self) -> Vec<N> {
        let mut nodes: Vec<N> = self.adj.keys().cloned().collect();
        nodes.sort_unstable();
        nodes
    }

    /// Every edge once. Undirected edges are reported as `source < target`.
    pub fn edges(&self) -> impl Iterator<Item = Edge<N>> + '_ {
        let directed = self.directed;
        self.adj.iter().flat_map(move |(s, m)| {
            m.iter()
                .filter(move |(t, _)| directed || s < *t)
                .map(move |(t, w)| Edge::new(s.clone(), t.clone(), *w))
        })
    }

    /// Arcs leaving `node`.
    pub fn out_edges<'a>(&'a self, node: &'a N) -> Result<impl Iterator<Item = Edge<N>> + 'a> {
        let m = self
            .adj
            .get(node)
            .ok_or_else(|| Error::MissingNode(format!("{node:?}")))?;
        Ok(m.iter().map(move |(t, w)| Edge::new(node.clone(), t.clone(), *w)))
    }

    /// Arcs entering `node`. On directed graphs this scans every node.
    pub fn in_edges<'a>(&'a self, node: &'a N) -> Result<Box<dyn Iterator<Item = Edge<N>> + 'a>> {
        let m = self
            .adj
            .get(node)
            .ok_or_else(|| Error::MissingNode(format!("{node:?}")))?;
        if self.directed {
            Ok(Box::new(self.adj.iter().filter_map(move |(s, out)| {
                out.get(node).map(|w| Edge::new(s.clone(), node.clone(), *w))
            })))
        } else {
            Ok(Box::new(
                m.iter().map(move |(t, w)| Edge::new(t.clone(), node.clone(), *w)),
            ))
        }
    }

    /// Out-neighbours of `node` with arc weights. Empty for absent nodes.
    pub fn neighbours<'a>(&'a self, node: &N) -> impl Iterator<Item = (&'a N, f64)> + 'a {
        self.adj
            .get(node)
            .into_iter()
            .flat_map(|m| m.iter().map(|(t, w)| (t, *w)))
    }

    pub fn degree(&self, node: &N) -> Result<usize> {
        if self.directed {
            return Err(Error::WrongMode("degree is defined for undirected graphs"));
        }
        self.stored_out_degree(node)
    }

    pub fn out_degree(&self, node: &N) -> Result<usize> {
        if !self.directed {
            return Err(not_directed());
        }
        self.stored_out_degree(node)
    }

    pub fn in_degree(&self, node: &N) -> Result<usize> {
        if !self.directed {
            return Err(not_directed());
        }
        Ok(self.in_edges(node)?.count())
    }

    fn stored_out_degree(&self, node: &N) -> Result<usize> {
        self.adj
            .get(node)
            .map(HashMap::len)
            .ok_or_else(|| Error::MissingNode(format!("{node:?}")))
    }

    /// Sum of all edge weights.
    pub fn total_weight(&self) -> f64 {
        self.edges().map(|e| e.weight).sum()
    }

    /// Sum of arc weights along `path`; fails if a hop is not an edge.
    pub fn path_weight(&self, path: &[N]) -> Result<f64> {
        path.windows(2).try_fold(0.0, |acc, hop| {
            self.arc_weight(&hop[0], &hop[1]).map(|w| acc + w).ok_or_else(|| {
                Error::MissingEdge(format!("{:?} -> {:?}", hop[0], hop[1]))
            })
        })
    }

    /// Edges in ascending `Edge` order.
    pub fn sorted_edges(&self) -> Vec<Edge<N>> {
        let mut edges: Vec<Edge<N>> = self.edges().collect();
        edges.sort_unstable();
        edges
    }

    pub(crate) fn require_directed(&self) -> Result<()> {
        if self.directed {
            Ok(())
        } else {
            Err(not_directed())
        }
    }

    pub(crate) fn require_undirected(&self) -> Result<()> {
        if self.directed {
            Err(not_undirected())
        } else {
            Ok(())
        }
    }
}

impl<N: NodeId> fmt::Debug for Graph<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("directed", &self.directed)
            .field("nodes", &self.sorted_nodes())
            .field("edges", &self.sorted_edges())
            .finish()
    }
}
