//! Weighted graph algorithms over a dictionary-of-dictionaries graph.
//!
//! The crate provides a simple [`Graph`] type keyed by arbitrary ordered,
//! hashable node identifiers, together with
//!
//! * minimum spanning trees: Borůvka, Prim (binary heap and dense scan) and
//!   Kruskal ([`mst`]);
//! * single-source shortest paths: Bellman-Ford, Dijkstra (binary heap and
//!   dense scan) and DAG relaxation ([`sssp`]);
//! * all-pairs shortest paths: Floyd-Warshall, Johnson and min-plus matrix
//!   products ([`apsp`]);
//! * a [`harness`] with seeded generators, an edge-list format, brute-force
//!   oracles and a timing suite used by the CLI.
//!
//! ```
//! use wgraph::{Edge, Graph};
//!
//! let mut g = Graph::new(3, false);
//! g.add_edge(Edge::new("A", "B", 5.0)).unwrap();
//! g.add_edge(Edge::new("A", "C", 7.0)).unwrap();
//! assert_eq!((g.node_count(), g.edge_count()), (3, 2));
//! assert_eq!(wgraph::mst::kruskal_mst(&g).unwrap().total_weight, 12.0);
//! ```

pub mod apsp;
pub mod disjoint_set;
pub mod edge;
pub mod error;
pub mod graph;
pub mod harness;
pub mod mst;
mod queue;
pub mod sssp;
pub mod topo_sort;

pub use apsp::{DistanceMatrix, ParentMatrix};
pub use disjoint_set::UnionFind;
pub use edge::Edge;
pub use error::{Error, Result};
pub use graph::{DistanceMap, Graph, NodeId, ParentTree, Path};
pub use mst::{PrimTree, SpanningForest};
pub use sssp::SsspResult;
pub use topo_sort::topological_sort;
