//! Minimum spanning trees and forests.
//!
//! Borůvka and Kruskal return the forest as an undirected [`Graph`] over the
//! same node set as the input. The Prim variants grow a single tree from a
//! source and return it as a parent map. Both forms report the total weight.

mod boruvka;
mod kruskal;
mod prim;

pub use boruvka::boruvka_mst;
pub use kruskal::kruskal_mst;
pub use prim::{prim_matrix_mst, prim_mst};

use crate::edge::Edge;
use crate::graph::{DistanceMap, Graph, NodeId, ParentTree};

/// Spanning forest in graph form.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningForest<N: NodeId> {
    pub tree: Graph<N>,
    pub total_weight: f64,
}

/// Tree grown by Prim's algorithm, in parent-map form.
///
/// Only nodes of the source's component appear as keys. `distance[t]` is the
/// weight of the tree edge `(parent[t], t)` and zero for the source.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimTree<N: NodeId> {
    pub source: N,
    pub parent: ParentTree<N>,
    pub distance: DistanceMap<N>,
    pub total_weight: f64,
}

impl<N: NodeId> PrimTree<N> {
    /// Tree edges oriented from parent to child, sorted.
    pub fn edges(&self) -> Vec<Edge<N>> {
        let mut edges: Vec<Edge<N>> = self
            .parent
            .iter()
            .filter_map(|(child, p)| {
                p.as_ref()
                    .map(|p| Edge::new(p.clone(), child.clone(), self.distance[child]))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// The same tree as an undirected graph.
    pub fn to_forest(&self) -> SpanningForest<N> {
        let mut tree = Graph::new(self.parent.len(), false);
        for node in self.parent.keys() {
            tree.add_node(node.clone());
        }
        for e in self.edges() {
            tree.add_edge(e).expect("parent map is a tree");
        }
        SpanningForest {
            tree,
            total_weight: self.total_weight,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::harness::oracle;
    use crate::UnionFind;
    use proptest::prelude::*;

    pub(crate) fn worked_graph() -> Graph<&'static str> {
        Graph::from_edges(false, [("A", "B", 5.0), ("A", "C", 7.0)]).unwrap()
    }

    /// Connected undirected graph on `n` nodes: a path plus extra pairs.
    fn connected(n: u32, extra: &[(u32, u32)], weights: &[i32]) -> Graph<u32> {
        let mut g = Graph::undirected();
        g.add_node(0);
        let mut w = weights.iter().cycle();
        for i in 1..n {
            g.add_edge(Edge::new(i - 1, i, f64::from(*w.next().unwrap()))).unwrap();
        }
        for &(a, b) in extra {
            let (a, b) = (a % n, b % n);
            if a != b {
                let _ = g.add_edge(Edge::new(a, b, f64::from(*w.next().unwrap())));
            }
        }
        g
    }

    fn component_count<N: NodeId>(g: &Graph<N>) -> usize {
        let mut uf = UnionFind::new();
        for n in g.nodes() {
            uf.create(n.clone()).unwrap();
        }
        for e in g.edges() {
            uf.union(&e.source, &e.target).unwrap();
        }
        uf.set_count()
    }

    fn is_forest<N: NodeId>(g: &Graph<N>) -> bool {
        let mut uf = UnionFind::new();
        for n in g.nodes() {
            uf.create(n.clone()).unwrap();
        }
        g.edges().all(|e| uf.union(&e.source, &e.target).unwrap())
    }

    #[test]
    fn small_example_all_algorithms() {
        let g = worked_graph();
        assert_eq!(boruvka_mst(&g).unwrap().total_weight, 12.0);
        assert_eq!(kruskal_mst(&g).unwrap().total_weight, 12.0);
        let p = prim_mst(&g, Some("A")).unwrap();
        assert_eq!(p.parent[&"A"], None);
        assert_eq!(p.parent[&"B"], Some("A"));
        assert_eq!(p.parent[&"C"], Some("A"));
        assert_eq!(p.total_weight, 12.0);
        assert_eq!(prim_matrix_mst(&g, Some("A")).unwrap(), p);
    }

    #[test]
    fn single_node_graph() {
        let mut g = Graph::undirected();
        g.add_node('x');
        let b = boruvka_mst(&g).unwrap();
        assert_eq!((b.tree.node_count(), b.tree.edge_count(), b.total_weight), (1, 0, 0.0));
        assert_eq!(kruskal_mst(&g).unwrap().total_weight, 0.0);
        assert_eq!(prim_mst(&g, None).unwrap().parent.len(), 1);
    }

    #[test]
    fn negative_weights() {
        // spanning trees: {AB,BC}=-5, {AB,AC}=-1, {BC,AC}=-2
        let g = Graph::from_edges(false, [('A', 'B', -2.0), ('B', 'C', -3.0), ('A', 'C', 1.0)]).unwrap();
        let expected = vec![Edge::new('A', 'B', -2.0), Edge::new('B', 'C', -3.0)];
        for forest in [
            boruvka_mst(&g).unwrap(),
            kruskal_mst(&g).unwrap(),
            prim_mst(&g, None).unwrap().to_forest(),
            prim_matrix_mst(&g, None).unwrap().to_forest(),
        ] {
            assert_eq!(forest.total_weight, -5.0);
            let mut edges = forest.tree.sorted_edges();
            edges.sort_by_key(|e| e.source);
            assert_eq!(edges, expected);
        }
    }

    #[test]
    fn prim_stays_in_source_component() {
        let mut g = Graph::from_edges(false, [(1, 2, 1.0), (2, 3, 1.0)]).unwrap();
        g.add_node(9);
        for tree in [prim_mst(&g, Some(9)).unwrap(), prim_matrix_mst(&g, Some(9)).unwrap()] {
            assert_eq!(tree.parent.len(), 1);
            assert_eq!(tree.parent[&9], None);
            assert_eq!(tree.total_weight, 0.0);
        }
        assert!(matches!(prim_mst(&g, Some(4)), Err(Error::MissingNode(_))));
    }

    #[test]
    fn disconnected_forest() {
        let g = Graph::from_edges(false, [(1, 2, 3.0), (2, 3, 1.0), (1, 3, 2.0), (7, 8, 4.0)]).unwrap();
        for f in [boruvka_mst(&g).unwrap(), kruskal_mst(&g).unwrap()] {
            assert_eq!(f.tree.node_count(), 5);
            assert_eq!(f.tree.edge_count(), 5 - 2);
            assert_eq!(f.total_weight, 7.0);
        }
    }

    #[test]
    fn directed_input_rejected() {
        let g = Graph::from_edges(true, [(1, 2, 1.0)]).unwrap();
        assert!(matches!(boruvka_mst(&g), Err(Error::WrongMode(_))));
        assert!(matches!(kruskal_mst(&g), Err(Error::WrongMode(_))));
        assert!(matches!(prim_mst(&g, None), Err(Error::WrongMode(_))));
        assert!(matches!(prim_matrix_mst(&g, None), Err(Error::WrongMode(_))));
    }

    #[test]
    fn complete_k4_distinct_weights() {
        let g = Graph::from_edges(
            false,
            [(0, 1, 4.0), (0, 2, 1.0), (0, 3, 6.0), (1, 2, 3.0), (1, 3, 2.0), (2, 3, 5.0)],
        )
        .unwrap();
        let k = kruskal_mst(&g).unwrap();
        // 1 + 3 + 2
        assert_eq!(k.total_weight, 6.0);
        assert_eq!(prim_matrix_mst(&g, None).unwrap().total_weight, k.total_weight);
        assert_eq!(prim_mst(&g, None).unwrap().total_weight, k.total_weight);
    }

    #[test]
    fn boruvka_components_shrink_each_phase() {
        let g = connected(40, &[(3, 17), (5, 30), (8, 22), (11, 39), (1, 25)], &[9, 3, 7, 1, 8, 2, 6]);
        let counts = boruvka::phase_component_counts(&g);
        assert!(counts.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(*counts.last().unwrap(), 1);
        // each phase at least halves the number of components
        assert!(counts.len() <= 1 + 6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn agrees_with_enumeration(
            n in 2u32..8,
            extra in proptest::collection::vec((0u32..8, 0u32..8), 0..12),
            weights in Just((-20i32..20).collect::<Vec<_>>()).prop_shuffle(),
        ) {
            let g = connected(n, &extra, &weights);
            let best = oracle::oracle_mst_weight(&g).unwrap();
            let b = boruvka_mst(&g).unwrap();
            let k = kruskal_mst(&g).unwrap();
            let p = prim_mst(&g, None).unwrap();
            let pm = prim_matrix_mst(&g, None).unwrap();
            for w in [b.total_weight, k.total_weight, p.total_weight, pm.total_weight] {
                prop_assert_eq!(w, best);
            }
            prop_assert_eq!(b.tree.sorted_edges(), k.tree.sorted_edges());
            prop_assert_eq!(p.to_forest().tree.sorted_edges(), k.tree.sorted_edges());
            prop_assert_eq!(pm.edges(), p.edges());
            prop_assert!(is_forest(&k.tree));
            prop_assert_eq!(k.tree.edge_count(), g.node_count() - component_count(&g));
            for e in k.tree.edges() {
                prop_assert_eq!(g.arc_weight(&e.source, &e.target), Some(e.weight));
            }
        }

        #[test]
        fn cut_property(n in 2u32..8, extra in proptest::collection::vec((0u32..8, 0u32..8), 0..12), weights in proptest::collection::vec(1i32..6, 20)) {
            let g = connected(n, &extra, &weights);
            let forest = kruskal_mst(&g).unwrap().tree;
            for removed in forest.edges() {
                // components of the tree without `removed`
                let mut uf = UnionFind::new();
                for v in forest.nodes() {
                    uf.create(*v).unwrap();
                }
                for e in forest.edges().filter(|e| *e != removed) {
                    uf.union(&e.source, &e.target).unwrap();
                }
                let side = uf.find(&removed.source).unwrap();
                for e in g.edges() {
                    let crosses = (uf.find(&e.source).unwrap() == side) != (uf.find(&e.target).unwrap() == side);
                    if crosses {
                        prop_assert!(removed.weight <= e.weight);
                    }
                }
            }
        }

        #[test]
        fn repeated_weights_same_total(n in 2u32..9, extra in proptest::collection::vec((0u32..9, 0u32..9), 0..16), weights in proptest::collection::vec(1i32..4, 24), isolated in 0u32..3) {
            let mut g = connected(n, &extra, &weights);
            for i in 0..isolated {
                g.add_node(100 + i);
            }
            let b = boruvka_mst(&g).unwrap();
            let k = kruskal_mst(&g).unwrap();
            prop_assert_eq!(b.total_weight, k.total_weight);
            // the edge order breaks weight ties, so the forests coincide
            prop_assert_eq!(b.tree, k.tree);
        }
    }
}
