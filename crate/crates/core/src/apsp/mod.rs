//! All-pairs shortest paths on directed graphs.

mod floyd_warshall;
mod johnson;
mod matrix;
mod min_plus;

pub use floyd_warshall::{floyd_warshall, AllPairsPaths};
pub use johnson::{johnson, johnson_detailed, reweight, JohnsonOutput};
pub use matrix::{min_plus_product, reconstruct_path_apsp, DistanceMatrix, ParentMatrix};
pub use min_plus::{faster_all_pairs, slow_all_pairs};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge::Edge;
    use crate::error::Error;
    use crate::graph::Graph;
    use crate::harness::oracle::oracle_shortest_path;
    use crate::sssp::bellman_ford;
    use proptest::prelude::*;

    /// Directed graph whose weights are `base + p(u) - p(v)` with `base >= 0`,
    /// so every cycle has non-negative weight while single arcs may be negative.
    fn potential_graph(n: u32, arcs: &[(u32, u32, u8)], p: &[i8]) -> Graph<u32> {
        let mut g = Graph::directed();
        for i in 0..n {
            g.add_node(i);
        }
        for &(s, t, base) in arcs {
            let (s, t) = (s % n, t % n);
            if s != t {
                let w = f64::from(base) + f64::from(p[s as usize]) - f64::from(p[t as usize]);
                let _ = g.add_edge(Edge::new(s, t, w));
            }
        }
        g
    }

    #[test]
    fn negative_cycle_reported_by_all_checkers() {
        let g = Graph::from_edges(true, [('A', 'B', 1.0), ('B', 'A', -3.0), ('B', 'C', 1.0)]).unwrap();
        assert_eq!(floyd_warshall(&g).err(), Some(Error::NegativeCycle));
        assert_eq!(johnson(&g).err(), Some(Error::NegativeCycle));
    }

    #[test]
    fn undirected_rejected() {
        let g = Graph::from_edges(false, [(0, 1, 1.0)]).unwrap();
        assert!(matches!(floyd_warshall(&g), Err(Error::WrongMode(_))));
        assert!(matches!(johnson(&g), Err(Error::WrongMode(_))));
        assert!(matches!(slow_all_pairs(&g), Err(Error::WrongMode(_))));
        assert!(matches!(faster_all_pairs(&g), Err(Error::WrongMode(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn four_way_agreement(
            n in 1u32..10,
            arcs in proptest::collection::vec((0u32..10, 0u32..10, 0u8..15), 0..45),
            p in proptest::collection::vec(-8i8..8, 10),
        ) {
            let g = potential_graph(n, &arcs, &p);
            let fw = floyd_warshall(&g).unwrap();
            let jo = johnson_detailed(&g).unwrap();
            prop_assert!(jo.reweighted.edges().all(|e| e.weight >= 0.0));
            prop_assert_eq!(&jo.distance, &fw.distance);
            prop_assert_eq!(&slow_all_pairs(&g).unwrap(), &fw.distance);
            prop_assert_eq!(&faster_all_pairs(&g).unwrap(), &fw.distance);
            for s in 0..n {
                let row = bellman_ford(&g, &s).unwrap().distance;
                prop_assert_eq!(fw.distance.row(&s).unwrap(), row);
                for t in 0..n {
                    let d = fw.distance.get(&s, &t).unwrap();
                    if n <= 8 {
                        prop_assert_eq!(d, oracle_shortest_path(&g, &s, &t).unwrap());
                    }
                    if d.is_finite() {
                        let path = fw.path(&s, &t).unwrap();
                        prop_assert_eq!(path.first(), Some(&s));
                        prop_assert_eq!(path.last(), Some(&t));
                        prop_assert_eq!(g.path_weight(&path).unwrap(), d);
                    } else {
                        prop_assert!(matches!(fw.path(&s, &t), Err(Error::NoPath(_))));
                    }
                }
            }
        }
    }
}
