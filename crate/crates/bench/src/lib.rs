//! Fixtures shared by the criterion benches.

use wgraph::harness::{generate, GeneratorSpec, Model};
use wgraph::Graph;

/// Complete graph on `n` nodes with integer weights in `[1, 100]`.
pub fn complete(n: usize, directed: bool) -> Graph<u32> {
    generate(&GeneratorSpec::new(Model::Complete, n).directed(directed).seed(n as u64)).expect("valid spec")
}

/// Sparse directed graph, about `degree` arcs per node.
pub fn sparse_directed(n: usize, degree: f64) -> Graph<u32> {
    let density = (degree / n.saturating_sub(1).max(1) as f64).min(1.0);
    generate(&GeneratorSpec::new(Model::RandomGnp, n).density(density).directed(true).seed(n as u64))
        .expect("valid spec")
}

/// Connected undirected graph with about `degree` edges per node.
pub fn sparse_connected(n: usize, degree: f64) -> Graph<u32> {
    let density = (degree / n.saturating_sub(1).max(1) as f64).min(1.0);
    generate(&GeneratorSpec::new(Model::RandomConnected, n).density(density).seed(n as u64)).expect("valid spec")
}
