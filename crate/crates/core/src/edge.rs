//! Directed weighted edges.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Not;

/// A directed, weighted arc `source -> target`.
///
/// Edges are totally ordered by `(weight, source, target)`, so two distinct
/// edges never compare equal even when their weights coincide. Every
/// tie-break in the spanning tree algorithms relies on this.
#[derive(Clone, Debug)]
pub struct Edge<N> {
    pub source: N,
    pub target: N,
    pub weight: f64,
}

impl<N> Edge<N> {
    pub fn new(source: N, target: N, weight: f64) -> Self {
        Edge {
            source,
            target,
            weight,
        }
    }

    /// An edge with the default weight of one.
    pub fn unit(source: N, target: N) -> Self {
        Edge::new(source, target, 1.0)
    }

    /// The same edge with its direction flipped.
    pub fn reversed(self) -> Self {
        Edge {
            source: self.target,
            target: self.source,
            weight: self.weight,
        }
    }
}

/// `!edge` is the opposite arc, like `reversed`.
impl<N> Not for Edge<N> {
    type Output = Edge<N>;

    fn not(self) -> Edge<N> {
        self.reversed()
    }
}

impl<N: Ord> Ord for Edge<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .total_cmp(&other.weight)
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl<N: Ord> PartialOrd for Edge<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<N: Ord> PartialEq for Edge<N> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<N: Ord> Eq for Edge<N> {}

impl<N: Hash> Hash for Edge<N> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.source.hash(state);
        self.target.hash(state);
        self.weight.to_bits().hash(state);
    }
}

impl<N: fmt::Debug> fmt::Display for Edge<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} ({})", self.source, self.target, self.weight)
    }
}
