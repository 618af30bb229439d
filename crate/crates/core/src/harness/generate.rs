//! Seeded random graph generators.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::edge::Edge;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// Every pair independently with probability `density`.
    RandomGnp,
    /// Uniform random spanning tree, then every other pair with probability
    /// `density`. Undirected and connected.
    RandomConnected,
    Complete,
    /// Arcs only forward along a random node order, each with probability
    /// `density`. Always directed.
    Dag,
    /// Uniform random spanning tree plus `round(density * spare pairs)` extra
    /// edges. Undirected and connected.
    TreePlusEdges,
}

impl Model {
    pub const ALL: [Model; 5] = [
        Model::RandomGnp,
        Model::RandomConnected,
        Model::Complete,
        Model::Dag,
        Model::TreePlusEdges,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::RandomGnp => "random-gnp",
            Model::RandomConnected => "random-connected",
            Model::Complete => "complete",
            Model::Dag => "dag",
            Model::TreePlusEdges => "tree-plus-edges",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown model {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub model: Model,
    pub n: usize,
    pub density: f64,
    /// Inclusive weight range.
    pub weights: (f64, f64),
    /// Draw integer weights.
    pub integer: bool,
    /// All weights different (integer weights only).
    pub distinct: bool,
    pub directed: bool,
    pub seed: u64,
}

impl GeneratorSpec {
    /// Defaults: density 0.5, integer weights in `[1, 100]`, undirected
    /// (directed for `Dag`), seed 0.
    pub fn new(model: Model, n: usize) -> Self {
        GeneratorSpec {
            model,
            n,
            density: 0.5,
            weights: (1.0, 100.0),
            integer: true,
            distinct: false,
            directed: model == Model::Dag,
            seed: 0,
        }
    }

    pub fn density(mut self, density: f64) -> Self {
        self.density = density;
        self
    }

    pub fn weights(mut self, lo: f64, hi: f64) -> Self {
        self.weights = (lo, hi);
        self
    }

    pub fn integer(mut self, integer: bool) -> Self {
        self.integer = integer;
        self
    }

    pub fn distinct(mut self, distinct: bool) -> Self {
        self.distinct = distinct;
        self
    }

    pub fn directed(mut self, directed: bool) -> Self {
        self.directed = directed;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn is_directed(&self) -> bool {
        self.directed || self.model == Model::Dag
    }

    fn validate(&self) -> Result<()> {
        let invalid = |m: &str| Err(Error::InvalidSpec(m.to_string()));
        let (lo, hi) = self.weights;
        if self.n == 0 {
            return invalid("n must be at least 1");
        }
        if u32::try_from(self.n).is_err() {
            return invalid("n does not fit node ids");
        }
        if !(0.0..=1.0).contains(&self.density) {
            return invalid("density must lie in [0, 1]");
        }
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return invalid("weight range must be finite with lo <= hi");
        }
        if self.integer && lo.ceil() > hi.floor() {
            return invalid("weight range holds no integer");
        }
        if self.distinct && !self.integer {
            return invalid("distinct weights need integer weights");
        }
        if self.directed && matches!(self.model, Model::RandomConnected | Model::TreePlusEdges) {
            return invalid("connected models produce undirected graphs");
        }
        Ok(())
    }
}

/// Builds the graph described by `spec` on nodes `0..n`. The same spec
/// always yields the same graph.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph<u32>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n as u32;
    let directed = spec.is_directed();
    let pairs = match spec.model {
        Model::Complete => all_pairs(n, directed),
        Model::RandomGnp => {
            let mut chosen = all_pairs(n, directed);
            chosen.retain(|_| rng.random_bool(spec.density));
            chosen
        }
        Model::Dag => {
            let mut order: Vec<u32> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut arcs = Vec::new();
            for i in 0..order.len() {
                for j in i + 1..order.len() {
                    if rng.random_bool(spec.density) {
                        arcs.push((order[i], order[j]));
                    }
                }
            }
            arcs
        }
        Model::RandomConnected | Model::TreePlusEdges => {
            let tree = random_tree(n, &mut rng);
            let in_tree: HashSet<(u32, u32)> = tree.iter().copied().collect();
            let spare: Vec<(u32, u32)> = all_pairs(n, false)
                .into_iter()
                .filter(|p| !in_tree.contains(p))
                .collect();
            let extra: Vec<(u32, u32)> = if spec.model == Model::RandomConnected {
                spare.into_iter().filter(|_| rng.random_bool(spec.density)).collect()
            } else {
                let k = (spec.density * spare.len() as f64).round() as usize;
                let mut picked = index::sample(&mut rng, spare.len(), k.min(spare.len())).into_vec();
                picked.sort_unstable();
                picked.into_iter().map(|i| spare[i]).collect()
            };
            tree.into_iter().chain(extra).collect()
        }
    };
    let weights = draw_weights(spec, pairs.len(), &mut rng)?;
    let mut g = Graph::new(spec.n, directed);
    for v in 0..n {
        g.add_node(v);
    }
    for ((s, t), w) in pairs.into_iter().zip(weights) {
        g.add_edge(Edge::new(s, t, w))?;
    }
    Ok(g)
}

/// Unordered pairs `s < t`, or all ordered pairs when `directed`.
fn all_pairs(n: u32, directed: bool) -> Vec<(u32, u32)> {
    (0..n)
        .flat_map(|s| {
            let start = if directed { 0 } else { s + 1 };
            (start..n).filter(move |t| *t != s).map(move |t| (s, t))
        })
        .collect()
}

/// Uniformly random labelled tree, decoded from a random Prüfer sequence.
/// Edges come back as `(min, max)` pairs.
fn random_tree(n: u32, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<u32> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1u32; n as usize];
    for &c in &code {
        degree[c as usize] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<u32>> = (0..n).filter(|v| degree[*v as usize] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n as usize - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c as usize] -= 1;
        if degree[c as usize] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a.min(b), a.max(b)));
    edges
}

fn draw_weights(spec: &GeneratorSpec, count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<f64>> {
    let (lo, hi) = spec.weights;
    if spec.integer {
        let (lo, hi) = (lo.ceil() as i64, hi.floor() as i64);
        if spec.distinct {
            let available = (hi - lo + 1) as usize;
            if available < count {
                return Err(Error::InvalidSpec(format!(
                    "{count} distinct weights requested from a range of {available}"
                )));
            }
            return Ok(index::sample(rng, available, count)
                .into_iter()
                .map(|i| (lo + i as i64) as f64)
                .collect());
        }
        return Ok((0..count).map(|_| rng.random_range(lo..=hi) as f64).collect());
    }
    Ok((0..count)
        .map(|_| if lo == hi { lo } else { rng.random_range(lo..hi) })
        .collect())
}
