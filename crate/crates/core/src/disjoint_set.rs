//! Disjoint-set forest with union by rank and path compression.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::NodeId;

#[derive(Debug, Clone)]
pub struct UnionFind<N> {
    parent: HashMap<N, N>,
    rank: HashMap<N, u32>,
    sets: usize,
}

impl<N: NodeId> Default for UnionFind<N> {
    fn default() -> Self {
        UnionFind {
            parent: HashMap::new(),
            rank: HashMap::new(),
            sets: 0,
        }
    }
}

impl<N: NodeId> UnionFind<N> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `x` as a singleton set.
    pub fn create(&mut self, x: N) -> Result<()> {
        if self.parent.contains_key(&x) {
            return Err(Error::AlreadyPresent(format!("{x:?}")));
        }
        self.parent.insert(x.clone(), x.clone());
        self.rank.insert(x, 0);
        self.sets += 1;
        Ok(())
    }

    pub fn contains(&self, x: &N) -> bool {
        self.parent.contains_key(x)
    }

    /// Number of elements created so far.
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of disjoint sets.
    pub fn set_count(&self) -> usize {
        self.sets
    }

    /// Representative of the set containing `x`. Compresses the path walked.
    pub fn find(&mut self, x: &N) -> Result<N> {
        let mut root = self
            .parent
            .get(x)
            .ok_or_else(|| Error::MissingElement(format!("{x:?}")))?
            .clone();
        loop {
            let next = &self.parent[&root];
            if *next == root {
                break;
            }
            root = next.clone();
        }
        let mut cur = x.clone();
        while cur != root {
            let next = std::mem::replace(
                self.parent.get_mut(&cur).expect("on the parent chain"),
                root.clone(),
            );
            cur = next;
        }
        Ok(root)
    }

    /// Merges the sets containing `x` and `y`. Returns false if they were
    /// already the same set.
    pub fn union(&mut self, x: &N, y: &N) -> Result<bool> {
        let rx = self.find(x)?;
        let ry = self.find(y)?;
        if rx == ry {
            return Ok(false);
        }
        let (kx, ky) = (self.rank[&rx], self.rank[&ry]);
        let (child, root) = if kx < ky { (rx, ry) } else { (ry, rx) };
        if kx == ky {
            *self.rank.get_mut(&root).expect("root has a rank") += 1;
        }
        self.parent.insert(child, root);
        self.sets -= 1;
        Ok(true)
    }
}
