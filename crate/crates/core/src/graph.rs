//! Labeled simple undirected graphs on vertices `0..order`.
//!
//! Adjacency is stored as per-vertex bitset rows, so neighbor iteration,
//! degree, and common-neighbor queries are word operations. Graphs are
//! immutable after construction and safe to share across threads.

use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("average degree undefined on the empty graph")]
    EmptyGraph,
}

/// Length of a shortest cycle, or the explicit marker for forests.
///
/// Forests never get a sentinel integer; `Acyclic` compares as "at least g"
/// for every g.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn at_least(&self, g: usize) -> bool {
        match self {
            Girth::Finite(len) => *len >= g,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Girth::Finite(len) => Some(*len),
            Girth::Acyclic => None,
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(len) => s.serialize_u64(*len as u64),
            Girth::Acyclic => s.serialize_str("acyclic"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|x| Girth::Finite(x as usize))
                .ok_or_else(|| D::Error::custom("girth must be a non-negative integer")),
            serde_json::Value::String(s) if s == "acyclic" => Ok(Girth::Acyclic),
            _ => Err(D::Error::custom("girth must be an integer or \"acyclic\"")),
        }
    }
}

/// Hop count between two vertices, or `Unreachable` across components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Hops(usize),
    Unreachable,
}

impl Distance {
    /// `Unreachable` counts as "at least g": joining separate components
    /// creates no cycle.
    pub fn at_least(&self, g: usize) -> bool {
        match self {
            Distance::Hops(d) => *d >= g,
            Distance::Unreachable => true,
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Hops(d) => s.serialize_u64(*d as u64),
            Distance::Unreachable => s.serialize_str("unreachable"),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|x| Distance::Hops(x as usize))
                .ok_or_else(|| D::Error::custom("distance must be a non-negative integer")),
            serde_json::Value::String(s) if s == "unreachable" => Ok(Distance::Unreachable),
            _ => Err(D::Error::custom("distance must be an integer or \"unreachable\"")),
        }
    }
}

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    /// Row-major adjacency bitsets: row v occupies `bits[v*words..(v+1)*words]`.
    bits: Vec<u64>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD_BITS).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a graph from an edge list; duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
            self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
            self.m += 1;
        }
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            self.bits[u * self.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
            self.bits[v * self.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
            self.m -= 1;
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let base = wi * WORD_BITS;
            BitIter { word }.map(move |b| base + b)
        })
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Exact `2e/v`; errors on the empty graph.
    pub fn average_degree(&self) -> Result<Rational, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(Rational::new(2 * self.m as u64, self.n as u64))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.component_count() == self.n
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    /// Shortest-path distance by BFS.
    pub fn distance(&self, u: usize, v: usize) -> Result<Distance, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Ok(Distance::Hops(0));
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for w in self.neighbors(x) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    if w == v {
                        return Ok(Distance::Hops(dist[w]));
                    }
                    queue.push_back(w);
                }
            }
        }
        Ok(Distance::Unreachable)
    }

    /// Length of a shortest cycle, or `Acyclic` for forests.
    ///
    /// BFS from every root; each non-tree edge closes a walk whose length
    /// bounds some cycle from above, and a root on a shortest cycle attains
    /// the girth exactly, so the minimum over roots is exact.
    pub fn girth(&self) -> Girth {
        if self.is_forest() {
            return Girth::Acyclic;
        }
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                // No cycle through root shorter than `best` can still appear
                // once we are this deep.
                if 2 * dist[u] >= best {
                    continue;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        debug_assert!(best < usize::MAX);
        Girth::Finite(best)
    }

    /// Induced subgraph on `keep` (deduplicated, sorted ascending); new
    /// vertex `i` corresponds to original vertex `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.clear_edge(u, v);
        g
    }

    /// Deletes vertex `v`; returns the re-indexed graph and the map from new
    /// indices to the original ones.
    pub fn without_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        (self.induced(&keep), keep)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Vertices of the maximal subgraph with minimum degree ≥ 3, by peeling.
    pub fn three_core(&self) -> Vec<usize> {
        let mut alive = vec![true; self.n];
        let mut deg = self.degrees();
        loop {
            let mut removed = false;
            for v in 0..self.n {
                if alive[v] && deg[v] < 3 {
                    alive[v] = false;
                    removed = true;
                    for w in self.neighbors(v) {
                        if alive[w] {
                            deg[w] -= 1;
                        }
                    }
                }
            }
            if !removed {
                break;
            }
        }
        (0..self.n).filter(|&v| alive[v]).collect()
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}
