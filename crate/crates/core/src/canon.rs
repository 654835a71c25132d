//! Canonical codes: isomorphism-class fingerprints.
//!
//! The labeling algorithm is equitable partition refinement followed by
//! backtracking: individualize one vertex of the first non-singleton cell,
//! re-refine, and take the lexicographically least adjacency encoding over
//! all discrete leaves. Two vertices of a cell whose swap is an automorphism
//! (twins) generate identical subtrees, so only one is branched on; this
//! keeps complete multipartite graphs and similar symmetric hosts cheap.
//!
//! The code itself is the graph6 line of the canonical representative, which
//! makes it printable, order-preserving under bitstring comparison, and
//! decodable back into a graph.

use crate::graph::Graph;
use crate::graph6;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Default order limit for canonicalization.
pub const DEFAULT_CANON_LIMIT: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("order {order} above canonicalization limit {limit}")]
    OrderAboveLimit { order: usize, limit: usize },
}

/// Isomorphism-class fingerprint: equal codes iff isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative the code encodes.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, CanonError> {
    canonical_code_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_code_with_limit(g: &Graph, limit: usize) -> Result<CanonicalCode, CanonError> {
    let n = g.order();
    if n > limit {
        return Err(CanonError::OrderAboveLimit { order: n, limit });
    }
    if n == 0 {
        return Ok(CanonicalCode("?".to_string()));
    }
    let mut best: Option<Vec<u8>> = None;
    let partition = refine(g, vec![(0..n).collect()]);
    search(g, partition, &mut best);
    let bytes = best.expect("at least one leaf labeling");
    Ok(CanonicalCode(
        String::from_utf8(bytes).expect("graph6 bytes are ASCII"),
    ))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// Equitable refinement: split cells by the multiset of neighbor counts into
/// every cell, until stable. New cells are inserted in signature order, which
/// only depends on the isomorphism class.
fn refine(g: &Graph, mut partition: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut split_at = None;
        'scan: for (ci, cell) in partition.iter().enumerate() {
            if cell.len() <= 1 {
                continue;
            }
            let sig = |v: usize| -> Vec<usize> {
                partition
                    .iter()
                    .map(|other| other.iter().filter(|&&w| g.has_edge(v, w)).count())
                    .collect()
            };
            let first = sig(cell[0]);
            for &v in &cell[1..] {
                if sig(v) != first {
                    split_at = Some(ci);
                    break 'scan;
                }
            }
        }
        let Some(ci) = split_at else {
            return partition;
        };
        let cell = partition[ci].clone();
        let mut groups: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
        for &v in &cell {
            let s = partition
                .iter()
                .map(|other| other.iter().filter(|&&w| g.has_edge(v, w)).count())
                .collect();
            groups.entry(s).or_default().push(v);
        }
        partition.splice(ci..=ci, groups.into_values());
    }
}

fn search(g: &Graph, partition: Vec<Vec<usize>>, best: &mut Option<Vec<u8>>) {
    let target = partition.iter().position(|c| c.len() > 1);
    let Some(ti) = target else {
        // Discrete partition: the cell order is the labeling.
        let perm: Vec<usize> = partition.iter().map(|c| c[0]).collect();
        let encoded = encode_permuted(g, &perm);
        if best.as_ref().is_none_or(|b| encoded < *b) {
            *best = Some(encoded);
        }
        return;
    };
    let cell = &partition[ti];
    let mut reps: Vec<usize> = Vec::new();
    'members: for &u in cell {
        for &r in &reps {
            if swap_is_automorphism(g, u, r) {
                continue 'members;
            }
        }
        reps.push(u);
    }
    for u in reps {
        let mut child: Vec<Vec<usize>> = Vec::with_capacity(partition.len() + 1);
        for (ci, c) in partition.iter().enumerate() {
            if ci == ti {
                child.push(vec![u]);
                child.push(c.iter().copied().filter(|&v| v != u).collect());
            } else {
                child.push(c.clone());
            }
        }
        search(g, refine(g, child), best);
    }
}

/// True iff exchanging u and v maps the graph to itself.
fn swap_is_automorphism(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.order();
    for w in 0..n {
        if w == u || w == v {
            continue;
        }
        if g.has_edge(u, w) != g.has_edge(v, w) {
            return false;
        }
    }
    true
}

/// graph6 bytes of the graph relabeled so that old vertex `perm[i]` becomes
/// `i`. Byte-wise comparison of these encodings matches bitstring order.
fn encode_permuted(g: &Graph, perm: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut inv = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    let mut h = Graph::empty(n);
    for (u, v) in g.edges() {
        h.set_edge(inv[u], inv[v]);
    }
    graph6::encode(&h)
        .expect("order already checked against limit")
        .into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    #[test]
    fn relabeling_invariance() {
        let c5 = named_graph("C5").unwrap();
        let relabeled = Graph::from_edge_list(5, &[(2, 4), (4, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_code(&c5).unwrap(), canonical_code(&relabeled).unwrap());
    }

    #[test]
    fn distinguishes_star_from_path() {
        let star = named_graph("K1_3").unwrap();
        let path = named_graph("P4").unwrap();
        assert_ne!(canonical_code(&star).unwrap(), canonical_code(&path).unwrap());
    }

    #[test]
    fn code_round_trips_to_representative() {
        let petersen = named_graph("petersen").unwrap();
        let code = canonical_code(&petersen).unwrap();
        let rep = code.to_graph();
        assert_eq!(canonical_code(&rep).unwrap(), code);
        assert_eq!(rep.edge_count(), 15);
    }

    #[test]
    fn order_limit_enforced() {
        let big = Graph::empty(40);
        assert!(matches!(
            canonical_code(&big),
            Err(CanonError::OrderAboveLimit { order: 40, limit: 32 })
        ));
        assert!(canonical_code_with_limit(&big, 64).is_ok());
    }

    #[test]
    fn symmetric_hosts_stay_cheap() {
        // complete and complete multipartite graphs exercise the twin skip
        for name in ["K8", "K4_4", "K2_2_2"] {
            let g = named_graph(name).unwrap();
            let code = canonical_code(&g).unwrap();
            assert_eq!(code.to_graph().edge_count(), g.edge_count());
        }
    }
}
