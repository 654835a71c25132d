//! Enumeration of the distinct copies of a pattern inside the complete graph
//! `K_n`. A copy is an edge subset; automorphic images of the pattern land on
//! the same subset, so deduplicating by edge set removes them.

use crate::graph::Graph;
use std::collections::HashSet;

/// All distinct copies of `pattern` in `K_{host_order}`, one sorted edge list
/// per copy, in lexicographic order.
pub fn enumerate_copies(pattern: &Graph, host_order: usize) -> Vec<Vec<(usize, usize)>> {
    let mut found: HashSet<Vec<(usize, usize)>> = HashSet::new();
    for_each_placement(pattern, host_order, &mut |assign| {
        let mut edges: Vec<(usize, usize)> = pattern
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (assign[u], assign[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        found.insert(edges);
    });
    let mut copies: Vec<_> = found.into_iter().collect();
    copies.sort_unstable();
    copies
}

/// Edge index of the pair `u < v` among the `C(n,2)` host edges, column-major.
pub(crate) fn edge_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

pub(crate) fn host_edge_list(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    edges
}

/// Copies of `pattern` in `K_n` as edge bitmasks, lexicographically sorted.
/// Requires `C(n,2) <= 128`.
pub(crate) fn copy_masks(pattern: &Graph, n: usize) -> Vec<u128> {
    assert!(n * n.saturating_sub(1) / 2 <= 128, "host too large for edge masks");
    let mut found: HashSet<u128> = HashSet::new();
    for_each_placement(pattern, n, &mut |assign| {
        let mut mask = 0u128;
        for (u, v) in pattern.edges() {
            let (a, b) = (assign[u], assign[v]);
            mask |= 1 << edge_index(a.min(b), a.max(b));
        }
        found.insert(mask);
    });
    let mut masks: Vec<u128> = found.into_iter().collect();
    masks.sort_unstable();
    masks
}

/// Runs `f` once per injective placement of the pattern's non-isolated
/// vertices into `0..n`. Isolated pattern vertices contribute no edges, but
/// the pattern still needs `order() <= n` to fit at all.
fn for_each_placement(pattern: &Graph, n: usize, f: &mut impl FnMut(&[usize])) {
    if pattern.order() > n {
        return;
    }
    let active: Vec<usize> = (0..pattern.order())
        .filter(|&v| pattern.degree(v) > 0)
        .collect();
    let mut assign = vec![usize::MAX; pattern.order()];
    let mut used = vec![false; n];
    place(&active, 0, n, &mut assign, &mut used, f);
}

fn place(
    active: &[usize],
    depth: usize,
    n: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == active.len() {
        f(assign);
        return;
    }
    let pv = active[depth];
    for hv in 0..n {
        if used[hv] {
            continue;
        }
        assign[pv] = hv;
        used[hv] = true;
        place(active, depth + 1, n, assign, used, f);
        assign[pv] = usize::MAX;
        used[hv] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    #[test]
    fn counts_match_binomials() {
        let k3 = named_graph("K3").unwrap();
        assert_eq!(enumerate_copies(&k3, 4).len(), 4);
        let k2 = named_graph("K2").unwrap();
        assert_eq!(enumerate_copies(&k2, 5).len(), 10);
    }

    #[test]
    fn path_copies_dedupe_automorphisms() {
        let p3 = named_graph("P3").unwrap();
        // one copy per choice of middle vertex
        assert_eq!(enumerate_copies(&p3, 3).len(), 3);
    }

    #[test]
    fn matching_copies() {
        let m2 = named_graph("M2").unwrap();
        // C(4,2)*C(2,2)/2 = 3
        assert_eq!(enumerate_copies(&m2, 4).len(), 3);
    }

    #[test]
    fn pattern_too_large_for_host() {
        let k4 = named_graph("K4").unwrap();
        assert!(enumerate_copies(&k4, 3).is_empty());
    }

    #[test]
    fn masks_agree_with_edge_lists() {
        let p4 = named_graph("P4").unwrap();
        let copies = enumerate_copies(&p4, 5);
        let masks = copy_masks(&p4, 5);
        assert_eq!(copies.len(), masks.len());
        // 5*4*3*2 / 2 orientations = 60 paths
        assert_eq!(copies.len(), 60);
    }
}
