//! Exhaustive reference implementations, deliberately independent of the
//! optimized search paths they check. The test and acceptance suites compare
//! against these on small orders; nothing here is used by production code.

use crate::canon::{canonical_code, CanonicalCode};
use crate::graph::Graph;
use std::collections::{BTreeSet, HashSet};

/// Minimum cycle length by enumerating simple cycles (DFS anchored at each
/// cycle's minimum vertex), or `None` for forests. Intended for order <= 10.
pub fn brute_shortest_cycle(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut path = Vec::with_capacity(n);
    let mut on_path = vec![false; n];
    fn dfs(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        best: &mut Option<usize>,
    ) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(last, start) && best.is_none_or(|b| path.len() < b) {
            *best = Some(path.len());
        }
        if best.is_some_and(|b| path.len() + 1 >= b) {
            return;
        }
        for w in g.neighbors(last) {
            if w > start && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                dfs(g, start, path, on_path, best);
                on_path[w] = false;
                path.pop();
            }
        }
    }
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        dfs(g, start, &mut path, &mut on_path, &mut best);
        on_path[start] = false;
        path.pop();
    }
    best
}

/// Isomorphism by full permutation search. Intended for order <= 8.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let n = a.order();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_check(a, b, &mut perm, 0)
}

fn permute_check(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
    let n = a.order();
    if k == n {
        return a
            .edges()
            .iter()
            .all(|&(u, v)| b.has_edge(perm[u], perm[v]));
    }
    for i in k..n {
        perm.swap(k, i);
        // partial consistency: edges among the first k+1 vertices must map
        let consistent = (0..k).all(|j| a.has_edge(j, k) == b.has_edge(perm[j], perm[k]));
        if consistent && permute_check(a, b, perm, k + 1) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Embedding existence by unpruned injective search (order <= 8 patterns).
pub fn brute_embedding_exists(pattern: &Graph, host: &Graph) -> bool {
    if pattern.order() > host.order() {
        return false;
    }
    let mut assign = vec![usize::MAX; pattern.order()];
    let mut used = vec![false; host.order()];
    fn go(
        pattern: &Graph,
        host: &Graph,
        depth: usize,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == pattern.order() {
            return pattern
                .edges()
                .iter()
                .all(|&(u, v)| host.has_edge(assign[u], assign[v]));
        }
        for hv in 0..host.order() {
            if !used[hv] {
                assign[depth] = hv;
                used[hv] = true;
                if go(pattern, host, depth + 1, assign, used) {
                    used[hv] = false;
                    return true;
                }
                used[hv] = false;
            }
        }
        false
    }
    go(pattern, host, 0, &mut assign, &mut used)
}

/// Maximum of `e(G[S]) - 2|S| + 2` over induced subsets with `|S| >= 3`, by
/// scanning all subsets. Requires order <= 25; returns `None` when every
/// subset has negative slack.
pub fn brute_max_slack(g: &Graph) -> Option<(i64, Vec<usize>)> {
    let n = g.order();
    assert!(n <= 25, "subset scan limited to order 25");
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |acc, w| acc | 1 << w))
        .collect();
    let mut best: Option<(i64, u32)> = None;
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as i64;
        if size < 3 {
            continue;
        }
        let mut edges = 0i64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            edges += (rows[v] & mask).count_ones() as i64;
        }
        edges /= 2;
        let slack = edges - 2 * size + 2;
        if slack >= 0 && best.is_none_or(|(s, _)| slack > s) {
            best = Some((slack, mask));
        }
    }
    best.map(|(slack, mask)| {
        let vertices = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        (slack, vertices)
    })
}

/// Fully naive minimal-density-critical enumeration over all subgraphs
/// (vertex subset plus edge subset): a subgraph is kept when it satisfies
/// `e >= 2v - 2` (v >= 3) and no single-deletion child contains any critical
/// subgraph. Intended for order <= 6; establishes the facts the faster
/// reference below relies on.
pub fn brute_minimal_critical_naive(g: &Graph) -> BTreeSet<CanonicalCode> {
    let n = g.order();
    assert!(n <= 6, "naive route limited to order 6");
    let edges = g.edges();
    let within: Vec<u32> = subset_edge_masks(n, &edges);

    let critical_inside = |vs: u32, em: u32| -> bool {
        // some induced-within-the-subgraph subset is critical
        let mut sub = vs;
        loop {
            if sub.count_ones() >= 3 {
                let cnt = (em & within[sub as usize]).count_ones() as i64;
                if cnt >= 2 * sub.count_ones() as i64 - 2 {
                    return true;
                }
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & vs;
        }
    };

    let mut out = BTreeSet::new();
    for vs in 1u32..1 << n {
        let size = vs.count_ones() as i64;
        if size < 3 {
            continue;
        }
        // enumerate edge subsets within vs
        let full = within[vs as usize];
        let mut em = full;
        loop {
            if em.count_ones() as i64 >= 2 * size - 2 {
                let mut minimal = true;
                // edge-deletion children
                let mut rest = em;
                while rest != 0 && minimal {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    if critical_inside(vs, em & !bit) {
                        minimal = false;
                    }
                }
                // vertex-deletion children
                let mut vrest = vs;
                while vrest != 0 && minimal {
                    let vbit = vrest & vrest.wrapping_neg();
                    vrest ^= vbit;
                    let vs2 = vs & !vbit;
                    if critical_inside(vs2, em & within[vs2 as usize]) {
                        minimal = false;
                    }
                }
                if minimal {
                    out.insert(code_of_subgraph(n, &edges, vs, em));
                }
            }
            if em == 0 {
                break;
            }
            em = (em - 1) & full;
        }
    }
    out
}

/// Reference minimal-density-critical enumeration for order <= 12-ish hosts.
///
/// Uses two facts that the naive route above confirms on order <= 6 (and
/// that a two-line counting argument gives in general): a minimal critical
/// subgraph has `e = 2v - 2` exactly, and it is minimal iff its own vertex
/// set is the only subset carrying `e >= 2|S| - 2`.
pub fn minimal_critical_reference(g: &Graph) -> BTreeSet<CanonicalCode> {
    let n = g.order();
    assert!(
        n <= 16 && g.edge_count() <= 62,
        "reference route limited to order 16 / 62 edges"
    );
    let edges = g.edges();
    let within: Vec<u64> = subset_edge_masks64(n, &edges);
    let mut out = BTreeSet::new();
    for vs in 1u32..1 << n {
        let size = vs.count_ones() as usize;
        if size < 4 {
            continue;
        }
        let full = within[vs as usize];
        let target = 2 * size - 2;
        if (full.count_ones() as usize) < target {
            continue;
        }
        // all edge subsets of exactly `target` edges within vs
        for em in k_subsets(full, target) {
            let mut minimal = true;
            let mut sub = (vs - 1) & vs;
            loop {
                if sub.count_ones() >= 3 {
                    let cnt = (em & within[sub as usize]).count_ones() as usize;
                    if cnt + 2 >= 2 * sub.count_ones() as usize {
                        minimal = false;
                        break;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & vs;
            }
            if minimal {
                out.insert(code_of_subgraph64(n, &edges, vs, em));
            }
        }
    }
    out
}

/// Edge bitmask of `G[S]` for every vertex mask `S`, indexed by mask.
fn subset_edge_masks(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    (0u32..1 << n)
        .map(|vs| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| vs >> u & 1 == 1 && vs >> v & 1 == 1)
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

fn subset_edge_masks64(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    (0u32..1 << n)
        .map(|vs| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| vs >> u & 1 == 1 && vs >> v & 1 == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

/// All submasks of `mask` with exactly `k` bits (Gosper's hack over the
/// compacted bit positions).
fn k_subsets(mask: u64, k: usize) -> Vec<u64> {
    let positions: Vec<u32> = (0..64).filter(|&b| mask >> b & 1 == 1).collect();
    let m = positions.len();
    assert!(m < 63, "k_subsets limited to 62 positions");
    if k > m {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut comb: u64 = (1u64 << k) - 1;
    while comb < 1u64 << m {
        let mut expanded = 0u64;
        let mut c = comb;
        while c != 0 {
            let i = c.trailing_zeros() as usize;
            c &= c - 1;
            expanded |= 1 << positions[i];
        }
        out.push(expanded);
        let lowest = comb & comb.wrapping_neg();
        let ripple = comb + lowest;
        comb = ripple | (((comb ^ ripple) >> 2) / lowest);
    }
    out
}

fn code_of_subgraph(n: usize, edges: &[(usize, usize)], vs: u32, em: u32) -> CanonicalCode {
    let keep: Vec<usize> = (0..n).filter(|&v| vs >> v & 1 == 1).collect();
    let index_of = |v: usize| keep.iter().position(|&x| x == v).unwrap();
    let sub_edges: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| em >> i & 1 == 1)
        .map(|(_, &(u, v))| (index_of(u), index_of(v)))
        .collect();
    let sub = Graph::from_edge_list(keep.len(), &sub_edges).unwrap();
    canonical_code(&sub).unwrap()
}

fn code_of_subgraph64(n: usize, edges: &[(usize, usize)], vs: u32, em: u64) -> CanonicalCode {
    let keep: Vec<usize> = (0..n).filter(|&v| vs >> v & 1 == 1).collect();
    let index_of = |v: usize| keep.iter().position(|&x| x == v).unwrap();
    let sub_edges: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| em >> i & 1 == 1)
        .map(|(_, &(u, v))| (index_of(u), index_of(v)))
        .collect();
    let sub = Graph::from_edge_list(keep.len(), &sub_edges).unwrap();
    canonical_code(&sub).unwrap()
}

/// All non-isomorphic graphs of each order `1..=max_order`, generated by
/// vertex extension with canonical deduplication. `result[k]` holds order
/// `k + 1`.
pub fn enumerate_graphs(max_order: usize) -> Vec<Vec<Graph>> {
    assert!(max_order >= 1 && max_order <= 8);
    let mut by_order: Vec<Vec<Graph>> = vec![vec![Graph::empty(1)]];
    for n in 2..=max_order {
        let mut seen: HashSet<CanonicalCode> = HashSet::new();
        let mut next = Vec::new();
        for parent in &by_order[n - 2] {
            for mask in 0u32..1 << (n - 1) {
                let mut edges = parent.edges();
                for w in 0..n - 1 {
                    if mask >> w & 1 == 1 {
                        edges.push((w, n - 1));
                    }
                }
                let child = Graph::from_edge_list(n, &edges).unwrap();
                if seen.insert(canonical_code(&child).unwrap()) {
                    next.push(child);
                }
            }
        }
        by_order.push(next);
    }
    by_order
}

/// All non-isomorphic trees of the given order (Prüfer enumeration).
pub fn enumerate_trees(order: usize) -> Vec<Graph> {
    assert!(order >= 1);
    if order == 1 {
        return vec![Graph::empty(1)];
    }
    if order == 2 {
        return vec![Graph::from_edge_list(2, &[(0, 1)]).unwrap()];
    }
    let k = order - 2;
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; k];
    loop {
        let tree = crate::catalog::NamedGraph::TreeFromPruefer(seq.clone())
            .build()
            .unwrap();
        if seen.insert(canonical_code(&tree).unwrap()) {
            out.push(tree);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            seq[i] += 1;
            if seq[i] < order {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// All non-isomorphic graphs with `1..=max_edges` edges and no isolated
/// vertices, by growing one edge at a time: extend within the graph, hang an
/// edge off an existing vertex, or add a disjoint edge.
pub fn enumerate_nonisolated_by_edges(max_edges: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::from_edge_list(2, &[(0, 1)]).unwrap()];
    let mut all = level.clone();
    for _ in 1..max_edges {
        let mut seen: HashSet<CanonicalCode> = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let n = g.order();
            let mut push = |child: Graph, next: &mut Vec<Graph>| {
                if seen.insert(canonical_code(&child).unwrap()) {
                    next.push(child);
                }
            };
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut edges = g.edges();
                        edges.push((u, v));
                        push(Graph::from_edge_list(n, &edges).unwrap(), &mut next);
                    }
                }
            }
            for u in 0..n {
                let mut edges = g.edges();
                edges.push((u, n));
                push(Graph::from_edge_list(n + 1, &edges).unwrap(), &mut next);
            }
            let mut edges = g.edges();
            edges.push((n, n + 1));
            push(Graph::from_edge_list(n + 2, &edges).unwrap(), &mut next);
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    #[test]
    fn cycle_oracle_basics() {
        assert_eq!(brute_shortest_cycle(&named_graph("C5").unwrap()), Some(5));
        assert_eq!(brute_shortest_cycle(&named_graph("K4").unwrap()), Some(3));
        assert_eq!(brute_shortest_cycle(&named_graph("P4").unwrap()), None);
        assert_eq!(brute_shortest_cycle(&named_graph("petersen").unwrap()), Some(5));
    }

    #[test]
    fn iso_oracle_basics() {
        let w4 = named_graph("W4").unwrap();
        let (octa_minus, _) = named_graph("K2_2_2").unwrap().without_vertex(3);
        assert!(brute_isomorphic(&w4, &octa_minus));
        assert!(!brute_isomorphic(
            &named_graph("P4").unwrap(),
            &named_graph("S3").unwrap()
        ));
    }

    #[test]
    fn known_graph_counts() {
        let counts: Vec<usize> = enumerate_graphs(7).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn known_tree_counts() {
        assert_eq!(enumerate_trees(4).len(), 2);
        assert_eq!(enumerate_trees(5).len(), 3);
        assert_eq!(enumerate_trees(6).len(), 6);
    }

    #[test]
    fn naive_and_reference_agree_on_k4() {
        let k4 = named_graph("K4").unwrap();
        let naive = brute_minimal_critical_naive(&k4);
        let reference = minimal_critical_reference(&k4);
        assert_eq!(naive, reference);
        assert_eq!(naive.len(), 1);
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(0b10110, 2).len(), 3);
        assert_eq!(k_subsets(0b1111, 4).len(), 1);
        assert_eq!(k_subsets(0b111, 4).len(), 0);
    }
}
