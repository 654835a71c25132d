//! Subgraph embedding search (not induced): an injective vertex map carrying
//! every pattern edge to a host edge.

use crate::graph::Graph;

/// First embedding of `pattern` into `host` in a deterministic search order,
/// or `None` if no embedding exists. Entry `i` of the result is the host
/// vertex assigned to pattern vertex `i`.
pub fn subgraph_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let pn = pattern.order();
    let hn = host.order();
    if pn > hn || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if pn == 0 {
        return Some(Vec::new());
    }

    // Place high-degree, well-connected pattern vertices first.
    let order = placement_order(pattern);
    let host_deg = host.degrees();
    let pat_deg = pattern.degrees();

    let mut assign = vec![usize::MAX; pn];
    let mut used = vec![false; hn];

    fn go(
        pattern: &Graph,
        host: &Graph,
        order: &[usize],
        pat_deg: &[usize],
        host_deg: &[usize],
        depth: usize,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let pv = order[depth];
        'candidates: for hv in 0..host.order() {
            if used[hv] || host_deg[hv] < pat_deg[pv] {
                continue;
            }
            for pw in pattern.neighbors(pv) {
                let hw = assign[pw];
                if hw != usize::MAX && !host.has_edge(hv, hw) {
                    continue 'candidates;
                }
            }
            assign[pv] = hv;
            used[hv] = true;
            if go(pattern, host, order, pat_deg, host_deg, depth + 1, assign, used) {
                return true;
            }
            assign[pv] = usize::MAX;
            used[hv] = false;
        }
        false
    }

    if go(
        pattern, host, &order, &pat_deg, &host_deg, 0, &mut assign, &mut used,
    ) {
        Some(assign)
    } else {
        None
    }
}

/// True iff `map` is a valid embedding of `pattern` into `host` — injective,
/// carrying every pattern edge to a host edge. The mechanical re-check used
/// by the test suites.
pub fn validate_embedding(pattern: &Graph, host: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.order() {
        return false;
    }
    let mut seen = vec![false; host.order()];
    for &hv in map {
        if hv >= host.order() || seen[hv] {
            return false;
        }
        seen[hv] = true;
    }
    pattern.edges().iter().all(|&(u, v)| host.has_edge(map[u], map[v]))
}

fn placement_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let deg = pattern.degrees();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let connectivity = pattern.neighbors(v).filter(|&w| placed[w]).count();
                (connectivity, deg[v], std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    #[test]
    fn triangle_in_k4() {
        let k3 = named_graph("K3").unwrap();
        let k4 = named_graph("K4").unwrap();
        let map = subgraph_embedding(&k3, &k4).expect("K4 contains triangles");
        assert!(validate_embedding(&k3, &k4, &map));
    }

    #[test]
    fn k4_not_in_octahedron() {
        let k4 = named_graph("K4").unwrap();
        let octa = named_graph("K2_2_2").unwrap();
        assert_eq!(subgraph_embedding(&k4, &octa), None);
    }

    #[test]
    fn odd_cycle_not_in_bipartite() {
        let c5 = named_graph("C5").unwrap();
        let k44 = named_graph("K4_4").unwrap();
        assert_eq!(subgraph_embedding(&c5, &k44), None);
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        // 2K2 embeds in P4, but not in K3 (too few vertices)
        let m2 = named_graph("M2").unwrap();
        let p4 = named_graph("P4").unwrap();
        let k3 = named_graph("K3").unwrap();
        assert!(subgraph_embedding(&m2, &p4).is_some());
        assert_eq!(subgraph_embedding(&m2, &k3), None);
    }

    #[test]
    fn empty_pattern() {
        let k3 = named_graph("K3").unwrap();
        assert_eq!(subgraph_embedding(&Graph::empty(0), &k3), Some(vec![]));
    }
}
