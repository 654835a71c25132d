//! Maximizing `e(H) - 2v(H)` over subgraphs — the density engine behind the
//! non-size-linearity certificates.
//!
//! The maximum over arbitrary subgraphs is attained by an induced subgraph
//! (dropping edges only lowers the objective), so the search runs over vertex
//! subsets. Subsets of size < 3 are degenerate for the certificate (`slack`
//! is defined only from 3 vertices up) and are excluded throughout.
//!
//! Two exact routes, cross-checked in the test suites:
//! * branch-and-bound over vertex subsets (orders up to 20, the default);
//! * a min-cut reduction (select an edge, pay 2 per endpoint vertex; forcing
//!   one edge into the solution rules the degenerate subsets out), used for
//!   larger hosts and as the prune inside the minimal-subgraph search.

use crate::flow::{FlowNet, INF};
use crate::graph::Graph;

/// Largest host the branch-and-bound route is used for; bigger graphs go
/// through the flow route.
pub const BNB_ORDER_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlackWitness {
    /// Vertex set of the witness, ascending, in host indices.
    pub vertices: Vec<usize>,
    /// `e(H) - (2 v(H) - 2) >= 0` for the induced witness H.
    pub slack: i64,
}

/// Maximum-slack induced subgraph on at least 3 vertices, or `None` when
/// every such subgraph has negative slack (no density certificate exists).
pub fn max_slack_subgraph(g: &Graph) -> Option<SlackWitness> {
    if g.order() <= BNB_ORDER_LIMIT {
        bnb_max_slack(g)
    } else {
        flow_max_slack(g)
    }
}

/// True iff some subgraph H (equivalently some induced subgraph) has
/// `e(H) >= 2 v(H) - 2` with at least 3 vertices.
///
/// Any minimal such subgraph has minimum degree >= 3, so it lives inside the
/// 3-core; peeling first usually resolves the question by arithmetic alone.
pub fn contains_critical(g: &Graph) -> bool {
    let core_vertices = g.three_core();
    if core_vertices.len() < 4 {
        return false;
    }
    let core = g.induced(&core_vertices);
    if core.edge_count() as i64 >= 2 * core.order() as i64 - 2 {
        return true;
    }
    max_slack_subgraph(&core).is_some()
}

/// Branch-and-bound over vertex subsets in fixed order. Requires
/// `order <= 64` (single-word adjacency rows); intended for `<= 20`.
pub fn bnb_max_slack(g: &Graph) -> Option<SlackWitness> {
    let n = g.order();
    assert!(n <= 64, "branch-and-bound route requires order <= 64");
    if n < 3 {
        return None;
    }
    // visit high-degree vertices first so dense witnesses are found early
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let rows: Vec<u64> = order
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            for w in g.neighbors(v) {
                let pos = order.iter().position(|&x| x == w).unwrap();
                row |= 1 << pos;
            }
            row
        })
        .collect();

    struct Ctx<'a> {
        rows: &'a [u64],
        n: usize,
        best: Option<(i64, u64)>,
    }

    // chosen: bitmask of S; e_s: edges within S; undecided: idx..n
    fn go(ctx: &mut Ctx, idx: usize, chosen: u64, size: usize, e_s: i64) {
        let threshold = ctx.best.map_or(0, |(s, _)| s + 1);
        // upper bound: every undecided vertex contributes at most its
        // positive marginal against chosen-or-undecided vertices
        let mut ub = e_s - 2 * size as i64 + 2;
        let all = !0u64 >> (64 - ctx.n);
        let low = if idx >= 64 { !0u64 } else { (1u64 << idx) - 1 };
        let future: u64 = chosen | (all & !low);
        for u in idx..ctx.n {
            let marginal = (ctx.rows[u] & future).count_ones() as i64 - 2;
            if marginal > 0 {
                ub += marginal;
            }
        }
        if ub < threshold {
            return;
        }
        if size >= 3 {
            let slack = e_s - 2 * size as i64 + 2;
            if slack >= 0 && ctx.best.is_none_or(|(s, _)| slack > s) {
                ctx.best = Some((slack, chosen));
            }
        }
        if idx == ctx.n {
            return;
        }
        let gained = (ctx.rows[idx] & chosen).count_ones() as i64;
        go(ctx, idx + 1, chosen | 1 << idx, size + 1, e_s + gained);
        go(ctx, idx + 1, chosen, size, e_s);
    }

    let mut ctx = Ctx {
        rows: &rows,
        n,
        best: None,
    };
    go(&mut ctx, 0, 0, 0, 0);
    ctx.best.map(|(slack, mask)| {
        let mut vertices: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| order[i]).collect();
        vertices.sort_unstable();
        SlackWitness { vertices, slack }
    })
}

/// Flow route: for each edge, the best subset containing that edge, via a
/// min-cut on the closure network (edges are unit profits requiring both
/// endpoints; vertices cost 2). Forcing an edge excludes the degenerate
/// subsets of size < 3 whenever the optimum is >= -2.
pub fn flow_max_slack(g: &Graph) -> Option<SlackWitness> {
    let n = g.order();
    let edges = g.edges();
    let m = edges.len();
    let mut best: Option<(i64, Vec<usize>)> = None;
    for (forced, _) in edges.iter().enumerate() {
        // nodes: 0 = source, 1 = sink, 2..2+m edge items, 2+m..2+m+n vertices
        let source = 0;
        let sink = 1;
        let edge_node = |i: usize| 2 + i;
        let vertex_node = |v: usize| 2 + m + v;
        let mut net = FlowNet::new(2 + m + n);
        // large enough that no minimum cut ever severs the forced edge's
        // source arc (any cut avoiding it costs at most m - 1 + 2n)
        let big: i64 = m as i64 + 2 * n as i64 + 10;
        let mut total_profit = 0;
        for (i, &(u, v)) in edges.iter().enumerate() {
            let profit = if i == forced { big } else { 1 };
            total_profit += profit;
            net.add_arc(source, edge_node(i), profit);
            net.add_arc(edge_node(i), vertex_node(u), INF);
            net.add_arc(edge_node(i), vertex_node(v), INF);
        }
        for v in 0..n {
            net.add_arc(vertex_node(v), sink, 2);
        }
        let cut = net.max_flow(source, sink);
        // closure value with the forced edge counted at weight `big`
        let value = total_profit - cut - (big - 1);
        let side = net.min_cut_source_side(source);
        let vertices: Vec<usize> = (0..n).filter(|&v| side[vertex_node(v)]).collect();
        // value = e[S] - 2|S| for the selected S; slack = value + 2
        let slack = value + 2;
        if slack >= 0 && best.as_ref().is_none_or(|(s, _)| slack > *s) {
            best = Some((slack, vertices));
        }
    }
    best.map(|(slack, vertices)| SlackWitness { vertices, slack })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    #[test]
    fn k4_has_zero_slack() {
        let k4 = named_graph("K4").unwrap();
        let w = max_slack_subgraph(&k4).unwrap();
        assert_eq!(w.slack, 0);
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn forests_have_no_witness() {
        for name in ["P4", "S4", "M3"] {
            let g = named_graph(name).unwrap();
            assert_eq!(max_slack_subgraph(&g), None);
            assert!(!contains_critical(&g));
        }
    }

    #[test]
    fn octahedron_slack() {
        let octa = named_graph("K2_2_2").unwrap();
        let w = max_slack_subgraph(&octa).unwrap();
        // whole graph: e=12, 2v-2=10
        assert_eq!(w.slack, 2);
        assert!(contains_critical(&octa));
    }

    #[test]
    fn c5_is_sparse() {
        assert_eq!(max_slack_subgraph(&named_graph("C5").unwrap()), None);
    }

    #[test]
    fn routes_agree() {
        for name in ["K4", "K5", "K2_2_2", "K4_4", "W4", "petersen", "C6", "K3_3"] {
            let g = named_graph(name).unwrap();
            let a = bnb_max_slack(&g);
            let b = flow_max_slack(&g);
            match (a, b) {
                (None, None) => {}
                (Some(x), Some(y)) => assert_eq!(x.slack, y.slack, "slack mismatch on {name}"),
                (x, y) => panic!("presence mismatch on {name}: {x:?} vs {y:?}"),
            }
        }
    }
}
