//! Exact small Ramsey numbers: `r(G, H)` is the least `N` such that every
//! red/blue coloring of the edges of `K_N` contains a red copy of `G` or a
//! blue copy of `H`.
//!
//! The arrow decision is a branch-and-bound search over edge colors. All
//! copies of each pattern in `K_N` are precomputed as edge bitmasks and
//! indexed by edge; a copy with every edge but one in its color forces the
//! last edge to the opposite color (unit propagation), and a fully
//! monochromatic copy is a conflict. Symmetry is broken by restricting the
//! first vertex's incident edges to a red-prefix pattern, which is sound
//! because some vertex relabeling brings any coloring into that form.
//!
//! Under `Parallelism::Rayon` the top of the tree is split into tasks whose
//! results merge in task order with the sequential short-circuit rule, so
//! the decision and the node count are identical at every worker count.

use crate::canon::{canonical_code, CanonicalCode};
use crate::catalog::NamedGraph;
use crate::copies::{copy_masks, edge_index, host_edge_list};
use crate::embed::subgraph_embedding;
use crate::exec::{join, Budget, ExecConfig};
use crate::graph::Graph;
use crate::graph6;
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;
use thiserror::Error;

/// Edge bitmasks are u128, so hosts are capped at `C(16,2) = 120` edges.
pub const HARD_HOST_CAP: usize = 16;
/// Policy cap for exact searches; `r(K_3, K_4) = 9`-scale problems fit,
/// `r(K_4, K_4)`-scale problems are out of scope.
pub const DEFAULT_HOST_CAP: usize = 13;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RamseyError {
    #[error("pattern has no edges")]
    EmptyPattern,
    #[error("pattern has an isolated vertex")]
    IsolatedVertex,
    #[error("host order {n} above hard cap {HARD_HOST_CAP}")]
    HostAboveHardCap { n: usize },
    #[error("host order must be at least 1")]
    HostTooSmall,
}

/// A red/blue edge coloring of `K_n`, stored as the red edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub n: usize,
    pub red_edges: Vec<(usize, usize)>,
}

impl Coloring {
    pub fn red_graph(&self) -> Graph {
        Graph::from_edge_list(self.n, &self.red_edges).expect("witness edges are in range")
    }

    pub fn blue_graph(&self) -> Graph {
        self.red_graph().complement()
    }

    /// Swapping colors turns a witness for `(G, H)` into one for `(H, G)`.
    pub fn swap_colors(&self) -> Coloring {
        Coloring {
            n: self.n,
            red_edges: self.blue_graph().edges(),
        }
    }
}

/// Independent witness check: no red copy of `g`, no blue copy of `h`,
/// via the embedding search rather than the copy tables.
pub fn validate_witness(g: &Graph, h: &Graph, coloring: &Coloring) -> bool {
    let red = coloring.red_graph();
    let blue = coloring.blue_graph();
    subgraph_embedding(g, &red).is_none() && subgraph_embedding(h, &blue).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrowDecision {
    /// Every coloring of `K_N` contains a red `G` or a blue `H`.
    Arrows,
    /// A concrete coloring avoiding both.
    Witness(Coloring),
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowsResult {
    pub decision: ArrowDecision,
    pub nodes: u64,
}

struct Tables {
    n: usize,
    edge_count: usize,
    edges: Vec<(usize, usize)>,
    g_masks: Vec<u128>,
    h_masks: Vec<u128>,
    g_by_edge: Vec<Vec<u32>>,
    h_by_edge: Vec<Vec<u32>>,
    g_size: u16,
    h_size: u16,
    /// star_pos[e] = j if edge e is (0, j), else usize::MAX
    star_pos: Vec<usize>,
}

impl Tables {
    fn build(g: &Graph, h: &Graph, n: usize) -> Tables {
        let edges = host_edge_list(n);
        let edge_count = edges.len();
        let g_masks = copy_masks(g, n);
        let h_masks = copy_masks(h, n);
        let mut g_by_edge = vec![Vec::new(); edge_count];
        let mut h_by_edge = vec![Vec::new(); edge_count];
        for (ci, mask) in g_masks.iter().enumerate() {
            for e in 0..edge_count {
                if mask >> e & 1 == 1 {
                    g_by_edge[e].push(ci as u32);
                }
            }
        }
        for (ci, mask) in h_masks.iter().enumerate() {
            for e in 0..edge_count {
                if mask >> e & 1 == 1 {
                    h_by_edge[e].push(ci as u32);
                }
            }
        }
        let mut star_pos = vec![usize::MAX; edge_count];
        for j in 1..n {
            star_pos[edge_index(0, j)] = j;
        }
        Tables {
            n,
            edge_count,
            edges,
            g_size: g.edge_count() as u16,
            h_size: h.edge_count() as u16,
            g_masks,
            h_masks,
            g_by_edge,
            h_by_edge,
            star_pos,
        }
    }
}

#[derive(Clone)]
struct ColorState {
    red: u128,
    blue: u128,
    assigned: u128,
    unassigned_count: usize,
    /// per G-copy: red edges / blue edges in the copy
    g_same: Vec<u16>,
    g_opp: Vec<u16>,
    /// per H-copy: blue edges / red edges in the copy
    h_same: Vec<u16>,
    h_opp: Vec<u16>,
    trail: Vec<usize>,
}

impl ColorState {
    fn new(t: &Tables) -> ColorState {
        ColorState {
            red: 0,
            blue: 0,
            assigned: 0,
            unassigned_count: t.edge_count,
            g_same: vec![0; t.g_masks.len()],
            g_opp: vec![0; t.g_masks.len()],
            h_same: vec![0; t.h_masks.len()],
            h_opp: vec![0; t.h_masks.len()],
            trail: Vec::with_capacity(t.edge_count),
        }
    }

    fn is_red(&self, e: usize) -> bool {
        self.red >> e & 1 == 1
    }

    fn is_assigned(&self, e: usize) -> bool {
        self.assigned >> e & 1 == 1
    }
}

/// Applies `edge := color` plus all consequences. Returns false on conflict
/// (a fully monochromatic copy), leaving the trail consistent for undo.
fn propagate(t: &Tables, st: &mut ColorState, edge: usize, red: bool) -> bool {
    let mut queue: Vec<(usize, bool)> = vec![(edge, red)];
    while let Some((e, is_red)) = queue.pop() {
        if st.is_assigned(e) {
            if st.is_red(e) == is_red {
                continue;
            }
            return false;
        }
        st.assigned |= 1 << e;
        st.unassigned_count -= 1;
        st.trail.push(e);
        if is_red {
            st.red |= 1 << e;
        } else {
            st.blue |= 1 << e;
        }

        // red-prefix symmetry on the first vertex's star: red at (0,j)
        // forces red at (0,j-1); blue at (0,j) forces blue at (0,j+1)
        let j = t.star_pos[e];
        if j != usize::MAX {
            if is_red && j >= 2 {
                queue.push((edge_index(0, j - 1), true));
            }
            if !is_red && j + 1 < t.n {
                queue.push((edge_index(0, j + 1), false));
            }
        }

        let (same_by_edge, opp_by_edge) = if is_red {
            (&t.g_by_edge[e], &t.h_by_edge[e])
        } else {
            (&t.h_by_edge[e], &t.g_by_edge[e])
        };
        let (same, opp, masks, size, forces_red) = if is_red {
            (&mut st.g_same, &mut st.g_opp, &t.g_masks, t.g_size, false)
        } else {
            (&mut st.h_same, &mut st.h_opp, &t.h_masks, t.h_size, true)
        };
        for &ci in same_by_edge {
            let ci = ci as usize;
            same[ci] += 1;
            if opp[ci] == 0 {
                if same[ci] == size {
                    return false;
                }
                if same[ci] + 1 == size {
                    let rest = masks[ci] & !st.assigned;
                    if rest != 0 {
                        queue.push((rest.trailing_zeros() as usize, forces_red));
                    }
                }
            }
        }
        if is_red {
            for &ci in opp_by_edge {
                st.h_opp[ci as usize] += 1;
            }
        } else {
            for &ci in opp_by_edge {
                st.g_opp[ci as usize] += 1;
            }
        }
    }
    true
}

fn undo_to(t: &Tables, st: &mut ColorState, checkpoint: usize) {
    while st.trail.len() > checkpoint {
        let e = st.trail.pop().unwrap();
        let was_red = st.is_red(e);
        st.assigned &= !(1u128 << e);
        st.unassigned_count += 1;
        if was_red {
            st.red &= !(1u128 << e);
            for &ci in &t.g_by_edge[e] {
                st.g_same[ci as usize] -= 1;
            }
            for &ci in &t.h_by_edge[e] {
                st.h_opp[ci as usize] -= 1;
            }
        } else {
            st.blue &= !(1u128 << e);
            for &ci in &t.h_by_edge[e] {
                st.h_same[ci as usize] -= 1;
            }
            for &ci in &t.g_by_edge[e] {
                st.g_opp[ci as usize] -= 1;
            }
        }
    }
}

/// Branch choice: the lowest-index unassigned edge of an alive copy with the
/// fewest unassigned edges; try the blocking color first. `None` means no
/// copy can still become monochromatic, so any completion is a witness.
fn choose_branch(t: &Tables, st: &ColorState) -> Option<(usize, bool)> {
    let mut best: Option<(u16, usize, bool)> = None;
    for (ci, &mask) in t.g_masks.iter().enumerate() {
        if st.g_opp[ci] == 0 && st.g_same[ci] < t.g_size {
            let unassigned = t.g_size - st.g_same[ci];
            if best.is_none_or(|(u, _, _)| unassigned < u) {
                let e = (mask & !st.assigned).trailing_zeros() as usize;
                best = Some((unassigned, e, false));
            }
        }
    }
    for (ci, &mask) in t.h_masks.iter().enumerate() {
        if st.h_opp[ci] == 0 && st.h_same[ci] < t.h_size {
            let unassigned = t.h_size - st.h_same[ci];
            if best.is_none_or(|(u, _, _)| unassigned < u) {
                let e = (mask & !st.assigned).trailing_zeros() as usize;
                best = Some((unassigned, e, true));
            }
        }
    }
    best.map(|(_, e, first_red)| (e, first_red))
}

#[derive(Clone, Debug)]
enum Outcome {
    Found(u128),
    Exhausted,
    Aborted,
}

struct SearchCtx<'a> {
    tables: &'a Tables,
    global_nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
    max_nodes: u64,
    deadline: Option<Instant>,
    parallel: bool,
}

impl SearchCtx<'_> {
    fn tick(&self) -> bool {
        let n = self.global_nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes {
            self.abort.store(true, Ordering::Relaxed);
        }
        if let Some(deadline) = self.deadline {
            if n % 1024 == 0 && Instant::now() >= deadline {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.abort.load(Ordering::Relaxed)
    }
}

/// Fill every unassigned edge red: sound once no copy is alive.
fn complete_all_red(st: &ColorState, t: &Tables) -> u128 {
    let mut mask = st.red;
    for e in 0..t.edge_count {
        if !st.is_assigned(e) {
            mask |= 1 << e;
        }
    }
    mask
}

const SPLIT_DEPTH: usize = 5;

/// Sequential node: explores in place with trail undo.
fn search_seq(ctx: &SearchCtx, st: &mut ColorState) -> (Outcome, u64) {
    if !ctx.tick() {
        return (Outcome::Aborted, 1);
    }
    let mut nodes = 1u64;
    let Some((edge, first_red)) = choose_branch(ctx.tables, st) else {
        return (Outcome::Found(complete_all_red(st, ctx.tables)), nodes);
    };
    for color in [first_red, !first_red] {
        let checkpoint = st.trail.len();
        if propagate(ctx.tables, st, edge, color) {
            let (outcome, sub) = search_seq(ctx, st);
            nodes += sub;
            match outcome {
                Outcome::Exhausted => {}
                found_or_aborted => {
                    undo_to(ctx.tables, st, checkpoint);
                    return (found_or_aborted, nodes);
                }
            }
        }
        undo_to(ctx.tables, st, checkpoint);
    }
    (Outcome::Exhausted, nodes)
}

/// Splitting node: clones the state per color and merges child results in
/// color order with the sequential short-circuit rule, so the merged outcome
/// and node count equal a sequential run's.
fn search_split(ctx: &SearchCtx, mut st: ColorState, depth: usize) -> (Outcome, u64) {
    if !ctx.parallel || depth >= SPLIT_DEPTH {
        return search_seq(ctx, &mut st);
    }
    if !ctx.tick() {
        return (Outcome::Aborted, 1);
    }
    let Some((edge, first_red)) = choose_branch(ctx.tables, &st) else {
        return (Outcome::Found(complete_all_red(&st, ctx.tables)), 1);
    };
    let mut second_state = st;
    let mut first_state = second_state.clone();
    let first_ok = propagate(ctx.tables, &mut first_state, edge, first_red);
    let second_ok = propagate(ctx.tables, &mut second_state, edge, !first_red);
    let (first, second) = join(
        true,
        move || {
            if first_ok {
                search_split(ctx, first_state, depth + 1)
            } else {
                (Outcome::Exhausted, 0)
            }
        },
        move || {
            if second_ok {
                search_split(ctx, second_state, depth + 1)
            } else {
                (Outcome::Exhausted, 0)
            }
        },
    );
    let nodes_here = 1;
    match first.0 {
        Outcome::Exhausted => (second.0, nodes_here + first.1 + second.1),
        other => (other, nodes_here + first.1),
    }
}

// In a sequential run the same tree gets one tick per entered node; the
// split path must tick identically, which it does: one per split node, and
// search_seq ticks its own entries.

/// Arrow decision for `(G, H)` at host order `N`.
pub fn arrows(g: &Graph, h: &Graph, n: usize, exec: &ExecConfig) -> Result<ArrowsResult, RamseyError> {
    validate_pattern(g)?;
    validate_pattern(h)?;
    if n == 0 {
        return Err(RamseyError::HostTooSmall);
    }
    if n > HARD_HOST_CAP {
        return Err(RamseyError::HostAboveHardCap { n });
    }
    let tables = Tables::build(g, h, n);
    let global_nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let ctx = SearchCtx {
        tables: &tables,
        global_nodes: &global_nodes,
        abort: &abort,
        max_nodes: exec.budget.max_nodes.unwrap_or(u64::MAX),
        deadline: exec
            .budget
            .max_wall_ms
            .map(|ms| Instant::now() + std::time::Duration::from_millis(ms)),
        parallel: exec.parallelism.is_parallel(),
    };
    let mut root = ColorState::new(&tables);
    if !initial_propagation(&tables, &mut root) {
        return Ok(ArrowsResult {
            decision: ArrowDecision::Arrows,
            nodes: 0,
        });
    }
    let (outcome, nodes) = search_split(&ctx, root, 0);
    let decision = match outcome {
        Outcome::Found(red_mask) => {
            let red_edges = tables
                .edges
                .iter()
                .enumerate()
                .filter(|(e, _)| red_mask >> e & 1 == 1)
                .map(|(_, &pair)| pair)
                .collect();
            ArrowDecision::Witness(Coloring { n, red_edges })
        }
        Outcome::Exhausted => ArrowDecision::Arrows,
        Outcome::Aborted => ArrowDecision::BudgetExceeded,
    };
    Ok(ArrowsResult { decision, nodes })
}

/// Unit copies (single-edge patterns) force colors before any branching.
fn initial_propagation(t: &Tables, st: &mut ColorState) -> bool {
    let mut forced: Vec<(usize, bool)> = Vec::new();
    if t.g_size == 1 {
        for mask in &t.g_masks {
            forced.push((mask.trailing_zeros() as usize, false));
        }
    }
    if t.h_size == 1 {
        for mask in &t.h_masks {
            forced.push((mask.trailing_zeros() as usize, true));
        }
    }
    for (e, color) in forced {
        if st.is_assigned(e) {
            if st.is_red(e) != color {
                return false;
            }
            continue;
        }
        if !propagate(t, st, e, color) {
            return false;
        }
    }
    true
}

fn validate_pattern(g: &Graph) -> Result<(), RamseyError> {
    if g.order() == 0 || g.edge_count() == 0 {
        return Err(RamseyError::EmptyPattern);
    }
    if g.has_isolated_vertex() {
        return Err(RamseyError::IsolatedVertex);
    }
    Ok(())
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.order() * (g.order() - 1) / 2
}

fn binomial_clamped(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Analytic bracket `lo <= r(G,H) <= hi`.
///
/// `lo = max(v(G), v(H))` (an all-one-color coloring of anything smaller
/// avoids both patterns). `hi` is the tightest applicable bound among the
/// tree formula (for a forest versus a complete graph, after completing the
/// forest to a tree of the same order), the triangle bound `2e + 1`, the
/// forest bound `(v-1)(2e-1)+1`, and the generic binomial two-clique bound.
pub fn ramsey_bounds(g: &Graph, h: &Graph) -> Result<(usize, usize), RamseyError> {
    validate_pattern(g)?;
    validate_pattern(h)?;
    let lo = g.order().max(h.order());
    let mut his: Vec<u64> = Vec::new();
    let (vg, vh) = (g.order() as u64, h.order() as u64);
    let (eg, eh) = (g.edge_count() as u64, h.edge_count() as u64);
    if g.is_forest() && is_complete(h) {
        his.push((vg - 1) * (vh - 1) + 1);
    }
    if h.is_forest() && is_complete(g) {
        his.push((vh - 1) * (vg - 1) + 1);
    }
    let k3 = |x: &Graph| x.order() == 3 && x.edge_count() == 3;
    if k3(g) {
        his.push(2 * eh + 1);
    }
    if k3(h) {
        his.push(2 * eg + 1);
    }
    if g.is_forest() {
        his.push((vg - 1) * (2 * eh - 1) + 1);
    }
    if h.is_forest() {
        his.push((vh - 1) * (2 * eg - 1) + 1);
    }
    his.push(binomial_clamped(vg + vh - 2, vg - 1));
    let hi = his.into_iter().min().expect("generic bound always present");
    let hi = (hi.min(usize::MAX as u64)) as usize;
    debug_assert!(lo <= hi);
    Ok((lo, hi.max(lo)))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub wall_ms: u128,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RamseyResult {
    pub g_graph6: String,
    pub h_graph6: String,
    /// Canonically ordered pair of canonical codes; the cache key.
    pub pair_key: (CanonicalCode, CanonicalCode),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    pub lo: usize,
    pub hi: usize,
    /// Witness at `value - 1` (or at `lo - 1` for bounds-only results when
    /// one was found).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Coloring>,
    pub stats: SearchStats,
    pub budget: Budget,
    pub budget_exhausted: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct RamseyOptions {
    /// Exact searches stop at this host order and degrade to bounds.
    pub host_cap: usize,
}

impl Default for RamseyOptions {
    fn default() -> Self {
        RamseyOptions {
            host_cap: DEFAULT_HOST_CAP,
        }
    }
}

/// The canonically ordered cache key for a pattern pair (the value is
/// symmetric under swapping the patterns with colors).
pub fn pair_key(g: &Graph, h: &Graph) -> (CanonicalCode, CanonicalCode) {
    let cg = canonical_code(g).expect("patterns are small");
    let ch = canonical_code(h).expect("patterns are small");
    if cg <= ch {
        (cg, ch)
    } else {
        (ch, cg)
    }
}

/// Exact `r(G, H)`: the least `N` for which the search proves the arrow
/// relation, with a validated witness coloring one below. Starts at the
/// analytic lower bound and walks the bracket inward; analytic bounds are
/// used only as hints, never trusted for the value.
pub fn ramsey_exact(
    g: &Graph,
    h: &Graph,
    opts: &RamseyOptions,
    exec: &ExecConfig,
) -> Result<RamseyResult, RamseyError> {
    let start = Instant::now();
    let (lo_analytic, hi_analytic) = ramsey_bounds(g, h)?;
    let mut nodes_total = 0u64;
    let mut memo: HashMap<usize, ArrowDecision> = HashMap::new();
    let mut run = |n: usize, nodes_total: &mut u64, exec: &ExecConfig| -> Result<ArrowDecision, RamseyError> {
        if let Some(d) = memo.get(&n) {
            return Ok(d.clone());
        }
        let result = arrows(g, h, n, exec)?;
        *nodes_total += result.nodes;
        memo.insert(n, result.decision.clone());
        Ok(result.decision)
    };

    let mut proven_lo = lo_analytic; // r >= proven_lo (trivially valid at start)
    let mut proven_hi: Option<usize> = None;
    let mut witness_at: HashMap<usize, Coloring> = HashMap::new();
    let mut exhausted = false;

    let mut n = lo_analytic.max(2);
    let (value, witness) = loop {
        if n > opts.host_cap || n > HARD_HOST_CAP {
            exhausted = true;
            break (None, witness_at.remove(&(proven_lo - 1)));
        }
        match run(n, &mut nodes_total, exec)? {
            ArrowDecision::Witness(w) => {
                witness_at.insert(n, w);
                proven_lo = proven_lo.max(n + 1);
                n += 1;
            }
            ArrowDecision::Arrows => {
                proven_hi = Some(n);
                // confirm minimality: need a witness at n - 1
                let mut m = n;
                let confirmed = loop {
                    if m <= 2 {
                        // r >= 2 always; the empty coloring of K_1 is the witness
                        break Some((m, Coloring { n: 1, red_edges: vec![] }));
                    }
                    if let Some(w) = witness_at.get(&(m - 1)) {
                        break Some((m, w.clone()));
                    }
                    match run(m - 1, &mut nodes_total, exec)? {
                        ArrowDecision::Witness(w) => {
                            witness_at.insert(m - 1, w.clone());
                            break Some((m, w));
                        }
                        ArrowDecision::Arrows => {
                            proven_hi = Some(m - 1);
                            m -= 1;
                        }
                        ArrowDecision::BudgetExceeded => break None,
                    }
                };
                match confirmed {
                    Some((value, w)) => {
                        debug_assert!(validate_witness(g, h, &w));
                        break (Some(value), Some(w));
                    }
                    None => {
                        exhausted = true;
                        break (None, None);
                    }
                }
            }
            ArrowDecision::BudgetExceeded => {
                exhausted = true;
                break (None, witness_at.remove(&(proven_lo - 1)));
            }
        }
    };

    let (lo, hi) = match value {
        Some(v) => (v, v),
        None => (proven_lo, proven_hi.unwrap_or(hi_analytic)),
    };
    Ok(RamseyResult {
        g_graph6: graph6::encode(g).expect("patterns are small"),
        h_graph6: graph6::encode(h).expect("patterns are small"),
        pair_key: pair_key(g, h),
        value,
        lo,
        hi,
        witness,
        stats: SearchStats {
            nodes: nodes_total,
            wall_ms: start.elapsed().as_millis(),
        },
        budget: exec.budget,
        budget_exhausted: exhausted,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Matchings,
    Paths,
    Stars,
}

impl Family {
    pub fn member(&self, k: usize) -> Result<Graph, RamseyError> {
        let named = match self {
            Family::Matchings => NamedGraph::Matching(k),
            Family::Paths => NamedGraph::Path(k),
            Family::Stars => NamedGraph::Star(k),
        };
        let g = named.build().map_err(|_| RamseyError::EmptyPattern)?;
        validate_pattern(&g)?;
        Ok(g)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EvidenceRow {
    pub k: usize,
    pub h_graph6: String,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    pub lo: usize,
    pub hi: usize,
    /// `r / e(H)` when exact.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<Rational>,
    /// `[lo/e, hi/e]` when the budget lapsed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_lo: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_hi: Option<Rational>,
    pub budget_exhausted: bool,
}

/// One exact (or bounds-only) Ramsey computation per family member; a probe
/// of the defining ratio `r(G, H_k)/e(H_k)`.
pub fn evidence_curve(
    g: &Graph,
    family: Family,
    k_min: usize,
    k_max: usize,
    opts: &RamseyOptions,
    exec: &ExecConfig,
) -> Result<Vec<EvidenceRow>, RamseyError> {
    validate_pattern(g)?;
    let ks: Vec<usize> = (k_min..=k_max).collect();
    let row = |&k: &usize| -> Result<EvidenceRow, RamseyError> {
        let h = family.member(k)?;
        let result = ramsey_exact(g, &h, opts, exec)?;
        let e = h.edge_count();
        let (ratio, ratio_lo, ratio_hi) = match result.value {
            Some(v) => (Some(Rational::new(v as u64, e as u64)), None, None),
            None => (
                None,
                Some(Rational::new(result.lo as u64, e as u64)),
                Some(Rational::new(result.hi as u64, e as u64)),
            ),
        };
        Ok(EvidenceRow {
            k,
            h_graph6: result.h_graph6.clone(),
            edges: e,
            value: result.value,
            lo: result.lo,
            hi: result.hi,
            ratio,
            ratio_lo,
            ratio_hi,
            budget_exhausted: result.budget_exhausted,
        })
    };
    #[cfg(feature = "parallel")]
    if exec.parallelism.is_parallel() {
        use rayon::prelude::*;
        return ks.par_iter().map(row).collect();
    }
    ks.iter().map(row).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    fn g(name: &str) -> Graph {
        named_graph(name).unwrap()
    }

    fn exact(a: &str, b: &str) -> RamseyResult {
        ramsey_exact(
            &g(a),
            &g(b),
            &RamseyOptions::default(),
            &ExecConfig::default(),
        )
        .unwrap()
    }

    #[test]
    fn k3_k3_is_six() {
        let r = exact("K3", "K3");
        assert_eq!(r.value, Some(6));
        let w = r.witness.unwrap();
        assert_eq!(w.n, 5);
        assert!(validate_witness(&g("K3"), &g("K3"), &w));
    }

    #[test]
    fn p3_p3_small() {
        let a = arrows(&g("P3"), &g("P3"), 3, &ExecConfig::default()).unwrap();
        assert_eq!(a.decision, ArrowDecision::Arrows);
        let a2 = arrows(&g("P3"), &g("P3"), 2, &ExecConfig::default()).unwrap();
        assert!(matches!(a2.decision, ArrowDecision::Witness(_)));
    }

    #[test]
    fn k2_vs_anything_is_order() {
        let r = exact("K2", "K5");
        assert_eq!(r.value, Some(5));
        assert_eq!(exact("K2", "K2").value, Some(2));
    }

    #[test]
    fn bounds_examples() {
        let (lo, hi) = ramsey_bounds(&g("K3"), &g("M3")).unwrap();
        assert!(lo >= 6);
        assert_eq!(hi, 7);
        let (_, hi) = ramsey_bounds(&g("P4"), &g("K3")).unwrap();
        assert_eq!(hi, 7);
        let (lo, hi) = ramsey_bounds(&g("K2"), &g("K5")).unwrap();
        assert_eq!((lo, hi), (5, 5));
    }

    #[test]
    fn pattern_validation() {
        let isolated = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(
            arrows(&isolated, &g("K3"), 3, &ExecConfig::default()),
            Err(RamseyError::IsolatedVertex)
        );
        assert_eq!(
            ramsey_bounds(&Graph::empty(2), &g("K3")),
            Err(RamseyError::EmptyPattern)
        );
    }

    #[test]
    fn witness_swap() {
        let r = exact("P4", "K3");
        assert_eq!(r.value, Some(7));
        let w = r.witness.unwrap();
        assert!(validate_witness(&g("P4"), &g("K3"), &w));
        assert!(validate_witness(&g("K3"), &g("P4"), &w.swap_colors()));
    }

    #[test]
    fn budget_degrades_to_bounds() {
        let exec = ExecConfig {
            budget: Budget::with_nodes(1),
            ..ExecConfig::default()
        };
        let r = ramsey_exact(&g("K3"), &g("K4"), &RamseyOptions::default(), &exec).unwrap();
        assert!(r.budget_exhausted);
        assert_eq!(r.value, None);
        assert!(r.lo <= 9 && 9 <= r.hi);
    }
}
