//! Small deterministic Dinic max-flow, used by the flow route of the
//! density maximizer.

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
}

pub struct FlowNet {
    arcs: Vec<Arc>,
    /// adjacency: per node, indices into `arcs`; arc i's reverse is i ^ 1
    adj: Vec<Vec<usize>>,
}

pub const INF: i64 = i64::MAX / 4;

impl FlowNet {
    pub fn new(nodes: usize) -> Self {
        FlowNet {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        let idx = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.adj[from].push(idx);
        self.adj[to].push(idx + 1);
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            let Some(level) = self.levels(source, sink) else {
                return total;
            };
            let mut iter = vec![0usize; self.adj.len()];
            loop {
                let pushed = self.augment(source, sink, INF, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    /// Nodes reachable from `source` in the residual network after max flow:
    /// the source side of a minimum cut.
    pub fn min_cut_source_side(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &ai in &self.adj[u] {
                let arc = &self.arcs[ai];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }

    fn levels(&self, source: usize, sink: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.adj.len()];
        level[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &ai in &self.adj[u] {
                let arc = &self.arcs[ai];
                if arc.cap > 0 && level[arc.to] == usize::MAX {
                    level[arc.to] = level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        (level[sink] != usize::MAX).then_some(level)
    }

    fn augment(
        &mut self,
        u: usize,
        sink: usize,
        limit: i64,
        level: &[usize],
        iter: &mut [usize],
    ) -> i64 {
        if u == sink {
            return limit;
        }
        while iter[u] < self.adj[u].len() {
            let ai = self.adj[u][iter[u]];
            let (to, cap) = (self.arcs[ai].to, self.arcs[ai].cap);
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.augment(to, sink, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.arcs[ai].cap -= pushed;
                    self.arcs[ai ^ 1].cap += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_flow() {
        // source 0, sink 3; two disjoint paths of capacity 2 and 3
        let mut net = FlowNet::new(4);
        net.add_arc(0, 1, 2);
        net.add_arc(1, 3, 2);
        net.add_arc(0, 2, 3);
        net.add_arc(2, 3, 3);
        assert_eq!(net.max_flow(0, 3), 5);
    }

    #[test]
    fn bottleneck_cut() {
        let mut net = FlowNet::new(4);
        net.add_arc(0, 1, 10);
        net.add_arc(1, 2, 1);
        net.add_arc(2, 3, 10);
        assert_eq!(net.max_flow(0, 3), 1);
        let side = net.min_cut_source_side(0);
        assert_eq!(side, vec![true, true, false, false]);
    }
}
