//! Dinic max-flow on small integer-capacity networks, plus the
//! project-selection oracle the density module is built on.

pub(crate) const INF: i64 = i64::MAX / 4;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

#[derive(Debug, Clone)]
pub(crate) struct Dinic {
    arcs: Vec<Arc>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    pub(crate) fn new(nodes: usize) -> Self {
        Dinic {
            arcs: Vec::new(),
            head: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let a = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.head[from].push(a);
        self.head[to].push(a + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &a in &self.head[v] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: i64) -> i64 {
        if v == t {
            return pushed;
        }
        while self.iter[v] < self.head[v].len() {
            let a = self.head[v][self.iter[v]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.arcs[a].cap -= d;
                    self.arcs[a ^ 1].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, INF);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Maximal source side of a minimum cut: the complement of the nodes that
    /// can still reach `t` in the residual network.
    pub(crate) fn max_source_side(&self, t: usize) -> Vec<bool> {
        let n = self.head.len();
        let mut reaches_t = vec![false; n];
        reaches_t[t] = true;
        let mut queue = std::collections::VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            // u reaches v when the residual arc u -> v is open; the reverse
            // arc of u -> v is stored at the paired index and sits in
            // head[v], so scanning head[v] finds every such u.
            for &a in &self.head[v] {
                let u = self.arcs[a].to;
                if !reaches_t[u] && self.arcs[a ^ 1].cap > 0 {
                    reaches_t[u] = true;
                    queue.push_back(u);
                }
            }
        }
        reaches_t.iter().map(|&r| !r).collect()
    }
}

/// Maximizes `sum of gains over edges inside S  -  vertex_cost * |S|` over
/// vertex subsets `S` that contain every vertex in `forced`. An edge counts
/// as soon as both endpoints are selected, so the maximum is attained on an
/// induced subgraph. Returns the optimum and its inclusion-maximal maximizer.
pub(crate) fn selection_max(
    n: usize,
    weighted_edges: &[(usize, usize, u64)],
    edge_gain: i64,
    vertex_cost: i64,
    forced: &[usize],
) -> (i64, Vec<usize>) {
    debug_assert!(edge_gain > 0 && vertex_cost >= 0);
    let e = weighted_edges.len();
    let source = 0;
    let sink = 1 + e + n;
    let mut net = Dinic::new(sink + 1);
    let mut total_gain: i64 = 0;
    for (i, &(u, v, m)) in weighted_edges.iter().enumerate() {
        let gain = edge_gain * m as i64;
        total_gain += gain;
        net.add_edge(source, 1 + i, gain);
        net.add_edge(1 + i, 1 + e + u, INF);
        net.add_edge(1 + i, 1 + e + v, INF);
    }
    for v in 0..n {
        net.add_edge(1 + e + v, sink, vertex_cost);
    }
    for &v in forced {
        net.add_edge(source, 1 + e + v, INF);
    }
    let flow = net.max_flow(source, sink);
    let side = net.max_source_side(sink);
    let chosen: Vec<usize> = (0..n).filter(|&v| side[1 + e + v]).collect();
    (total_gain - flow, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_picks_dense_part() {
        // Triangle on {0,1,2} plus pendant 3: maximize edges - |S| picks the
        // triangle (3 - 3 = 0) over anything with the pendant.
        let edges = [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1)];
        let (val, set) = selection_max(4, &edges, 1, 1, &[]);
        assert_eq!(val, 0);
        // The whole graph ties (4 - 4 = 0); the maximal maximizer wins.
        assert_eq!(set, vec![0, 1, 2, 3]);

        let (val, set) = selection_max(4, &edges, 2, 1, &[]);
        assert_eq!(val, 4); // 2*4 - 4 on everything
        assert_eq!(set, vec![0, 1, 2, 3]);
    }

    #[test]
    fn forcing_a_vertex_restricts_the_choice() {
        // Unforced the optimum is empty; forcing the isolated vertex 2 pays
        // its cost and nothing else helps.
        let edges = [(0, 1, 1)];
        let (val, set) = selection_max(3, &edges, 1, 2, &[2]);
        assert_eq!(val, -2);
        assert_eq!(set, vec![2]);

        // With a profitable edge the forced set grows around it.
        let (val, set) = selection_max(3, &edges, 5, 2, &[2]);
        assert_eq!(val, 5 - 6);
        assert_eq!(set, vec![0, 1, 2]);
    }

    #[test]
    fn empty_selection_when_costs_dominate() {
        let edges = [(0, 1, 1)];
        let (val, set) = selection_max(2, &edges, 1, 5, &[]);
        assert_eq!(val, 0);
        assert!(set.is_empty());
    }
}
