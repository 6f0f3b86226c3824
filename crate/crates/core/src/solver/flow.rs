use std::collections::VecDeque;

use crate::graph::Graph;

/// Unit-capacity max flow on an undirected graph: each edge is a pair of
/// opposite arcs of capacity one.
struct UnitFlow<'a> {
    g: &'a Graph,
    n: usize,
    // flow[u * n + v] in {-1, 0, 1}
    flow: Vec<i8>,
    parent: Vec<usize>,
}

impl<'a> UnitFlow<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        UnitFlow {
            g,
            n,
            flow: vec![0; n * n],
            parent: vec![usize::MAX; n],
        }
    }

    fn reset(&mut self) {
        self.flow.iter_mut().for_each(|f| *f = 0);
    }

    /// Shortest augmenting path from `s` to `t`; pushes one unit along it.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let n = self.n;
        self.parent.iter_mut().for_each(|p| *p = usize::MAX);
        self.parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in self.g.neighbors(u) {
                if self.parent[v] == usize::MAX && self.flow[u * n + v] < 1 {
                    self.parent[v] = u;
                    if v == t {
                        let mut x = t;
                        while x != s {
                            let p = self.parent[x];
                            self.flow[p * n + x] += 1;
                            self.flow[x * n + p] -= 1;
                            x = p;
                        }
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        false
    }

    /// `min(maxflow(s, t), limit)`.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.reset();
        let mut value = 0;
        while value < limit && self.augment(s, t) {
            value += 1;
        }
        value
    }
}

/// Edge-connectivity `lambda(G)`: the minimum over `t != 0` of the maximum
/// number of edge-disjoint `u_0`-`t` paths. Returns 0 for disconnected graphs
/// and for the single vertex.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut flow = UnitFlow::new(g);
    let mut best = g.min_degree();
    for t in 1..n {
        best = best.min(flow.max_flow(0, t, best));
        if best == 0 {
            break;
        }
    }
    best
}
