use std::cmp::Ordering as CmpOrdering;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{edge_connectivity, rna_local_search, run_in_pool};
use super::{Method, SolveResult, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parity::Equicut;

const FREE: u8 = 0;
const IN_X: u8 = 1;
const IN_Y: u8 = 2;

/// Local-search restarts spent on the initial incumbent when the caller
/// supplies no upper bound.
const INCUMBENT_RESTARTS: usize = 16;

type Candidate = Option<(usize, Vec<usize>)>;

fn better(a: Candidate, b: Candidate) -> Candidate {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => match y.0.cmp(&x.0).then_with(|| y.1.cmp(&x.1)) {
            CmpOrdering::Less => Some(y),
            _ => Some(x),
        },
    }
}

struct Problem<'a> {
    n: usize,
    k: usize,
    adj: Vec<Vec<usize>>,
    shared_best: &'a AtomicUsize,
}

/// Partial assignment of vertices `0..next` to the sides.
#[derive(Clone)]
struct State {
    side: Vec<u8>,
    // assigned neighbors of each vertex on side X / side Y
    cnt_x: Vec<usize>,
    cnt_y: Vec<usize>,
    crossing: usize,
    in_x: usize,
    in_y: usize,
    next: usize,
}

impl State {
    fn new(n: usize) -> Self {
        State {
            side: vec![FREE; n],
            cnt_x: vec![0; n],
            cnt_y: vec![0; n],
            crossing: 0,
            in_x: 0,
            in_y: 0,
            next: 0,
        }
    }

    fn assign(&mut self, p: &Problem, v: usize, s: u8) {
        debug_assert_eq!(self.side[v], FREE);
        self.side[v] = s;
        if s == IN_X {
            self.crossing += self.cnt_y[v];
            self.in_x += 1;
            for &w in &p.adj[v] {
                self.cnt_x[w] += 1;
            }
        } else {
            self.crossing += self.cnt_x[v];
            self.in_y += 1;
            for &w in &p.adj[v] {
                self.cnt_y[w] += 1;
            }
        }
    }

    fn unassign(&mut self, p: &Problem, v: usize) {
        let s = self.side[v];
        self.side[v] = FREE;
        if s == IN_X {
            self.crossing -= self.cnt_y[v];
            self.in_x -= 1;
            for &w in &p.adj[v] {
                self.cnt_x[w] -= 1;
            }
        } else {
            self.crossing -= self.cnt_x[v];
            self.in_y -= 1;
            for &w in &p.adj[v] {
                self.cnt_y[w] -= 1;
            }
        }
    }

    fn can_take(&self, p: &Problem, s: u8) -> bool {
        if s == IN_X {
            self.in_x < p.k
        } else {
            self.in_y < p.n - p.k
        }
    }
}

struct Worker<'a, 'p> {
    p: &'a Problem<'p>,
    best_value: usize,
    best: Option<Vec<usize>>,
    scratch: Vec<isize>,
}

impl Worker<'_, '_> {
    /// Crossing edges so far plus the cheapest way to place the free vertices
    /// against the assigned ones, honoring the remaining side capacities.
    /// Edges among free vertices are ignored, so the bound is admissible.
    fn completion_bound(&mut self, st: &State) -> usize {
        let room_x = self.p.k - st.in_x;
        let mut base = st.crossing;
        self.scratch.clear();
        for v in st.next..self.p.n {
            // cost in Y is cnt_x[v], cost in X is cnt_y[v]
            base += st.cnt_x[v];
            self.scratch
                .push(st.cnt_y[v] as isize - st.cnt_x[v] as isize);
        }
        if room_x > 0 && room_x < self.scratch.len() {
            self.scratch.select_nth_unstable(room_x - 1);
        }
        let extra: isize = self.scratch[..room_x].iter().sum();
        (base as isize + extra) as usize
    }

    fn pruned(&self, bound: usize) -> bool {
        bound > self.best_value
            || (bound == self.best_value && self.best.is_some())
            || bound > self.p.shared_best.load(Ordering::Relaxed)
    }

    /// Depth-first search placing vertex `st.next` in `X` before `Y`, so
    /// leaves are met in lexicographic order of `X`.
    fn search(&mut self, st: &mut State) {
        if st.next == self.p.n {
            let cut = st.crossing;
            if cut < self.best_value || (cut == self.best_value && self.best.is_none()) {
                self.best_value = cut;
                self.best = Some((0..self.p.n).filter(|&v| st.side[v] == IN_X).collect());
                self.p.shared_best.fetch_min(cut, Ordering::Relaxed);
            }
            return;
        }
        let bound = self.completion_bound(st);
        if self.pruned(bound) {
            return;
        }
        let v = st.next;
        for s in [IN_X, IN_Y] {
            if st.can_take(self.p, s) {
                st.assign(self.p, v, s);
                st.next += 1;
                self.search(st);
                st.next -= 1;
                st.unassign(self.p, v);
            }
        }
    }
}

/// All feasible assignments of the vertices `from..upto`, in search order.
fn prefixes(p: &Problem, root: &State, upto: usize) -> Vec<State> {
    let mut out = Vec::new();
    let mut stack = vec![root.clone()];
    while let Some(st) = stack.pop() {
        if st.next >= upto {
            out.push(st);
            continue;
        }
        let v = st.next;
        for s in [IN_Y, IN_X] {
            if st.can_take(p, s) {
                let mut child = st.clone();
                child.assign(p, v, s);
                child.next += 1;
                stack.push(child);
            }
        }
    }
    out
}

fn run(p: &Problem, root: &State, upper_bound: usize, workers: usize) -> Candidate {
    let solve_from = |st: &State| {
        let mut w = Worker {
            p,
            best_value: upper_bound,
            best: None,
            scratch: Vec::with_capacity(p.n),
        };
        let mut st = st.clone();
        w.search(&mut st);
        w.best.map(|x| (w.best_value, x))
    };
    if workers <= 1 {
        return solve_from(root);
    }
    let depth = (root.next + 8).min(p.n);
    let tasks = prefixes(p, root, depth);
    run_in_pool(workers, || {
        tasks.par_iter().map(solve_from).reduce(|| None, better)
    })
}

/// Exact minimum equicut by depth-first branch and bound.
///
/// The incumbent starts at `cfg.initial_upper_bound` when given, otherwise
/// at a short local search. The certificate is the lexicographically smallest
/// optimal side, the same one [`super::rna_exhaustive`] reports.
pub fn rna_branch_and_bound(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    cfg.validate()?;
    let start = Instant::now();
    let n = g.order();
    if n < 2 {
        return Err(Error::invalid("branch and bound needs n >= 2"));
    }
    g.require_connected()?;

    let upper_bound = match cfg.initial_upper_bound {
        Some(ub) => ub,
        None => {
            let ls_cfg = SolverConfig {
                restarts: cfg.restarts.min(INCUMBENT_RESTARTS),
                ..cfg.clone()
            };
            rna_local_search(g, &ls_cfg)?.value
        }
    };

    let shared_best = AtomicUsize::new(usize::MAX);
    let p = Problem {
        n,
        k: n / 2,
        adj: (0..n).map(|u| g.neighbors(u).collect()).collect(),
        shared_best: &shared_best,
    };
    let mut root = State::new(n);
    let fix_first = n.is_multiple_of(2) || (cfg.symmetry_reduction && g.is_rotation_invariant());
    if fix_first && p.k > 0 {
        root.assign(&p, 0, IN_X);
        root.next = 1;
    }

    let found = match run(&p, &root, upper_bound, cfg.parallelism) {
        Some(found) => found,
        // the supplied bound was below the optimum
        None => {
            run(&p, &root, usize::MAX, cfg.parallelism).expect("an unbounded search reaches a leaf")
        }
    };
    let (value, side) = found;

    Ok(SolveResult {
        value,
        certificate: Equicut::new(n, side)?,
        method: Method::BranchAndBound,
        lower_bound: edge_connectivity(g),
        upper_bound: upper_bound.max(value),
        elapsed: start.elapsed(),
        exact: true,
    })
}
