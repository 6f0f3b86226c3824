use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::revolving::RevolvingDoor;
use super::{better64, edge_connectivity, lex_less64, run_in_pool, static_upper_bound};
use super::{Method, SolveResult, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parity::Equicut;

/// How the `floor(n/2)`-subsets are restricted before enumeration.
#[derive(Debug, Clone, Copy)]
struct Reduction {
    /// `u_0` is placed in `X`. Valid for even `n` (complementation maps
    /// equicuts to equicuts) and for circulants (rotation does).
    fix_first: bool,
    /// Only sides that are lexicographically minimal among their `n`
    /// rotations are accepted.
    rotation_canonical: bool,
}

impl Reduction {
    fn for_graph(g: &Graph, cfg: &SolverConfig) -> Self {
        let circulant = cfg.symmetry_reduction && g.is_rotation_invariant();
        Reduction {
            fix_first: g.order().is_multiple_of(2) || circulant,
            rotation_canonical: circulant,
        }
    }
}

/// A block of the enumeration: every subset equal to `high` plus a
/// `rest`-subset of positions `0..below`.
#[derive(Debug, Clone, Copy)]
struct Task {
    high: u64,
    below: usize,
    rest: usize,
}

/// Splits the `t`-subsets of `0..m` by their `depth` largest elements.
fn split_tasks(m: usize, t: usize, depth: usize) -> Vec<Task> {
    fn rec(high: u64, below: usize, rest: usize, depth: usize, out: &mut Vec<Task>) {
        if depth == 0 || rest == 0 {
            out.push(Task { high, below, rest });
            return;
        }
        // largest remaining element sits at position p, p in rest-1..below
        for p in (rest - 1..below).rev() {
            rec(high | 1 << p, p, rest - 1, depth - 1, out);
        }
    }
    let mut out = Vec::new();
    if t <= m {
        rec(0, m, t, depth, &mut out);
    }
    out
}

struct Search<'a> {
    rows: Vec<u64>,
    n: usize,
    full: u64,
    reduction: Reduction,
    shared_best: &'a AtomicUsize,
}

impl Search<'_> {
    #[inline]
    fn cut(&self, x: u64) -> usize {
        let mut total = 0;
        let mut rest = x;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (self.rows[u] & !x).count_ones() as usize;
        }
        total
    }

    /// Change in cut size when `a` leaves `x` and `b` enters it.
    #[inline]
    fn swap_delta(&self, x: u64, a: usize, b: usize) -> isize {
        let na = self.rows[a];
        let nb = self.rows[b];
        let x1 = x & !(1 << a);
        let x2 = x1 | 1 << b;
        (na & x1).count_ones() as isize - (na & !x).count_ones() as isize
            + (nb & !x2 & self.full).count_ones() as isize
            - (nb & x1).count_ones() as isize
    }

    fn rotate(&self, x: u64, r: usize) -> u64 {
        ((x << r) | (x >> (self.n - r))) & self.full
    }

    fn is_canonical(&self, x: u64) -> bool {
        (1..self.n).all(|r| !lex_less64(self.rotate(x, r), x))
    }

    fn run(&self, task: Task, shift: usize, base: u64) -> Option<(usize, u64)> {
        let lift = |combo: u64| ((combo | task.high) << shift) | base;
        let mut best: Option<(usize, u64)> = None;
        let mut prev_side = 0u64;
        let mut cut = 0usize;
        for (i, combo) in RevolvingDoor::new(task.below, task.rest).enumerate() {
            let side = lift(combo);
            if i == 0 {
                cut = self.cut(side);
            } else {
                let out = prev_side & !side;
                let inn = side & !prev_side;
                debug_assert_eq!((out.count_ones(), inn.count_ones()), (1, 1));
                let a = out.trailing_zeros() as usize;
                let b = inn.trailing_zeros() as usize;
                cut = (cut as isize + self.swap_delta(prev_side, a, b)) as usize;
            }
            prev_side = side;
            self.consider(cut, side, &mut best);
        }
        best
    }

    #[inline]
    fn consider(&self, cut: usize, side: u64, best: &mut Option<(usize, u64)>) {
        if cut > self.shared_best.load(Ordering::Relaxed) {
            return;
        }
        if let Some((bv, bs)) = *best {
            if cut > bv || (cut == bv && !lex_less64(side, bs)) {
                return;
            }
        }
        if self.reduction.rotation_canonical && !self.is_canonical(side) {
            return;
        }
        *best = Some((cut, side));
        self.shared_best.fetch_min(cut, Ordering::Relaxed);
    }
}

/// Minimum equicut by complete enumeration of the `floor(n/2)`-subsets.
///
/// The certificate is the lexicographically smallest optimal side. Orders
/// above `cfg.enumeration_cap` are refused.
pub fn rna_exhaustive(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    cfg.validate()?;
    let start = Instant::now();
    let n = g.order();
    if n < 2 {
        return Err(Error::invalid("the exhaustive solver needs n >= 2"));
    }
    g.require_connected()?;
    if n > cfg.enumeration_cap {
        return Err(Error::CapExceeded {
            method: "exhaustive",
            n,
            cap: cfg.enumeration_cap,
        });
    }

    let reduction = Reduction::for_graph(g, cfg);
    let k = n / 2;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let (shift, base, positions, choose) = if reduction.fix_first {
        (1, 1u64, n - 1, k - 1)
    } else {
        (0, 0u64, n, k)
    };

    let shared_best = AtomicUsize::new(usize::MAX);
    let search = Search {
        rows: (0..n).map(|u| g.row64(u)).collect(),
        n,
        full,
        reduction,
        shared_best: &shared_best,
    };

    let depth = if cfg.parallelism > 1 { 3 } else { 0 };
    let tasks = split_tasks(positions, choose, depth);
    let best = if cfg.parallelism > 1 {
        run_in_pool(cfg.parallelism, || {
            tasks
                .par_iter()
                .map(|&task| search.run(task, shift, base))
                .reduce(|| None, better64)
        })
    } else {
        tasks
            .iter()
            .map(|&task| search.run(task, shift, base))
            .fold(None, better64)
    };
    let (value, side) = best.expect("at least one subset is enumerated");

    Ok(SolveResult {
        value,
        certificate: Equicut::from_mask64(n, side),
        method: Method::Exhaustive,
        lower_bound: edge_connectivity(g),
        upper_bound: static_upper_bound(g, cfg),
        elapsed: start.elapsed(),
        exact: true,
    })
}
