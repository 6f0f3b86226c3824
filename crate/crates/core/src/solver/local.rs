use std::time::Instant;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{edge_connectivity, run_in_pool};
use super::{Method, SolveResult, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parity::Equicut;

struct Climber<'a> {
    g: &'a Graph,
    degree: Vec<usize>,
    first_improvement: bool,
}

impl Climber<'_> {
    /// One restart: random side of size `floor(n/2)`, then pair swaps across
    /// the cut until no swap improves it.
    fn climb(&self, seed: u64, restart: u64) -> (usize, Vec<usize>) {
        let n = self.g.order();
        let k = n / 2;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(restart);
        let mut in_x = vec![false; n];
        for v in index::sample(&mut rng, n, k) {
            in_x[v] = true;
        }
        // neighbors of each vertex inside X
        let mut nx: Vec<usize> = (0..n)
            .map(|v| self.g.neighbors(v).filter(|&w| in_x[w]).count())
            .collect();
        let mut cut: usize = (0..n)
            .filter(|&v| in_x[v])
            .map(|v| self.degree[v] - nx[v])
            .sum();

        loop {
            // external minus internal neighbors
            let gain_of = |v: usize| -> isize {
                if in_x[v] {
                    (self.degree[v] - nx[v]) as isize - nx[v] as isize
                } else {
                    nx[v] as isize - (self.degree[v] - nx[v]) as isize
                }
            };
            let mut chosen: Option<(isize, usize, usize)> = None;
            'scan: for a in (0..n).filter(|&v| in_x[v]) {
                let ga = gain_of(a);
                for b in (0..n).filter(|&v| !in_x[v]) {
                    let gain = ga + gain_of(b) - if self.g.has_edge(a, b) { 2 } else { 0 };
                    if gain > 0 && chosen.is_none_or(|(best, _, _)| gain > best) {
                        chosen = Some((gain, a, b));
                        if self.first_improvement {
                            break 'scan;
                        }
                    }
                }
            }
            let Some((gain, a, b)) = chosen else { break };
            in_x[a] = false;
            in_x[b] = true;
            for w in self.g.neighbors(a) {
                nx[w] -= 1;
            }
            for w in self.g.neighbors(b) {
                nx[w] += 1;
            }
            cut -= gain as usize;
        }
        (cut, (0..n).filter(|&v| in_x[v]).collect())
    }
}

/// Upper bound on the minimum equicut from `cfg.restarts` seeded restarts of
/// pair-swap descent. Each restart draws from its own stream of the seeded
/// generator, so the result does not depend on the worker count.
pub fn rna_local_search(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    cfg.validate()?;
    let start = Instant::now();
    let n = g.order();
    if n < 2 {
        return Err(Error::invalid("local search needs n >= 2"));
    }
    g.require_connected()?;

    let climber = Climber {
        g,
        degree: (0..n).map(|v| g.degree(v)).collect(),
        first_improvement: cfg.first_improvement,
    };
    let seed = cfg.rng_seed;
    let restarts = cfg.restarts as u64;
    let pick = |a: (usize, Vec<usize>), b: (usize, Vec<usize>)| if b < a { b } else { a };
    let best = if cfg.parallelism > 1 {
        run_in_pool(cfg.parallelism, || {
            (0..restarts)
                .into_par_iter()
                .map(|r| climber.climb(seed, r))
                .reduce_with(pick)
        })
    } else {
        (0..restarts).map(|r| climber.climb(seed, r)).reduce(pick)
    };
    let (value, side) = best.expect("restarts >= 1");

    Ok(SolveResult {
        value,
        certificate: Equicut::new(n, side)?,
        method: Method::LocalSearch,
        lower_bound: edge_connectivity(g),
        upper_bound: value,
        elapsed: start.elapsed(),
        exact: false,
    })
}
