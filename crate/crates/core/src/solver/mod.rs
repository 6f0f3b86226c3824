//! Exact and heuristic computation of the minimum equicut size.
//!
//! Three methods are provided:
//!
//! * [`rna_exhaustive`] walks every `floor(n/2)`-subset in revolving-door
//!   order, updating the cut size by popcount differences on each swap;
//! * [`rna_branch_and_bound`] assigns vertices to sides in index order and
//!   prunes with a capacity-aware completion bound;
//! * [`rna_local_search`] runs seeded restarts of best-improvement pair
//!   swaps across the two sides.
//!
//! Both exact methods return the lexicographically smallest optimal side
//! `X`, so their certificates agree with each other and do not depend on the
//! worker count.

mod bnb;
mod exhaustive;
mod flow;
mod local;
mod revolving;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parity::Equicut;

pub use bnb::rna_branch_and_bound;
pub use exhaustive::rna_exhaustive;
pub use flow::edge_connectivity;
pub use local::rna_local_search;
pub use revolving::RevolvingDoor;

/// Default largest order accepted by the exhaustive method.
pub const DEFAULT_ENUMERATION_CAP: usize = 30;

/// Hard ceiling for the exhaustive method: subsets are single machine words.
pub const MAX_ENUMERATION_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    BranchAndBound,
    LocalSearch,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::BranchAndBound => "branch_and_bound",
            Method::LocalSearch => "local_search",
        }
    }

    pub fn is_exact(self) -> bool {
        self != Method::LocalSearch
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "exhaustive" => Ok(Method::Exhaustive),
            "branch_and_bound" | "bnb" => Ok(Method::BranchAndBound),
            "local_search" => Ok(Method::LocalSearch),
            other => Err(Error::invalid(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Restrict the search to rotation-canonical sides when the input is a
    /// circulant in its given labeling.
    pub symmetry_reduction: bool,
    /// Independent local-search starts.
    pub restarts: usize,
    pub rng_seed: u64,
    /// Worker threads. Results do not depend on this value.
    pub parallelism: usize,
    /// Known upper bound on the optimum, used as the initial incumbent.
    pub initial_upper_bound: Option<usize>,
    /// Largest order the exhaustive method accepts.
    pub enumeration_cap: usize,
    /// Local search takes the first improving swap instead of the best one.
    pub first_improvement: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            symmetry_reduction: true,
            restarts: 100,
            rng_seed: 0,
            parallelism: 1,
            initial_upper_bound: None,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            first_improvement: false,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::invalid("restarts must be at least 1"));
        }
        if self.parallelism == 0 {
            return Err(Error::invalid("parallelism must be at least 1"));
        }
        if self.enumeration_cap > MAX_ENUMERATION_ORDER {
            return Err(Error::invalid(format!(
                "enumeration cap {} exceeds the hard limit {MAX_ENUMERATION_ORDER}",
                self.enumeration_cap
            )));
        }
        Ok(())
    }

    pub fn with_parallelism(mut self, workers: usize) -> Self {
        self.parallelism = workers;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn with_upper_bound(mut self, ub: Option<usize>) -> Self {
        self.initial_upper_bound = ub;
        self
    }

    pub fn with_symmetry_reduction(mut self, on: bool) -> Self {
        self.symmetry_reduction = on;
        self
    }
}

/// Outcome of one solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Minimum equicut size found (exact unless `method` is local search).
    pub value: usize,
    pub certificate: Equicut,
    pub method: Method,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub elapsed: Duration,
    pub exact: bool,
}

/// Dispatches to the requested method.
pub fn solve(g: &Graph, method: Method, cfg: &SolverConfig) -> Result<SolveResult> {
    match method {
        Method::Exhaustive => rna_exhaustive(g, cfg),
        Method::BranchAndBound => rna_branch_and_bound(g, cfg),
        Method::LocalSearch => rna_local_search(g, cfg),
    }
}

/// `max(lambda(G), extra)`: the edge-connectivity bound, optionally combined
/// with a bound obtained from a spanning subgraph.
pub fn rna_lower_bound(g: &Graph, spanning_subgraph_bound: Option<usize>) -> Result<usize> {
    g.require_connected()?;
    Ok(edge_connectivity(g).max(spanning_subgraph_bound.unwrap_or(0)))
}

/// Runs `job` inside a dedicated pool of `workers` threads.
pub(crate) fn run_in_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

/// `a` precedes `b` lexicographically as sorted vertex lists (equal sizes).
#[inline]
pub(crate) fn lex_less64(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & diff & diff.wrapping_neg() != 0
}

/// Keeps the smaller of two `(value, side)` candidates.
pub(crate) fn better64(a: Option<(usize, u64)>, b: Option<(usize, u64)>) -> Option<(usize, u64)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if y.0 < x.0 || (y.0 == x.0 && lex_less64(y.1, x.1)) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

/// Smallest admissible upper bound known without search.
pub(crate) fn static_upper_bound(g: &Graph, cfg: &SolverConfig) -> usize {
    let kang = crate::closed_forms::kang_upper_bound(g.order(), g.edge_count());
    cfg.initial_upper_bound.map_or(kang, |ub| ub.min(kang))
}
