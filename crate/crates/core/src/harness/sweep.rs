use std::fmt;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Duration;

use rayon::prelude::*;

use crate::closed_forms::block_cut_value;
use crate::error::{Error, Result};
use crate::graph::{make_cycle_power, GraphFamily};
use crate::io::{solve_result_to_json, write_text};
use crate::parity::Equicut;
use crate::solver::{rna_lower_bound, run_in_pool, solve, Method, SolveResult, SolverConfig};

pub const CSV_HEADER: [&str; 9] = [
    "family",
    "n",
    "d",
    "lower_bound",
    "construction",
    "exact",
    "method",
    "conjecture_match",
    "elapsed_ms",
];

/// Whether a solved instance agrees with `d(d+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureMatch {
    Holds,
    Fails,
    Unsolved,
}

impl ConjectureMatch {
    pub fn classify(exact: Option<usize>, construction: usize) -> Self {
        match exact {
            None => ConjectureMatch::Unsolved,
            Some(v) if v == construction => ConjectureMatch::Holds,
            Some(_) => ConjectureMatch::Fails,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConjectureMatch::Holds => "holds",
            ConjectureMatch::Fails => "fails",
            ConjectureMatch::Unsolved => "unsolved",
        }
    }
}

impl fmt::Display for ConjectureMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which solver a sweep uses per instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMethod {
    /// Exhaustive up to the enumeration cap, branch and bound above it.
    Auto,
    Fixed(Method),
}

impl SweepMethod {
    fn resolve(self, n: usize, cfg: &SolverConfig) -> Method {
        match self {
            SweepMethod::Fixed(m) => m,
            SweepMethod::Auto if n <= cfg.enumeration_cap => Method::Exhaustive,
            SweepMethod::Auto => Method::BranchAndBound,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub n_range: RangeInclusive<usize>,
    pub d_range: RangeInclusive<usize>,
    pub method: SweepMethod,
    pub cfg: SolverConfig,
}

impl SweepSpec {
    /// `(n, d)` pairs with `2 <= d < floor(n/2)` inside both ranges, sorted.
    pub fn instances(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for n in self.n_range.clone().filter(|&n| n >= 5) {
            for d in self.d_range.clone() {
                if d >= 2 && d < n / 2 {
                    out.push((n, d));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub family: GraphFamily,
    pub n: usize,
    pub d: usize,
    pub lower_bound: usize,
    pub construction: usize,
    pub exact: Option<usize>,
    pub method: Method,
    pub conjecture_match: ConjectureMatch,
    pub elapsed: Duration,
    /// Solver output, absent when the solve failed.
    pub result: Option<SolveResult>,
    pub note: Option<String>,
}

fn sweep_one(n: usize, d: usize, spec: &SweepSpec) -> Result<SweepRow> {
    let g = make_cycle_power(n, d)?;
    let construction = block_cut_value(n, d)?;
    let lower_bound = rna_lower_bound(&g, None)?;
    let method = spec.method.resolve(n, &spec.cfg);
    let cfg = SolverConfig {
        parallelism: 1,
        initial_upper_bound: Some(construction),
        ..spec.cfg.clone()
    };
    let (result, note) = match solve(&g, method, &cfg) {
        Ok(r) => (Some(r), None),
        Err(e @ Error::CapExceeded { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let exact = result.as_ref().filter(|r| r.exact).map(|r| r.value);
    Ok(SweepRow {
        family: GraphFamily::CyclePower,
        n,
        d,
        lower_bound,
        construction,
        exact,
        method,
        conjecture_match: ConjectureMatch::classify(exact, construction),
        elapsed: result.as_ref().map_or(Duration::ZERO, |r| r.elapsed),
        result,
        note,
    })
}

/// Solves every instance of `spec`, `workers` at a time. Rows come back
/// sorted by `(n, d)`.
pub fn run_sweep(spec: &SweepSpec, workers: usize) -> Result<Vec<SweepRow>> {
    spec.cfg.validate()?;
    let instances = spec.instances();
    let rows: Vec<Result<SweepRow>> = if workers > 1 {
        run_in_pool(workers, || {
            instances
                .par_iter()
                .map(|&(n, d)| sweep_one(n, d, spec))
                .collect()
        })
    } else {
        instances
            .iter()
            .map(|&(n, d)| sweep_one(n, d, spec))
            .collect()
    };
    rows.into_iter().collect()
}

pub fn write_sweep_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    let io_err = |e: csv::Error| {
        let source = match e.into_kind() {
            csv::ErrorKind::Io(io) => io,
            other => std::io::Error::other(format!("{other:?}")),
        };
        Error::io(path.display().to_string(), source)
    };
    let mut w = csv::Writer::from_path(path).map_err(io_err)?;
    w.write_record(CSV_HEADER).map_err(io_err)?;
    for row in rows {
        w.write_record([
            row.family.as_str().to_string(),
            row.n.to_string(),
            row.d.to_string(),
            row.lower_bound.to_string(),
            row.construction.to_string(),
            row.exact.map(|v| v.to_string()).unwrap_or_default(),
            row.method.as_str().to_string(),
            row.conjecture_match.as_str().to_string(),
            row.elapsed.as_millis().to_string(),
        ])
        .map_err(io_err)?;
    }
    w.flush()
        .map_err(|e| Error::io(path.display().to_string(), e))
}

/// Sidecar path for a counterexample row next to the CSV at `csv_path`.
pub fn sidecar_path(csv_path: &Path, n: usize, d: usize) -> PathBuf {
    let stem = csv_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "sweep".to_string());
    csv_path.with_file_name(format!("{stem}.counterexample-n{n}-d{d}.json"))
}

/// Writes one JSON sidecar per `fails` row and returns their paths.
pub fn write_sidecars(rows: &[SweepRow], csv_path: &Path) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for row in rows
        .iter()
        .filter(|r| r.conjecture_match == ConjectureMatch::Fails)
    {
        let result = row.result.as_ref().expect("a fails row has a result");
        let path = sidecar_path(csv_path, row.n, row.d);
        let text = format!(
            "{{\"family\": \"{}\", \"n\": {}, \"d\": {}, \"construction\": {}, \"result\": {}}}",
            row.family,
            row.n,
            row.d,
            row.construction,
            solve_result_to_json(result)
        );
        write_text(&path, &text)?;
        written.push(path);
    }
    Ok(written)
}

/// Certificate of a row, if solved.
pub fn row_certificate(row: &SweepRow) -> Option<&Equicut> {
    row.result.as_ref().map(|r| &r.certificate)
}
