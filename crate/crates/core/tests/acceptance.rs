//! One line per acceptance criterion, each checked at its stated tolerance.
//!
//! Runs without the test harness so the report is always printed:
//! `cargo test -p equicut --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use equicut::closed_forms::{
    block_cut_sum_identity, block_params, boundary_count_closed_form, boundary_count_direct,
    BlockParity,
};
use equicut::harness::{
    run_sweep, sidecar_path, write_sidecars, write_sweep_csv, ConjectureMatch, SweepMethod,
    SweepSpec,
};
use equicut::random::{connected_graph, labeling, oracle_corpus};
use equicut::{
    equicut_size, is_balanced, is_parity_signed, make_complete, make_cycle, make_cycle_power,
    negative_edge_count, rna_branch_and_bound, rna_exhaustive, signature_from_labeling,
    switch_vertices, Equicut, SignedGraph, SolverConfig,
};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn exact(workers: usize) -> SolverConfig {
    SolverConfig::default().with_parallelism(workers)
}

fn known_values() -> Outcome {
    for n in 4..=20 {
        let v = rna_exhaustive(&make_cycle(n).unwrap(), &exact(1))
            .unwrap()
            .value;
        if v != 2 {
            return Err(format!("C_{n} gave {v}"));
        }
    }
    for n in 2..=14 {
        let v = rna_exhaustive(&make_complete(n).unwrap(), &exact(1))
            .unwrap()
            .value;
        let want = (n / 2) * n.div_ceil(2);
        if v != want {
            return Err(format!("K_{n} gave {v}, expected {want}"));
        }
    }
    Ok("C_n, 4 <= n <= 20; K_n, 2 <= n <= 14".into())
}

fn power_values(d: usize, from: usize, want: usize) -> Outcome {
    for n in from..=22 {
        let v = rna_exhaustive(&make_cycle_power(n, d).unwrap(), &exact(1))
            .unwrap()
            .value;
        if v != want {
            return Err(format!("C_{n}^{d} gave {v}, expected {want}"));
        }
    }
    Ok(format!("{} instances equal {want}", 23 - from))
}

fn squares() -> Outcome {
    power_values(2, 6, 6)
}

fn cubes() -> Outcome {
    power_values(3, 8, 12)
}

fn sandwich() -> Outcome {
    let mut cases = 0;
    for n in 5..=22 {
        for d in 2..n / 2 {
            let v = rna_exhaustive(&make_cycle_power(n, d).unwrap(), &exact(1))
                .unwrap()
                .value;
            if v < 2 * d || v > d * (d + 1) {
                return Err(format!("C_{n}^{d} gave {v}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} instances"))
}

fn formulas() -> Outcome {
    let mut counts = 0;
    for n in 5..=60 {
        for d in 2..n / 2 {
            let p = block_params(n, d);
            let top = match p.parity {
                BlockParity::Odd => p.k,
                BlockParity::Even => p.k - 1,
            };
            for j in 0..=top {
                let closed = boundary_count_closed_form(n, d, j).unwrap();
                let direct = boundary_count_direct(n, d, 0, j).unwrap();
                if closed != direct {
                    return Err(format!("n={n} d={d} j={j}: {closed} vs {direct}"));
                }
                counts += 1;
            }
            let (assembled, direct) = block_cut_sum_identity(n, d).unwrap();
            let g = make_cycle_power(n, d).unwrap();
            let cut = equicut_size(&g, &Equicut::block(n, 0).unwrap()).unwrap();
            if assembled != d * (d + 1) || direct != d * (d + 1) || cut != d * (d + 1) {
                return Err(format!("n={n} d={d}: {assembled}, {direct}, {cut}"));
            }
        }
    }
    Ok(format!("{counts} boundary counts, 0 mismatches"))
}

fn oracle() -> Outcome {
    let corpus = oracle_corpus(&mut ChaCha8Rng::seed_from_u64(2024), 14, 50, 100, 12);
    if corpus.len() < 200 {
        return Err(format!("corpus has only {} instances", corpus.len()));
    }
    for entry in &corpus {
        let e = rna_exhaustive(&entry.graph, &exact(1)).unwrap();
        let b = rna_branch_and_bound(&entry.graph, &exact(1)).unwrap();
        if e.value != b.value {
            return Err(format!("{}: {} vs {}", entry.name, e.value, b.value));
        }
    }
    Ok(format!("{} instances, 0 disagreements", corpus.len()))
}

fn parity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let n = rng.gen_range(2..=24);
        let p = rng.gen_range(0.05..0.7);
        let g = connected_graph(&mut rng, n, p);
        let f = labeling(&mut rng, n);
        let sg = signature_from_labeling(&g, &f).unwrap();
        let cut = equicut_size(&g, &f.equicut()).unwrap();
        if negative_edge_count(&sg) != cut {
            return Err(format!("pair {i}: negative edges differ from the cut"));
        }
        if !is_balanced(&sg) {
            return Err(format!("pair {i}: unbalanced"));
        }
        let witness = is_parity_signed(&sg)
            .unwrap()
            .ok_or_else(|| format!("pair {i}: not recognized"))?;
        let rebuilt = switch_vertices(&SignedGraph::all_positive(g), witness.members()).unwrap();
        if rebuilt != sg || witness.members().len() != n / 2 {
            return Err(format!("pair {i}: invalid witness"));
        }
    }
    Ok("1000 pairs, 0 failures".into())
}

fn conjecture_sweep() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for (d, lo) in [(4, 10), (5, 12)] {
        let spec = SweepSpec {
            n_range: lo..=18,
            d_range: d..=d,
            method: SweepMethod::Auto,
            cfg: SolverConfig::default(),
        };
        let rows = run_sweep(&spec, 4).map_err(|e| e.to_string())?;
        let csv = dir.path().join(format!("d{d}.csv"));
        write_sweep_csv(&rows, &csv).map_err(|e| e.to_string())?;
        let sidecars = write_sidecars(&rows, &csv).map_err(|e| e.to_string())?;
        for row in &rows {
            let v = row
                .exact
                .ok_or_else(|| format!("C_{}^{d} unsolved", row.n))?;
            if v < row.lower_bound || v > row.construction {
                return Err(format!("C_{}^{d}: {v} outside its bounds", row.n));
            }
            if row.conjecture_match == ConjectureMatch::Fails
                && !sidecar_path(&csv, row.n, d).exists()
            {
                return Err(format!("C_{}^{d}: fails row without a sidecar", row.n));
            }
        }
        let holds = rows
            .iter()
            .filter(|r| r.conjecture_match == ConjectureMatch::Holds)
            .count();
        summary.push(format!(
            "d={d}: {holds}/{} holds, {} counterexamples",
            rows.len(),
            sidecars.len()
        ));
    }
    Ok(summary.join("; "))
}

fn determinism() -> Outcome {
    for n in 6..=22 {
        let g = make_cycle_power(n, 2).unwrap();
        let a = rna_exhaustive(&g, &exact(1)).unwrap();
        let b = rna_exhaustive(&g, &exact(4)).unwrap();
        if a.value != b.value || a.certificate != b.certificate {
            return Err(format!("C_{n}^2 differs between 1 and 4 workers"));
        }
    }
    Ok("C_n^2, 6 <= n <= 22, workers 1 and 4".into())
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        name: "known values",
        limit: Some(Duration::from_secs(10)),
        run: known_values,
    },
    Criterion {
        id: 2,
        name: "squares of cycles",
        limit: Some(Duration::from_secs(60)),
        run: squares,
    },
    Criterion {
        id: 3,
        name: "cubes of cycles",
        limit: Some(Duration::from_secs(120)),
        run: cubes,
    },
    Criterion {
        id: 4,
        name: "sandwich bounds",
        limit: None,
        run: sandwich,
    },
    Criterion {
        id: 5,
        name: "formula identity",
        limit: Some(Duration::from_secs(5)),
        run: formulas,
    },
    Criterion {
        id: 6,
        name: "oracle equivalence",
        limit: Some(Duration::from_secs(120)),
        run: oracle,
    },
    Criterion {
        id: 7,
        name: "parity signed machinery",
        limit: Some(Duration::from_secs(10)),
        run: parity,
    },
    Criterion {
        id: 8,
        name: "conjecture sweep",
        limit: Some(Duration::from_secs(600)),
        run: conjecture_sweep,
    },
    Criterion {
        id: 9,
        name: "determinism",
        limit: None,
        run: determinism,
    },
];

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match &outcome {
            Ok(detail) => println!("PASS {} {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                println!("FAIL {} {}: {why} ({elapsed:.2?})", c.id, c.name);
                failed.push(c.id);
            }
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
