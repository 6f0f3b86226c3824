//! Seeded random instances for cross-checking the solvers.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{make_circulant, make_cycle_power, Graph};
use crate::parity::ParityLabeling;

/// Random connected graph: a random recursive tree over a shuffled vertex
/// order plus every other pair independently with probability `p`.
pub fn connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    let mut present = vec![false; n * n];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        present[a * n + b] = true;
        present[b * n + a] = true;
        edges.push((a, b));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !present[a * n + b] && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("tree plus extra edges is simple")
}

/// Random connected circulant on `n` vertices.
pub fn circulant<R: Rng>(rng: &mut R, n: usize) -> (Vec<usize>, Graph) {
    assert!(n >= 3);
    loop {
        let jumps: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.4)).collect();
        if jumps.is_empty() {
            continue;
        }
        if let Ok(g) = make_circulant(n, &jumps) {
            return (jumps, g);
        }
    }
}

/// Uniformly random bijection onto `1..=n`.
pub fn labeling<R: Rng>(rng: &mut R, n: usize) -> ParityLabeling {
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    ParityLabeling::new(labels).expect("a permutation of 1..=n")
}

/// A named instance of the solver cross-check corpus.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

/// Every `C_n^d` with `3 <= n <= max_n`, `1 <= d < n`, then `circulants`
/// random circulants and `graphs` random connected graphs of order up to
/// `max_random_n`.
pub fn oracle_corpus<R: Rng>(
    rng: &mut R,
    max_n: usize,
    circulants: usize,
    graphs: usize,
    max_random_n: usize,
) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for d in 1..n {
            out.push(CorpusEntry {
                name: format!("C_{n}^{d}"),
                graph: make_cycle_power(n, d).expect("valid cycle power"),
            });
        }
    }
    for _ in 0..circulants {
        let n = rng.gen_range(4..=max_n);
        let (jumps, graph) = circulant(rng, n);
        out.push(CorpusEntry {
            name: format!("C({n}, {jumps:?})"),
            graph,
        });
    }
    for i in 0..graphs {
        let n = rng.gen_range(4..=max_random_n);
        let p = rng.gen_range(0.1..0.6);
        out.push(CorpusEntry {
            name: format!("G#{i}(n={n}, p={p:.2})"),
            graph: connected_graph(rng, n, p),
        });
    }
    out
}
