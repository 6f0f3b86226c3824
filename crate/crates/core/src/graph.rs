//! Undirected simple graphs stored as adjacency bitrows, and the generators
//! for cycles, powers of cycles, circulants and complete graphs.
//!
//! Vertex `i` stands for `u_i`; every generator labels the cycle order
//! `u_0 u_1 ... u_{n-1}` so that consecutive integers are consecutive on the
//! underlying cycle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] may have.
pub const MAX_ORDER: usize = 512;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Empty graph on `n` vertices.
    fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("graph order must be at least 1"));
        }
        if n > MAX_ORDER {
            return Err(Error::invalid(format!(
                "graph order {n} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Self-loops, out-of-range endpoints
    /// and repeated edges are rejected. Connectivity is not required here; see
    /// [`Graph::require_connected`].
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::invalid(format!("parallel edge ({u}, {v})")));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    fn insert(&mut self, u: usize, v: usize) {
        if !self.has_edge(u, v) {
            self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
            self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
            self.m += 1;
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    /// Adjacency bitrow of `u`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    /// Adjacency of `u` as a single word. Only meaningful when `n <= 64`.
    #[inline]
    pub(crate) fn row64(&self, u: usize) -> u64 {
        debug_assert!(self.n <= WORD);
        self.rows[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == d).then_some(d)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of neighbors of `u` inside the vertex mask `set`.
    #[inline]
    pub fn neighbors_in(&self, u: usize, set: &[u64]) -> usize {
        self.row(u)
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Connected components as a vertex-to-component map plus the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        match self.components().1 {
            1 => Ok(()),
            components => Err(Error::Disconnected { components }),
        }
    }

    /// True when `i -> i + 1 (mod n)` is an automorphism, i.e. the graph is
    /// a circulant in its current labeling.
    pub fn is_rotation_invariant(&self) -> bool {
        let n = self.n;
        (0..n).all(|u| {
            let u1 = (u + 1) % n;
            (0..n).all(|v| self.has_edge(u, v) == self.has_edge(u1, (v + 1) % n))
        })
    }

    /// True when every edge of `self` is an edge of `other` (same order).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .finish()
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD + b)
        })
    })
}

/// Bit mask over `n` vertices with the given members set.
pub(crate) fn mask_of(n: usize, members: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut mask = vec![0u64; words_for(n)];
    for v in members {
        mask[v / WORD] |= 1 << (v % WORD);
    }
    mask
}

/// `min(|i - j|, n - |i - j|)`: the distance between `u_i` and `u_j` on `C_n`.
pub fn circular_distance(n: usize, i: usize, j: usize) -> Result<usize> {
    if i >= n || j >= n {
        return Err(Error::invalid(format!(
            "vertex out of range: ({i}, {j}) on n = {n}"
        )));
    }
    Ok(circ_dist(n, i, j))
}

#[inline]
fn circ_dist(n: usize, i: usize, j: usize) -> usize {
    let diff = i.abs_diff(j);
    diff.min(n - diff)
}

/// The cycle `u_0 u_1 ... u_{n-1} u_0`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("a cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `C_n^d`: `u_i ~ u_j` iff their circular distance lies in `1..=d`.
/// For `d >= n/2` this is the complete graph.
pub fn make_cycle_power(n: usize, d: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "a cycle power needs n >= 3, got {n}"
        )));
    }
    if d < 1 {
        return Err(Error::invalid("a cycle power needs d >= 1"));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if circ_dist(n, i, j) <= d {
                g.insert(i, j);
            }
        }
    }
    Ok(g)
}

/// Circulant `C(n, S)`: `u_i` is adjacent to `u_{i +- a}` for every jump `a`.
///
/// Jumps must be strictly increasing and at most `n/2`. A jump set whose gcd
/// with `n` exceeds one produces a disconnected graph and is rejected.
pub fn make_circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid(format!("a circulant needs n >= 2, got {n}")));
    }
    if jumps.is_empty() {
        return Err(Error::invalid("circulant jump set is empty"));
    }
    if jumps[0] == 0 {
        return Err(Error::invalid("circulant jumps must be positive"));
    }
    if let Some(w) = jumps.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::invalid(format!(
            "circulant jumps must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    let last = *jumps.last().unwrap();
    if last > n / 2 {
        return Err(Error::invalid(format!(
            "jump {last} is not below (n+1)/2 and not equal to n/2 for n = {n}"
        )));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for &a in jumps {
            g.insert(i, (i + a) % n);
        }
    }
    g.require_connected()?;
    Ok(g)
}

/// `K_n`.
pub fn make_complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            g.insert(i, j);
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFamily {
    Cycle,
    CyclePower,
    Circulant,
    Complete,
}

impl GraphFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphFamily::Cycle => "cycle",
            GraphFamily::CyclePower => "cycle_power",
            GraphFamily::Circulant => "circulant",
            GraphFamily::Complete => "complete",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named member of one of the generated families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFamilySpec {
    pub family: GraphFamily,
    pub n: usize,
    /// Power, for `CyclePower`.
    pub d: usize,
    /// Jump set, for `Circulant`.
    pub jumps: Vec<usize>,
}

impl GraphFamilySpec {
    pub fn cycle(n: usize) -> Self {
        GraphFamilySpec {
            family: GraphFamily::Cycle,
            n,
            d: 1,
            jumps: Vec::new(),
        }
    }

    pub fn cycle_power(n: usize, d: usize) -> Self {
        GraphFamilySpec {
            family: GraphFamily::CyclePower,
            n,
            d,
            jumps: Vec::new(),
        }
    }

    pub fn circulant(n: usize, jumps: Vec<usize>) -> Self {
        GraphFamilySpec {
            family: GraphFamily::Circulant,
            n,
            d: 0,
            jumps,
        }
    }

    pub fn complete(n: usize) -> Self {
        GraphFamilySpec {
            family: GraphFamily::Complete,
            n,
            d: 0,
            jumps: Vec::new(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self.family {
            GraphFamily::Cycle => make_cycle(self.n),
            GraphFamily::CyclePower => make_cycle_power(self.n, self.d),
            GraphFamily::Circulant => make_circulant(self.n, &self.jumps),
            GraphFamily::Complete => make_complete(self.n),
        }
    }

    /// Whether a cycle-power spec collapses to `K_n` (`d >= n/2`).
    pub fn collapses_to_complete(&self) -> bool {
        self.family == GraphFamily::CyclePower && self.d >= self.n / 2
    }
}
