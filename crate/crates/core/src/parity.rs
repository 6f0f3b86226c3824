//! Parity labelings, the signatures they induce, equicuts, switching and
//! balance.
//!
//! A labeling `f: V -> {1..n}` splits the vertices into the odd-labeled set
//! `V1` (size `ceil(n/2)`) and the even-labeled set `V2` (size `floor(n/2)`).
//! An edge is negative under `f` exactly when it joins `V1` and `V2`, so the
//! number of negative edges is the size of the equicut `(V2, V1)`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{iter_bits, mask_of, Graph};

/// Bijection `V -> {1..n}`; `labels[v]` is the label of `u_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityLabeling {
    labels: Vec<usize>,
}

impl ParityLabeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for (v, &l) in labels.iter().enumerate() {
            if l == 0 || l > n {
                return Err(Error::invalid(format!(
                    "label {l} of vertex {v} is outside 1..={n}"
                )));
            }
            if seen[l] {
                return Err(Error::invalid(format!("label {l} is used twice")));
            }
            seen[l] = true;
        }
        Ok(ParityLabeling { labels })
    }

    /// `u_i -> i + 1`.
    pub fn identity(n: usize) -> Self {
        ParityLabeling {
            labels: (1..=n).collect(),
        }
    }

    /// A labeling whose even-labeled set is exactly `cut`'s side `X`.
    /// Even labels go to `X` and odd labels to `X^c`, each in vertex order.
    pub fn from_equicut(cut: &Equicut) -> Self {
        let mut labels = vec![0; cut.n];
        let (mut even, mut odd) = (2, 1);
        for (v, label) in labels.iter_mut().enumerate() {
            if cut.contains(v) {
                *label = even;
                even += 2;
            } else {
                *label = odd;
                odd += 2;
            }
        }
        ParityLabeling { labels }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// `V1`: vertices with odd labels.
    pub fn odd_set(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.labels[v] % 2 == 1)
            .collect()
    }

    /// `V2`: vertices with even labels.
    pub fn even_set(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.labels[v].is_multiple_of(2))
            .collect()
    }

    /// The parity partition as an equicut, stored on its even (smaller) side.
    pub fn equicut(&self) -> Equicut {
        Equicut::new(self.order(), self.even_set()).expect("even set has floor(n/2) vertices")
    }
}

/// An equicut `(X, X^c)` with `|X| = floor(n/2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Equicut {
    n: usize,
    members: Vec<usize>,
    mask: Vec<u64>,
}

impl Equicut {
    /// `members` may be in any order; it is stored sorted.
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::invalid(format!("vertex {v} outside 0..{n}")));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("equicut side lists a vertex twice"));
        }
        if members.len() != n / 2 {
            return Err(Error::invalid(format!(
                "equicut side has {} vertices, expected floor({n}/2) = {}",
                members.len(),
                n / 2
            )));
        }
        let mask = mask_of(n, members.iter().copied());
        Ok(Equicut { n, members, mask })
    }

    /// From a single-word mask (`n <= 64`).
    pub(crate) fn from_mask64(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64 && mask.count_ones() as usize == n / 2);
        let members = iter_bits(&[mask]).collect();
        Equicut {
            n,
            members,
            mask: vec![mask],
        }
    }

    /// The consecutive block `{u_start, ..., u_{start + floor(n/2) - 1}}`.
    pub fn block(n: usize, start: usize) -> Result<Self> {
        if start >= n {
            return Err(Error::invalid(format!(
                "block start {start} outside 0..{n}"
            )));
        }
        Equicut::new(n, (0..n / 2).map(|i| (start + i) % n).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Sorted vertices of `X`.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &[u64] {
        &self.mask
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.mask[v / 64] >> (v % 64) & 1 == 1
    }

    /// Sorted vertices of `X^c`.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.contains(v)).collect()
    }

    /// Lexicographic order on the sorted member lists.
    pub fn lex_cmp(&self, other: &Equicut) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl fmt::Debug for Equicut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Equicut(n={}, X={:?})", self.n, self.members)
    }
}

/// `|E(X, X^c)|`.
pub fn equicut_size(g: &Graph, cut: &Equicut) -> Result<usize> {
    if cut.n != g.order() {
        return Err(Error::invalid(format!(
            "equicut is over {} vertices but the graph has {}",
            cut.n,
            g.order()
        )));
    }
    Ok(boundary_size(g, &cut.mask))
}

/// Number of edges with exactly one endpoint in `mask`.
pub(crate) fn boundary_size(g: &Graph, mask: &[u64]) -> usize {
    iter_bits(mask)
        .map(|u| {
            g.row(u)
                .iter()
                .zip(mask)
                .map(|(a, x)| (a & !x).count_ones() as usize)
                .sum::<usize>()
        })
        .sum()
}

/// A graph with a sign on every edge, stored as a bitrow of negative edges.
#[derive(Clone, PartialEq, Eq)]
pub struct SignedGraph {
    graph: Graph,
    neg: Vec<u64>,
}

impl SignedGraph {
    /// `(G, +)`.
    pub fn all_positive(graph: Graph) -> Self {
        let neg = vec![0; graph.order() * graph.words()];
        SignedGraph { graph, neg }
    }

    /// Marks the listed edges negative; every listed pair must be an edge.
    pub fn from_negative_edges<I>(graph: Graph, negative: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sg = SignedGraph::all_positive(graph);
        for (u, v) in negative {
            if u >= sg.graph.order() || v >= sg.graph.order() || !sg.graph.has_edge(u, v) {
                return Err(Error::invalid(format!(
                    "negative edge ({u}, {v}) is not an edge of the graph"
                )));
            }
            sg.set_negative(u, v, true);
        }
        Ok(sg)
    }

    fn set_negative(&mut self, u: usize, v: usize, negative: bool) {
        let w = self.graph.words();
        let (iu, bu) = (u * w + v / 64, 1u64 << (v % 64));
        let (iv, bv) = (v * w + u / 64, 1u64 << (u % 64));
        if negative {
            self.neg[iu] |= bu;
            self.neg[iv] |= bv;
        } else {
            self.neg[iu] &= !bu;
            self.neg[iv] &= !bv;
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn neg_row(&self, u: usize) -> &[u64] {
        let w = self.graph.words();
        &self.neg[u * w..(u + 1) * w]
    }

    pub fn is_negative(&self, u: usize, v: usize) -> bool {
        self.neg_row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    /// `+1`, `-1`, or `None` when `uv` is not an edge.
    pub fn sign(&self, u: usize, v: usize) -> Option<i8> {
        if !self.graph.has_edge(u, v) {
            None
        } else if self.is_negative(u, v) {
            Some(-1)
        } else {
            Some(1)
        }
    }

    /// Negative edges `(i, j)`, `i < j`, in lexicographic order.
    pub fn negative_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.graph.order()).flat_map(move |u| {
            iter_bits(self.neg_row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn negative_edge_count(&self) -> usize {
        self.neg
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Two-colors the vertices so that an edge is negative iff its endpoints
    /// differ. Returns `None` when some cycle carries an odd number of
    /// negative edges.
    fn sign_coloring(&self) -> Option<Vec<bool>> {
        let n = self.graph.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.graph.neighbors(u) {
                    let want = cu ^ self.is_negative(u, v);
                    match color[v] {
                        None => {
                            color[v] = Some(want);
                            queue.push_back(v);
                        }
                        Some(cv) if cv != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SignedGraph")
            .field("n", &self.graph.order())
            .field("m", &self.graph.edge_count())
            .field("negative", &self.negative_edge_count())
            .finish()
    }
}

/// `Sigma_f = (G, sigma_f)`: an edge is positive iff its endpoint labels
/// have the same parity.
pub fn signature_from_labeling(g: &Graph, f: &ParityLabeling) -> Result<SignedGraph> {
    if f.order() != g.order() {
        return Err(Error::invalid(format!(
            "labeling has {} labels but the graph has {} vertices",
            f.order(),
            g.order()
        )));
    }
    let negative = g
        .edges()
        .filter(|&(u, v)| (f.label(u) + f.label(v)) % 2 == 1)
        .collect::<Vec<_>>();
    SignedGraph::from_negative_edges(g.clone(), negative)
}

pub fn negative_edge_count(sg: &SignedGraph) -> usize {
    sg.negative_edge_count()
}

/// Negates every edge with exactly one endpoint in `set`.
pub fn switch_vertices(sg: &SignedGraph, set: &[usize]) -> Result<SignedGraph> {
    let n = sg.graph.order();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(Error::invalid(format!(
            "switching vertex {v} outside 0..{n}"
        )));
    }
    let mask = mask_of(n, set.iter().copied());
    let inside = |v: usize| mask[v / 64] >> (v % 64) & 1 == 1;
    let mut out = sg.clone();
    for (u, v) in sg.graph.edges() {
        if inside(u) != inside(v) {
            out.set_negative(u, v, !sg.is_negative(u, v));
        }
    }
    Ok(out)
}

/// Every cycle carries an even number of negative edges.
pub fn is_balanced(sg: &SignedGraph) -> bool {
    sg.sign_coloring().is_some()
}

/// Decides whether `sg` is a parity signed graph, i.e. whether it arises from
/// `(G, +)` by switching a set of exactly `floor(n/2)` vertices. On success
/// the switched set is returned as an equicut; switching it in `(G, +)`
/// reproduces `sg`'s negative edges.
pub fn is_parity_signed(sg: &SignedGraph) -> Result<Option<Equicut>> {
    sg.graph.require_connected()?;
    let Some(color) = sg.sign_coloring() else {
        return Ok(None);
    };
    let n = sg.graph.order();
    let ones: Vec<usize> = (0..n).filter(|&v| color[v]).collect();
    let zeros: Vec<usize> = (0..n).filter(|&v| !color[v]).collect();
    let side = if ones.len() == n / 2 {
        ones
    } else if zeros.len() == n / 2 {
        zeros
    } else {
        return Ok(None);
    };
    Equicut::new(n, side).map(Some)
}

/// Switches the pair `{u, v}` taken from opposite sides of `cut` and moves
/// each to the other side.
pub fn parity_switch(
    sg: &SignedGraph,
    u: usize,
    v: usize,
    cut: &Equicut,
) -> Result<(SignedGraph, Equicut)> {
    let n = sg.graph.order();
    if cut.n != n {
        return Err(Error::invalid("equicut order does not match the graph"));
    }
    if u >= n || v >= n {
        return Err(Error::invalid(format!("vertex outside 0..{n}")));
    }
    if cut.contains(u) == cut.contains(v) {
        return Err(Error::invalid(format!(
            "vertices {u} and {v} lie in the same parity set"
        )));
    }
    let (inner, outer) = if cut.contains(u) { (u, v) } else { (v, u) };
    let switched = switch_vertices(sg, &[u, v])?;
    let members = cut
        .members
        .iter()
        .map(|&x| if x == inner { outer } else { x })
        .collect();
    Ok((switched, Equicut::new(n, members)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_cycle_power};

    #[test]
    fn labeling_validation() {
        assert!(ParityLabeling::new(vec![1, 3]).is_err());
        assert!(ParityLabeling::new(vec![1, 1]).is_err());
        assert!(ParityLabeling::new(vec![0, 1]).is_err());
        let f = ParityLabeling::new(vec![3, 1, 2, 5, 4]).unwrap();
        assert_eq!(f.odd_set(), vec![0, 1, 3]);
        assert_eq!(f.even_set(), vec![2, 4]);
    }

    #[test]
    fn c4_consecutive_labels_all_negative() {
        let g = make_cycle(4).unwrap();
        let sg = signature_from_labeling(&g, &ParityLabeling::identity(4)).unwrap();
        assert_eq!(sg.negative_edge_count(), 4);
    }

    #[test]
    fn c6_block_labeling_has_two_negative_edges() {
        let g = make_cycle(6).unwrap();
        let f = ParityLabeling::new(vec![1, 3, 5, 2, 4, 6]).unwrap();
        let sg = signature_from_labeling(&g, &f).unwrap();
        assert_eq!(
            sg.negative_edges().collect::<Vec<_>>(),
            vec![(0, 5), (2, 3)]
        );
        assert_eq!(
            negative_edge_count(&sg),
            equicut_size(&g, &f.equicut()).unwrap()
        );
    }

    #[test]
    fn labeling_order_mismatch() {
        let g = make_cycle(5).unwrap();
        assert!(signature_from_labeling(&g, &ParityLabeling::identity(4)).is_err());
    }

    #[test]
    fn equicut_sizes() {
        let c6 = make_cycle(6).unwrap();
        assert_eq!(
            equicut_size(&c6, &Equicut::block(6, 0).unwrap()).unwrap(),
            2
        );

        let k5 = make_complete(5).unwrap();
        for a in 0..5 {
            for b in a + 1..5 {
                let cut = Equicut::new(5, vec![a, b]).unwrap();
                assert_eq!(equicut_size(&k5, &cut).unwrap(), 6);
            }
        }

        let c10_2 = make_cycle_power(10, 2).unwrap();
        assert_eq!(
            equicut_size(&c10_2, &Equicut::new(10, (0..5).collect()).unwrap()).unwrap(),
            6
        );

        assert!(Equicut::new(6, vec![0, 1]).is_err());
        assert!(equicut_size(&c6, &Equicut::block(8, 0).unwrap()).is_err());
    }

    #[test]
    fn switching() {
        let c4 = SignedGraph::all_positive(make_cycle(4).unwrap());
        assert_eq!(switch_vertices(&c4, &[]).unwrap(), c4);
        assert_eq!(switch_vertices(&c4, &[0, 1, 2, 3]).unwrap(), c4);
        let s = switch_vertices(&c4, &[0, 1]).unwrap();
        assert_eq!(s.negative_edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
        assert!(switch_vertices(&c4, &[4]).is_err());
    }

    #[test]
    fn parity_membership() {
        let c5 = make_cycle(5).unwrap();
        let one_neg = SignedGraph::from_negative_edges(c5, [(0, 1)]).unwrap();
        assert_eq!(is_parity_signed(&one_neg).unwrap(), None);

        let c6 = SignedGraph::all_positive(make_cycle(6).unwrap());
        assert_eq!(is_parity_signed(&c6).unwrap(), None);

        let g = make_cycle_power(9, 2).unwrap();
        let f = ParityLabeling::new(vec![4, 9, 1, 6, 2, 7, 3, 8, 5]).unwrap();
        let sg = signature_from_labeling(&g, &f).unwrap();
        let witness = is_parity_signed(&sg).unwrap().unwrap();
        assert_eq!(witness.members().len(), 4);
        let rebuilt = switch_vertices(&SignedGraph::all_positive(g), witness.members()).unwrap();
        assert_eq!(rebuilt, sg);

        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_parity_signed(&SignedGraph::all_positive(disconnected)).is_err());
    }

    #[test]
    fn balance() {
        let c3 = make_cycle(3).unwrap();
        assert!(is_balanced(&SignedGraph::all_positive(c3.clone())));
        let one_neg = SignedGraph::from_negative_edges(c3, [(0, 2)]).unwrap();
        assert!(!is_balanced(&one_neg));
    }

    #[test]
    fn parity_switch_on_c6() {
        let g = make_cycle(6).unwrap();
        let cut = Equicut::block(6, 0).unwrap();
        let sg = signature_from_labeling(&g, &ParityLabeling::from_equicut(&cut)).unwrap();
        let (sg2, cut2) = parity_switch(&sg, 2, 3, &cut).unwrap();
        assert_eq!(cut2.members(), &[0, 1, 3]);
        assert_eq!(equicut_size(&g, &cut2).unwrap(), 4);
        assert_eq!(sg2.negative_edge_count(), 4);
        let (sg3, cut3) = parity_switch(&sg2, 2, 3, &cut2).unwrap();
        assert_eq!((sg3, cut3), (sg.clone(), cut.clone()));
        assert!(parity_switch(&sg, 0, 1, &cut).is_err());
    }

    #[test]
    fn degenerate_orders() {
        let k1 = make_complete(1).unwrap();
        let sg = signature_from_labeling(&k1, &ParityLabeling::identity(1)).unwrap();
        assert_eq!(sg.negative_edge_count(), 0);
        assert_eq!(
            is_parity_signed(&sg).unwrap().unwrap().members(),
            &[] as &[usize]
        );

        let k2 = make_complete(2).unwrap();
        let sg = signature_from_labeling(&k2, &ParityLabeling::identity(2)).unwrap();
        assert_eq!(sg.negative_edge_count(), 1);
    }

    #[test]
    fn labeling_roundtrip_through_equicut() {
        let cut = Equicut::new(7, vec![1, 4, 6]).unwrap();
        let f = ParityLabeling::from_equicut(&cut);
        assert_eq!(f.labels(), &[1, 2, 3, 5, 4, 7, 6]);
        assert_eq!(f.equicut(), cut);
    }
}
