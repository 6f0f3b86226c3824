use equicut::closed_forms::{
    block_cut_sum_identity, boundary_count_closed_form, boundary_count_direct, kang_upper_bound,
    known_rna,
};
use equicut::{
    circular_distance, edge_connectivity, equicut_size, is_balanced, is_parity_signed,
    make_circulant, make_complete, make_cycle, make_cycle_power, negative_edge_count,
    parity_switch, rna_branch_and_bound, rna_exhaustive, rna_local_search, rna_lower_bound,
    signature_from_labeling, switch_vertices, Equicut, Graph, GraphFamilySpec, ParityLabeling,
    SignedGraph, SolverConfig,
};

/// Minimum cut over every `floor(n/2)`-subset, by plain recursion.
fn brute_force(g: &Graph) -> usize {
    fn go(g: &Graph, next: usize, left: usize, side: &mut Vec<bool>, best: &mut usize) {
        let n = g.order();
        if left == 0 {
            let cut = g.edges().filter(|&(u, v)| side[u] != side[v]).count();
            *best = (*best).min(cut);
            return;
        }
        for v in next..=n - left {
            side[v] = true;
            go(g, v + 1, left - 1, side, best);
            side[v] = false;
        }
    }
    let mut best = usize::MAX;
    go(g, 0, g.order() / 2, &mut vec![false; g.order()], &mut best);
    best
}

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

#[test]
fn brute_force_values() {
    assert_eq!(brute_force(&make_cycle_power(10, 4).unwrap()), 20);
    assert_eq!(brute_force(&make_cycle_power(11, 4).unwrap()), 20);
    assert_eq!(brute_force(&make_cycle_power(9, 3).unwrap()), 12);
    assert_eq!(brute_force(&make_cycle_power(10, 2).unwrap()), 6);
    for n in 6..=16 {
        for d in 1..n / 2 {
            let g = make_cycle_power(n, d).unwrap();
            assert_eq!(
                rna_exhaustive(&g, &cfg()).unwrap().value,
                brute_force(&g),
                "C_{n}^{d}"
            );
        }
    }
}

#[test]
fn graph_generators() {
    let c3 = make_cycle(3).unwrap();
    assert_eq!(c3.edge_count(), 3);
    assert_eq!(c3.regular_degree(), Some(2));
    assert_eq!(make_cycle(6).unwrap().edge_count(), 6);
    assert_eq!(circular_distance(10, 0, 5).unwrap(), 5);
    assert_eq!(circular_distance(10, 1, 9).unwrap(), 2);
    assert_eq!(circular_distance(7, 0, 3).unwrap(), 3);
    assert_eq!(circular_distance(6, 0, 3).unwrap(), 3);

    assert_eq!(make_cycle_power(5, 2).unwrap(), make_complete(5).unwrap());
    let c72 = make_cycle_power(7, 2).unwrap();
    assert_eq!((c72.regular_degree(), c72.edge_count()), (Some(4), 14));
    assert_eq!(
        make_cycle_power(12, 3).unwrap(),
        make_circulant(12, &[1, 2, 3]).unwrap()
    );

    let h = make_circulant(8, &[1, 4]).unwrap();
    assert_eq!((h.regular_degree(), h.edge_count()), (Some(3), 12));
    assert_eq!(
        make_circulant(9, &[1, 2]).unwrap(),
        make_cycle_power(9, 2).unwrap()
    );
    assert_eq!(
        make_circulant(6, &[1, 2, 3]).unwrap(),
        make_complete(6).unwrap()
    );

    assert_eq!(make_complete(4).unwrap().edge_count(), 6);
    assert_eq!(make_complete(5).unwrap().edge_count(), 10);
    assert_eq!(
        make_complete(2).unwrap().edges().collect::<Vec<_>>(),
        vec![(0, 1)]
    );
}

#[test]
fn labelings_and_signatures() {
    let c4 = make_cycle(4).unwrap();
    let sg = signature_from_labeling(&c4, &ParityLabeling::identity(4)).unwrap();
    assert_eq!(negative_edge_count(&sg), 4);
    assert!(ParityLabeling::new(vec![1, 3]).is_err());

    let c6 = make_cycle(6).unwrap();
    let f = ParityLabeling::new(vec![1, 3, 5, 2, 4, 6]).unwrap();
    let sg = signature_from_labeling(&c6, &f).unwrap();
    assert_eq!(
        sg.negative_edges().collect::<Vec<_>>(),
        vec![(0, 5), (2, 3)]
    );
    assert_eq!(
        negative_edge_count(&SignedGraph::all_positive(c6.clone())),
        0
    );
}

#[test]
fn equicut_sizes() {
    let c6 = make_cycle(6).unwrap();
    assert_eq!(
        equicut_size(&c6, &Equicut::new(6, vec![0, 1, 2]).unwrap()).unwrap(),
        2
    );
    let k5 = make_complete(5).unwrap();
    for (a, b) in [(0, 1), (1, 4), (2, 3)] {
        assert_eq!(
            equicut_size(&k5, &Equicut::new(5, vec![a, b]).unwrap()).unwrap(),
            6
        );
    }
    let c10 = make_cycle_power(10, 2).unwrap();
    assert_eq!(
        equicut_size(&c10, &Equicut::block(10, 0).unwrap()).unwrap(),
        6
    );
}

#[test]
fn switching() {
    let c4 = SignedGraph::all_positive(make_cycle(4).unwrap());
    assert_eq!(switch_vertices(&c4, &[]).unwrap(), c4);
    assert_eq!(switch_vertices(&c4, &[0, 1, 2, 3]).unwrap(), c4);
    let s = switch_vertices(&c4, &[0, 1]).unwrap();
    assert_eq!(s.negative_edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
}

#[test]
fn parity_signed_recognition() {
    let c5 = make_cycle(5).unwrap();
    let one = SignedGraph::from_negative_edges(c5, [(0, 1)]).unwrap();
    assert_eq!(is_parity_signed(&one).unwrap(), None);
    assert!(!is_balanced(&one));

    let c6 = SignedGraph::all_positive(make_cycle(6).unwrap());
    assert_eq!(is_parity_signed(&c6).unwrap(), None);
    assert!(is_balanced(&c6));

    let c3 = SignedGraph::from_negative_edges(make_cycle(3).unwrap(), [(1, 2)]).unwrap();
    assert!(!is_balanced(&c3));
}

#[test]
fn parity_switch_examples() {
    let g = make_cycle(6).unwrap();
    let x = Equicut::new(6, vec![0, 1, 2]).unwrap();
    let sg = switch_vertices(&SignedGraph::all_positive(g), x.members()).unwrap();
    let (sg2, x2) = parity_switch(&sg, 2, 3, &x).unwrap();
    assert_eq!(x2.members(), &[0, 1, 3]);
    assert_eq!(negative_edge_count(&sg2), 4);
    let (back, x3) = parity_switch(&sg2, 3, 2, &x2).unwrap();
    assert_eq!((back, x3), (sg, x));
}

#[test]
fn solver_examples() {
    let k5 = make_complete(5).unwrap();
    assert_eq!(rna_exhaustive(&k5, &cfg()).unwrap().value, 6);
    assert_eq!(
        rna_exhaustive(&make_cycle(8).unwrap(), &cfg())
            .unwrap()
            .value,
        2
    );
    assert_eq!(
        rna_exhaustive(&make_cycle_power(12, 3).unwrap(), &cfg())
            .unwrap()
            .value,
        12
    );

    let c14 = make_cycle_power(14, 2).unwrap();
    let e = rna_exhaustive(&c14, &cfg()).unwrap();
    let b = rna_branch_and_bound(&c14, &cfg()).unwrap();
    assert_eq!((b.value, &b.certificate), (6, &e.certificate));
    let c10 = make_circulant(10, &[1, 2, 3, 4]).unwrap();
    assert_eq!(rna_branch_and_bound(&c10, &cfg()).unwrap().value, 20);

    let c20 = make_cycle_power(20, 2).unwrap();
    let l = rna_local_search(&c20, &cfg().with_seed(7)).unwrap();
    assert_eq!(l.value, 6);
    assert_eq!(equicut_size(&c20, &l.certificate).unwrap(), l.value);
    assert!(l.value >= edge_connectivity(&c20));
}

#[test]
fn connectivity_examples() {
    assert_eq!(edge_connectivity(&make_cycle_power(9, 2).unwrap()), 4);
    assert_eq!(edge_connectivity(&make_cycle(11).unwrap()), 2);
    assert_eq!(edge_connectivity(&make_complete(6).unwrap()), 5);
    assert_eq!(
        rna_lower_bound(&make_cycle_power(11, 3).unwrap(), None).unwrap(),
        6
    );
    assert_eq!(
        rna_lower_bound(&make_complete(7).unwrap(), None).unwrap(),
        6
    );
    assert_eq!(rna_lower_bound(&make_cycle(9).unwrap(), None).unwrap(), 2);
}

#[test]
fn closed_form_examples() {
    assert_eq!(known_rna(&GraphFamilySpec::complete(9)), Some(20));
    assert_eq!(known_rna(&GraphFamilySpec::cycle_power(20, 2)), Some(6));
    assert_eq!(known_rna(&GraphFamilySpec::cycle_power(12, 6)), Some(36));
    // C_12^5 is K_12 minus a perfect matching, not K_12
    assert_eq!(known_rna(&GraphFamilySpec::cycle_power(12, 5)), None);
    assert_eq!(brute_force(&make_cycle_power(12, 5).unwrap()), 30);

    let block = |n, d| {
        let g = make_cycle_power(n, d).unwrap();
        equicut_size(&g, &Equicut::block(n, 0).unwrap()).unwrap()
    };
    assert_eq!(block(13, 2), 6);
    assert_eq!(block(16, 3), 12);
    assert_eq!(block(20, 7), 56);

    assert_eq!(boundary_count_direct(14, 2, 0, 0).unwrap(), 2);
    assert_eq!(boundary_count_direct(14, 2, 0, 3).unwrap(), 0);
    assert_eq!(boundary_count_direct(14, 5, 0, 3).unwrap(), 4);
    assert_eq!(boundary_count_closed_form(14, 2, 1).unwrap(), 1);
    assert_eq!(boundary_count_closed_form(16, 5, 3).unwrap(), 3);

    assert_eq!(block_cut_sum_identity(14, 4).unwrap(), (20, 20));
    assert_eq!(block_cut_sum_identity(16, 2).unwrap(), (6, 6));
    assert_eq!(block_cut_sum_identity(21, 6).unwrap(), (42, 42));

    assert_eq!(kang_upper_bound(6, 6), 4);
    assert_eq!(kang_upper_bound(12, 24), 15);
    assert_eq!(kang_upper_bound(5, 10), 6);
}
