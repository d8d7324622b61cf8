use cluster_core::assoc::{self, SupportFunction};
use cluster_core::graph::{self, Bounds, ExchangeGraph};
use cluster_core::polygon::{self, Triangulation};
use cluster_core::roots::RootSystem;
use cluster_core::Error;
use num_rational::BigRational;
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;

fn ungraph(nodes: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> UnGraph<(), ()> {
    let mut g = UnGraph::new_undirected();
    let ids: Vec<_> = (0..nodes).map(|_| g.add_node(())).collect();
    for (a, b) in edges {
        g.add_edge(ids[a], ids[b], ());
    }
    g
}

fn exchange_ungraph(g: &ExchangeGraph) -> UnGraph<(), ()> {
    ungraph(g.len(), g.edges().iter().map(|e| (e.a, e.b)))
}

#[test]
fn skeleton_is_isomorphic_to_exchange_graph() {
    for label in ["A2", "A3", "B3", "C3", "A4", "D4"] {
        let rs = RootSystem::from_label(label).unwrap();
        let p = assoc::default_polytope(&rs, 1).unwrap();
        let g = graph::explore(&rs.distinguished_seed(), Bounds::default()).unwrap();
        assert!(g.is_complete());
        assert_eq!(p.vertices.len(), g.len(), "{label}");
        let skeleton = ungraph(p.vertices.len(), p.edges.iter().copied());
        assert!(is_isomorphic(&skeleton, &exchange_ungraph(&g)), "{label}");
        assert!(assoc::skeleton_matches_exchange_graph(&rs, &p, &g).unwrap(), "{label}");
    }
}

#[test]
fn flip_graph_is_the_type_a_exchange_graph() {
    for n in 1..=4 {
        let flips = polygon::flip_graph(n).unwrap();
        let rs = RootSystem::from_label(&format!("A{n}")).unwrap();
        let g = graph::explore(&rs.distinguished_seed(), Bounds::default()).unwrap();
        let f = ungraph(flips.triangulations.len(), flips.edges.iter().copied());
        assert!(is_isomorphic(&f, &exchange_ungraph(&g)), "A{n}");
    }
}

#[test]
fn polytope_f_vectors() {
    // (vertices, edges, facets) of the simple polytope.
    for (label, v, e, f) in [("A3", 14, 21, 9), ("B3", 20, 30, 12), ("C3", 20, 30, 12), ("D4", 50, 100, 16)] {
        let rs = RootSystem::from_label(label).unwrap();
        let p = assoc::default_polytope(&rs, 1).unwrap();
        assert_eq!((p.vertices.len(), p.edges.len(), p.facets().len()), (v, e, f), "{label}");
        assert!(p.is_simple_realization());
    }
}

#[test]
fn other_support_functions_give_the_same_combinatorics() {
    let rs = RootSystem::from_label("A3").unwrap();
    let vals: Vec<BigRational> = [2, 3, 2].iter().map(|&x| BigRational::from_integer(x.into())).collect();
    let f = SupportFunction::from_negative_simple(&rs, &vals).unwrap();
    let p = assoc::build_polytope(&rs, &f, 1).unwrap();
    assert_eq!((p.vertices.len(), p.edges.len()), (14, 21));

    // F must be constant on tau-orbits, and alpha_1, alpha_3 share one.
    let bad: Vec<BigRational> = [1, 1, 2].iter().map(|&x| BigRational::from_integer(x.into())).collect();
    assert!(matches!(
        SupportFunction::from_negative_simple(&rs, &bad),
        Err(Error::HypothesisViolated(_))
    ));
}

#[test]
fn triangulation_matrices_mutate_like_flips() {
    let t: Triangulation = "3; d1=[1,3]; d2=[3,6]; d3=[4,6]".parse().unwrap();
    for k in 0..3 {
        assert!(polygon::flip_mutation_commutes(&t, k).unwrap());
    }
    let r = polygon::plucker_verify(5, 20, 7).unwrap();
    assert_eq!(r.trials, 20);
    assert!(r.quadruples_checked > 0 && r.exchanges_checked > 0);
}
