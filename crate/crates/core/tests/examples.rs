//! Worked examples for each module, checked through the public API.

use updom::catalog::{self, claw, complete, cycle, path, petersen, prism};
use updom::constructions::{
    certify_gadget, certify_q, complete_to_q, gadget_backward, gadget_construct, gadget_forward, h_graph, q_backward,
    q_construct, q_forward, subdivide, tripod, HConvention, Identity,
};
use updom::dichotomy::{classify_monogenic, dichotomy_consistency, Case, Verdict};
use updom::domination::{
    is_dominating, is_maximal_independent, is_minimal_dominating, maximal_independent_sets,
    normalize_minimal_dominating, private_neighbours, Oracle,
};
use updom::induced::{contains_induced, find_violation, is_free, verify_embedding};
use updom::recognition::{
    extract_base, find_2k2, find_nice_partition, g4, in_class_s, in_q_star, in_z_k, is_2k2_free, NicePartition,
    QStarMethod,
};
use updom::two_k2::{anti_neighbourhood, triangles, upper_dominating_2k2, verify_triangle_corollary, Method};
use updom::{Error, Girth, Graph, VertexSet};

fn set(g: &Graph, members: &[usize]) -> VertexSet {
    g.vertex_set(members.iter().copied()).unwrap()
}

#[test]
fn graph_construction() {
    let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2), (2, 1)]).unwrap();
    assert_eq!(k3, complete(3));
    assert_eq!(Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(), cycle(4));
    assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
    assert!(matches!(Graph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 })));
}

#[test]
fn complement_and_girth() {
    assert_eq!(complete(3).complement(), Graph::empty(3));
    assert!(contains_induced(&cycle(5).complement(), &cycle(5)).is_some());
    assert_eq!(cycle(5).complement().m(), 5);
    assert_eq!(cycle(5).girth(), Girth::Finite(5));
    assert_eq!(tripod(2, 3, 4).girth(), Girth::Infinite);
    assert_eq!(q_construct(&cycle(3)).graph.girth(), Girth::Finite(3));
    assert_eq!(petersen().girth(), Girth::Finite(5));
}

#[test]
fn induced_subgraphs() {
    let c4 = cycle(4);
    let sub = c4.induced_subgraph(&set(&c4, &[0, 1, 2]));
    assert_eq!(sub.graph, path(3));
    assert_eq!(sub.new_to_old, vec![0, 1, 2]);
    assert_eq!(c4.induced_subgraph(&VertexSet::empty(4)).graph.n(), 0);
    let k5 = complete(5);
    assert_eq!(k5.induced_subgraph(&set(&k5, &[1, 3, 4])).graph, complete(3));
}

#[test]
fn containment() {
    let e = contains_induced(&path(4), &path(3)).unwrap();
    assert!(verify_embedding(&path(4), &path(3), &e));
    assert!(contains_induced(&cycle(4), &catalog::two_k2()).is_none());
    let e = contains_induced(&cycle(6), &catalog::two_k2()).unwrap();
    assert!(verify_embedding(&cycle(6), &catalog::two_k2(), &e));
    assert!(is_free(&cycle(5), &[cycle(3), cycle(4)]));
    let v = find_violation(&complete(4), &[complete(3)]).unwrap();
    assert_eq!(v.index, 0);
    assert!(complete(4).is_clique(&set(&complete(4), &v.embedding)));
    assert!(is_free(&prism(), &[catalog::two_k2()]));
}

#[test]
fn components_and_cobipartiteness() {
    let comps = catalog::two_k2().connected_components();
    assert_eq!(comps.iter().map(VertexSet::len).collect::<Vec<_>>(), vec![2, 2]);
    assert_eq!(petersen().connected_components().len(), 1);
    assert_eq!(Graph::empty(3).connected_components().len(), 3);
    assert!(complete(5).is_cobipartite());
    assert!(!Graph::empty(3).is_cobipartite());
    let (a, b) = q_construct(&petersen()).graph.clique_bipartition().unwrap();
    assert_eq!(a.len() + b.len(), 25);
}

#[test]
fn domination_predicates() {
    let c4 = cycle(4);
    assert!(is_dominating(&c4, &set(&c4, &[0, 2])));
    assert!(!is_dominating(&c4, &set(&c4, &[0])));
    assert!(is_dominating(&c4, &c4.all_vertices()));
    assert!(is_minimal_dominating(&c4, &set(&c4, &[0, 1])));
    let p4 = path(4);
    assert!(!is_minimal_dominating(&p4, &set(&p4, &[0, 1, 3])));
    assert!(is_minimal_dominating(&complete(3), &set(&complete(3), &[0])));
}

#[test]
fn private_neighbour_examples() {
    let star = catalog::star(3);
    assert_eq!(private_neighbours(&star, &set(&star, &[0]), 0).unwrap().to_vec(), vec![1, 2, 3]);
    let c4 = cycle(4);
    assert_eq!(private_neighbours(&c4, &set(&c4, &[0, 1]), 0).unwrap().to_vec(), vec![3]);
    let k3 = complete(3);
    assert!(private_neighbours(&k3, &set(&k3, &[0, 1]), 0).unwrap().is_empty());
    assert_eq!(private_neighbours(&k3, &set(&k3, &[0, 1]), 2), Err(Error::NotAMember(2)));
}

#[test]
fn maximal_independent_examples() {
    let c4 = cycle(4);
    assert!(is_maximal_independent(&c4, &set(&c4, &[0, 2])));
    assert!(is_maximal_independent(&cycle(5), &set(&cycle(5), &[0, 2])));
    assert!(!is_maximal_independent(&c4, &set(&c4, &[0])));
    let lists = |g: &Graph| maximal_independent_sets(g).iter().map(VertexSet::to_vec).collect::<Vec<_>>();
    assert_eq!(lists(&complete(3)), vec![vec![0], vec![1], vec![2]]);
    assert_eq!(lists(&c4), vec![vec![0, 2], vec![1, 3]]);
    assert_eq!(lists(&path(4)), vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
}

#[test]
fn normalization_examples() {
    let star = catalog::star(3);
    let out = normalize_minimal_dominating(&star, &set(&star, &[1, 2, 3])).unwrap();
    assert_eq!(out.set.to_vec(), vec![0]);
    let c4 = cycle(4);
    assert_eq!(normalize_minimal_dominating(&c4, &set(&c4, &[0, 1])).unwrap().set.to_vec(), vec![0, 1]);
    let k2 = complete(2);
    assert_eq!(normalize_minimal_dominating(&k2, &set(&k2, &[0])).unwrap().set.to_vec(), vec![0]);
}

#[test]
fn oracle_examples() {
    let o = Oracle::default();
    for k in 1..=6 {
        assert_eq!(o.upper_gamma(&complete(k)).unwrap().size, 1);
    }
    assert_eq!(o.upper_gamma(&cycle(4)).unwrap().size, 2);
    assert_eq!(o.upper_gamma(&path(4)).unwrap().size, 2);
    assert_eq!(o.gamma(&path(6)).unwrap().size, 2);
    assert_eq!(o.alpha(&cycle(5)).unwrap().size, 2);
    assert_eq!(o.minimal_dominating_sets(&cycle(4)).unwrap().len(), 6);
    assert!(matches!(Oracle::with_cap(10).upper_gamma(&petersen().disjoint_union(&complete(1))), Err(Error::CapExceeded { n: 11, cap: 10 })));
}

#[test]
fn two_k2_examples() {
    let c5 = cycle(5);
    assert_eq!(anti_neighbourhood(&c5, &set(&c5, &[0])).to_vec(), vec![2, 3]);
    assert!(anti_neighbourhood(&complete(4), &set(&complete(4), &[0])).is_empty());
    assert_eq!(triangles(&complete(4)).len(), 4);
    assert!(triangles(&cycle(4)).is_empty());
    assert_eq!(triangles(&prism()).len(), 2);

    let s = upper_dominating_2k2(&prism()).unwrap();
    assert_eq!((s.size, s.method), (3, Method::Triangle));
    let s = upper_dominating_2k2(&cycle(4)).unwrap();
    assert_eq!((s.size, s.method), (2, Method::IndependentSet));
    let s = upper_dominating_2k2(&catalog::paw()).unwrap();
    assert_eq!((s.size, s.method), (2, Method::IndependentSet));
    assert_eq!(upper_dominating_2k2(&cycle(6)), Err(Error::Contains2K2((0, 1), (3, 4))));

    let o = Oracle::default();
    let c = verify_triangle_corollary(&prism(), &o).unwrap();
    assert!(c.holds && c.large_sets == 2);
    assert!(verify_triangle_corollary(&cycle(4), &o).unwrap().holds);
}

#[test]
fn gadget_examples() {
    let gg = gadget_construct(&complete(2));
    assert_eq!(gg.graph.n(), 6);
    assert!(!gg.graph.has_edge(0, 1));
    assert_eq!(Oracle::default().upper_gamma(&gg.graph).unwrap().size, 3);

    let c3 = cycle(3);
    let gg = gadget_construct(&c3);
    let d = gadget_forward(&gg, &c3, &set(&c3, &[0])).unwrap();
    assert_eq!(d.len(), 7);
    assert!(is_minimal_dominating(&gg.graph, &d));
    let back = gadget_backward(&gg, &d).unwrap();
    assert_eq!(back.independent.to_vec(), vec![0]);
    assert!(back.clean_edges.is_empty());
}

#[test]
fn q_examples() {
    assert_eq!(subdivide(&complete(2)).graph, Graph::new(3, &[(0, 2), (1, 2)]).unwrap());
    assert!(contains_induced(&subdivide(&cycle(3)).graph, &cycle(6)).is_some());

    let c6 = cycle(6);
    let q = q_construct(&c6);
    let d = q_forward(&q, &c6, &set(&c6, &[0, 3])).unwrap();
    assert_eq!(d.len(), 4);
    assert_eq!(q_backward(&q, &d).unwrap().len(), 2);

    let p3 = path(3);
    let q = q_construct(&p3);
    let d = q_forward(&q, &p3, &set(&p3, &[1])).unwrap();
    assert_eq!(d.to_vec(), vec![q.vertex_of_edge(0, 1).unwrap(), q.vertex_of_edge(1, 2).unwrap()]);
}

#[test]
fn certificates() {
    let o = Oracle::default();
    let c = certify_q(&cycle(6), &o).unwrap();
    assert_eq!((c.gamma, c.upper_gamma_q, c.identity), (2, 4, Identity::Holds));
    let c = certify_q(&path(6), &o).unwrap();
    assert_eq!((c.gamma, c.upper_gamma_q, c.identity), (2, 4, Identity::Holds));
    assert_eq!(certify_q(&path(3), &o).unwrap().identity, Identity::PreconditionNotMet);
    for (g, expected) in [(complete(2), 3), (cycle(3), 7), (path(3), 6)] {
        let c = certify_gadget(&g, &o).unwrap();
        assert_eq!(c.upper_gamma_gadget, expected);
        assert_eq!(c.identity, Identity::Holds);
    }
}

#[test]
fn families() {
    assert_eq!(tripod(1, 1, 1), claw());
    assert!(contains_induced(&tripod(2, 3, 0), &path(6)).is_some());
    let h = h_graph(1, HConvention::InternalVertices);
    assert_eq!(h.n(), 7);
}

#[test]
fn completion() {
    let k2 = complete(2);
    let p = NicePartition { u: set(&k2, &[0]), w: set(&k2, &[1]) };
    let c = complete_to_q(&k2, &p).unwrap();
    assert_eq!(c.q.graph, q_construct(&complete(2)).graph);
    assert!(verify_embedding(&c.q.graph, &k2, &c.embedding));
}

#[test]
fn recognition_examples() {
    assert!(is_2k2_free(&cycle(4)));
    assert_eq!(find_2k2(&cycle(6)), Some(((0, 1), (3, 4))));
    assert!(is_2k2_free(&prism()));
    let p = find_nice_partition(&complete(3)).unwrap().unwrap();
    assert!(p.u.is_empty());
    assert_eq!(find_nice_partition(&Graph::empty(3)).unwrap(), None);
    assert!(!in_q_star(&g4(), QStarMethod::Partition).unwrap());
    assert!(!in_q_star(&g4(), QStarMethod::Forbidden).unwrap());
    assert!(in_class_s(&claw()).member);
    assert!(in_class_s(&path(7)).member);
    assert!(!in_class_s(&cycle(4)).member);
    let conv = HConvention::InternalVertices;
    assert!(in_z_k(&cycle(5), 3, conv).unwrap().member);
    assert!(!in_z_k(&cycle(5), 5, conv).unwrap().member);
    assert!(!in_z_k(&h_graph(2, conv), 3, conv).unwrap().member);
    assert!(matches!(in_z_k(&cycle(5), 2, conv), Err(Error::Precondition(_))));

    let q = q_construct(&cycle(5));
    let ex = extract_base(&q.graph, &NicePartition { u: q.old.clone(), w: q.new.clone() }).unwrap();
    assert_eq!(ex.base, cycle(5));
}

#[test]
fn dichotomy_examples() {
    let v = classify_monogenic(&catalog::two_k2()).unwrap();
    assert_eq!((v.verdict, v.case), (Verdict::PolynomialTime, Case::TwoK2));
    assert_eq!(classify_monogenic(&claw()).unwrap().verdict, Verdict::NPHard);
    assert_eq!(classify_monogenic(&path(5)).unwrap().case, Case::LongPaths);
    assert_eq!(classify_monogenic(&path(3)).unwrap().verdict, Verdict::PolynomialTime);
    assert_eq!(classify_monogenic(&Graph::empty(3)).unwrap().case, Case::ManyComponents);
    for (name, g) in catalog::small_named() {
        assert!(dichotomy_consistency(&g).unwrap(), "{name}");
    }
    assert!(dichotomy_consistency(&path(4)).unwrap());
    assert!(dichotomy_consistency(&cycle(6)).unwrap());
}
