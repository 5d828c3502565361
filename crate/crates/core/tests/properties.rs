use proptest::prelude::*;
use updom::catalog;
use updom::constructions::{
    complete_to_q, gadget_backward, gadget_construct, gadget_forward, q_backward, q_construct, q_forward, subdivide,
};
use updom::domination::{
    greedy_minimalize, is_minimal_dominating, maximal_independent_sets, normalize_minimal_dominating,
    private_neighbours, Oracle,
};
use updom::formats::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use updom::induced::{contains_induced, is_free, verify_embedding};
use updom::recognition::{extract_base, find_nice_partition, NicePartition};
use updom::{Girth, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(&e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected on at least two vertices", |g| g.n() >= 2 && g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn embeddings_verify(g in graph(9), h in graph(4)) {
        if let Some(e) = contains_induced(&g, &h) {
            prop_assert!(verify_embedding(&g, &h, &e));
        }
    }

    #[test]
    fn cobipartite_iff_no_odd_anticycle(g in graph(7)) {
        let family: Vec<Graph> = (1..=g.n().div_ceil(2)).map(|i| catalog::anticycle(2 * i + 1)).filter(|a| a.n() >= 3).collect();
        prop_assert_eq!(g.is_cobipartite(), is_free(&g, &family));
    }

    #[test]
    fn subdivision_doubles_girth_and_is_bipartite(g in graph(9)) {
        let s = subdivide(&g).graph;
        prop_assert!(s.is_bipartite());
        let expected = match g.girth() {
            Girth::Finite(k) => Girth::Finite(2 * k),
            Girth::Infinite => Girth::Infinite,
        };
        prop_assert_eq!(s.girth(), expected);
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn maximal_independent_sets_are_minimal_dominating(g in graph(10)) {
        for s in maximal_independent_sets(&g) {
            prop_assert!(is_minimal_dominating(&g, &s));
        }
    }

    #[test]
    fn invariant_ordering(g in graph(10)) {
        let r = Oracle::default().report(&g).unwrap();
        prop_assert!(r.gamma.size <= r.upper_gamma.size);
        prop_assert!(r.alpha.size <= r.upper_gamma.size);
    }

    #[test]
    fn members_with_a_neighbour_inside_have_private_neighbours(g in graph(8)) {
        for d in Oracle::default().minimal_dominating_sets(&g).unwrap() {
            for x in d.iter().filter(|&x| !g.neighbours(x).is_disjoint(&d)) {
                prop_assert!(!private_neighbours(&g, &d, x).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn normalization_postconditions(g in connected(12)) {
        let d = greedy_minimalize(&g, &g.all_vertices());
        let out = normalize_minimal_dominating(&g, &d).unwrap();
        prop_assert!(is_minimal_dominating(&g, &out.set));
        prop_assert!(out.set.len() <= d.len());
        for x in out.set.iter() {
            prop_assert!(!private_neighbours(&g, &out.set, x).unwrap().is_empty());
        }
    }

    #[test]
    fn gadget_round_trip(g in graph(7)) {
        let gg = gadget_construct(&g);
        prop_assert_eq!(gg.graph.n(), g.n() + 4 * g.m());
        for s in maximal_independent_sets(&g) {
            let d = gadget_forward(&gg, &g, &s).unwrap();
            prop_assert_eq!(d.len(), s.len() + 2 * g.m());
            let back = gadget_backward(&gg, &d).unwrap();
            prop_assert!(g.is_independent(&back.independent));
            prop_assert!(back.independent.len() >= s.len());
        }
    }

    #[test]
    fn q_lifts_are_size_inverse(g in connected(8)) {
        let o = Oracle::default();
        let q = q_construct(&g);
        prop_assert!(q.graph.is_cobipartite());
        let d = normalize_minimal_dominating(&g, &o.gamma(&g).unwrap().witness).unwrap().set;
        let up = q_forward(&q, &g, &d).unwrap();
        prop_assert_eq!(up.len(), g.n() - d.len());
        if up.len() >= 3 {
            prop_assert_eq!(q_backward(&q, &up).unwrap().len(), d.len());
        }
    }

    #[test]
    fn extract_base_inverts_q(g in graph(8)) {
        let q = q_construct(&g);
        let p = NicePartition { u: q.old.clone(), w: q.new.clone() };
        prop_assert_eq!(extract_base(&q.graph, &p).unwrap().base, g);
    }

    #[test]
    fn completion_embeds_members(g in graph(8)) {
        if let Some(p) = find_nice_partition(&g).unwrap() {
            let c = complete_to_q(&g, &p).unwrap();
            prop_assert!(verify_embedding(&c.q.graph, &g, &c.embedding));
            prop_assert_eq!(q_construct(&c.base).graph, c.q.graph);
        }
    }
}
