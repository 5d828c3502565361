//! The eleven minimal forbidden induced subgraphs of Q*(all graphs).
//!
//! `G1`..`G8` are transcribed from the drawings. The drawn vertices
//! a, b, c, d, e, f, g, h are ids 0..7 in this layout:
//!
//! ```text
//!   6 vertices                 8 vertices
//!
//!   d ---------- c                   e
//!   |    e   f   |           d ------------ c
//!   |            |        g  |              |  h
//!   a ---------- b           a ------------ b
//!                                   f
//! ```
//!
//! In G4, e sits outside the square by side bc and f by side ad.
//!
//! Nothing relies on the transcription being right by inspection: the unit
//! tests check co-bipartiteness, absence of nice partitions, minimality under
//! single-vertex deletion, and that G1 sits inside the complement of C9.

use crate::catalog;
use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("forbidden graph transcription is well formed")
}

// a..h of the drawings are 0..7; the square is a=0, b=1, c=2, d=3.
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;
const G: usize = 6;
const H: usize = 7;

/// Square sides ab, cd, da plus both inner vertices joined to everything.
pub fn g1() -> Graph {
    build(6, &[(A, B), (C, D), (D, A), (A, E), (A, F), (B, E), (B, F), (C, E), (C, F), (D, E), (D, F), (E, F)])
}

/// `G1` plus the side bc: `K_6` minus the two edges ac, bd.
pub fn g2() -> Graph {
    let mut edges = g1().edges();
    edges.push((B, C));
    build(6, &edges)
}

/// Square sides ab and cd only, inner vertices joined to everything.
pub fn g3() -> Graph {
    build(6, &[(A, B), (C, D), (A, E), (A, F), (B, E), (B, F), (C, E), (C, F), (D, E), (D, F), (E, F)])
}

/// `K_4` on the square with two outer vertices, on sides bc and ad.
pub fn g4() -> Graph {
    build(6, &[(A, B), (B, C), (C, D), (D, A), (A, C), (B, D), (C, E), (B, E), (A, F), (D, F)])
}

fn g5_edges() -> Vec<(usize, usize)> {
    let mut edges = vec![(A, B), (C, D), (C, E), (D, E), (A, F), (B, F)];
    for hub in [G, H] {
        edges.extend([(hub, A), (hub, B), (hub, C), (hub, D), (hub, E), (hub, F)]);
    }
    edges
}

/// Square sides ab and cd, each capped by a triangle vertex (e over cd,
/// f under ab), and two non-adjacent hubs g, h joined to all six others.
pub fn g5() -> Graph {
    build(8, &g5_edges())
}

/// `G5` plus side da.
pub fn g6() -> Graph {
    let mut edges = g5_edges();
    edges.push((D, A));
    build(8, &edges)
}

/// `G5` plus sides da and bc.
pub fn g7() -> Graph {
    let mut edges = g5_edges();
    edges.extend([(D, A), (B, C)]);
    build(8, &edges)
}

/// `G7` plus the edge ef.
pub fn g8() -> Graph {
    let mut edges = g5_edges();
    edges.extend([(D, A), (B, C), (E, F)]);
    build(8, &edges)
}

/// The eleven graphs: complements of C3, C5, C7 followed by G1..G8.
pub fn forbidden_set() -> Vec<(&'static str, Graph)> {
    vec![
        ("co-C3", catalog::anticycle(3)),
        ("co-C5", catalog::anticycle(5)),
        ("co-C7", catalog::anticycle(7)),
        ("G1", g1()),
        ("G2", g2()),
        ("G3", g3()),
        ("G4", g4()),
        ("G5", g5()),
        ("G6", g6()),
        ("G7", g7()),
        ("G8", g8()),
    ]
}

pub fn forbidden_graphs() -> Vec<Graph> {
    forbidden_set().into_iter().map(|(_, g)| g).collect()
}
