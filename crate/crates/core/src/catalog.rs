//! Small named graphs used by tests, the dichotomy classifier and the CLI.

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("catalog graphs are well formed")
}

/// `P_k`: the path on `k` vertices `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Graph {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    build(k, &edges)
}

/// `C_k` for `k >= 3`.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need at least three vertices");
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    build(k, &edges)
}

/// Complement of `C_k`.
pub fn anticycle(k: usize) -> Graph {
    cycle(k).complement()
}

pub fn complete(k: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    build(k, &edges)
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    build(k + 1, &edges)
}

pub fn claw() -> Graph {
    star(3)
}

/// Two disjoint edges `{0,1}` and `{2,3}`.
pub fn two_k2() -> Graph {
    build(4, &[(0, 1), (2, 3)])
}

/// Triangular prism: triangles `{0,1,2}` and `{3,4,5}` joined by the matching `i - i+3`.
pub fn prism() -> Graph {
    build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, &edges)
}

/// Triangle with a pendant vertex (vertex 3 attached to 0).
pub fn paw() -> Graph {
    build(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])
}

/// `K_4` minus the edge `{2,3}`.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// The eleven graphs on four vertices, up to isomorphism, by name.
pub fn small_named() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", complete(4)),
        ("C4", cycle(4)),
        ("P4", path(4)),
        ("claw", claw()),
        ("paw", paw()),
        ("diamond", diamond()),
        ("2K2", two_k2()),
        ("K3+K1", complete(3).disjoint_union(&Graph::empty(1))),
        ("P3+K1", path(3).disjoint_union(&Graph::empty(1))),
        ("4K1", Graph::empty(4)),
        ("co-diamond", diamond().complement()),
    ]
}
