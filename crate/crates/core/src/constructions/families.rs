use serde::Serialize;

use crate::graph::Graph;

/// Spider with centre 0 and legs of `i`, `j` and `l` vertices, numbered
/// outwards one leg after the other.
pub fn tripod(i: usize, j: usize, l: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [i, j, l] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, &edges).expect("tripod edges are in range")
}

/// How the index of `H_n` is read off the drawing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HConvention {
    /// `n` vertices strictly between the two hubs; `H_n` has `n + 6` vertices.
    #[default]
    InternalVertices,
    /// `n` edges on the path between the hubs; `H_n` has `n + 5` vertices.
    PathEdges,
}

/// Two degree-3 hubs joined by a path, each hub carrying two pendant
/// leaves. Hubs are 0 and `p + 1` where `p` is the number of internal path
/// vertices (ids `1..=p`); the leaves come last.
///
/// Panics if `n == 0`.
pub fn h_graph(n: usize, convention: HConvention) -> Graph {
    assert!(n > 0, "H_n is defined for n >= 1");
    let internal = match convention {
        HConvention::InternalVertices => n,
        HConvention::PathEdges => n - 1,
    };
    let right = internal + 1;
    let mut edges: Vec<(usize, usize)> = (0..right).map(|v| (v, v + 1)).collect();
    let leaf = right + 1;
    edges.extend([(0, leaf), (0, leaf + 1), (right, leaf + 2), (right, leaf + 3)]);
    Graph::new(leaf + 4, &edges).expect("H_n edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::Girth;
    use crate::induced::contains_induced;

    #[test]
    fn tripod_examples() {
        assert_eq!(tripod(1, 1, 1), catalog::claw());
        let t = tripod(3, 2, 4);
        assert_eq!((t.n(), t.m(), t.max_degree(), t.girth()), (10, 9, 3, Girth::Infinite));
    }

    #[test]
    fn degenerate_tripods_are_paths() {
        for (i, j) in [(0, 0), (1, 0), (2, 3), (4, 1)] {
            let t = tripod(i, j, 0);
            assert_eq!(t.n(), i + j + 1);
            assert!(contains_induced(&t, &catalog::path(i + j + 1)).is_some());
            assert!(t.is_connected());
            assert!(t.max_degree() <= 2);
        }
    }

    #[test]
    fn h_graph_conventions() {
        let h = h_graph(1, HConvention::InternalVertices);
        assert_eq!((h.n(), h.m()), (7, 6));
        let hubs: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 3).collect();
        assert_eq!(hubs, vec![0, 2]);
        assert!(!h.has_edge(0, 2));
        let h = h_graph(1, HConvention::PathEdges);
        assert_eq!((h.n(), h.m()), (6, 5));
        assert!(h.has_edge(0, 1));
        assert_eq!(h_graph(3, HConvention::PathEdges), h_graph(2, HConvention::InternalVertices));
    }
}
