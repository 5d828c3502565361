//! Graph generators for sweeps: every labeled graph on a few vertices and
//! seeded random families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::recognition::is_2k2_free;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labeled graph on `n` vertices; bit `i` of the index selects the
/// `i`-th vertex pair. Panics above 11 vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let all = pairs(n);
    assert!(all.len() < 64, "too many labeled graphs to enumerate");
    (0..1u64 << all.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::new(n, &edges).expect("pairs are in range")
    })
}

/// Every labeled graph on `1..=max_n` vertices.
pub fn labeled_graphs_up_to(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(labeled_graphs)
}

/// A canonical code: the largest adjacency bit string over all vertex
/// orders. Equal codes mean isomorphic graphs. Panics above 8 vertices.
pub fn canonical_code(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= 8, "brute-force canonical form is limited to 8 vertices");
    let ps = pairs(n);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0u64;
    loop {
        let code = ps
            .iter()
            .fold(0u64, |acc, &(a, b)| acc << 1 | u64::from(g.has_edge(perm[a], perm[b])));
        best = best.max(code);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (n, best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative per isomorphism class on `1..=max_n` vertices,
/// the first labeled graph met in each class.
pub fn unlabeled_graphs_up_to(max_n: usize) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    labeled_graphs_up_to(max_n).filter(|g| seen.insert(canonical_code(g))).collect()
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, &edges).expect("pairs are in range")
}

/// A uniformly random labeled tree (random attachment) plus each other
/// pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend(pairs(n).into_iter().filter(|_| rng.gen_bool(p)));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let relabeled: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (order[a], order[b])).collect();
    Graph::new(n, &relabeled).expect("pairs are in range")
}

/// A connected graph with at least one cycle. Needs `n >= 3`.
pub fn random_cyclic<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n >= 3, "a cycle needs three vertices");
    loop {
        let g = random_connected(rng, n, p);
        if g.m() >= n {
            return g;
        }
    }
}

/// A 2K2-free graph: pairs are visited in random order, each offered with
/// probability `p`, and kept only when the graph stays 2K2-free.
pub fn random_2k2_free<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut all = pairs(n);
    all.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for e in all {
        if !rng.gen_bool(p) {
            continue;
        }
        edges.push(e);
        let g = Graph::new(n, &edges).expect("pairs are in range");
        if !is_2k2_free(&g) {
            edges.pop();
        }
    }
    Graph::new(n, &edges).expect("pairs are in range")
}

/// A simple cubic graph from the pairing model, rejecting loops and
/// multiple edges. Needs even `n >= 4`.
pub fn random_cubic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 4 && n % 2 == 0, "cubic graphs need an even number of at least 4 vertices");
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
        points.shuffle(rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == edges.len() && edges.iter().all(|&(a, b)| a != b) {
            return Graph::new(n, &edges).expect("pairs are in range");
        }
    }
}
