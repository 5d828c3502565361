//! Induced-subgraph containment by backtracking.

use crate::graph::Graph;
use crate::set::VertexSet;

/// An injective map from pattern vertices to host vertices, indexed by
/// pattern vertex.
pub type Embedding = Vec<usize>;

/// Finds an induced copy of `pattern` in `host`.
///
/// Pattern vertices are placed in a connectivity-first order (each next
/// vertex has as many already placed neighbours as possible, ties broken by
/// degree) and each candidate pool is the intersection of the placed
/// neighbours' host rows minus the placed non-neighbours' rows.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let order = placement_order(pattern);
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::empty(host.n());
    if extend(host, pattern, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// True when `embedding` is an injective map under which adjacency is
/// preserved in both directions.
pub fn verify_embedding(host: &Graph, pattern: &Graph, embedding: &[usize]) -> bool {
    if embedding.len() != pattern.n() || embedding.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let mut seen = VertexSet::empty(host.n());
    if !embedding.iter().all(|&v| seen.insert(v)) {
        return false;
    }
    for a in 0..pattern.n() {
        for b in a + 1..pattern.n() {
            if pattern.has_edge(a, b) != host.has_edge(embedding[a], embedding[b]) {
                return false;
            }
        }
    }
    true
}

/// A forbidden pattern found in a graph: its index in the family and where it sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub embedding: Embedding,
}

/// `None` when `g` contains no member of `family` as an induced subgraph;
/// otherwise the first member found (in family order) with its embedding.
pub fn find_violation(g: &Graph, family: &[Graph]) -> Option<Violation> {
    family
        .iter()
        .enumerate()
        .find_map(|(index, h)| contains_induced(g, h).map(|embedding| Violation { index, embedding }))
}

pub fn is_free(g: &Graph, family: &[Graph]) -> bool {
    find_violation(g, family).is_none()
}

fn placement_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let mut placed = VertexSet::empty(k);
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                let linked = pattern.neighbours(v).intersection(&placed).len();
                // prefer smaller ids on full ties
                (linked, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed.insert(next);
        order.push(next);
    }
    order
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut pool = used.complement();
    for &q in &order[..depth] {
        let row = host.neighbours(map[q]);
        pool = if pattern.has_edge(p, q) { pool.intersection(row) } else { pool.difference(row) };
        if pool.is_empty() {
            return false;
        }
    }
    let need = pattern.degree(p);
    for v in pool.iter() {
        if host.degree(v) < need {
            continue;
        }
        map[p] = v;
        used.insert(v);
        if extend(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        used.remove(v);
    }
    map[p] = usize::MAX;
    false
}
