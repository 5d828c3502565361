use serde::Serialize;

use super::{is_dominating, is_minimal_dominating, private_neighbours};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Drops vertices of `d` in increasing id order whenever the rest still
/// dominates. One pass suffices: if `S - v` fails to dominate, so does
/// `S' - v` for every `S' ⊆ S`.
pub fn greedy_minimalize(g: &Graph, d: &VertexSet) -> VertexSet {
    let order: Vec<usize> = d.iter().collect();
    greedy_minimalize_in_order(g, d, &order)
}

/// As [`greedy_minimalize`], trying removals in the given order.
pub fn greedy_minimalize_in_order(g: &Graph, d: &VertexSet, order: &[usize]) -> VertexSet {
    let mut cur = d.clone();
    for &v in order {
        if !cur.contains(v) {
            continue;
        }
        cur.remove(v);
        if !is_dominating(g, &cur) {
            cur.insert(v);
        }
    }
    cur
}

/// Output of [`normalize_minimal_dominating`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normalized {
    pub set: VertexSet,
    /// Isolated vertices of the graph. They belong to every dominating set and
    /// can never have a private neighbour; they are kept and reported here.
    pub isolated_kept: VertexSet,
    /// `(x, y)` swaps performed, in order.
    pub swaps: Vec<(usize, usize)>,
}

/// Turns a minimal dominating set into one of no greater size in which
/// every vertex has a private neighbour outside the set.
///
/// Each round takes the smallest `x` without a private neighbour (such an
/// `x` has no neighbour in the set), replaces it by its smallest neighbour
/// `y`, and greedily re-minimalizes. The pair (size, number of vertices
/// isolated inside the set) drops lexicographically every round, so the
/// loop terminates.
///
/// Connected graphs on at least two vertices get the full guarantee.
/// Disconnected graphs are handled per component; singleton components are
/// left alone and listed in [`Normalized::isolated_kept`].
pub fn normalize_minimal_dominating(g: &Graph, d: &VertexSet) -> Result<Normalized> {
    g.check(d)?;
    if !is_minimal_dominating(g, d) {
        return Err(Error::NotMinimalDominating);
    }
    let n = g.n();
    let isolated = VertexSet::from_members(n, (0..n).filter(|&v| g.degree(v) == 0))?;
    let mut cur = d.clone();
    let mut swaps = Vec::new();
    let limit = n * n + n + 1;
    for _ in 0..limit {
        let mut lacking = None;
        for x in cur.iter().filter(|&x| !isolated.contains(x)) {
            if private_neighbours(g, &cur, x)?.is_empty() {
                lacking = Some(x);
                break;
            }
        }
        let Some(x) = lacking else {
            return Ok(Normalized { set: cur, isolated_kept: isolated, swaps });
        };
        if !g.neighbours(x).is_disjoint(&cur) {
            return Err(Error::Invariant(format!(
                "vertex {x} has a neighbour in a minimal dominating set but no private neighbour"
            )));
        }
        let y = g.neighbours(x).first().expect("x is not isolated");
        cur.remove(x);
        cur.insert(y);
        swaps.push((x, y));
        cur = greedy_minimalize(g, &cur);
        debug_assert!(is_minimal_dominating(g, &cur));
    }
    Err(Error::Invariant(format!("normalization did not settle within {limit} rounds")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn check_post(g: &Graph, d: &VertexSet, out: &Normalized) {
        assert!(is_minimal_dominating(g, &out.set));
        assert!(out.set.len() <= d.len());
        for x in out.set.iter().filter(|&x| !out.isolated_kept.contains(x)) {
            assert!(!private_neighbours(g, &out.set, x).unwrap().is_empty(), "{x} lacks a private neighbour");
        }
    }

    #[test]
    fn star_leaves_collapse_to_centre() {
        let g = catalog::star(3);
        let d = g.vertex_set([1, 2, 3]).unwrap();
        let out = normalize_minimal_dominating(&g, &d).unwrap();
        assert_eq!(out.set.to_vec(), vec![0]);
        assert_eq!(out.swaps, vec![(1, 0)]);
        check_post(&g, &d, &out);
    }

    #[test]
    fn already_normal_sets_are_unchanged() {
        let c4 = catalog::cycle(4);
        let d = c4.vertex_set([0, 1]).unwrap();
        let out = normalize_minimal_dominating(&c4, &d).unwrap();
        assert_eq!(out.set, d);
        assert!(out.swaps.is_empty());
        let k2 = catalog::complete(2);
        let d = k2.vertex_set([0]).unwrap();
        assert_eq!(normalize_minimal_dominating(&k2, &d).unwrap().set, d);
    }

    #[test]
    fn rejects_non_minimal_input() {
        let p4 = catalog::path(4);
        let d = p4.vertex_set([0, 1, 3]).unwrap();
        assert_eq!(normalize_minimal_dominating(&p4, &d), Err(Error::NotMinimalDominating));
    }

    #[test]
    fn disconnected_graphs_are_handled_per_component() {
        let g = catalog::star(2).disjoint_union(&Graph::empty(1));
        let d = g.vertex_set([1, 2, 3]).unwrap();
        let out = normalize_minimal_dominating(&g, &d).unwrap();
        assert_eq!(out.set.to_vec(), vec![0, 3]);
        assert_eq!(out.isolated_kept.to_vec(), vec![3]);
        check_post(&g, &d, &out);
    }

    #[test]
    fn greedy_minimalization_is_minimal() {
        let p = catalog::petersen();
        let d = greedy_minimalize(&p, &p.all_vertices());
        assert!(is_minimal_dominating(&p, &d));
        let reversed: Vec<usize> = (0..10).rev().collect();
        let e = greedy_minimalize_in_order(&p, &p.all_vertices(), &reversed);
        assert!(is_minimal_dominating(&p, &e));
    }
}
