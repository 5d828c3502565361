//! Upper domination in polynomial time on 2K2-free graphs.
//!
//! In a 2K2-free graph a minimal dominating set larger than α(G) is always
//! a triangle together with every vertex the triangle does not dominate.
//! So the answer is either a maximum independent set or the best
//! `T ∪ A(T)` over all triangles `T`.

use serde::Serialize;

use crate::domination::{is_minimal_dominating, maximum_independent_set, Oracle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::find_2k2;
use crate::set::VertexSet;

/// `A(U)`: vertices outside `u` with no neighbour in `u`.
pub fn anti_neighbourhood(g: &Graph, u: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in 0..g.n() {
        if !u.contains(v) && g.neighbours(v).is_disjoint(u) {
            out.insert(v);
        }
    }
    out
}

/// Every triangle once, as sorted id triples in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in g.neighbours(a).iter().filter(|&b| b > a) {
            let common = g.neighbours(a).intersection(g.neighbours(b));
            out.extend(common.iter().filter(|&c| c > b).map(|c| [a, b, c]));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// A maximum independent set was optimal.
    IndependentSet,
    /// Some `T ∪ A(T)` beat every independent set.
    Triangle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub size: usize,
    pub witness: VertexSet,
    pub method: Method,
}

/// Maximum minimal dominating set of a 2K2-free graph. Rejects inputs with
/// an induced 2K2, naming it.
pub fn upper_dominating_2k2(g: &Graph) -> Result<Solution> {
    if let Some((e, f)) = find_2k2(g) {
        return Err(Error::Contains2K2(e, f));
    }
    Ok(upper_dominating_2k2_unchecked(g))
}

/// As [`upper_dominating_2k2`] without the freeness check; the result is
/// only guaranteed optimal on 2K2-free input.
///
/// Ties: the maximum independent set is the lexicographically first largest
/// one; a triangle candidate replaces it only when strictly larger, and
/// among equally large triangle candidates the lexicographically first set
/// wins.
pub fn upper_dominating_2k2_unchecked(g: &Graph) -> Solution {
    let independent = maximum_independent_set(g);
    let mut best: Option<VertexSet> = None;
    for t in triangles(g) {
        let tri = VertexSet::from_members(g.n(), t).expect("triangle ids are in range");
        let candidate = tri.union(&anti_neighbourhood(g, &tri));
        let floor = best.as_ref().map_or(independent.len(), VertexSet::len);
        let better = candidate.len() > floor
            || best.as_ref().is_some_and(|b| candidate.len() == b.len() && candidate < *b);
        if better && is_minimal_dominating(g, &candidate) {
            best = Some(candidate);
        }
    }
    match best {
        Some(witness) => Solution { size: witness.len(), witness, method: Method::Triangle },
        None => Solution { size: independent.len(), witness: independent, method: Method::IndependentSet },
    }
}

/// Outcome of [`verify_triangle_corollary`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryCheck {
    pub holds: bool,
    pub alpha: usize,
    /// Minimal dominating sets larger than α that were inspected.
    pub large_sets: usize,
    /// A large minimal dominating set that is not `T ∪ A(T)` for any triangle.
    pub counterexample: Option<VertexSet>,
}

/// Checks exhaustively that every minimal dominating set larger than α(G)
/// equals `T ∪ A(T)` for some triangle `T`.
pub fn verify_triangle_corollary(g: &Graph, oracle: &Oracle) -> Result<CorollaryCheck> {
    if let Some((e, f)) = find_2k2(g) {
        return Err(Error::Contains2K2(e, f));
    }
    let alpha = oracle.alpha(g)?.size;
    let shapes: Vec<VertexSet> = triangles(g)
        .into_iter()
        .map(|t| {
            let tri = VertexSet::from_members(g.n(), t).expect("triangle ids are in range");
            tri.union(&anti_neighbourhood(g, &tri))
        })
        .collect();
    let mut large_sets = 0;
    let mut counterexample = None;
    oracle.for_each_minimal_dominating(g, |d| {
        if d.len() > alpha {
            large_sets += 1;
            if counterexample.is_none() && !shapes.contains(&d) {
                counterexample = Some(d);
            }
        }
    })?;
    Ok(CorollaryCheck { holds: counterexample.is_none(), alpha, large_sets, counterexample })
}
