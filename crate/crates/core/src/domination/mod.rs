//! Domination predicates, private neighbours, the private-neighbour
//! normalization of minimal dominating sets, and exhaustive oracles.

mod independent;
mod normalize;
mod oracle;

pub use independent::{maximal_independent_sets, maximum_independent_set};
pub use normalize::{greedy_minimalize, greedy_minimalize_in_order, normalize_minimal_dominating, Normalized};
pub use oracle::{InvariantReport, Oracle, Witnessed, DEFAULT_CAP};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Every vertex outside `d` has a neighbour in `d`.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    (0..g.n()).all(|v| d.contains(v) || !g.neighbours(v).is_disjoint(d))
}

/// `d` dominates and no proper subset of it does.
///
/// Checked through closed-neighbourhood privacy: `x` is irreplaceable iff
/// some `w` in `N[x]` has `x` as its only dominator.
pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> bool {
    is_dominating(g, d) && d.iter().all(|x| has_closed_private(g, d, x))
}

fn has_closed_private(g: &Graph, d: &VertexSet, x: usize) -> bool {
    g.closed_neighbourhood(x).iter().any(|w| {
        let mut dominators = g.closed_neighbourhood(w).intersection(d);
        dominators.remove(x);
        dominators.is_empty()
    })
}

/// Vertices `y` outside `d` whose only neighbour in `d` is `x`.
pub fn private_neighbours(g: &Graph, d: &VertexSet, x: usize) -> Result<VertexSet> {
    g.check(d)?;
    if !d.contains(x) {
        return Err(Error::NotAMember(x));
    }
    let mut out = VertexSet::empty(g.n());
    for y in g.neighbours(x).iter() {
        if d.contains(y) {
            continue;
        }
        let mut others = g.neighbours(y).intersection(d);
        others.remove(x);
        if others.is_empty() {
            out.insert(y);
        }
    }
    Ok(out)
}

/// Independent, and every vertex outside has a neighbour inside.
pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> bool {
    g.is_independent(s) && is_dominating(g, s)
}
