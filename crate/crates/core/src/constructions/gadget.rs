use serde::Serialize;

use crate::domination::{is_dominating, is_maximal_independent, is_minimal_dominating};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Each edge `uv` (`u < v`) of a base graph replaced by the induced paths
/// `u - v_e - u_e - v` and `u - v'_e - u'_e - v`.
///
/// Base vertices keep their ids. Edge number `i` in lexicographic order gets
/// `base_n + 4i + [0, 1, 2, 3]` for `[v_e, u_e, v'_e, u'_e]`, so slots 0 and 2
/// touch `u` and slots 1 and 3 touch `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub base_n: usize,
    pub base_m: usize,
    pub edges: Vec<(usize, usize)>,
    pub gadget_map: Vec<[usize; 4]>,
}

impl GadgetGraph {
    pub fn base_vertices(&self) -> VertexSet {
        VertexSet::from_members(self.graph.n(), 0..self.base_n).expect("base ids are in range")
    }

    /// The two path vertices of edge `i` adjacent to endpoint `x`.
    fn touching(&self, i: usize, x: usize) -> [usize; 2] {
        let q = self.gadget_map[i];
        if x == self.edges[i].0 {
            [q[0], q[2]]
        } else {
            [q[1], q[3]]
        }
    }

    /// Base edges whose four path vertices all lie outside `d`.
    pub fn clean_edges(&self, d: &VertexSet) -> Vec<usize> {
        (0..self.base_m).filter(|&i| self.gadget_map[i].iter().all(|&x| !d.contains(x))).collect()
    }
}

pub fn gadget_construct(g: &Graph) -> GadgetGraph {
    let base_n = g.n();
    let edges = g.edges();
    let mut out = Vec::with_capacity(4 * edges.len());
    let mut gadget_map = Vec::with_capacity(edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let q = [0, 1, 2, 3].map(|k| base_n + 4 * i + k);
        out.extend([(u, q[0]), (q[0], q[1]), (q[1], v), (u, q[2]), (q[2], q[3]), (q[3], v)]);
        gadget_map.push(q);
    }
    let graph = Graph::new(base_n + 4 * edges.len(), &out).expect("gadget ids are in range");
    GadgetGraph { graph, base_n, base_m: edges.len(), edges, gadget_map }
}

/// Lifts a maximal independent set `s` of the base graph to a minimal
/// dominating set of size `|s| + 2m`.
///
/// Per edge, the two path vertices next to the endpoint outside `s` are
/// taken; when neither endpoint is in `s`, the two next to the lower endpoint.
pub fn gadget_forward(gg: &GadgetGraph, base: &Graph, s: &VertexSet) -> Result<VertexSet> {
    base.check(s)?;
    if base.n() != gg.base_n || base.edges() != gg.edges {
        return Err(Error::Precondition("base graph does not match the gadget graph".into()));
    }
    if !is_maximal_independent(base, s) {
        return Err(Error::NotMaximalIndependent);
    }
    let mut d = VertexSet::from_members(gg.graph.n(), s.iter())?;
    for (i, &(u, v)) in gg.edges.iter().enumerate() {
        let outside = if s.contains(u) { v } else { u };
        for x in gg.touching(i, outside) {
            d.insert(x);
        }
    }
    if d.len() != s.len() + 2 * gg.base_m || !is_minimal_dominating(&gg.graph, &d) {
        return Err(Error::Invariant("forward gadget lift is not a minimal dominating set of the expected size".into()));
    }
    Ok(d)
}

/// Output of [`gadget_backward`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetRepair {
    /// Minimal dominating set with no clean edges, at least as large as the input.
    pub repaired: VertexSet,
    /// `repaired` restricted to the base vertices, as a set of the base graph.
    pub independent: VertexSet,
    /// Indices of edges that were clean in the input.
    pub clean_edges: Vec<usize>,
}

/// Lifts a minimal dominating set of the gadget graph back to an independent
/// set of the base graph of size at least `|d| - 2m`.
///
/// Clean edges are repaired one base vertex at a time: take the smallest
/// base vertex `u` on a clean edge, drop it, add the two path vertices next
/// to `u` on each clean edge at `u`, then drop each partner endpoint (in
/// increasing order) that no longer has a private neighbour. Repeat until no
/// clean edge is left.
pub fn gadget_backward(gg: &GadgetGraph, d: &VertexSet) -> Result<GadgetRepair> {
    let g = &gg.graph;
    g.check(d)?;
    if !is_minimal_dominating(g, d) {
        return Err(Error::NotMinimalDominating);
    }
    let initial = gg.clean_edges(d);
    let mut cur = d.clone();
    loop {
        let clean = gg.clean_edges(&cur);
        let Some(u) = clean.iter().flat_map(|&i| [gg.edges[i].0, gg.edges[i].1]).min() else {
            break;
        };
        cur.remove(u);
        let mut partners = Vec::new();
        for &i in clean.iter().filter(|&&i| gg.edges[i].0 == u || gg.edges[i].1 == u) {
            for x in gg.touching(i, u) {
                cur.insert(x);
            }
            let (a, b) = gg.edges[i];
            partners.push(if a == u { b } else { a });
        }
        partners.sort_unstable();
        for v in partners {
            cur.remove(v);
            if !is_dominating(g, &cur) {
                cur.insert(v);
            }
        }
    }
    if !is_minimal_dominating(g, &cur) || cur.len() < d.len() {
        return Err(Error::Invariant("clean-edge repair did not yield a minimal dominating set at least as large".into()));
    }
    let independent = VertexSet::from_members(gg.base_n, cur.iter().filter(|&v| v < gg.base_n))?;
    let all_paired = gg.gadget_map.iter().all(|q| q.iter().filter(|&&x| cur.contains(x)).count() == 2);
    let no_edge_inside = gg.edges.iter().all(|&(a, b)| !(independent.contains(a) && independent.contains(b)));
    if !all_paired || !no_edge_inside {
        return Err(Error::Invariant("repaired set does not meet every gadget in exactly two vertices".into()));
    }
    Ok(GadgetRepair { repaired: cur, independent, clean_edges: initial })
}
