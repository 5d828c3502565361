//! Membership tests for the hereditary classes that matter here:
//! 2K2-free graphs, co-bipartite graphs, Q*(all graphs), tripod forests
//! and the degree-3 classes `Z_k`.

mod forbidden;

pub use forbidden::{forbidden_graphs, forbidden_set, g1, g2, g3, g4, g5, g6, g7, g8};

use serde::Serialize;

use crate::constructions::{h_graph, HConvention};
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::induced::{find_violation, Embedding};
use crate::set::VertexSet;

/// Two edges with no edge between them, if the graph has such a pair.
/// Edges are scanned in lexicographic order, first pair wins.
pub fn find_2k2(g: &Graph) -> Option<((usize, usize), (usize, usize))> {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

pub fn is_2k2_free(g: &Graph) -> bool {
    find_2k2(g).is_none()
}

/// A split of the vertices into two cliques `U`, `W` such that every
/// `W`-vertex has at most two neighbours in `U`, and `W`-vertices with
/// exactly two have pairwise different `U`-neighbourhoods.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NicePartition {
    pub u: VertexSet,
    pub w: VertexSet,
}

impl NicePartition {
    /// Checks every condition against `g`, naming the first one that fails.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check(&self.u)?;
        g.check(&self.w)?;
        if !self.u.is_disjoint(&self.w) || self.u.union(&self.w) != g.all_vertices() {
            return Err(Error::InvalidPartition("U and W must partition the vertex set".into()));
        }
        if !g.is_clique(&self.u) || !g.is_clique(&self.w) {
            return Err(Error::InvalidPartition("U and W must both be cliques".into()));
        }
        let mut pairs: Vec<VertexSet> = Vec::new();
        for x in self.w.iter() {
            let up = g.neighbours(x).intersection(&self.u);
            match up.len() {
                0 | 1 => {}
                2 => {
                    if pairs.contains(&up) {
                        return Err(Error::InvalidPartition(format!(
                            "two W-vertices share the U-neighbourhood {:?}",
                            up.to_vec()
                        )));
                    }
                    pairs.push(up);
                }
                k => {
                    return Err(Error::InvalidPartition(format!("W-vertex {x} has {k} neighbours in U")));
                }
            }
        }
        Ok(())
    }
}

/// Upper bound on clique bipartitions [`find_nice_partition`] will try.
pub const COLORING_LIMIT: u128 = 1 << 20;

/// Finds a nice partition when one exists.
///
/// Clique bipartitions of `g` are exactly the proper 2-colourings of its
/// complement, one free choice per complement component. All of them are
/// tried (the first component's colouring is fixed, since swapping the two
/// sides is covered by trying both orientations), in increasing order of
/// the flip mask; for each, `U = colour 1` is tried before `U = colour 0`.
pub fn find_nice_partition(g: &Graph) -> Result<Option<NicePartition>> {
    let co = g.complement();
    let Some((zero, _)) = co.bipartition() else {
        return Ok(None);
    };
    let comps = co.connected_components();
    let free = comps.len().saturating_sub(1);
    let count = 1u128 << free.min(127);
    if count > COLORING_LIMIT {
        return Err(Error::TooManyColorings { count, limit: COLORING_LIMIT });
    }
    let n = g.n();
    for flips in 0..count {
        let mut side0 = VertexSet::empty(n);
        for (i, comp) in comps.iter().enumerate() {
            let flipped = i > 0 && (flips >> (i - 1)) & 1 == 1;
            let part = if flipped { comp.difference(&zero) } else { comp.intersection(&zero) };
            side0 = side0.union(&part);
        }
        let side1 = side0.complement();
        for (u, w) in [(side1.clone(), side0.clone()), (side0, side1)] {
            let p = NicePartition { u, w };
            if p.validate(g).is_ok() {
                return Ok(Some(p));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QStarMethod {
    /// Search for a nice partition.
    Partition,
    /// Look for any of the eleven forbidden induced subgraphs.
    Forbidden,
}

/// Membership in Q*(all graphs) by either characterization.
pub fn in_q_star(g: &Graph, method: QStarMethod) -> Result<bool> {
    match method {
        QStarMethod::Partition => Ok(find_nice_partition(g)?.is_some()),
        QStarMethod::Forbidden => Ok(find_violation(g, &forbidden_graphs()).is_none()),
    }
}

/// Shape of one connected component of a candidate tripod forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ComponentShape {
    /// A path, i.e. a degenerate tripod `S_{i,j,0}`.
    Path { vertices: usize },
    /// One centre of degree 3 with legs of the given lengths (sorted, descending).
    Tripod { centre: usize, legs: [usize; 3] },
    Cycle,
    HighDegree { vertex: usize, degree: usize },
    SeveralCentres { centres: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripodForestReport {
    pub member: bool,
    pub components: Vec<ComponentShape>,
}

/// Membership in the class of forests whose components are tripods
/// `S_{i,j,l}` (paths included).
pub fn in_class_s(g: &Graph) -> TripodForestReport {
    let components: Vec<ComponentShape> = g.connected_components().iter().map(|c| classify_component(g, c)).collect();
    let member = components
        .iter()
        .all(|c| matches!(c, ComponentShape::Path { .. } | ComponentShape::Tripod { .. }));
    TripodForestReport { member, components }
}

fn classify_component(g: &Graph, comp: &VertexSet) -> ComponentShape {
    let sub = g.induced_subgraph(comp);
    let h = &sub.graph;
    if h.m() + 1 != h.n() {
        return ComponentShape::Cycle;
    }
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) > 3) {
        return ComponentShape::HighDegree { vertex: sub.new_to_old[v], degree: h.degree(v) };
    }
    let centres: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 3).collect();
    match centres.as_slice() {
        [] => ComponentShape::Path { vertices: h.n() },
        [c] => {
            let mut legs = [0; 3];
            for (slot, start) in legs.iter_mut().zip(h.neighbours(*c).iter()) {
                let (mut prev, mut cur, mut len) = (*c, start, 1);
                while let Some(next) = h.neighbours(cur).iter().find(|&x| x != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                *slot = len;
            }
            legs.sort_unstable_by(|a, b| b.cmp(a));
            ComponentShape::Tripod { centre: sub.new_to_old[*c], legs }
        }
        many => ComponentShape::SeveralCentres { centres: many.iter().map(|&v| sub.new_to_old[v]).collect() },
    }
}

/// Outcome of [`in_z_k`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZkVerdict {
    pub member: bool,
    pub k: usize,
    pub max_degree: usize,
    pub girth: Girth,
    /// `(i, embedding)` when `H_i` was found as an induced subgraph.
    pub h_violation: Option<(usize, Embedding)>,
}

/// Membership in `Z_k`: maximum degree at most 3, no cycle of length at
/// most `k`, and no induced `H_1..H_k` (under the given indexing convention).
pub fn in_z_k(g: &Graph, k: usize, convention: HConvention) -> Result<ZkVerdict> {
    if k < 3 {
        return Err(Error::Precondition(format!("Z_k is defined for k >= 3, got {k}")));
    }
    let max_degree = g.max_degree();
    let girth = g.girth();
    let mut verdict = ZkVerdict { member: false, k, max_degree, girth, h_violation: None };
    if max_degree > 3 || girth <= Girth::Finite(k) {
        return Ok(verdict);
    }
    let family: Vec<Graph> = (1..=k).map(|i| h_graph(i, convention)).collect();
    verdict.h_violation = find_violation(g, &family).map(|v| (v.index + 1, v.embedding));
    verdict.member = verdict.h_violation.is_none();
    Ok(verdict)
}

/// The base graph recovered from an exact Q-graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractedBase {
    pub base: Graph,
    /// `old_ids[i]`: the U-vertex that is base vertex `i`.
    pub old_ids: Vec<usize>,
    /// `new_ids[j]`: the W-vertex standing for the `j`-th base edge in
    /// lexicographic edge order.
    pub new_ids: Vec<usize>,
}

impl ExtractedBase {
    /// Where each vertex of the input lands in `Q(base)` as built by
    /// `q_construct`.
    pub fn q_embedding(&self, n: usize) -> Vec<usize> {
        let mut map = vec![usize::MAX; n];
        for (i, &v) in self.old_ids.iter().enumerate() {
            map[v] = i;
        }
        for (j, &w) in self.new_ids.iter().enumerate() {
            map[w] = self.old_ids.len() + j;
        }
        map
    }
}

/// Reads off `H` with `Q(H) = g` from a nice partition in which every
/// `W`-vertex has exactly two `U`-neighbours.
pub fn extract_base(g: &Graph, p: &NicePartition) -> Result<ExtractedBase> {
    p.validate(g)?;
    let old_ids = p.u.to_vec();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in old_ids.iter().enumerate() {
        index[v] = i;
    }
    let mut by_edge = Vec::new();
    for x in p.w.iter() {
        let up = g.neighbours(x).intersection(&p.u).to_vec();
        if up.len() != 2 {
            return Err(Error::NotExactQGraph(x));
        }
        by_edge.push(((index[up[0]], index[up[1]]), x));
    }
    by_edge.sort_unstable();
    let edges: Vec<(usize, usize)> = by_edge.iter().map(|&(e, _)| e).collect();
    let base = Graph::new(old_ids.len(), &edges)?;
    Ok(ExtractedBase { base, old_ids, new_ids: by_edge.into_iter().map(|(_, x)| x).collect() })
}
