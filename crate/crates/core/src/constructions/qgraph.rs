use crate::domination::{is_dominating, is_minimal_dominating, private_neighbours};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{extract_base, NicePartition};
use crate::set::VertexSet;

/// The incidence graph `S(G)`. Old vertices keep their ids; the vertex of
/// the `j`-th edge (lexicographic order) is `base_n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    pub base_n: usize,
    pub edge_of: Vec<(usize, usize)>,
}

/// `S(G)` with a clique on the old vertices and a clique on the new ones,
/// laid out as in [`Subdivision`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGraph {
    pub graph: Graph,
    pub base_n: usize,
    pub old: VertexSet,
    pub new: VertexSet,
    pub edge_of: Vec<(usize, usize)>,
}

impl QGraph {
    /// The new vertex standing for base edge `(u, v)`.
    pub fn vertex_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edge_of.binary_search(&key).ok().map(|j| self.base_n + j)
    }
}

fn incidence_edges(g: &Graph) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let edge_of = g.edges();
    let mut out = Vec::with_capacity(2 * edge_of.len());
    for (j, &(u, v)) in edge_of.iter().enumerate() {
        out.extend([(u, g.n() + j), (v, g.n() + j)]);
    }
    (edge_of, out)
}

pub fn subdivide(g: &Graph) -> Subdivision {
    let (edge_of, edges) = incidence_edges(g);
    let graph = Graph::new(g.n() + edge_of.len(), &edges).expect("subdivision ids are in range");
    Subdivision { graph, base_n: g.n(), edge_of }
}

pub fn q_construct(g: &Graph) -> QGraph {
    let n = g.n();
    let (edge_of, mut edges) = incidence_edges(g);
    let total = n + edge_of.len();
    for a in 0..total {
        let same_side = if a < n { a + 1..n } else { a + 1..total };
        edges.extend(same_side.map(|b| (a, b)));
    }
    let graph = Graph::new(total, &edges).expect("Q-graph ids are in range");
    let old = VertexSet::from_members(total, 0..n).expect("in range");
    let new = old.complement();
    QGraph { graph, base_n: n, old, new, edge_of }
}

/// Lifts a dominating set `d` of the base graph in which every member has
/// a private neighbour outside `d` to a minimal dominating set of `Q(G)` of
/// size `n - |d|`: for each `u` outside `d`, the edge to its smallest
/// neighbour in `d`.
pub fn q_forward(qg: &QGraph, base: &Graph, d: &VertexSet) -> Result<VertexSet> {
    base.check(d)?;
    if base.n() != qg.base_n || base.edges() != qg.edge_of {
        return Err(Error::Precondition("base graph does not match the Q-graph".into()));
    }
    if !is_dominating(base, d) {
        return Err(Error::Precondition("set does not dominate the base graph".into()));
    }
    for x in d.iter() {
        if private_neighbours(base, d, x)?.is_empty() {
            return Err(Error::Precondition(format!(
                "vertex {x} has no private neighbour outside the set; normalize it first"
            )));
        }
    }
    let mut out = VertexSet::empty(qg.graph.n());
    for u in d.complement().iter() {
        let w = base.neighbours(u).intersection(d).first().expect("d dominates u");
        out.insert(qg.vertex_of_edge(u, w).expect("uw is a base edge"));
    }
    if out.len() != base.n() - d.len() || !is_minimal_dominating(&qg.graph, &out) {
        return Err(Error::Invariant("Q forward lift is not a minimal dominating set of size n - |d|".into()));
    }
    Ok(out)
}

/// Lifts a minimal dominating set of `Q(G)` with at least three vertices
/// to a dominating set of the base graph of size `n - |d|`.
///
/// If `d` lies among the old vertices the answer is their complement. If it
/// lies among the new vertices, its edges form a spanning forest of stars
/// and the answer is the set of star centres (the lower end of a lone edge).
pub fn q_backward(qg: &QGraph, d: &VertexSet) -> Result<VertexSet> {
    let n = qg.base_n;
    qg.graph.check(d)?;
    if !is_minimal_dominating(&qg.graph, d) {
        return Err(Error::NotMinimalDominating);
    }
    if d.len() < 3 {
        return Err(Error::Precondition(format!("Q backward lift needs at least 3 vertices, got {}", d.len())));
    }
    let base = Graph::new(n, &qg.edge_of)?;
    let out = if d.is_subset(&qg.old) {
        VertexSet::from_members(n, (0..n).filter(|&v| !d.contains(v)))?
    } else if d.is_subset(&qg.new) {
        let chosen: Vec<(usize, usize)> = d.iter().map(|x| qg.edge_of[x - n]).collect();
        star_centres(n, &chosen)?
    } else {
        return Err(Error::Invariant("minimal dominating set of size >= 3 meets both cliques".into()));
    };
    if out.len() != n - d.len() || !is_dominating(&base, &out) {
        return Err(Error::Invariant("Q backward lift is not a dominating set of size n - |d|".into()));
    }
    Ok(out)
}

fn star_centres(n: usize, chosen: &[(usize, usize)]) -> Result<VertexSet> {
    let forest = Graph::new(n, chosen)?;
    let components = forest.connected_components();
    if forest.m() + components.len() != n || components.iter().any(|c| c.len() < 2) {
        return Err(Error::Invariant("selected edges do not form a spanning forest".into()));
    }
    let mut centres = VertexSet::empty(n);
    for comp in &components {
        let hubs: Vec<usize> = comp.iter().filter(|&v| forest.degree(v) > 1).collect();
        match hubs.as_slice() {
            [] => centres.insert(comp.first().expect("non-empty")),
            [c] => centres.insert(*c),
            _ => return Err(Error::Invariant("selected edges contain an induced P4".into())),
        };
    }
    Ok(centres)
}

/// Output of [`complete_to_q`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletedQ {
    pub base: Graph,
    pub q: QGraph,
    /// `embedding[v]`: where vertex `v` of the input sits in `q.graph`.
    pub embedding: Vec<usize>,
    /// Number of vertices appended to `U`.
    pub added: usize,
}

/// Embeds a nicely partitioned graph into a Q-graph.
///
/// `W`-vertices with fewer than two `U`-neighbours get fresh `U`-vertices
/// (in increasing id order) until they have exactly two; the result is an
/// exact Q-graph whose base is read off by `extract_base`.
pub fn complete_to_q(g: &Graph, p: &NicePartition) -> Result<CompletedQ> {
    p.validate(g)?;
    let n = g.n();
    let mut edges = g.edges();
    let mut fresh = Vec::new();
    for x in p.w.iter() {
        let have = g.neighbours(x).intersection(&p.u).len();
        for _ in have..2 {
            let f = n + fresh.len();
            edges.push((x, f));
            fresh.push(f);
        }
    }
    let mut u_all: Vec<usize> = p.u.iter().collect();
    u_all.extend(&fresh);
    for (i, &a) in u_all.iter().enumerate() {
        edges.extend(u_all[i + 1..].iter().map(|&b| (a, b)));
    }
    let total = n + fresh.len();
    let extended = Graph::new(total, &edges)?;
    let partition = NicePartition {
        u: VertexSet::from_members(total, u_all)?,
        w: VertexSet::from_members(total, p.w.iter())?,
    };
    let ex = extract_base(&extended, &partition)?;
    let q = q_construct(&ex.base);
    let full = ex.q_embedding(total);
    let embedding = full[..n].to_vec();
    Ok(CompletedQ { base: ex.base, q, embedding, added: fresh.len() })
}
