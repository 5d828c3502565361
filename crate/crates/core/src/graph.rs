use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A simple undirected graph on the vertices `0..n`.
///
/// Each vertex carries its neighbourhood as a bit row. Graphs are immutable
/// once built: every operation that changes the vertex or edge set returns a
/// new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph and both directions of
/// the relabeling.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `new_to_old[i]` is the host vertex that became vertex `i`.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[v]` is `Some(i)` when host vertex `v` was kept.
    pub old_to_new: Vec<Option<usize>>,
}

impl Graph {
    /// Builds the simple graph on `n` vertices with the given edges.
    /// Duplicate pairs collapse; self-loops and out-of-range ids are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![VertexSet::empty(n); n] }
    }

    /// Builds a graph from neighbour bitmasks (`n <= 64`). Rows must be
    /// symmetric and loop-free.
    pub fn from_masks(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        if n > 64 {
            return Err(Error::Precondition(format!("mask rows need n <= 64, got {n}")));
        }
        let mut edges = Vec::new();
        for (u, &row) in rows.iter().enumerate() {
            for v in crate::set::mask_iter(row) {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::Precondition(format!("asymmetric rows at {u},{v}")));
                }
                if u < v || u == v {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v]`: the neighbourhood of `v` together with `v` itself.
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Neighbour rows as single words. Only valid for `n <= 64`.
    pub fn row_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "row masks need n <= 64");
        self.adj.iter().map(VertexSet::mask).collect()
    }

    /// Rejects vertex sets that were not built for this graph.
    pub fn check(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.n() {
            Ok(())
        } else {
            Err(Error::HostMismatch { expected: self.n(), found: s.universe() })
        }
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, members: I) -> Result<VertexSet> {
        VertexSet::from_members(self.n(), members)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph { adj }
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Induced {
        let new_to_old = s.to_vec();
        let mut old_to_new = vec![None; self.n()];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let k = new_to_old.len();
        let mut graph = Graph::empty(k);
        for (i, &v) in new_to_old.iter().enumerate() {
            for w in self.adj[v].iter() {
                if let Some(j) = old_to_new[w] {
                    graph.adj[i].insert(j);
                }
            }
        }
        Induced { graph, new_to_old, old_to_new }
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.n() + other.n(), &edges).expect("union of valid graphs")
    }

    /// Appends `extra` isolated vertices.
    pub fn with_extra_vertices(&self, extra: usize) -> Graph {
        Graph::new(self.n() + extra, &self.edges()).expect("valid edges stay valid")
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut queue = VecDeque::from([root]);
            seen.insert(root);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for w in self.adj[v].iter() {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Proper 2-colouring as `(colour 0, colour 1)`, each component's smallest
    /// vertex coloured 0; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for w in self.adj[v].iter() {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = VertexSet::empty(n);
        let mut right = VertexSet::empty(n);
        for (v, c) in colour.into_iter().enumerate() {
            if c == Some(false) {
                left.insert(v);
            } else {
                right.insert(v);
            }
        }
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Split into two cliques, when possible (a 2-colouring of the complement).
    pub fn clique_bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        self.complement().bipartition()
    }

    pub fn is_cobipartite(&self) -> bool {
        self.clique_bipartition().is_some()
    }

    pub fn girth(&self) -> Girth {
        match self.shortest_cycle() {
            Some(c) => Girth::Finite(c.len()),
            None => Girth::Infinite,
        }
    }

    /// Vertices of a shortest cycle in cyclic order, or `None` for a forest.
    ///
    /// BFS from every root; a non-tree edge `xy` closes a walk of length
    /// `d(x) + d(y) + 1`. The minimum over all roots is the girth and the
    /// minimizing walk is a simple cycle.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut best: Option<(usize, usize, usize, usize, Vec<Option<usize>>)> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent: Vec<Option<usize>> = vec![None; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            let mut found: Option<(usize, usize, usize)> = None;
            'bfs: while let Some(x) = queue.pop_front() {
                if let Some((len, _, _)) = found {
                    if 2 * dist[x] + 1 >= len {
                        break;
                    }
                }
                for y in self.adj[x].iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = Some(x);
                        queue.push_back(y);
                    } else if parent[x] != Some(y) {
                        let len = dist[x] + dist[y] + 1;
                        if found.is_none_or(|(l, _, _)| len < l) {
                            found = Some((len, x, y));
                        }
                        if dist[y] == dist[x] {
                            // odd cycle through x, y cannot be beaten from this root
                            break 'bfs;
                        }
                    }
                }
            }
            if let Some((len, x, y)) = found {
                if best.as_ref().is_none_or(|b| len < b.0) {
                    best = Some((len, root, x, y, parent));
                }
            }
        }
        let (_, _, x, y, parent) = best?;
        let path_to_root = |mut v: usize| {
            let mut p = vec![v];
            while let Some(u) = parent[v] {
                p.push(u);
                v = u;
            }
            p
        };
        let mut from_x = path_to_root(x);
        let from_y = path_to_root(y);
        from_x.reverse();
        // root .. x, then y .. (up to, not including) root
        from_x.extend_from_slice(&from_y[..from_y.len() - 1]);
        Some(from_x)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn make_graph_examples() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, catalog::complete(3));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, catalog::cycle(4));
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        let dup = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.m(), 1);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(catalog::complete(3).complement(), Graph::empty(3));
        let c5 = catalog::cycle(5);
        let co = c5.complement();
        assert_eq!(co.m(), 5);
        assert!((0..5).all(|v| co.degree(v) == 2));
        assert!(co.is_connected());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(catalog::cycle(5).girth(), Girth::Finite(5));
        assert_eq!(catalog::path(6).girth(), Girth::Infinite);
        assert_eq!(catalog::complete(4).girth(), Girth::Finite(3));
        assert_eq!(catalog::cycle(4).disjoint_union(&catalog::cycle(3)).girth(), Girth::Finite(3));
        let cyc = catalog::petersen().shortest_cycle().unwrap();
        assert_eq!(cyc.len(), 5);
        let p = catalog::petersen();
        for i in 0..5 {
            assert!(p.has_edge(cyc[i], cyc[(i + 1) % 5]));
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let c4 = catalog::cycle(4);
        let sub = c4.induced_subgraph(&c4.vertex_set([0, 1, 2]).unwrap());
        assert_eq!(sub.graph, catalog::path(3));
        assert_eq!(sub.old_to_new, vec![Some(0), Some(1), Some(2), None]);
        let empty = c4.induced_subgraph(&VertexSet::empty(4));
        assert_eq!(empty.graph.n(), 0);
        let k5 = catalog::complete(5);
        let tri = k5.induced_subgraph(&k5.vertex_set([0, 2, 4]).unwrap());
        assert_eq!(tri.graph, catalog::complete(3));
    }

    #[test]
    fn components_examples() {
        let two_k2 = catalog::two_k2();
        let comps = two_k2.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert_eq!(catalog::cycle(5).connected_components().len(), 1);
        assert_eq!(Graph::empty(3).connected_components().len(), 3);
    }

    #[test]
    fn bipartite_and_cobipartite() {
        assert!(catalog::complete(5).is_cobipartite());
        assert!(!Graph::empty(3).is_cobipartite());
        assert!(catalog::cycle(6).is_bipartite());
        assert!(!catalog::cycle(5).is_bipartite());
        let (a, b) = catalog::prism().clique_bipartition().unwrap();
        let prism = catalog::prism();
        assert!(prism.is_clique(&a) && prism.is_clique(&b));
        assert_eq!(catalog::star(3).max_degree(), 3);
    }
}
