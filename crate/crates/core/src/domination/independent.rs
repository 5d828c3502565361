use crate::graph::Graph;
use crate::set::VertexSet;

/// All maximal independent sets of `g`, sorted lexicographically.
///
/// These are the maximal cliques of the complement, found with pivoting
/// Bron–Kerbosch recursion. The run time is polynomial per output set, so on
/// classes with polynomially many maximal independent sets (2K2-free graphs
/// among them) the whole enumeration is polynomial.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    if n == 0 {
        return vec![VertexSet::empty(0)];
    }
    let co = g.complement();
    let mut out = Vec::new();
    expand(&co, VertexSet::empty(n), VertexSet::full(n), VertexSet::empty(n), &mut out);
    out.sort();
    out
}

/// A maximum independent set: the lexicographically smallest largest
/// maximal independent set.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximal_independent_sets(g)
        .into_iter()
        .fold(None::<VertexSet>, |best, s| match best {
            Some(b) if b.len() >= s.len() => Some(b),
            _ => Some(s),
        })
        .expect("every graph has a maximal independent set")
}

fn expand(co: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| co.neighbours(u).intersection(&p).len())
        .expect("p is non-empty");
    let todo = p.difference(co.neighbours(pivot));
    for v in todo.iter() {
        let row = co.neighbours(v);
        let mut next_r = r.clone();
        next_r.insert(v);
        expand(co, next_r, p.intersection(row), x.intersection(row), out);
        p.remove(v);
        x.insert(v);
    }
}
