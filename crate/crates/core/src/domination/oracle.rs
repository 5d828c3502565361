use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{mask_iter, VertexSet};

/// Largest instance the exhaustive oracles accept unless configured otherwise.
pub const DEFAULT_CAP: usize = 24;

/// A value together with a set that attains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnessed {
    pub size: usize,
    pub witness: VertexSet,
}

/// α, γ and Γ of one graph with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub alpha: Witnessed,
    pub gamma: Witnessed,
    #[serde(rename = "Gamma")]
    pub upper_gamma: Witnessed,
}

/// Exact exponential-time searches over vertex subsets.
///
/// Every search refuses instances above `cap` vertices instead of
/// truncating. The cap can never exceed 64 because subsets are single words.
///
/// Witness tie-breaking: α and Γ return the lexicographically smallest
/// optimal set, γ the lexicographically smallest among minimum sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

struct Masks {
    n: usize,
    closed: Vec<u64>,
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap: cap.min(64) }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn masks(&self, g: &Graph) -> Result<Masks> {
        if g.n() > self.cap {
            return Err(Error::CapExceeded { n: g.n(), cap: self.cap });
        }
        let closed = g.row_masks().into_iter().enumerate().map(|(v, row)| row | 1 << v).collect();
        Ok(Masks { n: g.n(), closed })
    }

    /// Independence number α(G).
    pub fn alpha(&self, g: &Graph) -> Result<Witnessed> {
        let m = self.masks(g)?;
        let mut best = (0usize, 0u64);
        let all = full_mask(m.n);
        alpha_search(&m, 0, 0, all, &mut best);
        Ok(Witnessed { size: best.0, witness: VertexSet::from_mask(m.n, best.1) })
    }

    /// Domination number γ(G): combinations of increasing size, each size in
    /// lexicographic order, first dominating one wins.
    pub fn gamma(&self, g: &Graph) -> Result<Witnessed> {
        let m = self.masks(g)?;
        let all = full_mask(m.n);
        for k in 0..=m.n {
            let mut chosen = Vec::with_capacity(k);
            if let Some(mask) = first_dominating_combination(&m, all, k, 0, 0, &mut chosen) {
                return Ok(Witnessed { size: k, witness: VertexSet::from_mask(m.n, mask) });
            }
        }
        unreachable!("the whole vertex set dominates")
    }

    /// Upper domination number Γ(G): the largest minimal dominating set.
    pub fn upper_gamma(&self, g: &Graph) -> Result<Witnessed> {
        let m = self.masks(g)?;
        let mut best = Largest(None);
        Irredundant::new(&m).run(0, &mut best);
        let (size, mask) = best.0.expect("some minimal dominating set exists");
        Ok(Witnessed { size, witness: VertexSet::from_mask(m.n, mask) })
    }

    /// Calls `visit` once for every minimal dominating set of `g`.
    pub fn for_each_minimal_dominating(&self, g: &Graph, mut visit: impl FnMut(VertexSet)) -> Result<()> {
        let m = self.masks(g)?;
        let n = m.n;
        let mut all = Every(|mask| visit(VertexSet::from_mask(n, mask)));
        Irredundant::new(&m).run(0, &mut all);
        Ok(())
    }

    /// Every minimal dominating set of `g`, sorted lexicographically.
    pub fn minimal_dominating_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        self.for_each_minimal_dominating(g, |s| out.push(s))?;
        out.sort();
        Ok(out)
    }

    pub fn report(&self, g: &Graph) -> Result<InvariantReport> {
        Ok(InvariantReport { alpha: self.alpha(g)?, gamma: self.gamma(g)?, upper_gamma: self.upper_gamma(g)? })
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Include-first branching over candidates in increasing id order, so the
/// first optimum met is the lexicographically smallest one.
fn alpha_search(m: &Masks, size: usize, chosen: u64, cand: u64, best: &mut (usize, u64)) {
    if cand == 0 {
        if size > best.0 {
            *best = (size, chosen);
        }
        return;
    }
    if size + cand.count_ones() as usize <= best.0 {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    alpha_search(m, size + 1, chosen | 1 << v, cand & !m.closed[v], best);
    alpha_search(m, size, chosen, cand & !(1 << v), best);
}

fn first_dominating_combination(
    m: &Masks,
    all: u64,
    k: usize,
    start: usize,
    chosen: u64,
    picks: &mut Vec<usize>,
) -> Option<u64> {
    if picks.len() == k {
        let covered = picks.iter().fold(0u64, |acc, &v| acc | m.closed[v]);
        return (covered == all).then_some(chosen);
    }
    let remaining = k - picks.len();
    for v in start..=m.n.saturating_sub(remaining) {
        if v >= m.n {
            break;
        }
        picks.push(v);
        let hit = first_dominating_combination(m, all, k, v + 1, chosen | 1 << v, picks);
        picks.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Depth-first search over irredundant sets.
///
/// A set is minimal dominating iff it dominates and is irredundant (each
/// member has a vertex in its closed neighbourhood dominated by it alone).
/// Irredundance is inherited by subsets, so branches that break it are cut;
/// branches that leave a vertex with no remaining possible dominator are cut
/// as well.
struct Irredundant<'a> {
    m: &'a Masks,
    count: [u8; 64],
    chosen: u64,
    size: usize,
}

impl<'a> Irredundant<'a> {
    fn new(m: &'a Masks) -> Self {
        Irredundant { m, count: [0; 64], chosen: 0, size: 0 }
    }

    fn undominated(&self) -> u64 {
        (0..self.m.n).filter(|&w| self.count[w] == 0).fold(0, |acc, w| acc | 1 << w)
    }

    fn irredundant(&self) -> bool {
        let once = (0..self.m.n).filter(|&w| self.count[w] == 1).fold(0u64, |acc, w| acc | 1 << w);
        mask_iter(self.chosen).all(|x| self.m.closed[x] & once != 0)
    }

    fn run(&mut self, next: usize, sink: &mut dyn Sink) {
        let n = self.m.n;
        if sink.prune(self.size + (n - next)) {
            return;
        }
        let future = full_mask(n) & !full_mask(next);
        let open = self.undominated();
        if mask_iter(open).any(|w| self.m.closed[w] & future == 0) {
            return;
        }
        if next == n {
            sink.found(self.size, self.chosen);
            return;
        }
        let v = next;
        for w in mask_iter(self.m.closed[v]) {
            self.count[w] += 1;
        }
        self.chosen |= 1 << v;
        self.size += 1;
        if self.irredundant() {
            self.run(next + 1, sink);
        }
        self.size -= 1;
        self.chosen &= !(1 << v);
        for w in mask_iter(self.m.closed[v]) {
            self.count[w] -= 1;
        }
        self.run(next + 1, sink);
    }
}

trait Sink {
    fn found(&mut self, size: usize, mask: u64);
    /// True when no set of at most `bound` vertices is of interest.
    fn prune(&self, bound: usize) -> bool;
}

/// Keeps the first strictly largest set.
struct Largest(Option<(usize, u64)>);

impl Sink for Largest {
    fn found(&mut self, size: usize, mask: u64) {
        if self.0.is_none_or(|(b, _)| size > b) {
            self.0 = Some((size, mask));
        }
    }

    fn prune(&self, bound: usize) -> bool {
        self.0.is_some_and(|(b, _)| bound <= b)
    }
}

struct Every<F>(F);

impl<F: FnMut(u64)> Sink for Every<F> {
    fn found(&mut self, _: usize, mask: u64) {
        (self.0)(mask)
    }

    fn prune(&self, _: usize) -> bool {
        false
    }
}
