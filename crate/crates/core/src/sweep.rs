//! The eight cross-validation suites, shared by the acceptance tests and
//! `updom sweep`.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog;
use crate::constructions::{certify_gadget, certify_q, complete_to_q, gadget_construct, subdivide};
use crate::corpus;
use crate::dichotomy::{classify_monogenic, dichotomy_consistency, Verdict};
use crate::domination::{
    greedy_minimalize_in_order, is_minimal_dominating, normalize_minimal_dominating, private_neighbours, Oracle,
};
use crate::error::Result;
use crate::graph::{Girth, Graph};
use crate::induced::{contains_induced, verify_embedding};
use crate::recognition::{find_nice_partition, forbidden_set, in_q_star, is_2k2_free, QStarMethod};
use crate::two_k2::{upper_dominating_2k2, verify_triangle_corollary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    /// Largest vertex count for the exhaustive labeled sweeps (criteria 1, 4, 5).
    pub max_n: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 6, seed: 2024 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Number of instances checked.
    pub checked: usize,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
    /// The first few failures, if any.
    pub failures: Vec<String>,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {}: {status} {} ({} instances, {} ms, budget {} ms)",
            self.id, self.name, self.checked, self.elapsed_ms, self.budget_ms
        );
        for f in &self.failures {
            s.push_str("\n    ");
            s.push_str(f);
        }
        s
    }
}

const MAX_REPORTED: usize = 5;

struct Tally {
    checked: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: Vec::new(), failed: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(what());
            }
        }
    }

    /// Records an error as a failure.
    fn attempt<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    fn finish(self, id: u8, name: &'static str, started: Instant, budget: Duration) -> CriterionReport {
        let elapsed = started.elapsed();
        let mut failures = self.failures;
        if self.failed > failures.len() {
            failures.push(format!("... {} failures in total", self.failed));
        }
        if elapsed > budget {
            failures.push(format!("over the time budget of {} ms", budget.as_millis()));
        }
        CriterionReport {
            id,
            name,
            passed: self.failed == 0 && elapsed <= budget,
            checked: self.checked,
            elapsed_ms: elapsed.as_millis(),
            budget_ms: budget.as_millis(),
            failures,
        }
    }
}

fn show(g: &Graph) -> String {
    crate::formats::to_graph6(g)
}

fn rng(config: &SweepConfig, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(config.seed);
    r.set_stream(stream);
    r
}

/// The 2K2-free algorithm agrees with the exhaustive Γ.
pub fn criterion_1(config: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let oracle = Oracle::default();
    let mut t = Tally::new();
    let check = |g: &Graph, t: &mut Tally| {
        let Some(sol) = t.attempt(upper_dominating_2k2(g), || show(g)) else { return };
        let Some(best) = t.attempt(oracle.upper_gamma(g), || show(g)) else { return };
        t.check(sol.size == best.size && sol.witness.len() == sol.size && is_minimal_dominating(g, &sol.witness), || {
            format!("{}: algorithm {} vs exhaustive {}", show(g), sol.size, best.size)
        });
    };
    for g in corpus::labeled_graphs_up_to(config.max_n).filter(is_2k2_free) {
        check(&g, &mut t);
    }
    let mut r = rng(config, 1);
    for _ in 0..200 {
        let n = r.gen_range(7..=12);
        let p = r.gen_range(0.2..0.9);
        let g = corpus::random_2k2_free(&mut r, n, p);
        check(&g, &mut t);
    }
    t.finish(1, "2K2-free algorithm matches exhaustive upper domination", started, Duration::from_secs(120))
}

/// `Γ(Q(G)) = n - γ(G)` with verified lifts on connected graphs.
pub fn criterion_2(_config: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let oracle = Oracle::default();
    let mut t = Tally::new();
    for n in 4..=6 {
        for g in corpus::labeled_graphs(n).filter(Graph::is_connected) {
            let Some(gamma) = t.attempt(oracle.gamma(&g), || show(&g)) else { continue };
            if n - gamma.size < 3 {
                continue;
            }
            let Some(c) = t.attempt(certify_q(&g, &oracle), || show(&g)) else { continue };
            t.check(c.passed(), || {
                format!("{}: gamma {} Gamma_Q {} identity {:?}", show(&g), c.gamma, c.upper_gamma_q, c.identity)
            });
        }
    }
    t.finish(2, "Q-graph identity and lifts", started, Duration::from_secs(300))
}

/// `Γ(G') = α(G) + 2m` for the edge gadget, with verified lifts.
pub fn criterion_3(_config: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let oracle = Oracle::default();
    let mut t = Tally::new();
    for g in corpus::labeled_graphs_up_to(5).filter(|g| g.m() <= 4) {
        let Some(c) = t.attempt(certify_gadget(&g, &oracle), || show(&g)) else { continue };
        t.check(c.passed(), || {
            format!("{}: alpha {} m {} Gamma {} identity {:?}", show(&g), c.alpha, c.m, c.upper_gamma_gadget, c.identity)
        });
    }
    t.finish(3, "edge gadget identity and lifts", started, Duration::from_secs(300))
}

/// Nice partitions and the eleven forbidden graphs describe the same class.
pub fn criterion_4(config: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let check = |g: &Graph, t: &mut Tally| {
        let Some(by_partition) = t.attempt(in_q_star(g, QStarMethod::Partition), || show(g)) else { return };
        let Some(by_forbidden) = t.attempt(in_q_star(g, QStarMethod::Forbidden), || show(g)) else { return };
        t.check(by_partition == by_forbidden, || {
            format!("{}: partition says {by_partition}, forbidden graphs say {by_forbidden}", show(g))
        });
        if by_partition {
            let p = find_nice_partition(g).ok().flatten().expect("member has a nice partition");
            let ok = complete_to_q(g, &p).is_ok_and(|c| verify_embedding(&c.q.graph, g, &c.embedding));
            t.check(ok, || format!("{}: completion to a Q-graph failed", show(g)));
        }
    };
    for g in corpus::labeled_graphs_up_to(config.max_n) {
        check(&g, &mut t);
    }
    let mut r = rng(config, 4);
    for _ in 0..1000 {
        let n = r.gen_range(7..=9);
        let p = r.gen_range(0.3..0.95);
        let g = corpus::random_graph(&mut r, n, p);
        check(&g, &mut t);
    }

    let all = forbidden_set();
    for (i, (name, f)) in all.iter().enumerate() {
        t.check(matches!(find_nice_partition(f), Ok(None)), || format!("{name} has a nice partition"));
        t.check(i < 3 || f.is_cobipartite(), || format!("{name} is not co-bipartite"));
        for v in 0..f.n() {
            let mut keep = f.all_vertices();
            keep.remove(v);
            let sub = f.induced_subgraph(&keep).graph;
            t.check(matches!(find_nice_partition(&sub), Ok(Some(_))), || format!("{name} minus {v} has no nice partition"));
        }
        for (j, (other, h)) in all.iter().enumerate() {
            if i != j {
                t.check(contains_induced(h, f).is_none(), || format!("{name} is inside {other}"));
            }
        }
    }
    let g1 = &all[3].1;
    t.check(contains_induced(&catalog::anticycle(9), g1).is_some(), || "G1 is not inside co-C9".into());
    t.finish(4, "Q* by nice partitions equals Free(N)", started, Duration::from_secs(300))
}

/// Large minimal dominating sets of 2K2-free graphs are triangles plus
/// their anti-neighbourhoods.
pub fn criterion_5(config: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let oracle = Oracle::default();
    let mut t = Tally::new();
    for g in corpus::labeled_graphs_up_to(config.max_n).filter(is_2k2_free) {
        let Some(c) = t.attempt(verify_triangle_corollary(&g, &oracle), || show(&g)) else { continue };
        t.check(c.holds, || format!("{}: counterexample {:?}", show(&g), c.counterexample.map(|s| s.to_vec())));
    }
    t.finish(5, "triangle structure of large minimal dominating sets", started, Duration::from_secs(120))
}

/// Normalization keeps minimality, does not grow the set, and leaves every
/// member with a private neighbour.
pub fn criterion_6(config: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let mut r = rng(config, 6);
    for _ in 0..500 {
        let n = r.gen_range(2..=14);
        let p = r.gen_range(0.0..0.5);
        let g = corpus::random_connected(&mut r, n, p);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut r);
        let d = greedy_minimalize_in_order(&g, &g.all_vertices(), &order);
        let Some(out) = t.attempt(normalize_minimal_dominating(&g, &d), || show(&g)) else { continue };
        let private = out.set.iter().all(|x| private_neighbours(&g, &out.set, x).is_ok_and(|p| !p.is_empty()));
        t.check(is_minimal_dominating(&g, &out.set) && out.set.len() <= d.len() && private, || {
            format!("{}: {:?} normalized to {:?}", show(&g), d.to_vec(), out.set.to_vec())
        });
    }
    t.finish(6, "private-neighbour normalization", started, Duration::from_secs(60))
}

/// Subdivision doubles the girth; gadgets of cubic graphs have degree at
/// most 6 and girth at least 6.
pub fn criterion_7(config: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let mut r = rng(config, 7);
    for _ in 0..100 {
        let n = r.gen_range(3..=12);
        let p = r.gen_range(0.0..0.4);
        let g = corpus::random_cyclic(&mut r, n, p);
        let s = subdivide(&g).graph;
        let doubled = g.girth().finite().map(|k| Girth::Finite(2 * k));
        t.check(Some(s.girth()) == doubled && s.is_bipartite(), || {
            format!("{}: girth {} but subdivision girth {}", show(&g), g.girth(), s.girth())
        });
    }
    for _ in 0..50 {
        let n = 2 * r.gen_range(2..=8);
        let g = corpus::random_cubic(&mut r, n);
        let gg = gadget_construct(&g).graph;
        t.check(gg.max_degree() <= 6 && gg.girth() >= Girth::Finite(6), || {
            format!("{}: gadget degree {} girth {}", show(&g), gg.max_degree(), gg.girth())
        });
    }
    t.finish(7, "girth and degree of the constructions", started, Duration::from_secs(60))
}

/// Golden verdicts for the dichotomy, as `(name, graph, polynomial?)`.
pub fn golden_table() -> Vec<(&'static str, Graph, bool)> {
    let k1 = Graph::empty(1);
    vec![
        ("P4", catalog::path(4), true),
        ("2K2", catalog::two_k2(), true),
        ("P3", catalog::path(3), true),
        ("P5", catalog::path(5), false),
        ("C3", catalog::cycle(3), false),
        ("C6", catalog::cycle(6), false),
        ("claw", catalog::claw(), false),
        ("3K1", Graph::empty(3), false),
        ("P3+K1", catalog::path(3).disjoint_union(&k1), false),
        ("K2+2K1", catalog::complete(2).disjoint_union(&Graph::empty(2)), false),
    ]
}

/// The case analysis agrees with the headline statement on every graph on
/// at most five vertices, and the golden table is reproduced.
pub fn criterion_8(_config: &SweepConfig) -> CriterionReport {
    let started = Instant::now();
    let mut t = Tally::new();
    for g in corpus::labeled_graphs_up_to(5) {
        let ok = dichotomy_consistency(&g).unwrap_or(false);
        t.check(ok, || format!("{}: case analysis disagrees with the headline", show(&g)));
    }
    let classes = corpus::unlabeled_graphs_up_to(5);
    t.check(classes.len() == 52, || format!("expected 52 isomorphism classes, found {}", classes.len()));
    for (name, g, polynomial) in golden_table() {
        let got = classify_monogenic(&g).map(|v| v.verdict == Verdict::PolynomialTime);
        t.check(got.as_ref().is_ok_and(|&p| p == polynomial), || format!("{name}: expected polynomial={polynomial}, got {got:?}"));
    }
    t.finish(8, "monogenic dichotomy", started, Duration::from_secs(30))
}

pub fn run(id: u8, config: &SweepConfig) -> Option<CriterionReport> {
    let f = match id {
        1 => criterion_1,
        2 => criterion_2,
        3 => criterion_3,
        4 => criterion_4,
        5 => criterion_5,
        6 => criterion_6,
        7 => criterion_7,
        8 => criterion_8,
        _ => return None,
    };
    Some(f(config))
}

pub fn run_all(config: &SweepConfig) -> Vec<CriterionReport> {
    (1..=8).filter_map(|id| run(id, config)).collect()
}
