//! Complexity of upper domination on H-free graphs, one forbidden graph H.
//!
//! The classifier walks the case analysis in order (a cycle, then a claw,
//! then the number and lengths of path components) and records which case
//! decided the answer. The headline form of the same statement is: the
//! problem is polynomial exactly when H is an induced subgraph of 2K2 or P4.

use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induced::{contains_induced, verify_embedding, Embedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    PolynomialTime,
    NPHard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    #[serde(rename = "cycle k<=5")]
    ShortCycle,
    #[serde(rename = "cycle k>=6")]
    LongCycle,
    #[serde(rename = "claw")]
    Claw,
    #[serde(rename = "three or more components")]
    ManyComponents,
    #[serde(rename = "two-paths k+t>=5")]
    LongPaths,
    #[serde(rename = "two-paths k+t<=3")]
    ShortPaths,
    #[serde(rename = "H = 2K2")]
    TwoK2,
    #[serde(rename = "H = P4")]
    P4,
    #[serde(rename = "H = P3+K1")]
    P3K1,
}

/// The result that justifies a verdict, named by what it says.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Justification {
    /// Hard on graphs of girth at least 6 and maximum degree 6 (edge gadget).
    Girth6Hardness,
    /// Hard on co-bipartite graphs (Q-graph reduction from domination).
    CobipartiteHardness,
    /// Polynomial on 2K2-free graphs (triangle algorithm).
    TwoK2FreeAlgorithm,
    /// Polynomial on P4-free graphs (bounded clique-width).
    P4FreePolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A shortest cycle of H, in cyclic order.
    Cycle { vertices: Vec<usize> },
    /// Centre first, then the three leaves.
    Claw { embedding: Embedding },
    /// Vertex counts of the path components, largest first.
    Paths { lengths: Vec<usize> },
    /// H sits inside 2K2 or P4 via this map.
    InducedIn { host: &'static str, embedding: Embedding },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub verdict: Verdict,
    pub case: Case,
    pub witness: Witness,
    pub theorem_ref: Justification,
}

fn hard(case: Case, witness: Witness, theorem_ref: Justification) -> ClassVerdict {
    ClassVerdict { verdict: Verdict::NPHard, case, witness, theorem_ref }
}

fn easy(h: &Graph, case: Case, host: &'static str, theorem_ref: Justification) -> Result<ClassVerdict> {
    let host_graph = if host == "2K2" { catalog::two_k2() } else { catalog::path(4) };
    let embedding = contains_induced(&host_graph, h)
        .ok_or_else(|| Error::Invariant(format!("polynomial case without an embedding into {host}")))?;
    Ok(ClassVerdict { verdict: Verdict::PolynomialTime, case, witness: Witness::InducedIn { host, embedding }, theorem_ref })
}

pub fn classify_monogenic(h: &Graph) -> Result<ClassVerdict> {
    if h.n() == 0 {
        return Err(Error::Precondition("H must have at least one vertex".into()));
    }
    if let Some(cycle) = h.shortest_cycle() {
        let (case, by) = if cycle.len() <= 5 {
            (Case::ShortCycle, Justification::Girth6Hardness)
        } else {
            (Case::LongCycle, Justification::CobipartiteHardness)
        };
        return Ok(hard(case, Witness::Cycle { vertices: cycle }, by));
    }
    if let Some(embedding) = contains_induced(h, &catalog::claw()) {
        return Ok(hard(Case::Claw, Witness::Claw { embedding }, Justification::CobipartiteHardness));
    }
    let components = h.connected_components();
    let mut lengths: Vec<usize> = components.iter().map(|c| c.len()).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    if components.iter().any(|c| h.induced_subgraph(c).graph.max_degree() > 2) {
        return Err(Error::Invariant("claw-free forest with a non-path component".into()));
    }
    let paths = Witness::Paths { lengths: lengths.clone() };
    if lengths.len() >= 3 {
        return Ok(hard(Case::ManyComponents, paths, Justification::CobipartiteHardness));
    }
    let k = lengths[0];
    let t = lengths.get(1).copied().unwrap_or(0);
    match (k, t) {
        _ if k + t >= 5 => Ok(hard(Case::LongPaths, paths, Justification::CobipartiteHardness)),
        _ if k + t <= 3 => easy(h, Case::ShortPaths, "P4", Justification::P4FreePolynomial),
        (2, 2) => easy(h, Case::TwoK2, "2K2", Justification::TwoK2FreeAlgorithm),
        (4, 0) => easy(h, Case::P4, "P4", Justification::P4FreePolynomial),
        (3, 1) => Ok(hard(Case::P3K1, paths, Justification::CobipartiteHardness)),
        _ => unreachable!("k >= t and k + t = 4 leave only (2,2), (3,1), (4,0)"),
    }
}

/// The headline condition: H is an induced subgraph of 2K2 or of P4.
pub fn headline_polynomial(h: &Graph) -> bool {
    contains_induced(&catalog::two_k2(), h).is_some() || contains_induced(&catalog::path(4), h).is_some()
}

/// The case analysis and the headline condition agree on `h`, and the
/// recorded witness checks out against `h`.
pub fn dichotomy_consistency(h: &Graph) -> Result<bool> {
    let v = classify_monogenic(h)?;
    let agrees = (v.verdict == Verdict::PolynomialTime) == headline_polynomial(h);
    Ok(agrees && witness_holds(h, &v))
}

/// Checks a verdict's witness against `h` directly.
pub fn witness_holds(h: &Graph, v: &ClassVerdict) -> bool {
    match &v.witness {
        Witness::Cycle { vertices } => {
            let k = vertices.len();
            let cycle = catalog::cycle(k);
            k >= 3 && verify_embedding(h, &cycle, vertices) && (k <= 5) == (v.case == Case::ShortCycle)
        }
        Witness::Claw { embedding } => verify_embedding(h, &catalog::claw(), embedding),
        Witness::Paths { lengths } => {
            let mut actual: Vec<usize> = h.connected_components().iter().map(|c| c.len()).collect();
            actual.sort_unstable_by(|a, b| b.cmp(a));
            h.girth().finite().is_none() && h.max_degree() <= 2 && &actual == lengths
        }
        Witness::InducedIn { host, embedding } => {
            let host_graph = if *host == "2K2" { catalog::two_k2() } else { catalog::path(4) };
            verify_embedding(&host_graph, h, embedding)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(h: &Graph) -> Verdict {
        classify_monogenic(h).unwrap().verdict
    }

    #[test]
    fn worked_examples() {
        let v = classify_monogenic(&catalog::two_k2()).unwrap();
        assert_eq!((v.verdict, v.case, v.theorem_ref), (Verdict::PolynomialTime, Case::TwoK2, Justification::TwoK2FreeAlgorithm));
        let v = classify_monogenic(&catalog::claw()).unwrap();
        assert_eq!((v.verdict, v.theorem_ref), (Verdict::NPHard, Justification::CobipartiteHardness));
        let v = classify_monogenic(&catalog::path(5)).unwrap();
        assert_eq!((v.verdict, v.case), (Verdict::NPHard, Case::LongPaths));
        assert_eq!(verdict(&catalog::path(3)), Verdict::PolynomialTime);
        let v = classify_monogenic(&Graph::empty(3)).unwrap();
        assert_eq!((v.verdict, v.case), (Verdict::NPHard, Case::ManyComponents));
    }

    #[test]
    fn cycles_split_at_six() {
        for k in 3..=5 {
            assert_eq!(classify_monogenic(&catalog::cycle(k)).unwrap().case, Case::ShortCycle);
        }
        assert_eq!(classify_monogenic(&catalog::cycle(6)).unwrap().case, Case::LongCycle);
    }

    #[test]
    fn named_small_graphs_are_consistent() {
        for (name, g) in catalog::small_named() {
            assert!(dichotomy_consistency(&g).unwrap(), "{name}");
        }
        assert!(dichotomy_consistency(&catalog::cycle(6)).unwrap());
        assert!(classify_monogenic(&Graph::empty(0)).is_err());
    }

    #[test]
    fn serialized_case_names() {
        let v = classify_monogenic(&catalog::path(5)).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.starts_with(r#"{"verdict":"NPHard","case":"two-paths k+t>=5""#), "{json}");
    }
}
