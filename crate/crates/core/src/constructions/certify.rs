use serde::Serialize;

use super::gadget::{gadget_backward, gadget_construct, gadget_forward};
use super::qgraph::{q_backward, q_construct, q_forward};
use crate::domination::{is_dominating, is_minimal_dominating, normalize_minimal_dominating, Oracle};
use crate::error::Result;
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Holds,
    Fails,
    /// The identity is only claimed under a guard that the instance misses.
    PreconditionNotMet,
}

/// One application of a lifting map, with the predicate check on its output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftTrace {
    pub input: VertexSet,
    pub output: VertexSet,
    pub expected_size: usize,
    pub verified: bool,
}

/// Exhaustive check of `Γ(Q(G)) = n - γ(G)`, guarded by `Γ(Q(G)) >= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QCertificate {
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    #[serde(rename = "Gamma_Q")]
    pub upper_gamma_q: usize,
    pub identity: Identity,
    /// Normalized minimum dominating set of `G` lifted into `Q(G)`.
    pub forward: Option<LiftTrace>,
    /// Upper dominating set of `Q(G)` lifted back to a dominating set of `G`.
    pub backward: Option<LiftTrace>,
    /// Size after lifting the forward output back again.
    pub round_trip: Option<usize>,
    pub notes: Vec<String>,
}

impl QCertificate {
    /// The identity holds and every lift that ran was verified.
    pub fn passed(&self) -> bool {
        self.identity == Identity::Holds
            && self.forward.as_ref().is_some_and(|t| t.verified)
            && self.backward.as_ref().is_some_and(|t| t.verified)
            && self.round_trip == Some(self.gamma)
    }
}

pub fn certify_q(g: &Graph, oracle: &Oracle) -> Result<QCertificate> {
    let n = g.n();
    let qg = q_construct(g);
    let gamma = oracle.gamma(g)?;
    let top = oracle.upper_gamma(&qg.graph)?;
    let mut cert = QCertificate {
        n,
        m: g.m(),
        gamma: gamma.size,
        upper_gamma_q: top.size,
        identity: Identity::PreconditionNotMet,
        forward: None,
        backward: None,
        round_trip: None,
        notes: Vec::new(),
    };
    if top.size < 3 {
        return Ok(cert);
    }
    cert.identity = if top.size + gamma.size == n { Identity::Holds } else { Identity::Fails };

    let normal = normalize_minimal_dominating(g, &gamma.witness)?;
    if normal.isolated_kept.is_empty() {
        let d = normal.set;
        let out = q_forward(&qg, g, &d)?;
        let verified = out.len() == n - d.len() && is_minimal_dominating(&qg.graph, &out);
        if out.len() >= 3 {
            cert.round_trip = Some(q_backward(&qg, &out)?.len());
        }
        cert.forward = Some(LiftTrace { input: d, output: out, expected_size: n - gamma.size, verified });
    } else {
        cert.notes.push("isolated vertices have no private neighbour; forward lift skipped".into());
    }

    let back = q_backward(&qg, &top.witness)?;
    let verified = back.len() == n - top.size && is_dominating(g, &back);
    cert.backward = Some(LiftTrace { input: top.witness, output: back, expected_size: n - top.size, verified });
    Ok(cert)
}

/// Exhaustive check of `Γ(G') = α(G) + 2m` for the edge gadget `G'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetCertificate {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    #[serde(rename = "Gamma_gadget")]
    pub upper_gamma_gadget: usize,
    pub identity: Identity,
    /// Maximum independent set of `G` lifted into the gadget graph.
    pub forward: LiftTrace,
    /// Upper dominating set of the gadget graph lifted back to `G`.
    pub backward: LiftTrace,
    /// Number of clean edges the backward lift had to repair.
    pub repaired_edges: usize,
}

impl GadgetCertificate {
    pub fn passed(&self) -> bool {
        self.identity == Identity::Holds && self.forward.verified && self.backward.verified
    }
}

pub fn certify_gadget(g: &Graph, oracle: &Oracle) -> Result<GadgetCertificate> {
    let gg = gadget_construct(g);
    let m = g.m();
    let top = oracle.upper_gamma(&gg.graph)?;
    let alpha = oracle.alpha(g)?;
    let identity = if top.size == alpha.size + 2 * m { Identity::Holds } else { Identity::Fails };

    let out = gadget_forward(&gg, g, &alpha.witness)?;
    let verified = out.len() == alpha.size + 2 * m && is_minimal_dominating(&gg.graph, &out);
    let forward = LiftTrace { input: alpha.witness, output: out, expected_size: alpha.size + 2 * m, verified };

    let repair = gadget_backward(&gg, &top.witness)?;
    let expected = top.size.saturating_sub(2 * m);
    let verified = g.is_independent(&repair.independent) && repair.independent.len() >= expected;
    let backward = LiftTrace { input: top.witness, output: repair.independent, expected_size: expected, verified };

    Ok(GadgetCertificate {
        n: g.n(),
        m,
        alpha: alpha.size,
        upper_gamma_gadget: top.size,
        identity,
        forward,
        backward,
        repaired_edges: repair.clean_edges.len(),
    })
}
