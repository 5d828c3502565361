//! Reduction constructions with solution lifting, and the small graph
//! families used as boundary examples.
//!
//! Every construction keeps the input's vertex ids and appends new vertices
//! after them, so lifted sets can be compared id by id.

mod certify;
mod families;
mod gadget;
mod qgraph;

pub use certify::{certify_gadget, certify_q, GadgetCertificate, Identity, LiftTrace, QCertificate};
pub use families::{h_graph, tripod, HConvention};
pub use gadget::{gadget_backward, gadget_construct, gadget_forward, GadgetGraph, GadgetRepair};
pub use qgraph::{complete_to_q, q_backward, q_construct, q_forward, subdivide, CompletedQ, QGraph, Subdivision};
