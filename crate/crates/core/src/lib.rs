//! Exact domination invariants and certificate-producing inverse domination
//! constructions for graphs with at most 64 vertices.
//!
//! The main entry points are the solvers in [`solvers`] (γ, α, γ⁻¹, b and
//! optimal dominating sets) and the constructions in [`constructions`], each
//! of which returns an [`InverseCertificate`] that can be checked with
//! [`InverseCertificate::verify`].

pub mod certificate;
pub mod constructions;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod solvers;
pub mod vertex_set;

pub use certificate::{BoundKind, CertificateError, DominationCertificate, InverseCertificate};
pub use graph::{Graph, GraphError, OrderedVertexList, MAX_VERTICES};
pub use graph6::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, EdgeListError, Graph6Error};
pub use solvers::SolverError;
pub use vertex_set::VertexSet;
