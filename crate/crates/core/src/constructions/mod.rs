//! Constructive inverse domination: standard partitions, independent sets of
//! representatives (ISRs), and the constructions that turn them into a
//! dominating set `T` disjoint from a minimum dominating set `D`.
//!
//! Each construction re-checks the claims its correctness argument relies on
//! while it runs. A failed claim surfaces as
//! [`ConstructionError::InternalContradiction`]; that is either a bug or a
//! violated precondition, never an expected outcome.

use thiserror::Error;

use crate::certificate::CertificateError;
use crate::graph::{Graph, GraphError};
use crate::solvers;
use crate::vertex_set::VertexSet;

mod inverse;
mod isr;
mod optimal;
mod partition;

pub use inverse::{
    bipartite_inverse_construct, expand_to_maximal_bipartite, expand_to_maximal_independent, inddom_construct,
    pad_with_k2, theorem_main_construct,
};
pub use isr::{
    enumerate_isrs, find_isr, find_isr_pair, haxell_condition, max_partial_isr, two_isr_partition, two_partial_isrs,
    HaxellOutcome, IsrPair, PartialIsr,
};
pub use optimal::{
    biglemma_trichotomy, find_special_independent, gamma5_construct, gamma5_construct_traced, gamma5_isr_route,
    lemma41_check, superisrs, Gamma5Route, Lemma41Report, PrivateNeighborShortfall, SuperIsrs, TrichotomyConditions,
    TrichotomyOutcome,
};
pub use partition::{standard_partition, StandardPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("X and Y overlap in {0}")]
    NotDisjoint(VertexSet),
    #[error("vertex {vertex} of Y has no neighbour in X")]
    NotDominated { vertex: usize },
    #[error("seed set {0} is not independent")]
    SeedNotIndependent(VertexSet),
    #[error("graph has isolated vertices {0}")]
    HasIsolates(VertexSet),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("lemma violated: {0}")]
    LemmaViolated(String),
    #[error("constructed certificate failed verification: {0}")]
    Certificate(#[from] CertificateError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn precondition(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::PreconditionViolated(msg.into())
}

pub(crate) fn contradiction(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InternalContradiction(msg.into())
}

pub(crate) fn require_isolate_free(g: &Graph) -> Result<(), ConstructionError> {
    if g.order() == 0 {
        return Err(precondition("the graph has no vertices"));
    }
    let iso = g.isolated_vertices();
    if iso.is_empty() {
        Ok(())
    } else {
        Err(ConstructionError::HasIsolates(iso))
    }
}

/// Checks that `d_set` is a minimum dominating set and returns `γ(G)`.
pub(crate) fn require_minimum_dominating(g: &Graph, d_set: VertexSet) -> Result<usize, ConstructionError> {
    g.check_set(d_set)?;
    if !g.is_dominating(d_set) {
        return Err(precondition(format!("{d_set} is not a dominating set")));
    }
    let (gamma, _) = solvers::gamma(g);
    if d_set.len() != gamma {
        return Err(precondition(format!(
            "{d_set} has {} vertices but the domination number is {gamma}",
            d_set.len()
        )));
    }
    Ok(gamma)
}

/// Lowest-numbered neighbour of `v` outside `d_set`.
pub(crate) fn outside_neighbor(g: &Graph, v: usize, d_set: VertexSet) -> Result<usize, ConstructionError> {
    (g.neighbors(v) - d_set)
        .first()
        .ok_or_else(|| contradiction(format!("vertex {v} of D has no neighbour outside D")))
}

/// `base` plus the lowest outside-`D` neighbour of each vertex of `needy`.
pub(crate) fn add_outside_neighbors(
    g: &Graph,
    base: VertexSet,
    needy: VertexSet,
    d_set: VertexSet,
) -> Result<VertexSet, ConstructionError> {
    needy
        .iter()
        .try_fold(base, |acc, v| Ok(acc.with(outside_neighbor(g, v, d_set)?)))
}
