use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::solvers;
use crate::vertex_set::VertexSet;

/// A dominating set together with the statistics used to rank minimum
/// dominating sets: size, `α(G[D])`, `|E(G[D])|` and the number of isolates
/// of `G[D]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub d_set: VertexSet,
    pub size: usize,
    pub alpha_of_d: usize,
    pub induced_edges: usize,
    pub isolate_count: usize,
}

impl DominationCertificate {
    /// Computes the statistics of `d_set`, which must dominate `g`.
    pub fn new(g: &Graph, d_set: VertexSet) -> Result<Self, CertificateError> {
        if !g.contains_set(d_set) {
            return Err(CertificateError::OutOfRange);
        }
        if !g.is_dominating(d_set) {
            return Err(CertificateError::DNotDominating {
                undominated: g.vertices() - g.closed_neighborhood(d_set),
            });
        }
        Ok(DominationCertificate {
            d_set,
            size: d_set.len(),
            alpha_of_d: solvers::max_independent_within(g, d_set).len(),
            induced_edges: g.induced_edge_count(d_set),
            isolate_count: g.induced_isolates(d_set).len(),
        })
    }

    /// Ranking key: smaller is better. Size first, then larger `α(G[D])`,
    /// then fewer induced edges, then the smaller bitmask.
    pub fn key(&self) -> (usize, std::cmp::Reverse<usize>, usize, VertexSet) {
        (
            self.size,
            std::cmp::Reverse(self.alpha_of_d),
            self.induced_edges,
            self.d_set,
        )
    }

    /// Same as [`key`](Self::key) without the bitmask tie-break.
    pub fn rank(&self) -> (usize, std::cmp::Reverse<usize>, usize) {
        (self.size, std::cmp::Reverse(self.alpha_of_d), self.induced_edges)
    }
}

/// Which bound an [`InverseCertificate`] claims to meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `|T|` equals the exact inverse domination number.
    Exact,
    /// `|T| <= α(G)`.
    Alpha,
    /// `|T| <= 3α(G)/2 - 1`, stored rounded down.
    ThreeHalves,
    /// `|T| <= b(G)`.
    BipartiteB,
    /// `|T| <= α(G) + ⌊(γ(G) - 1)/2⌋`.
    MainTheorem,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Exact => "exact",
            BoundKind::Alpha => "alpha",
            BoundKind::ThreeHalves => "three_halves",
            BoundKind::BipartiteB => "bipartite_b",
            BoundKind::MainTheorem => "main_theorem",
        })
    }
}

/// A minimum dominating set `D` and a disjoint dominating set `T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseCertificate {
    pub d_set: VertexSet,
    pub t_set: VertexSet,
    pub bound_kind: BoundKind,
    pub bound_value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate mentions vertices outside the graph")]
    OutOfRange,
    #[error("D and T share vertices {0}")]
    NotDisjoint(VertexSet),
    #[error("D does not dominate {undominated}")]
    DNotDominating { undominated: VertexSet },
    #[error("T does not dominate {undominated}")]
    TNotDominating { undominated: VertexSet },
    #[error("|T| = {size} exceeds the {kind} bound {bound}")]
    ExceedsBound { size: usize, bound: usize, kind: BoundKind },
    #[error("|D| = {size} but the domination number is {gamma}")]
    DNotMinimum { size: usize, gamma: usize },
}

impl InverseCertificate {
    /// Checks disjointness, that both sets dominate, and `|T| <= bound_value`.
    ///
    /// This uses only adjacency lookups; it does not recompute the bound or
    /// check that `D` is minimum (see [`verify_minimum`](Self::verify_minimum)).
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        if !g.contains_set(self.d_set | self.t_set) {
            return Err(CertificateError::OutOfRange);
        }
        let overlap = self.d_set & self.t_set;
        if !overlap.is_empty() {
            return Err(CertificateError::NotDisjoint(overlap));
        }
        let undominated_by = |s: VertexSet| -> VertexSet {
            g.vertices()
                .iter()
                .filter(|&v| !s.contains(v) && !s.iter().any(|u| g.has_edge(u, v)))
                .collect()
        };
        let missed = undominated_by(self.d_set);
        if !missed.is_empty() {
            return Err(CertificateError::DNotDominating { undominated: missed });
        }
        let missed = undominated_by(self.t_set);
        if !missed.is_empty() {
            return Err(CertificateError::TNotDominating { undominated: missed });
        }
        if self.t_set.len() > self.bound_value {
            return Err(CertificateError::ExceedsBound {
                size: self.t_set.len(),
                bound: self.bound_value,
                kind: self.bound_kind,
            });
        }
        Ok(())
    }

    /// [`verify`](Self::verify) plus `|D| = gamma`.
    pub fn verify_minimum(&self, g: &Graph, gamma: usize) -> Result<(), CertificateError> {
        self.verify(g)?;
        if self.d_set.len() != gamma {
            return Err(CertificateError::DNotMinimum {
                size: self.d_set.len(),
                gamma,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_catches_each_failure() {
        let c4 = Graph::cycle(4);
        let good = InverseCertificate {
            d_set: VertexSet::from([0, 2]),
            t_set: VertexSet::from([1, 3]),
            bound_kind: BoundKind::Alpha,
            bound_value: 2,
        };
        assert_eq!(good.verify(&c4), Ok(()));
        assert_eq!(good.verify_minimum(&c4, 2), Ok(()));

        let overlap = InverseCertificate {
            t_set: VertexSet::from([0, 1]),
            ..good.clone()
        };
        assert!(matches!(overlap.verify(&c4), Err(CertificateError::NotDisjoint(_))));

        let weak = InverseCertificate {
            t_set: VertexSet::from([1]),
            ..good.clone()
        };
        assert!(matches!(weak.verify(&c4), Err(CertificateError::TNotDominating { .. })));

        let tight = InverseCertificate {
            bound_value: 1,
            ..good.clone()
        };
        assert!(matches!(tight.verify(&c4), Err(CertificateError::ExceedsBound { .. })));
        assert!(matches!(
            good.verify_minimum(&c4, 1),
            Err(CertificateError::DNotMinimum { .. })
        ));
    }

    #[test]
    fn domination_certificate_statistics() {
        let p4 = Graph::path(4);
        let cert = DominationCertificate::new(&p4, VertexSet::from([1, 2])).unwrap();
        assert_eq!(
            (cert.size, cert.alpha_of_d, cert.induced_edges, cert.isolate_count),
            (2, 1, 1, 0)
        );
        assert!(DominationCertificate::new(&p4, VertexSet::from([0])).is_err());
    }
}
