use super::isr::{max_partial_isr, two_isr_partition, two_partial_isrs};
use super::{
    add_outside_neighbors, contradiction, precondition, require_isolate_free, require_minimum_dominating,
    ConstructionError,
};
use crate::certificate::{BoundKind, InverseCertificate};
use crate::graph::{Graph, GraphError, OrderedVertexList, MAX_VERTICES};
use crate::solvers;
use crate::vertex_set::VertexSet;

/// Greedily grows `seed` (by increasing vertex id) into an independent set
/// that is maximal inside `universe`.
pub fn expand_to_maximal_independent(
    g: &Graph,
    seed: VertexSet,
    universe: VertexSet,
) -> Result<VertexSet, ConstructionError> {
    if !g.is_independent(seed) {
        return Err(ConstructionError::SeedNotIndependent(seed));
    }
    if !seed.is_subset(universe) {
        return Err(precondition(format!("seed {seed} is not inside {universe}")));
    }
    let mut s = seed;
    for v in universe - seed {
        if !g.neighbors(v).intersects(s) {
            s.insert(v);
        }
    }
    Ok(s)
}

/// Greedily grows `seed` into a set that induces a bipartite subgraph and is
/// maximal with that property inside `universe`.
pub fn expand_to_maximal_bipartite(
    g: &Graph,
    seed: VertexSet,
    universe: VertexSet,
) -> Result<VertexSet, ConstructionError> {
    if !g.induces_bipartite(seed) {
        return Err(precondition(format!("seed {seed} does not induce a bipartite graph")));
    }
    if !seed.is_subset(universe) {
        return Err(precondition(format!("seed {seed} is not inside {universe}")));
    }
    let mut b = seed;
    for v in universe - seed {
        if g.induces_bipartite(b.with(v)) {
            b.insert(v);
        }
    }
    Ok(b)
}

fn finish(g: &Graph, cert: InverseCertificate) -> Result<InverseCertificate, ConstructionError> {
    cert.verify(g)?;
    Ok(cert)
}

/// Builds a dominating `T` disjoint from `D` with `|T| <= α(G)` from an
/// independent set `S` such that `S - D` dominates `D - S`.
///
/// `S - D` is grown to a maximal independent set `S1'` of `G - D`; the
/// vertices of `D` it misses (all inside `S ∩ D`) each get their lowest
/// neighbour outside `D`.
pub fn inddom_construct(g: &Graph, d_set: VertexSet, s: VertexSet) -> Result<InverseCertificate, ConstructionError> {
    require_isolate_free(g)?;
    require_minimum_dominating(g, d_set)?;
    g.check_set(s)?;
    if !g.is_independent(s) {
        return Err(precondition(format!("S = {s} is not independent")));
    }
    let s_out = s - d_set;
    let s_in = s & d_set;
    if !g.dominates(s_out, d_set - s) {
        return Err(precondition(format!("S - D = {s_out} does not dominate D - S")));
    }
    let outside = g.vertices() - d_set;
    let s1 = expand_to_maximal_independent(g, s_out, outside)?;
    let s2 = d_set - g.closed_neighborhood(s1);
    if !s2.is_subset(s_in) {
        return Err(contradiction(format!(
            "vertices {} of D - S are not dominated by the expansion {s1}",
            s2 - s_in
        )));
    }
    if !g.is_independent(s1 | s2) {
        return Err(contradiction(format!("{} should be independent", s1 | s2)));
    }
    let t_set = add_outside_neighbors(g, s1, s2, d_set)?;
    let (alpha, _) = solvers::alpha(g);
    finish(
        g,
        InverseCertificate {
            d_set,
            t_set,
            bound_kind: BoundKind::Alpha,
            bound_value: alpha,
        },
    )
}

/// Builds a dominating `T ⊆ V - D` with `|T| <= α(G) + ⌊(γ(G) - 1)/2⌋`.
///
/// Steps: `F` maximal independent in `D`; standard partition of
/// `(V - D) - N(F)` along `D - F`; a largest partial ISR `R` (at least half
/// the cells); `R` grown to a maximal independent `S` in `G - D`; then the
/// lowest outside neighbour of each vertex of `F - N(S)`, and afterwards of
/// each vertex of `D - F` still undominated.
pub fn theorem_main_construct(g: &Graph, d_set: VertexSet) -> Result<InverseCertificate, ConstructionError> {
    require_isolate_free(g)?;
    let gamma = require_minimum_dominating(g, d_set)?;
    let f_set = expand_to_maximal_independent(g, VertexSet::EMPTY, d_set)?;
    let ordering = OrderedVertexList::ascending(d_set - f_set);
    let partition = two_isr_partition(g, d_set, f_set, &ordering)?;
    let n = partition.len();

    let r = max_partial_isr(g, &partition.cells);
    if 2 * r.len() < n {
        return Err(contradiction(format!(
            "largest partial ISR has {} of {n} cells",
            r.len()
        )));
    }
    let outside = g.vertices() - d_set;
    let s = expand_to_maximal_independent(g, r.members(), outside)?;
    let f_prime = f_set - g.open_neighborhood(s);
    let (alpha, _) = solvers::alpha(g);
    if s.len() + f_prime.len() > alpha || !g.is_independent(s | f_prime) {
        return Err(contradiction(format!("S ∪ F' = {} should be independent", s | f_prime)));
    }
    let s1 = add_outside_neighbors(g, s, f_prime, d_set)?;
    let missing = (d_set - f_set) - g.open_neighborhood(s1);
    if 2 * missing.len() > n {
        return Err(contradiction(format!(
            "{} of the {n} vertices of D - F are undominated",
            missing.len()
        )));
    }
    let t_set = add_outside_neighbors(g, s1, missing, d_set)?;
    finish(
        g,
        InverseCertificate {
            d_set,
            t_set,
            bound_kind: BoundKind::MainTheorem,
            bound_value: alpha + gamma.saturating_sub(1) / 2,
        },
    )
}

/// Builds a dominating `T` disjoint from `D` with `|T| <= b(G)`.
///
/// Two partial ISRs `R1`, `R2` of the standard partition of `G - D - N(F)`
/// together induce a bipartite graph and dominate `D - F`. Their union is
/// grown to a maximal bipartite-inducing `B ⊆ V - D`, and every vertex of
/// `F - N(B)` gets its lowest outside neighbour.
pub fn bipartite_inverse_construct(g: &Graph, d_set: VertexSet) -> Result<InverseCertificate, ConstructionError> {
    require_isolate_free(g)?;
    require_minimum_dominating(g, d_set)?;
    let f_set = expand_to_maximal_independent(g, VertexSet::EMPTY, d_set)?;
    let ordering = OrderedVertexList::ascending(d_set - f_set);
    let pair = two_partial_isrs(g, d_set, f_set, &ordering)?;
    let outside = g.vertices() - d_set;
    let b = expand_to_maximal_bipartite(g, pair.union(), outside)?;
    if !g.dominates(b, g.vertices() - f_set) {
        return Err(contradiction(format!("B = {b} does not dominate G - F")));
    }
    let f0 = f_set - g.open_neighborhood(b);
    let (b_value, _) = solvers::max_induced_bipartite(g);
    if !g.induces_bipartite(b | f0) || b.len() + f0.len() > b_value {
        return Err(contradiction(format!(
            "B ∪ F0 = {} should induce a bipartite graph",
            b | f0
        )));
    }
    let t_set = add_outside_neighbors(g, b, f0, d_set)?;
    finish(
        g,
        InverseCertificate {
            d_set,
            t_set,
            bound_kind: BoundKind::BipartiteB,
            bound_value: b_value,
        },
    )
}

/// Disjoint union of `g` with `t` copies of `K2`, appended after the
/// vertices of `g`.
pub fn pad_with_k2(g: &Graph, t: usize) -> Result<Graph, GraphError> {
    let n = g.order() + 2 * t;
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge { n });
    }
    let mut out = g.clone();
    for _ in 0..t {
        out = out.disjoint_union(&Graph::complete(2))?;
    }
    Ok(out)
}
