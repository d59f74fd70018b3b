//! Exact solvers for the invariants γ, α, γ⁻¹ (and its strong variant) and
//! b, plus enumeration of minimum and optimal dominating sets.
//!
//! Everything here is branch and bound over bitsets. Enumerations run in
//! increasing bitmask order so certificates are reproducible.

use thiserror::Error;

use crate::certificate::{BoundKind, DominationCertificate, InverseCertificate};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("A graph with isolates cannot have an inverse dominating set (isolated: {0})")]
    HasIsolates(VertexSet),
}

fn require_isolate_free(g: &Graph) -> Result<(), SolverError> {
    let iso = g.isolated_vertices();
    if iso.is_empty() {
        Ok(())
    } else {
        Err(SolverError::HasIsolates(iso))
    }
}

// ---------------------------------------------------------------------------
// Independent sets

/// A maximum independent set of `G[allowed]`.
pub fn max_independent_within(g: &Graph, allowed: VertexSet) -> VertexSet {
    let allowed = allowed & g.vertices();
    let mut best = greedy_independent(g, allowed);
    mis_branch(g, allowed, VertexSet::EMPTY, &mut best);
    best
}

/// `α(G)` with a witness.
pub fn alpha(g: &Graph) -> (usize, VertexSet) {
    let s = max_independent_within(g, g.vertices());
    (s.len(), s)
}

fn greedy_independent(g: &Graph, mut cand: VertexSet) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    while !cand.is_empty() {
        let v = min_degree_vertex(g, cand);
        s.insert(v);
        cand -= g.neighbors(v).with(v);
    }
    s
}

fn min_degree_vertex(g: &Graph, cand: VertexSet) -> usize {
    cand.iter()
        .min_by_key(|&v| (g.neighbors(v) & cand).len())
        .expect("nonempty candidate set")
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of `G[cand]`.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut cliques = 0;
    while let Some(u) = cand.first() {
        let mut clique = VertexSet::singleton(u);
        let mut ext = g.neighbors(u) & cand;
        while let Some(w) = ext.first() {
            clique.insert(w);
            ext &= g.neighbors(w);
        }
        cand -= clique;
        cliques += 1;
    }
    cliques
}

fn mis_branch(g: &Graph, mut cand: VertexSet, mut cur: VertexSet, best: &mut VertexSet) {
    loop {
        if cand.is_empty() {
            if cur.len() > best.len() {
                *best = cur;
            }
            return;
        }
        if cur.len() + cand.len() <= best.len() {
            return;
        }
        // A vertex of degree at most one in G[cand] belongs to some maximum
        // independent set of G[cand]; take it without branching.
        let v = min_degree_vertex(g, cand);
        if (g.neighbors(v) & cand).len() <= 1 {
            cur.insert(v);
            cand -= g.neighbors(v).with(v);
            continue;
        }
        break;
    }
    if cur.len() + clique_cover_bound(g, cand) <= best.len() {
        return;
    }
    let v = cand
        .iter()
        .max_by_key(|&v| ((g.neighbors(v) & cand).len(), std::cmp::Reverse(v)))
        .expect("nonempty");
    mis_branch(g, cand - g.neighbors(v).with(v), cur.with(v), best);
    mis_branch(g, cand.without(v), cur, best);
}

// ---------------------------------------------------------------------------
// Dominating sets

/// A smallest set `S ⊆ allowed` with `target ⊆ N[S]`, or `None` when
/// `allowed` cannot dominate `target`.
pub fn min_dominating_set(g: &Graph, target: VertexSet, allowed: VertexSet) -> Option<VertexSet> {
    let target = target & g.vertices();
    let allowed = allowed & g.vertices();
    if !g.dominates(allowed, target) {
        return None;
    }
    let mut best = greedy_dominating(g, target, allowed);
    mds_branch(g, target, allowed, VertexSet::EMPTY, &mut best);
    Some(best)
}

fn greedy_dominating(g: &Graph, mut target: VertexSet, allowed: VertexSet) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    while !target.is_empty() {
        let w = allowed
            .iter()
            .max_by_key(|&w| ((g.neighbors(w).with(w) & target).len(), std::cmp::Reverse(w)))
            .expect("allowed dominates target");
        s.insert(w);
        target -= g.neighbors(w).with(w);
    }
    s
}

/// The largest number of `target` vertices any single allowed vertex covers.
fn max_cover(g: &Graph, target: VertexSet, allowed: VertexSet) -> usize {
    allowed
        .iter()
        .map(|w| (g.neighbors(w).with(w) & target).len())
        .max()
        .unwrap_or(0)
}

/// Lower bound on the number of allowed vertices needed to dominate `target`.
fn cover_lower_bound(g: &Graph, target: VertexSet, allowed: VertexSet) -> Option<usize> {
    if target.is_empty() {
        return Some(0);
    }
    match max_cover(g, target, allowed) {
        0 => None,
        c => Some(target.len().div_ceil(c)),
    }
}

/// Undominated vertex with the fewest allowed dominators, and those dominators.
fn pick_branch_vertex(g: &Graph, target: VertexSet, allowed: VertexSet) -> (usize, VertexSet) {
    target
        .iter()
        .map(|u| (u, g.neighbors(u).with(u) & allowed))
        .min_by_key(|&(u, opts)| (opts.len(), u))
        .expect("nonempty target")
}

fn mds_branch(g: &Graph, target: VertexSet, mut allowed: VertexSet, cur: VertexSet, best: &mut VertexSet) {
    if target.is_empty() {
        if cur.len() < best.len() {
            *best = cur;
        }
        return;
    }
    match cover_lower_bound(g, target, allowed) {
        Some(lb) if cur.len() + lb < best.len() => {}
        _ => return,
    }
    let (_, opts) = pick_branch_vertex(g, target, allowed);
    let mut opts: Vec<usize> = opts.to_vec();
    opts.sort_by_key(|&w| std::cmp::Reverse((g.neighbors(w).with(w) & target).len()));
    for w in opts {
        mds_branch(
            g,
            target - g.neighbors(w).with(w),
            allowed.without(w),
            cur.with(w),
            best,
        );
        // Later branches never use w, so every set is reached at most once.
        allowed.remove(w);
    }
}

/// `γ(G)` with a witness.
pub fn gamma(g: &Graph) -> (usize, VertexSet) {
    let d = min_dominating_set(g, g.vertices(), g.vertices()).expect("V dominates itself");
    (d.len(), d)
}

/// Smallest dominating set of `g` contained in `allowed`.
pub fn min_dominating_within(g: &Graph, allowed: VertexSet) -> Option<(usize, VertexSet)> {
    min_dominating_set(g, g.vertices(), allowed).map(|d| (d.len(), d))
}

/// With `k = γ(G)`: every minimum dominating set, in increasing bitmask order.
/// Branches on the dominators of one undominated vertex at a time and drops
/// each dominator from later branches, so no set is produced twice.
fn dominating_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    fn rec(g: &Graph, target: VertexSet, mut allowed: VertexSet, cur: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
        if target.is_empty() {
            out.push(cur);
            return;
        }
        match cover_lower_bound(g, target, allowed) {
            Some(lb) if cur.len() + lb <= k => {}
            _ => return,
        }
        let (_, opts) = pick_branch_vertex(g, target, allowed);
        for w in opts {
            rec(
                g,
                target - g.neighbors(w).with(w),
                allowed.without(w),
                cur.with(w),
                k,
                out,
            );
            allowed.remove(w);
        }
    }
    let mut out = Vec::new();
    rec(g, g.vertices(), g.vertices(), VertexSet::EMPTY, k, &mut out);
    out.sort_unstable();
    out
}

/// All dominating sets of size `γ(G)`, each once, in increasing bitmask order.
pub fn enumerate_min_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    let (k, _) = gamma(g);
    let sets = dominating_sets_of_size(g, k);
    debug_assert!(sets.iter().all(|d| d.len() == k && g.is_dominating(*d)));
    sets
}

/// Smallest dominating set disjoint from `d_set`: the inverse domination
/// number relative to one particular `D`.
pub fn inverse_domination_of(g: &Graph, d_set: VertexSet) -> Option<(usize, VertexSet)> {
    min_dominating_within(g, g.vertices() - d_set)
}

/// `γ⁻¹(G)`: the minimum over minimum dominating sets `D` of the smallest
/// dominating set inside `V - D`. The certificate uses the first `D` (in
/// bitmask order) attaining the minimum.
pub fn inverse_gamma(g: &Graph) -> Result<(usize, InverseCertificate), SolverError> {
    require_isolate_free(g)?;
    let (gamma, _) = gamma(g);
    let mut best: Option<(VertexSet, VertexSet)> = None;
    for d in dominating_sets_of_size(g, gamma) {
        let allowed = g.vertices() - d;
        let found = match best {
            // Only a strictly smaller T improves on the incumbent.
            Some((_, t)) => min_dominating_below(g, allowed, t.len()),
            None => min_dominating_set(g, g.vertices(), allowed),
        };
        if let Some(t) = found {
            let done = t.len() == gamma;
            best = Some((d, t));
            if done {
                break;
            }
        }
    }
    let (d_set, t_set) = best.expect("complement of a minimum dominating set dominates an isolate-free graph");
    Ok((
        t_set.len(),
        InverseCertificate {
            d_set,
            t_set,
            bound_kind: BoundKind::Exact,
            bound_value: t_set.len(),
        },
    ))
}

/// Smallest dominating set inside `allowed` with fewer than `limit` vertices.
fn min_dominating_below(g: &Graph, allowed: VertexSet, limit: usize) -> Option<VertexSet> {
    if limit == 0 || !g.is_dominating(allowed) {
        return None;
    }
    // Sentinel incumbent of size `limit` that the search must beat.
    let sentinel = VertexSet::full(limit.min(64));
    let mut best = sentinel;
    mds_branch(g, g.vertices(), allowed, VertexSet::EMPTY, &mut best);
    (best.len() < limit).then_some(best)
}

/// The strong variant: the maximum over minimum dominating sets `D` of the
/// smallest dominating set inside `V - D`.
pub fn strong_inverse_gamma(g: &Graph) -> Result<usize, SolverError> {
    require_isolate_free(g)?;
    Ok(enumerate_min_dominating_sets(g)
        .into_iter()
        .map(|d| {
            inverse_domination_of(g, d)
                .expect("complement of a minimum dominating set dominates an isolate-free graph")
                .0
        })
        .max()
        .unwrap_or(0))
}

/// Minimum dominating set maximising `α(G[D])`, then minimising `|E(G[D])|`,
/// then the bitmask.
pub fn optimal_dominating_set(g: &Graph) -> DominationCertificate {
    enumerate_min_dominating_sets(g)
        .into_iter()
        .map(|d| DominationCertificate::new(g, d).expect("enumerated sets dominate"))
        .min_by_key(DominationCertificate::key)
        .expect("every graph has a minimum dominating set")
}

// ---------------------------------------------------------------------------
// Induced bipartite subgraphs

/// `b(G)`: the order of a largest induced bipartite subgraph, with a witness.
pub fn max_induced_bipartite(g: &Graph) -> (usize, VertexSet) {
    let mut order: Vec<usize> = g.vertices().to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = max_independent_within(g, g.vertices());
    bip_branch(g, &order, VertexSet::EMPTY, VertexSet::EMPTY, &mut best);
    debug_assert!(g.induces_bipartite(best));
    (best.len(), best)
}

/// Places each vertex on side A, side B, or outside, keeping both sides
/// independent; a complete placement is a 2-colouring of the chosen set.
fn bip_branch(g: &Graph, order: &[usize], a: VertexSet, b: VertexSet, best: &mut VertexSet) {
    let Some((&v, rest)) = order.split_first() else {
        if (a | b).len() > best.len() {
            *best = a | b;
        }
        return;
    };
    if (a | b).len() + order.len() <= best.len() {
        return;
    }
    let nv = g.neighbors(v);
    if !nv.intersects(a) {
        bip_branch(g, rest, a.with(v), b, best);
    }
    // With both sides empty the two colours are interchangeable.
    if !nv.intersects(b) && !a.is_empty() {
        bip_branch(g, rest, a, b.with(v), best);
    }
    bip_branch(g, rest, a, b, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<const N: usize>(v: [usize; N]) -> VertexSet {
        VertexSet::from(v)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&Graph::complete(5)).0, 1);
        assert_eq!(alpha(&Graph::cycle(5)).0, 2);
        assert_eq!(alpha(&Graph::empty(6).unwrap()).0, 6);
        let (a, w) = alpha(&Graph::cycle(7));
        assert_eq!(a, 3);
        assert!(Graph::cycle(7).is_independent(w));
    }

    #[test]
    fn gamma_examples() {
        for n in 1..7 {
            assert_eq!(gamma(&Graph::complete(n)).0, 1);
        }
        assert_eq!(gamma(&Graph::cycle(4)).0, 2);
        assert_eq!(gamma(&Graph::star(4)), (1, set([0])));
        assert_eq!(gamma(&Graph::empty(0).unwrap()).0, 0);
    }

    #[test]
    fn enumerates_minimum_dominating_sets() {
        let c4 = enumerate_min_dominating_sets(&Graph::cycle(4));
        let mut expected = vec![
            set([0, 1]),
            set([1, 2]),
            set([2, 3]),
            set([3, 0]),
            set([0, 2]),
            set([1, 3]),
        ];
        expected.sort();
        assert_eq!(c4, expected);
        assert_eq!(
            enumerate_min_dominating_sets(&Graph::complete(3)),
            vec![set([0]), set([1]), set([2])]
        );
        assert_eq!(enumerate_min_dominating_sets(&Graph::complete(1)), vec![set([0])]);
    }

    #[test]
    fn dominating_within_examples() {
        assert_eq!(
            min_dominating_within(&Graph::cycle(4), set([1, 3])),
            Some((2, set([1, 3])))
        );
        assert_eq!(
            min_dominating_within(&Graph::star(4), set([1, 2, 3, 4])),
            Some((4, set([1, 2, 3, 4])))
        );
        assert_eq!(min_dominating_within(&Graph::complete(2), VertexSet::EMPTY), None);
    }

    #[test]
    fn inverse_gamma_examples() {
        for n in 2..6 {
            assert_eq!(inverse_gamma(&Graph::complete(n)).unwrap().0, 1);
            assert_eq!(strong_inverse_gamma(&Graph::complete(n)).unwrap(), 1);
        }
        let (v, cert) = inverse_gamma(&Graph::star(4)).unwrap();
        assert_eq!(v, 4);
        assert_eq!((cert.d_set, cert.t_set), (set([0]), set([1, 2, 3, 4])));
        assert_eq!(inverse_gamma(&Graph::cycle(4)).unwrap().0, 2);
        assert_eq!(strong_inverse_gamma(&Graph::cycle(4)).unwrap(), 2);
        // Brute force over the five minimum dominating sets {i, i+2} of C5:
        // each complement is a path on three vertices, dominated by its middle
        // vertex alone only if that vertex sees both ends, which it does not.
        assert_eq!(strong_inverse_gamma(&Graph::cycle(5)).unwrap(), 2);
    }

    #[test]
    fn isolates_are_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(inverse_gamma(&g).unwrap_err(), SolverError::HasIsolates(set([2])));
        assert!(strong_inverse_gamma(&g).is_err());
        assert!(inverse_gamma(&Graph::complete(1)).is_err());
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(max_induced_bipartite(&Graph::cycle(4)).0, 4);
        assert_eq!(max_induced_bipartite(&Graph::complete(4)).0, 2);
        assert_eq!(max_induced_bipartite(&Graph::cycle(5)).0, 4);
        assert_eq!(max_induced_bipartite(&Graph::empty(0).unwrap()).0, 0);
    }

    #[test]
    fn optimal_dominating_examples() {
        let c4 = optimal_dominating_set(&Graph::cycle(4));
        assert_eq!((c4.size, c4.alpha_of_d, c4.d_set), (2, 2, set([0, 2])));
        let k4 = optimal_dominating_set(&Graph::complete(4));
        assert_eq!((k4.size, k4.alpha_of_d, k4.induced_edges), (1, 1, 0));
        // P4's minimum dominating sets are {0,2}, {1,2}, {1,3}, {0,3}; the
        // adjacent pair {1,2} loses, the first independent one by bitmask wins.
        let p4 = optimal_dominating_set(&Graph::path(4));
        assert_eq!((p4.size, p4.alpha_of_d, p4.d_set), (2, 2, set([0, 2])));
    }
}
