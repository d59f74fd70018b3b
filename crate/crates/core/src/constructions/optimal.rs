use serde::Serialize;

use super::inverse::inddom_construct;
use super::isr::{enumerate_isrs, max_partial_isr, PartialIsr};
use super::partition::{standard_partition, StandardPartition};
use super::{contradiction, precondition, require_isolate_free, ConstructionError};
use crate::certificate::{BoundKind, DominationCertificate, InverseCertificate};
use crate::graph::{Graph, OrderedVertexList};
use crate::solvers;
use crate::vertex_set::VertexSet;

/// An independent `S` such that `S - D` dominates `D - S`, if one exists.
///
/// Branches on the undominated vertex `x ∈ D - S` with the fewest ways to
/// fix it: put `x` itself into `S`, or one of its neighbours outside `D`.
/// Options already tried are forbidden in the later branches.
pub fn find_special_independent(g: &Graph, d_set: VertexSet) -> Option<VertexSet> {
    fn options(g: &Graph, x: usize, d_set: VertexSet, s: VertexSet, forbidden: VertexSet) -> VertexSet {
        let blocked = forbidden | s | g.open_neighborhood(s);
        let mut opts = (g.neighbors(x) - d_set) - blocked;
        if !blocked.contains(x) {
            opts.insert(x);
        }
        opts
    }

    fn rec(g: &Graph, d_set: VertexSet, s: VertexSet, forbidden: VertexSet) -> Option<VertexSet> {
        let needy = (d_set - s) - g.open_neighborhood(s - d_set);
        let mut pick: Option<(usize, VertexSet)> = None;
        for x in needy {
            let opts = options(g, x, d_set, s, forbidden);
            if pick.is_none_or(|(_, best)| opts.len() < best.len()) {
                pick = Some((x, opts));
                if opts.len() <= 1 {
                    break;
                }
            }
        }
        let Some((x, opts)) = pick else {
            return Some(s);
        };
        // x itself first, then its outside neighbours by id.
        let ordered = opts
            .contains(x)
            .then_some(x)
            .into_iter()
            .chain((opts - VertexSet::singleton(x)).iter());
        let mut tried = forbidden;
        for v in ordered {
            if let Some(found) = rec(g, d_set, s.with(v), tried) {
                return Some(found);
            }
            tried.insert(v);
        }
        None
    }

    if !g.contains_set(d_set) {
        return None;
    }
    rec(g, d_set, VertexSet::EMPTY, VertexSet::EMPTY)
}

/// A vertex of `D`, not isolated in `G[D]`, with fewer than two private
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrivateNeighborShortfall {
    pub vertex: usize,
    pub private_neighbors: VertexSet,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Lemma41Report {
    pub violations: Vec<PrivateNeighborShortfall>,
}

impl Lemma41Report {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists the vertices of `D` that have a neighbour in `D` but fewer than two
/// private neighbours. Empty for every optimal `D` of an isolate-free graph.
/// Optimality is not checked here, so the report can also document what
/// happens for merely minimum sets.
pub fn lemma41_check(g: &Graph, cert: &DominationCertificate) -> Result<Lemma41Report, ConstructionError> {
    g.check_set(cert.d_set)?;
    let d = cert.d_set;
    let mut violations = Vec::new();
    for v in d - g.induced_isolates(d) {
        let private_neighbors = g.private_neighbors(d, v)?;
        if private_neighbors.len() < 2 {
            violations.push(PrivateNeighborShortfall {
                vertex: v,
                private_neighbors,
            });
        }
    }
    Ok(Lemma41Report { violations })
}

/// The three inequalities that hold for an optimal `D` when no special
/// independent set exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrichotomyConditions {
    /// Isolated vertices of `G[D]`.
    pub a: usize,
    pub alpha_of_d: usize,
    pub d_size: usize,
    pub n: usize,
    /// `a + 1 <= α(D) <= |D| - 3`
    pub cond1: bool,
    /// `n + a >= 3|D|`
    pub cond2: bool,
    /// `|D| >= a + 5`
    pub cond3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrichotomyOutcome {
    FoundS(VertexSet),
    Conditions(TrichotomyConditions),
}

fn require_optimal(g: &Graph, cert: &DominationCertificate) -> Result<(), ConstructionError> {
    require_isolate_free(g)?;
    let actual = DominationCertificate::new(g, cert.d_set)?;
    if actual != *cert {
        return Err(precondition(format!(
            "certificate statistics for {} are stale",
            cert.d_set
        )));
    }
    let best = solvers::optimal_dominating_set(g);
    if cert.rank() != best.rank() {
        return Err(precondition(format!(
            "{} is not an optimal dominating set ({:?} vs {:?})",
            cert.d_set,
            cert.rank(),
            best.rank()
        )));
    }
    Ok(())
}

/// Either a special independent set, or the three conditions (all true).
/// A false condition is reported as [`ConstructionError::LemmaViolated`].
pub fn biglemma_trichotomy(g: &Graph, cert: &DominationCertificate) -> Result<TrichotomyOutcome, ConstructionError> {
    require_optimal(g, cert)?;
    if let Some(s) = find_special_independent(g, cert.d_set) {
        return Ok(TrichotomyOutcome::FoundS(s));
    }
    let (a, alpha_d, d, n) = (cert.isolate_count, cert.alpha_of_d, cert.size, g.order());
    let c = TrichotomyConditions {
        a,
        alpha_of_d: alpha_d,
        d_size: d,
        n,
        cond1: a < alpha_d && alpha_d + 3 <= d,
        cond2: n + a >= 3 * d,
        cond3: d >= a + 5,
    };
    if c.cond1 && c.cond2 && c.cond3 {
        Ok(TrichotomyOutcome::Conditions(c))
    } else {
        Err(ConstructionError::LemmaViolated(format!(
            "no special independent set for D = {} but conditions fail: {c:?}",
            cert.d_set
        )))
    }
}

/// An ordering `(d1, .., d5)` of `D`, the standard partition of `V - D`
/// along it, a full ISR `r1` of cells 0..3 and a full ISR `r2` of cells 3..5.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperIsrs {
    pub ordering: OrderedVertexList,
    pub partition: StandardPartition,
    pub r1: PartialIsr,
    pub r2: PartialIsr,
}

fn first_nonadjacent_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Option<(usize, usize)> {
    a.iter()
        .find_map(|u| (b - g.neighbors(u)).without(u).first().map(|v| (u, v)))
}

/// Builds the ordering and the two ISRs by the constructive choices: a
/// nonadjacent `d1, d2` when one exists, nonadjacent `r1 ∈ V1`, `r2 ∈ V2`,
/// a vertex `r3` undominated by `{d1, d2, r1, r2}` with `d3` its lowest
/// neighbour in `D`, and nonadjacent `r4 ∈ V4`, `r5 ∈ V5`.
pub fn superisrs(g: &Graph, cert: &DominationCertificate) -> Result<SuperIsrs, ConstructionError> {
    let d = cert.d_set;
    if d.len() != 5 {
        return Err(precondition(format!("|D| = {} but 5 is required", d.len())));
    }
    require_optimal(g, cert)?;
    if cert.alpha_of_d > 2 {
        return Err(precondition(format!("α(D) = {} exceeds 2", cert.alpha_of_d)));
    }
    if cert.isolate_count > 0 {
        return Err(precondition(format!(
            "G[D] has isolated vertices {}",
            g.induced_isolates(d)
        )));
    }

    let outside = g.vertices() - d;
    let (d1, d2) = first_nonadjacent_pair(g, d, d).unwrap_or_else(|| {
        let mut it = d.iter();
        (it.next().unwrap(), it.next().unwrap())
    });
    let v1 = g.neighbors(d1) & outside;
    let v2 = (g.neighbors(d2) & outside) - v1;
    let (r1, r2) = first_nonadjacent_pair(g, v1, v2)
        .ok_or_else(|| contradiction(format!("cells of {d1} and {d2} are completely joined")))?;
    let covered = g.closed_neighborhood(VertexSet::from([d1, d2, r1, r2]));
    let r3 = (g.vertices() - covered)
        .first()
        .ok_or_else(|| contradiction(format!("{{{d1}, {d2}, {r1}, {r2}}} dominates the graph")))?;
    if d.contains(r3) {
        return Err(contradiction(format!("{{{d1}, {d2}}} does not dominate D")));
    }
    let d3 = (g.neighbors(r3) & d).first().expect("D dominates r3");
    let rest = d - VertexSet::from([d1, d2, d3]);
    let (d4, d5) = (rest.first().unwrap(), rest.last().unwrap());

    let ordering = OrderedVertexList::new(vec![d1, d2, d3, d4, d5], g.order())?;
    let partition = standard_partition(g, &ordering, outside)?;
    let cells = &partition.cells;
    let (r4, r5) = first_nonadjacent_pair(g, cells[3], cells[4])
        .ok_or_else(|| contradiction(format!("cells of {d4} and {d5} are completely joined")))?;

    let isr1 = PartialIsr::from_picks([(0, r1), (1, r2), (2, r3)]);
    let isr2 = PartialIsr::from_picks([(3, r4), (4, r5)]);
    isr1.check(g, cells).map_err(contradiction)?;
    isr2.check(g, cells).map_err(contradiction)?;
    Ok(SuperIsrs {
        ordering,
        partition,
        r1: isr1,
        r2: isr2,
    })
}

/// Which step of the γ = 5 construction produced the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gamma5Route {
    /// A special independent set fed to the independent-set construction.
    SpecialIndependent,
    /// A partial ISR of four cells, completed by the one undominated vertex
    /// of `D`.
    PartialIsrOfSizeFour,
    /// `R1 ∪ R2` dominates the whole graph.
    PairDominates,
    /// `R1 ∪ R2` plus one vertex adjacent to everything they miss.
    PairPlusOne,
}

fn edges_between(g: &Graph, a: VertexSet, b: VertexSet) -> usize {
    a.iter().map(|v| (g.neighbors(v) & b).len()).sum()
}

/// The ISR-based part of the γ = 5 construction, for an optimal `D` with
/// `α(D) <= 2` and no isolates in `G[D]`.
pub fn gamma5_isr_route(
    g: &Graph,
    cert: &DominationCertificate,
) -> Result<(InverseCertificate, Gamma5Route), ConstructionError> {
    let sup = superisrs(g, cert)?;
    let d = cert.d_set;
    let cells = &sup.partition.cells;

    let r = max_partial_isr(g, cells);
    if r.len() >= 4 {
        let missed = d - g.open_neighborhood(r.members());
        if missed.len() > 1 {
            return Err(contradiction(format!(
                "partial ISR {} misses {missed} of D",
                r.members()
            )));
        }
        let cert = inddom_construct(g, d, r.members() | missed)?;
        return Ok((cert, Gamma5Route::PartialIsrOfSizeFour));
    }

    // Among all (R1, R2) pairs pick one with the fewest edges between them.
    let firsts = enumerate_isrs(g, &cells[..3]);
    let seconds = enumerate_isrs(g, &cells[3..]);
    let (r1, r2) = firsts
        .iter()
        .flat_map(|a| seconds.iter().map(move |b| (a.members(), b.members())))
        .min_by_key(|&(a, b)| edges_between(g, a, b))
        .ok_or_else(|| contradiction("no (R1, R2) pair exists although one was constructed"))?;

    if !g.dominates(r1, cells[3] | cells[4]) {
        return Err(contradiction(format!("R1 = {r1} does not dominate the last two cells")));
    }
    let pair = r1 | r2;
    let (alpha, _) = solvers::alpha(g);
    let certify = |t_set: VertexSet, route| {
        let c = InverseCertificate {
            d_set: d,
            t_set,
            bound_kind: BoundKind::Alpha,
            bound_value: alpha,
        };
        c.verify(g)?;
        Ok((c, route))
    };

    let undominated = g.vertices() - g.closed_neighborhood(pair);
    if undominated.is_empty() {
        return certify(pair, Gamma5Route::PairDominates);
    }
    let first_three = cells[0] | cells[1] | cells[2];
    if !undominated.is_subset(first_three) {
        return Err(contradiction(format!(
            "undominated {undominated} leaves the first three cells"
        )));
    }
    let hit: Vec<usize> = (0..3).filter(|&i| cells[i].intersects(undominated)).collect();
    let &[k] = hit.as_slice() else {
        return Err(contradiction(format!("undominated {undominated} meets cells {hit:?}")));
    };
    let rk = (r1 & cells[k])
        .first()
        .expect("R1 represents every one of the first three cells");
    if g.neighbors(rk).intersects(r2) {
        return Err(contradiction(format!("r{} = {rk} is adjacent to R2 = {r2}", k + 1)));
    }
    let r_star = pair.without(rk);
    let others = sup.partition.universe - cells[k];
    let w = others - g.closed_neighborhood(r_star);
    if let Some(w0) = w.first() {
        if let Some(bad) = w.iter().find(|&x| !undominated.is_subset(g.neighbors(x))) {
            return Err(contradiction(format!(
                "{bad} is undominated by R* but misses part of {undominated}"
            )));
        }
        return certify(pair.with(w0), Gamma5Route::PairPlusOne);
    }
    Err(contradiction(format!(
        "R* = {r_star} with d{} = {} would be a dominating set better than D",
        k + 1,
        sup.ordering[k]
    )))
}

/// Inverse dominating set of size at most `α(G)` for an isolate-free graph
/// with `γ(G) = 5`, disjoint from its optimal dominating set.
pub fn gamma5_construct(g: &Graph) -> Result<InverseCertificate, ConstructionError> {
    gamma5_construct_traced(g).map(|(c, _)| c)
}

/// [`gamma5_construct`] together with the step that produced the result.
pub fn gamma5_construct_traced(g: &Graph) -> Result<(InverseCertificate, Gamma5Route), ConstructionError> {
    require_isolate_free(g)?;
    let (gamma, _) = solvers::gamma(g);
    if gamma != 5 {
        return Err(precondition(format!("domination number is {gamma}, not 5")));
    }
    let cert = solvers::optimal_dominating_set(g);
    if let Some(s) = find_special_independent(g, cert.d_set) {
        return Ok((inddom_construct(g, cert.d_set, s)?, Gamma5Route::SpecialIndependent));
    }
    match biglemma_trichotomy(g, &cert)? {
        TrichotomyOutcome::FoundS(_) => return Err(contradiction("special set search is not deterministic")),
        TrichotomyOutcome::Conditions(c) if c.alpha_of_d <= 2 && c.a == 0 => {}
        TrichotomyOutcome::Conditions(c) => {
            return Err(contradiction(format!(
                "conditions hold but α(D) = {}, a = {}",
                c.alpha_of_d, c.a
            )))
        }
    }
    gamma5_isr_route(g, &cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::disjoint_copies;

    fn set<const N: usize>(v: [usize; N]) -> VertexSet {
        VertexSet::from(v)
    }

    /// C5 on 0..5, each cycle vertex with two pendant leaves.
    fn haired_c5() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((i, 5 + 2 * i));
            edges.push((i, 6 + 2 * i));
        }
        Graph::from_edges(15, edges).unwrap()
    }

    fn is_special(g: &Graph, d: VertexSet, s: VertexSet) -> bool {
        g.is_independent(s) && g.dominates(s - d, d - s)
    }

    #[test]
    fn special_independent_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(find_special_independent(&c4, set([0, 2])), Some(set([0, 2])));
        let s = find_special_independent(&c4, set([0, 1])).unwrap();
        assert!(is_special(&c4, set([0, 1]), s));
        assert_eq!(find_special_independent(&Graph::complete(4), set([0])), Some(set([0])));
        // K3 with D = V: S has at most one vertex, which cannot cover the rest.
        assert_eq!(find_special_independent(&Graph::complete(3), set([0, 1, 2])), None);
    }

    #[test]
    fn special_independent_agrees_with_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let g = crate::generate::random_gnp(8, 0.35, &mut rng).unwrap();
            let d = VertexSet::from_bits(rand::Rng::random::<u64>(&mut rng) & 0xff);
            let brute = g.vertices().subsets().any(|s| is_special(&g, d, s));
            let found = find_special_independent(&g, d);
            assert_eq!(found.is_some(), brute, "{g:?} D = {d}");
            if let Some(s) = found {
                assert!(is_special(&g, d, s));
            }
        }
    }

    #[test]
    fn private_neighbour_report() {
        let c6 = Graph::cycle(6);
        let cert = DominationCertificate::new(&c6, set([0, 3])).unwrap();
        assert!(lemma41_check(&c6, &cert).unwrap().is_ok());
        // P4 with D = {1, 2} is minimum but not optimal; each vertex has a
        // single private neighbour.
        let p4 = Graph::path(4);
        let cert = DominationCertificate::new(&p4, set([1, 2])).unwrap();
        let report = lemma41_check(&p4, &cert).unwrap();
        assert_eq!(report.violations.len(), 2);
        assert_eq!(report.violations[0].private_neighbors, set([0]));
    }

    #[test]
    fn trichotomy_examples() {
        let k2 = Graph::complete(2);
        let cert = solvers::optimal_dominating_set(&k2);
        assert_eq!(
            biglemma_trichotomy(&k2, &cert).unwrap(),
            TrichotomyOutcome::FoundS(set([0]))
        );
        let p4 = Graph::path(4);
        let bad = DominationCertificate::new(&p4, set([1, 2])).unwrap();
        assert!(matches!(
            biglemma_trichotomy(&p4, &bad),
            Err(ConstructionError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn superisrs_on_haired_cycle() {
        let g = haired_c5();
        let cert = solvers::optimal_dominating_set(&g);
        assert_eq!(cert.d_set, set([0, 1, 2, 3, 4]));
        let sup = superisrs(&g, &cert).unwrap();
        assert_eq!(sup.ordering.to_set(), cert.d_set);
        assert_eq!(sup.partition.check(&g), Ok(()));
        assert_eq!(sup.r1.indices(), vec![0, 1, 2]);
        assert_eq!(sup.r2.indices(), vec![3, 4]);
        assert_eq!(sup.r1.check(&g, &sup.partition.cells), Ok(()));
        assert_eq!(sup.r2.check(&g, &sup.partition.cells), Ok(()));
        // d1, d2 nonadjacent.
        assert!(!g.has_edge(sup.ordering[0], sup.ordering[1]));
    }

    #[test]
    fn superisrs_rejects_wrong_size() {
        let g = disjoint_copies(&Graph::complete(2), 4).unwrap();
        let cert = solvers::optimal_dominating_set(&g);
        assert!(matches!(
            superisrs(&g, &cert),
            Err(ConstructionError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn isr_route_on_haired_cycle() {
        let g = haired_c5();
        let cert = solvers::optimal_dominating_set(&g);
        let (c, route) = gamma5_isr_route(&g, &cert).unwrap();
        assert_eq!(route, Gamma5Route::PartialIsrOfSizeFour);
        assert_eq!(c.verify(&g), Ok(()));
        let (c, route) = gamma5_construct_traced(&g).unwrap();
        assert_eq!(route, Gamma5Route::SpecialIndependent);
        assert!(c.t_set.len() <= solvers::alpha(&g).0);
    }

    #[test]
    fn gamma5_on_disjoint_edges_and_stars() {
        let g = disjoint_copies(&Graph::complete(2), 5).unwrap();
        let c = gamma5_construct(&g).unwrap();
        assert_eq!(c.t_set.len(), 5);
        assert_eq!(c.bound_value, 5);

        let g = disjoint_copies(&Graph::star(3), 5).unwrap();
        let c = gamma5_construct(&g).unwrap();
        assert_eq!(c.bound_value, 15);
        assert_eq!(c.t_set.len(), 15);
        assert_eq!(c.verify(&g), Ok(()));
    }

    #[test]
    fn gamma5_rejects_other_domination_numbers() {
        let g = disjoint_copies(&Graph::complete(2), 4).unwrap();
        assert!(matches!(
            gamma5_construct(&g),
            Err(ConstructionError::PreconditionViolated(_))
        ));
    }
}
