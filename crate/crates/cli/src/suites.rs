//! Exhaustive and sampled invariant sweeps. Each suite returns how many
//! individual checks it ran and which ones failed; `selftest` runs them at
//! small scale and the acceptance tests at full scale.

use std::collections::BTreeMap;
use std::fmt;

use invdom_core::constructions::pad_with_k2;
use invdom_core::constructions::{
    biglemma_trichotomy, bipartite_inverse_construct, find_isr, find_special_independent, gamma5_construct_traced,
    gamma5_isr_route, haxell_condition, inddom_construct, lemma41_check, max_partial_isr, theorem_main_construct,
    two_isr_partition, two_partial_isrs, ConstructionError, HaxellOutcome,
};
use invdom_core::{oracle, parse_graph6, solvers, write_graph6, Graph, OrderedVertexList, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::corpus::{gamma5_corpus, item_rng, padding_bases};
use crate::report::three_halves_holds;

/// At most this many failure messages are kept per suite.
const MAX_MESSAGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub messages: Vec<String>,
    /// Extra counters worth printing, such as which construction route ran.
    pub notes: BTreeMap<String, usize>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} ({} checked, {} failed)",
            self.name, self.checked, self.failed
        )?;
        if !self.notes.is_empty() {
            let notes: Vec<String> = self.notes.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", notes.join(", "))?;
        }
        for m in &self.messages {
            write!(f, "\n    {m}")?;
        }
        Ok(())
    }
}

/// Outcome of one item: checks run, failure messages, notes.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn note(&mut self, key: impl Into<String>) {
        self.notes.push(key.into());
    }
}

fn run<T: Sync>(name: &str, items: &[T], f: impl Fn(usize, &T) -> Tally + Sync) -> SuiteResult {
    let tallies: Vec<Tally> = items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
    let mut r = SuiteResult {
        name: name.to_string(),
        checked: 0,
        failed: 0,
        messages: Vec::new(),
        notes: BTreeMap::new(),
    };
    for t in tallies {
        r.checked += t.checked;
        r.failed += t.failures.len();
        for m in t.failures {
            if r.messages.len() < MAX_MESSAGES {
                r.messages.push(m);
            }
        }
        for n in t.notes {
            *r.notes.entry(n).or_default() += 1;
        }
    }
    r
}

fn g6(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

/// Flattens `levels[lo..=hi]` into one list.
pub fn graphs_between(levels: &[Vec<Graph>], lo: usize, hi: usize) -> Vec<Graph> {
    levels
        .iter()
        .enumerate()
        .filter(|(n, _)| (lo..=hi).contains(n))
        .flat_map(|(_, l)| l.iter().cloned())
        .collect()
}

fn isolate_free(levels: &[Vec<Graph>], hi: usize) -> Vec<Graph> {
    graphs_between(levels, 1, hi)
        .into_iter()
        .filter(|g| !g.has_isolated_vertex())
        .collect()
}

/// Independence number as seen by the checks. With `fault` set it is off by
/// one on every graph with an edge, which the suites must catch.
fn alpha_under_test(g: &Graph, fault: bool) -> usize {
    let a = solvers::alpha(g).0;
    if fault && g.size() > 0 {
        a - 1
    } else {
        a
    }
}

/// `γ⁻¹ <= α` on every connected graph with `1..=max_n` vertices.
pub fn conjecture_sweep(levels: &[Vec<Graph>], max_n: usize, fault: bool) -> SuiteResult {
    let corpus: Vec<Graph> = graphs_between(levels, 1, max_n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect();
    run("inverse domination at most independence", &corpus, |_, g| {
        let mut t = Tally::default();
        let alpha = alpha_under_test(g, fault);
        match solvers::inverse_gamma(g) {
            Ok((inv, _)) => t.check(inv <= alpha, || format!("{}: γ⁻¹ = {inv} > α = {alpha}", g6(g))),
            // K1 is the only connected graph with an isolate.
            Err(_) => t.note("skipped_isolates"),
        }
        t
    })
}

/// `2γ⁻¹ <= 3α - 2` on connected non-cliques with `1..=max_n` vertices.
pub fn three_halves_sweep(levels: &[Vec<Graph>], max_n: usize) -> SuiteResult {
    let corpus: Vec<Graph> = graphs_between(levels, 2, max_n)
        .into_iter()
        .filter(|g| g.is_connected() && !g.is_clique())
        .collect();
    run("three-halves bound on non-cliques", &corpus, |_, g| {
        let mut t = Tally::default();
        let alpha = solvers::alpha(g).0;
        let inv = solvers::inverse_gamma(g).map(|(v, _)| v);
        t.check(matches!(inv, Ok(i) if three_halves_holds(i, alpha)), || {
            format!("{}: γ⁻¹ = {inv:?}, α = {alpha}", g6(g))
        });
        t
    })
}

/// The constructive `α + ⌊(γ-1)/2⌋` bound for every isolate-free graph and
/// every minimum dominating set.
pub fn main_construction_sweep(levels: &[Vec<Graph>], max_n: usize) -> SuiteResult {
    let corpus = isolate_free(levels, max_n);
    run("constructive bound for every minimum D", &corpus, |_, g| {
        let mut t = Tally::default();
        let (alpha, gamma) = (solvers::alpha(g).0, solvers::gamma(g).0);
        for d in solvers::enumerate_min_dominating_sets(g) {
            match theorem_main_construct(g, d) {
                Ok(c) => {
                    let ok =
                        c.verify_minimum(g, gamma).is_ok() && c.d_set == d && c.t_set.len() <= alpha + (gamma - 1) / 2;
                    t.check(ok, || format!("{} D = {d}: bad certificate {c:?}", g6(g)));
                }
                Err(e) => t.check(false, || format!("{} D = {d}: {e}", g6(g))),
            }
        }
        t
    })
}

/// The `b(G)` construction and the independent-set construction (whenever a
/// special independent set exists) for every minimum dominating set.
pub fn other_constructions_sweep(levels: &[Vec<Graph>], max_n: usize) -> SuiteResult {
    let corpus = isolate_free(levels, max_n);
    run("bipartite and independent-set constructions", &corpus, |_, g| {
        let mut t = Tally::default();
        let (alpha, gamma, b) = (
            solvers::alpha(g).0,
            solvers::gamma(g).0,
            solvers::max_induced_bipartite(g).0,
        );
        for d in solvers::enumerate_min_dominating_sets(g) {
            match bipartite_inverse_construct(g, d) {
                Ok(c) => t.check(c.verify_minimum(g, gamma).is_ok() && c.t_set.len() <= b, || {
                    format!("{} D = {d}: bipartite certificate {c:?}", g6(g))
                }),
                Err(e) => t.check(false, || format!("{} D = {d}: bipartite: {e}", g6(g))),
            }
            if let Some(s) = find_special_independent(g, d) {
                t.note("special_sets");
                match inddom_construct(g, d, s) {
                    Ok(c) => t.check(c.verify_minimum(g, gamma).is_ok() && c.t_set.len() <= alpha, || {
                        format!("{} D = {d}: independent-set certificate {c:?}", g6(g))
                    }),
                    Err(e) => t.check(false, || format!("{} D = {d} S = {s}: {e}", g6(g))),
                }
            }
        }
        t
    })
}

fn maximal_independent_subsets(g: &Graph, d: VertexSet) -> Vec<VertexSet> {
    d.subsets()
        .filter(|&f| g.is_independent(f) && d.is_subset(g.closed_neighborhood(f)))
        .collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// Orderings of `rest` to try: all of them up to four vertices, otherwise
/// `samples` seeded shuffles.
fn orderings(rest: VertexSet, samples: usize, seed: u64, index: u64) -> Vec<Vec<usize>> {
    let items = rest.to_vec();
    if items.len() <= 4 {
        return permutations(&items);
    }
    let mut rng = item_rng(seed, index);
    (0..samples)
        .map(|_| {
            let mut p = items.clone();
            p.shuffle(&mut rng);
            p
        })
        .collect()
}

/// Two partial ISRs exist and a partial ISR covers at least half the cells,
/// for every minimum `D`, maximal independent `F ⊆ D` and ordering of `D - F`.
pub fn partial_isr_sweep(levels: &[Vec<Graph>], max_n: usize, seed: u64) -> SuiteResult {
    let corpus = isolate_free(levels, max_n);
    run("two partial ISRs and the half-size partial ISR", &corpus, |gi, g| {
        let mut t = Tally::default();
        for d in solvers::enumerate_min_dominating_sets(g) {
            for f in maximal_independent_subsets(g, d) {
                for ord in orderings(d - f, 24, seed, gi as u64) {
                    let ordering = OrderedVertexList::new(ord, g.order()).expect("distinct vertices");
                    let ctx = || format!("{} D = {d} F = {f} order {:?}", g6(g), ordering.as_slice());
                    match two_partial_isrs(g, d, f, &ordering) {
                        Ok(_) => t.check(true, String::new),
                        Err(e) => t.check(false, || format!("{}: {e}", ctx())),
                    }
                    match two_isr_partition(g, d, f, &ordering) {
                        Ok(p) => {
                            t.check(p.check(g).is_ok(), || {
                                format!("{}: partition does not recompute", ctx())
                            });
                            let r = max_partial_isr(g, &p.cells);
                            t.check(r.check(g, &p.cells).is_ok() && 2 * r.len() >= p.len(), || {
                                format!("{}: partial ISR of size {} for {} cells", ctx(), r.len(), p.len())
                            });
                        }
                        Err(e) => t.check(false, || format!("{}: {e}", ctx())),
                    }
                }
            }
        }
        t
    })
}

/// Optimal dominating sets: every non-isolated member has two private
/// neighbours, and the trichotomy never fails.
pub fn optimal_set_sweep(levels: &[Vec<Graph>], max_n: usize) -> SuiteResult {
    let corpus = isolate_free(levels, max_n);
    run("optimal dominating set lemmas", &corpus, |_, g| {
        let mut t = Tally::default();
        let cert = solvers::optimal_dominating_set(g);
        match lemma41_check(g, &cert) {
            Ok(r) => t.check(r.is_ok(), || {
                format!("{} D = {}: {:?}", g6(g), cert.d_set, r.violations)
            }),
            Err(e) => t.check(false, || format!("{}: {e}", g6(g))),
        }
        match biglemma_trichotomy(g, &cert) {
            Ok(outcome) => {
                t.note(match outcome {
                    invdom_core::constructions::TrichotomyOutcome::FoundS(_) => "found_s",
                    invdom_core::constructions::TrichotomyOutcome::Conditions(_) => "conditions",
                });
                t.check(true, String::new);
            }
            Err(e) => t.check(false, || format!("{} D = {}: {e}", g6(g), cert.d_set)),
        }
        t
    })
}

/// The γ = 5 construction on a seeded corpus, cross-checked against the
/// exact inverse domination number up to `exact_max_n` vertices.
pub fn gamma5_sweep(target: usize, seed: u64, exact_max_n: usize) -> SuiteResult {
    let corpus = gamma5_corpus(target, seed);
    let mut r = run("domination number five construction", &corpus, |_, (g, src)| {
        let mut t = Tally::default();
        t.note(format!("{src:?}").to_lowercase());
        let alpha = solvers::alpha(g).0;
        match gamma5_construct_traced(g) {
            Ok((c, route)) => {
                t.note(format!("{route:?}"));
                let ok = c.verify_minimum(g, 5).is_ok() && c.t_set.len() <= alpha;
                t.check(ok, || format!("{}: certificate {c:?} with α = {alpha}", g6(g)));
                if g.order() <= exact_max_n {
                    let inv = solvers::inverse_gamma(g).map(|(v, _)| v);
                    t.check(matches!(inv, Ok(i) if i <= c.t_set.len()), || {
                        format!("{}: |T| = {} below γ⁻¹ = {inv:?}", g6(g), c.t_set.len())
                    });
                }
            }
            Err(e) => {
                if matches!(e, ConstructionError::InternalContradiction(_)) {
                    t.note("contradictions");
                }
                t.check(false, || format!("{}: {e}", g6(g)));
            }
        }
        // The ISR route is only needed when no special independent set
        // exists, which no known graph achieves; run it on every graph that
        // meets its preconditions anyway.
        let opt = solvers::optimal_dominating_set(g);
        if opt.alpha_of_d <= 2 && opt.isolate_count == 0 {
            match gamma5_isr_route(g, &opt) {
                Ok((c, route)) => {
                    t.note(format!("isr_route_{route:?}"));
                    t.check(c.verify_minimum(g, 5).is_ok() && c.t_set.len() <= alpha, || {
                        format!("{}: ISR route certificate {c:?}", g6(g))
                    });
                }
                Err(e) => t.check(false, || format!("{}: ISR route: {e}", g6(g))),
            }
        }
        t
    });
    if corpus.len() < target {
        r.failed += 1;
        r.messages
            .push(format!("corpus has {} graphs, wanted {target}", corpus.len()));
    }
    r
}

/// Branch-and-bound solvers against brute force on every graph with up to
/// `max_n` vertices.
pub fn oracle_sweep(levels: &[Vec<Graph>], max_n: usize, fault: bool) -> SuiteResult {
    let corpus = graphs_between(levels, 0, max_n);
    run("solvers agree with brute force", &corpus, |_, g| {
        let mut t = Tally::default();
        let alpha = alpha_under_test(g, fault);
        t.check(alpha == oracle::alpha(g), || format!("{}: α", g6(g)));
        t.check(solvers::gamma(g).0 == oracle::gamma(g), || format!("{}: γ", g6(g)));
        t.check(
            solvers::inverse_gamma(g).ok().map(|(v, _)| v) == oracle::inverse_gamma(g),
            || format!("{}: γ⁻¹", g6(g)),
        );
        t.check(
            solvers::max_induced_bipartite(g).0 == oracle::max_induced_bipartite(g),
            || format!("{}: b", g6(g)),
        );
        t
    })
}

/// The complement of a minimum dominating set dominates, in isolate-free
/// graphs.
pub fn ore_sweep(levels: &[Vec<Graph>], max_n: usize) -> SuiteResult {
    let corpus = isolate_free(levels, max_n);
    run("complement of a minimum dominating set dominates", &corpus, |_, g| {
        let mut t = Tally::default();
        for d in solvers::enumerate_min_dominating_sets(g) {
            t.check(g.is_dominating(g.vertices() - d), || format!("{} D = {d}", g6(g)));
        }
        t
    })
}

/// γ, α and γ⁻¹ each grow by exactly `t` when `t` copies of `K2` are added.
pub fn padding_sweep(count: usize, seed: u64) -> SuiteResult {
    let corpus = padding_bases(count, seed);
    run("padding with K2 shifts γ, α and γ⁻¹", &corpus, |_, g| {
        let mut t = Tally::default();
        let base = (
            solvers::gamma(g).0,
            solvers::alpha(g).0,
            solvers::inverse_gamma(g).map(|(v, _)| v).ok(),
        );
        for k in 1..=3 {
            let h = pad_with_k2(g, k).expect("at most 14 vertices");
            let padded = (
                solvers::gamma(&h).0,
                solvers::alpha(&h).0,
                solvers::inverse_gamma(&h).map(|(v, _)| v).ok(),
            );
            let expected = (base.0 + k, base.1 + k, base.2.map(|v| v + k));
            t.check(padded == expected, || {
                format!("{} t = {k}: {base:?} -> {padded:?}", g6(g))
            });
        }
        t
    })
}

/// A second graph6 encoder to compare against.
pub type ReferenceEncoder<'a> = &'a (dyn Fn(&Graph) -> String + Sync);

/// Round trip of every graph with up to `max_n` vertices, plus the `K1`,
/// `K2`, `K3` fixtures, optionally checked against a reference encoder.
pub fn codec_sweep(levels: &[Vec<Graph>], max_n: usize, reference: Option<ReferenceEncoder<'_>>) -> SuiteResult {
    let corpus = graphs_between(levels, 0, max_n);
    let mut r = run("graph6 round trip", &corpus, |_, g| {
        let mut t = Tally::default();
        let s = write_graph6(g);
        t.check(
            matches!(&s, Ok(s) if parse_graph6(s.as_bytes()).as_ref() == Ok(g)),
            || format!("{g:?} encodes to {s:?}"),
        );
        if let (Some(enc), Ok(s)) = (reference, &s) {
            let theirs = enc(g);
            t.check(*s == theirs, || format!("{g:?}: {s} vs reference {theirs}"));
        }
        t
    });
    for (text, k) in [("@", 1), ("A_", 2), ("Bw", 3)] {
        r.checked += 1;
        let ok = parse_graph6(text.as_bytes()).as_ref() == Ok(&Graph::complete(k))
            && reference.is_none_or(|enc| enc(&Graph::complete(k)) == text);
        if !ok {
            r.failed += 1;
            r.messages.push(format!("fixture {text:?} is not K{k}"));
        }
    }
    r
}

/// `find_isr` agrees with brute force on random cell families, and whenever
/// the domination condition holds it finds an ISR.
pub fn isr_search_sweep(levels: &[Vec<Graph>], max_n: usize, seed: u64) -> SuiteResult {
    let corpus = graphs_between(levels, 1, max_n);
    run(
        "ISR search is complete and the domination condition is sound",
        &corpus,
        |gi, g| {
            let mut t = Tally::default();
            let mut rng = item_rng(seed, gi as u64);
            for _ in 0..4 {
                let k = rng.random_range(1..=4);
                let mut cells = vec![VertexSet::EMPTY; k];
                for v in g.vertices() {
                    if rng.random_bool(0.8) {
                        cells[rng.random_range(0..k)].insert(v);
                    }
                }
                let found = find_isr(g, &cells);
                t.check(found.is_some() == oracle::has_isr(g, &cells), || {
                    format!("{} cells {cells:?}", g6(g))
                });
                if let Some(isr) = &found {
                    t.check(isr.check(g, &cells).is_ok(), || {
                        format!("{} cells {cells:?}: invalid ISR", g6(g))
                    });
                }
                if haxell_condition(g, &cells) == HaxellOutcome::Ok {
                    t.check(found.is_some(), || {
                        format!("{} cells {cells:?}: condition holds, no ISR", g6(g))
                    });
                }
            }
            t
        },
    )
}

/// Sizes used by [`run_all`].
#[derive(Debug, Clone)]
pub struct Scale {
    /// Exhaustive sweeps over all graphs up to this order.
    pub sweep_max_n: usize,
    /// Exhaustive construction and oracle sweeps up to this order.
    pub construct_max_n: usize,
    pub padding_graphs: usize,
    pub gamma5_graphs: usize,
    pub seed: u64,
    pub inject_fault: bool,
}

impl Scale {
    /// Everything at `n <= 7`, smaller samples.
    pub fn selftest() -> Self {
        Scale {
            sweep_max_n: 7,
            construct_max_n: 7,
            padding_graphs: 30,
            gamma5_graphs: 40,
            seed: 1,
            inject_fault: false,
        }
    }
}

/// Every suite, in a fixed order.
pub fn run_all(levels: &[Vec<Graph>], scale: &Scale) -> Vec<SuiteResult> {
    let (n, c, seed, fault) = (scale.sweep_max_n, scale.construct_max_n, scale.seed, scale.inject_fault);
    vec![
        conjecture_sweep(levels, n, fault),
        three_halves_sweep(levels, n),
        main_construction_sweep(levels, c),
        other_constructions_sweep(levels, c),
        partial_isr_sweep(levels, c, seed),
        isr_search_sweep(levels, c.min(6), seed),
        optimal_set_sweep(levels, n),
        gamma5_sweep(scale.gamma5_graphs, seed, 12),
        oracle_sweep(levels, c, fault),
        ore_sweep(levels, n),
        padding_sweep(scale.padding_graphs, seed),
        codec_sweep(levels, n, None),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use invdom_core::generate::all_graphs_up_to;

    #[test]
    fn small_suites_pass() {
        let levels = all_graphs_up_to(5);
        let scale = Scale {
            sweep_max_n: 5,
            construct_max_n: 5,
            padding_graphs: 5,
            gamma5_graphs: 10,
            seed: 9,
            inject_fault: false,
        };
        for r in run_all(&levels, &scale) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let levels = all_graphs_up_to(4);
        assert!(!conjecture_sweep(&levels, 4, true).passed());
        assert!(!oracle_sweep(&levels, 4, true).passed());
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(permutations(&[]), vec![Vec::<usize>::new()]);
    }
}
