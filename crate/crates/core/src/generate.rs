//! Graph corpora: exhaustive isomorph-free generation for small orders,
//! random graphs, and a few structured families.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::vertex_set::VertexSet;

/// Largest order [`all_graphs`] will enumerate.
pub const EXHAUSTIVE_MAX_ORDER: usize = 10;

/// Splits cells of an ordered partition until it is equitable: every vertex
/// of a cell has the same number of neighbours in every other cell. Split
/// fragments are ordered by that count, so the result depends only on the
/// isomorphism class of `(g, partition)`.
fn refine(g: &Graph, mut cells: Vec<VertexSet>) -> Vec<VertexSet> {
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            for ci in 0..cells.len() {
                let cell = cells[ci];
                if cell.len() < 2 {
                    continue;
                }
                let mut groups: BTreeMap<usize, VertexSet> = BTreeMap::new();
                for v in cell {
                    groups.entry((g.neighbors(v) & splitter).len()).or_default().insert(v);
                }
                if groups.len() > 1 {
                    cells.splice(ci..=ci, groups.into_values());
                    continue 'restart;
                }
            }
        }
        return cells;
    }
}

fn canon_search(g: &Graph, cells: Vec<VertexSet>, best: &mut Option<Graph>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut perm = vec![0; g.order()];
            for (pos, cell) in cells.iter().enumerate() {
                perm[cell.first().expect("discrete cell")] = pos;
            }
            let candidate = g.permuted(&perm);
            if best.as_ref().is_none_or(|b| candidate > *b) {
                *best = Some(candidate);
            }
        }
        Some(ci) => {
            for v in cells[ci] {
                let mut next = Vec::with_capacity(cells.len() + 1);
                next.extend_from_slice(&cells[..ci]);
                next.push(VertexSet::singleton(v));
                next.push(cells[ci].without(v));
                next.extend_from_slice(&cells[ci + 1..]);
                canon_search(g, next, best);
            }
        }
    }
}

/// A canonical relabelling of `g`: two graphs are isomorphic iff their
/// canonical forms are equal.
///
/// Individualisation-refinement without automorphism pruning, taking the
/// largest relabelled adjacency among all leaves. Fine for the small orders
/// this crate enumerates; highly symmetric graphs cost up to `n!` leaves.
pub fn canonical_form(g: &Graph) -> Graph {
    if g.order() == 0 {
        return g.clone();
    }
    let mut best = None;
    canon_search(g, vec![g.vertices()], &mut best);
    best.expect("at least one leaf")
}

/// Every graph on `n + 1` vertices obtained by adding a vertex to a graph in
/// `prev`, up to isomorphism, in canonical form and sorted.
fn extend_by_vertex(prev: &[Graph], n: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    for g in prev {
        debug_assert_eq!(g.order(), n);
        for nbrs in VertexSet::full(n).subsets() {
            let mut rows: Vec<u64> = g.rows().to_vec();
            for v in nbrs {
                rows[v] |= 1u64 << n;
            }
            rows.push(nbrs.bits());
            let h = Graph::from_rows(&rows).expect("valid extension");
            seen.insert(canonical_form(&h));
        }
    }
    seen.into_iter().collect()
}

/// All graphs on `n` vertices up to isomorphism, each in canonical form,
/// sorted. Every graph on `n` vertices arises from one on `n - 1` vertices by
/// adding a vertex, so generation proceeds order by order with canonical
/// deduplication.
///
/// # Panics
/// If `n > EXHAUSTIVE_MAX_ORDER`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= EXHAUSTIVE_MAX_ORDER,
        "exhaustive generation is limited to n <= {EXHAUSTIVE_MAX_ORDER}"
    );
    let mut level = vec![Graph::empty(0).expect("K0")];
    for k in 0..n {
        level = extend_by_vertex(&level, k);
    }
    level
}

/// All graphs of every order `0..=max_n`, grouped by order.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(
        max_n <= EXHAUSTIVE_MAX_ORDER,
        "exhaustive generation is limited to n <= {EXHAUSTIVE_MAX_ORDER}"
    );
    let mut levels = vec![vec![Graph::empty(0).expect("K0")]];
    for k in 0..max_n {
        let next = extend_by_vertex(&levels[k], k);
        levels.push(next);
    }
    levels
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                g.link(u, v);
            }
        }
    }
    Ok(g)
}

/// `G(n, p)` with every isolated vertex then joined to a uniformly random
/// other vertex. Needs `n >= 2`.
pub fn random_isolate_free<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    assert!(n >= 2, "an isolate-free graph needs two vertices");
    let mut g = random_gnp(n, p, rng)?;
    for v in 0..n {
        if g.degree(v) == 0 {
            let mut u = rng.random_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            g.link(u, v);
        }
    }
    Ok(g)
}

/// The corona `G ∘ K1`: every vertex `v` gains a pendant neighbour `n + v`.
pub fn corona(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    if 2 * n > MAX_VERTICES {
        return Err(GraphError::TooLarge { n: 2 * n });
    }
    let mut h = g.disjoint_union(&Graph::empty(n)?)?;
    for v in 0..n {
        h.link(v, n + v);
    }
    Ok(h)
}

/// Disjoint cliques of the given sizes, consecutive cliques joined by one
/// edge between the last vertex of one and the first of the next.
pub fn clique_chain(sizes: &[usize]) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(0)?;
    let mut prev_last: Option<usize> = None;
    for &k in sizes {
        let start = g.order();
        g = g.disjoint_union(&Graph::complete(k.min(MAX_VERTICES)))?;
        if k > 0 {
            if let Some(p) = prev_last {
                g.link(p, start);
            }
            prev_last = Some(start + k - 1);
        }
    }
    Ok(g)
}

/// Disjoint union of `copies` copies of `g`.
pub fn disjoint_copies(g: &Graph, copies: usize) -> Result<Graph, GraphError> {
    let mut out = Graph::empty(0)?;
    for _ in 0..copies {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

/// A uniformly random relabelling of `g`.
pub fn shuffled<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    g.permuted(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graph_counts_match_known_sequence() {
        // Number of graphs on n unlabelled vertices (OEIS A000088) and of
        // connected ones (A001349).
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 1, 2, 6, 21, 112, 853];
        let levels = all_graphs_up_to(7);
        for n in 0..=7 {
            assert_eq!(levels[n].len(), all[n], "graphs on {n} vertices");
            let c = levels[n].iter().filter(|g| g.is_connected()).count();
            assert_eq!(c, connected[n], "connected graphs on {n} vertices");
        }
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_gnp(8, 0.4, &mut rng).unwrap();
            let h = shuffled(&g, &mut rng);
            assert_eq!(canonical_form(&g), canonical_form(&h));
        }
        assert_ne!(canonical_form(&Graph::path(4)), canonical_form(&Graph::star(3)));
    }

    #[test]
    fn families() {
        let c = corona(&Graph::cycle(5)).unwrap();
        assert_eq!((c.order(), c.size()), (10, 10));
        let ch = clique_chain(&[3, 2, 4]).unwrap();
        assert_eq!((ch.order(), ch.size()), (9, 3 + 1 + 6 + 2));
        assert!(ch.is_connected());
        let two = disjoint_copies(&Graph::complete(2), 5).unwrap();
        assert_eq!((two.order(), two.size()), (10, 5));
    }

    #[test]
    fn isolate_free_generator_has_no_isolates() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            assert!(!random_isolate_free(9, 0.05, &mut rng).unwrap().has_isolated_vertex());
        }
    }
}
