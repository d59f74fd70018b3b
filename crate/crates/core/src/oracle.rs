//! Brute-force reference implementations.
//!
//! Every function sweeps all subsets and checks definitions with pairwise
//! adjacency lookups only; none of them calls into [`crate::solvers`] or the
//! set-level helpers on [`Graph`]. They are exponential and meant for
//! cross-checking the real solvers on graphs with at most a dozen vertices.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn dominates(g: &Graph, s: VertexSet) -> bool {
    (0..g.order()).all(|v| s.contains(v) || s.iter().any(|u| g.has_edge(u, v)))
}

fn independent(g: &Graph, s: VertexSet) -> bool {
    let vs = s.to_vec();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

fn bipartite(g: &Graph, s: VertexSet) -> bool {
    let n = g.order();
    let mut color = vec![None::<bool>; n];
    for root in s.iter() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let cu = color[u].expect("colored before push");
            for v in s.iter().filter(|&v| g.has_edge(u, v)) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

fn all_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    let n = g.order();
    assert!(n <= 24, "oracle sweeps are limited to 24 vertices");
    (0..1u64 << n).map(VertexSet::from_bits)
}

pub fn alpha(g: &Graph) -> usize {
    all_subsets(g)
        .filter(|&s| independent(g, s))
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

pub fn gamma(g: &Graph) -> usize {
    all_subsets(g)
        .filter(|&s| dominates(g, s))
        .map(VertexSet::len)
        .min()
        .expect("V(G) dominates")
}

/// All minimum dominating sets, increasing bitmask order.
pub fn min_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    let k = gamma(g);
    all_subsets(g).filter(|&s| s.len() == k && dominates(g, s)).collect()
}

/// Sizes of the smallest dominating set disjoint from each minimum
/// dominating set, found by a direct search over all disjoint pairs.
fn inverse_sizes(g: &Graph) -> Option<Vec<usize>> {
    if (0..g.order()).any(|v| (0..g.order()).all(|u| !g.has_edge(u, v))) {
        return None;
    }
    let full = VertexSet::full(g.order());
    let sizes = min_dominating_sets(g)
        .into_iter()
        .map(|d| {
            (full - d)
                .subsets()
                .filter(|&t| dominates(g, t))
                .map(VertexSet::len)
                .min()
                .expect("Ore: V - D dominates")
        })
        .collect();
    Some(sizes)
}

/// `γ⁻¹(G)`, or `None` when `g` has an isolated vertex.
pub fn inverse_gamma(g: &Graph) -> Option<usize> {
    inverse_sizes(g).map(|s| s.into_iter().min().unwrap_or(0))
}

pub fn strong_inverse_gamma(g: &Graph) -> Option<usize> {
    inverse_sizes(g).map(|s| s.into_iter().max().unwrap_or(0))
}

/// `b(G)`.
pub fn max_induced_bipartite(g: &Graph) -> usize {
    all_subsets(g)
        .filter(|&s| bipartite(g, s))
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

/// `(α(G[D]), |E(G[D])|)` of the optimal dominating set, and the set itself.
pub fn optimal_dominating_set(g: &Graph) -> (usize, usize, VertexSet) {
    min_dominating_sets(g)
        .into_iter()
        .map(|d| {
            let a = d
                .subsets()
                .filter(|&s| independent(g, s))
                .map(VertexSet::len)
                .max()
                .unwrap_or(0);
            let vs = d.to_vec();
            let e = vs
                .iter()
                .enumerate()
                .map(|(i, &u)| vs[i + 1..].iter().filter(|&&v| g.has_edge(u, v)).count())
                .sum::<usize>();
            (a, e, d)
        })
        .min_by_key(|&(a, e, d)| (std::cmp::Reverse(a), e, d))
        .expect("minimum dominating set exists")
}

/// Whether `cells` has an independent transversal, by enumerating every
/// choice of one vertex per cell.
pub fn has_isr(g: &Graph, cells: &[VertexSet]) -> bool {
    fn rec(g: &Graph, cells: &[VertexSet], chosen: &mut Vec<usize>) -> bool {
        let Some((cell, rest)) = cells.split_first() else {
            let s: VertexSet = chosen.iter().collect();
            return s.len() == chosen.len() && independent(g, s);
        };
        for v in cell.iter() {
            chosen.push(v);
            if rec(g, rest, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(g, cells, &mut Vec::new())
}

/// Size of the largest partial ISR, by enumerating every subfamily.
pub fn max_partial_isr_size(g: &Graph, cells: &[VertexSet]) -> usize {
    let k = cells.len();
    assert!(k <= 20, "too many cells for enumeration");
    (0u32..1 << k)
        .filter(|&mask| {
            let sub: Vec<VertexSet> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| cells[i]).collect();
            has_isr(g, &sub)
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(alpha(&Graph::cycle(5)), 2);
        assert_eq!(gamma(&Graph::cycle(4)), 2);
        assert_eq!(min_dominating_sets(&Graph::cycle(4)).len(), 6);
        assert_eq!(inverse_gamma(&Graph::star(4)), Some(4));
        assert_eq!(inverse_gamma(&Graph::empty(2).unwrap()), None);
        assert_eq!(strong_inverse_gamma(&Graph::cycle(5)), Some(2));
        assert_eq!(max_induced_bipartite(&Graph::cycle(5)), 4);
        assert_eq!(max_induced_bipartite(&Graph::complete(4)), 2);
        assert_eq!(optimal_dominating_set(&Graph::path(4)), (2, 0, VertexSet::from([0, 2])));
    }

    #[test]
    fn isr_enumeration() {
        let c4 = Graph::cycle(4);
        let cells = [VertexSet::from([0]), VertexSet::from([1]), VertexSet::from([2])];
        assert!(!has_isr(&c4, &cells));
        assert_eq!(max_partial_isr_size(&c4, &cells), 2);
        assert!(!has_isr(
            &Graph::complete(2),
            &[VertexSet::from([0]), VertexSet::from([1])]
        ));
    }
}
