//! Seeded graph corpora for sweeps and random search.

use std::collections::BTreeSet;

use invdom_core::generate::{all_graphs, clique_chain, corona, disjoint_copies, random_isolate_free, shuffled};
use invdom_core::{constructions::pad_with_k2, solvers, write_graph6, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// RNG for item `index` of a run seeded with `seed`. Each item owns its
/// stream, so results do not depend on scheduling.
pub fn item_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `count` isolate-free graphs with 2 to 8 vertices, for padding checks.
pub fn padding_bases(count: usize, seed: u64) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| {
            let mut rng = item_rng(seed, i);
            let n = rng.random_range(2..=8);
            let p = rng.random_range(0.15..0.7);
            random_isolate_free(n, p, &mut rng).expect("small graph")
        })
        .collect()
}

/// Where a graph of the γ = 5 corpus came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gamma5Source {
    Corona,
    Padded,
    Random,
    Structured,
    Haired,
}

/// Isolate-free graphs with domination number 5 and at most 20 vertices:
/// coronas of every 5-vertex graph, smaller-γ graphs padded with `K2`s,
/// filtered random graphs, a few structured families, and cores whose
/// optimal dominating set has α <= 2 and no isolates. Deduplicated by
/// graph6 string, deterministic in `seed`.
pub fn gamma5_corpus(target: usize, seed: u64) -> Vec<(Graph, Gamma5Source)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |g: Graph, src: Gamma5Source, out: &mut Vec<(Graph, Gamma5Source)>| {
        if g.order() <= 20 && !g.has_isolated_vertex() && solvers::gamma(&g).0 == 5 {
            let key = write_graph6(&g).expect("small graph");
            if seen.insert(key) {
                out.push((g, src));
            }
        }
    };

    let mut rng = item_rng(seed, 0);
    for base in all_graphs(5) {
        let g = shuffled(&corona(&base).expect("10 vertices"), &mut rng);
        push(g, Gamma5Source::Corona, &mut out);
    }

    let structured = [
        disjoint_copies(&Graph::complete(2), 5),
        disjoint_copies(&Graph::star(3), 5),
        disjoint_copies(&Graph::path(3), 5),
        clique_chain(&[3, 3, 3, 3, 3]),
        clique_chain(&[4, 3, 4, 3, 4]),
        corona(&Graph::cycle(5)),
        corona(&Graph::complete(5)),
    ];
    for g in structured.into_iter().flatten() {
        push(g, Gamma5Source::Structured, &mut out);
    }

    // A 5-vertex core with α <= 2 and no isolates, two pendant leaves on each
    // core vertex and a few extra vertices joined to the core: the core is
    // the only minimum dominating set.
    let cores: Vec<Graph> = all_graphs(5)
        .into_iter()
        .filter(|h| !h.has_isolated_vertex() && solvers::alpha(h).0 <= 2)
        .collect();
    for (ci, core) in cores.iter().enumerate() {
        for extra in 0..=3 {
            let mut rng = item_rng(seed, (1 << 40) + (ci * 4 + extra) as u64);
            let mut edges: Vec<(usize, usize)> = core.edges().collect();
            for v in 0..5 {
                edges.push((v, 5 + 2 * v));
                edges.push((v, 6 + 2 * v));
            }
            for x in 15..15 + extra {
                for v in 0..5 {
                    if rng.random_bool(0.5) {
                        edges.push((v, x));
                    }
                }
                edges.push((rng.random_range(0..2), x));
                edges.push((rng.random_range(2..5), x));
            }
            let g = Graph::from_edges(15 + extra, edges).expect("simple graph");
            push(shuffled(&g, &mut rng), Gamma5Source::Haired, &mut out);
        }
    }

    let padded_goal = out.len() + (target / 3).max(1);
    let mut i = 1;
    while out.len() < padded_goal && i < 20 * target as u64 {
        let mut rng = item_rng(seed, i);
        i += 1;
        let n = rng.random_range(2..=10);
        let base = random_isolate_free(n, rng.random_range(0.15..0.6), &mut rng).expect("small graph");
        let gamma = solvers::gamma(&base).0;
        if gamma > 5 || n + 2 * (5 - gamma) > 20 {
            continue;
        }
        let g = pad_with_k2(&base, 5 - gamma).expect("at most 20 vertices");
        push(shuffled(&g, &mut rng), Gamma5Source::Padded, &mut out);
    }

    let mut i = 1 << 32;
    while out.len() < target && i < (1 << 32) + 200 * target as u64 {
        let mut rng = item_rng(seed, i);
        i += 1;
        let n = rng.random_range(12..=20);
        // Sparse enough that five vertices are usually needed.
        let p = rng.random_range(0.6..2.2) / n as f64;
        let g = random_isolate_free(n, p, &mut rng).expect("small graph");
        push(g, Gamma5Source::Random, &mut out);
    }
    out
}
