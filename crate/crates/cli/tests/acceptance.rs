//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs under `cargo test` (no libtest harness).

use std::process::ExitCode;
use std::time::Instant;

use invdom_cli::suites::{
    codec_sweep, conjecture_sweep, gamma5_sweep, main_construction_sweep, optimal_set_sweep, oracle_sweep, ore_sweep,
    padding_sweep, partial_isr_sweep, three_halves_sweep, SuiteResult,
};
use invdom_core::generate::all_graphs_up_to;
use invdom_core::Graph;
use petgraph::graph::UnGraph;
use petgraph::graph6::ToGraph6;

const SEED: u64 = 20_261_019;

type Criterion<'a> = (u32, &'a str, Box<dyn Fn() -> SuiteResult + 'a>);

/// Unlabelled graphs on n vertices, all and connected, for n = 0..=8.
const ALL_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
const CONNECTED_COUNTS: [usize; 9] = [1, 1, 1, 2, 6, 21, 112, 853, 11117];

fn reference_graph6(g: &Graph) -> String {
    let mut p = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..g.order()).map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(nodes[u], nodes[v], ());
    }
    p.graph6_string()
}

fn main() -> ExitCode {
    let start = Instant::now();
    let levels = all_graphs_up_to(8);
    let mut corpus_ok = true;
    for n in 0..=8 {
        let connected = levels[n].iter().filter(|g| g.is_connected()).count();
        if levels[n].len() != ALL_COUNTS[n] || connected != CONNECTED_COUNTS[n] {
            corpus_ok = false;
            println!("corpus: n = {n} has {} graphs ({connected} connected)", levels[n].len());
        }
    }
    println!(
        "corpus: {} graphs on at most 8 vertices generated in {:.1?}{}",
        levels.iter().map(Vec::len).sum::<usize>(),
        start.elapsed(),
        if corpus_ok { "" } else { " WITH WRONG COUNTS" }
    );

    let criteria: Vec<Criterion> = vec![
        (
            1,
            "γ⁻¹ <= α on all connected graphs, n <= 8",
            Box::new(|| conjecture_sweep(&levels, 8, false)),
        ),
        (
            2,
            "2γ⁻¹ <= 3α - 2 on connected non-cliques, n <= 8",
            Box::new(|| three_halves_sweep(&levels, 8)),
        ),
        (
            3,
            "constructive α + ⌊(γ-1)/2⌋ bound, every minimum D, n <= 7",
            Box::new(|| main_construction_sweep(&levels, 7)),
        ),
        (
            4,
            "two partial ISRs and half-size partial ISR, n <= 7",
            Box::new(|| partial_isr_sweep(&levels, 7, SEED)),
        ),
        (
            5,
            "private neighbours and trichotomy for optimal D, n <= 8",
            Box::new(|| optimal_set_sweep(&levels, 8)),
        ),
        (
            6,
            "γ = 5 construction on 240 seeded graphs",
            Box::new(|| gamma5_sweep(240, SEED, 12)),
        ),
        (
            7,
            "solvers agree with brute force, n <= 7",
            Box::new(|| oracle_sweep(&levels, 7, false)),
        ),
        (
            8,
            "V - D dominates for every minimum D, n <= 8",
            Box::new(|| ore_sweep(&levels, 8)),
        ),
        (
            9,
            "K2 padding shifts γ, α, γ⁻¹ by t on 100 seeded graphs",
            Box::new(|| padding_sweep(100, SEED)),
        ),
        (
            10,
            "graph6 round trip n <= 8 and reference fixtures",
            Box::new(|| codec_sweep(&levels, 8, Some(&reference_graph6))),
        ),
    ];

    let mut failures = 0;
    for (id, what, run) in &criteria {
        let t = Instant::now();
        let mut r = run();
        // Criterion 1 also vouches for the corpus it sweeps.
        if *id == 1 && !corpus_ok {
            r.failed += 1;
            r.messages.push("generated corpus has the wrong graph counts".into());
        }
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {id:>2}: {verdict} {what} ({} checks, {} failed, {:.1?})",
            r.checked,
            r.failed,
            t.elapsed()
        );
        if !r.notes.is_empty() {
            println!("              {:?}", r.notes);
        }
        for m in &r.messages {
            println!("              {m}");
        }
        failures += usize::from(!r.passed());
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1?}",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
