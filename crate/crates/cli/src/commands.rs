//! The subcommands. Each returns its process exit status.

use std::fmt::Debug;
use std::fs;
use std::io::{self, BufRead, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use invdom_core::constructions::{
    bipartite_inverse_construct, find_special_independent, gamma5_construct, inddom_construct, theorem_main_construct,
    ConstructionError,
};
use invdom_core::generate::{
    all_graphs, all_graphs_up_to, clique_chain, corona, random_isolate_free, shuffled, EXHAUSTIVE_MAX_ORDER,
};
use invdom_core::{oracle, parse_edge_list, parse_graph6, solvers, write_graph6, Graph, InverseCertificate, VertexSet};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::item_rng;
use crate::report::{analyze, Checks, GraphReport};
use crate::suites::{run_all, Scale};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_CONTRADICTION: u8 = 4;

/// An error that ends a command, with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

pub type CmdResult = Result<u8, Failure>;

/// Reads a graph given as a graph6 string, a file holding graph6 (first
/// graph used), or an edge-list file.
pub fn load_graph(graph: Option<&str>, edges: Option<&Path>) -> Result<Graph, Failure> {
    if let Some(path) = edges {
        let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        return parse_edge_list(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())));
    }
    let arg = graph.ok_or_else(|| Failure::input("no graph given (pass graph6 text, a file, or --edges FILE)"))?;
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{arg}: {e}")))?;
        let (line_no, line) = text
            .lines()
            .enumerate()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| Failure::input(format!("{arg}: empty file")))?;
        return parse_graph6(line.trim().as_bytes()).map_err(|e| Failure::input(format!("{arg}:{}: {e}", line_no + 1)));
    }
    parse_graph6(arg.as_bytes()).map_err(|e| Failure::input(format!("`{arg}` is not graph6 or a file: {e}")))
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            fs::File::create(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_failure(e: io::Error) -> Failure {
    Failure::input(format!("write failed: {e}"))
}

fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::input(format!("thread pool: {e}")))
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string(value).expect("report serializes");
    writeln!(out, "{s}").map_err(io_failure)
}

// ---------------------------------------------------------------------------
// analyze

pub fn analyze_cmd(graph: Option<&str>, edges: Option<&Path>, json_only: bool) -> CmdResult {
    let g = load_graph(graph, edges)?;
    if g.has_isolated_vertex() {
        eprintln!(
            "warning: isolated vertices {}; inverse domination is undefined",
            g.isolated_vertices()
        );
    }
    let report = analyze(&g, &Checks::all(), false);
    if !json_only {
        println!("{report}");
    }
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    Ok(if report.failed() { EXIT_CHECK_FAILED } else { EXIT_OK })
}

// ---------------------------------------------------------------------------
// verify

pub struct VerifyOptions {
    pub input: String,
    pub strict: bool,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub checks: Checks,
    pub counterexamples: Option<PathBuf>,
    pub timings: bool,
}

#[derive(Debug, Default, Serialize)]
pub struct VerifySummary {
    pub graphs: usize,
    pub parse_errors: usize,
    pub skipped_isolates: usize,
    pub conjecture_failures: usize,
    pub three_halves_failures: usize,
    pub construction_failures: usize,
    pub contradictions: usize,
}

fn read_input(input: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if input == "-" {
        io::stdin()
            .lock()
            .read_to_string(&mut text)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(input).map_err(|e| Failure::input(format!("{input}: {e}")))?;
    }
    Ok(text)
}

pub fn verify_cmd(opts: &VerifyOptions) -> CmdResult {
    let text = read_input(&opts.input)?;
    let mut graphs = Vec::new();
    let mut summary = VerifySummary::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        match parse_graph6(line.as_bytes()) {
            Ok(g) => graphs.push(g),
            Err(e) => {
                summary.parse_errors += 1;
                eprintln!("{}:{}: {e}", opts.input, i + 1);
                if opts.strict {
                    return Err(Failure::input("aborting on malformed input (--strict)"));
                }
            }
        }
    }

    let pool = thread_pool(opts.jobs)?;
    let reports: Vec<GraphReport> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| analyze(g, &opts.checks, opts.timings))
            .collect()
    });

    let mut out = open_output(opts.out.as_deref())?;
    let mut counterexamples = Vec::new();
    for (g, r) in graphs.iter().zip(&reports) {
        json_line(&mut *out, r)?;
        summary.graphs += 1;
        if g.has_isolated_vertex() || g.order() == 0 {
            summary.skipped_isolates += 1;
        }
        summary.conjecture_failures += usize::from(r.conjecture_ok == Some(false));
        summary.three_halves_failures += usize::from(r.three_halves_ok == Some(false));
        summary.construction_failures += usize::from(r.main_thm_ok == Some(false));
        summary.contradictions += usize::from(r.contradiction.is_some());
        if r.failed() {
            counterexamples.push(r.graph6.clone());
        }
    }
    out.flush().map_err(io_failure)?;
    drop(out);

    if let Some(path) = &opts.counterexamples {
        let body: String = counterexamples.iter().map(|s| format!("{s}\n")).collect();
        fs::write(path, body).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    } else {
        for s in &counterexamples {
            eprintln!("counterexample: {s}");
        }
    }
    eprintln!("{}", serde_json::to_string(&summary).expect("summary serializes"));
    Ok(if summary.contradictions > 0 {
        EXIT_CONTRADICTION
    } else if counterexamples.is_empty() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

// ---------------------------------------------------------------------------
// construct

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Main,
    Bipartite,
    Gamma5,
    Inddom,
}

pub fn parse_vertex_list(s: &str) -> Result<VertexSet, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .ok()
                .filter(|&v| v < 64)
                .ok_or_else(|| format!("`{p}` is not a vertex id"))
        })
        .collect()
}

fn construction_failure(g: &Graph, d: Option<VertexSet>, e: ConstructionError) -> Failure {
    match e {
        ConstructionError::InternalContradiction(_)
        | ConstructionError::LemmaViolated(_)
        | ConstructionError::Certificate(_) => Failure {
            code: EXIT_CONTRADICTION,
            message: format!(
                "{e}\n  graph6: {}\n  edges: {:?}\n  D: {d:?}\n  error: {e:?}",
                write_graph6(g).unwrap_or_default(),
                g.edges().collect::<Vec<_>>()
            ),
        },
        ConstructionError::Graph(_) => Failure::input(e.to_string()),
        _ => Failure {
            code: EXIT_PRECONDITION,
            message: e.to_string(),
        },
    }
}

/// Re-checks a certificate with adjacency lookups and an exhaustive
/// domination number where that is affordable.
fn recheck(g: &Graph, cert: &InverseCertificate) -> Result<(), String> {
    cert.verify(g).map_err(|e| e.to_string())?;
    let gamma = if g.order() <= 20 {
        oracle::gamma(g)
    } else {
        solvers::gamma(g).0
    };
    cert.verify_minimum(g, gamma).map_err(|e| e.to_string())
}

pub fn construct_cmd(
    graph: Option<&str>,
    edges: Option<&Path>,
    which: Which,
    dset: Option<VertexSet>,
    s: Option<VertexSet>,
) -> CmdResult {
    let g = load_graph(graph, edges)?;
    if let Some(d) = dset {
        g.check_set(d).map_err(|e| Failure::input(e.to_string()))?;
    }
    if which == Which::Gamma5 && dset.is_some() {
        return Err(Failure::input(
            "--dset does not apply to gamma5, which picks an optimal set itself",
        ));
    }
    if which != Which::Inddom && s.is_some() {
        return Err(Failure::input("--set only applies to inddom"));
    }
    let d = dset.unwrap_or_else(|| solvers::gamma(&g).1);
    let fail = |e| construction_failure(&g, Some(d), e);
    let cert = match which {
        Which::Main => theorem_main_construct(&g, d).map_err(fail)?,
        Which::Bipartite => bipartite_inverse_construct(&g, d).map_err(fail)?,
        Which::Gamma5 => gamma5_construct(&g).map_err(|e| construction_failure(&g, None, e))?,
        Which::Inddom => {
            let s = match s {
                Some(s) => s,
                None => find_special_independent(&g, d).ok_or_else(|| Failure {
                    code: EXIT_PRECONDITION,
                    message: format!("no independent S with S - D dominating D - S for D = {d}"),
                })?,
            };
            inddom_construct(&g, d, s).map_err(fail)?
        }
    };
    recheck(&g, &cert).map_err(|e| Failure {
        code: EXIT_CONTRADICTION,
        message: format!("emitted certificate failed re-verification: {e}\n  {cert:?}"),
    })?;
    println!("{}", serde_json::to_string(&cert).expect("certificate serializes"));
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// search

pub struct SearchOptions {
    pub n: usize,
    pub p: f64,
    pub count: usize,
    pub seed: u64,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub counterexamples: Option<PathBuf>,
}

pub const SEARCH_MAX_ORDER: usize = 24;

const FAMILIES: [&str; 5] = ["gnp", "star", "corona", "clique_chain", "gnp_sparse"];

fn search_graph(opts: &SearchOptions, index: usize) -> (Graph, &'static str) {
    let mut rng = item_rng(opts.seed, index as u64);
    let n = opts.n;
    let family = FAMILIES[index % FAMILIES.len()];
    let g = match family {
        "gnp" => random_isolate_free(n, opts.p, &mut rng),
        "star" => Ok(Graph::star(n - 1)),
        "corona" if n >= 4 => {
            let base = random_isolate_free(n / 2, opts.p, &mut rng).expect("small graph");
            corona(&base)
        }
        "clique_chain" => {
            let mut sizes = Vec::new();
            let mut left = n;
            while left > 0 {
                let k = rng.random_range(1..=left.min(5));
                sizes.push(k);
                left -= k;
            }
            clique_chain(&sizes)
        }
        _ => random_isolate_free(n, rng.random_range(0.0..opts.p.max(1e-9)) * 0.5, &mut rng),
    }
    .expect("order within range");
    (shuffled(&g, &mut rng), family)
}

#[derive(Serialize)]
struct SearchRecord<'a> {
    index: usize,
    family: &'a str,
    graph6: String,
    metric: &'a str,
    numerator: usize,
    denominator: usize,
}

pub fn search_cmd(opts: &SearchOptions) -> CmdResult {
    if !(2..=SEARCH_MAX_ORDER).contains(&opts.n) {
        return Err(Failure::input(format!("--n must be between 2 and {SEARCH_MAX_ORDER}")));
    }
    if !(0.0..=1.0).contains(&opts.p) {
        return Err(Failure::input("--p must be a probability"));
    }
    let pool = thread_pool(opts.jobs)?;
    let rows: Vec<(String, &str, usize, usize, usize, usize)> = pool.install(|| {
        (0..opts.count)
            .into_par_iter()
            .map(|i| {
                let (g, family) = search_graph(opts, i);
                let alpha = solvers::alpha(&g).0;
                let (gamma, d) = solvers::gamma(&g);
                let inv = solvers::inverse_gamma(&g).expect("generated graphs are isolate-free").0;
                let t = theorem_main_construct(&g, d).map_or(usize::MAX, |c| c.t_set.len());
                (
                    write_graph6(&g).expect("small graph"),
                    family,
                    inv,
                    alpha,
                    t,
                    alpha + (gamma - 1) / 2,
                )
            })
            .collect()
    });

    let mut out = open_output(opts.out.as_deref())?;
    // Running maximum of each ratio per family, as (numerator, denominator).
    let mut best: std::collections::BTreeMap<(&str, &str), (usize, usize)> = Default::default();
    let mut counterexamples = Vec::new();
    let mut broken = 0;
    for (index, (g6, family, inv, alpha, t, bound)) in rows.iter().enumerate() {
        if inv > alpha {
            counterexamples.push(g6.clone());
        }
        if *t == usize::MAX {
            broken += 1;
            eprintln!("construction failed on {g6}");
            continue;
        }
        for (metric, num, den) in [
            ("inv_over_alpha", *inv, *alpha),
            ("construction_over_bound", *t, *bound),
        ] {
            let entry = best.entry((family, metric));
            let improved = match entry {
                std::collections::btree_map::Entry::Vacant(_) => true,
                std::collections::btree_map::Entry::Occupied(ref o) => num * o.get().1 > o.get().0 * den,
            };
            if improved {
                *entry.or_default() = (num, den);
                json_line(
                    &mut *out,
                    &SearchRecord {
                        index,
                        family,
                        graph6: g6.clone(),
                        metric,
                        numerator: num,
                        denominator: den,
                    },
                )?;
            }
        }
    }
    out.flush().map_err(io_failure)?;
    drop(out);
    if let Some(path) = &opts.counterexamples {
        let body: String = counterexamples.iter().map(|s| format!("{s}\n")).collect();
        fs::write(path, body).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    for s in &counterexamples {
        eprintln!("counterexample: {s}");
    }
    eprintln!(
        "searched {} graphs: {} counterexamples, {} construction failures",
        opts.count,
        counterexamples.len(),
        broken
    );
    Ok(if broken > 0 {
        EXIT_CONTRADICTION
    } else if counterexamples.is_empty() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

// ---------------------------------------------------------------------------
// selftest, generate

pub fn selftest_cmd(inject_fault: bool, jobs: Option<usize>) -> CmdResult {
    let scale = Scale {
        inject_fault,
        ..Scale::selftest()
    };
    let pool = thread_pool(jobs)?;
    let results = pool.install(|| {
        let levels = all_graphs_up_to(scale.sweep_max_n.max(scale.construct_max_n));
        run_all(&levels, &scale)
    });
    let mut all_pass = true;
    for r in &results {
        println!("{r}");
        all_pass &= r.passed();
    }
    println!(
        "{} of {} properties passed",
        results.iter().filter(|r| r.passed()).count(),
        results.len()
    );
    Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn generate_cmd(n: usize, connected: bool, up_to: bool, out: Option<&Path>) -> CmdResult {
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(Failure::input(format!("--n must be at most {EXHAUSTIVE_MAX_ORDER}")));
    }
    let graphs: Vec<Graph> = if up_to {
        all_graphs_up_to(n).into_iter().flatten().collect()
    } else {
        all_graphs(n)
    };
    let mut w = open_output(out)?;
    for g in graphs.iter().filter(|g| !connected || g.is_connected()) {
        writeln!(w, "{}", write_graph6(g).expect("small graph")).map_err(io_failure)?;
    }
    w.flush().map_err(io_failure)?;
    Ok(EXIT_OK)
}

/// Lines of a graph6 corpus read from `reader`, parsed. Used by tests.
pub fn read_graph6_lines(reader: impl BufRead) -> Vec<Result<Graph, String>> {
    reader
        .lines()
        .map_while(Result::ok)
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim().as_bytes()).map_err(|e| e.to_string()))
        .collect()
}
