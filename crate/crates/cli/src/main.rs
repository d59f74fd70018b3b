use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use invdom_cli::commands::{self, SearchOptions, VerifyOptions, Which};
use invdom_cli::Checks;
use invdom_core::VertexSet;

#[derive(Parser)]
#[command(
    name = "invdom",
    version,
    about = "Inverse domination: exact values, constructions and bound checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Main,
    Bipartite,
    Gamma5,
    Inddom,
}

#[derive(Subcommand)]
enum Command {
    /// Report the invariants of one graph and check every bound.
    Analyze {
        /// graph6 text, or a file whose first line is graph6.
        graph: Option<String>,
        /// Read the graph from an edge-list file instead.
        #[arg(long, value_name = "FILE")]
        edges: Option<PathBuf>,
        /// Print only the JSON line.
        #[arg(long)]
        json: bool,
    },
    /// Check every graph of a graph6 corpus, one JSON report per line.
    Verify {
        /// graph6 file, or `-` for stdin.
        input: String,
        /// Stop at the first malformed line.
        #[arg(long)]
        strict: bool,
        /// Worker threads (default: all cores).
        #[arg(long, env = "INVDOM_JOBS")]
        jobs: Option<usize>,
        /// Write reports here instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Comma-separated subset of conjecture,three-halves,main,strong,bipartite.
        #[arg(
            long,
            value_name = "LIST",
            default_value = "conjecture,three-halves,main,strong,bipartite"
        )]
        checks: Checks,
        /// Write graph6 of every failing graph here.
        #[arg(long, value_name = "FILE")]
        counterexamples: Option<PathBuf>,
        /// Include per-graph running time (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Build an inverse dominating set and print its certificate as JSON.
    Construct {
        graph: Option<String>,
        #[arg(long, value_name = "FILE")]
        edges: Option<PathBuf>,
        #[arg(long, value_enum)]
        which: Construction,
        /// Minimum dominating set to start from (default: the solver's).
        #[arg(long, value_name = "LIST", value_parser = commands::parse_vertex_list)]
        dset: Option<VertexSet>,
        /// Independent set for `inddom` (default: searched).
        #[arg(long = "set", value_name = "LIST", value_parser = commands::parse_vertex_list)]
        s: Option<VertexSet>,
    },
    /// Random search for graphs where the bounds are nearly tight.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "INVDOM_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        counterexamples: Option<PathBuf>,
    },
    /// Run every invariant suite on small graphs.
    Selftest {
        /// Corrupt the independence number seen by the checks; must fail.
        #[arg(long)]
        inject_fault: bool,
        #[arg(long, env = "INVDOM_JOBS")]
        jobs: Option<usize>,
    },
    /// Write every graph of a given order (up to isomorphism) as graph6.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Include every order from 0 to n.
        #[arg(long)]
        up_to: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { graph, edges, json } => commands::analyze_cmd(graph.as_deref(), edges.as_deref(), json),
        Command::Verify {
            input,
            strict,
            jobs,
            out,
            checks,
            counterexamples,
            timings,
        } => commands::verify_cmd(&VerifyOptions {
            input,
            strict,
            jobs,
            out,
            checks,
            counterexamples,
            timings,
        }),
        Command::Construct {
            graph,
            edges,
            which,
            dset,
            s,
        } => {
            let which = match which {
                Construction::Main => Which::Main,
                Construction::Bipartite => Which::Bipartite,
                Construction::Gamma5 => Which::Gamma5,
                Construction::Inddom => Which::Inddom,
            };
            commands::construct_cmd(graph.as_deref(), edges.as_deref(), which, dset, s)
        }
        Command::Search {
            n,
            p,
            count,
            seed,
            jobs,
            out,
            counterexamples,
        } => commands::search_cmd(&SearchOptions {
            n,
            p,
            count,
            seed,
            jobs,
            out,
            counterexamples,
        }),
        Command::Selftest { inject_fault, jobs } => commands::selftest_cmd(inject_fault, jobs),
        Command::Generate {
            n,
            connected,
            up_to,
            out,
        } => commands::generate_cmd(n, connected, up_to, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
