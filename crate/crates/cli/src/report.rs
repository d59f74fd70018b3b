//! Per-graph reports: the invariants of one graph and the outcome of each
//! bound check.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use invdom_core::constructions::{theorem_main_construct, ConstructionError};
use invdom_core::{solvers, write_graph6, Graph};
use serde::Serialize;

/// One toggleable check. `gamma` and `alpha` are always computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `γ⁻¹ <= α`
    Conjecture,
    /// `2γ⁻¹ <= 3α - 2` on non-cliques
    ThreeHalves,
    /// The constructive bound `α + ⌊(γ - 1)/2⌋`
    Main,
    /// Strong inverse domination number (data only)
    Strong,
    /// Largest induced bipartite subgraph (data only)
    Bipartite,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Conjecture,
        Check::ThreeHalves,
        Check::Main,
        Check::Strong,
        Check::Bipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Conjecture => "conjecture",
            Check::ThreeHalves => "three-halves",
            Check::Main => "main",
            Check::Strong => "strong",
            Check::Bipartite => "bipartite",
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL.into_iter().find(|c| c.name() == s.trim()).ok_or_else(|| {
            let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
            format!("unknown check `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// Set of enabled checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checks(Vec<Check>);

impl Checks {
    pub fn all() -> Self {
        Checks(Check::ALL.to_vec())
    }

    pub fn contains(&self, c: Check) -> bool {
        self.0.contains(&c)
    }
}

impl Default for Checks {
    fn default() -> Self {
        Checks::all()
    }
}

impl FromStr for Checks {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut v = s
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Check>, _>>()?;
        v.sort();
        v.dedup();
        Ok(Checks(v))
    }
}

/// Field order here is the JSON field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub alpha: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inv_gamma: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_inv_gamma: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    /// `None` (JSON `null`) when the check is off or undefined.
    pub conjecture_ok: Option<bool>,
    /// `None` also for cliques, where the bound does not apply.
    pub three_halves_ok: Option<bool>,
    pub main_thm_ok: Option<bool>,
    /// Set when the constructive bound raised an internal contradiction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contradiction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_micros: Option<u64>,
}

/// `2 · inv <= 3 · alpha - 2`, in integers.
pub fn three_halves_holds(inv: usize, alpha: usize) -> bool {
    2 * inv + 2 <= 3 * alpha
}

impl GraphReport {
    /// True if any enabled check failed.
    pub fn failed(&self) -> bool {
        [self.conjecture_ok, self.three_halves_ok, self.main_thm_ok].contains(&Some(false))
    }
}

/// Computes the report for `g`. Graphs with more than 62 vertices have no
/// graph6 form and are reported with an empty `graph6` field.
pub fn analyze(g: &Graph, checks: &Checks, timings: bool) -> GraphReport {
    let start = Instant::now();
    let (gamma, d_set) = solvers::gamma(g);
    let (alpha, _) = solvers::alpha(g);
    let isolate_free = g.order() > 0 && !g.has_isolated_vertex();

    let needs_inv = checks.contains(Check::Conjecture) || checks.contains(Check::ThreeHalves);
    let inv_gamma = (isolate_free && needs_inv)
        .then(|| solvers::inverse_gamma(g).ok().map(|(v, _)| v))
        .flatten();
    let strong_inv_gamma = (isolate_free && checks.contains(Check::Strong))
        .then(|| solvers::strong_inverse_gamma(g).ok())
        .flatten();
    let b = checks
        .contains(Check::Bipartite)
        .then(|| solvers::max_induced_bipartite(g).0);

    let conjecture_ok = inv_gamma
        .filter(|_| checks.contains(Check::Conjecture))
        .map(|i| i <= alpha);
    let three_halves_ok = inv_gamma
        .filter(|_| checks.contains(Check::ThreeHalves) && !g.is_clique())
        .map(|i| three_halves_holds(i, alpha));

    let mut contradiction = None;
    let main_thm_ok = (isolate_free && checks.contains(Check::Main)).then(|| match theorem_main_construct(g, d_set) {
        Ok(cert) => cert.t_set.len() <= alpha + (gamma - 1) / 2,
        Err(e) => {
            if matches!(e, ConstructionError::InternalContradiction(_)) {
                contradiction = Some(e.to_string());
            }
            false
        }
    });

    GraphReport {
        graph6: write_graph6(g).unwrap_or_default(),
        n: g.order(),
        m: g.size(),
        gamma,
        alpha,
        inv_gamma,
        strong_inv_gamma,
        b,
        conjecture_ok,
        three_halves_ok,
        main_thm_ok,
        contradiction,
        elapsed_micros: timings.then(|| start.elapsed().as_micros() as u64),
    }
}

impl fmt::Display for GraphReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn opt<T: fmt::Display>(v: Option<T>) -> String {
            v.map_or_else(|| "-".to_string(), |x| x.to_string())
        }
        fn verdict(v: Option<bool>) -> &'static str {
            match v {
                Some(true) => "ok",
                Some(false) => "FAILED",
                None => "n/a",
            }
        }
        writeln!(f, "graph6            {}", self.graph6)?;
        writeln!(f, "order, size       {}, {}", self.n, self.m)?;
        writeln!(f, "γ                 {}", self.gamma)?;
        writeln!(f, "α                 {}", self.alpha)?;
        writeln!(f, "γ⁻¹               {}", opt(self.inv_gamma))?;
        writeln!(f, "strong γ⁻¹        {}", opt(self.strong_inv_gamma))?;
        writeln!(f, "b                 {}", opt(self.b))?;
        writeln!(f, "γ⁻¹ <= α          {}", verdict(self.conjecture_ok))?;
        writeln!(f, "γ⁻¹ <= 3α/2 - 1   {}", verdict(self.three_halves_ok))?;
        write!(f, "construction      {}", verdict(self.main_thm_ok))?;
        if let Some(c) = &self.contradiction {
            write!(f, "\ncontradiction     {c}")?;
        }
        if let Some(t) = self.elapsed_micros {
            write!(f, "\nelapsed           {t} µs")?;
        }
        Ok(())
    }
}
