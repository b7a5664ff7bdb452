//! Built-in fixtures plus oracle equivalence on every small connected graph.

use std::io::Write;
use std::path::Path;

use tough_core::connectivity::vertex_connectivity;
use tough_core::generators::{enumerate_connected, make_complete, make_cycle, make_net, make_path, make_petersen, make_star};
use tough_core::graph6::{parse_graph6, write_graph6};
use tough_core::rational::parse_rational;
use tough_core::toughness::{toughness_with, SolverOptions, ToughnessValue};
use tough_core::{oracle, Graph};

use crate::error::CliError;
use crate::input::read_text;

/// Graph, expected toughness (`"p/q"` or `"inf"`), expected connectivity.
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub tau: String,
    pub kappa: usize,
}

pub fn builtin_fixtures() -> Vec<Fixture> {
    let f = |name: &str, graph: Graph, tau: &str, kappa| Fixture {
        name: name.into(),
        graph,
        tau: tau.into(),
        kappa,
    };
    vec![
        f("C4", make_cycle(4).unwrap(), "1/1", 2),
        f("C7", make_cycle(7).unwrap(), "1/1", 2),
        f("K4", make_complete(4).unwrap(), "inf", 3),
        f("K1", make_complete(1).unwrap(), "inf", 0),
        f("claw", make_star(3).unwrap(), "1/3", 1),
        f("P3", make_path(3).unwrap(), "1/2", 1),
        f("net", make_net(), "1/2", 1),
        f("Petersen", make_petersen(), "4/3", 3),
    ]
}

/// Lines of `graph6 tau kappa`; `#` starts a comment.
pub fn load_fixtures(path: &Path) -> Result<Vec<Fixture>, CliError> {
    if !path.exists() {
        return Err(CliError::MissingFixtures(path.display().to_string()));
    }
    let text = read_text(path)?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| CliError::BadFixture { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [g6, tau, kappa] = fields[..] else {
            return Err(bad(format!("expected 3 fields, found {}", fields.len())));
        };
        let graph = parse_graph6(g6).map_err(|e| bad(e.to_string()))?;
        if tau != "inf" {
            parse_rational(tau).map_err(|e| bad(e.to_string()))?;
        }
        let kappa = kappa.parse().map_err(|_| bad(format!("bad connectivity {kappa:?}")))?;
        out.push(Fixture {
            name: g6.to_string(),
            graph,
            tau: tau.to_string(),
            kappa,
        });
    }
    Ok(out)
}

fn pair(v: &ToughnessValue) -> Option<(tough_core::Rational, Vec<usize>)> {
    match v {
        ToughnessValue::Infinite => None,
        ToughnessValue::Finite { value, witness } => Some((*value, witness.as_slice().to_vec())),
    }
}

/// Runs the suite, writing one line per failure and a summary. Returns
/// whether everything passed.
pub fn run_selftest(
    fixtures: Option<&Path>,
    inject_fault: bool,
    out: &mut impl Write,
) -> Result<bool, CliError> {
    let opts = SolverOptions {
        unsound_bound: inject_fault,
        ..SolverOptions::default()
    };
    let mut cases = builtin_fixtures();
    if let Some(p) = fixtures {
        cases.extend(load_fixtures(p)?);
    }
    let io = |e| CliError::Io {
        path: "stdout".into(),
        source: e,
    };

    let mut failures = 0usize;
    for f in &cases {
        let tau = toughness_with(&f.graph, opts)?.to_string();
        let kappa = vertex_connectivity(&f.graph)?.kappa;
        if tau != f.tau || kappa != f.kappa {
            failures += 1;
            writeln!(
                out,
                "FAIL fixture {}: tau {} kappa {} (expected {} and {})",
                f.name, tau, kappa, f.tau, f.kappa
            )
            .map_err(io)?;
        }
    }

    let mut compared = 0usize;
    for n in 1..=6 {
        for g in enumerate_connected(n)? {
            compared += 1;
            let ours = pair(&toughness_with(&g, opts)?);
            let reference = oracle::toughness(&g).map(|(v, w)| (v, w.into_vec()));
            if ours != reference {
                failures += 1;
                writeln!(out, "FAIL oracle {}: {:?} vs {:?}", write_graph6(&g)?, ours, reference).map_err(io)?;
            }
        }
    }
    writeln!(
        out,
        "selftest: {} fixtures, {} oracle comparisons, {} failures",
        cases.len(),
        compared,
        failures
    )
    .map_err(io)?;
    Ok(failures == 0)
}
