use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use tough_core::generators::{build_half_tough, enumerate_connected, enumerate_trees, TreeSpec};
use tough_core::graph6::write_graph6;
use tough_core::rational::{format_rational, parse_rational};
use tough_core::Rational;

use crate::analysis::{evaluate, Check, EvalConfig, Filter};
use crate::error::CliError;
use crate::input::{load, parse_lines, read_text, Source};
use crate::report::{run_scan, summary, ScanOptions};
use crate::selftest::run_selftest;

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_COUNTEREXAMPLE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "tough", version, about = "Exact toughness, connectivity and structure checks for small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full record for a single graph.
    Analyze(AnalyzeArgs),
    /// Evaluate every graph of a graph6 corpus.
    Scan(ScanArgs),
    /// Fixture and oracle-equivalence checks.
    Selftest(SelftestArgs),
    /// Print connected graphs or trees as graph6.
    Enumerate(EnumerateArgs),
}

fn parse_t(s: &str) -> Result<Rational, String> {
    let t = parse_rational(s).map_err(|e| e.to_string())?;
    if t <= Rational::from_integer(0) {
        return Err(format!("t must be positive, got {}", format_rational(&t)));
    }
    Ok(t)
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Toughness threshold as p/q.
    #[arg(long, value_parser = parse_t)]
    pub t: Rational,
    /// Checks to run (repeatable); all when omitted.
    #[arg(long = "check", value_enum)]
    pub checks: Vec<Check>,
    /// Use every minimum certificate and the full clause-4 cut count.
    #[arg(long)]
    pub exhaustive: bool,
    /// Record per-graph wall time (makes reports non-reproducible).
    #[arg(long)]
    pub timings: bool,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

impl CheckArgs {
    fn config(&self, filters: &[Filter]) -> EvalConfig {
        EvalConfig {
            t: self.t,
            filters: filters.iter().copied().collect(),
            checks: self.checks.iter().copied().collect::<BTreeSet<_>>(),
            exhaustive: self.exhaustive,
            timings: self.timings,
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// graph6 string; otherwise the first graph of --input.
    pub graph6: Option<String>,
    #[arg(long, conflicts_with = "graph6")]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub common: CheckArgs,
    /// Print JSON instead of the text summary.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// graph6 file, one graph per line; `-` or omitted for stdin.
    #[arg(long, conflicts_with = "enumerate")]
    pub input: Option<PathBuf>,
    /// Scan all connected graphs on 1..=N vertices instead of reading input.
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,
    #[arg(long = "filter", value_enum)]
    pub filters: Vec<Filter>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Include passing records.
    #[arg(long)]
    pub verbose: bool,
    /// Fail on the first malformed line.
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub common: CheckArgs,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Extra fixtures: lines of `graph6 tau kappa`.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Number of vertices.
    pub n: usize,
    /// Trees instead of connected graphs.
    #[arg(long)]
    pub trees: bool,
    #[arg(long, requires = "trees")]
    pub max_degree: Option<usize>,
    /// Apply the half-tough construction to each valid tree.
    #[arg(long, requires = "trees")]
    pub half_tough: bool,
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: "stdout".into(),
        source,
    }
}

fn analyze(args: &AnalyzeArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let text = match (&args.graph6, &args.input) {
        (Some(g), _) => g.clone(),
        (None, Some(p)) => read_text(p)?,
        (None, None) => return Err(CliError::Usage("give a graph6 string or --input".into())),
    };
    let (graphs, bad) = parse_lines(&text);
    if let Some(b) = bad.first() {
        if graphs.first().is_none_or(|g| g.line > b.line) {
            return Err(CliError::Malformed {
                line: b.line,
                message: b.message.clone(),
            });
        }
    }
    let item = graphs
        .first()
        .ok_or_else(|| CliError::Usage("input contains no graph".into()))?;
    let (record, failures) = evaluate(item, &args.common.config(&[]))?;
    let json = serde_json::to_string_pretty(&serde_json::json!({
        "schema": crate::report::SCHEMA,
        "t": format_rational(&args.common.t),
        "record": record,
        "counterexamples": failures,
    }))? + "\n";
    if let Some(p) = &args.common.report {
        write_file(p, &json)?;
    }
    if args.json {
        out.write_all(json.as_bytes()).map_err(stdout_err)?;
    } else {
        let r = &record;
        let mut s = format!(
            "graph6 {}\nn {}  m {}  delta {}\ntau {}  kappa {}  claw-free {}\nminimally {}-tough {}\n",
            r.graph6,
            r.n,
            r.m,
            r.delta,
            r.tau,
            r.kappa,
            r.claw_free,
            format_rational(&args.common.t),
            r.minimally_t_tough
        );
        if let Some(b) = r.bound {
            s += &format!("degree bound {b}  within bound {}\n", r.delta as i64 <= b);
        }
        for (name, c) in &r.clause_verdicts {
            s += &format!("  {name:<10} held {}  failed {}  not evaluable {}  vacuous {}\n", c.held, c.failed, c.not_evaluable, c.vacuous);
        }
        for f in &failures {
            s += &format!("FAILED {} {}\n", f.clause, serde_json::to_string(&f.evidence)?);
        }
        out.write_all(s.as_bytes()).map_err(stdout_err)?;
    }
    Ok(if failures.is_empty() { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn scan(args: &ScanArgs, out: &mut impl Write, err: &mut impl Write) -> Result<u8, CliError> {
    let source = match (&args.enumerate, &args.input) {
        (Some(n), _) => Source::Enumerate(*n),
        (None, Some(p)) if p.as_os_str() != "-" => Source::File(p.clone()),
        _ => Source::Stdin,
    };
    let (graphs, malformed) = load(&source)?;
    let opts = ScanOptions {
        eval: args.common.config(&args.filters),
        workers: args.workers,
        verbose: args.verbose,
        strict: args.strict,
        source: source.describe(),
    };
    let report = run_scan(&graphs, malformed, &opts)?;
    let json = report.to_json()?;
    match &args.common.report {
        Some(p) => {
            write_file(p, &json)?;
            out.write_all(summary(&report).as_bytes()).map_err(stdout_err)?;
        }
        None => {
            out.write_all(json.as_bytes()).map_err(stdout_err)?;
            err.write_all(summary(&report).as_bytes()).map_err(stdout_err)?;
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn enumerate(args: &EnumerateArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let graphs = if args.trees {
        let trees = enumerate_trees(args.n, args.max_degree)?;
        if args.half_tough {
            trees
                .into_iter()
                .map(TreeSpec::new)
                .filter(|s| s.violation().is_none())
                .map(|s| build_half_tough(&s))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            trees
        }
    } else {
        enumerate_connected(args.n)?
    };
    for g in graphs {
        writeln!(out, "{}", write_graph6(&g)?).map_err(stdout_err)?;
    }
    Ok(EXIT_OK)
}

/// Dispatches a parsed command line; the result is the process exit code.
pub fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Analyze(a) => analyze(a, out),
        Command::Scan(a) => scan(a, out, err),
        Command::Selftest(a) => {
            let ok = run_selftest(a.fixtures.as_deref(), a.inject_fault, out)?;
            Ok(if ok { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Enumerate(a) => enumerate(a, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<u8, CliError>, String) {
        let cli = Cli::try_parse_from(args).unwrap();
        let mut out = Vec::new();
        let r = run(&cli, &mut out, &mut Vec::new());
        (r, String::from_utf8(out).unwrap())
    }

    #[test]
    fn t_must_be_exact_and_positive() {
        assert!(Cli::try_parse_from(["tough", "analyze", "Cr", "--t", "0.5"]).is_err());
        assert!(Cli::try_parse_from(["tough", "analyze", "Cr", "--t", "0/1"]).is_err());
        assert!(Cli::try_parse_from(["tough", "analyze", "Cr", "--t", "1/2"]).is_ok());
    }

    #[test]
    fn check_and_filter_names() {
        let cli = Cli::try_parse_from([
            "tough", "scan", "--t", "1", "--check", "lemma24", "--check", "thm15", "--filter", "claw-free",
        ])
        .unwrap();
        let Command::Scan(s) = cli.command else { panic!() };
        assert_eq!(s.common.checks, vec![Check::Lemma24, Check::Thm15]);
        assert_eq!(s.filters, vec![Filter::ClawFree]);
    }

    #[test]
    fn analyze_fixtures() {
        let (r, text) = run_args(&["tough", "analyze", "Cr", "--t", "1", "--json"]);
        assert_eq!(r.unwrap(), EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["record"]["minimally_t_tough"], true);
        assert_eq!(v["record"]["delta"], 2);
        let (_, text) = run_args(&["tough", "analyze", "C~", "--t", "1", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["record"]["tau"], "inf");
        assert_eq!(v["record"]["minimally_t_tough"], false);
    }

    #[test]
    fn analyze_reports_parse_line() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.txt");
        fs::write(&p, "\nC!\nCr\n").unwrap();
        let (r, _) = run_args(&["tough", "analyze", "--input", p.to_str().unwrap(), "--t", "1"]);
        assert!(matches!(r, Err(CliError::Malformed { line: 2, .. })));
    }

    #[test]
    fn enumerate_outputs() {
        let (_, text) = run_args(&["tough", "enumerate", "4"]);
        assert_eq!(text.lines().count(), 6);
        let (_, text) = run_args(&["tough", "enumerate", "7", "--trees", "--half-tough"]);
        use tough_core::generators::{canonical_form, make_net};
        let net = canonical_form(&make_net()).unwrap();
        let forms: Vec<_> = text
            .lines()
            .map(|l| canonical_form(&tough_core::graph6::parse_graph6(l).unwrap()).unwrap())
            .collect();
        assert!(forms.contains(&net));
    }
}
