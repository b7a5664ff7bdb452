use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tough_core::rational::format_rational;

use crate::analysis::{evaluate, ClauseTally, Counterexample, EvalConfig, ScanRecord};
use crate::error::CliError;
use crate::input::{InputGraph, MalformedLine};

pub const SCHEMA: u32 = 1;

pub const STATUS_PASSED: &str = "all checks passed";
pub const STATUS_NONE: &str = "no qualifying graphs";
pub const STATUS_FAILED: &str = "counterexamples found";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub scanned: usize,
    pub malformed: usize,
    pub filtered_out: usize,
    pub qualifying: usize,
    pub qualifying_cycles: usize,
    pub qualifying_non_cycles: usize,
    /// Qualifying graphs with `delta = ceil(2t)`.
    pub qualifying_delta_ceil_2t: usize,
    pub violations: usize,
    pub clauses: BTreeMap<String, ClauseTally>,
}

impl Totals {
    fn add(&mut self, r: &ScanRecord) {
        self.scanned += 1;
        if r.qualifying {
            self.qualifying += 1;
            if r.is_cycle {
                self.qualifying_cycles += 1;
            } else {
                self.qualifying_non_cycles += 1;
            }
            self.qualifying_delta_ceil_2t += r.delta_is_ceil_2t as usize;
        } else {
            self.filtered_out += 1;
        }
        self.violations += r.violations;
        for (k, v) in &r.clause_verdicts {
            self.clauses.entry(k.clone()).or_default().merge(v);
        }
    }

    /// Totals implied by a full record list.
    pub fn recompute(records: &[ScanRecord], malformed: usize) -> Totals {
        let mut t = Totals {
            malformed,
            ..Totals::default()
        };
        records.iter().for_each(|r| t.add(r));
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema: u32,
    pub tool_version: String,
    pub t: String,
    pub source: String,
    pub filters: Vec<String>,
    pub checks: Vec<String>,
    pub exhaustive: bool,
    pub status: String,
    pub totals: Totals,
    pub records: Vec<ScanRecord>,
    pub counterexamples: Vec<Counterexample>,
    pub malformed: Vec<MalformedLine>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

pub struct ScanOptions {
    pub eval: EvalConfig,
    pub workers: usize,
    pub verbose: bool,
    pub strict: bool,
    pub source: String,
}

/// Evaluates every graph on a pool of `workers` threads. Results are
/// collected in input order, so the report does not depend on scheduling.
pub fn run_scan(
    graphs: &[InputGraph],
    malformed: Vec<MalformedLine>,
    opts: &ScanOptions,
) -> Result<ScanReport, CliError> {
    if opts.strict {
        if let Some(bad) = malformed.first() {
            return Err(CliError::Malformed {
                line: bad.line,
                message: bad.message.clone(),
            });
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let results: Vec<(ScanRecord, Vec<Counterexample>)> = pool.install(|| {
        graphs
            .par_iter()
            .map(|item| evaluate(item, &opts.eval))
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut totals = Totals {
        malformed: malformed.len(),
        ..Totals::default()
    };
    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    for (record, failures) in results {
        totals.add(&record);
        counterexamples.extend(failures);
        if opts.verbose || record.violations > 0 {
            records.push(record);
        }
    }
    let status = if totals.violations > 0 {
        STATUS_FAILED
    } else if totals.qualifying == 0 {
        STATUS_NONE
    } else {
        STATUS_PASSED
    };
    Ok(ScanReport {
        schema: SCHEMA,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        t: format_rational(&opts.eval.t),
        source: opts.source.clone(),
        filters: opts.eval.filters.iter().map(|f| f.name().to_string()).collect(),
        checks: opts.eval.active_checks().into_iter().map(String::from).collect(),
        exhaustive: opts.eval.exhaustive,
        status: status.to_string(),
        totals,
        records,
        counterexamples,
        malformed,
    })
}

/// Human-readable summary lines.
pub fn summary(report: &ScanReport) -> String {
    let t = &report.totals;
    let mut out = format!(
        "t = {}  source = {}\nscanned {}  malformed {}  qualifying {} ({} cycles, {} non-cycles)  filtered out {}\n",
        report.t,
        report.source,
        t.scanned,
        t.malformed,
        t.qualifying,
        t.qualifying_cycles,
        t.qualifying_non_cycles,
        t.filtered_out
    );
    if t.qualifying > 0 {
        out += &format!("delta = ceil(2t) in {}/{} qualifying graphs\n", t.qualifying_delta_ceil_2t, t.qualifying);
    }
    for (name, c) in &t.clauses {
        out += &format!(
            "  {name:<10} held {:>6}  failed {:>3}  not evaluable {:>4}  vacuous {}/{}\n",
            c.held,
            c.failed,
            c.not_evaluable,
            c.vacuous,
            c.total()
        );
    }
    for cx in &report.counterexamples {
        let edge = cx.edge.map(|(u, v)| format!(" edge {u}-{v}")).unwrap_or_default();
        out += &format!("COUNTEREXAMPLE {} line {} {}{}\n", cx.clause, cx.line, cx.graph6, edge);
    }
    out += &format!("status: {}\n", report.status);
    out
}
