//! Per-graph evaluation shared by `analyze` and `scan`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use tough_core::connectivity::{check_mader_atom_property, vertex_connectivity};
use tough_core::graph::degree_profile;
use tough_core::rational::format_rational;
use tough_core::structure::{
    check_half_tough_characterization, check_matthews_sumner, conjecture_bound, find_claw, merge_verdicts, proven_bound, ClauseId,
    ClauseVerdict, Evidence, LemmaContext, LemmaOptions, Outcome,
};
use tough_core::toughness::{all_edge_certificates, check_minimality, edge_certificate, toughness};
use tough_core::{Edge, Graph, Rational};

use crate::error::CliError;
use crate::input::InputGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Check {
    #[value(name = "ms")]
    Ms,
    #[value(name = "lemma23")]
    Lemma23,
    #[value(name = "lemma24")]
    Lemma24,
    #[value(name = "bound")]
    Bound,
    #[value(name = "mader")]
    Mader,
    #[value(name = "thm15")]
    Thm15,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Ms,
        Check::Lemma23,
        Check::Lemma24,
        Check::Bound,
        Check::Mader,
        Check::Thm15,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Ms => "ms",
            Check::Lemma23 => "lemma23",
            Check::Lemma24 => "lemma24",
            Check::Bound => "bound",
            Check::Mader => "mader",
            Check::Thm15 => "thm15",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Filter {
    #[value(name = "claw-free")]
    ClawFree,
    #[value(name = "minimal")]
    Minimal,
    #[value(name = "noncomplete")]
    Noncomplete,
}

impl Filter {
    pub fn name(self) -> &'static str {
        match self {
            Filter::ClawFree => "claw-free",
            Filter::Minimal => "minimal",
            Filter::Noncomplete => "noncomplete",
        }
    }
}

/// What to compute for each graph.
#[derive(Debug, Clone)]
pub struct EvalConfig {
    pub t: Rational,
    pub filters: BTreeSet<Filter>,
    /// Empty means every check.
    pub checks: BTreeSet<Check>,
    /// Evaluate lemma clauses over every minimum certificate, including the
    /// cut-count half of clause 4.
    pub exhaustive: bool,
    pub timings: bool,
}

impl EvalConfig {
    pub fn new(t: Rational) -> Self {
        EvalConfig {
            t,
            filters: BTreeSet::new(),
            checks: BTreeSet::new(),
            exhaustive: false,
            timings: false,
        }
    }

    pub fn runs(&self, c: Check) -> bool {
        self.checks.is_empty() || self.checks.contains(&c)
    }

    pub fn active_checks(&self) -> Vec<&'static str> {
        Check::ALL.iter().filter(|c| self.runs(**c)).map(|c| c.name()).collect()
    }
}

/// Verdict counts for one clause.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseTally {
    pub applicable: usize,
    pub held: usize,
    pub failed: usize,
    pub vacuous: usize,
    pub not_evaluable: usize,
}

impl ClauseTally {
    pub fn add(&mut self, v: &ClauseVerdict) {
        match v.outcome {
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Holds => self.held += 1,
            Outcome::Fails => self.failed += 1,
            Outcome::NotEvaluable => self.not_evaluable += 1,
        }
        self.applicable += v.applicable as usize;
    }

    pub fn merge(&mut self, o: &ClauseTally) {
        self.applicable += o.applicable;
        self.held += o.held;
        self.failed += o.failed;
        self.vacuous += o.vacuous;
        self.not_evaluable += o.not_evaluable;
    }

    pub fn total(&self) -> usize {
        self.held + self.failed + self.vacuous + self.not_evaluable
    }
}

/// One graph's row in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    /// `"p/q"` or `"inf"`.
    pub tau: String,
    pub claw_free: bool,
    pub minimally_t_tough: bool,
    /// Passed every filter.
    pub qualifying: bool,
    pub is_cycle: bool,
    pub delta: usize,
    pub bound: Option<i64>,
    /// `delta <= bound`.
    pub bound_ok: Option<bool>,
    /// `delta = ceil(2t)`.
    pub delta_is_ceil_2t: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub clause_verdicts: BTreeMap<String, ClauseTally>,
    pub violations: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// A failed verdict with everything needed to re-check it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub line: usize,
    pub graph6: String,
    pub t: String,
    pub clause: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<(usize, usize)>,
    pub evidence: Evidence,
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

struct Collector<'a> {
    item: &'a InputGraph,
    t: &'a Rational,
    tallies: BTreeMap<String, ClauseTally>,
    failures: Vec<Counterexample>,
}

impl Collector<'_> {
    fn record(&mut self, v: &ClauseVerdict, edge: Option<Edge>) {
        let name = v.clause.name();
        self.tallies.entry(name.to_string()).or_default().add(v);
        if v.failed() {
            self.failures.push(Counterexample {
                line: self.item.line,
                graph6: self.item.graph6.clone(),
                t: format_rational(self.t),
                clause: name.to_string(),
                edge: edge.map(|e| (e.u, e.v)),
                evidence: v.evidence.clone(),
            });
        }
    }
}

/// Verdict of the atom property as a clause verdict.
pub fn mader_verdict(g: &Graph) -> Result<ClauseVerdict, CliError> {
    let id = ClauseId::Mader;
    if g.is_complete() || !g.is_connected() {
        return Ok(ClauseVerdict::vacuous(id, "graph is complete or disconnected"));
    }
    let m = check_mader_atom_property(g)?;
    let mut ev = Evidence::default()
        .value("atoms", m.atoms_checked)
        .value("cuts", m.cuts_checked);
    if let Some((a, t)) = &m.violation {
        ev.add_set("atom", a.clone());
        ev.add_set("cut", t.clone());
    }
    Ok(ClauseVerdict::decided(id, m.holds, ev))
}

fn bound_verdict(delta: usize, bound: Option<i64>, hypotheses: bool) -> ClauseVerdict {
    let id = ClauseId::DegreeBound;
    match bound {
        _ if !hypotheses => ClauseVerdict::vacuous(id, "not minimally t-tough and claw-free"),
        None => ClauseVerdict::vacuous(id, "no proven bound at this t"),
        Some(b) => ClauseVerdict::decided(
            id,
            delta as i64 <= b,
            Evidence::default().value("delta", delta).value("bound", b),
        ),
    }
}

fn lemma_checks(
    g: &Graph,
    cfg: &EvalConfig,
    claw_free: bool,
    out: &mut Collector<'_>,
) -> Result<(), CliError> {
    let opts = if cfg.exhaustive {
        LemmaOptions::exhaustive()
    } else {
        LemmaOptions::default()
    };
    let mut ctx = LemmaContext::new(g, &cfg.t, opts)?;
    for e in g.edges() {
        let certs = if cfg.exhaustive {
            all_edge_certificates(g, e, &cfg.t)?
        } else {
            vec![edge_certificate(g, e, &cfg.t)?]
        };
        if cfg.runs(Check::Lemma23) {
            let vs = certs.iter().map(|c| ctx.lemma_2_3(c)).collect::<Result<Vec<_>, _>>()?;
            out.record(&merge_verdicts(vs).expect("one certificate at least"), Some(e));
        }
        if cfg.runs(Check::Lemma24) {
            if !claw_free {
                for id in ClauseId::LEMMA24 {
                    out.record(&ClauseVerdict::vacuous(id, "graph has a claw"), Some(e));
                }
                continue;
            }
            let mut per_clause: Vec<Vec<ClauseVerdict>> = vec![Vec::new(); 6];
            for c in &certs {
                for (i, v) in ctx.lemma_2_4(c)?.into_iter().enumerate() {
                    per_clause[i].push(v);
                }
            }
            for vs in per_clause {
                out.record(&merge_verdicts(vs).expect("one certificate at least"), Some(e));
            }
        }
    }
    Ok(())
}

/// Computes the record for one graph and any failed verdicts.
pub fn evaluate(item: &InputGraph, cfg: &EvalConfig) -> Result<(ScanRecord, Vec<Counterexample>), CliError> {
    let start = Instant::now();
    let g = &item.graph;
    let t = &cfg.t;
    let tau = toughness(g)?;
    let kappa = vertex_connectivity(g)?.kappa;
    let claw_free = find_claw(g).is_none();
    let minimal = check_minimality(g, t)?.is_none();
    let delta = degree_profile(g)?.min;
    let bound = proven_bound(t);
    let qualifying = cfg.filters.iter().all(|f| match f {
        Filter::ClawFree => claw_free,
        Filter::Minimal => minimal,
        Filter::Noncomplete => !g.is_complete(),
    });

    let mut out = Collector {
        item,
        t,
        tallies: BTreeMap::new(),
        failures: Vec::new(),
    };
    if qualifying {
        if cfg.runs(Check::Ms) {
            out.record(&check_matthews_sumner(g)?, None);
        }
        if cfg.runs(Check::Mader) {
            out.record(&mader_verdict(g)?, None);
        }
        if cfg.runs(Check::Thm15) {
            out.record(&check_half_tough_characterization(g)?, None);
        }
        if cfg.runs(Check::Bound) {
            out.record(&bound_verdict(delta, bound, minimal && claw_free), None);
        }
        if minimal && (cfg.runs(Check::Lemma23) || cfg.runs(Check::Lemma24)) {
            lemma_checks(g, cfg, claw_free, &mut out)?;
        }
    }

    let record = ScanRecord {
        line: item.line,
        graph6: item.graph6.clone(),
        n: g.n(),
        m: g.m(),
        kappa,
        tau: tau.to_string(),
        claw_free,
        minimally_t_tough: minimal,
        qualifying,
        is_cycle: is_cycle(g),
        delta,
        bound,
        bound_ok: bound.map(|b| delta as i64 <= b),
        delta_is_ceil_2t: delta as i64 == conjecture_bound(t),
        clause_verdicts: out.tallies,
        violations: out.failures.len(),
        elapsed_ms: cfg.timings.then(|| start.elapsed().as_millis() as u64),
    };
    Ok((record, out.failures))
}

/// Re-derives a counterexample from its serialized fields: the graph is
/// re-parsed, witness sets in the evidence are re-checked against the graph,
/// and the verdict is recomputed. `Ok(())` means the failure is genuine.
pub fn revalidate(cx: &Counterexample) -> Result<(), String> {
    use tough_core::graph::components_after_removal;
    use tough_core::graph6::parse_graph6;
    use tough_core::rational::parse_rational;

    let g = parse_graph6(&cx.graph6).map_err(|e| e.to_string())?;
    let t = parse_rational(&cx.t).map_err(|e| e.to_string())?;
    let item = InputGraph {
        line: cx.line,
        graph6: cx.graph6.clone(),
        graph: g.clone(),
    };
    let set = |k: &str| cx.evidence.sets.get(k).cloned().ok_or(format!("evidence lacks {k}"));

    match cx.clause.as_str() {
        "ms" => {
            let tau_w = set("tau_witness")?;
            let w = components_after_removal(&g, &tau_w).map_err(|e| e.to_string())?.count;
            let claimed = parse_rational(cx.evidence.values.get("tau").ok_or("evidence lacks tau")?)
                .map_err(|e| e.to_string())?;
            if w < 2 || Rational::new(tau_w.len() as i64, w as i64) != claimed {
                return Err("tau witness does not attain the recorded value".into());
            }
        }
        "mader" => {
            let (atom, cut) = (set("atom")?, set("cut")?);
            if g.neighborhood(&atom).len() != cut.len() || !atom.intersects(&cut) {
                return Err("recorded atom and cut do not form a violation".into());
            }
        }
        c if c.starts_with("lemma") => {
            let (u, v) = cx.edge.ok_or("lemma counterexample without an edge")?;
            let s = set("S")?;
            let certs = all_edge_certificates(&g, Edge::new(u, v), &t).map_err(|e| e.to_string())?;
            if !certs.iter().any(|c| c.s == s) {
                return Err(format!("{s} is not a minimum certificate"));
            }
        }
        _ => {}
    }

    let cfg = EvalConfig {
        t,
        filters: BTreeSet::new(),
        checks: BTreeSet::new(),
        exhaustive: true,
        timings: false,
    };
    let (_, failures) = evaluate(&item, &cfg).map_err(|e| e.to_string())?;
    let again = failures
        .iter()
        .any(|f| f.clause == cx.clause && f.edge == cx.edge);
    if again {
        Ok(())
    } else {
        Err(format!("clause {} holds on recomputation", cx.clause))
    }
}
