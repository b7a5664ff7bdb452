//! Literal checks of the edge-certificate lemmas for minimally t-tough
//! graphs.
//!
//! Each clause is evaluated against one certificate `S(e)`. "Contained in a
//! 2t-vertex-cut" means some disconnecting set of size exactly `2t` contains
//! the vertex, found by exhaustive enumeration; when `2t` is not an integer
//! such clauses are reported as not evaluable.

use std::collections::HashMap;

use crate::connectivity::first_cut_containing;
use crate::error::Result;
use crate::graph::{degree_profile, Edge, Graph, VertexSet};
use crate::rational::{ceil, format_rational, Rational};
use crate::toughness::{
    all_edge_certificates, certificate_decomposition_stats, check_minimality, edge_certificate, EdgeCertificate,
};

use super::claw::find_claw;
use super::verdict::{merge_verdicts, ClauseId, ClauseVerdict, Evidence, Outcome};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LemmaOptions {
    /// Evaluate against every minimum certificate, not just the lex-least.
    pub all_certificates: bool,
    /// Also check the second conclusion of clause 4 (at least `2t - 1`
    /// vertices of `N_S(C(e))` in `2t`-cuts).
    pub clause4_cut_count: bool,
}

impl LemmaOptions {
    pub fn exhaustive() -> Self {
        LemmaOptions {
            all_certificates: true,
            clause4_cut_count: true,
        }
    }
}

/// Shared state for checking many certificates of one graph.
pub struct LemmaContext<'g> {
    g: &'g Graph,
    t: Rational,
    delta: usize,
    cut_size: Option<usize>,
    cache: HashMap<usize, Option<VertexSet>>,
    pub opts: LemmaOptions,
}

fn r(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

fn ri(x: i64) -> Rational {
    Rational::from_integer(x)
}

impl<'g> LemmaContext<'g> {
    /// The caller is responsible for the lemma hypotheses (minimally
    /// t-tough, and claw-free for the clause suite).
    pub fn new(g: &'g Graph, t: &Rational, opts: LemmaOptions) -> Result<Self> {
        let delta = degree_profile(g)?.min;
        let two_t = *t * 2;
        let cut_size = (two_t.is_integer() && two_t >= ri(1)).then(|| two_t.to_integer() as usize);
        Ok(LemmaContext {
            g,
            t: *t,
            delta,
            cut_size,
            cache: HashMap::new(),
            opts,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    /// Some `2t`-cut through `v`. `None` from the outer option means `2t`
    /// is not an integer.
    fn cut_through(&mut self, v: usize) -> Result<Option<Option<VertexSet>>> {
        let Some(k) = self.cut_size else {
            return Ok(None);
        };
        if let Some(hit) = self.cache.get(&v) {
            return Ok(Some(hit.clone()));
        }
        let hit = if self.g.is_complete() {
            None
        } else {
            first_cut_containing(self.g, v, k)?
        };
        self.cache.insert(v, hit.clone());
        Ok(Some(hit))
    }

    /// Whether every vertex of `vs` lies in a `2t`-cut; `None` if not
    /// evaluable. Records witnesses or the first missing vertex.
    fn all_in_cuts(&mut self, vs: &VertexSet, label: &str, ev: &mut Evidence) -> Result<Option<bool>> {
        for v in vs.iter() {
            match self.cut_through(v)? {
                None => return Ok(None),
                Some(Some(cut)) => ev.add_set(format!("{label}.cut_through_{v}"), cut),
                Some(None) => {
                    ev.add_value(format!("{label}.no_cut_through"), v);
                    return Ok(Some(false));
                }
            }
        }
        Ok(Some(true))
    }

    fn base_evidence(&self, cert: &EdgeCertificate) -> Evidence {
        Evidence::default()
            .value("edge", cert.edge)
            .value("t", format_rational(&self.t))
            .value("k", cert.k)
            .set("S", cert.s.clone())
            .set("C", cert.c_of_e.clone())
            .set("D", cert.d_of_e.clone())
            .set("C_u", cert.c_u.clone())
            .set("C_v", cert.c_v.clone())
    }

    /// If `D(e)` is empty then `delta <= 2t` or both endpoints of `e` lie in
    /// `2t`-cuts.
    pub fn lemma_2_3(&mut self, cert: &EdgeCertificate) -> Result<ClauseVerdict> {
        let id = ClauseId::Lemma23;
        if !cert.d_of_e.is_empty() {
            return Ok(ClauseVerdict::vacuous(id, "D(e) is non-empty"));
        }
        let mut ev = self.base_evidence(cert).value("delta", self.delta);
        if r(self.delta) <= self.t * 2 {
            ev.add_value("via", "delta <= 2t");
            return Ok(ClauseVerdict::decided(id, true, ev));
        }
        let ends = VertexSet::from([cert.edge.u, cert.edge.v]);
        Ok(match self.all_in_cuts(&ends, "endpoints", &mut ev)? {
            None => ClauseVerdict::new(id, Outcome::NotEvaluable, ev),
            Some(holds) => ClauseVerdict::decided(id, holds, ev),
        })
    }

    /// The six clauses for one certificate, in clause order.
    pub fn lemma_2_4(&mut self, cert: &EdgeCertificate) -> Result<Vec<ClauseVerdict>> {
        if cert.d_of_e.is_empty() {
            return Ok(ClauseId::LEMMA24
                .iter()
                .map(|&id| ClauseVerdict::vacuous(id, "D(e) is empty"))
                .collect());
        }
        let stats = certificate_decomposition_stats(self.g, cert)?;
        let t = self.t;
        let nc = r(stats.n_s_c.len());
        let s1 = r(stats.s1.len());
        let base = self
            .base_evidence(cert)
            .set("N_S(C)", stats.n_s_c.clone())
            .set("S1", stats.s1.clone());
        let mut out = Vec::with_capacity(6);

        // (1) k(e) >= ceil(3t)  =>  |N_S(C) & N_S(C_i)| <= 2t - 1 for every C_i in D
        let id = ClauseId::Lemma24Clause1;
        if (cert.k as i64) < ceil(&(t * 3)) {
            out.push(ClauseVerdict::vacuous(id, "k(e) < ceil(3t)"));
        } else {
            let mut ev = base.clone();
            let mut holds = true;
            for (comp, nb) in &stats.d_components {
                let common: VertexSet = nb.iter().filter(|&w| stats.n_s_c.contains(w)).collect();
                if r(common.len()) > t * 2 - 1 {
                    holds = false;
                    ev.add_set("C_i", comp.clone());
                    ev.add_set("common", common);
                    break;
                }
            }
            out.push(ClauseVerdict::decided(id, holds, ev));
        }

        // (2) |S1| <= ceil(t) - 1 and 2t <= |N_S(C)| <= 4t - 1 - |S1|; if the
        // upper bound is tight, every vertex of S - S1 lies in a 2t-cut
        let id = ClauseId::Lemma24Clause2;
        {
            let mut ev = base.clone();
            let upper = t * 4 - 1 - s1;
            let ok = s1 <= ri(ceil(&t) - 1) && t * 2 <= nc && nc <= upper;
            ev.add_value("upper", format_rational(&upper));
            let verdict = if !ok {
                ClauseVerdict::decided(id, false, ev)
            } else if s1 == t * 4 - 1 - nc {
                let rest: VertexSet = cert.s.iter().filter(|&w| !stats.s1.contains(w)).collect();
                match self.all_in_cuts(&rest, "S-S1", &mut ev)? {
                    None => ClauseVerdict::new(id, Outcome::NotEvaluable, ev),
                    Some(h) => ClauseVerdict::decided(id, h, ev),
                }
            } else {
                ClauseVerdict::decided(id, true, ev)
            };
            out.push(verdict);
        }

        // (3) |N_S(C)| = 4t - 1  =>  every vertex of S lies in a 2t-cut
        let id = ClauseId::Lemma24Clause3;
        if nc != t * 4 - 1 {
            out.push(ClauseVerdict::vacuous(id, "|N_S(C)| != 4t - 1"));
        } else {
            let mut ev = base.clone();
            out.push(match self.all_in_cuts(&cert.s, "S", &mut ev)? {
                None => ClauseVerdict::new(id, Outcome::NotEvaluable, ev),
                Some(h) => ClauseVerdict::decided(id, h, ev),
            });
        }

        // (4) |N_S(C)| = 4t - 2  =>  |N_S(C_j)| <= 2t + 1 for every C_j in D,
        // and optionally at least 2t - 1 vertices of N_S(C) lie in 2t-cuts
        let id = ClauseId::Lemma24Clause4;
        if nc != t * 4 - 2 {
            out.push(ClauseVerdict::vacuous(id, "|N_S(C)| != 4t - 2"));
        } else {
            let mut ev = base.clone();
            let mut holds = true;
            for (comp, nb) in &stats.d_components {
                if r(nb.len()) > t * 2 + 1 {
                    holds = false;
                    ev.add_set("C_j", comp.clone());
                    ev.add_set("N_S(C_j)", nb.clone());
                    break;
                }
            }
            let mut verdict = ClauseVerdict::decided(id, holds, ev.clone());
            if holds && self.opts.clause4_cut_count {
                let mut in_cuts = 0usize;
                let mut evaluable = true;
                for w in stats.n_s_c.iter() {
                    match self.cut_through(w)? {
                        None => evaluable = false,
                        Some(Some(_)) => in_cuts += 1,
                        Some(None) => {}
                    }
                }
                ev.add_value("in_cuts", in_cuts);
                verdict = if !evaluable {
                    ClauseVerdict::new(id, Outcome::NotEvaluable, ev)
                } else {
                    ClauseVerdict::decided(id, r(in_cuts) >= t * 2 - 1, ev)
                };
            }
            out.push(verdict);
        }

        // (5) C_u != {u} and C_v != {v}: if some w in S has N_C(w) = {u, v}
        // both endpoints lie in 2t-cuts, otherwise all of {u} + S1 or all of
        // {v} + S1 do
        let id = ClauseId::Lemma24Clause5;
        let Edge { u, v } = cert.edge;
        let single_u = cert.c_u == VertexSet::from([u]);
        let single_v = cert.c_v == VertexSet::from([v]);
        if single_u || single_v {
            out.push(ClauseVerdict::vacuous(id, "C_u = {u} or C_v = {v}"));
        } else {
            let mut ev = base.clone();
            let uv = VertexSet::from([u, v]);
            let hub = cert.s.iter().find(|&w| {
                let inside: VertexSet = self.g.neighbors(w).iter().copied().filter(|&x| cert.c_of_e.contains(x)).collect();
                inside == uv
            });
            let verdict = if let Some(w) = hub {
                ev.add_value("w", w);
                match self.all_in_cuts(&uv, "uv", &mut ev)? {
                    None => ClauseVerdict::new(id, Outcome::NotEvaluable, ev),
                    Some(h) => ClauseVerdict::decided(id, h, ev),
                }
            } else {
                let with = |x: usize| stats.s1.iter().chain([x]).collect::<VertexSet>();
                match self.all_in_cuts(&with(u), "u+S1", &mut ev)? {
                    None => ClauseVerdict::new(id, Outcome::NotEvaluable, ev),
                    Some(true) => ClauseVerdict::decided(id, true, ev),
                    Some(false) => match self.all_in_cuts(&with(v), "v+S1", &mut ev)? {
                        None => ClauseVerdict::new(id, Outcome::NotEvaluable, ev),
                        Some(h) => ClauseVerdict::decided(id, h, ev),
                    },
                }
            };
            out.push(verdict);
        }

        // (6) exactly one side is a singleton, say C_x = {x}: d(x) <= 2t + 1
        // or the other endpoint lies in a 2t-cut
        let id = ClauseId::Lemma24Clause6;
        if single_u == single_v {
            out.push(ClauseVerdict::vacuous(id, "not exactly one of C_u, C_v is a singleton"));
        } else {
            let (x, y) = if single_u { (u, v) } else { (v, u) };
            let mut ev = base.clone().value("singleton_end", x).value("deg", self.g.degree(x));
            let verdict = if r(self.g.degree(x)) <= t * 2 + 1 {
                ClauseVerdict::decided(id, true, ev)
            } else {
                match self.all_in_cuts(&VertexSet::from([y]), "other_end", &mut ev)? {
                    None => ClauseVerdict::new(id, Outcome::NotEvaluable, ev),
                    Some(h) => ClauseVerdict::decided(id, h, ev),
                }
            };
            out.push(verdict);
        }
        Ok(out)
    }
}

fn certificates_for(g: &Graph, e: Edge, t: &Rational, opts: &LemmaOptions) -> Result<Vec<EdgeCertificate>> {
    if opts.all_certificates {
        all_edge_certificates(g, e, t)
    } else {
        Ok(vec![edge_certificate(g, e, t)?])
    }
}

/// Endpoint-cut check for one edge, with the minimality hypothesis verified.
pub fn check_lemma_2_3(g: &Graph, t: &Rational, e: Edge) -> Result<ClauseVerdict> {
    check_lemma_2_3_with(g, t, e, LemmaOptions::default())
}

pub fn check_lemma_2_3_with(g: &Graph, t: &Rational, e: Edge, opts: LemmaOptions) -> Result<ClauseVerdict> {
    g.check_edge(e)?;
    if check_minimality(g, t)?.is_some() {
        return Ok(ClauseVerdict::vacuous(ClauseId::Lemma23, "graph is not minimally t-tough"));
    }
    let mut ctx = LemmaContext::new(g, t, opts)?;
    let verdicts = certificates_for(g, e, t, &opts)?
        .iter()
        .map(|c| ctx.lemma_2_3(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_verdicts(verdicts).expect("at least one certificate"))
}

/// The six clause verdicts for one edge, with the minimality and
/// claw-freeness hypotheses verified.
pub fn check_lemma_2_4(g: &Graph, t: &Rational, e: Edge) -> Result<Vec<ClauseVerdict>> {
    check_lemma_2_4_with(g, t, e, LemmaOptions::default())
}

pub fn check_lemma_2_4_with(g: &Graph, t: &Rational, e: Edge, opts: LemmaOptions) -> Result<Vec<ClauseVerdict>> {
    g.check_edge(e)?;
    let unmet = if find_claw(g).is_some() {
        Some("graph has a claw")
    } else if check_minimality(g, t)?.is_some() {
        Some("graph is not minimally t-tough")
    } else {
        None
    };
    if let Some(why) = unmet {
        return Ok(ClauseId::LEMMA24.iter().map(|&id| ClauseVerdict::vacuous(id, why)).collect());
    }
    let mut ctx = LemmaContext::new(g, t, opts)?;
    let mut per_clause: Vec<Vec<ClauseVerdict>> = vec![Vec::new(); 6];
    for cert in certificates_for(g, e, t, &opts)? {
        for (i, v) in ctx.lemma_2_4(&cert)?.into_iter().enumerate() {
            per_clause[i].push(v);
        }
    }
    Ok(per_clause
        .into_iter()
        .map(|vs| merge_verdicts(vs).expect("at least one certificate"))
        .collect())
}
