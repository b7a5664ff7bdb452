use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;

/// Which claim a verdict is about. Serialized names match the CLI's
/// `--check` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClauseId {
    /// `2 tau = kappa` for noncomplete claw-free graphs.
    #[serde(rename = "ms")]
    MatthewsSumner,
    /// Endpoint cuts when `D(e)` is empty.
    #[serde(rename = "lemma23")]
    Lemma23,
    #[serde(rename = "lemma24.1")]
    Lemma24Clause1,
    #[serde(rename = "lemma24.2")]
    Lemma24Clause2,
    #[serde(rename = "lemma24.3")]
    Lemma24Clause3,
    #[serde(rename = "lemma24.4")]
    Lemma24Clause4,
    #[serde(rename = "lemma24.5")]
    Lemma24Clause5,
    #[serde(rename = "lemma24.6")]
    Lemma24Clause6,
    /// Minimally 1/2-tough claw-free graphs come from the tree construction.
    #[serde(rename = "thm15")]
    HalfToughCharacterization,
    /// Atoms meeting a minimum cut lie inside it.
    #[serde(rename = "mader")]
    Mader,
    /// Minimum degree within the proven bound.
    #[serde(rename = "bound")]
    DegreeBound,
}

impl ClauseId {
    pub const LEMMA24: [ClauseId; 6] = [
        ClauseId::Lemma24Clause1,
        ClauseId::Lemma24Clause2,
        ClauseId::Lemma24Clause3,
        ClauseId::Lemma24Clause4,
        ClauseId::Lemma24Clause5,
        ClauseId::Lemma24Clause6,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClauseId::MatthewsSumner => "ms",
            ClauseId::Lemma23 => "lemma23",
            ClauseId::Lemma24Clause1 => "lemma24.1",
            ClauseId::Lemma24Clause2 => "lemma24.2",
            ClauseId::Lemma24Clause3 => "lemma24.3",
            ClauseId::Lemma24Clause4 => "lemma24.4",
            ClauseId::Lemma24Clause5 => "lemma24.5",
            ClauseId::Lemma24Clause6 => "lemma24.6",
            ClauseId::HalfToughCharacterization => "thm15",
            ClauseId::Mader => "mader",
            ClauseId::DegreeBound => "bound",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Hypotheses did not hold.
    Vacuous,
    Holds,
    Fails,
    /// Hypotheses held but the conclusion needs cuts of size `2t` with `2t`
    /// not an integer.
    NotEvaluable,
}

/// Sets and values backing a verdict.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub sets: BTreeMap<String, VertexSet>,
    pub values: BTreeMap<String, String>,
}

impl Evidence {
    pub fn set(mut self, key: impl Into<String>, s: VertexSet) -> Self {
        self.sets.insert(key.into(), s);
        self
    }

    pub fn value(mut self, key: impl Into<String>, v: impl ToString) -> Self {
        self.values.insert(key.into(), v.to_string());
        self
    }

    pub fn add_set(&mut self, key: impl Into<String>, s: VertexSet) {
        self.sets.insert(key.into(), s);
    }

    pub fn add_value(&mut self, key: impl Into<String>, v: impl ToString) {
        self.values.insert(key.into(), v.to_string());
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseVerdict {
    pub clause: ClauseId,
    pub outcome: Outcome,
    /// Hypotheses held.
    pub applicable: bool,
    /// Conclusion verified, or vacuous.
    pub holds: bool,
    pub evidence: Evidence,
}

impl ClauseVerdict {
    pub fn new(clause: ClauseId, outcome: Outcome, evidence: Evidence) -> Self {
        ClauseVerdict {
            clause,
            outcome,
            applicable: matches!(outcome, Outcome::Holds | Outcome::Fails | Outcome::NotEvaluable),
            holds: !matches!(outcome, Outcome::Fails),
            evidence,
        }
    }

    pub fn vacuous(clause: ClauseId, why: &str) -> Self {
        Self::new(clause, Outcome::Vacuous, Evidence::default().value("vacuous", why))
    }

    pub fn decided(clause: ClauseId, holds: bool, evidence: Evidence) -> Self {
        let outcome = if holds { Outcome::Holds } else { Outcome::Fails };
        Self::new(clause, outcome, evidence)
    }

    pub fn value(mut self, key: impl Into<String>, v: impl ToString) -> Self {
        self.evidence.add_value(key, v);
        self
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fails
    }
}

/// Combines verdicts for the same clause over several certificates: any
/// failure wins, then any unevaluable case, then any held case.
pub fn merge_verdicts(verdicts: Vec<ClauseVerdict>) -> Option<ClauseVerdict> {
    let rank = |o: Outcome| match o {
        Outcome::Fails => 3,
        Outcome::NotEvaluable => 2,
        Outcome::Holds => 1,
        Outcome::Vacuous => 0,
    };
    verdicts.into_iter().reduce(|a, b| if rank(b.outcome) > rank(a.outcome) { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuous_verdicts_hold() {
        let v = ClauseVerdict::vacuous(ClauseId::Lemma23, "D(e) non-empty");
        assert!(!v.applicable);
        assert!(v.holds);
        let f = ClauseVerdict::decided(ClauseId::Lemma23, false, Evidence::default());
        assert!(f.applicable && !f.holds && f.failed());
    }

    #[test]
    fn merge_prefers_failures() {
        let a = ClauseVerdict::decided(ClauseId::Lemma23, true, Evidence::default());
        let b = ClauseVerdict::decided(ClauseId::Lemma23, false, Evidence::default());
        let c = ClauseVerdict::vacuous(ClauseId::Lemma23, "x");
        assert_eq!(merge_verdicts(vec![a.clone(), b.clone(), c.clone()]).unwrap().outcome, Outcome::Fails);
        assert_eq!(merge_verdicts(vec![c.clone(), a]).unwrap().outcome, Outcome::Holds);
        assert_eq!(merge_verdicts(vec![c]).unwrap().outcome, Outcome::Vacuous);
        assert!(merge_verdicts(vec![]).is_none());
    }
}
