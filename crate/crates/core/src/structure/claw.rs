use serde::Serialize;

use crate::connectivity::vertex_connectivity;
use crate::error::Result;
use crate::graph::Graph;
use crate::rational::{format_rational, Rational};
use crate::toughness::toughness;

use super::verdict::{ClauseId, ClauseVerdict, Evidence};

/// An induced `K_{1,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// The first claw by centre, then lexicographic leaf triple.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some(Claw {
                            center: c,
                            leaves: [a, b, d],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// `2 tau(G) = kappa(G)`, applicable to noncomplete claw-free graphs.
pub fn check_matthews_sumner(g: &Graph) -> Result<ClauseVerdict> {
    let id = ClauseId::MatthewsSumner;
    if g.n() == 0 || g.is_complete() {
        return Ok(ClauseVerdict::vacuous(id, "graph is complete"));
    }
    if let Some(claw) = find_claw(g) {
        return Ok(ClauseVerdict::vacuous(id, "graph has a claw").value("claw_center", claw.center));
    }
    let tau = toughness(g)?;
    let kappa = vertex_connectivity(g)?;
    let value = tau.value().expect("noncomplete");
    let holds = value * 2 == Rational::from_integer(kappa.kappa as i64);
    let mut ev = Evidence::default()
        .value("tau", format_rational(&value))
        .value("kappa", kappa.kappa)
        .set("tau_witness", tau.witness().cloned().unwrap_or_default());
    if let Some(cut) = kappa.cut() {
        ev.add_set("kappa_witness", cut.clone());
    }
    Ok(ClauseVerdict::decided(id, holds, ev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_cycle, make_net, make_star};
    use crate::structure::verdict::Outcome;

    #[test]
    fn claws() {
        assert_eq!(
            find_claw(&make_star(3).unwrap()),
            Some(Claw {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
        for n in 3..9 {
            assert!(is_claw_free(&make_cycle(n).unwrap()));
        }
        assert!(is_claw_free(&make_net()));
        assert!(is_claw_free(&make_complete(5).unwrap()));
    }

    #[test]
    fn matthews_sumner_fixtures() {
        let v = check_matthews_sumner(&make_cycle(4).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
        assert_eq!(v.evidence.values["tau"], "1/1");
        let v = check_matthews_sumner(&make_complete(4).unwrap()).unwrap();
        assert!(!v.applicable && v.holds);
        let v = check_matthews_sumner(&make_star(3).unwrap()).unwrap();
        assert!(!v.applicable && v.holds);
        let v = check_matthews_sumner(&make_net()).unwrap();
        assert_eq!(v.outcome, Outcome::Holds);
    }
}
