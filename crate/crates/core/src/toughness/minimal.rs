use crate::error::Result;
use crate::graph::{Edge, Graph};
use crate::rational::Rational;

use super::{edge_certificate, is_t_tough, require_positive, toughness, EdgeCertificate, ToughnessValue};

/// Why a graph is not minimally t-tough.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityFailure {
    /// `tau(G) != t`.
    ToughnessMismatch { actual: ToughnessValue },
    /// `tau(G - e) >= t`.
    EdgeKeepsToughness { edge: Edge },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityVerdict {
    /// One certificate per edge, in edge order.
    Minimal(Vec<EdgeCertificate>),
    NotMinimal(MinimalityFailure),
}

impl MinimalityVerdict {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalityVerdict::Minimal(_))
    }
}

/// `None` when `G` is minimally t-tough, otherwise the first violated
/// condition (toughness first, then edges in increasing order).
pub fn check_minimality(g: &Graph, t: &Rational) -> Result<Option<MinimalityFailure>> {
    require_positive(t)?;
    let tau = toughness(g)?;
    if !tau.equals(t) {
        return Ok(Some(MinimalityFailure::ToughnessMismatch { actual: tau }));
    }
    for e in g.edges() {
        if is_t_tough(&g.without_edge(e)?, t)? {
            return Ok(Some(MinimalityFailure::EdgeKeepsToughness { edge: e }));
        }
    }
    Ok(None)
}

/// Minimality together with a Lemma-2.2 style certificate for every edge.
pub fn is_minimally_t_tough(g: &Graph, t: &Rational) -> Result<MinimalityVerdict> {
    if let Some(failure) = check_minimality(g, t)? {
        return Ok(MinimalityVerdict::NotMinimal(failure));
    }
    let certs = g
        .edges()
        .map(|e| edge_certificate(g, e, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(MinimalityVerdict::Minimal(certs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_cycle, make_net, make_path};
    use crate::rational::{int, rat};

    #[test]
    fn cycles_are_minimally_one_tough() {
        for n in 4..=8 {
            let v = is_minimally_t_tough(&make_cycle(n).unwrap(), &int(1)).unwrap();
            match v {
                MinimalityVerdict::Minimal(certs) => assert_eq!(certs.len(), n),
                other => panic!("C{n}: {other:?}"),
            }
        }
    }

    #[test]
    fn diamond_is_not_minimally_one_tough() {
        // K4 minus the edge 2-3: tau = 1 (cut {0,1}); deleting 0-1 keeps it 1-tough (C4)
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            check_minimality(&g, &int(1)).unwrap(),
            Some(MinimalityFailure::EdgeKeepsToughness { edge: Edge::new(0, 1) })
        );
    }

    #[test]
    fn mismatch_and_complete() {
        let c4 = make_cycle(4).unwrap();
        assert!(matches!(
            check_minimality(&c4, &rat(1, 2)).unwrap(),
            Some(MinimalityFailure::ToughnessMismatch { .. })
        ));
        let k4 = make_complete(4).unwrap();
        assert_eq!(
            check_minimality(&k4, &int(1)).unwrap(),
            Some(MinimalityFailure::ToughnessMismatch {
                actual: ToughnessValue::Infinite
            })
        );
        assert!(check_minimality(&c4, &int(0)).is_err());
    }

    #[test]
    fn half_tough_fixtures() {
        assert!(check_minimality(&make_path(3).unwrap(), &rat(1, 2)).unwrap().is_none());
        assert!(check_minimality(&make_net(), &rat(1, 2)).unwrap().is_none());
    }
}
