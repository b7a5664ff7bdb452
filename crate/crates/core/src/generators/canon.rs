//! Canonical labelling for small graphs.
//!
//! Colour refinement to an equitable ordered partition, then individualise
//! and refine on the first non-singleton cell, keeping the largest
//! adjacency code over all leaves. Twins in the target cell (vertices with
//! equal neighbourhoods up to each other) are swapped by an automorphism
//! fixing everything individualised so far, so only one of them is tried.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANON_MAX_N: usize = 16;

/// Upper-triangle adjacency code of the canonical relabelling, read column
/// by column. Two graphs of the same order are isomorphic iff codes agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u128,
}

type Partition = Vec<Vec<usize>>;

fn refine(rows: &[u64], mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let sig = masks.iter().map(|m| (rows[v] & m).count_ones()).collect();
                groups.entry(sig).or_default().push(v);
            }
            split |= groups.len() > 1;
            next.extend(groups.into_values());
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn code_of(rows: &[u64], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | ((rows[order[i]] >> order[j]) & 1) as u128;
        }
    }
    code
}

fn twins(rows: &[u64], a: usize, b: usize) -> bool {
    let ma = rows[a] & !(1u64 << b);
    let mb = rows[b] & !(1u64 << a);
    ma == mb
}

fn search(rows: &[u64], cells: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(rows, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| twins(rows, u, v)) {
            continue;
        }
        tried.push(v);
        let mut child = cells[..target].to_vec();
        child.push(vec![v]);
        child.push(cell.iter().copied().filter(|&x| x != v).collect());
        child.extend(cells[target + 1..].iter().cloned());
        search(rows, refine(rows, child), best);
    }
}

/// Canonical order: `order[i]` is the vertex placed at position `i`.
fn canonical_order(g: &Graph) -> Result<(u128, Vec<usize>)> {
    let rows = g.rows_upto(CANON_MAX_N)?;
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let start = refine(rows, by_degree.into_values().collect());
    let mut best = None;
    search(rows, start, &mut best);
    Ok(best.expect("search visits at least one leaf"))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.n() > CANON_MAX_N {
        return Err(Error::TooLarge {
            n: g.n(),
            max: CANON_MAX_N,
        });
    }
    let (code, _) = canonical_order(g)?;
    Ok(CanonicalForm { n: g.n(), code })
}

/// The canonical relabelling of `g`; isomorphic inputs give equal graphs.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_order(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.relabel(&perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_cycle, make_path, make_petersen, make_star};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(rng);
        g.relabel(&perm)
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [
            make_petersen(),
            make_cycle(8).unwrap(),
            make_complete(9).unwrap(),
            make_star(6).unwrap(),
            make_path(7).unwrap(),
        ] {
            let c = canonical_form(&g).unwrap();
            for _ in 0..20 {
                assert_eq!(canonical_form(&shuffled(&g, &mut rng)).unwrap(), c);
            }
            assert_eq!(canonical_form(&canonical_graph(&g).unwrap()).unwrap(), c);
        }
    }

    #[test]
    fn separates_non_isomorphic() {
        let p4 = make_path(4).unwrap();
        let star = make_star(3).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&star).unwrap());
        // C6 versus two triangles: same degree sequence
        let c6 = make_cycle(6).unwrap();
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&tt).unwrap());
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(canonical_form(&make_path(17).unwrap()).is_err());
    }
}
