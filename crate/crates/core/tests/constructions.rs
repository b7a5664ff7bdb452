use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tough_core::generators::{
    build_half_tough, canonical_form, enumerate_connected, enumerate_trees, TreeSpec,
};
use tough_core::rational::rat;
use tough_core::structure::{check_half_tough_characterization, find_claw, recover_tree};
use tough_core::toughness::{check_minimality, toughness};
use tough_core::{oracle, Graph};

fn valid_trees(max_n: usize) -> Vec<TreeSpec> {
    (1..=max_n)
        .flat_map(|n| enumerate_trees(n, Some(3)).unwrap())
        .map(TreeSpec::new)
        .filter(|s| s.violation().is_none())
        .collect()
}

#[test]
fn constructed_graphs_are_claw_free_and_minimally_half_tough() {
    let specs = valid_trees(13);
    assert!(specs.len() > 20);
    let half = rat(1, 2);
    for spec in &specs {
        let g = build_half_tough(spec).unwrap();
        if g.n() == 1 {
            // the one-vertex tree gives K1, whose toughness is infinite
            assert!(g.is_complete());
            continue;
        }
        assert_eq!(find_claw(&g), None, "{g:?}");
        assert_eq!(toughness(&g).unwrap().value(), Some(half), "{g:?}");
        assert_eq!(check_minimality(&g, &half).unwrap(), None, "{g:?}");
        if g.n() <= 9 {
            assert!(oracle::is_minimally_t_tough(&g, &half));
        }
        let back = recover_tree(&g).expect("construction inverts");
        assert_eq!(build_half_tough(&back).unwrap(), g);
        assert!(check_half_tough_characterization(&g).unwrap().applicable);
        assert!(check_half_tough_characterization(&g).unwrap().holds);
    }
}

#[test]
fn enumeration_is_closed_under_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in [5, 6, 7] {
        let gs = enumerate_connected(n).unwrap();
        let forms: BTreeSet<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), gs.len());
        for _ in 0..200 {
            let g = gs.choose(&mut rng).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert!(forms.contains(&canonical_form(&g.relabel(&perm)).unwrap()));
        }
        // random connected graphs land in the emitted set too
        let mut hits = 0;
        while hits < 100 {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            if g.is_connected() {
                hits += 1;
                assert!(forms.contains(&canonical_form(&g).unwrap()));
            }
        }
    }
}

#[test]
fn connected_count_for_seven_and_eight() {
    assert_eq!(enumerate_connected(7).unwrap().len(), 853);
    assert_eq!(enumerate_connected(8).unwrap().len(), 11117);
}
