use tough_core::connectivity::check_mader_atom_property;
use tough_core::generators::enumerate_connected;
use tough_core::structure::{check_matthews_sumner, is_claw_free, Outcome};

#[test]
fn matthews_sumner_on_small_claw_free_graphs() {
    let mut applicable = 0;
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            let v = check_matthews_sumner(&g).unwrap();
            assert!(v.holds, "{g:?}: {v:?}");
            if v.outcome == Outcome::Holds {
                applicable += 1;
                assert!(is_claw_free(&g) && !g.is_complete());
            }
        }
    }
    assert!(applicable > 50);
}

#[test]
fn mader_on_small_graphs() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let v = check_mader_atom_property(&g).unwrap();
            assert!(v.holds, "{g:?}: {v:?}");
        }
    }
}
