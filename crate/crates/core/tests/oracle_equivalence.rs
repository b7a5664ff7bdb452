use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tough_core::connectivity::{atoms, min_cuts_containing, minimum_cuts, vertex_connectivity};
use tough_core::generators::enumerate_connected;
use tough_core::rational::rat;
use tough_core::toughness::{
    check_minimality, edge_certificate, is_t_tough, toughness, verify_certificate, ToughnessValue,
};
use tough_core::{oracle, Graph, VertexSet};

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.9);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn small_corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_connected(n).unwrap()).collect()
}

fn as_pair(v: ToughnessValue) -> Option<(tough_core::Rational, VertexSet)> {
    match v {
        ToughnessValue::Infinite => None,
        ToughnessValue::Finite { value, witness } => Some((value, witness)),
    }
}

#[test]
fn toughness_and_witness_match_on_connected_graphs_up_to_7() {
    let corpus = small_corpus(7);
    assert_eq!(corpus.len(), 1 + 1 + 2 + 6 + 21 + 112 + 853);
    for g in &corpus {
        assert_eq!(as_pair(toughness(g).unwrap()), oracle::toughness(g), "{g:?}");
    }
}

#[test]
fn toughness_matches_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..400 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n);
        assert_eq!(as_pair(toughness(&g).unwrap()), oracle::toughness(&g), "{g:?}");
    }
}

#[test]
fn t_tough_decision_matches() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n);
        let t = rat(rng.gen_range(1..=8), rng.gen_range(1..=4));
        assert_eq!(is_t_tough(&g, &t).unwrap(), oracle::is_t_tough(&g, &t), "{g:?} t={t}");
    }
}

#[test]
fn connectivity_matches() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut graphs = small_corpus(6);
    graphs.extend((0..200).map(|_| {
        let n = rng.gen_range(1..=10);
        random_graph(&mut rng, n)
    }));
    for g in &graphs {
        let k = vertex_connectivity(g).unwrap();
        assert_eq!(k.kappa, oracle::vertex_connectivity(g), "{g:?}");
        if let Some(cut) = k.cut() {
            assert_eq!(cut.len(), k.kappa);
            let removed: Vec<bool> = (0..g.n()).map(|v| cut.contains(v)).collect();
            assert!(oracle::count_components(g, &removed) >= 2);
        }
    }
}

#[test]
fn cuts_and_atoms_match() {
    for g in small_corpus(6).iter().filter(|g| !g.is_complete()) {
        let kappa = oracle::vertex_connectivity(g);
        assert_eq!(minimum_cuts(g).unwrap(), oracle::cuts_of_size(g, kappa));
        let ours: Vec<(VertexSet, VertexSet)> = atoms(g)
            .unwrap()
            .into_iter()
            .map(|a| {
                assert_eq!(a.boundary, g.neighborhood(&a.atom));
                (a.atom, a.boundary)
            })
            .collect();
        assert_eq!(ours, oracle::atoms(g), "{g:?}");
        for k in 1..g.n().saturating_sub(1) {
            let all = oracle::cuts_of_size(g, k);
            for v in 0..g.n() {
                let expected: Vec<VertexSet> = all.iter().filter(|s| s.contains(v)).cloned().collect();
                assert_eq!(min_cuts_containing(g, v, k).unwrap(), expected);
            }
        }
    }
}

#[test]
fn minimality_and_certificates_match() {
    let mut minimal_seen = 0;
    for g in small_corpus(6).iter().filter(|g| !g.is_complete()) {
        let t = oracle::toughness(g).unwrap().0;
        if t == rat(0, 1) {
            continue;
        }
        let minimal = check_minimality(g, &t).unwrap().is_none();
        assert_eq!(minimal, oracle::is_minimally_t_tough(g, &t), "{g:?}");
        minimal_seen += minimal as usize;
        for e in g.edges() {
            let ours = edge_certificate(g, e, &t);
            let reference = oracle::edge_certificate(g, e, &t);
            match (ours, reference) {
                (Ok(cert), Some(s)) => {
                    assert_eq!(cert.s, s, "{g:?} {e}");
                    verify_certificate(g, &cert).unwrap();
                }
                (Err(_), None) => {}
                (a, b) => panic!("{g:?} {e}: {a:?} vs {b:?}"),
            }
        }
    }
    assert!(minimal_seen > 10);
}
