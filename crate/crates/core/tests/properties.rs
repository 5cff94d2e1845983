use std::collections::BTreeSet;

use hamwire_core::circuit::{compile, invert, SegmentKind};
use hamwire_core::encoding::{decode_workspace, encode_initialization};
use hamwire_core::enumerator::{rank, stream, unrank};
use hamwire_core::oracle::{canonicalize, expected_fixed_start, expected_full_codes, find_cycles};
use hamwire_core::resources::evaluate_formulas;
use hamwire_core::simulator::{run, run_all_initializations, run_code, run_full_code_space, run_initialization};
use hamwire_core::{parse_graph, Encoding, Graph, Mode, RegisterState};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

/// Graph on `n` vertices whose edge set is the bit pattern `mask` over the
/// lexicographic vertex pairs.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, pairs.into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e)).unwrap()
}

fn circuit(g: &Graph, mode: Mode) -> hamwire_core::Circuit {
    compile(g, mode, &Encoding::new(g.vertex_count()).unwrap()).unwrap()
}

/// Fixed-start walks closing into Hamiltonian cycles, by filtering every
/// permutation directly.
fn brute_force_fixed_start(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    stream(n)
        .unwrap()
        .map(|i| i.into_perm())
        .filter(|p| (0..n).all(|i| g.has_edge(p[i], p[(i + 1) % n]).unwrap()))
        .collect()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e)
                .collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn has_edge_is_symmetric(g in graph_strategy(8)) {
        let n = g.vertex_count();
        for u in 0..n {
            prop_assert!(!g.has_edge(u, u).unwrap());
            for v in 0..n {
                prop_assert_eq!(g.has_edge(u, v).unwrap(), g.has_edge(v, u).unwrap());
            }
        }
    }

    #[test]
    fn arcs_double_edges_and_close_under_reversal(g in graph_strategy(8)) {
        let arcs = g.directed_arcs();
        prop_assert_eq!(arcs.len(), 2 * g.edge_count());
        let forward: BTreeSet<_> = arcs.iter().map(|a| (a.src, a.dst)).collect();
        let reversed: BTreeSet<_> = arcs.iter().map(|a| (a.dst, a.src)).collect();
        prop_assert_eq!(forward.len(), arcs.len());
        prop_assert_eq!(forward, reversed);
    }

    #[test]
    fn graph_text_round_trips(g in graph_strategy(9)) {
        prop_assert_eq!(parse_graph(&g.to_file_text()).unwrap(), g);
    }

    #[test]
    fn formula_orderings(n in 2usize..40, m in 1usize..200) {
        let k = hamwire_core::encoding::bits_per_vertex(n).unwrap();
        let f = evaluate_formulas::<BigUint>(n, k, m).unwrap();
        prop_assert!(f.bits_formula_reduced < f.bits_formula_oneshot);
        prop_assert!(f.bits_formula_oneshot < f.bits_formula_full);
        prop_assert_eq!(f.ops_formula_full - f.ops_formula_reduced, BigUint::from(2 * m * n));
    }
}

#[test]
fn encode_decode_identity_and_workspace_only() {
    for n in 2..=6 {
        let enc = Encoding::new(n).unwrap();
        let width = enc.workspace_width() + 5;
        for init in stream(n).unwrap() {
            let state = encode_initialization(&init, &enc, width).unwrap();
            assert_eq!(decode_workspace(&state, &enc), init.perm());
            assert_eq!(state.ones_in(enc.workspace_width()..width).count(), 0);
        }
    }
}

#[test]
fn rank_unrank_bijection() {
    for n in 2..=7 {
        let count = hamwire_core::count_initializations(n).unwrap();
        let mut seen = BTreeSet::new();
        for i in 0..count {
            let init = unrank(i, n).unwrap();
            assert_eq!(rank(&init).unwrap(), i);
            assert_eq!(init.perm()[0], 0);
            assert!(seen.insert(init.into_perm()));
        }
        assert_eq!(stream(n).unwrap().count() as u64, count);
    }
    assert_eq!(stream(8).unwrap().count(), 5040);
}

#[test]
fn oracle_matches_permutation_filtering() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=6 {
        for _ in 0..15 {
            let g = random_graph(&mut rng, n, 0.6);
            assert_eq!(expected_fixed_start(&find_cycles(&g)), brute_force_fixed_start(&g), "{g:?}");
        }
    }
}

#[test]
fn canonicalize_is_idempotent_and_orbit_constant() {
    for init in stream(6).unwrap() {
        let walk = init.perm();
        let key = canonicalize(walk).unwrap();
        assert_eq!(canonicalize(&key).unwrap(), key);
        for shift in 0..6 {
            let rotated: Vec<_> = (0..6).map(|i| walk[(i + shift) % 6]).collect();
            let mut reflected = rotated.clone();
            reflected.reverse();
            assert_eq!(canonicalize(&rotated).unwrap(), key);
            assert_eq!(canonicalize(&reflected).unwrap(), key);
        }
    }
}

#[test]
fn scratch_and_temp_are_clean_after_every_run() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 3..=6 {
        for _ in 0..3 {
            let g = random_graph(&mut rng, n, 0.5);
            for mode in Mode::ALL {
                let c = circuit(&g, mode);
                let scratch = c.layout().range_of(SegmentKind::Scratch);
                let temp = c.layout().range_of(SegmentKind::Temp);
                for init in stream(n).unwrap() {
                    let state = run_initialization(&c, &init).unwrap();
                    assert_eq!(state.ones_in(scratch.clone()).count(), 0, "{mode} {init:?}");
                    assert_eq!(state.ones_in(temp.clone()).count(), 0, "{mode} {init:?}");
                }
            }
        }
    }
}

#[test]
fn reversible_circuits_compose_with_inverse_to_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in [Graph::complete(4).unwrap(), random_graph(&mut rng, 5, 0.5)] {
        let c = circuit(&g, Mode::ReversibleFull);
        let inv = invert(&c).unwrap();
        for _ in 0..100 {
            let state = RegisterState::from_bits((0..c.width()).map(|_| rng.gen_bool(0.5)));
            let back = run(&inv, run(&c, state.clone()).unwrap()).unwrap();
            assert_eq!(back, state);
        }
    }
}

#[test]
fn pair_results_match_edges_for_every_code() {
    // a double toggle would clear a pair result whose edge exists
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..5 {
        let g = random_graph(&mut rng, 4, 0.6);
        let c = circuit(&g, Mode::CmosReduced);
        let enc = Encoding::new(4).unwrap();
        for code in 0..256u64 {
            let state = run_code(&c, code).unwrap();
            let w = decode_workspace(&state, &enc);
            for p in 0..4 {
                let expected = g.has_edge(w[p], w[(p + 1) % 4]).unwrap();
                assert_eq!(state.get(c.layout().pair_result(p)), expected, "code {code:08b} pair {p}");
            }
        }
    }
}

#[test]
fn full_code_runs_are_sound_and_complete_on_every_four_vertex_graph() {
    let enc = Encoding::new(4).unwrap();
    for mask in 0..64u64 {
        let g = graph_from_mask(4, mask);
        let c = circuit(&g, Mode::ReversibleFull);
        let readout = run_full_code_space(&c, 1).unwrap();
        let flagged: BTreeSet<Vec<usize>> = readout.entries().map(|e| e.sequence).collect();
        for walk in &flagged {
            let mut sorted = walk.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![0, 1, 2, 3]);
            assert!((0..4).all(|i| g.has_edge(walk[i], walk[(i + 1) % 4]).unwrap()));
        }
        let cycles = find_cycles(&g);
        assert_eq!(flagged, expected_full_codes(&cycles), "mask {mask:06b}");
        assert_eq!(readout.flagged(), 2 * 4 * cycles.len());
        assert_eq!(enc.workspace_width(), 8);
    }
}

#[test]
fn modes_agree_with_each_other_and_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 2..=6 {
        for _ in 0..6 {
            let g = random_graph(&mut rng, n, 0.5);
            let expected = expected_fixed_start(&find_cycles(&g));
            let readouts: Vec<_> =
                Mode::ALL.iter().map(|&m| run_all_initializations(&circuit(&g, m), 1).unwrap()).collect();
            assert_eq!(readouts[0], readouts[1]);
            assert_eq!(readouts[1], readouts[2]);
            let flagged: BTreeSet<_> = readouts[0].entries().map(|e| e.sequence).collect();
            assert_eq!(flagged, expected, "{g:?}");
        }
    }
}

#[test]
fn hit_lines_follow_the_walk() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10 {
        let g = random_graph(&mut rng, 5, 0.6);
        let c = circuit(&g, Mode::ReversibleFull);
        let arcs = g.directed_arcs();
        let hits = c.layout().range_of(SegmentKind::Hit);
        for init in stream(5).unwrap() {
            let state = run_initialization(&c, &init).unwrap();
            let p = init.perm();
            let set: BTreeSet<usize> = state.ones_in(hits.clone()).collect();
            let expected: BTreeSet<usize> = (0..4)
                .filter_map(|pair| {
                    arcs.iter()
                        .position(|a| a.src == p[pair] && a.dst == p[pair + 1])
                        .map(|arc| c.layout().hit(arc, pair))
                })
                .collect();
            assert_eq!(set, expected);
            assert!(set.len() <= 4);
        }
    }
}

#[test]
fn measured_gates_track_ops_formula_on_complete_graphs() {
    for n in 4..=6 {
        let g = Graph::complete(n).unwrap();
        let c = circuit(&g, Mode::ReversibleFull);
        let r = hamwire_core::resources::report::<u64, _>(n, g.edge_count(), [&c]).unwrap();
        let meas = &r.measurements[0];
        assert!((0.5..=3.0).contains(&meas.ops_ratio), "n={n} ratio {}", meas.ops_ratio);
        assert_eq!(meas.unexplained_lines, 0);
    }
}
