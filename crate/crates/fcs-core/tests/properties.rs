//! Cross-checks of the library against the independently written oracles in
//! `common`, plus randomized property suites. Where the library takes
//! shortcuts (hash-based clash detection, drop-one minimality, prefix
//! pruning) the oracles take none.

mod common;

use std::collections::VecDeque;

use common::{assert_distances_agree, brute_force_certify, brute_resolves, random_connected_graph};
use fcs_core::generators::{build_fcs, FcsParams};
use fcs_core::graph::{
    all_pairs_distances, girth, vertex_edge_distance, Edge, Graph, UNREACHABLE,
};
use fcs_core::resolvability::{
    certify_dimension, certify_dimension_with, check_minimality, edge_code, is_resolving,
    vertex_code, CertifyOptions, Landmarks, Mode,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Oracle girth: the shortest cycle through an edge is one more than the
/// shortest path between its endpoints with that edge removed.
fn girth_by_edge_removal(g: &Graph) -> Option<u32> {
    let mut best: Option<u32> = None;
    for &e in g.edges() {
        if let Some(path) = shortest_path_avoiding(g, e) {
            let cycle = path + 1;
            best = Some(best.map_or(cycle, |b: u32| b.min(cycle)));
        }
    }
    best
}

fn shortest_path_avoiding(g: &Graph, e: Edge) -> Option<u32> {
    let (s, t) = e.endpoints();
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if Edge::new(x.min(y), x.max(y)) == e {
                continue;
            }
            if dist[y] == UNREACHABLE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    (dist[t] != UNREACHABLE).then_some(dist[t])
}

#[test]
fn bfs_matches_floyd_warshall_on_fcs() {
    for (a, b, c) in [(4, 4, 4), (4, 5, 6)] {
        let lg = build_fcs(FcsParams::new(a, b, c).unwrap());
        let dm = all_pairs_distances(lg.graph());
        assert_distances_agree(lg.graph(), &dm);
    }
}

#[test]
fn fcs_distances_form_a_metric() {
    let lg = build_fcs(FcsParams::new(4, 4, 4).unwrap());
    let dm = all_pairs_distances(lg.graph());
    let n = lg.graph().vertex_count();
    for u in 0..n {
        for v in 0..n {
            assert_eq!(dm.get(u, v), dm.get(v, u));
            assert_eq!(dm.get(u, v) == 0, u == v);
            for w in 0..n {
                assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
            }
        }
    }
}

/// The main randomized battery: 220 seeded connected graphs on at most nine
/// vertices, each checked against the distance oracle and the subset-sweep
/// certifier in both modes, with pruning cross-validated against the unpruned
/// search. The same battery must turn up at least one graph whose two
/// dimensions differ, which would catch any state shared between modes.
#[test]
fn random_graph_battery_agrees_with_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0fc5_c0de);
    let mut gap_graphs = 0usize;
    for round in 0..220 {
        let g = random_connected_graph(&mut rng);
        let dm = all_pairs_distances(&g);
        assert_distances_agree(&g, &dm);
        let mut dims = [0usize; 2];
        for (t, &mode) in Mode::BOTH.iter().enumerate() {
            let (bf_dim, bf_witness, bf_counts) = brute_force_certify(&g, &dm, mode);
            let lib = certify_dimension(&g, &dm, mode, g.vertex_count()).unwrap();
            assert_eq!(lib.dimension, Some(bf_dim), "round {round} {mode}");
            assert_eq!(lib.witness.as_deref(), Some(bf_witness.as_slice()));
            assert_eq!(lib.refuted_sizes, (1..bf_dim).collect::<Vec<_>>());
            assert_eq!(lib.refutations.len(), bf_counts.len());
            for (r, &count) in lib.refutations.iter().zip(&bf_counts) {
                assert_eq!(r.candidates_tested, count, "round {round} size {}", r.size);
            }
            let unpruned = certify_dimension_with(
                &g,
                &dm,
                mode,
                g.vertex_count(),
                CertifyOptions {
                    prune: false,
                    log_counterexamples: false,
                },
            )
            .unwrap();
            assert_eq!(unpruned.dimension, lib.dimension);
            assert_eq!(unpruned.witness, lib.witness);
            assert_eq!(unpruned.refuted_sizes, lib.refuted_sizes);
            for (x, y) in unpruned.refutations.iter().zip(&lib.refutations) {
                assert_eq!(x.candidates_tested, y.candidates_tested);
            }
            dims[t] = bf_dim;
        }
        if dims[0] != dims[1] {
            gap_graphs += 1;
        }
    }
    assert!(
        gap_graphs >= 1,
        "battery should find a graph whose vertex and edge dimensions differ"
    );
}

#[test]
fn girth_matches_edge_removal_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x91a7);
    for _ in 0..300 {
        let g = random_connected_graph(&mut rng);
        assert_eq!(girth(&g), girth_by_edge_removal(&g));
    }
    let lg = build_fcs(FcsParams::new(5, 4, 6).unwrap());
    assert_eq!(girth_by_edge_removal(lg.graph()), Some(6));
    assert_eq!(girth(lg.graph()), Some(6));
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, extra)| {
            // Path edges guarantee connectivity; the bools toggle the rest.
            let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if extra[idx] {
                        pairs.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::build(n, &pairs).unwrap()
        })
}

fn subset_from_mask(n: usize, mask: u64) -> Vec<usize> {
    // Force vertex 0 in so the subset is never empty.
    let mask = mask | 1;
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

proptest! {
    #[test]
    fn distances_form_a_metric(g in connected_graph()) {
        let dm = all_pairs_distances(&g);
        let n = g.vertex_count();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 0, u == v);
                for w in 0..n {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
    }

    #[test]
    fn edge_distance_is_within_one_of_both_endpoints(g in connected_graph()) {
        let dm = all_pairs_distances(&g);
        for x in 0..g.vertex_count() {
            for &e in g.edges() {
                let d = vertex_edge_distance(&dm, x, e);
                prop_assert!(dm.get(x, e.u()).abs_diff(dm.get(x, e.v())) <= 1);
                prop_assert_eq!(d, dm.get(x, e.u()).min(dm.get(x, e.v())));
            }
        }
    }

    #[test]
    fn resolving_survives_supersets(g in connected_graph(), mask in any::<u64>(), mode_ix in 0usize..2) {
        let mode = Mode::BOTH[mode_ix];
        let dm = all_pairs_distances(&g);
        let subset = subset_from_mask(g.vertex_count(), mask);
        let lm = Landmarks::new(subset.clone()).unwrap();
        if is_resolving(&g, &dm, &lm, mode).unwrap().resolving {
            for w in 0..g.vertex_count() {
                if subset.contains(&w) {
                    continue;
                }
                let mut bigger = subset.clone();
                bigger.push(w);
                let lm = Landmarks::new(bigger).unwrap();
                prop_assert!(is_resolving(&g, &dm, &lm, mode).unwrap().resolving);
            }
        }
    }

    #[test]
    fn landmark_order_permutes_codes(g in connected_graph(), mask in any::<u64>()) {
        let dm = all_pairs_distances(&g);
        let subset = subset_from_mask(g.vertex_count(), mask);
        let reversed: Vec<usize> = subset.iter().rev().copied().collect();
        let fwd = Landmarks::new(subset).unwrap();
        let rev = Landmarks::new(reversed).unwrap();
        for v in 0..g.vertex_count() {
            let mut code = vertex_code(&dm, &fwd, v);
            code.reverse();
            prop_assert_eq!(code, vertex_code(&dm, &rev, v));
        }
        for &e in g.edges() {
            let mut code = edge_code(&dm, &fwd, e);
            code.reverse();
            prop_assert_eq!(code, edge_code(&dm, &rev, e));
        }
        for mode in Mode::BOTH {
            prop_assert_eq!(
                is_resolving(&g, &dm, &fwd, mode).unwrap().resolving,
                is_resolving(&g, &dm, &rev, mode).unwrap().resolving
            );
        }
    }

    /// Minimality is claimed via drop-one subsets; the oracle checks every
    /// proper subset, validating that shortcut.
    #[test]
    fn minimality_agrees_with_full_subset_sweep(g in connected_graph(), mask in any::<u64>(), mode_ix in 0usize..2) {
        let mode = Mode::BOTH[mode_ix];
        let dm = all_pairs_distances(&g);
        let n = g.vertex_count();
        let subset = subset_from_mask(n, mask);
        let lm = Landmarks::new(subset.clone()).unwrap();
        if is_resolving(&g, &dm, &lm, mode).unwrap().resolving {
            let minimal = check_minimality(&g, &dm, &lm, mode).unwrap();
            let full_mask = subset.iter().fold(0u64, |m, &v| m | 1 << v);
            let mut any_proper_resolves = false;
            let mut sub = (full_mask - 1) & full_mask;
            while sub > 0 {
                let proper: Vec<usize> = (0..n).filter(|&v| sub >> v & 1 == 1).collect();
                if brute_resolves(&g, &dm, &proper, mode) {
                    any_proper_resolves = true;
                    break;
                }
                sub = (sub - 1) & full_mask;
            }
            prop_assert_eq!(minimal, !any_proper_resolves);
        }
    }
}
