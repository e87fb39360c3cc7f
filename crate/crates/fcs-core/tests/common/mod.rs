//! Oracle helpers shared by the integration test targets.
//!
//! These deliberately share no code with the library: distances are
//! recomputed with Floyd-Warshall and dimensions by a bitmask subset sweep
//! with its own resolvability test, in a different enumeration order than
//! the library search.

// Index loops are intentional here: the oracles mirror textbook pseudocode.
#![allow(dead_code, clippy::needless_range_loop)]

use fcs_core::graph::{DistanceMatrix, Graph, UNREACHABLE};
use fcs_core::resolvability::Mode;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const FW_INF: u64 = u64::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let mut d = vec![vec![FW_INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for e in g.edges() {
        d[e.u()][e.v()] = 1;
        d[e.v()][e.u()] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn assert_distances_agree(g: &Graph, dm: &DistanceMatrix) {
    let fw = floyd_warshall(g);
    for i in 0..g.vertex_count() {
        for j in 0..g.vertex_count() {
            if fw[i][j] >= FW_INF {
                assert_eq!(dm.get(i, j), UNREACHABLE);
            } else {
                assert_eq!(dm.get(i, j) as u64, fw[i][j], "distance {i} -> {j}");
            }
        }
    }
}

/// Oracle resolvability test: materialize every code and sort.
pub fn brute_resolves(g: &Graph, dm: &DistanceMatrix, subset: &[usize], mode: Mode) -> bool {
    let mut codes: Vec<Vec<u32>> = match mode {
        Mode::Vertex => (0..g.vertex_count())
            .map(|v| subset.iter().map(|&u| dm.get(u, v)).collect())
            .collect(),
        Mode::Edge => g
            .edges()
            .iter()
            .map(|e| {
                subset
                    .iter()
                    .map(|&u| dm.get(u, e.u()).min(dm.get(u, e.v())))
                    .collect()
            })
            .collect(),
    };
    codes.sort();
    codes.windows(2).all(|w| w[0] != w[1])
}

/// Oracle certifier: sweeps subsets in bitmask order and keeps the
/// lexicographically smallest resolving subset of the first viable size.
/// Returns (dimension, witness, candidates tested per refuted size).
pub fn brute_force_certify(
    g: &Graph,
    dm: &DistanceMatrix,
    mode: Mode,
) -> (usize, Vec<usize>, Vec<u64>) {
    let n = g.vertex_count();
    let mut refuted_counts = Vec::new();
    for size in 1..=n {
        let mut tested = 0u64;
        let mut best: Option<Vec<usize>> = None;
        for mask in 1u32..1 << n {
            if mask.count_ones() as usize != size {
                continue;
            }
            tested += 1;
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if brute_resolves(g, dm, &subset, mode) && best.as_ref().is_none_or(|b| subset < *b) {
                best = Some(subset);
            }
        }
        match best {
            Some(witness) => return (size, witness, refuted_counts),
            None => refuted_counts.push(tested),
        }
    }
    unreachable!("the full vertex set resolves every connected graph in both modes");
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(2..=9);
    let mut pairs = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.25) {
                pairs.push((u, v));
            }
        }
    }
    Graph::build(n, &pairs).unwrap()
}
