//! Shared brute-force oracles for the integration suites. These stay
//! deliberately naive and independent of the library's solver paths.
#![allow(dead_code)] // each test target uses its own subset of the oracles

use fibsum::graphcore::SimpleGraph;

/// Maximum clique by enumerating all vertex subsets (order <= 25).
pub fn oracle_max_clique(g: &SimpleGraph) -> u32 {
    let n = g.order();
    assert!(n <= 25, "subset enumeration oracle is for tiny graphs");
    let mut best = 0u32;
    for mask in 1u32..(1 << n) {
        if mask.count_ones() <= best {
            continue;
        }
        let vertices: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let is_clique = vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if is_clique {
            best = mask.count_ones();
        }
    }
    best
}

/// Whether some assignment of `k` colors is proper, by exhaustive
/// backtracking in fixed vertex order (no saturation heuristics).
pub fn oracle_k_colorable(g: &SimpleGraph, k: u32) -> bool {
    fn recurse(g: &SimpleGraph, k: u32, v: usize, colors: &mut Vec<u32>) -> bool {
        if v == g.order() {
            return true;
        }
        for c in 0..k {
            if (0..v).any(|u| colors[u] == c && g.has_edge(u, v)) {
                continue;
            }
            colors.push(c);
            if recurse(g, k, v + 1, colors) {
                return true;
            }
            colors.pop();
        }
        false
    }
    recurse(g, k, 0, &mut Vec::new())
}

/// Chromatic number as the smallest `k` accepted by [`oracle_k_colorable`].
pub fn oracle_chromatic(g: &SimpleGraph) -> u32 {
    if g.order() == 0 {
        return 0;
    }
    (1..=g.order() as u32)
        .find(|&k| oracle_k_colorable(g, k))
        .unwrap()
}

/// Whether some assignment of exactly the palette `0..k` is proper, by
/// enumerating every one of the `k^order` assignments (no pruning at all).
pub fn oracle_k_colorable_by_full_enumeration(g: &SimpleGraph, k: u32) -> bool {
    let n = g.order();
    assert!(
        (k as f64).powi(n as i32) <= 5e8,
        "full enumeration oracle would take too long"
    );
    let edges = g.edges();
    let mut assignment = vec![0u32; n];
    loop {
        if edges.iter().all(|&(u, v)| assignment[u] != assignment[v]) {
            return true;
        }
        // Odometer step.
        let mut pos = 0;
        loop {
            if pos == n {
                return false;
            }
            assignment[pos] += 1;
            if assignment[pos] < k {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}
