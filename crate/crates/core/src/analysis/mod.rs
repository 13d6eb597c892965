//! Invariant computations: connectivity, pendant detection, degree parity,
//! Eulerian/bipartite checks, loop sequences, and the exact exponential
//! solvers (clique, chromatic number, Hamiltonian cycle) in [`solvers`].

mod solvers;

pub use solvers::{
    chromatic_number, clique_number, eared_clique_number, greedy_clique, hamiltonian_cycle,
    max_clique, HamiltonianOutcome, SolverResult,
};

use crate::graphcore::{MultiGraph, SimpleGraph};
use crate::numseq::{closed_form_edge_count, fib_upto, SumSequence};
use crate::setspace::SubsetId;
use crate::{Error, Result};

/// Reachability over the adjacency relation; the one-vertex graph is
/// connected.
pub fn is_connected(g: &SimpleGraph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                reached += 1;
                stack.push(u);
            }
        }
    }
    reached == n
}

/// Connectivity of a multigraph is connectivity of its popped graph: loops
/// and multiplicities never affect reachability.
pub fn is_connected_multigraph(g: &MultiGraph) -> bool {
    is_connected(&g.popped())
}

/// Vertices of degree exactly 1. A looped vertex has degree >= 2 and an
/// isolated vertex has degree 0, so neither is ever pendant.
pub fn pendant_vertices(g: &MultiGraph) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| g.degree(v).unwrap() == 1)
        .collect()
}

pub fn all_degrees_even(g: &MultiGraph) -> bool {
    (0..g.order()).all(|v| g.degree(v).unwrap().is_multiple_of(2))
}

/// Eulerian circuit existence: every degree even, and all edge-bearing
/// vertices (loops count) in one component. Edgeless graphs admit the empty
/// circuit.
pub fn is_eulerian(g: &MultiGraph) -> bool {
    if !all_degrees_even(g) {
        return false;
    }
    let active: Vec<usize> = (0..g.order())
        .filter(|&v| g.degree(v).unwrap() > 0)
        .collect();
    let Some(&start) = active.first() else {
        return true;
    };
    let popped = g.popped();
    let mut seen = vec![false; g.order()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for u in popped.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    active.into_iter().all(|v| seen[v])
}

/// Two-colorability, per component.
pub fn is_bipartite(g: &SimpleGraph) -> bool {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// The multiset of per-vertex loop counts, sorted ascending.
pub fn loop_sequence(g: &MultiGraph) -> Vec<u32> {
    let mut out: Vec<u32> = (0..g.order()).map(|v| g.loops(v)).collect();
    out.sort_unstable();
    out
}

/// Loop counts of every non-empty subset of `{1..n}` computed directly from
/// the subsets, without materializing any pair table. Sorted ascending.
pub fn loop_sequence_direct(n: u32, seq: &SumSequence) -> Result<Vec<u32>> {
    if !(1..=25).contains(&n) {
        return Err(Error::Domain(format!(
            "direct loop counting supports 1..=25, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(((1u64 << n) - 1) as usize);
    for raw in 1u64..(1 << n) {
        let subset = SubsetId::new(raw << 1, n)?;
        out.push(crate::generators::loop_count(&subset, seq)?);
    }
    out.sort_unstable();
    Ok(out)
}

/// Pair count behind the closed form, by literal enumeration: the number of
/// unordered pairs `{i, j}` in `{1..n}`, `i != j`, whose sum is Fibonacci.
/// Deliberately independent of `fib_index` and the formula.
pub fn fib_pair_count_brute(n: u32) -> Result<u64> {
    if n < 1 {
        return Err(Error::Domain("pair counting requires n >= 1".into()));
    }
    let n = u64::from(n);
    let mut is_member = vec![false; (2 * n + 1) as usize];
    for f in fib_upto(2 * n)? {
        if f >= 1 {
            is_member[f as usize] = true;
        }
    }
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if is_member[(i + j) as usize] {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The attainable loop numbers `(count(1), ..., count(n))` where `count(m)`
/// is the number of Fibonacci-sum pairs in `{1..m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopValueList {
    pub n: u32,
    pub values: Vec<u64>,
}

/// Computes the loop-value list by brute-force pair counting, cross-checked
/// entry by entry against the closed form; a disagreement is an internal
/// consistency error, never a silent result.
pub fn loop_value_list(n: u32) -> Result<LoopValueList> {
    if n < 1 {
        return Err(Error::Domain("loop_value_list requires n >= 1".into()));
    }
    let mut values = Vec::with_capacity(n as usize);
    for m in 1..=n {
        let brute = fib_pair_count_brute(m)?;
        let formula = closed_form_edge_count(u64::from(m))?;
        if brute != formula {
            return Err(Error::Inconsistency(format!(
                "pair count {brute} != closed form {formula} at m = {m}"
            )));
        }
        values.push(brute);
    }
    Ok(LoopValueList { n, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        gen_fib_sum_graph, gen_fib_sum_set_graph, gen_set_graph, EdgeSemantics,
    };
    use crate::numseq::{SequenceKind, SumSequence};

    fn fib(n: u32) -> SumSequence {
        SumSequence::for_ground_set(SequenceKind::Fibonacci, n).unwrap()
    }

    fn fib_set_graph(n: u32, sem: EdgeSemantics) -> MultiGraph {
        gen_fib_sum_set_graph(n, &fib(n), sem).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        for sem in EdgeSemantics::BOTH {
            assert!(is_connected_multigraph(&fib_set_graph(3, sem)));
        }
        assert!(is_connected_multigraph(&fib_set_graph(
            5,
            EdgeSemantics::Strict
        )));
        assert!(!is_connected_multigraph(&MultiGraph::new(2)));
        assert!(is_connected_multigraph(&MultiGraph::new(1)));
    }

    #[test]
    fn pendant_examples() {
        for n in 1..=6 {
            for sem in EdgeSemantics::BOTH {
                assert!(
                    pendant_vertices(&fib_set_graph(n, sem)).is_empty(),
                    "n = {n}, {sem}"
                );
            }
        }
        let mut p2 = MultiGraph::new(2);
        p2.set_eps(0, 1, 1);
        assert_eq!(pendant_vertices(&p2), vec![0, 1]);
        assert!(pendant_vertices(&MultiGraph::new(1)).is_empty());
    }

    #[test]
    fn degree_parity_split_at_n3() {
        assert!(all_degrees_even(&fib_set_graph(3, EdgeSemantics::Strict)));
        let inclusive = fib_set_graph(3, EdgeSemantics::Inclusive);
        assert!(!all_degrees_even(&inclusive));
        // The witness: {1} has degree 7 under the inclusive reading.
        assert_eq!(inclusive.degree(0).unwrap(), 7);
        assert!(all_degrees_even(&MultiGraph::new(1)));
    }

    #[test]
    fn eulerian_examples() {
        for n in 2..=6 {
            assert!(
                is_eulerian(&fib_set_graph(n, EdgeSemantics::Strict)),
                "n = {n}"
            );
        }
        assert!(!is_eulerian(&fib_set_graph(3, EdgeSemantics::Inclusive)));
        assert!(is_eulerian(&MultiGraph::new(1)));
    }

    #[test]
    fn eulerian_needs_edge_bearing_vertices_connected() {
        // A triangle plus a far-away loop-only vertex: degrees all even but
        // the loop cannot join the circuit.
        let mut g = MultiGraph::new(4);
        g.set_eps(0, 1, 1);
        g.set_eps(1, 2, 1);
        g.set_eps(0, 2, 1);
        g.set_loops(3, 1);
        assert!(all_degrees_even(&g));
        assert!(!is_eulerian(&g));
    }

    #[test]
    fn bipartite_examples() {
        for n in 2..=20 {
            assert!(is_bipartite(&gen_fib_sum_graph(n, &fib(n)).unwrap()));
        }
        let popped = fib_set_graph(3, EdgeSemantics::Inclusive).popped();
        assert!(!is_bipartite(&popped));
        assert!(is_bipartite(&SimpleGraph::new(1)));
    }

    #[test]
    fn loop_sequence_examples() {
        let g = fib_set_graph(3, EdgeSemantics::Strict);
        assert_eq!(loop_sequence(&g), vec![0, 0, 0, 0, 1, 1, 2]);

        let simple = MultiGraph::from_simple(&gen_set_graph(3).unwrap());
        assert!(loop_sequence(&simple).iter().all(|&l| l == 0));

        let g4 = fib_set_graph(4, EdgeSemantics::Strict);
        let seq4 = loop_sequence(&g4);
        for want in [0, 1, 2, 3] {
            assert!(seq4.contains(&want), "missing loop count {want}");
        }
    }

    #[test]
    fn direct_loop_counting_matches_tables() {
        for n in 1..=7 {
            let seq = fib(n);
            let table =
                loop_sequence(&gen_fib_sum_set_graph(n, &seq, EdgeSemantics::Strict).unwrap());
            let direct = loop_sequence_direct(n, &seq).unwrap();
            assert_eq!(table, direct, "n = {n}");
        }
    }

    #[test]
    fn loop_value_list_matches_published_prefix() {
        let list = loop_value_list(21).unwrap();
        assert_eq!(
            list.values,
            vec![0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 12, 14, 15, 16, 17, 18, 19, 21, 23, 25, 26]
        );
        for excluded in [6, 11, 13, 20, 22] {
            assert!(!list.values.contains(&excluded));
        }
        assert!(list.values.windows(2).all(|w| w[0] <= w[1]));

        assert_eq!(loop_value_list(1).unwrap().values, vec![0]);
    }

    #[test]
    fn brute_pair_count_small_values() {
        let want = [0u64, 1, 2, 3, 4, 5, 7, 8];
        for (idx, &w) in want.iter().enumerate() {
            assert_eq!(fib_pair_count_brute(idx as u32 + 1).unwrap(), w);
        }
    }
}
