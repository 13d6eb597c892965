//! Builders for the four graph families, parameterized by the pair-sum
//! sequence and by the edge semantics.
//!
//! The cross-subset edge rule admits two readings of "take element pairs
//! from the two subsets": [`EdgeSemantics::Strict`] drops pairs whose two
//! elements are equal integers, [`EdgeSemantics::Inclusive`] keeps them.
//! Strict preserves the even-degree and Eulerian claims; Inclusive is the
//! one that reproduces the published drawing of the `n = 3` multigraph and
//! its neighbourhood multiplicity sum. Everything downstream takes the
//! semantics as an argument, so both readings stay first-class.

use serde::{Deserialize, Serialize};

use crate::graphcore::{MultiGraph, SimpleGraph, MAX_MATERIALIZE_N};
use crate::numseq::SumSequence;
use crate::setspace::{enumerate_subsets, SubsetId};
use crate::{Error, Result};

/// How cross-subset element pairs with equal values are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeSemantics {
    /// A pair `(a, b)`, `a` from one subset and `b` from the other,
    /// contributes only when `a != b` as integers.
    Strict,
    /// Every pair with `a + b` in the sequence contributes, including
    /// `a == b` (e.g. `a = b = 1`, sum 2).
    Inclusive,
}

impl EdgeSemantics {
    pub const BOTH: [EdgeSemantics; 2] = [EdgeSemantics::Strict, EdgeSemantics::Inclusive];
}

impl std::fmt::Display for EdgeSemantics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeSemantics::Strict => write!(f, "strict"),
            EdgeSemantics::Inclusive => write!(f, "inclusive"),
        }
    }
}

impl std::str::FromStr for EdgeSemantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(EdgeSemantics::Strict),
            "inclusive" => Ok(EdgeSemantics::Inclusive),
            other => Err(Error::Domain(format!(
                "unknown edge semantics `{other}` (expected strict|inclusive)"
            ))),
        }
    }
}

fn require_bound(seq: &SumSequence, n: u32) -> Result<()> {
    let needed = 2 * u64::from(n);
    if seq.bound() < needed {
        return Err(Error::Bound {
            query: needed,
            bound: seq.bound(),
        });
    }
    Ok(())
}

/// Number of ordered element pairs `(a, b)` in `A x B` whose sum lies in
/// `seq`, subject to the semantics. Symmetric in `A` and `B` because the
/// sum is.
pub fn pair_multiplicity(
    a: &SubsetId,
    b: &SubsetId,
    seq: &SumSequence,
    sem: EdgeSemantics,
) -> Result<u32> {
    if a.n() != b.n() {
        return Err(Error::Domain(format!(
            "subsets over different ground sets ({} vs {})",
            a.n(),
            b.n()
        )));
    }
    if a == b {
        return Err(Error::Domain(
            "pair_multiplicity requires distinct subsets; use loop_count".into(),
        ));
    }
    require_bound(seq, a.n())?;
    let mut count = 0;
    for x in a.elements() {
        for y in b.elements() {
            if sem == EdgeSemantics::Strict && x == y {
                continue;
            }
            if seq.contains(u64::from(x) + u64::from(y))? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Number of unordered pairs of distinct elements inside `A` whose sum lies
/// in `seq`. Identical under both semantics: loops always pair distinct
/// elements.
pub fn loop_count(a: &SubsetId, seq: &SumSequence) -> Result<u32> {
    require_bound(seq, a.n())?;
    let elements: Vec<u32> = a.elements().collect();
    let mut count = 0;
    for (idx, &x) in elements.iter().enumerate() {
        for &y in &elements[idx + 1..] {
            if seq.contains(u64::from(x) + u64::from(y))? {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Simple graph on `{1..n}` (vertex `i` is the integer `i + 1`) with an edge
/// between distinct integers summing into `seq`.
pub fn gen_fib_sum_graph(n: u32, seq: &SumSequence) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::Domain("ground-set size must be >= 1".into()));
    }
    require_bound(seq, n)?;
    let mut g = SimpleGraph::new(n as usize);
    for i in 1..=u64::from(n) {
        for j in i + 1..=u64::from(n) {
            if seq.contains(i + j)? {
                g.add_edge((i - 1) as usize, (j - 1) as usize);
            }
        }
    }
    Ok(g)
}

/// Simple graph on the non-empty subsets of `{1..n}`; distinct subsets are
/// adjacent iff they intersect.
pub fn gen_set_graph(n: u32) -> Result<SimpleGraph> {
    let subsets = enumerate_subsets(n)?;
    let mut g = SimpleGraph::new(subsets.len());
    for u in 0..subsets.len() {
        for v in u + 1..subsets.len() {
            if subsets[u].mask() & subsets[v].mask() != 0 {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// The sum-sequence set-graph: a multigraph on the non-empty subsets of
/// `{1..n}` with cross multiplicities from [`pair_multiplicity`] and loops
/// from [`loop_count`].
pub fn gen_fib_sum_set_graph(n: u32, seq: &SumSequence, sem: EdgeSemantics) -> Result<MultiGraph> {
    let subsets = enumerate_subsets(n)?;
    require_bound(seq, n)?;
    let mut g = MultiGraph::new(subsets.len());
    for u in 0..subsets.len() {
        for v in u + 1..subsets.len() {
            let m = pair_multiplicity(&subsets[u], &subsets[v], seq, sem)?;
            if m > 0 {
                g.set_eps(u, v, m);
            }
        }
        let l = loop_count(&subsets[u], seq)?;
        if l > 0 {
            g.set_loops(u, l);
        }
    }
    g.set_vertex_meta(subsets);
    Ok(g)
}

/// The set-graph of a host graph: vertices are non-empty subsets of the
/// host's vertex set (integer `j` standing for host vertex `j - 1`), cross
/// multiplicity counts ordered pairs spanning a host edge, loops count host
/// edges inside one subset.
///
/// The semantics argument is accepted for uniformity but cannot change the
/// result: a host graph is irreflexive, so `a == b` never spans an edge.
pub fn gen_set_graph_of_graph(host: &SimpleGraph, _sem: EdgeSemantics) -> Result<MultiGraph> {
    let m = host.order();
    if m < 1 {
        return Err(Error::Domain(
            "host graph must have at least one vertex".into(),
        ));
    }
    if m as u32 > MAX_MATERIALIZE_N {
        return Err(Error::Capacity {
            n: m as u32,
            cap: MAX_MATERIALIZE_N,
        });
    }
    let subsets = enumerate_subsets(m as u32)?;
    let host_edge = |x: u32, y: u32| x != y && host.has_edge((x - 1) as usize, (y - 1) as usize);
    let mut g = MultiGraph::new(subsets.len());
    for u in 0..subsets.len() {
        for v in u + 1..subsets.len() {
            let mut count = 0;
            for x in subsets[u].elements() {
                for y in subsets[v].elements() {
                    if host_edge(x, y) {
                        count += 1;
                    }
                }
            }
            if count > 0 {
                g.set_eps(u, v, count);
            }
        }
        let elements: Vec<u32> = subsets[u].elements().collect();
        let mut loops = 0;
        for (idx, &x) in elements.iter().enumerate() {
            for &y in &elements[idx + 1..] {
                if host_edge(x, y) {
                    loops += 1;
                }
            }
        }
        if loops > 0 {
            g.set_loops(u, loops);
        }
    }
    g.set_vertex_meta(subsets);
    Ok(g)
}

/// Builds the `(n+1)`-graph from the `n`-graph by the doubling construction:
/// two copies of `g_n` (the second with `n+1` adjoined to every subset),
/// cross edges between the copies, then the remaining contributions of the
/// element `n+1` and the new singleton `{n+1}`.
///
/// This is a cross-check generator, not the primary builder: the result is
/// compared against direct generation and a mismatch is reported as
/// [`Error::Inconsistency`].
pub fn gen_doubling_step(
    g_n: &MultiGraph,
    n: u32,
    seq: &SumSequence,
    sem: EdgeSemantics,
) -> Result<MultiGraph> {
    let expected_order = ((1u64 << n) - 1) as usize;
    if g_n.order() != expected_order {
        return Err(Error::Domain(format!(
            "input graph has order {}, expected {expected_order} for n = {n}",
            g_n.order()
        )));
    }
    require_bound(seq, n + 1)?;

    let old_subsets = enumerate_subsets(n)?;
    let new_subsets = enumerate_subsets(n + 1)?;
    let index_of: std::collections::HashMap<u64, usize> = new_subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.mask(), i))
        .collect();
    let new_element = n + 1;
    let adjoin = 1u64 << new_element;

    let mut g = MultiGraph::new(new_subsets.len());

    // Step 1: two copies, the second with n+1 adjoined to every subset.
    // Copy the pair table and loop counts of g_n into both blocks.
    for u in 0..old_subsets.len() {
        let u1 = index_of[&old_subsets[u].mask()];
        let u2 = index_of[&(old_subsets[u].mask() | adjoin)];
        g.set_loops(u1, g_n.loops(u));
        g.set_loops(u2, g_n.loops(u));
        for v in u + 1..old_subsets.len() {
            let m = g_n.eps(u, v);
            if m > 0 {
                let v1 = index_of[&old_subsets[v].mask()];
                let v2 = index_of[&(old_subsets[v].mask() | adjoin)];
                g.set_eps(u1, v1, m);
                g.set_eps(u2, v2, m);
            }
        }
    }

    // Step 2: all edges between the two copies, per the edge rule.
    for a in &old_subsets {
        let u1 = index_of[&a.mask()];
        for b in &old_subsets {
            let b_adj = SubsetId::new(b.mask() | adjoin, new_element)?;
            let v2 = index_of[&b_adj.mask()];
            let a_wide = SubsetId::new(a.mask(), new_element)?;
            let m = pair_multiplicity(&a_wide, &b_adj, seq, sem)?;
            if m > 0 {
                g.set_eps(u1, v2, m);
            }
        }
    }

    // Completion: contributions of the element n+1 itself.
    let sum_with_new =
        |x: u32| -> Result<bool> { seq.contains(u64::from(x) + u64::from(new_element)) };
    let doubled_new_in_seq = seq.contains(2 * u64::from(new_element))?;
    for a in &old_subsets {
        // Loops gained by A u {n+1}: pairs {a, n+1}.
        let u2 = index_of[&(a.mask() | adjoin)];
        let mut gained = 0;
        for x in a.elements() {
            if sum_with_new(x)? {
                gained += 1;
            }
        }
        g.set_loops(u2, g.loops(u2) + gained);

        // Pairs within the second copy: (n+1, b), (a, n+1), and under the
        // inclusive reading (n+1, n+1).
        for b in &old_subsets {
            if a.mask() >= b.mask() {
                continue;
            }
            let v2 = index_of[&(b.mask() | adjoin)];
            let mut delta = 0;
            for y in b.elements() {
                if sum_with_new(y)? {
                    delta += 1;
                }
            }
            for x in a.elements() {
                if sum_with_new(x)? {
                    delta += 1;
                }
            }
            if sem == EdgeSemantics::Inclusive && doubled_new_in_seq {
                delta += 1;
            }
            if delta > 0 {
                g.set_eps(u2, v2, g.eps(u2, v2) + delta);
            }
        }
    }

    // The new singleton {n+1}: loop-free, edges to every other vertex by the
    // plain rule.
    let singleton = SubsetId::from_elements([new_element], new_element)?;
    let s_idx = index_of[&singleton.mask()];
    for (v, b) in new_subsets.iter().enumerate() {
        if v == s_idx {
            continue;
        }
        let m = pair_multiplicity(&singleton, b, seq, sem)?;
        if m > 0 {
            g.set_eps(s_idx, v, m);
        }
    }

    g.set_vertex_meta(new_subsets.clone());

    // The doubling route must agree with direct generation exactly.
    let direct = gen_fib_sum_set_graph(n + 1, seq, sem)?;
    for u in 0..g.order() {
        if g.loops(u) != direct.loops(u) {
            return Err(Error::Inconsistency(format!(
                "doubling step disagrees with direct generation at n = {}: \
                 loops({}) = {} vs {}",
                n + 1,
                new_subsets[u],
                g.loops(u),
                direct.loops(u)
            )));
        }
        for v in u + 1..g.order() {
            if g.eps(u, v) != direct.eps(u, v) {
                return Err(Error::Inconsistency(format!(
                    "doubling step disagrees with direct generation at n = {}: \
                     eps({}, {}) = {} vs {}",
                    n + 1,
                    new_subsets[u],
                    new_subsets[v],
                    g.eps(u, v),
                    direct.eps(u, v)
                )));
            }
        }
    }
    Ok(g)
}

/// Degree of a subset vertex computed without any adjacency table.
///
/// Every element `b` of the ground set lies in `2^{n-1}` subsets, so under
/// the strict reading
///
/// ```text
/// d(v) = 2^{n-1} * sum over a in A_v of #{ b != a : a + b in seq }
/// ```
///
/// counting loop ends and cross-edge ends together. The inclusive reading
/// adds `(2^{n-1} - 1)` for every `a` in `A_v` with `2a` in the sequence
/// (the subsets containing `a` other than `A_v` itself; inside `A_v` the
/// pair `(a, a)` is not a loop). Validated against table-based degrees for
/// every vertex at small `n`.
pub fn degree_by_formula(subset: &SubsetId, seq: &SumSequence, sem: EdgeSemantics) -> Result<u64> {
    let n = subset.n();
    require_bound(seq, n)?;
    let half_count = 1u64 << (n - 1); // subsets containing a fixed element
    let mut degree = 0u64;
    for a in subset.elements() {
        let mut partners = 0u64;
        for b in 1..=n {
            if b != a && seq.contains(u64::from(a) + u64::from(b))? {
                partners += 1;
            }
        }
        degree += half_count * partners;
        if sem == EdgeSemantics::Inclusive && seq.contains(2 * u64::from(a))? {
            degree += half_count - 1;
        }
    }
    Ok(degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numseq::SequenceKind;

    fn fib(n: u32) -> SumSequence {
        SumSequence::for_ground_set(SequenceKind::Fibonacci, n).unwrap()
    }

    fn subset(elements: &[u32], n: u32) -> SubsetId {
        SubsetId::from_elements(elements.iter().copied(), n).unwrap()
    }

    #[test]
    fn pair_multiplicity_examples() {
        let seq = fib(3);
        let a = subset(&[1, 2], 3);
        let b = subset(&[1, 2, 3], 3);
        assert_eq!(
            pair_multiplicity(&a, &b, &seq, EdgeSemantics::Inclusive).unwrap(),
            4
        );

        let c = subset(&[1, 3], 3);
        assert_eq!(
            pair_multiplicity(&a, &c, &seq, EdgeSemantics::Inclusive).unwrap(),
            3
        );
        assert_eq!(
            pair_multiplicity(&a, &c, &seq, EdgeSemantics::Strict).unwrap(),
            2
        );

        let d = subset(&[3], 3);
        for sem in EdgeSemantics::BOTH {
            assert_eq!(pair_multiplicity(&d, &c, &seq, sem).unwrap(), 0);
        }
    }

    #[test]
    fn pair_multiplicity_rejects_equal_subsets_and_short_bounds() {
        let seq = fib(3);
        let a = subset(&[1, 2], 3);
        assert!(pair_multiplicity(&a, &a, &seq, EdgeSemantics::Strict).is_err());

        let short = SumSequence::fibonacci(3).unwrap();
        let b = subset(&[3], 3);
        assert!(matches!(
            pair_multiplicity(&a, &b, &short, EdgeSemantics::Strict),
            Err(crate::Error::Bound { .. })
        ));
    }

    #[test]
    fn loop_count_examples() {
        let seq = fib(4);
        assert_eq!(loop_count(&subset(&[1, 2, 3], 4), &seq).unwrap(), 2);
        assert_eq!(loop_count(&subset(&[1], 4), &seq).unwrap(), 0);
        assert_eq!(loop_count(&subset(&[1, 2, 3, 4], 4), &seq).unwrap(), 3);
    }

    #[test]
    fn fib_sum_graph_small_cases() {
        let g = gen_fib_sum_graph(3, &fib(3)).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]); // the path 1-2-3

        let k1 = gen_fib_sum_graph(1, &fib(1)).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);

        let g8 = gen_fib_sum_graph(8, &fib(8)).unwrap();
        assert_eq!(g8.edge_count(), 8);
        assert_eq!(
            g8.edge_count(),
            crate::numseq::closed_form_edge_count(8).unwrap()
        );
    }

    #[test]
    fn set_graph_small_cases() {
        let g3 = gen_set_graph(3).unwrap();
        assert_eq!(g3.edge_count(), 15);

        let g1 = gen_set_graph(1).unwrap();
        assert_eq!((g1.order(), g1.edge_count()), (1, 0));

        // {1}, {2}, {1,2}: the singletons are disjoint, so a path.
        let g2 = gen_set_graph(2).unwrap();
        assert_eq!(g2.edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn fib_sum_set_graph_n1_and_n2() {
        let seq = fib(2);
        for sem in EdgeSemantics::BOTH {
            let g1 = gen_fib_sum_set_graph(1, &fib(1), sem).unwrap();
            assert_eq!(g1.order(), 1);
            assert_eq!(g1.size(), (0, 0));

            let g2 = gen_fib_sum_set_graph(2, &seq, sem).unwrap();
            assert_eq!(g2.eps(0, 1), 1); // {1}-{2}
            assert_eq!(g2.eps(1, 2), 1); // {2}-{1,2}
            let expected = if sem == EdgeSemantics::Inclusive {
                2
            } else {
                1
            };
            assert_eq!(g2.eps(0, 2), expected, "{sem}"); // {1}-{1,2}
            assert_eq!(g2.loops(2), 1);
        }
    }

    #[test]
    fn fig2_key_multiplicities_inclusive() {
        let g = gen_fib_sum_set_graph(3, &fib(3), EdgeSemantics::Inclusive).unwrap();
        // Enumeration order: {1} {2} {3} {1,2} {1,3} {2,3} {1,2,3}.
        assert_eq!(g.eps(3, 6), 4);
        assert_eq!(g.eps(3, 4), 3);
        assert_eq!(g.eps(0, 3), 2);
        assert_eq!(g.eps(0, 4), 1); // exists only via the pair (1,1)
        assert_eq!(g.eps(0, 2), 0);
        assert_eq!([g.loops(3), g.loops(5), g.loops(6)], [1, 1, 2]);
        assert_eq!(g.size(), (34, 4));
    }

    #[test]
    fn strict_n3_drops_equal_element_pairs() {
        let g = gen_fib_sum_set_graph(3, &fib(3), EdgeSemantics::Strict).unwrap();
        assert_eq!(g.eps(0, 4), 0); // {1}-{1,3} needed (1,1)
        assert_eq!(g.eps(3, 6), 3);
        assert_eq!(g.size(), (28, 4));
        assert_eq!(g.degrees(), vec![4, 8, 4, 12, 8, 12, 16]);
    }

    #[test]
    fn set_graph_of_graph_examples() {
        let k1 = SimpleGraph::new(1);
        let g = gen_set_graph_of_graph(&k1, EdgeSemantics::Strict).unwrap();
        assert_eq!((g.order(), g.size()), (1, (0, 0)));

        let mut p2 = SimpleGraph::new(2);
        p2.add_edge(0, 1);
        let g = gen_set_graph_of_graph(&p2, EdgeSemantics::Strict).unwrap();
        // Vertices: {1}, {2}, {1,2}.
        assert_eq!(g.eps(0, 1), 1);
        assert_eq!(g.eps(0, 2), 1);
        assert_eq!(g.eps(1, 2), 1);
        assert_eq!(g.loops(2), 1);

        let empty = SimpleGraph::new(2);
        let g = gen_set_graph_of_graph(&empty, EdgeSemantics::Inclusive).unwrap();
        assert_eq!(g.size(), (0, 0));
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn set_graph_of_graph_ignores_semantics() {
        let mut host = SimpleGraph::new(4);
        host.add_edge(0, 1);
        host.add_edge(1, 2);
        host.add_edge(2, 3);
        let strict = gen_set_graph_of_graph(&host, EdgeSemantics::Strict).unwrap();
        let inclusive = gen_set_graph_of_graph(&host, EdgeSemantics::Inclusive).unwrap();
        assert_eq!(strict, inclusive);
    }

    #[test]
    fn doubling_step_matches_direct_generation() {
        for sem in EdgeSemantics::BOTH {
            for n in 1..=4u32 {
                let seq = fib(n + 1);
                let g_n = gen_fib_sum_set_graph(n, &seq, sem).unwrap();
                let stepped = gen_doubling_step(&g_n, n, &seq, sem).unwrap();
                let direct = gen_fib_sum_set_graph(n + 1, &seq, sem).unwrap();
                assert_eq!(stepped, direct, "n = {n}, {sem}");
            }
        }
    }

    #[test]
    fn doubling_step_rejects_wrong_order() {
        let seq = fib(3);
        let g = MultiGraph::new(5);
        assert!(gen_doubling_step(&g, 2, &seq, EdgeSemantics::Strict).is_err());
    }

    #[test]
    fn degree_formula_matches_tables() {
        for n in 1..=7u32 {
            let seq = fib(n);
            let subsets = enumerate_subsets(n).unwrap();
            for sem in EdgeSemantics::BOTH {
                let g = gen_fib_sum_set_graph(n, &seq, sem).unwrap();
                for (v, sub) in subsets.iter().enumerate() {
                    assert_eq!(
                        g.degree(v).unwrap(),
                        degree_by_formula(sub, &seq, sem).unwrap(),
                        "n = {n}, v = {sub}, {sem}"
                    );
                }
            }
        }
    }

    #[test]
    fn inclusive_dominates_strict_pointwise() {
        let n = 5;
        let seq = fib(n);
        let strict = gen_fib_sum_set_graph(n, &seq, EdgeSemantics::Strict).unwrap();
        let inclusive = gen_fib_sum_set_graph(n, &seq, EdgeSemantics::Inclusive).unwrap();
        let subsets = enumerate_subsets(n).unwrap();
        for u in 0..strict.order() {
            for v in u + 1..strict.order() {
                assert!(inclusive.eps(u, v) >= strict.eps(u, v));
                // The two readings differ exactly on pairs sharing an
                // element a with 2a in the sequence.
                let shared_doubling = subsets[u]
                    .elements()
                    .any(|a| subsets[v].contains(a) && seq.contains(2 * u64::from(a)).unwrap());
                assert_eq!(
                    inclusive.eps(u, v) > strict.eps(u, v),
                    shared_doubling,
                    "pair ({}, {})",
                    subsets[u],
                    subsets[v]
                );
            }
        }
    }

    #[test]
    fn lucas_sequence_builds_too() {
        let seq = SumSequence::for_ground_set(SequenceKind::Lucas, 3).unwrap();
        let g = gen_fib_sum_set_graph(3, &seq, EdgeSemantics::Strict).unwrap();
        // {1,2} has 1+2 = 3, a Lucas number: still a loop there.
        assert_eq!(g.loops(3), 1);
        // {1,3} sums to 4, Lucas: a loop the Fibonacci graph lacks.
        assert_eq!(g.loops(4), 1);
    }
}
