//! Exact exponential solvers with explicit node budgets.
//!
//! Every solver returns a three-valued answer: an exact result, a definitive
//! negative, or `Unknown` when the expansion budget runs out. Budgets make
//! the verification harness honest — an exhausted search is reported as
//! skipped, never as a pass. Branching follows the canonical vertex order
//! (ascending index) so results are reproducible.

use crate::graphcore::{MultiGraph, SimpleGraph};
use crate::{Error, Result};

/// Result of a budgeted exact computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverResult<T> {
    Exact(T),
    /// The budget ran out before the search space was exhausted.
    Unknown,
}

impl<T> SolverResult<T> {
    pub fn exact(self) -> Option<T> {
        match self {
            SolverResult::Exact(v) => Some(v),
            SolverResult::Unknown => None,
        }
    }
}

/// Outcome of a Hamiltonian-cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonianOutcome {
    /// A verified spanning cycle, listed vertex by vertex.
    Cycle(Vec<usize>),
    /// The search space was exhausted: no cycle exists.
    Absent,
    Unknown,
}

struct Budget {
    remaining: u64,
}

impl Budget {
    fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::Domain("search budget must be positive".into()));
        }
        Ok(Self { remaining: limit })
    }

    /// Consumes one node expansion; `false` once exhausted.
    fn tick(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }
}

// Vertex sets as bitset words; all helpers operate on word slices sized to
// the graph's row width.

fn set_full(order: usize, words: usize) -> Vec<u64> {
    let mut s = vec![u64::MAX; words];
    let spill = order % 64;
    if spill != 0 {
        s[words - 1] = (1u64 << spill) - 1;
    }
    if order == 0 {
        s.fill(0);
    }
    s
}

fn set_count(s: &[u64]) -> usize {
    s.iter().map(|w| w.count_ones() as usize).sum()
}

fn set_contains(s: &[u64], v: usize) -> bool {
    s[v / 64] & (1 << (v % 64)) != 0
}

fn set_remove(s: &mut [u64], v: usize) {
    s[v / 64] &= !(1 << (v % 64));
}

fn set_insert(s: &mut [u64], v: usize) {
    s[v / 64] |= 1 << (v % 64);
}

fn set_iter(s: &[u64]) -> impl Iterator<Item = usize> + '_ {
    s.iter().enumerate().flat_map(|(w, &word)| {
        let base = w * 64;
        std::iter::successors(Some(word), |&x| Some(x & x.wrapping_sub(1)))
            .take_while(|&x| x != 0)
            .map(move |x| base + x.trailing_zeros() as usize)
    })
}

fn set_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn set_and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

fn set_is_empty(s: &[u64]) -> bool {
    s.iter().all(|&w| w == 0)
}

/// Deterministic greedy clique: repeatedly take the candidate of maximum
/// degree within the shrinking candidate set. A cheap lower bound for the
/// exact solvers.
pub fn greedy_clique(g: &SimpleGraph) -> Vec<usize> {
    let words = g.words_per_row();
    let mut candidates = set_full(g.order(), words);
    let mut clique = Vec::new();
    while !set_is_empty(&candidates) {
        let v = set_iter(&candidates)
            .max_by_key(|&v| (set_and_count(g.row(v), &candidates), std::cmp::Reverse(v)))
            .unwrap();
        clique.push(v);
        candidates = set_and(&candidates, g.row(v));
    }
    clique.sort_unstable();
    clique
}

fn is_clique(g: &SimpleGraph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Exact maximum clique via Bron-Kerbosch with pivoting and a size bound;
/// the returned clique is re-verified pairwise before it is reported.
pub fn max_clique(g: &SimpleGraph, node_budget: u64) -> Result<SolverResult<Vec<usize>>> {
    let mut budget = Budget::new(node_budget)?;
    if g.order() == 0 {
        return Ok(SolverResult::Exact(Vec::new()));
    }
    let words = g.words_per_row();
    let mut best = greedy_clique(g);
    let p = set_full(g.order(), words);
    let x = vec![0u64; words];
    let mut current = Vec::new();
    let complete = bron_kerbosch(g, p, x, &mut current, &mut best, &mut budget);
    if !complete {
        return Ok(SolverResult::Unknown);
    }
    if !is_clique(g, &best) {
        return Err(Error::Inconsistency(
            "clique search returned a non-clique".into(),
        ));
    }
    best.sort_unstable();
    Ok(SolverResult::Exact(best))
}

/// Order of a maximum clique.
pub fn clique_number(g: &SimpleGraph, node_budget: u64) -> Result<SolverResult<u32>> {
    Ok(match max_clique(g, node_budget)? {
        SolverResult::Exact(c) => SolverResult::Exact(c.len() as u32),
        SolverResult::Unknown => SolverResult::Unknown,
    })
}

/// The eared clique number equals the clique number of the popped graph:
/// loops and parallel edges ride along but never change the order.
pub fn eared_clique_number(g: &MultiGraph, node_budget: u64) -> Result<SolverResult<u32>> {
    clique_number(&g.popped(), node_budget)
}

/// Returns `false` if the budget ran out (search incomplete).
fn bron_kerbosch(
    g: &SimpleGraph,
    mut p: Vec<u64>,
    mut x: Vec<u64>,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    budget: &mut Budget,
) -> bool {
    if !budget.tick() {
        return false;
    }
    if set_is_empty(&p) && set_is_empty(&x) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return true;
    }
    if current.len() + set_count(&p) <= best.len() {
        return true;
    }
    // Pivot on the vertex of P u X covering most of P.
    let pivot = set_iter(&p)
        .chain(set_iter(&x))
        .max_by_key(|&u| (set_and_count(&p, g.row(u)), std::cmp::Reverse(u)))
        .unwrap();
    let mut candidates: Vec<usize> = set_iter(&p)
        .filter(|&v| !set_contains(g.row(pivot), v))
        .collect();
    candidates.sort_unstable();
    for v in candidates {
        current.push(v);
        let p_next = set_and(&p, g.row(v));
        let x_next = set_and(&x, g.row(v));
        let complete = bron_kerbosch(g, p_next, x_next, current, best, budget);
        current.pop();
        if !complete {
            return false;
        }
        set_remove(&mut p, v);
        set_insert(&mut x, v);
    }
    true
}

fn is_proper_coloring(g: &SimpleGraph, colors: &[u32]) -> bool {
    (0..g.order()).all(|u| g.neighbors(u).all(|v| colors[u] != colors[v]))
}

/// Greedy coloring in saturation order; an upper bound and the fallback
/// witness for the exact solver.
fn greedy_coloring(g: &SimpleGraph) -> Vec<u32> {
    let n = g.order();
    let mut colors: Vec<Option<u32>> = vec![None; n];
    for _ in 0..n {
        let v = saturation_pick(g, &colors).expect("an uncolored vertex remains");
        let used: std::collections::HashSet<u32> =
            g.neighbors(v).filter_map(|u| colors[u]).collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        colors[v] = Some(c);
    }
    colors.into_iter().map(|c| c.unwrap()).collect()
}

/// DSATUR vertex selection: most distinct neighbour colors, then highest
/// degree, then lowest index.
fn saturation_pick(g: &SimpleGraph, colors: &[Option<u32>]) -> Option<usize> {
    (0..g.order())
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| {
            let mut seen = std::collections::HashSet::new();
            for u in g.neighbors(v) {
                if let Some(c) = colors[u] {
                    seen.insert(c);
                }
            }
            (seen.len(), g.degree(v), std::cmp::Reverse(v))
        })
}

enum ColorSearch {
    Feasible(Vec<u32>),
    Infeasible,
    Exhausted,
}

fn k_coloring(g: &SimpleGraph, k: u32, budget: &mut Budget) -> ColorSearch {
    let n = g.order();
    let mut colors: Vec<Option<u32>> = vec![None; n];
    match color_recurse(g, k, 0, &mut colors, budget) {
        ColorRec::Done => ColorSearch::Feasible(colors.into_iter().map(|c| c.unwrap()).collect()),
        ColorRec::Dead => ColorSearch::Infeasible,
        ColorRec::OutOfBudget => ColorSearch::Exhausted,
    }
}

enum ColorRec {
    Done,
    Dead,
    OutOfBudget,
}

fn color_recurse(
    g: &SimpleGraph,
    k: u32,
    highest_used: u32,
    colors: &mut Vec<Option<u32>>,
    budget: &mut Budget,
) -> ColorRec {
    if !budget.tick() {
        return ColorRec::OutOfBudget;
    }
    let Some(v) = saturation_pick(g, colors) else {
        return ColorRec::Done;
    };
    let mut forbidden = std::collections::HashSet::new();
    for u in g.neighbors(v) {
        if let Some(c) = colors[u] {
            forbidden.insert(c);
        }
    }
    // Symmetry breaking: at most one previously unused color may be opened.
    let limit = k.min(highest_used + 2);
    for c in 0..limit {
        if forbidden.contains(&c) {
            continue;
        }
        colors[v] = Some(c);
        match color_recurse(g, k, highest_used.max(c + 1), colors, budget) {
            ColorRec::Dead => {}
            done_or_budget => return done_or_budget,
        }
        colors[v] = None;
    }
    colors[v] = None;
    ColorRec::Dead
}

/// Exact chromatic number by iterative deepening over `k`, starting at the
/// greedy-clique lower bound, with saturation-ordered branching inside each
/// `k`-coloring search. Any accepted coloring is verified before the value
/// is reported.
pub fn chromatic_number(g: &SimpleGraph, node_budget: u64) -> Result<SolverResult<u32>> {
    let mut budget = Budget::new(node_budget)?;
    let n = g.order();
    if n == 0 {
        return Ok(SolverResult::Exact(0));
    }
    if g.edge_count() == 0 {
        return Ok(SolverResult::Exact(1));
    }
    let lower = greedy_clique(g).len() as u32;
    let greedy = greedy_coloring(g);
    if !is_proper_coloring(g, &greedy) {
        return Err(Error::Inconsistency("greedy coloring is improper".into()));
    }
    let upper = greedy.iter().max().unwrap() + 1;
    for k in lower..upper {
        match k_coloring(g, k, &mut budget) {
            ColorSearch::Feasible(colors) => {
                if !is_proper_coloring(g, &colors) {
                    return Err(Error::Inconsistency(
                        "coloring search returned an improper coloring".into(),
                    ));
                }
                if colors.iter().any(|&c| c >= k) {
                    return Err(Error::Inconsistency(
                        "coloring search exceeded its palette".into(),
                    ));
                }
                return Ok(SolverResult::Exact(k));
            }
            ColorSearch::Infeasible => {}
            ColorSearch::Exhausted => return Ok(SolverResult::Unknown),
        }
    }
    // Every k below the greedy bound is infeasible; the greedy coloring
    // itself witnesses the upper bound.
    Ok(SolverResult::Exact(upper))
}

/// Backtracking Hamiltonian-cycle search with degree pruning.
///
/// The search runs on the popped view of whatever graph the caller holds:
/// loops and multiplicities cannot affect Hamiltonicity. A returned cycle is
/// re-verified edge by edge. The one-vertex graph counts as trivially
/// Hamiltonian; a two-vertex simple graph never is.
pub fn hamiltonian_cycle(g: &SimpleGraph, node_budget: u64) -> Result<HamiltonianOutcome> {
    let mut budget = Budget::new(node_budget)?;
    let n = g.order();
    if n == 0 {
        return Err(Error::Domain("empty graph".into()));
    }
    if n == 1 {
        return Ok(HamiltonianOutcome::Cycle(vec![0]));
    }
    if n == 2 {
        return Ok(HamiltonianOutcome::Absent);
    }
    if !super::is_connected(g) || (0..n).any(|v| g.degree(v) < 2) {
        return Ok(HamiltonianOutcome::Absent);
    }

    let words = g.words_per_row();
    let mut unvisited = set_full(n, words);
    set_remove(&mut unvisited, 0);
    let mut path = vec![0usize];
    match extend_cycle(g, &mut path, &mut unvisited, &mut budget) {
        HamRec::Found => {
            if !verify_cycle(g, &path) {
                return Err(Error::Inconsistency(
                    "cycle search returned an invalid cycle".into(),
                ));
            }
            Ok(HamiltonianOutcome::Cycle(path))
        }
        HamRec::Dead => Ok(HamiltonianOutcome::Absent),
        HamRec::OutOfBudget => Ok(HamiltonianOutcome::Unknown),
    }
}

enum HamRec {
    Found,
    Dead,
    OutOfBudget,
}

fn extend_cycle(
    g: &SimpleGraph,
    path: &mut Vec<usize>,
    unvisited: &mut Vec<u64>,
    budget: &mut Budget,
) -> HamRec {
    if !budget.tick() {
        return HamRec::OutOfBudget;
    }
    let current = *path.last().unwrap();
    if path.len() == g.order() {
        return if g.has_edge(current, path[0]) {
            HamRec::Found
        } else {
            HamRec::Dead
        };
    }

    // Degree pruning: every unvisited vertex still needs two usable
    // connections among the unvisited vertices, the path head, and the
    // path tail.
    let mut usable = unvisited.clone();
    set_insert(&mut usable, path[0]);
    set_insert(&mut usable, current);
    for w in set_iter(unvisited) {
        if set_and_count(g.row(w), &usable) < 2 {
            return HamRec::Dead;
        }
    }

    let next: Vec<usize> = set_iter(&set_and(g.row(current), unvisited)).collect();
    for v in next {
        path.push(v);
        set_remove(unvisited, v);
        match extend_cycle(g, path, unvisited, budget) {
            HamRec::Dead => {}
            found_or_budget => return found_or_budget,
        }
        set_insert(unvisited, v);
        path.pop();
    }
    HamRec::Dead
}

fn verify_cycle(g: &SimpleGraph, path: &[usize]) -> bool {
    let n = g.order();
    if path.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(path[i], path[(i + 1) % n]))
}
