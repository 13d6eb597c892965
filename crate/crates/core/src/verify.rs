//! The claim-suite harness: evaluates every checkable structural claim about
//! the graph families over a range of `n` and both edge semantics, producing
//! one pass/fail/skip record per `(claim, n, semantics)` triple.
//!
//! Two groups of claims are genuinely semantics-sensitive: degree parity
//! (and hence the Eulerian property) holds under the strict reading only,
//! while the published `n = 3` multigraph drawing and the neighbourhood sum
//! 15 used in the size-bound argument require the inclusive reading. The
//! expectation table encodes this split instead of hiding it: a claim tied
//! to one reading is merely *observational* under the other, and an
//! observational failure is recorded but is not a deviation.
//!
//! The harness has also established one negative result: the size bound
//! [`ClaimId::Prop2_9`] holds for `n <= 3` exactly as published and is false
//! for every larger `n` checked, under both semantics (see [`expectation`]).

use std::time::Instant;

use serde::Serialize;

use crate::analysis::{
    self, chromatic_number, fib_pair_count_brute, hamiltonian_cycle, is_connected, loop_value_list,
    HamiltonianOutcome, SolverResult,
};
use crate::generators::{
    degree_by_formula, gen_doubling_step, gen_fib_sum_graph, gen_fib_sum_set_graph, gen_set_graph,
    pair_multiplicity, EdgeSemantics,
};
use crate::graphcore::{MultiGraph, SimpleGraph, MAX_MATERIALIZE_N};
use crate::numseq::{closed_form_edge_count, SequenceKind, SumSequence};
use crate::setspace::{full_set_index, label_of, SubsetId};
use crate::{Error, Result};

/// Identifiers for every claim the suite knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    /// No pendant vertices.
    Thm2_1,
    /// Connected.
    Cor2_2,
    /// Hamiltonian; the spanning cycle has odd length `2^n - 1`.
    Cor2_3,
    /// The full-set vertex is the unique vertex whose loop count equals the
    /// pair count of the plain sum graph.
    Lem2_4,
    /// The maximum loop number equals the two-case closed form.
    Thm2_5,
    /// The loop sequence contains every attainable loop value.
    Thm2_6,
    /// All vertex degrees are even.
    Thm2_7,
    /// Eulerian.
    Cor2_8,
    /// Popped size is at most `(2^n - 2)` plus the multiplicity sum at the
    /// full-set vertex.
    Prop2_9,
    /// The published `n = 3` numbers behind the size bound: neighbourhood
    /// sum 15 and vertex-deleted popped size 13.
    Prop2_9Values,
    /// The exact `n = 3` multiplicity table and loop vector.
    Fig2Golden,
    /// Order and size inequalities across the three families, with equality
    /// throughout only at `n = 1`.
    SizeChain,
    /// The plain sum graph is bipartite with chromatic number 2 for `n >= 2`.
    ChiFibSum,
    /// The doubling construction reproduces direct generation at `n + 1`.
    Doubling,
}

impl ClaimId {
    pub const ALL: [ClaimId; 14] = [
        ClaimId::Thm2_1,
        ClaimId::Cor2_2,
        ClaimId::Cor2_3,
        ClaimId::Lem2_4,
        ClaimId::Thm2_5,
        ClaimId::Thm2_6,
        ClaimId::Thm2_7,
        ClaimId::Cor2_8,
        ClaimId::Prop2_9,
        ClaimId::Prop2_9Values,
        ClaimId::Fig2Golden,
        ClaimId::SizeChain,
        ClaimId::ChiFibSum,
        ClaimId::Doubling,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimId::Thm2_1 => "THM_2_1",
            ClaimId::Cor2_2 => "COR_2_2",
            ClaimId::Cor2_3 => "COR_2_3",
            ClaimId::Lem2_4 => "LEM_2_4",
            ClaimId::Thm2_5 => "THM_2_5",
            ClaimId::Thm2_6 => "THM_2_6",
            ClaimId::Thm2_7 => "THM_2_7",
            ClaimId::Cor2_8 => "COR_2_8",
            ClaimId::Prop2_9 => "PROP_2_9",
            ClaimId::Prop2_9Values => "PROP_2_9_VALUES",
            ClaimId::Fig2Golden => "FIG_2_GOLDEN",
            ClaimId::SizeChain => "SIZE_CHAIN",
            ClaimId::ChiFibSum => "CHI_FIB_SUM",
            ClaimId::Doubling => "DOUBLING",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            ClaimId::Thm2_1 => "no pendant vertices",
            ClaimId::Cor2_2 => "connected",
            ClaimId::Cor2_3 => "Hamiltonian (odd spanning cycle)",
            ClaimId::Lem2_4 => "unique max-loop vertex is the full set",
            ClaimId::Thm2_5 => "max loop number matches closed form",
            ClaimId::Thm2_6 => "loop sequence covers all attainable values",
            ClaimId::Thm2_7 => "all degrees even",
            ClaimId::Cor2_8 => "Eulerian",
            ClaimId::Prop2_9 => "popped size bound",
            ClaimId::Prop2_9Values => "published n=3 bound values (15, 13)",
            ClaimId::Fig2Golden => "exact n=3 multiplicity table",
            ClaimId::SizeChain => "order/size inequality chain",
            ClaimId::ChiFibSum => "sum graph bipartite, chromatic number 2",
            ClaimId::Doubling => "doubling construction matches direct",
        }
    }

    fn position(&self) -> usize {
        Self::ALL.iter().position(|c| c == self).unwrap()
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Outcome of one claim check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// The check could not finish inside its budget or cap.
    SkippedBudget,
    /// The claim does not apply at this `n`.
    NotApplicable,
}

impl ClaimStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::SkippedBudget => "skipped_budget",
            ClaimStatus::NotApplicable => "not_applicable",
        }
    }
}

impl std::fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl Serialize for ClaimStatus {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// One record of the suite: a claim evaluated at one `(n, semantics)` point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    pub n: u32,
    pub semantics: EdgeSemantics,
    pub status: ClaimStatus,
    /// Concrete counterexample when the status is `Fail`.
    pub witness: Option<String>,
    /// Supplementary observations on pass or skip (strictness of an
    /// inequality, cycle length, both size readings, skip reason).
    pub detail: Option<String>,
    pub runtime_ms: f64,
}

/// Expectation of a claim under one semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// A failure is a deviation.
    ExpectPass,
    /// The claim is tied to the other semantics; the observed truth value is
    /// recorded but never counts as a deviation.
    Observational,
}

/// The shipped expectation table (see the module docs for the rationale).
///
/// One entry is `n`-dependent: the size bound of `Prop2_9` is expected to
/// hold only for `n <= 3`. From `n = 4` on it is verifiably false under both
/// readings (at `n = 4` the popped graph has 92 strict / 96 inclusive edges
/// against bounds of 56 / 70; the left side grows like `4^n`, the right like
/// `n 2^n`), so the suite records those failures as findings rather than
/// deviations.
pub fn expectation(claim: ClaimId, n: u32, semantics: EdgeSemantics) -> Expectation {
    match claim {
        ClaimId::Thm2_7 | ClaimId::Cor2_8 => match semantics {
            EdgeSemantics::Strict => Expectation::ExpectPass,
            EdgeSemantics::Inclusive => Expectation::Observational,
        },
        ClaimId::Fig2Golden | ClaimId::Prop2_9Values | ClaimId::SizeChain => match semantics {
            EdgeSemantics::Inclusive => Expectation::ExpectPass,
            EdgeSemantics::Strict => Expectation::Observational,
        },
        ClaimId::Prop2_9 => {
            if n <= 3 {
                Expectation::ExpectPass
            } else {
                Expectation::Observational
            }
        }
        _ => Expectation::ExpectPass,
    }
}

/// Reports that deviate from the expectation table: expected-pass claims
/// that failed. Skips and not-applicable entries never deviate.
pub fn deviations(reports: &[ClaimReport]) -> Vec<&ClaimReport> {
    reports
        .iter()
        .filter(|r| {
            r.status == ClaimStatus::Fail
                && expectation(r.claim, r.n, r.semantics) == Expectation::ExpectPass
        })
        .collect()
}

/// Caps and budgets for the suite.
#[derive(Debug, Clone)]
pub struct SuiteBudgets {
    /// Node-expansion budget for each exact solver invocation.
    pub solver_nodes: u64,
    /// Largest `n` for which the Hamiltonian search is attempted.
    pub hamiltonian_max_n: u32,
    /// Largest `n` for which full pair tables are built. Claims needing the
    /// table are skipped above this; loop- and degree-based claims switch to
    /// per-vertex counting.
    pub table_max_n: u32,
    /// Largest `n` for which per-vertex counting over all `2^n - 1` subsets
    /// is attempted.
    pub formula_max_n: u32,
}

impl Default for SuiteBudgets {
    fn default() -> Self {
        Self {
            solver_nodes: 5_000_000,
            hamiltonian_max_n: 5,
            table_max_n: 7,
            formula_max_n: 16,
        }
    }
}

/// Everything one `(n, semantics)` point needs, built once and shared by all
/// claims at that point.
struct Context {
    n: u32,
    semantics: EdgeSemantics,
    seq: SumSequence,
    /// Pair-table multigraph, when `n` is within the table cap.
    mg: Option<MultiGraph>,
    popped: Option<SimpleGraph>,
}

impl Context {
    fn build(n: u32, semantics: EdgeSemantics, budgets: &SuiteBudgets) -> Result<Self> {
        let seq = SumSequence::for_ground_set(SequenceKind::Fibonacci, n)?;
        let mg = if n <= budgets.table_max_n.min(MAX_MATERIALIZE_N) {
            Some(gen_fib_sum_set_graph(n, &seq, semantics)?)
        } else {
            None
        };
        let popped = mg.as_ref().map(MultiGraph::popped);
        Ok(Self {
            n,
            semantics,
            seq,
            mg,
            popped,
        })
    }

    fn full_mask(&self) -> u64 {
        ((1u64 << self.n) - 1) << 1
    }

    /// `(subset, loop count)` for every vertex, from the table if present,
    /// otherwise by direct counting.
    fn loop_counts(&self) -> Result<Vec<(SubsetId, u64)>> {
        if let Some(mg) = &self.mg {
            let meta = mg.vertex_meta().expect("generated graphs carry metadata");
            return Ok((0..mg.order())
                .map(|v| (meta[v], u64::from(mg.loops(v))))
                .collect());
        }
        self.each_subset(|sub| Ok(u64::from(crate::generators::loop_count(sub, &self.seq)?)))
    }

    /// `(subset, degree)` for every vertex; the no-table path uses the
    /// closed-form degree.
    fn degrees(&self) -> Result<Vec<(SubsetId, u64)>> {
        if let Some(mg) = &self.mg {
            let meta = mg.vertex_meta().expect("generated graphs carry metadata");
            return Ok((0..mg.order())
                .map(|v| (meta[v], mg.degree(v).unwrap()))
                .collect());
        }
        self.each_subset(|sub| degree_by_formula(sub, &self.seq, self.semantics))
    }

    fn each_subset<F: Fn(&SubsetId) -> Result<u64>>(&self, f: F) -> Result<Vec<(SubsetId, u64)>> {
        let mut out = Vec::with_capacity(((1u64 << self.n) - 1) as usize);
        for raw in 1u64..(1 << self.n) {
            let sub = SubsetId::new(raw << 1, self.n)?;
            let value = f(&sub)?;
            out.push((sub, value));
        }
        Ok(out)
    }
}

/// Runs every registered claim for each `n` in `n_from..=n_to` under each of
/// the given semantics. Reports come back in deterministic
/// `(claim, n, semantics)` order; claim failures are data, not errors.
pub fn run_suite(
    n_from: u32,
    n_to: u32,
    semantics: &[EdgeSemantics],
    budgets: &SuiteBudgets,
) -> Result<Vec<ClaimReport>> {
    if n_from < 1 || n_from > n_to {
        return Err(Error::Domain(format!(
            "invalid range {n_from}..={n_to}: need 1 <= from <= to"
        )));
    }
    if semantics.is_empty() {
        return Err(Error::Domain("at least one semantics is required".into()));
    }
    let modes: Vec<EdgeSemantics> = EdgeSemantics::BOTH
        .into_iter()
        .filter(|m| semantics.contains(m))
        .collect();

    let mut reports = Vec::new();
    for n in n_from..=n_to {
        for &sem in &modes {
            let ctx = Context::build(n, sem, budgets)?;
            for claim in ClaimId::ALL {
                reports.push(eval_claim(claim, &ctx, budgets)?);
            }
        }
    }
    reports.sort_by_key(|r| (r.claim.position(), r.n, r.semantics));
    Ok(reports)
}

/// Evaluates a single claim at one `(n, semantics)` point, building what it
/// needs from scratch; this is the way to reproduce one reported failure.
pub fn run_claim(
    claim: ClaimId,
    n: u32,
    semantics: EdgeSemantics,
    budgets: &SuiteBudgets,
) -> Result<ClaimReport> {
    if n < 1 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let ctx = Context::build(n, semantics, budgets)?;
    eval_claim(claim, &ctx, budgets)
}

/// The size-bound check on its own: evaluates
/// `popped size <= (2^n - 2) + sum of multiplicities at the full-set vertex`
/// and records whether the inequality is strict, since the bound is stated
/// with `<=` but argued with `<` for `n >= 2`.
pub fn check_prop_2_9(
    n: u32,
    semantics: EdgeSemantics,
    budgets: &SuiteBudgets,
) -> Result<ClaimReport> {
    run_claim(ClaimId::Prop2_9, n, semantics, budgets)
}

fn eval_claim(claim: ClaimId, ctx: &Context, budgets: &SuiteBudgets) -> Result<ClaimReport> {
    let start = Instant::now();
    let (status, witness, detail) = match claim {
        ClaimId::Thm2_1 => check_no_pendant(ctx, budgets)?,
        ClaimId::Cor2_2 => check_connected(ctx, budgets)?,
        ClaimId::Cor2_3 => check_hamiltonian(ctx, budgets)?,
        ClaimId::Lem2_4 => check_unique_max_loop(ctx, budgets)?,
        ClaimId::Thm2_5 => check_loop_formula(ctx, budgets)?,
        ClaimId::Thm2_6 => check_loop_coverage(ctx, budgets)?,
        ClaimId::Thm2_7 => check_degrees_even(ctx, budgets)?,
        ClaimId::Cor2_8 => check_eulerian(ctx, budgets)?,
        ClaimId::Prop2_9 => check_size_bound(ctx)?,
        ClaimId::Prop2_9Values => check_published_bound_values(ctx)?,
        ClaimId::Fig2Golden => check_fig2_golden(ctx)?,
        ClaimId::SizeChain => check_size_chain(ctx)?,
        ClaimId::ChiFibSum => check_chi_fib_sum(ctx, budgets)?,
        ClaimId::Doubling => check_doubling(ctx, budgets)?,
    };
    Ok(ClaimReport {
        claim,
        n: ctx.n,
        semantics: ctx.semantics,
        status,
        witness,
        detail,
        runtime_ms: start.elapsed().as_secs_f64() * 1000.0,
    })
}

type Verdict = (ClaimStatus, Option<String>, Option<String>);

fn skipped(why: impl Into<String>) -> Verdict {
    (ClaimStatus::SkippedBudget, None, Some(why.into()))
}

fn pass(detail: Option<String>) -> Verdict {
    (ClaimStatus::Pass, None, detail)
}

fn fail(witness: String) -> Verdict {
    (ClaimStatus::Fail, Some(witness), None)
}

fn check_no_pendant(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if ctx.mg.is_none() && ctx.n > budgets.formula_max_n {
        return Ok(skipped(format!(
            "degree scan capped at n <= {}",
            budgets.formula_max_n
        )));
    }
    for (sub, degree) in ctx.degrees()? {
        if degree == 1 {
            return Ok(fail(format!(
                "vertex {} = {sub} is pendant",
                label_of(&sub)
            )));
        }
    }
    Ok(pass(None))
}

fn check_connected(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if let Some(popped) = &ctx.popped {
        return Ok(if is_connected(popped) {
            pass(None)
        } else {
            fail("popped adjacency has more than one component".into())
        });
    }
    if ctx.n > budgets.formula_max_n {
        return Ok(skipped(format!(
            "adjacency scan capped at n <= {}",
            budgets.formula_max_n
        )));
    }
    // Without a table, prove connectivity by showing every vertex adjacent
    // to the full-set vertex; failing that, nothing is concluded.
    let full = SubsetId::new(ctx.full_mask(), ctx.n)?;
    for raw in 1u64..(1 << ctx.n) - 1 {
        let sub = SubsetId::new(raw << 1, ctx.n)?;
        if pair_multiplicity(&sub, &full, &ctx.seq, ctx.semantics)? == 0 {
            return Ok(skipped(format!(
                "hub scan inconclusive: {sub} is not adjacent to the full set"
            )));
        }
    }
    Ok(pass(Some("via adjacency to the full-set vertex".into())))
}

fn check_hamiltonian(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if ctx.n > budgets.hamiltonian_max_n {
        return Ok(skipped(format!(
            "Hamiltonian search capped at n <= {}",
            budgets.hamiltonian_max_n
        )));
    }
    let Some(popped) = &ctx.popped else {
        return Ok(skipped(format!(
            "pair table capped at n <= {}",
            budgets.table_max_n
        )));
    };
    match hamiltonian_cycle(popped, budgets.solver_nodes)? {
        HamiltonianOutcome::Cycle(cycle) => {
            let expected = (1u64 << ctx.n) - 1;
            if cycle.len() as u64 != expected {
                return Err(Error::Inconsistency(format!(
                    "spanning cycle has length {} instead of {expected}",
                    cycle.len()
                )));
            }
            Ok(pass(Some(format!(
                "spanning cycle of odd length {}",
                cycle.len()
            ))))
        }
        HamiltonianOutcome::Absent => Ok(fail("search exhausted: no spanning cycle".into())),
        HamiltonianOutcome::Unknown => Ok(skipped("search budget exhausted")),
    }
}

fn check_unique_max_loop(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if ctx.mg.is_none() && ctx.n > budgets.formula_max_n {
        return Ok(skipped(format!(
            "loop scan capped at n <= {}",
            budgets.formula_max_n
        )));
    }
    let counts = ctx.loop_counts()?;
    let pair_count = fib_pair_count_brute(ctx.n)?;
    let full_loops = counts
        .iter()
        .find(|(sub, _)| sub.mask() == ctx.full_mask())
        .map(|&(_, l)| l)
        .expect("full set is always enumerated");
    if full_loops != pair_count {
        return Ok(fail(format!(
            "full-set vertex has {full_loops} loops, pair count is {pair_count}"
        )));
    }
    let max = counts.iter().map(|&(_, l)| l).max().unwrap();
    let attaining: Vec<&SubsetId> = counts
        .iter()
        .filter(|&&(_, l)| l == max)
        .map(|(sub, _)| sub)
        .collect();
    if attaining.len() != 1 {
        return Ok(fail(format!(
            "max loop count {max} attained by {} vertices, e.g. {} and {}",
            attaining.len(),
            attaining[0],
            attaining[1]
        )));
    }
    if attaining[0].mask() != ctx.full_mask() {
        return Ok(fail(format!(
            "max loop count {max} attained by {} instead of the full set",
            attaining[0]
        )));
    }
    Ok(pass(Some(format!("l(full) = {full_loops}, unique argmax"))))
}

fn check_loop_formula(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if ctx.mg.is_none() && ctx.n > budgets.formula_max_n {
        return Ok(skipped(format!(
            "loop scan capped at n <= {}",
            budgets.formula_max_n
        )));
    }
    let counts = ctx.loop_counts()?;
    let formula = closed_form_edge_count(u64::from(ctx.n))?;
    let max = counts.iter().map(|&(_, l)| l).max().unwrap();
    let full_loops = counts
        .iter()
        .find(|(sub, _)| sub.mask() == ctx.full_mask())
        .map(|&(_, l)| l)
        .unwrap();
    if full_loops != formula {
        return Ok(fail(format!(
            "closed form gives {formula}, full-set vertex has {full_loops} loops"
        )));
    }
    if max != formula {
        return Ok(fail(format!(
            "closed form gives {formula} but the maximum loop count is {max}"
        )));
    }
    Ok(pass(Some(format!("max loop number {max}"))))
}

fn check_loop_coverage(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if ctx.mg.is_none() && ctx.n > budgets.formula_max_n {
        return Ok(skipped(format!(
            "loop scan capped at n <= {}",
            budgets.formula_max_n
        )));
    }
    let attained: std::collections::HashSet<u64> =
        ctx.loop_counts()?.into_iter().map(|(_, l)| l).collect();
    let values = loop_value_list(ctx.n)?;
    for value in &values.values {
        if !attained.contains(value) {
            return Ok(fail(format!(
                "attainable loop value {value} missing from the loop sequence"
            )));
        }
    }
    Ok(pass(Some(format!(
        "all {} attainable values present",
        values.values.len()
    ))))
}

fn check_degrees_even(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if ctx.mg.is_none() && ctx.n > budgets.formula_max_n {
        return Ok(skipped(format!(
            "degree scan capped at n <= {}",
            budgets.formula_max_n
        )));
    }
    for (sub, degree) in ctx.degrees()? {
        if degree % 2 != 0 {
            return Ok(fail(format!(
                "vertex {} = {sub} has odd degree {degree}",
                label_of(&sub)
            )));
        }
    }
    Ok(pass(None))
}

fn check_eulerian(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if let Some(mg) = &ctx.mg {
        return Ok(if analysis::is_eulerian(mg) {
            pass(None)
        } else if analysis::all_degrees_even(mg) {
            fail("degrees even but edge-bearing vertices disconnected".into())
        } else {
            let v = (0..mg.order())
                .find(|&v| mg.degree(v).unwrap() % 2 != 0)
                .unwrap();
            let sub = mg.vertex_meta().unwrap()[v];
            fail(format!(
                "vertex {} = {sub} has odd degree {}",
                label_of(&sub),
                mg.degree(v).unwrap()
            ))
        });
    }
    // No table: combine the formula-degree parity check with the hub
    // connectivity proof.
    let (parity, parity_witness, _) = check_degrees_even(ctx, budgets)?;
    if parity == ClaimStatus::Fail {
        return Ok(fail(parity_witness.unwrap()));
    }
    let (conn, conn_witness, conn_detail) = check_connected(ctx, budgets)?;
    match (parity, conn) {
        (ClaimStatus::Pass, ClaimStatus::Pass) => Ok(pass(conn_detail)),
        (ClaimStatus::Pass, ClaimStatus::Fail) => Ok(fail(format!(
            "degrees even but not connected: {}",
            conn_witness.unwrap_or_default()
        ))),
        _ => Ok(skipped("parity or connectivity scan capped")),
    }
}

fn check_size_bound(ctx: &Context) -> Result<Verdict> {
    let (Some(mg), Some(popped)) = (&ctx.mg, &ctx.popped) else {
        return Ok(skipped("pair table required"));
    };
    let full = full_set_index(ctx.n);
    let popped_size = popped.edge_count();
    let bound = ((1u64 << ctx.n) - 2) + mg.eps_sum_at(full)?;
    if popped_size > bound {
        return Ok(fail(format!(
            "popped size {popped_size} exceeds bound {bound}"
        )));
    }
    let relation = if popped_size < bound {
        "strict"
    } else {
        "equality"
    };
    Ok(pass(Some(format!("{popped_size} <= {bound} ({relation})"))))
}

fn check_published_bound_values(ctx: &Context) -> Result<Verdict> {
    if ctx.n != 3 {
        return Ok((ClaimStatus::NotApplicable, None, None));
    }
    let (Some(mg), Some(popped)) = (&ctx.mg, &ctx.popped) else {
        return Ok(skipped("pair table required"));
    };
    let full = full_set_index(3);
    let eps_sum = mg.eps_sum_at(full)?;
    let deleted_size = popped.without_vertex(full).edge_count();
    let popped_size = popped.edge_count();
    if eps_sum != 15 {
        return Ok(fail(format!(
            "multiplicity sum at the full set is {eps_sum}, not 15"
        )));
    }
    if deleted_size != 13 {
        return Ok(fail(format!(
            "vertex-deleted popped size is {deleted_size}, not 13"
        )));
    }
    if popped_size != 19 {
        return Ok(fail(format!(
            "popped size {popped_size} does not reproduce 19 <= 21"
        )));
    }
    Ok(pass(Some("15 and 13 reproduced; 19 <= 21".into())))
}

/// The `n = 3` multigraph read off the published drawing, entry by entry:
/// `(u, v, multiplicity)` over vertices `{1} {2} {3} {1,2} {1,3} {2,3}
/// {1,2,3}` in enumeration order. All other pairs are non-adjacent.
pub const FIG2_EPS: [(usize, usize, u32); 19] = [
    (0, 1, 1),
    (0, 3, 2),
    (0, 4, 1),
    (0, 5, 1),
    (0, 6, 2),
    (1, 2, 1),
    (1, 3, 1),
    (1, 4, 2),
    (1, 5, 1),
    (1, 6, 2),
    (2, 3, 1),
    (2, 5, 1),
    (2, 6, 1),
    (3, 4, 3),
    (3, 5, 2),
    (3, 6, 4),
    (4, 5, 2),
    (4, 6, 3),
    (5, 6, 3),
];

/// Loop counts at `{1,2}`, `{2,3}`, and the full set in the same drawing.
pub const FIG2_LOOPS: [(usize, u32); 3] = [(3, 1), (5, 1), (6, 2)];

fn check_fig2_golden(ctx: &Context) -> Result<Verdict> {
    if ctx.n != 3 {
        return Ok((ClaimStatus::NotApplicable, None, None));
    }
    let Some(mg) = &ctx.mg else {
        return Ok(skipped("pair table required"));
    };
    let meta = mg.vertex_meta().unwrap();
    let mut expected_eps = [[0u32; 7]; 7];
    for &(u, v, m) in &FIG2_EPS {
        expected_eps[u][v] = m;
        expected_eps[v][u] = m;
    }
    for u in 0..7 {
        for v in u + 1..7 {
            if mg.eps(u, v) != expected_eps[u][v] {
                return Ok(fail(format!(
                    "eps({}, {}) = {}, drawing shows {}",
                    meta[u],
                    meta[v],
                    mg.eps(u, v),
                    expected_eps[u][v]
                )));
            }
        }
    }
    let mut expected_loops = [0u32; 7];
    for &(v, l) in &FIG2_LOOPS {
        expected_loops[v] = l;
    }
    for v in 0..7 {
        if mg.loops(v) != expected_loops[v] {
            return Ok(fail(format!(
                "loops({}) = {}, drawing shows {}",
                meta[v],
                mg.loops(v),
                expected_loops[v]
            )));
        }
    }
    Ok(pass(Some("all 19 multiplicities and 4 loops match".into())))
}

fn check_size_chain(ctx: &Context) -> Result<Verdict> {
    let Some(mg) = &ctx.mg else {
        return Ok(skipped("pair table required"));
    };
    let n = ctx.n;
    let fib_graph = gen_fib_sum_graph(n, &ctx.seq)?;
    let set_graph = gen_set_graph(n)?;
    let subset_vertices = (1u64 << n) - 1;

    if fib_graph.order() as u64 > subset_vertices
        || (n != 1 && fib_graph.order() as u64 == subset_vertices)
    {
        return Ok(fail(format!(
            "vertex counts: {} vs {subset_vertices} (equality is for n = 1 only)",
            fib_graph.order()
        )));
    }
    if set_graph.order() != mg.order() {
        return Err(Error::Inconsistency(
            "set-graph and sum set-graph orders differ".into(),
        ));
    }

    let e_fib = fib_graph.edge_count();
    let e_set = set_graph.edge_count();
    let popped_size = mg.popped().edge_count();
    let (total_mult, loop_total) = mg.size();
    let multigraph_total = total_mult + loop_total;

    if !(e_fib <= e_set && e_set <= popped_size) {
        return Ok(fail(format!(
            "chain broken: {e_fib} <= {e_set} <= {popped_size} (popped reading)"
        )));
    }
    if n >= 2 && e_fib == e_set && e_set == popped_size {
        return Ok(fail(format!(
            "equality throughout at n = {n}, expected only at n = 1"
        )));
    }
    Ok(pass(Some(format!(
        "{e_fib} <= {e_set} <= {popped_size} (popped reading) / {multigraph_total} \
         (multiplicity+loops reading)"
    ))))
}

fn check_chi_fib_sum(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    if ctx.n < 2 {
        return Ok((ClaimStatus::NotApplicable, None, None));
    }
    let g = gen_fib_sum_graph(ctx.n, &ctx.seq)?;
    if !analysis::is_bipartite(&g) {
        return Ok(fail("sum graph is not bipartite".into()));
    }
    match chromatic_number(&g, budgets.solver_nodes)? {
        SolverResult::Exact(2) => Ok(pass(Some("bipartite, chromatic number 2".into()))),
        SolverResult::Exact(chi) => Ok(fail(format!("chromatic number {chi}, expected 2"))),
        SolverResult::Unknown => Ok(skipped("coloring budget exhausted")),
    }
}

fn check_doubling(ctx: &Context, budgets: &SuiteBudgets) -> Result<Verdict> {
    let Some(mg) = &ctx.mg else {
        return Ok(skipped("pair table required"));
    };
    if ctx.n + 1 > budgets.table_max_n.min(MAX_MATERIALIZE_N) {
        return Ok(skipped(format!(
            "doubling to n = {} exceeds the table cap",
            ctx.n + 1
        )));
    }
    let seq = SumSequence::for_ground_set(SequenceKind::Fibonacci, ctx.n + 1)?;
    match gen_doubling_step(mg, ctx.n, &seq, ctx.semantics) {
        Ok(_) => Ok(pass(Some(format!(
            "doubling 2^{} - 1 -> 2^{} - 1 vertices reproduced exactly",
            ctx.n,
            ctx.n + 1
        )))),
        Err(Error::Inconsistency(msg)) => Ok(fail(msg)),
        Err(other) => Err(other),
    }
}
