//! Integer-sequence services: Fibonacci/Lucas generation and membership, the
//! index `k` with `f_k <= n <= f_{k+1}`, and the closed-form count of integer
//! pairs in `{1..n}` whose sum is a Fibonacci number.

use crate::{Error, Result};

/// Which pair-sum sequence a [`SumSequence`] certifies membership for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Fibonacci,
    Lucas,
    Custom,
}

impl std::fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SequenceKind::Fibonacci => write!(f, "fibonacci"),
            SequenceKind::Lucas => write!(f, "lucas"),
            SequenceKind::Custom => write!(f, "custom"),
        }
    }
}

impl std::str::FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fibonacci" => Ok(SequenceKind::Fibonacci),
            "lucas" => Ok(SequenceKind::Lucas),
            "custom" => Ok(SequenceKind::Custom),
            other => Err(Error::Domain(format!("unknown sequence kind `{other}`"))),
        }
    }
}

/// The set of admissible pair sums, valid for queries up to `bound`.
///
/// Membership above `bound` is an error, never a silent `false`: a caller
/// holding a too-small sequence must rebuild it, typically with bound `2n`
/// for ground set `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumSequence {
    kind: SequenceKind,
    /// Sorted, deduplicated, all in `1..=bound`.
    members: Vec<u64>,
    bound: u64,
}

impl SumSequence {
    /// All distinct Fibonacci numbers in `1..=bound` (the duplicate value
    /// `f_1 = f_2 = 1` is stored once).
    pub fn fibonacci(bound: u64) -> Result<Self> {
        let mut members = fib_upto(bound)?;
        members.retain(|&v| v >= 1);
        members.dedup();
        Ok(Self {
            kind: SequenceKind::Fibonacci,
            members,
            bound,
        })
    }

    /// All distinct Lucas numbers (2, 1, 3, 4, 7, 11, ...) in `1..=bound`.
    pub fn lucas(bound: u64) -> Result<Self> {
        if bound < 1 {
            return Err(Error::Domain("sequence bound must be >= 1".into()));
        }
        let mut members: Vec<u64> = Vec::new();
        let (mut a, mut b) = (2u64, 1u64);
        while a <= bound {
            members.push(a);
            let next = a + b;
            a = b;
            b = next;
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self {
            kind: SequenceKind::Lucas,
            members,
            bound,
        })
    }

    /// A caller-supplied member set; values outside `1..=bound` are rejected.
    pub fn custom(values: impl IntoIterator<Item = u64>, bound: u64) -> Result<Self> {
        if bound < 1 {
            return Err(Error::Domain("sequence bound must be >= 1".into()));
        }
        let mut members: Vec<u64> = values.into_iter().collect();
        for &v in &members {
            if v < 1 || v > bound {
                return Err(Error::Domain(format!(
                    "custom member {v} outside 1..={bound}"
                )));
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self {
            kind: SequenceKind::Custom,
            members,
            bound,
        })
    }

    /// Builds the default sequence of `kind` with the bound needed for ground
    /// set `{1..n}` (largest possible pair sum is `2n`).
    pub fn for_ground_set(kind: SequenceKind, n: u32) -> Result<Self> {
        let bound = 2 * u64::from(n.max(1));
        match kind {
            SequenceKind::Fibonacci => Self::fibonacci(bound),
            SequenceKind::Lucas => Self::lucas(bound),
            SequenceKind::Custom => Err(Error::Domain(
                "custom sequences must be built with explicit members".into(),
            )),
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Sorted distinct members, all in `1..=bound`.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// Whether `x` is an admissible pair sum.
    ///
    /// `x` must lie in `1..=bound`; queries above the bound return
    /// [`Error::Bound`] so a stale sequence can never mislabel a sum.
    pub fn contains(&self, x: u64) -> Result<bool> {
        if x < 1 {
            return Err(Error::Domain("membership query must be >= 1".into()));
        }
        if x > self.bound {
            return Err(Error::Bound {
                query: x,
                bound: self.bound,
            });
        }
        Ok(self.members.binary_search(&x).is_ok())
    }
}

/// Operation form of [`SumSequence::contains`].
pub fn is_sum_member(x: u64, seq: &SumSequence) -> Result<bool> {
    seq.contains(x)
}

/// Fibonacci values `f_0, f_1, ...` up to `limit`, duplicates preserved:
/// `fib_upto(8)` is `[0, 1, 1, 2, 3, 5, 8]`.
pub fn fib_upto(limit: u64) -> Result<Vec<u64>> {
    if limit < 1 {
        return Err(Error::Domain("fib_upto limit must be >= 1".into()));
    }
    let mut out = vec![0u64, 1];
    loop {
        let next = out[out.len() - 1] + out[out.len() - 2];
        if next > limit {
            break;
        }
        out.push(next);
    }
    Ok(out)
}

/// `f_k` under the canonical indexing `f_0 = 0, f_1 = 1, f_2 = 1, f_3 = 2, ...`.
fn fib(k: u32) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// The index `k >= 2` with `f_k <= n <= f_{k+1}`.
///
/// When `n` is itself Fibonacci two `k` satisfy the double inequality; this
/// type always carries the larger one (see [`fib_index`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FibIndex {
    k: u32,
}

impl FibIndex {
    pub fn k(&self) -> u32 {
        self.k
    }
}

/// Largest `k >= 2` with `f_k <= n`.
///
/// The pair `(k, n)` then satisfies `f_k <= n <= f_{k+1}`. The edge-count
/// formula in [`closed_form_edge_count`] is only correct for this larger
/// choice of `k` at Fibonacci boundaries (`n = 5` with `k = 5` gives the true
/// pair count 4; `k = 4` gives 5).
pub fn fib_index(n: u64) -> Result<FibIndex> {
    if n < 1 {
        return Err(Error::Domain("fib_index requires n >= 1".into()));
    }
    let mut k = 2u32;
    while fib(k + 1) <= n {
        k += 1;
    }
    Ok(FibIndex { k })
}

/// Number of unordered pairs `{i, j}` in `{1..n}`, `i != j`, with `i + j`
/// Fibonacci, by the two-case closed form over `k = fib_index(n)`:
///
/// ```text
/// n  + (f_k + 1)/2 - floor(4(k+1)/3)/2                          if 2n <= f_{k+2}
/// 2n + (f_k + 1)/2 - floor(4(k+1)/3)/2 - ceil((f_{k+2} - 1)/2)  otherwise
/// ```
///
/// The halves are exact in combination; a negative or non-integer outcome is
/// reported as [`Error::Inconsistency`] since it can only mean an indexing
/// bug.
pub fn closed_form_edge_count(n: u64) -> Result<u64> {
    let k = fib_index(n)?.k();
    let f_k = i128::from(fib(k));
    let f_k2 = i128::from(fib(k + 2));
    let n = i128::from(n);
    let floor_term = i128::from(4 * (k as u64 + 1) / 3);

    // Work with twice the value so the half-integer terms stay exact.
    let twice = if 2 * n <= f_k2 {
        2 * n + (f_k + 1) - floor_term
    } else {
        let ceil_term = f_k2 / 2; // ceil((f_{k+2} - 1) / 2)
        4 * n + (f_k + 1) - floor_term - 2 * ceil_term
    };

    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Inconsistency(format!(
            "edge-count formula produced {twice}/2 for n = {n}, k = {k}"
        )));
    }
    Ok((twice / 2) as u64)
}
