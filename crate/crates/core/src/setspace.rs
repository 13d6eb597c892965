//! Non-empty subsets of `{1..n}` and their `(s, i)` vertex labels.
//!
//! Vertices of the set-graph families are the `2^n - 1` non-empty subsets,
//! enumerated by cardinality `s` and, within each cardinality class, by
//! lexicographic order on the sorted element tuple. The `i`-th size-`s`
//! subset gets label `(s, i)`; dense vertex indices follow the same order,
//! so the full set `{1..n}` is always label `(n, 1)` and the last vertex.

use crate::graphcore::MAX_MATERIALIZE_N;
use crate::{Error, Result};

/// A non-empty subset of `{1..n}`, stored as a bitmask with bit `j` set iff
/// the integer `j` is a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetId {
    mask: u64,
    n: u32,
}

impl SubsetId {
    /// Wraps a raw mask. The empty set is rejected, as are bits outside
    /// positions `1..=n`.
    pub fn new(mask: u64, n: u32) -> Result<Self> {
        if !(1..=63).contains(&n) {
            return Err(Error::Domain(format!("ground-set size {n} outside 1..=63")));
        }
        if mask == 0 {
            return Err(Error::Domain("the empty subset is excluded".into()));
        }
        let valid = ((1u64 << n) - 1) << 1;
        if mask & !valid != 0 {
            return Err(Error::Domain(format!(
                "mask {mask:#b} has bits outside positions 1..={n}"
            )));
        }
        Ok(Self { mask, n })
    }

    pub fn from_elements(elements: impl IntoIterator<Item = u32>, n: u32) -> Result<Self> {
        let mut mask = 0u64;
        for e in elements {
            if e < 1 || e > n {
                return Err(Error::Domain(format!("element {e} outside 1..={n}")));
            }
            mask |= 1 << e;
        }
        Self::new(mask, n)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn contains(&self, x: u32) -> bool {
        x >= 1 && x <= self.n && self.mask & (1 << x) != 0
    }

    pub fn cardinality(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_full(&self) -> bool {
        self.cardinality() == self.n
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        let mask = self.mask;
        (1..=self.n).filter(move |&j| mask & (1 << j) != 0)
    }
}

impl std::fmt::Display for SubsetId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.elements().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Cardinality plus 1-based lexicographic rank within that cardinality class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub s: u32,
    pub i: u64,
}

impl std::fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "v{},{}", self.s, self.i)
    }
}

/// Binomial coefficient; saturates nowhere in the `n <= 63` range used here.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for t in 0..k {
        acc = acc * u64::from(n - t) / u64::from(t + 1);
    }
    acc
}

/// `2^n - 1`, the number of non-empty subsets, without materializing them.
pub fn subset_count(n: u32) -> Result<u64> {
    if !(1..=63).contains(&n) {
        return Err(Error::Domain(format!("ground-set size {n} outside 1..=63")));
    }
    Ok((1u64 << n) - 1)
}

/// All `2^n - 1` non-empty subsets in `(s ascending, rank ascending)` order.
///
/// Materialization is capped at [`MAX_MATERIALIZE_N`]; use [`subset_count`]
/// above the cap.
pub fn enumerate_subsets(n: u32) -> Result<Vec<SubsetId>> {
    if n < 1 {
        return Err(Error::Domain("ground-set size must be >= 1".into()));
    }
    if n > MAX_MATERIALIZE_N {
        return Err(Error::Capacity {
            n,
            cap: MAX_MATERIALIZE_N,
        });
    }
    let mut out = Vec::with_capacity(((1u64 << n) - 1) as usize);
    for s in 1..=n {
        for i in 1..=binomial(n, s) {
            out.push(subset_of(s, i, n)?);
        }
    }
    Ok(out)
}

/// The `(s, i)` label of a subset: `s` is its cardinality, `i` is one plus
/// the number of size-`s` subsets that are lexicographically smaller as
/// sorted element tuples.
pub fn label_of(subset: &SubsetId) -> VertexLabel {
    let n = subset.n();
    let s = subset.cardinality();
    let mut rank = 1u64;
    let mut prev = 0u32;
    for (t, a) in subset.elements().enumerate() {
        let t = t as u32; // elements placed so far
        for c in prev + 1..a {
            rank += binomial(n - c, s - t - 1);
        }
        prev = a;
    }
    VertexLabel { s, i: rank }
}

/// The unique subset with label `(s, i)`: combinatorial unranking in the
/// same tuple-lexicographic order as [`label_of`].
pub fn subset_of(s: u32, i: u64, n: u32) -> Result<SubsetId> {
    if s < 1 || s > n {
        return Err(Error::Domain(format!("cardinality {s} outside 1..={n}")));
    }
    if i < 1 || i > binomial(n, s) {
        return Err(Error::Domain(format!(
            "rank {i} outside 1..={} for size-{s} subsets of {{1..{n}}}",
            binomial(n, s)
        )));
    }
    let mut remaining = i - 1;
    let mut mask = 0u64;
    let mut c = 1u32;
    for t in 0..s {
        loop {
            let block = binomial(n - c, s - t - 1);
            if remaining < block {
                mask |= 1 << c;
                c += 1;
                break;
            }
            remaining -= block;
            c += 1;
        }
    }
    SubsetId::new(mask, n)
}

/// Dense vertex index of a label in enumeration order (0-based).
pub fn vertex_index(label: VertexLabel, n: u32) -> usize {
    let mut offset = 0u64;
    for t in 1..label.s {
        offset += binomial(n, t);
    }
    (offset + label.i - 1) as usize
}

/// Index of the full set `{1..n}` in enumeration order: always the last
/// vertex, `2^n - 2`.
pub fn full_set_index(n: u32) -> usize {
    ((1u64 << n) - 2) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(elements: &[u32], n: u32) -> SubsetId {
        SubsetId::from_elements(elements.iter().copied(), n).unwrap()
    }

    #[test]
    fn enumeration_smallest_cases() {
        let one = enumerate_subsets(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0], subset(&[1], 1));

        let two = enumerate_subsets(2).unwrap();
        assert_eq!(
            two,
            vec![subset(&[1], 2), subset(&[2], 2), subset(&[1, 2], 2)]
        );
    }

    #[test]
    fn enumeration_n3_matches_figure_naming() {
        let subs = enumerate_subsets(3).unwrap();
        let expected: Vec<(Vec<u32>, (u32, u64))> = vec![
            (vec![1], (1, 1)),
            (vec![2], (1, 2)),
            (vec![3], (1, 3)),
            (vec![1, 2], (2, 1)),
            (vec![1, 3], (2, 2)),
            (vec![2, 3], (2, 3)),
            (vec![1, 2, 3], (3, 1)),
        ];
        assert_eq!(subs.len(), expected.len());
        for (sub, (elems, (s, i))) in subs.iter().zip(&expected) {
            assert_eq!(sub.elements().collect::<Vec<_>>(), *elems);
            let label = label_of(sub);
            assert_eq!((label.s, label.i), (*s, *i), "subset {sub}");
        }
    }

    #[test]
    fn label_examples() {
        let l = label_of(&subset(&[1, 2], 3));
        assert_eq!((l.s, l.i), (2, 1));
        let l = label_of(&subset(&[1, 2, 3], 3));
        assert_eq!((l.s, l.i), (3, 1));
        let l = label_of(&subset(&[2, 3], 3));
        assert_eq!((l.s, l.i), (2, 3));
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(subset_of(3, 1, 3).unwrap(), subset(&[1, 2, 3], 3));
        assert_eq!(subset_of(2, 2, 3).unwrap(), subset(&[1, 3], 3));
        assert_eq!(subset_of(1, 3, 3).unwrap(), subset(&[3], 3));
    }

    #[test]
    fn unrank_rejects_out_of_range() {
        assert!(subset_of(2, 4, 3).is_err());
        assert!(subset_of(0, 1, 3).is_err());
        assert!(subset_of(4, 1, 3).is_err());
    }

    #[test]
    fn rank_round_trip_exhaustive() {
        for n in 1..=12u32 {
            for s in 1..=n {
                for i in 1..=binomial(n, s) {
                    let sub = subset_of(s, i, n).unwrap();
                    let label = label_of(&sub);
                    assert_eq!((label.s, label.i), (s, i), "n = {n}");
                }
            }
        }
    }

    #[test]
    fn counts_match_formula() {
        for n in 1..=12u32 {
            assert_eq!(
                enumerate_subsets(n).unwrap().len() as u64,
                subset_count(n).unwrap()
            );
        }
        for n in 13..=20u32 {
            let by_binomials: u64 = (1..=n).map(|s| binomial(n, s)).sum();
            assert_eq!(subset_count(n).unwrap(), by_binomials);
        }
    }

    #[test]
    fn enumeration_above_cap_is_capacity_error() {
        assert!(matches!(
            enumerate_subsets(MAX_MATERIALIZE_N + 1),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn full_set_is_last_with_label_n_1() {
        for n in 1..=8u32 {
            let subs = enumerate_subsets(n).unwrap();
            let last = subs.last().unwrap();
            assert!(last.is_full());
            let label = label_of(last);
            assert_eq!((label.s, label.i), (n, 1));
            assert_eq!(vertex_index(label, n), full_set_index(n));
            assert_eq!(full_set_index(n), subs.len() - 1);
        }
    }

    #[test]
    fn subset_id_rejects_bad_masks() {
        assert!(SubsetId::new(0, 3).is_err());
        assert!(SubsetId::new(1 << 4, 3).is_err());
        assert!(SubsetId::new(1, 3).is_err()); // bit 0 is not an element
        assert!(SubsetId::from_elements([0], 3).is_err());
        assert!(SubsetId::from_elements([4], 3).is_err());
    }
}
