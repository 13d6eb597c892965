//! Graph data model: a multigraph with per-pair edge multiplicities and
//! per-vertex loop counts, the loop-free simple graph, and the popping
//! transform between them.
//!
//! Multiplicities are stored as counts in a flat upper-triangle table, not
//! as parallel-edge objects; loops live in a separate per-vertex vector and
//! contribute 2 to a vertex degree. Graphs are immutable once a generator
//! returns them, so analysis code may scan one graph from many workers.

use crate::setspace::SubsetId;
use crate::{Error, Result};

/// Largest ground-set size for which full pair tables are materialized
/// (`2^12 - 1 = 4095` vertices, ~8.4M pairs). Larger `n` must go through
/// the per-vertex counting paths.
pub const MAX_MATERIALIZE_N: u32 = 12;

/// Undirected multigraph with loops: `eps(u, v)` parallel edges between
/// distinct vertices, `loops(v)` loops at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    order: usize,
    /// Upper-triangle multiplicities, indexed by [`MultiGraph::pair_index`].
    eps: Vec<u32>,
    loops: Vec<u32>,
    vertex_meta: Option<Vec<SubsetId>>,
}

impl MultiGraph {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            eps: vec![0; order * order.saturating_sub(1) / 2],
            loops: vec![0; order],
            vertex_meta: None,
        }
    }

    /// Views a simple graph as a multigraph (multiplicity 1, no loops).
    pub fn from_simple(g: &SimpleGraph) -> Self {
        let mut mg = Self::new(g.order());
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                if g.has_edge(u, v) {
                    mg.set_eps(u, v, 1);
                }
            }
        }
        mg
    }

    fn pair_index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < v && v < self.order);
        // Row-major upper triangle: row u starts after all shorter rows.
        u * (2 * self.order - u - 1) / 2 + (v - u - 1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Multiplicity between two distinct vertices; 0 means non-adjacent.
    pub fn eps(&self, u: usize, v: usize) -> u32 {
        if u == v {
            return 0; // loops are not stored in the pair table
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.eps[self.pair_index(u, v)]
    }

    pub fn set_eps(&mut self, u: usize, v: usize, multiplicity: u32) {
        assert!(u != v, "loops are set via set_loops");
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let idx = self.pair_index(u, v);
        self.eps[idx] = multiplicity;
    }

    pub fn loops(&self, v: usize) -> u32 {
        self.loops[v]
    }

    pub fn set_loops(&mut self, v: usize, count: u32) {
        self.loops[v] = count;
    }

    pub fn set_vertex_meta(&mut self, meta: Vec<SubsetId>) {
        assert_eq!(meta.len(), self.order);
        self.vertex_meta = Some(meta);
    }

    pub fn vertex_meta(&self) -> Option<&[SubsetId]> {
        self.vertex_meta.as_deref()
    }

    /// `d(v) = 2 l(v) + sum of incident multiplicities`.
    pub fn degree(&self, v: usize) -> Result<u64> {
        if v >= self.order {
            return Err(Error::Domain(format!(
                "vertex {v} out of range for order {}",
                self.order
            )));
        }
        let mut d = 2 * u64::from(self.loops[v]);
        for u in 0..self.order {
            if u != v {
                d += u64::from(self.eps(u, v));
            }
        }
        Ok(d)
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.order).map(|v| self.degree(v).unwrap()).collect()
    }

    /// `(total edge multiplicity over unordered pairs, total loop count)`.
    pub fn size(&self) -> (u64, u64) {
        let edges = self.eps.iter().map(|&m| u64::from(m)).sum();
        let loops = self.loops.iter().map(|&l| u64::from(l)).sum();
        (edges, loops)
    }

    /// Open neighbourhood: vertices joined to `v` by at least one edge.
    /// Loops never place `v` in its own neighbourhood.
    pub fn neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        if v >= self.order {
            return Err(Error::Domain(format!(
                "vertex {v} out of range for order {}",
                self.order
            )));
        }
        Ok((0..self.order)
            .filter(|&u| u != v && self.eps(u, v) >= 1)
            .collect())
    }

    /// Sum of `eps(v, u)` over the open neighbourhood of `v`.
    pub fn eps_sum_at(&self, v: usize) -> Result<u64> {
        if v >= self.order {
            return Err(Error::Domain(format!(
                "vertex {v} out of range for order {}",
                self.order
            )));
        }
        Ok((0..self.order)
            .filter(|&u| u != v)
            .map(|u| u64::from(self.eps(u, v)))
            .sum())
    }

    /// Deletes all loops and collapses parallel edges to one.
    pub fn popped(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.eps(u, v) >= 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Loop-free, multiplicity-free undirected graph backed by bitset rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    order: usize,
    words_per_row: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(order: usize) -> Self {
        let words_per_row = order.div_ceil(64).max(1);
        Self {
            order,
            words_per_row,
            adj: vec![0; order * words_per_row],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "simple graphs are irreflexive");
        assert!(u < self.order && v < self.order);
        self.adj[u * self.words_per_row + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words_per_row + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.order || v >= self.order {
            return false;
        }
        self.adj[u * self.words_per_row + v / 64] & (1 << (v % 64)) != 0
    }

    /// Bitset row of `v` (length [`Self::words_per_row`] words).
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(w, &word)| {
            let base = w * 64;
            std::iter::successors(Some(word), |&x| Some(x & x.wrapping_sub(1)))
                .take_while(|&x| x != 0)
                .map(move |x| base + x.trailing_zeros() as usize)
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> u64 {
        let ends: u64 = (0..self.order).map(|v| self.degree(v) as u64).sum();
        ends / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The induced subgraph on all vertices except `removed`, preserving
    /// relative vertex order.
    pub fn without_vertex(&self, removed: usize) -> SimpleGraph {
        assert!(removed < self.order);
        let mut g = SimpleGraph::new(self.order - 1);
        let shift = |x: usize| if x > removed { x - 1 } else { x };
        for (u, v) in self.edges() {
            if u != removed && v != removed {
                g.add_edge(shift(u), shift(v));
            }
        }
        g
    }
}
