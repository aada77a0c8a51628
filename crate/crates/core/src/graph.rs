//! Dense undirected simple graphs stored as fixed-width bit rows, and the
//! construction algebra over them (disjoint union, join, copies, complement,
//! complete multipartite graphs, powers of paths, induced subgraphs).
//!
//! Relabeling convention: whenever two graphs are combined, the vertices of
//! the first operand keep their ids and the vertices of the second operand
//! are shifted to follow them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Default order cap for constructions.
pub const DEFAULT_ORDER_CAP: usize = 512;

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Iterator over set bits of a word slice.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Self { words, idx: 0, cur: words.first().copied().unwrap_or(0) }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], i: usize) {
    words[i / WORD] |= 1 << (i % WORD);
}

#[inline]
pub(crate) fn clear_bit(words: &mut [u64], i: usize) {
    words[i / WORD] &= !(1 << (i % WORD));
}

#[inline]
pub(crate) fn test_bit(words: &[u64], i: usize) -> bool {
    words[i / WORD] >> (i % WORD) & 1 == 1
}

/// Bit set with every id below `n` present.
pub(crate) fn full_set(n: usize) -> Vec<u64> {
    let mut w = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(WORD) {
        if let Some(last) = w.last_mut() {
            *last = (1u64 << (n % WORD)) - 1;
        }
    }
    w
}

/// Undirected simple graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Self { n, words, rows: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path on `n` vertices, `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n ≥ 3` vertices; smaller orders give the path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::Parameter(alloc::format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        popcount(&self.rows) / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        test_bit(self.row(u), v)
    }

    /// Inserts `{u, v}`. Panics on a self-loop or an out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "vertex out of range");
        let w = self.words;
        set_bit(&mut self.rows[u * w..(u + 1) * w], v);
        set_bit(&mut self.rows[v * w..(v + 1) * w], u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        clear_bit(&mut self.rows[u * w..(u + 1) * w], v);
        clear_bit(&mut self.rows[v * w..(v + 1) * w], u);
    }

    /// Neighborhood of `v` as a bit row of `words()` words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Ones::new(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Copy of `self` with one extra vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: impl IntoIterator<Item = usize>) -> Self {
        let mut g = self.embedded_in(self.n + 1);
        for u in nbrs {
            g.add_edge(u, self.n);
        }
        g
    }

    /// Same edges on a larger vertex set `0..n`.
    pub(crate) fn embedded_in(&self, n: usize) -> Self {
        debug_assert!(n >= self.n);
        let mut g = Self::empty(n);
        for v in 0..self.n {
            let src = self.row(v);
            g.rows[v * g.words..v * g.words + src.len()].copy_from_slice(src);
        }
        g
    }

    /// True if every vertex has degree at least one (vacuous for order 0).
    pub fn has_no_isolated_vertices(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) > 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        set_bit(&mut seen, 0);
        set_bit(&mut frontier, 0);
        loop {
            let mut next = vec![0u64; self.words];
            for v in Ones::new(&frontier) {
                for (n, r) in next.iter_mut().zip(self.row(v)) {
                    *n |= r;
                }
            }
            let mut grew = false;
            for (n, s) in next.iter_mut().zip(seen.iter_mut()) {
                *n &= !*s;
                grew |= *n != 0;
                *s |= *n;
            }
            if !grew {
                break;
            }
            frontier = next;
        }
        popcount(&seen) == self.n
    }

    /// Removes isolated vertices, keeping the relative order of the rest.
    pub fn without_isolated_vertices(&self) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        induced_subgraph(self, &keep).expect("kept vertices are in range")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("order", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// Ordered list of disjoint, non-empty vertex classes covering `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(order: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; order];
        for part in &parts {
            if part.is_empty() {
                return Err(Error::Parameter("empty part in vertex partition".into()));
            }
            for &v in part {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
                if core::mem::replace(&mut seen[v], true) {
                    return Err(Error::Parameter(alloc::format!("vertex {v} in two parts")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Parameter("partition does not cover every vertex".into()));
        }
        Ok(Self { parts })
    }

    /// Consecutive blocks of the given (positive) sizes.
    pub(crate) fn blocks(sizes: &[usize]) -> Self {
        let mut next = 0;
        let parts = sizes
            .iter()
            .map(|&s| {
                let p: Vec<usize> = (next..next + s).collect();
                next += s;
                p
            })
            .collect();
        Self { parts }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Construction algebra with an order cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Algebra {
    cap: usize,
}

impl Default for Algebra {
    fn default() -> Self {
        Self { cap: DEFAULT_ORDER_CAP }
    }
}

impl Algebra {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn check(&self, order: usize) -> Result<()> {
        if order > self.cap {
            Err(Error::OrderCap { order, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Complete multipartite graph with parts laid out in list order.
    pub fn complete_multipartite(&self, part_sizes: &[usize]) -> Result<(Graph, VertexPartition)> {
        if part_sizes.is_empty() {
            return Err(Error::Parameter("complete multipartite graph needs at least one part".into()));
        }
        if part_sizes.contains(&0) {
            return Err(Error::Parameter("part sizes must be positive".into()));
        }
        let n = part_sizes.iter().try_fold(0usize, |acc, &s| acc.checked_add(s)).unwrap_or(usize::MAX);
        self.check(n)?;
        let partition = VertexPartition::blocks(part_sizes);
        let mut class = vec![0usize; n];
        for (i, part) in partition.parts().iter().enumerate() {
            for &v in part {
                class[v] = i;
            }
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if class[u] != class[v] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok((g, partition))
    }

    pub fn disjoint_union(&self, g: &Graph, h: &Graph) -> Result<Graph> {
        self.check(g.order() + h.order())?;
        let mut out = g.embedded_in(g.order() + h.order());
        let shift = g.order();
        for (u, v) in h.edges() {
            out.add_edge(u + shift, v + shift);
        }
        Ok(out)
    }

    pub fn join(&self, g: &Graph, h: &Graph) -> Result<Graph> {
        let mut out = self.disjoint_union(g, h)?;
        let shift = g.order();
        for u in 0..g.order() {
            for v in 0..h.order() {
                out.add_edge(u, v + shift);
            }
        }
        Ok(out)
    }

    pub fn copies(&self, count: usize, g: &Graph) -> Result<Graph> {
        if count == 0 {
            return Err(Error::Parameter("copy count must be positive".into()));
        }
        self.check(count.saturating_mul(g.order()))?;
        let mut out = Graph::empty(count * g.order());
        for c in 0..count {
            let shift = c * g.order();
            for (u, v) in g.edges() {
                out.add_edge(u + shift, v + shift);
            }
        }
        Ok(out)
    }

    /// `k`-vertex path with every pair at distance at most `p` joined.
    pub fn path_power(&self, k: usize, p: usize) -> Result<Graph> {
        if k == 0 || p == 0 {
            return Err(Error::Parameter("path power needs k >= 1 and p >= 1".into()));
        }
        self.check(k)?;
        let mut g = Graph::empty(k);
        for i in 0..k {
            for j in i + 1..k.min(i + p + 1) {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }
}

pub fn complete_multipartite(part_sizes: &[usize]) -> Result<(Graph, VertexPartition)> {
    Algebra::default().complete_multipartite(part_sizes)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    Algebra::default().disjoint_union(g, h)
}

pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    Algebra::default().join(g, h)
}

pub fn copies(count: usize, g: &Graph) -> Result<Graph> {
    Algebra::default().copies(count, g)
}

/// The `p`-th power of the path on `k` vertices: `i ~ j` iff `0 < |i - j| <= p`.
///
/// For `k <= p + 1` every pair is within distance `p`, so this is `K_k`.
pub fn path_power(k: usize, p: usize) -> Result<Graph> {
    Algebra::default().path_power(k, p)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let mut seen = vec![false; g.order()];
    for &v in vertices {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
        }
        if core::mem::replace(&mut seen[v], true) {
            return Err(Error::Parameter(alloc::format!("vertex {v} listed twice")));
        }
    }
    let mut out = Graph::empty(vertices.len());
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}
