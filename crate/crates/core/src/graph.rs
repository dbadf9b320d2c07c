//! Undirected simple graphs as adjacency bit-rows, plus the vertex-set and
//! parity primitives every other module builds on.
//!
//! A graph on `n` vertices stores one bit-row per vertex, each row spanning
//! `ceil(n / 64)` machine words. Rows are kept symmetric, loop-free, and
//! zero beyond bit `n - 1`, so popcounts never need masking.

use crate::error::{Error, Result};
use crate::rng;

const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices of a graph on `n` vertices, as a bit vector with
/// a cached popcount. Bits at positions `>= n` are always zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
    size: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
            size: 0,
        }
    }

    pub fn singleton(n: usize, v: usize) -> Result<Self> {
        let mut s = Self::empty(n);
        s.insert(v)?;
        Ok(s)
    }

    pub fn from_indices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &v in vertices {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Takes ownership of raw words; bits beyond `n - 1` are cleared and the
    /// popcount recomputed.
    pub(crate) fn from_words(n: usize, mut words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        if !n.is_multiple_of(WORD_BITS) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (n % WORD_BITS)) - 1;
            }
        }
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet { n, words, size }
    }

    /// Number of vertices of the underlying graph (the bit width).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        if *w & bit == 0 {
            *w |= bit;
            self.size += 1;
        }
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v >= self.n {
            return;
        }
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        if *w & bit != 0 {
            *w &= !bit;
            self.size -= 1;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i * WORD_BITS;
            BitIter { word: w, base }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        VertexSet::from_words(self.n, words)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        VertexSet::from_words(self.n, words)
    }

    /// Popcount of the symmetric difference, without allocating.
    pub fn hamming(&self, other: &VertexSet) -> usize {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }
}

struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

/// An undirected simple graph on `n >= 1` vertices, stored as `n` adjacency
/// bit-rows. Immutable after construction; all queries are pure reads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; endpoints
    /// must be in range and distinct.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "graph must have at least one vertex".into(),
            ));
        }
        let words = words_for(n);
        let mut adj = vec![0u64; n * words];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            adj[u * words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
            adj[v * words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
        }
        Ok(Graph { n, words, adj })
    }

    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::from_edge_list(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Binomial random graph: every unordered pair `(u, v)` is an edge
    /// independently with probability `p`.
    ///
    /// The pair with lexicographic index `k` is present iff
    /// `unit_f64(nth_u64(seed, k)) < p`, so identical `(n, p, seed)` always
    /// rebuild the identical graph, independent of platform or threading.
    pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability { p });
        }
        if n == 0 {
            return Err(Error::InvalidInput(
                "graph must have at least one vertex".into(),
            ));
        }
        let words = words_for(n);
        let mut adj = vec![0u64; n * words];
        let mut k = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                if rng::unit_f64(rng::nth_u64(seed, k)) < p {
                    adj[u * words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
                    adj[v * words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
                }
                k += 1;
            }
        }
        Ok(Graph { n, words, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    pub fn word_count(&self) -> usize {
        self.words
    }

    /// The adjacency bit-row of `v` (`N(v)` as raw words).
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        debug_assert!(v < self.n);
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n);
        self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n);
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    /// A vertex attaining the minimum degree (smallest index on ties).
    pub fn min_degree_vertex(&self) -> usize {
        let mut best = 0;
        let mut best_deg = self.degree(0);
        for v in 1..self.n {
            let d = self.degree(v);
            if d < best_deg {
                best = v;
                best_deg = d;
            }
        }
        best
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.n);
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    /// `B(A)`: the vertices outside `A` with an odd number of neighbors in
    /// `A`, computed as the XOR of the adjacency rows of `A` minus `A`.
    pub fn b_set(&self, a: &VertexSet) -> Result<VertexSet> {
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        if a.universe() != self.n {
            return Err(Error::InvalidInput(format!(
                "vertex set over {} vertices used with graph on {}",
                a.universe(),
                self.n
            )));
        }
        let mut acc = vec![0u64; self.words];
        for v in a.iter() {
            for (dst, &src) in acc.iter_mut().zip(self.row(v)) {
                *dst ^= src;
            }
        }
        for (dst, &m) in acc.iter_mut().zip(a.words()) {
            *dst &= !m;
        }
        Ok(VertexSet::from_words(self.n, acc))
    }

    /// `(N(x) △ N(y)) \ {x, y}`; equals `b_set({x, y})`.
    pub fn pair_symmetric_difference(&self, x: usize, y: usize) -> Result<VertexSet> {
        if x >= self.n {
            return Err(Error::VertexOutOfRange { v: x, n: self.n });
        }
        if y >= self.n {
            return Err(Error::VertexOutOfRange { v: y, n: self.n });
        }
        if x == y {
            return Err(Error::InvalidInput(
                "pair symmetric difference needs two distinct vertices".into(),
            ));
        }
        let mut acc: Vec<u64> = self
            .row(x)
            .iter()
            .zip(self.row(y))
            .map(|(a, b)| a ^ b)
            .collect();
        acc[x / WORD_BITS] &= !(1u64 << (x % WORD_BITS));
        acc[y / WORD_BITS] &= !(1u64 << (y % WORD_BITS));
        Ok(VertexSet::from_words(self.n, acc))
    }
}
