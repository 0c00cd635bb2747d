//! Simple undirected graphs on at most 16 vertices, stored as an edge bitset.
//!
//! Edge slots are numbered lexicographically over pairs `(i, j)` with `i < j`:
//! `(0,1), (0,2), ..., (0,n-1), (1,2), ...`. Bit `k` of [`Graph::edges`] is set
//! iff the pair with index `k` is an edge. The numbering depends on `n`.

use std::fmt;

use crate::error::{CordialError, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 16;

/// Number of unordered pairs on `n` vertices.
#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

const MAX_EDGES: usize = choose2(MAX_VERTICES);

struct EdgeTables {
    pairs: [[(u8, u8); MAX_EDGES]; MAX_VERTICES + 1],
    index: [[[u8; MAX_VERTICES]; MAX_VERTICES]; MAX_VERTICES + 1],
}

const TABLES: EdgeTables = {
    let mut pairs = [[(0u8, 0u8); MAX_EDGES]; MAX_VERTICES + 1];
    let mut index = [[[u8::MAX; MAX_VERTICES]; MAX_VERTICES]; MAX_VERTICES + 1];
    let mut n = 0;
    while n <= MAX_VERTICES {
        let mut k = 0;
        let mut i = 0;
        while i < n {
            let mut j = i + 1;
            while j < n {
                pairs[n][k] = (i as u8, j as u8);
                index[n][i][j] = k as u8;
                index[n][j][i] = k as u8;
                k += 1;
                j += 1;
            }
            i += 1;
        }
        n += 1;
    }
    EdgeTables { pairs, index }
};

/// The endpoints `(i, j)`, `i < j`, of edge slot `k` on `n` vertices.
#[inline]
pub fn edge_pair(n: usize, k: usize) -> (usize, usize) {
    debug_assert!(k < choose2(n));
    let (i, j) = TABLES.pairs[n][k];
    (i as usize, j as usize)
}

/// The slot index of the unordered pair `{i, j}` on `n` vertices.
#[inline]
pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    TABLES.index[n][i][j] as usize
}

#[inline]
fn full_mask(slots: usize) -> u128 {
    if slots >= 128 {
        u128::MAX
    } else {
        (1u128 << slots) - 1
    }
}

/// A loopless simple undirected graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    edges: u128,
}

impl Graph {
    fn check_n(n: usize) -> Result<()> {
        if (1..=MAX_VERTICES).contains(&n) {
            Ok(())
        } else {
            Err(CordialError::VertexCount(n))
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        Self::check_n(n)?;
        let mut edges = 0u128;
        for &(i, j) in edge_list {
            if i >= n || j >= n {
                return Err(CordialError::VertexOutOfRange { vertex: i.max(j), n });
            }
            if i == j {
                return Err(CordialError::Loop(i));
            }
            edges |= 1u128 << edge_index(n, i, j);
        }
        Ok(Graph { n: n as u8, edges })
    }

    /// Builds a graph directly from its edge bitset.
    pub fn from_bits(n: usize, edges: u128) -> Result<Self> {
        Self::check_n(n)?;
        if edges & !full_mask(choose2(n)) != 0 {
            return Err(CordialError::EdgeBitsOutOfRange { n });
        }
        Ok(Graph { n: n as u8, edges })
    }

    /// Unchecked constructor for internal hot paths.
    #[inline]
    pub(crate) fn from_bits_unchecked(n: usize, edges: u128) -> Self {
        debug_assert!(n <= MAX_VERTICES && edges & !full_mask(choose2(n)) == 0);
        Graph { n: n as u8, edges }
    }

    /// The edgeless graph `O` on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::check_n(n)?;
        Ok(Graph { n: n as u8, edges: full_mask(choose2(n)) })
    }

    /// The graph whose only edge is `{i, j}`.
    pub fn edge_graph(n: usize, pair: (usize, usize)) -> Result<Self> {
        Self::new(n, &[pair])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn edges(&self) -> u128 {
        self.edges
    }

    /// Number of edge slots, `C(n, 2)`.
    #[inline]
    pub fn slot_count(&self) -> usize {
        choose2(self.n())
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.edges == 0
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i < self.n() && j < self.n() && self.edges >> edge_index(self.n(), i, j) & 1 == 1
    }

    /// Edge endpoints in slot order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edge_slots().map(|k| edge_pair(self.n(), k)).collect()
    }

    /// Indices of present edge slots, ascending.
    pub fn edge_slots(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.edges;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(k)
            }
        })
    }

    /// Neighbour masks, one per vertex; entries past `n` are zero.
    pub fn adjacency(&self) -> [u16; MAX_VERTICES] {
        let mut adj = [0u16; MAX_VERTICES];
        let n = self.n();
        for k in self.edge_slots() {
            let (i, j) = edge_pair(n, k);
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    /// Mask of non-isolated vertices.
    pub fn support(&self) -> u16 {
        let n = self.n();
        self.edge_slots().fold(0u16, |acc, k| {
            let (i, j) = edge_pair(n, k);
            acc | 1 << i | 1 << j
        })
    }

    pub fn support_size(&self) -> usize {
        self.support().count_ones() as usize
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency()[v].count_ones() as usize
    }

    /// Semimodule addition: edge-wise OR.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(CordialError::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(Graph { n: self.n, edges: self.edges | other.edges })
    }

    /// True iff every edge of `other` is an edge of `self`.
    pub fn contains(&self, other: &Graph) -> bool {
        self.n == other.n && other.edges & !self.edges == 0
    }

    pub fn complement(&self) -> Graph {
        Graph { n: self.n, edges: !self.edges & full_mask(self.slot_count()) }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n())?;
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        let mut edges = 0u128;
        for k in self.edge_slots() {
            let (i, j) = edge_pair(n, k);
            edges |= 1u128 << edge_index(n, perm[i], perm[j]);
        }
        Graph { n: self.n, edges }
    }

    /// Looks up a graph in the named catalog.
    ///
    /// | tag | graph |
    /// |-----|-------|
    /// | `k2` | single edge `0-1` |
    /// | `2k2` | `0-1, 2-3` |
    /// | `3k2` | `0-1, 2-3, 4-5` |
    /// | `p3`, `2-star` | `0-1, 1-2` |
    /// | `p4`, `3-path` | `0-1, 1-2, 2-3` |
    /// | `k13`, `claw` | `0-1, 0-2, 0-3` |
    /// | `2-star+k2` | `0-1, 1-2, 3-4` |
    /// | `triangle`, `k3` | `0-1, 0-2, 1-2` |
    /// | `c4` | `0-1, 1-2, 2-3, 0-3` |
    /// | `paw`, `triangle+pendant` | `0-1, 0-2, 1-2, 2-3` |
    /// | `petersen` | outer `i-(i+1)`, spokes `i-(i+5)`, inner `(5+i)-(5+(i+2)%5)` |
    /// | `k<N>` | complete graph on `N` vertices, `1 <= N <= 16` |
    pub fn named(tag: &str) -> Result<Graph> {
        let tag = tag.to_ascii_lowercase();
        let (n, edges): (usize, Vec<(usize, usize)>) = match tag.as_str() {
            "k2" => (2, vec![(0, 1)]),
            "2k2" => (4, vec![(0, 1), (2, 3)]),
            "3k2" => (6, vec![(0, 1), (2, 3), (4, 5)]),
            "p3" | "2-star" => (3, vec![(0, 1), (1, 2)]),
            "p4" | "3-path" => (4, vec![(0, 1), (1, 2), (2, 3)]),
            "k13" | "claw" => (4, vec![(0, 1), (0, 2), (0, 3)]),
            "2-star+k2" => (5, vec![(0, 1), (1, 2), (3, 4)]),
            "triangle" | "k3" => (3, vec![(0, 1), (0, 2), (1, 2)]),
            "c4" => (4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]),
            "paw" | "triangle+pendant" => (4, vec![(0, 1), (0, 2), (1, 2), (2, 3)]),
            "petersen" => {
                let mut e = Vec::with_capacity(15);
                for i in 0..5 {
                    e.push((i, (i + 1) % 5));
                    e.push((i, i + 5));
                    e.push((5 + i, 5 + (i + 2) % 5));
                }
                (10, e)
            }
            other => {
                return match other.strip_prefix('k').and_then(|s| s.parse::<usize>().ok()) {
                    Some(n) if (1..=MAX_VERTICES).contains(&n) => Graph::complete(n),
                    _ => Err(CordialError::UnknownTag(tag.clone())),
                };
            }
        };
        Graph::new(n, &edges)
    }

    /// The same edges on `n` vertices, `n >= self.n()`. Edge slots are renumbered.
    pub fn pad_to(&self, n: usize) -> Result<Graph> {
        Self::check_n(n)?;
        if n < self.n() {
            return Err(CordialError::SizeMismatch { left: self.n(), right: n });
        }
        Graph::new(n, &self.edge_list())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edge_list())
    }
}

/// Checks that `perm` is a bijection on `0..n`.
pub fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(CordialError::NotAPermutation);
    }
    let mut seen = 0u32;
    for &p in perm {
        if p >= n || seen >> p & 1 == 1 {
            return Err(CordialError::NotAPermutation);
        }
        seen |= 1 << p;
    }
    Ok(())
}
