//! Canonical forms by exhaustive minimisation over vertex orderings.
//!
//! The key of a graph is computed on its non-isolated vertices only. For an
//! ordering `v_0, ..., v_{k-1}` of those vertices we read the adjacency bits in
//! column-major upper-triangle order `(0,1), (0,2), (1,2), (0,3), ...` (the
//! graph6 order) and keep the lexicographically smallest string. The search is
//! a branch and bound over orderings: column `p` is fixed once position `p` is
//! filled, so a prefix already larger than the best string is cut. Twin
//! vertices (equal neighbourhoods apart from each other) give identical
//! subtrees and only the lower-indexed twin is tried.

use crate::error::{CordialError, Result};
use crate::graph::{choose2, Graph};

/// Largest non-isolated vertex count accepted by [`canonical_form`].
pub const CANON_LIMIT: usize = 12;

/// Isomorphism invariant of the non-isolated part of a graph.
///
/// Ordered by support size, then edge count, then the minimal adjacency string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    support: u8,
    edges: u8,
    bits: u128,
}

impl CanonicalKey {
    pub fn support_size(&self) -> usize {
        self.support as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges as usize
    }

    /// `[support, edges, bits...]`, bits big-endian over `ceil(C(k,2)/8)` bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let len = choose2(self.support_size()).div_ceil(8);
        let mut out = vec![self.support, self.edges];
        out.extend_from_slice(&self.bits.to_be_bytes()[16 - len..]);
        out
    }

    /// The canonically labelled graph: support on `0..k`, isolated vertices after.
    pub fn to_graph(&self, n: usize) -> Result<Graph> {
        let k = self.support_size();
        if n < k {
            return Err(CordialError::SizeMismatch { left: k, right: n });
        }
        let len = choose2(k);
        let mut edges = Vec::with_capacity(self.edge_count());
        let mut pos = 0;
        for j in 1..k {
            for i in 0..j {
                if self.bits >> (len - 1 - pos) & 1 == 1 {
                    edges.push((i, j));
                }
                pos += 1;
            }
        }
        Graph::new(n, &edges)
    }
}

/// Canonical key of `g`. Invariant under vertex relabeling and under adding
/// or removing isolated vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    canonical_labeling(g).map(|(key, _)| key)
}

/// The representative of `g`'s isomorphism class on `g.n()` vertices.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_form(g)?.to_graph(g.n())
}

/// Key plus the relabeling `perm` (old vertex -> new vertex) that realises it.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.n();
    let support = g.support();
    let k = support.count_ones() as usize;
    if k > CANON_LIMIT {
        return Err(CordialError::CanonicalTooLarge { support: k, limit: CANON_LIMIT });
    }
    let global: Vec<usize> = (0..n).filter(|v| support >> v & 1 == 1).collect();
    let mut local_of = [usize::MAX; 16];
    for (l, &v) in global.iter().enumerate() {
        local_of[v] = l;
    }
    let full_adj = g.adjacency();
    let mut adj = [0u16; CANON_LIMIT];
    for (l, &v) in global.iter().enumerate() {
        let mut row = full_adj[v];
        while row != 0 {
            let w = row.trailing_zeros() as usize;
            row &= row - 1;
            adj[l] |= 1 << local_of[w];
        }
    }

    let mut search = Search::new(&adj[..k]);
    search.run();

    let mut perm = vec![usize::MAX; n];
    for (pos, &l) in search.best_order[..k].iter().enumerate() {
        perm[global[l as usize]] = pos;
    }
    for (next, p) in (k..).zip(perm.iter_mut().filter(|p| **p == usize::MAX)) {
        *p = next;
    }
    let key = CanonicalKey {
        support: k as u8,
        edges: g.edge_count() as u8,
        bits: search.best.unwrap_or(0),
    };
    Ok((key, perm))
}

struct Search<'a> {
    adj: &'a [u16],
    k: usize,
    len: usize,
    twin_below: [u16; CANON_LIMIT],
    order: [u8; CANON_LIMIT],
    best: Option<u128>,
    best_order: [u8; CANON_LIMIT],
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u16]) -> Self {
        let k = adj.len();
        let mut twin_below = [0u16; CANON_LIMIT];
        for u in 0..k {
            for w in 0..u {
                if adj[u] & !(1 << w) == adj[w] & !(1 << u) {
                    twin_below[u] |= 1 << w;
                }
            }
        }
        Search {
            adj,
            k,
            len: choose2(k),
            twin_below,
            order: [0; CANON_LIMIT],
            best: None,
            best_order: [0; CANON_LIMIT],
        }
    }

    fn run(&mut self) {
        if self.k == 0 {
            self.best = Some(0);
            return;
        }
        self.descend(0, 0, 0, 0);
    }

    fn descend(&mut self, pos: usize, used: u16, prefix: u128, prefix_len: usize) {
        if pos == self.k {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
                self.best_order = self.order;
            }
            return;
        }
        let free = !used & ((1u32 << self.k) - 1) as u16;
        let mut cands = free;
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if self.twin_below[u] & free != 0 {
                continue;
            }
            let mut column = 0u128;
            for q in 0..pos {
                column = column << 1 | (self.adj[self.order[q] as usize] >> u & 1) as u128;
            }
            let next = prefix << pos | column;
            let next_len = prefix_len + pos;
            if let Some(best) = self.best {
                if next > best >> (self.len - next_len) {
                    continue;
                }
            }
            self.order[pos] = u as u8;
            self.descend(pos + 1, used | 1 << u, next, next_len);
        }
    }
}
