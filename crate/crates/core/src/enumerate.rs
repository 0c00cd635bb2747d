//! One representative per isomorphism class, level by level in edge count.
//!
//! Level `m + 1` is produced from level `m` by adding every missing edge to
//! every representative and deduplicating by [`CanonicalKey`]. Every
//! `(m + 1)`-edge graph minus any edge lies in some level-`m` class, so no
//! class is missed. Levels above `C(n,2) / 2` are taken as complements.

use crate::canon::{canonical_form, CanonicalKey};
use crate::error::{CordialError, Result};
use crate::graph::{choose2, Graph};
use crate::par;

/// Largest vertex count enumerated at every edge count.
pub const ENUM_MAX_N: usize = 9;
/// Graphs with few edges may be enumerated on up to this many vertices.
pub const ENUM_SPARSE_MAX_N: usize = 12;
/// Edge-count ceiling for the sparse regime.
pub const ENUM_SPARSE_MAX_M: usize = 6;

fn check_budget(n: usize, m: usize) -> Result<()> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(CordialError::VertexCount(n));
    }
    if m > choose2(n) {
        return Err(CordialError::EdgeCount { n, m });
    }
    let ok = n <= ENUM_MAX_N || (n <= ENUM_SPARSE_MAX_N && m <= ENUM_SPARSE_MAX_M);
    if ok {
        Ok(())
    } else {
        Err(CordialError::EnumerationTooLarge { n, m })
    }
}

/// Isomorphism classes of `m`-edge graphs on `n` vertices (isolated vertices
/// allowed), as canonical representatives sorted by key.
pub fn enumerate_graphs(n: usize, m: usize) -> Result<Vec<Graph>> {
    check_budget(n, m)?;
    let total = choose2(n);
    if 2 * m > total {
        let mut levels = Levels::new(n)?;
        for _ in 0..total - m {
            levels.advance();
        }
        Ok(complement_level(n, levels.graphs()))
    } else {
        let mut levels = Levels::new(n)?;
        for _ in 0..m {
            levels.advance();
        }
        Ok(levels.graphs().to_vec())
    }
}

/// Complements each graph and re-canonicalises, sorted by key.
pub fn complement_level(n: usize, graphs: &[Graph]) -> Vec<Graph> {
    let mut keyed: Vec<(CanonicalKey, Graph)> = par::map(graphs, |g| {
        let key = canonical_form(&g.complement()).expect("n within canonical limit");
        (key, key.to_graph(n).expect("key fits n"))
    });
    keyed.sort_unstable_by_key(|(k, _)| *k);
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Incremental level generator starting from the edgeless graph.
#[derive(Clone, Debug)]
pub struct Levels {
    n: usize,
    m: usize,
    graphs: Vec<Graph>,
}

impl Levels {
    pub fn new(n: usize) -> Result<Self> {
        check_budget(n, 0)?;
        Ok(Levels { n, m: 0, graphs: vec![Graph::empty(n)?] })
    }

    /// Current edge count.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    /// Moves to the next edge count. No-op once the complete graph is reached.
    pub fn advance(&mut self) {
        let total = choose2(self.n);
        if self.m == total {
            return;
        }
        let slots_mask = if total == 128 { u128::MAX } else { (1u128 << total) - 1 };
        let n = self.n;
        let children: Vec<Vec<CanonicalKey>> = par::map(&self.graphs, |g| {
            let mut missing = !g.edges() & slots_mask;
            let mut keys = Vec::with_capacity(missing.count_ones() as usize);
            while missing != 0 {
                let k = missing.trailing_zeros();
                missing &= missing - 1;
                let child = Graph::from_bits_unchecked(n, g.edges() | 1u128 << k);
                keys.push(canonical_form(&child).expect("support within canonical limit"));
            }
            keys
        });
        let mut keys: Vec<CanonicalKey> = children.into_iter().flatten().collect();
        keys.sort_unstable();
        keys.dedup();
        self.graphs = keys.iter().map(|k| k.to_graph(n).expect("key fits n")).collect();
        self.m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_total(n: usize) -> usize {
        (0..=choose2(n)).map(|m| enumerate_graphs(n, m).unwrap().len()).sum()
    }

    #[test]
    fn known_class_counts() {
        // graphs on n unlabeled vertices: 1, 2, 4, 11, 34, 156
        assert_eq!(class_total(1), 1);
        assert_eq!(class_total(2), 2);
        assert_eq!(class_total(3), 4);
        assert_eq!(class_total(4), 11);
        assert_eq!(class_total(5), 34);
        assert_eq!(class_total(6), 156);
    }

    #[test]
    fn five_three_edge_classes() {
        let classes = enumerate_graphs(6, 3).unwrap();
        assert_eq!(classes.len(), 5);
        let named = ["triangle", "p4", "k13", "2-star+k2", "3k2"];
        let mut keys: Vec<_> =
            named.iter().map(|t| canonical_form(&Graph::named(t).unwrap()).unwrap()).collect();
        keys.sort();
        let got: Vec<_> = classes.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(got, keys);
    }

    #[test]
    fn trivial_levels() {
        assert_eq!(enumerate_graphs(4, 0).unwrap(), vec![Graph::empty(4).unwrap()]);
        let k4 = enumerate_graphs(4, 6).unwrap();
        assert_eq!(k4, vec![Graph::complete(4).unwrap()]);
    }

    #[test]
    fn sorted_and_distinct() {
        let level = enumerate_graphs(7, 9).unwrap();
        let keys: Vec<_> = level.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn budget_errors() {
        assert!(matches!(enumerate_graphs(10, 20), Err(CordialError::EnumerationTooLarge { .. })));
        assert!(enumerate_graphs(12, 6).is_ok());
        assert!(matches!(enumerate_graphs(4, 7), Err(CordialError::EdgeCount { .. })));
    }
}
