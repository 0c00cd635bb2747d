//! Closed-form edge bounds for the three classes and exhaustive searches that
//! test them: the densest member on `n` vertices, and the sparsest non-members.

use crate::enumerate::{complement_level, enumerate_graphs, Levels};
use crate::error::{CordialError, Result};
use crate::graph::{choose2, Graph};
use crate::labeling::Property;
use crate::par;

/// Vertex ceiling for [`empirical_max_edges`].
pub fn empirical_cap(property: Property) -> usize {
    match property {
        Property::Sum | Property::Product => 8,
        Property::Orient23 => 7,
    }
}

/// Edge ceiling for [`minimal_noncordial`].
pub const MINIMAL_EDGE_CAP: usize = 6;

/// `2k^2 - 2k + 1` for `n = 2k`, `2k^2 + 1` for `n = 2k + 1`.
pub fn bound_sum_cordial(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(CordialError::BoundDomain { n, min: 4 });
    }
    let k = n / 2;
    Ok(if n.is_multiple_of(2) { 2 * k * k - 2 * k + 1 } else { 2 * k * k + 1 })
}

/// `(c(c-1), c(c-1) + 1)` with `c = ceil(n/2)`: the stated value and the
/// variant that allows the two edge classes to differ by one.
pub fn bound_product_cordial(n: usize) -> Result<(usize, usize)> {
    if n < 4 {
        return Err(CordialError::BoundDomain { n, min: 4 });
    }
    let c = n.div_ceil(2);
    Ok((c * (c - 1), c * (c - 1) + 1))
}

/// `D + ceil(D/2)` where `D = C(n,2) - C(ceil(n/2),2) - C(floor(n/2),2)` is the
/// number of pairs split by a balanced bipartition.
pub fn bound_23_orientable(n: usize) -> Result<usize> {
    if n < 6 {
        return Err(CordialError::BoundDomain { n, min: 6 });
    }
    let d = choose2(n) - choose2(n.div_ceil(2)) - choose2(n / 2);
    Ok(d + d.div_ceil(2))
}

/// All classes at this edge count were checked and none has the property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelCertificate {
    pub edges: usize,
    pub classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalMax {
    pub n: usize,
    pub property: Property,
    pub max_edges: usize,
    /// Least canonical representative with `max_edges` edges having the property.
    pub witness: Graph,
    /// One certificate per level above `max_edges`, densest first.
    pub exhausted: Vec<LevelCertificate>,
}

fn holds(property: Property, g: &Graph) -> bool {
    property.holds(g).unwrap_or(false)
}

/// Largest `m` such that some graph on at most `n` vertices with `m` edges has
/// the property. Descends from `C(n,2)`; levels are produced as complements of
/// the sparse levels.
pub fn empirical_max_edges(n: usize, property: Property) -> Result<EmpiricalMax> {
    let cap = empirical_cap(property);
    if !(2..=cap).contains(&n) {
        return Err(CordialError::Budget(format!(
            "empirical maximum for {property} needs 2 <= n <= {cap}, got {n}"
        )));
    }
    let total = choose2(n);
    let mut levels = Levels::new(n)?;
    let mut exhausted = Vec::new();
    for j in 0..total {
        let m = total - j;
        let classes = complement_level(n, levels.graphs());
        if let Some(i) = par::position_first(&classes, |g| holds(property, g)) {
            return Ok(EmpiricalMax { n, property, max_edges: m, witness: classes[i], exhausted });
        }
        exhausted.push(LevelCertificate { edges: m, classes: classes.len() });
        levels.advance();
    }
    unreachable!("a single edge has every property")
}

/// Which candidate product bound the data is consistent with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductBoundFinding {
    /// Empirical maximum is at most the stated value.
    Stated,
    /// Exceeds the stated value but not the `+1` variant.
    Corrected,
    /// Exceeds both.
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub property: Property,
    pub paper_bound: usize,
    /// Product only: the `+1` variant.
    pub alternate_bound: Option<usize>,
    pub empirical: Option<EmpiricalMax>,
}

impl BoundReport {
    pub fn empirical_max(&self) -> Option<usize> {
        self.empirical.as_ref().map(|e| e.max_edges)
    }

    /// `empirical <= max(paper_bound, alternate_bound)`.
    pub fn within_bound(&self) -> Option<bool> {
        let limit = self.paper_bound.max(self.alternate_bound.unwrap_or(0));
        self.empirical_max().map(|m| m <= limit)
    }

    /// Whether the stated bound is met with equality.
    pub fn paper_attained(&self) -> Option<bool> {
        self.empirical_max().map(|m| m == self.paper_bound)
    }

    pub fn product_finding(&self) -> Option<ProductBoundFinding> {
        let alt = self.alternate_bound?;
        let m = self.empirical_max()?;
        Some(if m <= self.paper_bound {
            ProductBoundFinding::Stated
        } else if m <= alt {
            ProductBoundFinding::Corrected
        } else {
            ProductBoundFinding::Neither
        })
    }
}

/// Closed-form bound, optionally paired with the exhaustive maximum.
pub fn bound_report(n: usize, property: Property, with_empirical: bool) -> Result<BoundReport> {
    let (paper_bound, alternate_bound) = match property {
        Property::Sum => (bound_sum_cordial(n)?, None),
        Property::Product => {
            let (p, c) = bound_product_cordial(n)?;
            (p, Some(c))
        }
        Property::Orient23 => (bound_23_orientable(n)?, None),
    };
    let empirical = if with_empirical { Some(empirical_max_edges(n, property)?) } else { None };
    Ok(BoundReport { n, property, paper_bound, alternate_bound, empirical })
}

/// Every class with at most `edge_cap` edges that lacks the property, by edge
/// count then canonical order. Graphs are returned on their support vertices.
pub fn minimal_noncordial(property: Property, edge_cap: usize) -> Result<Vec<(usize, Graph)>> {
    if edge_cap > MINIMAL_EDGE_CAP {
        return Err(CordialError::Budget(format!(
            "edge cap {edge_cap} exceeds {MINIMAL_EDGE_CAP}"
        )));
    }
    let mut out = Vec::new();
    for m in 1..=edge_cap {
        let classes = enumerate_graphs(2 * m, m)?;
        let fails = par::map(&classes, |g| !holds(property, g));
        for (g, failed) in classes.iter().zip(fails) {
            if failed {
                let edges = g.edge_list();
                out.push((m, Graph::new(g.support_size(), &edges)?));
            }
        }
    }
    Ok(out)
}
