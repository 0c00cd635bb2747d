//! Friendly vertex labelings and the three cordiality predicates.
//!
//! A `{0,1}` vertex labeling is friendly when its two label classes differ in
//! size by at most one. Only non-isolated vertices are labeled and counted
//! (the [`Domain::NonIsolated`] default); [`Domain::Ambient`] labels every
//! vertex and exists to reproduce statements phrased over the full vertex set.
//!
//! Labelings are enumerated in increasing order of their bitset value (bit `v`
//! is the label of vertex `v`), so "first witness" always means the numerically
//! smallest labeling.

use std::fmt;
use std::str::FromStr;

use crate::error::{CordialError, Result};
use crate::graph::{edge_pair, Graph};

/// Largest edge count the brute-force orientation oracle accepts.
pub const ORACLE_MAX_EDGES: usize = 20;

/// The graph classes this crate decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// `(Z2,+)`-cordial: edge label `f(u) + f(v) mod 2`.
    Sum,
    /// `(Z2,x)`-cordial (product cordial): edge label `f(u) * f(v)`.
    Product,
    /// `(2,3)`-orientable: some orientation is a `(2,3)`-cordial digraph.
    Orient23,
}

impl Property {
    pub const ALL: [Property; 3] = [Property::Sum, Property::Product, Property::Orient23];

    pub fn name(self) -> &'static str {
        match self {
            Property::Sum => "sum",
            Property::Product => "product",
            Property::Orient23 => "orient23",
        }
    }

    /// Full check with witness.
    pub fn check(self, g: &Graph) -> Result<Verdict> {
        check_in(g, self, Domain::NonIsolated)
    }

    /// Membership without witness construction.
    pub fn holds(self, g: &Graph) -> Result<bool> {
        Ok(first_accepted(g, domain_mask(g, Domain::NonIsolated)?, accept_fn(self)).0.is_some())
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "sum" => Ok(Property::Sum),
            "product" => Ok(Property::Product),
            "orient23" => Ok(Property::Orient23),
            other => Err(format!("unknown property `{other}` (expected sum, product, orient23)")),
        }
    }
}

/// How an edge label is induced from its endpoint labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeLabelRule {
    SumMod2,
    Product,
    /// `f(head) - f(tail)` on an arc; needs an orientation.
    SignedDifference,
}

impl EdgeLabelRule {
    pub fn is_symmetric(self) -> bool {
        !matches!(self, EdgeLabelRule::SignedDifference)
    }

    /// Label of the edge (or arc `tail -> head`) with endpoint labels `tail`, `head`.
    pub fn label(self, tail: u8, head: u8) -> i8 {
        match self {
            EdgeLabelRule::SumMod2 => ((tail + head) % 2) as i8,
            EdgeLabelRule::Product => (tail * head) as i8,
            EdgeLabelRule::SignedDifference => head as i8 - tail as i8,
        }
    }
}

/// Which vertices a labeling assigns and counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Domain {
    #[default]
    NonIsolated,
    Ambient,
}

/// A `{0,1}` labeling restricted to a domain of vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabeling {
    labels: u16,
    domain: u16,
}

impl VertexLabeling {
    /// `labels` must be a subset of `domain`.
    pub fn new(labels: u16, domain: u16) -> Result<Self> {
        if labels & !domain != 0 {
            return Err(CordialError::UnfriendlyLabeling);
        }
        Ok(VertexLabeling { labels, domain })
    }

    pub fn labels(&self) -> u16 {
        self.labels
    }

    pub fn domain(&self) -> u16 {
        self.domain
    }

    pub fn label(&self, v: usize) -> u8 {
        (self.labels >> v & 1) as u8
    }

    pub fn ones(&self) -> usize {
        self.labels.count_ones() as usize
    }

    pub fn zeros(&self) -> usize {
        (self.domain & !self.labels).count_ones() as usize
    }

    pub fn is_friendly(&self) -> bool {
        self.ones().abs_diff(self.zeros()) <= 1
    }

    /// `n` characters, vertex 0 first; `-` outside the domain.
    pub fn to_bitstring(&self, n: usize) -> String {
        (0..n)
            .map(|v| match (self.domain >> v & 1, self.labels >> v & 1) {
                (0, _) => '-',
                (_, 1) => '1',
                _ => '0',
            })
            .collect()
    }
}

/// Direction bits for the present edges of a graph, in slot order.
/// Bit clear: arc from the lower-index endpoint to the higher one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    bits: u128,
    len: u8,
}

impl Orientation {
    pub fn new(bits: u128, len: usize) -> Self {
        let mask = if len >= 128 { u128::MAX } else { (1u128 << len) - 1 };
        Orientation { bits: bits & mask, len: len as u8 }
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_reversed(&self, position: usize) -> bool {
        self.bits >> position & 1 == 1
    }

    /// One character per present edge, first edge first.
    pub fn to_bitstring(&self) -> String {
        (0..self.len()).map(|k| if self.is_reversed(k) { '1' } else { '0' }).collect()
    }

    /// Arcs `(tail, head)` of `g` under this orientation.
    pub fn arcs(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edge_list()
            .into_iter()
            .enumerate()
            .map(|(k, (i, j))| if self.is_reversed(k) { (j, i) } else { (i, j) })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub labeling: VertexLabeling,
    pub orientation: Option<Orientation>,
}

/// Outcome of a cordiality check.
///
/// When `decision` is false, `labelings_examined` is the number of friendly
/// labelings of the domain, all of which failed. When true, it is the 1-based
/// rank of the witness labeling in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub decision: bool,
    pub witness: Option<Witness>,
    pub labelings_examined: u64,
}

/// True iff all pairwise differences of `counts` lie in `[-1, 1]`.
pub fn is_k_friendly(counts: &[usize], k: usize) -> Result<bool> {
    if counts.len() != k {
        return Err(CordialError::CountsLength { expected: k, got: counts.len() });
    }
    let lo = counts.iter().min().copied().unwrap_or(0);
    let hi = counts.iter().max().copied().unwrap_or(0);
    Ok(hi - lo <= 1)
}

/// Number of friendly labelings of a domain of size `s`.
pub fn friendly_labeling_count(s: usize) -> u64 {
    let binom = |n: u64, k: u64| (1..=k).fold(1u64, |acc, i| acc * (n - k + i) / i);
    let s = s as u64;
    if s.is_multiple_of(2) {
        binom(s, s / 2)
    } else {
        2 * binom(s, s / 2)
    }
}

/// Friendly labelings of the domain in increasing bitset order.
#[derive(Clone, Debug)]
pub struct FriendlyLabelings {
    positions: Vec<u8>,
    domain: u16,
    limit: u32,
    low: Option<u32>,
    high: Option<u32>,
}

impl FriendlyLabelings {
    fn new(domain: u16) -> Self {
        let positions: Vec<u8> = (0..16).filter(|v| domain >> v & 1 == 1).collect();
        let s = positions.len() as u32;
        let first = |r: u32| Some((1u32 << r) - 1);
        let low = first(s / 2);
        let high = if s % 2 == 1 { first(s / 2 + 1) } else { None };
        FriendlyLabelings { positions, domain, limit: 1 << s, low, high }
    }

    fn deposit(&self, compressed: u32) -> u16 {
        let mut out = 0u16;
        let mut bits = compressed;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= 1 << self.positions[i];
        }
        out
    }

    fn gosper(x: u32, limit: u32) -> Option<u32> {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        let next = (((r ^ x) >> 2) / c) | r;
        (next < limit).then_some(next)
    }
}

impl Iterator for FriendlyLabelings {
    type Item = VertexLabeling;

    fn next(&mut self) -> Option<VertexLabeling> {
        let take_low = match (self.low, self.high) {
            (None, None) => return None,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a < b,
        };
        let slot = if take_low { &mut self.low } else { &mut self.high };
        let current = slot.expect("checked above");
        *slot = Self::gosper(current, self.limit);
        Some(VertexLabeling { labels: self.deposit(current), domain: self.domain })
    }
}

fn domain_mask(g: &Graph, domain: Domain) -> Result<u16> {
    if g.is_empty() {
        return Err(CordialError::Edgeless);
    }
    Ok(match domain {
        Domain::NonIsolated => g.support(),
        Domain::Ambient => ((1u32 << g.n()) - 1) as u16,
    })
}

/// Every friendly labeling of the non-isolated vertices of `g`.
pub fn friendly_vertex_labelings(g: &Graph) -> Result<FriendlyLabelings> {
    friendly_labelings_in(g, Domain::NonIsolated)
}

pub fn friendly_labelings_in(g: &Graph, domain: Domain) -> Result<FriendlyLabelings> {
    Ok(FriendlyLabelings::new(domain_mask(g, domain)?))
}

/// Edge-label class sizes of one labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct EdgeSplit {
    /// Edges whose endpoints carry equal labels.
    same: usize,
    /// Edges whose endpoints carry different labels.
    cross: usize,
    /// Edges with both endpoints labeled 1.
    both_one: usize,
}

#[inline]
fn edge_split(adj: &[u16; 16], edge_count: usize, labels: u16) -> EdgeSplit {
    let mut cross = 0u32;
    let mut twice_both = 0u32;
    let mut ones = labels;
    while ones != 0 {
        let v = ones.trailing_zeros() as usize;
        ones &= ones - 1;
        cross += (adj[v] & !labels).count_ones();
        twice_both += (adj[v] & labels).count_ones();
    }
    let cross = cross as usize;
    EdgeSplit { same: edge_count - cross, cross, both_one: (twice_both / 2) as usize }
}

fn accept_fn(property: Property) -> fn(EdgeSplit, usize) -> bool {
    match property {
        Property::Sum => |s, _| s.same.abs_diff(s.cross) <= 1,
        Property::Product => |s, m| s.both_one.abs_diff(m - s.both_one) <= 1,
        Property::Orient23 => |s, _| orientation_feasible(s.same, s.cross).is_some(),
    }
}

/// First accepted labeling in enumeration order, with its 1-based rank, and
/// the number of labelings examined.
fn first_accepted(
    g: &Graph,
    domain: u16,
    accept: fn(EdgeSplit, usize) -> bool,
) -> (Option<VertexLabeling>, u64) {
    let adj = g.adjacency();
    let m = g.edge_count();
    let mut examined = 0u64;
    for f in FriendlyLabelings::new(domain) {
        examined += 1;
        if accept(edge_split(&adj, m, f.labels), m) {
            return (Some(f), examined);
        }
    }
    (None, examined)
}

/// `[count labeled 0, count labeled 1]` under a symmetric rule.
pub fn induced_edge_counts(g: &Graph, f: &VertexLabeling, rule: EdgeLabelRule) -> Result<[usize; 2]> {
    if !rule.is_symmetric() {
        return Err(CordialError::MissingOrientation);
    }
    let mut counts = [0usize; 2];
    for (i, j) in g.edge_list() {
        counts[rule.label(f.label(i), f.label(j)) as usize] += 1;
    }
    Ok(counts)
}

/// Some `(plus, minus)` with `plus + minus = cross` making `{same, plus, minus}`
/// 3-friendly, scanning `plus` upward from 0.
pub fn orientation_feasible(same: usize, cross: usize) -> Option<(usize, usize)> {
    (0..=cross).map(|plus| (plus, cross - plus)).find(|&(p, q)| {
        let hi = same.max(p).max(q);
        let lo = same.min(p).min(q);
        hi - lo <= 1
    })
}

fn symmetric_verdict(g: &Graph, property: Property, domain: Domain) -> Result<Verdict> {
    let (found, examined) = first_accepted(g, domain_mask(g, domain)?, accept_fn(property));
    Ok(Verdict {
        decision: found.is_some(),
        witness: found.map(|labeling| Witness { labeling, orientation: None }),
        labelings_examined: examined,
    })
}

pub fn check_sum_cordial(g: &Graph) -> Result<Verdict> {
    symmetric_verdict(g, Property::Sum, Domain::NonIsolated)
}

pub fn check_product_cordial(g: &Graph) -> Result<Verdict> {
    symmetric_verdict(g, Property::Product, Domain::NonIsolated)
}

pub fn check_23_orientable(g: &Graph) -> Result<Verdict> {
    check_23_orientable_in(g, Domain::NonIsolated)
}

/// Orientation realising a feasible split: the first `plus` cross edges in
/// slot order point from their 0-end to their 1-end, the rest the other way,
/// and same-label edges keep the default direction.
pub fn split_orientation(g: &Graph, f: &VertexLabeling, plus: usize) -> Orientation {
    let n = g.n();
    let mut bits = 0u128;
    let mut cross_seen = 0;
    for (pos, k) in g.edge_slots().enumerate() {
        let (i, j) = edge_pair(n, k);
        if f.label(i) == f.label(j) {
            continue;
        }
        let forward_is_plus = f.label(i) == 0;
        let want_plus = cross_seen < plus;
        if forward_is_plus != want_plus {
            bits |= 1 << pos;
        }
        cross_seen += 1;
    }
    Orientation::new(bits, g.edge_count())
}

fn check_23_orientable_in(g: &Graph, domain: Domain) -> Result<Verdict> {
    let (found, examined) = first_accepted(g, domain_mask(g, domain)?, accept_fn(Property::Orient23));
    let witness = found.map(|labeling| {
        let split = edge_split(&g.adjacency(), g.edge_count(), labeling.labels);
        let (plus, _) = orientation_feasible(split.same, split.cross).expect("accepted labeling");
        Witness { labeling, orientation: Some(split_orientation(g, &labeling, plus)) }
    });
    Ok(Verdict { decision: witness.is_some(), witness, labelings_examined: examined })
}

/// Decides `property` with labelings over the given domain.
pub fn check_in(g: &Graph, property: Property, domain: Domain) -> Result<Verdict> {
    match property {
        Property::Orient23 => check_23_orientable_in(g, domain),
        p => symmetric_verdict(g, p, domain),
    }
}

/// Whether arc labels `f(head) - f(tail)` are 3-friendly over `{-1, 0, +1}`.
pub fn check_23_cordial_digraph(g: &Graph, o: &Orientation, f: &VertexLabeling) -> Result<bool> {
    if o.len() != g.edge_count() {
        return Err(CordialError::OrientationLength { expected: g.edge_count(), got: o.len() });
    }
    if g.support() & !f.domain != 0 || !f.is_friendly() {
        return Err(CordialError::UnfriendlyLabeling);
    }
    let mut counts = [0usize; 3];
    for (tail, head) in o.arcs(g) {
        let label = EdgeLabelRule::SignedDifference.label(f.label(tail), f.label(head));
        counts[(label + 1) as usize] += 1;
    }
    is_k_friendly(&counts, 3)
}

/// Brute force over every friendly labeling and every orientation, using
/// [`check_23_cordial_digraph`] directly. Independent of the split arithmetic.
pub fn oracle_23_orientable(g: &Graph) -> Result<Verdict> {
    let m = g.edge_count();
    if m > ORACLE_MAX_EDGES {
        return Err(CordialError::TooManyEdges { edges: m, limit: ORACLE_MAX_EDGES });
    }
    let mut examined = 0u64;
    for f in friendly_vertex_labelings(g)? {
        examined += 1;
        for bits in 0..1u128 << m {
            let o = Orientation::new(bits, m);
            if check_23_cordial_digraph(g, &o, &f)? {
                return Ok(Verdict {
                    decision: true,
                    witness: Some(Witness { labeling: f, orientation: Some(o) }),
                    labelings_examined: examined,
                });
            }
        }
    }
    Ok(Verdict { decision: false, witness: None, labelings_examined: examined })
}

/// Re-evaluates a witness from scratch.
pub fn verify_witness(g: &Graph, property: Property, w: &Witness) -> bool {
    let f = &w.labeling;
    if g.support() & !f.domain != 0 || !f.is_friendly() || g.is_empty() {
        return false;
    }
    let rule = match property {
        Property::Sum => EdgeLabelRule::SumMod2,
        Property::Product => EdgeLabelRule::Product,
        Property::Orient23 => {
            return match &w.orientation {
                Some(o) => check_23_cordial_digraph(g, o, f).unwrap_or(false),
                None => false,
            };
        }
    };
    induced_edge_counts(g, f, rule)
        .and_then(|c| is_k_friendly(&c, 2))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(tag: &str) -> Graph {
        Graph::named(tag).unwrap()
    }

    fn lab(bits: &str) -> VertexLabeling {
        let labels = bits.chars().enumerate().fold(0u16, |a, (v, c)| a | ((c == '1') as u16) << v);
        VertexLabeling::new(labels, ((1u32 << bits.len()) - 1) as u16).unwrap()
    }

    #[test]
    fn k_friendly_examples() {
        assert!(is_k_friendly(&[2, 2], 2).unwrap());
        assert!(!is_k_friendly(&[3, 1], 2).unwrap());
        assert!(is_k_friendly(&[2, 2, 1], 3).unwrap());
        assert!(matches!(is_k_friendly(&[1, 1], 3), Err(CordialError::CountsLength { .. })));
    }

    #[test]
    fn labeling_streams() {
        let single: Vec<_> = friendly_vertex_labelings(&g("k2")).unwrap().collect();
        assert_eq!(single.iter().map(|f| f.labels()).collect::<Vec<_>>(), vec![0b01, 0b10]);
        assert_eq!(friendly_vertex_labelings(&g("2k2")).unwrap().count(), 6);
        let tri: Vec<_> = friendly_vertex_labelings(&g("triangle")).unwrap().map(|f| f.labels()).collect();
        assert_eq!(tri, vec![0b001, 0b010, 0b011, 0b100, 0b101, 0b110]);
        assert!(matches!(friendly_vertex_labelings(&Graph::empty(3).unwrap()), Err(CordialError::Edgeless)));
    }

    #[test]
    fn labelings_cover_support_only() {
        let h = Graph::new(7, &[(1, 3), (3, 6), (5, 6)]).unwrap();
        let all: Vec<_> = friendly_vertex_labelings(&h).unwrap().collect();
        assert_eq!(all.len() as u64, friendly_labeling_count(4));
        assert!(all.iter().all(|f| f.labels() & !h.support() == 0 && f.is_friendly()));
        assert!(all.windows(2).all(|w| w[0].labels() < w[1].labels()));
    }

    #[test]
    fn induced_counts_examples() {
        assert_eq!(induced_edge_counts(&g("2k2"), &lab("1100"), EdgeLabelRule::SumMod2).unwrap(), [2, 0]);
        assert_eq!(induced_edge_counts(&g("k13"), &lab("1100"), EdgeLabelRule::Product).unwrap(), [2, 1]);
        assert_eq!(induced_edge_counts(&g("triangle"), &lab("001"), EdgeLabelRule::SumMod2).unwrap(), [1, 2]);
        assert!(matches!(
            induced_edge_counts(&g("triangle"), &lab("001"), EdgeLabelRule::SignedDifference),
            Err(CordialError::MissingOrientation)
        ));
    }

    #[test]
    fn sum_cordial_examples() {
        assert!(check_sum_cordial(&g("p3")).unwrap().decision);
        let v = check_sum_cordial(&g("2k2")).unwrap();
        assert!(!v.decision && v.witness.is_none());
        assert_eq!(v.labelings_examined, 6);
        assert!(!check_sum_cordial(&Graph::complete(4).unwrap()).unwrap().decision);
        assert!(matches!(check_sum_cordial(&Graph::empty(4).unwrap()), Err(CordialError::Edgeless)));
    }

    #[test]
    fn product_cordial_examples() {
        for tag in ["triangle", "p4", "k13", "2-star+k2", "3k2"] {
            assert!(check_product_cordial(&g(tag)).unwrap().decision, "{tag}");
        }
        assert!(!check_product_cordial(&g("c4")).unwrap().decision);
        assert!(!check_product_cordial(&g("paw")).unwrap().decision);
    }

    #[test]
    fn feasible_splits() {
        assert_eq!(orientation_feasible(1, 2), Some((1, 1)));
        assert_eq!(orientation_feasible(0, 3), None);
        let split = orientation_feasible(5, 9).unwrap();
        assert!(split == (4, 5) || split == (5, 4));
        // brute force over every split
        for s in 0..12 {
            for d in 0..12 {
                let any = (0..=d).any(|p| is_k_friendly(&[s, p, d - p], 3).unwrap());
                assert_eq!(orientation_feasible(s, d).is_some(), any, "s={s} d={d}");
            }
        }
    }

    #[test]
    fn orientable_examples() {
        let v = check_23_orientable(&g("triangle")).unwrap();
        assert!(v.decision);
        assert!(verify_witness(&g("triangle"), Property::Orient23, v.witness.as_ref().unwrap()));
        assert!(!check_23_orientable(&g("3k2")).unwrap().decision);
        assert!(check_23_orientable(&Graph::complete(5).unwrap()).unwrap().decision);
        assert!(!check_23_orientable(&Graph::complete(6).unwrap()).unwrap().decision);
    }

    #[test]
    fn digraph_examples() {
        let tri = g("triangle");
        let f = lab("001");
        // edges (0,1) (0,2) (1,2): labels 0, +1 for 0->2, -1 for 2->1
        let o = Orientation::new(0b100, 3);
        assert!(check_23_cordial_digraph(&tri, &o, &f).unwrap());
        assert!(check_23_cordial_digraph(&g("k2"), &Orientation::new(0, 1), &lab("01")).unwrap());
        assert!(!check_23_cordial_digraph(&g("2k2"), &Orientation::new(0, 2), &lab("0101")).unwrap());
        assert!(matches!(
            check_23_cordial_digraph(&tri, &Orientation::new(0, 2), &f),
            Err(CordialError::OrientationLength { .. })
        ));
        assert!(matches!(
            check_23_cordial_digraph(&tri, &o, &lab("111")),
            Err(CordialError::UnfriendlyLabeling)
        ));
    }

    #[test]
    fn oracle_examples() {
        assert!(!oracle_23_orientable(&g("3k2")).unwrap().decision);
        assert!(oracle_23_orientable(&g("k13")).unwrap().decision);
        let big = Graph::complete(7).unwrap();
        assert!(matches!(oracle_23_orientable(&big), Err(CordialError::TooManyEdges { .. })));
    }

    #[test]
    fn ambient_domain_reproduces_isolated_vertex_remarks() {
        let on5 = Graph::new(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(!check_sum_cordial(&on5).unwrap().decision);
        assert!(check_in(&on5, Property::Sum, Domain::Ambient).unwrap().decision);
        assert!(!check_in(&g("2k2"), Property::Sum, Domain::Ambient).unwrap().decision);

        let on7 = Graph::new(7, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(!check_23_orientable(&on7).unwrap().decision);
        let v = check_in(&on7, Property::Orient23, Domain::Ambient).unwrap();
        assert!(v.decision);
        assert!(verify_witness(&on7, Property::Orient23, v.witness.as_ref().unwrap()));
        assert!(!check_in(&g("3k2"), Property::Orient23, Domain::Ambient).unwrap().decision);
    }

    #[test]
    fn bitstrings() {
        let f = VertexLabeling::new(0b0100, 0b0110).unwrap();
        assert_eq!(f.to_bitstring(4), "-01-");
        assert_eq!(Orientation::new(0b10, 3).to_bitstring(), "010");
        assert!(VertexLabeling::new(0b1, 0b10).is_err());
    }
}
