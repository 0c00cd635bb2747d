//! Linear operators on the semimodule of graphs on `n` vertices (addition is
//! union) and brute-force tests of strong preservation.
//!
//! An operator is stored as its table of edge images: `images[k]` is the image
//! of the single-edge graph in slot `k`, and a general graph maps to the union
//! of the images of its edges. Every linear operator has exactly this form.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CordialError, Result};
use crate::graph::{check_permutation, choose2, edge_index, edge_pair, Graph};
use crate::labeling::Property;
use crate::par;

/// Vertex ceiling for full-membership scans (`2^15` graphs at `n = 6`).
pub const MEMBERSHIP_MAX_N: usize = 6;
/// Vertex ceiling for injectivity/surjectivity scans.
pub const IMAGE_SCAN_MAX_N: usize = 5;
/// Vertex ceiling for exhaustive search over edge bijections.
pub const BIJECTIVE_MAX_N: usize = 5;
/// Vertex ceiling for checking every vertex permutation.
pub const VERTEX_ONLY_MAX_N: usize = 8;
/// At most this many preserving operators are kept; the rest are only counted.
pub const OPERATOR_LIST_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOperator {
    n: usize,
    images: Vec<Graph>,
}

impl LinearOperator {
    pub fn new(n: usize, images: Vec<Graph>) -> Result<Self> {
        let slots = choose2(n);
        if images.len() != slots {
            return Err(CordialError::Table(format!(
                "{} images given, {} edge slots on {n} vertices",
                images.len(),
                slots
            )));
        }
        if let Some(g) = images.iter().find(|g| g.n() != n) {
            return Err(CordialError::SizeMismatch { left: n, right: g.n() });
        }
        Ok(LinearOperator { n, images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let images = (0..choose2(n))
            .map(|k| Graph::from_bits_unchecked(n, 1u128 << k))
            .collect();
        LinearOperator::new(n, images)
    }

    /// Every edge maps to `g`.
    pub fn constant(g: &Graph) -> Self {
        LinearOperator { n: g.n(), images: vec![*g; g.slot_count()] }
    }

    /// Edge slot `k` maps to edge slot `map[k]`.
    pub fn from_edge_map(n: usize, map: &[usize]) -> Result<Self> {
        let slots = choose2(n);
        if map.len() != slots || map.iter().any(|&t| t >= slots) {
            return Err(CordialError::Table("edge map out of range".into()));
        }
        let images = map.iter().map(|&t| Graph::from_bits_unchecked(n, 1u128 << t)).collect();
        LinearOperator::new(n, images)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[Graph] {
        &self.images
    }

    #[inline]
    fn apply_bits(&self, mut bits: u128) -> u128 {
        let mut out = 0u128;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= self.images[k].edges();
        }
        out
    }

    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        if g.n() != self.n {
            return Err(CordialError::SizeMismatch { left: self.n, right: g.n() });
        }
        Ok(Graph::from_bits_unchecked(self.n, self.apply_bits(g.edges())))
    }

    /// Target slot of each edge, if every image is a single edge.
    pub fn edge_map(&self) -> Option<Vec<usize>> {
        self.images
            .iter()
            .map(|g| (g.edge_count() == 1).then(|| g.edges().trailing_zeros() as usize))
            .collect()
    }

    /// Every image is a single edge and no two coincide.
    pub fn is_edge_bijection(&self) -> bool {
        self.edge_map().is_some_and(|m| m.iter().all_unique())
    }

    /// One line per source edge: image slot indices separated by spaces, `-` for `O`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for img in &self.images {
            if img.is_empty() {
                out.push('-');
            } else {
                out.push_str(&img.edge_slots().map(|k| k.to_string()).join(" "));
            }
            out.push('\n');
        }
        out
    }

    /// Parses [`LinearOperator::to_table`] output; `n` is inferred from the line count.
    pub fn from_table(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().map(str::trim).collect();
        let lines = match lines.iter().rposition(|l| !l.is_empty()) {
            Some(last) => &lines[..=last],
            None => return Err(CordialError::Table("empty table".into())),
        };
        let n = (2..=crate::graph::MAX_VERTICES)
            .find(|&n| choose2(n) == lines.len())
            .ok_or_else(|| CordialError::Table(format!("{} lines is not C(n,2) for 2 <= n <= 16", lines.len())))?;
        let slots = lines.len();
        let mut images = Vec::with_capacity(slots);
        for (row, line) in lines.iter().enumerate() {
            let mut bits = 0u128;
            if *line != "-" {
                for tok in line.split_whitespace() {
                    let k: usize = tok
                        .parse()
                        .map_err(|_| CordialError::Table(format!("line {}: bad index `{tok}`", row + 1)))?;
                    if k >= slots {
                        return Err(CordialError::Table(format!("line {}: index {k} >= {slots}", row + 1)));
                    }
                    bits |= 1u128 << k;
                }
                if bits == 0 {
                    return Err(CordialError::Table(format!("line {}: empty, use `-` for O", row + 1)));
                }
            }
            images.push(Graph::from_bits_unchecked(n, bits));
        }
        LinearOperator::new(n, images)
    }
}

/// Edge `(i, j)` maps to `(perm[i], perm[j])`.
pub fn vertex_permutation_operator(perm: &[usize]) -> Result<LinearOperator> {
    let n = perm.len();
    if n == 0 {
        return Err(CordialError::NotAPermutation);
    }
    check_permutation(perm, n)?;
    let map: Vec<usize> = (0..choose2(n))
        .map(|k| {
            let (i, j) = edge_pair(n, k);
            edge_index(n, perm[i], perm[j])
        })
        .collect();
    LinearOperator::from_edge_map(n, &map)
}

/// The vertex permutation inducing `op`, if there is one.
pub fn is_vertex_permutation(op: &LinearOperator) -> Option<Vec<usize>> {
    let n = op.n;
    let map = op.edge_map()?;
    if !map.iter().all_unique() {
        return None;
    }
    if n <= 2 {
        return Some((0..n).collect());
    }
    let mut perm = Vec::with_capacity(n);
    for v in 0..n {
        let mut common = u32::MAX;
        for w in (0..n).filter(|&w| w != v) {
            let (a, b) = edge_pair(n, map[edge_index(n, v, w)]);
            common &= 1 << a | 1 << b;
        }
        if common.count_ones() != 1 {
            return None;
        }
        perm.push(common.trailing_zeros() as usize);
    }
    let induced = vertex_permutation_operator(&perm).ok()?;
    (induced == *op).then_some(perm)
}

/// No edge maps to `O`; by linearity only `O` then maps to `O`.
pub fn is_nonsingular(op: &LinearOperator) -> bool {
    op.images.iter().all(|g| !g.is_empty())
}

fn check_n(n: usize, cap: usize, what: &str) -> Result<()> {
    if n > cap {
        Err(CordialError::Budget(format!("{what} needs n <= {cap}, got {n}")))
    } else {
        Ok(())
    }
}

/// `(injective, surjective)` from a scan over every graph on `n` vertices.
/// Injectivity is "no image repeats", surjectivity is "every graph is hit".
pub fn image_scan(op: &LinearOperator) -> Result<(bool, bool)> {
    check_n(op.n, IMAGE_SCAN_MAX_N, "image scan")?;
    let total = 1usize << choose2(op.n);
    let mut hit = vec![false; total];
    let mut injective = true;
    for g in 0..total {
        let img = op.apply_bits(g as u128) as usize;
        injective &= !hit[img];
        hit[img] = true;
    }
    Ok((injective, hit.into_iter().all(|h| h)))
}

pub fn is_injective(op: &LinearOperator) -> Result<bool> {
    image_scan(op).map(|(inj, _)| inj)
}

pub fn is_surjective(op: &LinearOperator) -> Result<bool> {
    image_scan(op).map(|(_, sur)| sur)
}

/// `a ∘ b`: apply `b`, then `a`.
pub fn compose(a: &LinearOperator, b: &LinearOperator) -> Result<LinearOperator> {
    if a.n != b.n {
        return Err(CordialError::SizeMismatch { left: a.n, right: b.n });
    }
    let images = b.images.iter().map(|g| Graph::from_bits_unchecked(a.n, a.apply_bits(g.edges()))).collect();
    Ok(LinearOperator { n: a.n, images })
}

/// Least `d >= 1` with `op^d` idempotent, and that power.
pub fn idempotent_power(op: &LinearOperator) -> (LinearOperator, usize) {
    let mut power = op.clone();
    let mut d = 1;
    loop {
        let square = compose(&power, &power).expect("same n");
        if square == power {
            return (power, d);
        }
        power = compose(&power, op).expect("same n");
        d += 1;
    }
}

/// `σ⁻¹ ∘ op ∘ σ` for the vertex permutation `σ = perm`.
pub fn conjugate(op: &LinearOperator, perm: &[usize]) -> Result<LinearOperator> {
    let sigma = vertex_permutation_operator(perm)?;
    let mut inverse = vec![0; perm.len()];
    for (v, &p) in perm.iter().enumerate() {
        inverse[p] = v;
    }
    let sigma_inv = vertex_permutation_operator(&inverse)?;
    compose(&sigma_inv, &compose(op, &sigma)?)
}

/// Class membership of every graph on `n` vertices, indexed by edge bitset.
///
/// The edgeless graph counts as a member (vacuously: no labels to balance).
/// Linear operators fix `O`, so this choice never decides a verdict on its own.
#[derive(Debug)]
pub struct Membership {
    n: usize,
    property: Property,
    words: Vec<u64>,
}

impl Membership {
    /// Builds a fresh table; [`membership`] caches these.
    pub fn build(n: usize, property: Property) -> Result<Self> {
        check_n(n, MEMBERSHIP_MAX_N, "membership table")?;
        if n == 0 {
            return Err(CordialError::VertexCount(0));
        }
        let total = 1usize << choose2(n);
        let words = par::map_range(total.div_ceil(64), |w| {
            let mut word = 0u64;
            for b in 0..64.min(total - w * 64) {
                let g = Graph::from_bits_unchecked(n, (w * 64 + b) as u128);
                if g.is_empty() || property.holds(&g).expect("non-empty") {
                    word |= 1 << b;
                }
            }
            word
        });
        Ok(Membership { n, property, words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn property(&self) -> Property {
        self.property
    }

    #[inline]
    pub fn contains_bits(&self, bits: usize) -> bool {
        self.words[bits / 64] >> (bits % 64) & 1 == 1
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.contains_bits(g.edges() as usize)
    }

    pub fn member_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Shared membership table for `(n, property)`, built on first use.
pub fn membership(n: usize, property: Property) -> Result<Arc<Membership>> {
    type Cache = Mutex<HashMap<(usize, Property), Arc<Membership>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("cache lock").get(&(n, property)) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(Membership::build(n, property)?);
    cache.lock().expect("cache lock").insert((n, property), Arc::clone(&table));
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreserverVerdict {
    pub strongly_preserves: bool,
    /// A graph `G` with `G` in the class xor `op(G)` in the class; the least
    /// such edge bitset.
    pub counterexample: Option<Graph>,
}

fn first_mismatch(op: &LinearOperator, table: &Membership) -> Option<usize> {
    let slots = choose2(op.n);
    let images: Vec<u32> = op.images.iter().map(|g| g.edges() as u32).collect();
    let mut img = vec![0u32; 1 << slots];
    for g in 1..1usize << slots {
        let low = g.trailing_zeros() as usize;
        img[g] = img[g & (g - 1)] | images[low];
        if table.contains_bits(g) != table.contains_bits(img[g] as usize) {
            return Some(g);
        }
    }
    None
}

/// Whether `G ∈ X ⟺ op(G) ∈ X` for every graph `G` on `op.n()` vertices.
pub fn strongly_preserves(op: &LinearOperator, property: Property) -> Result<PreserverVerdict> {
    let table = membership(op.n, property)?;
    let counterexample = first_mismatch(op, &table).map(|g| Graph::from_bits_unchecked(op.n, g as u128));
    Ok(PreserverVerdict { strongly_preserves: counterexample.is_none(), counterexample })
}

fn in_class(property: Property, g: &Graph) -> bool {
    g.is_empty() || property.holds(g).unwrap_or(false)
}

/// Re-checks a counterexample with the checkers, bypassing membership tables.
pub fn verify_counterexample(op: &LinearOperator, property: Property, g: &Graph) -> bool {
    match op.apply(g) {
        Ok(img) => in_class(property, g) != in_class(property, &img),
        Err(_) => false,
    }
}

/// For an operator sending some edge `E` to `O`: a graph `H ∋ E` outside the
/// class whose reduction `H \ E` is inside it. Since `op(H) = op(H \ E)`, one
/// of the two is a counterexample. `H` is `2K2` (sum), `C4` (product) or
/// `3K2` (orient23), built around `E`.
pub fn singular_witness_pair(op: &LinearOperator, property: Property) -> Option<(Graph, Graph)> {
    let n = op.n;
    let min_n = if property == Property::Orient23 { 6 } else { 4 };
    if n < min_n {
        return None;
    }
    let k = op.images.iter().position(|g| g.is_empty())?;
    let (a, b) = edge_pair(n, k);
    let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
    let h_edges = match property {
        Property::Sum => vec![(a, b), (rest[0], rest[1])],
        Property::Product => vec![(a, b), (b, rest[0]), (rest[0], rest[1]), (rest[1], a)],
        Property::Orient23 => vec![(a, b), (rest[0], rest[1]), (rest[2], rest[3])],
    };
    let h = Graph::new(n, &h_edges).ok()?;
    let reduced = Graph::from_bits_unchecked(n, h.edges() & !(1u128 << k));
    Some((h, reduced))
}

/// How candidate operators are generated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every edge bijection; `n <= 5`.
    ExhaustiveBijective,
    /// Every vertex permutation. Full membership scan for `n <= 6`, otherwise
    /// agreement on `samples` seeded random graphs.
    VertexOnly { samples: usize, seed: u64 },
    /// `count` uniform random edge bijections; vertex-induced draws are skipped.
    SampledNonbijective { count: usize, seed: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Number of strongly preserving operators found.
    pub preserver_count: u64,
    /// The first [`OPERATOR_LIST_CAP`] of them, sorted by image table.
    pub operators: Vec<LinearOperator>,
    /// Candidates fully checked (complete operators) or tree nodes (pruned search).
    pub candidates_examined: u64,
    /// Partial assignments cut by an explicit mismatching graph (pruned search).
    pub pruned: u64,
    /// Sampled draws that turned out vertex-induced and were skipped.
    pub vertex_induced_skipped: u64,
    /// Rejected operators whose counterexample was re-verified by the checkers.
    pub failures_verified: u64,
}

pub fn search_strong_preservers(n: usize, property: Property, mode: SearchMode) -> Result<SearchOutcome> {
    match mode {
        SearchMode::ExhaustiveBijective if n <= 4 => exhaustive_bijective_plain(n, property),
        SearchMode::ExhaustiveBijective => exhaustive_bijective_pruned(n, property),
        SearchMode::VertexOnly { samples, seed } => vertex_only(n, property, samples, seed),
        SearchMode::SampledNonbijective { count, seed } => sampled_bijections(n, property, count, seed),
    }
}

fn finish(mut out: SearchOutcome) -> SearchOutcome {
    out.preserver_count = out.preserver_count.max(out.operators.len() as u64);
    out.operators.sort();
    out.operators.truncate(OPERATOR_LIST_CAP);
    out
}

/// Checks all `C(n,2)!` edge bijections with a full membership scan each; `n <= 4`.
pub fn exhaustive_bijective_plain(n: usize, property: Property) -> Result<SearchOutcome> {
    check_n(n, 4, "unpruned bijective search")?;
    let table = membership(n, property)?;
    let slots = choose2(n);
    let maps: Vec<Vec<usize>> = (0..slots).permutations(slots).collect();
    let results = par::map(&maps, |map| {
        let op = LinearOperator::from_edge_map(n, map).expect("valid map");
        match first_mismatch(&op, &table) {
            None => (Some(op), false),
            Some(g) => (None, verify_counterexample(&op, property, &Graph::from_bits_unchecked(n, g as u128))),
        }
    });
    let mut out = SearchOutcome { candidates_examined: maps.len() as u64, ..Default::default() };
    for (op, verified) in results {
        match op {
            Some(op) => out.operators.push(op),
            None => out.failures_verified += verified as u64,
        }
    }
    Ok(finish(out))
}

struct Backtrack<'a> {
    table: &'a Membership,
    slots: usize,
    img: Vec<u32>,
    map: Vec<usize>,
    found: Vec<Vec<usize>>,
    found_count: u64,
    nodes: u64,
    pruned: u64,
}

impl Backtrack<'_> {
    /// Assigns `target` to edge `k`, filling images of subsets whose top edge is
    /// `k`, and reports whether all of them agree on membership.
    fn assign(&mut self, k: usize, target: usize) -> bool {
        self.nodes += 1;
        let top = 1usize << k;
        for s in 0..top {
            let g = s | top;
            let image = self.img[s] | 1 << target;
            self.img[g] = image;
            if self.table.contains_bits(g) != self.table.contains_bits(image as usize) {
                self.pruned += 1;
                return false;
            }
        }
        self.map[k] = target;
        true
    }

    fn descend(&mut self, k: usize, used: u32) {
        if k == self.slots {
            self.found_count += 1;
            if self.found.len() < OPERATOR_LIST_CAP {
                self.found.push(self.map.clone());
            }
            return;
        }
        for target in 0..self.slots {
            if used >> target & 1 == 0 && self.assign(k, target) {
                self.descend(k + 1, used | 1 << target);
            }
        }
    }
}

/// Edge bijections built slot by slot. After fixing the image of slot `k`,
/// every graph whose highest edge is `k` is now fully mapped and its
/// membership is compared with that of its image; a mismatch is a concrete
/// counterexample for every completion, so the branch is dropped. Completed
/// assignments have passed all `2^C(n,2)` comparisons. `n <= 5`.
pub fn exhaustive_bijective_pruned(n: usize, property: Property) -> Result<SearchOutcome> {
    check_n(n, BIJECTIVE_MAX_N, "bijective search")?;
    let table = membership(n, property)?;
    let slots = choose2(n);
    if slots < 2 {
        return exhaustive_bijective_plain(n, property);
    }
    let roots: Vec<(usize, usize)> =
        (0..slots).cartesian_product(0..slots).filter(|(a, b)| a != b).collect();
    let parts = par::map(&roots, |&(t0, t1)| {
        let mut bt = Backtrack {
            table: &table,
            slots,
            img: vec![0; 1 << slots],
            map: vec![0; slots],
            found: Vec::new(),
            found_count: 0,
            nodes: 0,
            pruned: 0,
        };
        if bt.assign(0, t0) && bt.assign(1, t1) {
            bt.descend(2, 1 << t0 | 1 << t1);
        }
        (bt.found, bt.found_count, bt.nodes, bt.pruned)
    });
    // roots and targets are visited in ascending order, so maps arrive sorted
    let mut out = SearchOutcome::default();
    for (found, count, nodes, pruned) in parts {
        out.candidates_examined += nodes;
        out.pruned += pruned;
        out.preserver_count += count;
        for map in found.into_iter().take(OPERATOR_LIST_CAP - out.operators.len()) {
            let op = LinearOperator::from_edge_map(n, &map)?;
            debug_assert!(first_mismatch(&op, &table).is_none());
            out.operators.push(op);
        }
    }
    Ok(finish(out))
}

fn vertex_only(n: usize, property: Property, samples: usize, seed: u64) -> Result<SearchOutcome> {
    check_n(n, VERTEX_ONLY_MAX_N, "vertex-permutation sweep")?;
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let passing: Vec<Option<LinearOperator>> = if n <= MEMBERSHIP_MAX_N {
        let table = membership(n, property)?;
        par::map(&perms, |p| {
            let op = vertex_permutation_operator(p).expect("permutation");
            first_mismatch(&op, &table).is_none().then_some(op)
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let slots = choose2(n);
        let sample: Vec<(Graph, bool)> = (0..samples)
            .map(|_| {
                let bits = rand::Rng::gen::<u128>(&mut rng) & ((1u128 << slots) - 1);
                let g = Graph::from_bits_unchecked(n, bits);
                (g, in_class(property, &g))
            })
            .collect();
        par::map(&perms, |p| {
            let agrees = sample.iter().all(|(g, member)| in_class(property, &g.permute_unchecked(p)) == *member);
            agrees.then(|| vertex_permutation_operator(p).expect("permutation"))
        })
    };
    let operators: Vec<LinearOperator> = passing.into_iter().flatten().collect();
    Ok(finish(SearchOutcome { candidates_examined: perms.len() as u64, operators, ..Default::default() }))
}

fn sampled_bijections(n: usize, property: Property, count: usize, seed: u64) -> Result<SearchOutcome> {
    check_n(n, MEMBERSHIP_MAX_N, "sampled bijective search")?;
    let table = membership(n, property)?;
    let slots = choose2(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let maps: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let mut map: Vec<usize> = (0..slots).collect();
            map.shuffle(&mut rng);
            map
        })
        .collect();
    let results = par::map(&maps, |map| {
        let op = LinearOperator::from_edge_map(n, map).expect("valid map");
        if is_vertex_permutation(&op).is_some() {
            return Draw::VertexInduced;
        }
        match first_mismatch(&op, &table) {
            None => Draw::Preserves(op),
            Some(g) => Draw::Fails(verify_counterexample(&op, property, &Graph::from_bits_unchecked(n, g as u128))),
        }
    });
    let mut out = SearchOutcome { candidates_examined: count as u64, ..Default::default() };
    for r in results {
        match r {
            Draw::VertexInduced => out.vertex_induced_skipped += 1,
            Draw::Preserves(op) => out.operators.push(op),
            Draw::Fails(v) => out.failures_verified += v as u64,
        }
    }
    Ok(finish(out))
}

enum Draw {
    VertexInduced,
    Preserves(LinearOperator),
    Fails(bool),
}
