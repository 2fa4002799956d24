//! The partition of a prime {P5, co-P5, C5}-free graph that contains a
//! co-C4 into `X_0..X_m` and `Y_0..Y_m`, with a builder and a clause-by-clause
//! validator, plus the "some vertex of A is complete to B" lemma.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::detect::{find_induced, is_free, ForbiddenWitness, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::modular::find_proper_homogeneous_set;

pub(crate) const CLASS: [Pattern; 3] = [Pattern::P5, Pattern::CoP5, Pattern::C5];

/// One failed precondition of [`lemma_abx`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AbxViolation {
    OutOfRange(usize),
    Contains(ForbiddenWitness),
    AEmpty,
    BEmpty,
    Overlap(usize),
    TInside,
    TAdjacentToA(usize),
    TMissesB(usize),
    NoNeighborInA(usize),
    ADisconnected,
}

/// Returns a vertex of `a` complete to `b`: the one with the most neighbors
/// in `b`, least label among ties.
///
/// Preconditions: `g` is {P5, co-P5, C5}-free; `a`, `b` non-empty and
/// disjoint; `t` outside both, anticomplete to `a` and complete to `b`;
/// every vertex of `b` has a neighbor in `a`; `G[a]` connected. All failed
/// preconditions are reported together.
pub fn lemma_abx(g: &Graph, a: &VertexSet, b: &VertexSet, t: usize) -> Result<usize> {
    let mut bad = Vec::new();
    for s in [a, b] {
        if let Some(v) = s.max().filter(|&v| v >= g.n()) {
            bad.push(AbxViolation::OutOfRange(v));
        }
    }
    if t >= g.n() {
        bad.push(AbxViolation::OutOfRange(t));
    }
    if !bad.is_empty() {
        return Err(Error::AbxPrecondition(bad));
    }
    if let Some(w) = is_free(g, &CLASS).into_witness() {
        bad.push(AbxViolation::Contains(w));
    }
    if a.is_empty() {
        bad.push(AbxViolation::AEmpty);
    }
    if b.is_empty() {
        bad.push(AbxViolation::BEmpty);
    }
    if let Some(v) = a.intersection(b).min() {
        bad.push(AbxViolation::Overlap(v));
    }
    if a.contains(t) || b.contains(t) {
        bad.push(AbxViolation::TInside);
    }
    if let Some(v) = g.neighbors(t).intersection(a).min() {
        bad.push(AbxViolation::TAdjacentToA(v));
    }
    if let Some(v) = b.iter().find(|&v| v != t && !g.has_edge(t, v)) {
        bad.push(AbxViolation::TMissesB(v));
    }
    if let Some(v) = b.iter().find(|&v| !g.neighbors(v).intersects(a)) {
        bad.push(AbxViolation::NoNeighborInA(v));
    }
    if !g.is_connected_set(a) {
        bad.push(AbxViolation::ADisconnected);
    }
    if !bad.is_empty() {
        return Err(Error::AbxPrecondition(bad));
    }
    let best =
        a.iter().max_by_key(|&v| (g.neighbors(v).intersection(b).len(), std::cmp::Reverse(v))).expect("a is non-empty");
    debug_assert!(b.is_subset(g.neighbors(best)));
    Ok(best)
}

/// A big anticomponent `Z` of `Y` with `X_Z`, the vertices of `X_0` mixed on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Attachment {
    pub anticomponent: VertexSet,
    pub mixed: VertexSet,
}

/// `xs[0]` is `X_0`; `xs[i]`, `ys[i]` for `i >= 1` are `X_i`, `Y_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructurePartition {
    pub xs: Vec<VertexSet>,
    pub ys: Vec<VertexSet>,
    /// One entry per big anticomponent of `Y`, ordered by least element.
    pub attachments: Vec<Attachment>,
    /// Index into `attachments` of an anticomponent `Z` whose `X_Z` is
    /// anticomplete to every other big anticomponent; `None` when `Y` is a
    /// clique.
    pub isolated: Option<usize>,
}

impl StructurePartition {
    pub fn m(&self) -> usize {
        self.xs.len().saturating_sub(1)
    }

    pub fn x(&self) -> VertexSet {
        union_all(&self.xs)
    }

    pub fn y(&self) -> VertexSet {
        union_all(&self.ys)
    }
}

fn union_all(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::default(), |acc, s| acc.union(s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Clause {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::I => "i",
            Clause::II => "ii",
            Clause::III => "iii",
            Clause::IV => "iv",
            Clause::V => "v",
            Clause::VI => "vi",
            Clause::VII => "vii",
            Clause::VIII => "viii",
            Clause::IX => "ix",
        };
        write!(f, "({s})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureViolation {
    pub clause: Clause,
    pub detail: String,
}

/// Vertex sets of the components of `G[s]` with at least two vertices.
pub fn big_components(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    g.components(s).into_iter().filter(|c| c.len() >= 2).collect()
}

/// Checks every clause, reporting each failure with a concrete witness.
pub fn validate_structure_partition(g: &Graph, sp: &StructurePartition) -> Result<Vec<StructureViolation>> {
    check_partition(g, sp.xs.iter().chain(sp.ys.iter()))?;
    if sp.xs.len() != sp.ys.len() || sp.xs.is_empty() {
        return Err(Error::NotPartition(format!("{} X-sets but {} Y-sets", sp.xs.len(), sp.ys.len())));
    }
    let mut out = Vec::new();
    let mut bad = |clause, detail: String| out.push(StructureViolation { clause, detail });
    let m = sp.m();
    let x0 = &sp.xs[0];
    let x = sp.x();
    let y = sp.y();
    let x_big = x.difference(x0);

    // (i)
    if m < 2 {
        bad(Clause::I, format!("m = {m} < 2"));
    }
    for (i, xi) in sp.xs.iter().enumerate().skip(1) {
        if xi.len() < 2 {
            bad(Clause::I, format!("X_{i} = {xi} has fewer than 2 vertices"));
        } else if !g.is_connected_set(xi) {
            bad(Clause::I, format!("X_{i} = {xi} is not connected"));
        }
    }
    if let Some(v) = x0.iter().find(|&v| g.neighbors(v).intersects(x0)) {
        bad(Clause::I, format!("X_0 is not stable at vertex {v}"));
    }
    for i in 0..=m {
        for j in i + 1..=m {
            if let Some(v) = sp.xs[i].iter().find(|&v| g.neighbors(v).intersects(&sp.xs[j])) {
                bad(Clause::I, format!("vertex {v} of X_{i} has a neighbor in X_{j}"));
            }
        }
    }

    // (ii)
    for i in 1..=m {
        let yi = &sp.ys[i];
        if yi.is_empty() {
            bad(Clause::II, format!("Y_{i} is empty"));
        }
        let rest = x_big.difference(&sp.xs[i]);
        for v in yi.iter() {
            if !g.is_mixed_on(v, &sp.xs[i]) {
                bad(Clause::II, format!("vertex {v} of Y_{i} is not mixed on X_{i}"));
            }
            if !g.is_complete_to(v, &rest) {
                bad(Clause::II, format!("vertex {v} of Y_{i} is not complete to X - (X_{i} u X_0)"));
            }
        }
    }
    for v in sp.ys[0].iter() {
        if !g.is_complete_to(v, &x_big) {
            bad(Clause::II, format!("vertex {v} of Y_0 is not complete to X - X_0"));
        }
    }

    // (iii)
    for i in 0..=m {
        for j in i + 1..=m {
            if let Some(v) = sp.ys[i].iter().find(|&v| !g.is_complete_to(v, &sp.ys[j])) {
                bad(Clause::III, format!("vertex {v} of Y_{i} is not complete to Y_{j}"));
            }
        }
    }

    let anti = g.anticomponents(&y);
    // (iv)
    for z in &anti {
        if let Some(v) = x_big.iter().find(|&v| g.is_mixed_on(v, z)) {
            bad(Clause::IV, format!("vertex {v} of X - X_0 is mixed on anticomponent {z}"));
        }
    }

    // (v)
    for (i, xi) in sp.xs.iter().enumerate().skip(1) {
        if !xi.iter().any(|v| g.is_complete_to(v, &y)) {
            bad(Clause::V, format!("no vertex of X_{i} is complete to Y"));
        }
    }

    // (vi)
    for v in x0.iter() {
        let hits: Vec<_> = anti.iter().filter(|z| g.is_mixed_on(v, z)).collect();
        if hits.len() > 1 {
            bad(Clause::VI, format!("vertex {v} of X_0 is mixed on {} and {}", hits[0], hits[1]));
        }
    }

    // (vii)
    let big: Vec<&VertexSet> = anti.iter().filter(|z| z.len() >= 2).collect();
    let attached: Vec<VertexSet> =
        big.iter().map(|z| VertexSet::from_vertices(g.n(), x0.iter().filter(|&v| g.is_mixed_on(v, z)))).collect();
    for (z, xz) in big.iter().zip(&attached) {
        if xz.is_empty() {
            bad(Clause::VII, format!("no vertex of X_0 is mixed on {z}"));
        }
    }
    for i in 0..big.len() {
        for j in i + 1..big.len() {
            if let Some(v) = attached[i].intersection(&attached[j]).min() {
                bad(Clause::VII, format!("vertex {v} is mixed on both {} and {}", big[i], big[j]));
            }
        }
    }
    let recorded: Vec<(&VertexSet, &VertexSet)> = sp.attachments.iter().map(|a| (&a.anticomponent, &a.mixed)).collect();
    let actual: Vec<(&VertexSet, &VertexSet)> = big.iter().copied().zip(attached.iter()).collect();
    if !same_attachments(&recorded, &actual) {
        bad(Clause::VII, "recorded attachment map differs from the graph".into());
    }

    // (viii)
    for (z, xz) in big.iter().zip(&attached) {
        if !z.iter().any(|v| g.is_anticomplete_to(v, xz)) {
            bad(Clause::VIII, format!("no vertex of {z} is anticomplete to X_Z = {xz}"));
        }
    }

    // (ix)
    let isolated: Vec<usize> = (0..big.len())
        .filter(|&i| (0..big.len()).all(|j| j == i || g.sets_anticomplete(&attached[i], big[j])))
        .collect();
    if !g.is_clique(&y) && isolated.is_empty() {
        bad(Clause::IX, "every big anticomponent Z has X_Z touching another big anticomponent".into());
    }
    match sp.isolated {
        Some(i) if !isolated.contains(&i) => {
            bad(Clause::IX, format!("recorded choice {i} does not have the isolation property"))
        }
        None if !big.is_empty() => bad(Clause::IX, "no choice recorded although Y is not a clique".into()),
        _ => {}
    }
    Ok(out)
}

fn same_attachments(a: &[(&VertexSet, &VertexSet)], b: &[(&VertexSet, &VertexSet)]) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|((z1, x1), (z2, x2))| z1.to_vec() == z2.to_vec() && x1.to_vec() == x2.to_vec())
}

pub(crate) fn check_partition<'a>(g: &Graph, parts: impl Iterator<Item = &'a VertexSet>) -> Result<()> {
    let mut seen = VertexSet::empty(g.n());
    for p in parts {
        g.check_set(p)?;
        if let Some(v) = p.intersection(&seen).min() {
            return Err(Error::NotPartition(format!("vertex {v} appears twice")));
        }
        seen.union_with(p);
    }
    if let Some(v) = g.vertices().difference(&seen).min() {
        return Err(Error::NotPartition(format!("vertex {v} is missing")));
    }
    Ok(())
}

/// Builds the partition after checking that `g` is prime, {P5, co-P5, C5}-free
/// and contains a co-C4.
pub fn build_structure_partition(g: &Graph) -> Result<StructurePartition> {
    if let Some(h) = find_proper_homogeneous_set(g) {
        return Err(Error::NotPrime(h));
    }
    if let Some(w) = is_free(g, &CLASS).into_witness() {
        return Err(Error::Contains(w));
    }
    let seed = find_induced(g, Pattern::CoC4).ok_or(Error::NoCoC4)?;
    build_from_seed(g, &seed)
}

/// The builder proper; preconditions are the caller's business.
pub(crate) fn build_from_seed(g: &Graph, seed: &ForbiddenWitness) -> Result<StructurePartition> {
    let n = g.n();
    let mut x = VertexSet::from_vertices(n, seed.vertices.iter().copied());
    debug_assert!(big_components(g, &x).len() >= 2);
    // grow X one vertex at a time until no single vertex can be added
    loop {
        let mut grew = false;
        for v in 0..n {
            if x.contains(v) {
                continue;
            }
            x.insert(v);
            if big_components(g, &x).len() >= 2 {
                grew = true;
            } else {
                x.remove(v);
            }
        }
        if !grew {
            break;
        }
    }
    let bigs = big_components(g, &x);
    let mut xs = vec![x.difference(&union_all(&bigs))];
    xs.extend(bigs);
    let m = xs.len() - 1;

    let y = g.vertices().difference(&x);
    let mut ys = vec![VertexSet::empty(n); m + 1];
    for v in y.iter() {
        let mixed: Vec<usize> = (1..=m).filter(|&i| g.is_mixed_on(v, &xs[i])).collect();
        // anything other than exactly one mixed index lands in Y_0 and is
        // caught by the validator if it is not complete to X - X_0
        let slot = if mixed.len() == 1 { mixed[0] } else { 0 };
        ys[slot].insert(v);
    }

    let x0 = &xs[0];
    let attachments: Vec<Attachment> = g
        .anticomponents(&y)
        .into_iter()
        .filter(|z| z.len() >= 2)
        .map(|z| {
            let mixed = VertexSet::from_vertices(n, x0.iter().filter(|&v| g.is_mixed_on(v, &z)));
            Attachment { anticomponent: z, mixed }
        })
        .collect();
    let isolated = (0..attachments.len()).find(|&i| {
        attachments
            .iter()
            .enumerate()
            .all(|(j, other)| j == i || g.sets_anticomplete(&attachments[i].mixed, &other.anticomponent))
    });
    let sp = StructurePartition { xs, ys, attachments, isolated };
    let violations = validate_structure_partition(g, &sp)?;
    if violations.is_empty() {
        Ok(sp)
    } else {
        Err(Error::InvalidStructure(violations))
    }
}
