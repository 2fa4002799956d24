//! Split divides, the decomposition of a graph along one into a composable
//! pair, and split unification, which glues a composable pair back together.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::detect::{find_induced, is_free, split_partition, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::modular::find_proper_homogeneous_set;
use crate::structure::{build_from_seed, check_partition, CLASS};

/// Which graph a divide or unification lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    InG,
    InComplement,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::InG => Side::InComplement,
            Side::InComplement => Side::InG,
        }
    }

    /// The graph the side refers to, given the host.
    pub fn graph(self, g: &Graph) -> Graph {
        match self {
            Side::InG => g.clone(),
            Side::InComplement => g.complement(),
        }
    }
}

/// A partition `(A, B, C, L, T)` of the vertex set, valid in `side`'s graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitDivide {
    pub side: Side,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub l: VertexSet,
    pub t: VertexSet,
    /// A vertex of `a` complete to `l`.
    pub a0: usize,
    /// A vertex of `c` complete to `b`.
    pub c0: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivideClause {
    ASize,
    ACompleteB,
    AAnticompleteCT,
    A0CompleteL,
    LNonEmptyClique,
    LMixedOnA,
    LCompleteBC,
    CSize,
    C0CompleteB,
    CNotMixedOnB,
    TStable,
    TAnticompleteC,
}

impl fmt::Display for DivideClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DivideClause::ASize => "|A| >= 2",
            DivideClause::ACompleteB => "A is complete to B",
            DivideClause::AAnticompleteCT => "A is anticomplete to C u T",
            DivideClause::A0CompleteL => "a0 is a vertex of A complete to L",
            DivideClause::LNonEmptyClique => "L is a non-empty clique",
            DivideClause::LMixedOnA => "every vertex of L is mixed on A",
            DivideClause::LCompleteBC => "L is complete to B u C",
            DivideClause::CSize => "|C| >= 2",
            DivideClause::C0CompleteB => "c0 is a vertex of C complete to B",
            DivideClause::CNotMixedOnB => "no vertex of C is mixed on an anticomponent of B",
            DivideClause::TStable => "T is stable",
            DivideClause::TAnticompleteC => "T is anticomplete to C",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivideViolation {
    pub clause: DivideClause,
    pub detail: String,
}

/// Checks every clause of the divide on its declared side.
pub fn validate_split_divide(g: &Graph, d: &SplitDivide) -> Result<Vec<DivideViolation>> {
    check_partition(g, [&d.a, &d.b, &d.c, &d.l, &d.t].into_iter())?;
    let h = d.side.graph(g);
    let mut out = Vec::new();
    let mut bad = |clause, detail: String| out.push(DivideViolation { clause, detail });

    if d.a.len() < 2 {
        bad(DivideClause::ASize, format!("A = {}", d.a));
    }
    if let Some(v) = d.a.iter().find(|&v| !h.is_complete_to(v, &d.b)) {
        bad(DivideClause::ACompleteB, format!("vertex {v} of A"));
    }
    let ct = d.c.union(&d.t);
    if let Some(v) = d.a.iter().find(|&v| !h.is_anticomplete_to(v, &ct)) {
        bad(DivideClause::AAnticompleteCT, format!("vertex {v} of A"));
    }
    if !d.a.contains(d.a0) || !h.is_complete_to(d.a0, &d.l) {
        bad(DivideClause::A0CompleteL, format!("a0 = {}", d.a0));
    }
    if d.l.is_empty() || !h.is_clique(&d.l) {
        bad(DivideClause::LNonEmptyClique, format!("L = {}", d.l));
    }
    if let Some(v) = d.l.iter().find(|&v| !h.is_mixed_on(v, &d.a)) {
        bad(DivideClause::LMixedOnA, format!("vertex {v} of L"));
    }
    let bc = d.b.union(&d.c);
    if let Some(v) = d.l.iter().find(|&v| !h.is_complete_to(v, &bc)) {
        bad(DivideClause::LCompleteBC, format!("vertex {v} of L"));
    }
    if d.c.len() < 2 {
        bad(DivideClause::CSize, format!("C = {}", d.c));
    }
    if !d.c.contains(d.c0) || !h.is_complete_to(d.c0, &d.b) {
        bad(DivideClause::C0CompleteB, format!("c0 = {}", d.c0));
    }
    if let Some((v, q)) = mixed_on_anticomponent(&h, &d.c, &d.b) {
        bad(DivideClause::CNotMixedOnB, format!("vertex {v} of C is mixed on {q}"));
    }
    if !h.is_stable(&d.t) {
        bad(DivideClause::TStable, format!("T = {}", d.t));
    }
    if let Some(v) = d.t.iter().find(|&v| h.neighbors(v).intersects(&d.c)) {
        bad(DivideClause::TAnticompleteC, format!("vertex {v} of T"));
    }
    Ok(out)
}

fn mixed_on_anticomponent(h: &Graph, c: &VertexSet, b: &VertexSet) -> Option<(usize, VertexSet)> {
    let anti = h.anticomponents(b);
    c.iter().find_map(|v| anti.iter().find(|q| h.is_mixed_on(v, q)).map(|q| (v, q.clone())))
}

/// For a prime {P5, co-P5, C5}-free graph: `None` if it is split, otherwise
/// a split divide of the graph or of its complement.
pub fn find_split_divide(g: &Graph) -> Result<Option<SplitDivide>> {
    if let Some(h) = find_proper_homogeneous_set(g) {
        return Err(Error::NotPrime(h));
    }
    if let Some(w) = is_free(g, &CLASS).into_witness() {
        return Err(Error::Contains(w));
    }
    if split_partition(g).is_some() {
        return Ok(None);
    }
    let d = divide_unchecked(g)?;
    Ok(Some(d))
}

/// The divide construction for a prime, {P5, co-P5, C5}-free, non-split
/// graph.
pub(crate) fn divide_unchecked(g: &Graph) -> Result<SplitDivide> {
    // work on whichever of g and its complement has a co-C4
    let (base, h, seed) = match find_induced(g, Pattern::CoC4) {
        Some(w) => (Side::InG, g.clone(), w),
        None => {
            let co = g.complement();
            let w = find_induced(&co, Pattern::CoC4).ok_or(Error::NoCoC4)?;
            (Side::InComplement, co, w)
        }
    };
    let sp = build_from_seed(&h, &seed)?;
    let m = sp.m();
    let n = g.n();
    let x0 = &sp.xs[0];
    let y = sp.y();

    let d = match sp.isolated {
        None => {
            // Y is a clique: A = X_1, L = Y_1, B = Y - Y_1, C = X_2 u .. u X_m, T = X_0
            let a = sp.xs[1].clone();
            let l = sp.ys[1].clone();
            let b = y.difference(&l);
            let c = sp.xs[2..].iter().fold(VertexSet::empty(n), |acc, s| acc.union(s));
            let a0 = least(&a, |v| h.is_complete_to(v, &l));
            let c0 = least(&c, |v| h.is_complete_to(v, &b));
            SplitDivide { side: base, a, b, c, l, t: x0.clone(), a0, c0 }
        }
        Some(k) => {
            // a divide of the complement of h
            let z = &sp.attachments[k].anticomponent;
            let xz = &sp.attachments[k].mixed;
            let j = (1..=m).find(|&i| z.is_subset(&sp.ys[i])).unwrap_or(1);
            let pool = sp.xs[j].union(&x0.difference(xz));
            let b = VertexSet::from_vertices(n, pool.iter().filter(|&v| h.is_anticomplete_to(v, z)));
            let c_prime = VertexSet::from_vertices(n, pool.iter().filter(|&v| h.is_complete_to(v, z)));
            let singles = h
                .anticomponents(&y)
                .into_iter()
                .filter(|q| q.len() == 1)
                .fold(VertexSet::empty(n), |acc, q| acc.union(&q));
            let t = VertexSet::from_vertices(n, singles.iter().filter(|&v| h.neighbors(v).intersects(xz)));
            let mut c = y.difference(&z.union(&t)).union(&c_prime);
            for (i, xi) in sp.xs.iter().enumerate().skip(1) {
                if i != j {
                    c.union_with(xi);
                }
            }
            // complete in the complement = anticomplete in h
            let a0 = least(z, |v| h.is_anticomplete_to(v, xz));
            let c0 = least(&c, |v| h.is_anticomplete_to(v, &b));
            SplitDivide { side: base.flip(), a: z.clone(), b, c, l: xz.clone(), t, a0, c0 }
        }
    };
    let violations = validate_split_divide(g, &d)?;
    if violations.is_empty() {
        Ok(d)
    } else {
        Err(Error::InvalidDivide(violations))
    }
}

// falls back to the least member so the validator reports the clause
fn least(s: &VertexSet, pred: impl Fn(usize) -> bool) -> usize {
    s.iter().find(|&v| pred(v)).or(s.min()).unwrap_or(0)
}

/// Role sets of the first graph of a composable pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FirstRoles {
    pub a: VertexSet,
    pub b: VertexSet,
    pub l: VertexSet,
    pub t: VertexSet,
    pub c_star: usize,
    pub a0: usize,
}

/// Role sets of the second graph of a composable pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SecondRoles {
    pub b: VertexSet,
    pub c: VertexSet,
    pub l: VertexSet,
    pub t: VertexSet,
    pub a_star: usize,
    pub c0: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairRoles {
    pub first: FirstRoles,
    pub second: SecondRoles,
}

/// Two graphs sharing `B u L u T`. The shared vertices correspond by rank:
/// the i-th smallest vertex of `first.b` is the i-th smallest of
/// `second.b`, and likewise for `l` and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposablePair {
    pub g1: Graph,
    pub g2: Graph,
    pub roles: PairRoles,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairClause {
    FirstRoles,
    SecondRoles,
    ANonEmpty,
    CNonEmpty,
    LClique,
    TStable,
    ACompleteB,
    AAnticompleteT,
    A0CompleteL,
    CStar,
    SharedAgreement,
    TAnticompleteC,
    LCompleteBC,
    AStar,
    C0CompleteB,
    CNotMixedOnB,
}

impl fmt::Display for PairClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PairClause::FirstRoles => "role sets of G1 partition V(G1)",
            PairClause::SecondRoles => "role sets of G2 partition V(G2)",
            PairClause::ANonEmpty => "A is non-empty",
            PairClause::CNonEmpty => "C is non-empty",
            PairClause::LClique => "L is a clique",
            PairClause::TStable => "T is a stable set",
            PairClause::ACompleteB => "A is complete to B",
            PairClause::AAnticompleteT => "A is anticomplete to T",
            PairClause::A0CompleteL => "some vertex a0 of A is complete to L",
            PairClause::CStar => "c* is complete to B u L and anticomplete to A u T",
            PairClause::SharedAgreement => "G2[B u L u T] = G1[B u L u T]",
            PairClause::TAnticompleteC => "T is anticomplete to C",
            PairClause::LCompleteBC => "L is complete to B u C",
            PairClause::AStar => "a* is complete to B u L and anticomplete to C u T",
            PairClause::C0CompleteB => "some vertex c0 of C is complete to B",
            PairClause::CNotMixedOnB => "no vertex of C is mixed on any anticomponent of B",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairViolation {
    pub clause: PairClause,
    pub detail: String,
}

fn covers_exactly(g: &Graph, parts: &[&VertexSet], extra: usize) -> bool {
    let mut seen = VertexSet::empty(g.n());
    for p in parts {
        if g.check_set(p).is_err() || p.intersects(&seen) {
            return false;
        }
        seen.union_with(p);
    }
    if extra >= g.n() || seen.contains(extra) {
        return false;
    }
    seen.insert(extra);
    seen.len() == g.n()
}

/// Checks every defining condition of a composable pair.
pub fn validate_composable_pair(p: &ComposablePair) -> Vec<PairViolation> {
    let mut out = Vec::new();
    let mut bad = |clause, detail: String| out.push(PairViolation { clause, detail });
    let (r1, r2) = (&p.roles.first, &p.roles.second);
    let (g1, g2) = (&p.g1, &p.g2);

    let ok1 = covers_exactly(g1, &[&r1.a, &r1.b, &r1.l, &r1.t], r1.c_star);
    let ok2 = covers_exactly(g2, &[&r2.b, &r2.c, &r2.l, &r2.t], r2.a_star);
    if !ok1 {
        bad(PairClause::FirstRoles, format!("G1 has {} vertices", g1.n()));
    }
    if !ok2 {
        bad(PairClause::SecondRoles, format!("G2 has {} vertices", g2.n()));
    }
    if !ok1 || !ok2 {
        return out;
    }

    if r1.a.is_empty() {
        bad(PairClause::ANonEmpty, String::new());
    }
    if r2.c.is_empty() {
        bad(PairClause::CNonEmpty, String::new());
    }
    if !g1.is_clique(&r1.l) {
        bad(PairClause::LClique, format!("L = {} in G1", r1.l));
    }
    if !g1.is_stable(&r1.t) {
        bad(PairClause::TStable, format!("T = {} in G1", r1.t));
    }
    if let Some(v) = r1.a.iter().find(|&v| !g1.is_complete_to(v, &r1.b)) {
        bad(PairClause::ACompleteB, format!("vertex {v} of A"));
    }
    if let Some(v) = r1.a.iter().find(|&v| g1.neighbors(v).intersects(&r1.t)) {
        bad(PairClause::AAnticompleteT, format!("vertex {v} of A"));
    }
    if !r1.a.contains(r1.a0) || !g1.is_complete_to(r1.a0, &r1.l) {
        bad(PairClause::A0CompleteL, format!("a0 = {}", r1.a0));
    }
    let at = r1.a.union(&r1.t);
    if !g1.is_complete_to(r1.c_star, &r1.b.union(&r1.l)) || !g1.is_anticomplete_to(r1.c_star, &at) {
        bad(PairClause::CStar, format!("c* = {}", r1.c_star));
    }

    match shared_correspondence(&p.roles) {
        None => bad(PairClause::SharedAgreement, "role sets B, L, T differ in size between G1 and G2".into()),
        Some(pairs) => {
            'outer: for (i, &(u1, u2)) in pairs.iter().enumerate() {
                for &(v1, v2) in &pairs[i + 1..] {
                    if g1.has_edge(u1, v1) != g2.has_edge(u2, v2) {
                        bad(PairClause::SharedAgreement, format!("pair ({u1},{v1}) of G1 vs ({u2},{v2}) of G2"));
                        break 'outer;
                    }
                }
            }
        }
    }

    if let Some(v) = r2.t.iter().find(|&v| g2.neighbors(v).intersects(&r2.c)) {
        bad(PairClause::TAnticompleteC, format!("vertex {v} of T"));
    }
    let bc = r2.b.union(&r2.c);
    if let Some(v) = r2.l.iter().find(|&v| !g2.is_complete_to(v, &bc)) {
        bad(PairClause::LCompleteBC, format!("vertex {v} of L"));
    }
    let ct = r2.c.union(&r2.t);
    if !g2.is_complete_to(r2.a_star, &r2.b.union(&r2.l)) || !g2.is_anticomplete_to(r2.a_star, &ct) {
        bad(PairClause::AStar, format!("a* = {}", r2.a_star));
    }
    if !r2.c.contains(r2.c0) || !g2.is_complete_to(r2.c0, &r2.b) {
        bad(PairClause::C0CompleteB, format!("c0 = {}", r2.c0));
    }
    if let Some((v, q)) = mixed_on_anticomponent(g2, &r2.c, &r2.b) {
        bad(PairClause::CNotMixedOnB, format!("vertex {v} of C is mixed on {q}"));
    }
    out
}

/// `(vertex of G1, vertex of G2)` for every shared vertex, by rank within
/// each role set.
fn shared_correspondence(r: &PairRoles) -> Option<Vec<(usize, usize)>> {
    let (r1, r2) = (&r.first, &r.second);
    let mut out = Vec::new();
    for (s1, s2) in [(&r1.b, &r2.b), (&r1.l, &r2.l), (&r1.t, &r2.t)] {
        if s1.len() != s2.len() {
            return None;
        }
        out.extend(s1.iter().zip(s2.iter()));
    }
    Some(out)
}

/// The split unification of a composable pair.
///
/// Labels: `A` in `G1` order, then `B u L u T` in `G2` order, then `C` in
/// `G2` order.
pub fn unify_pair(p: &ComposablePair) -> Result<Graph> {
    let violations = validate_composable_pair(p);
    if !violations.is_empty() {
        return Err(Error::InvalidPair(violations));
    }
    let (r1, r2) = (&p.roles.first, &p.roles.second);
    let shared2 = r2.b.union(&r2.l).union(&r2.t);
    let na = r1.a.len();
    let ns = shared2.len();
    let n = na + ns + r2.c.len();

    // position of each G2 vertex in the result
    let mut pos2 = vec![usize::MAX; p.g2.n()];
    for (i, v) in shared2.iter().enumerate() {
        pos2[v] = na + i;
    }
    for (i, v) in r2.c.iter().enumerate() {
        pos2[v] = na + ns + i;
    }
    let mut pos1 = vec![usize::MAX; p.g1.n()];
    for (i, v) in r1.a.iter().enumerate() {
        pos1[v] = i;
    }
    for (u1, u2) in shared_correspondence(&p.roles).expect("validated") {
        pos1[u1] = pos2[u2];
    }

    let mut g = Graph::new(n);
    for (u, v) in p.g1.edges() {
        if u != r1.c_star && v != r1.c_star {
            g.add_edge(pos1[u], pos1[v]);
        }
    }
    for (u, v) in p.g2.edges() {
        if u != r2.a_star && v != r2.a_star {
            g.add_edge(pos2[u], pos2[v]);
        }
    }
    Ok(g)
}

/// A composable pair cut out of a graph along a split divide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub pair: ComposablePair,
    /// `order[i]` is the vertex of the side's graph that appears as vertex
    /// `i` of `unify_pair(&pair)`.
    pub order: Vec<usize>,
}

/// `G1 = H[A u B u {c0} u L u T]` and `G2 = H[{a0} u B u C u L u T]`, where
/// `H` is the divide's side graph.
pub fn split_into_pair(g: &Graph, d: &SplitDivide) -> Result<SplitPair> {
    let violations = validate_split_divide(g, d)?;
    if !violations.is_empty() {
        return Err(Error::InvalidDivide(violations));
    }
    let h = d.side.graph(g);
    let shared = d.b.union(&d.l).union(&d.t);

    let mut s1 = d.a.union(&shared);
    s1.insert(d.c0);
    let (g1, map1) = h.induced(&s1)?;
    let mut s2 = d.c.union(&shared);
    s2.insert(d.a0);
    let (g2, map2) = h.induced(&s2)?;

    let project = |map: &[usize], s: &VertexSet| -> VertexSet {
        VertexSet::from_vertices(map.len(), map.iter().enumerate().filter(|(_, v)| s.contains(**v)).map(|(i, _)| i))
    };
    let index = |map: &[usize], v: usize| map.iter().position(|&u| u == v).expect("vertex is in the part");

    let first = FirstRoles {
        a: project(&map1, &d.a),
        b: project(&map1, &d.b),
        l: project(&map1, &d.l),
        t: project(&map1, &d.t),
        c_star: index(&map1, d.c0),
        a0: index(&map1, d.a0),
    };
    let second = SecondRoles {
        b: project(&map2, &d.b),
        c: project(&map2, &d.c),
        l: project(&map2, &d.l),
        t: project(&map2, &d.t),
        a_star: index(&map2, d.a0),
        c0: index(&map2, d.c0),
    };
    let order = d.a.iter().chain(shared.iter()).chain(d.c.iter()).collect();
    Ok(SplitPair { pair: ComposablePair { g1, g2, roles: PairRoles { first, second } }, order })
}
