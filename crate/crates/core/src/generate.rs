//! Random members with their certificates, built top-down from the
//! composition operations. Seeded and fully deterministic.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::detect::{is_free, split_partition};
use crate::divide::{unify_pair, ComposablePair, FirstRoles, PairRoles, SecondRoles, Side};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::modular::substitute;
use crate::tree::{decompose, reconstruct, DecompTree, RecognitionResult, MEMBER_PATTERNS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// A single split graph.
    Split,
    /// Substitutions over split graphs and pentagons.
    PentagonSub,
    /// Split unifications (in the graph or its complement) over split graphs.
    Unified,
    /// Everything.
    Mixed,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Split, Kind::PentagonSub, Kind::Unified, Kind::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Split => "split",
            Kind::PentagonSub => "pentagon-sub",
            Kind::Unified => "unified",
            Kind::Mixed => "mixed",
        }
    }

    fn pentagons(self) -> bool {
        matches!(self, Kind::PentagonSub | Kind::Mixed)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind `{s}` (expected split, pentagon-sub, unified or mixed)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub tree: DecompTree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Substitute,
    Unify,
    CoUnify,
}

const LEAF_MEAN: f64 = 4.0;
const PAIR_ATTEMPTS: usize = 8;

/// A random member on `n >= 1` vertices together with a tree that replays
/// to it exactly. The result is checked for membership and replay before
/// it is returned.
pub fn generate(kind: Kind, n: usize, seed: u64) -> Result<Generated> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (g, t) = grow(kind, n, &mut rng);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let graph = g.relabel(&perm);
    let tree = t.relabel(&perm);

    if let Some(w) = is_free(&graph, &MEMBER_PATTERNS).witness() {
        return Err(Error::Audit(format!("contains {} at {:?}", w.pattern, w.vertices)));
    }
    match reconstruct(&tree) {
        Ok(h) if h == graph => {}
        Ok(_) => return Err(Error::Audit("tree replays to a different graph".into())),
        Err(e) => return Err(Error::Audit(e.to_string())),
    }
    Ok(Generated { graph, tree })
}

fn leaf_size(rng: &mut ChaCha8Rng) -> usize {
    let mut k = 1;
    while !rng.gen_bool(1.0 / LEAF_MEAN) {
        k += 1;
    }
    k
}

fn grow(kind: Kind, n: usize, rng: &mut ChaCha8Rng) -> (Graph, DecompTree) {
    if kind == Kind::Split || n < 3 || n <= leaf_size(rng) {
        return leaf(kind, n, rng);
    }
    let ops: &[Op] = match kind {
        Kind::Split => unreachable!(),
        Kind::PentagonSub => &[Op::Substitute],
        Kind::Unified => &[Op::Unify, Op::CoUnify],
        Kind::Mixed => &[Op::Substitute, Op::Unify, Op::CoUnify],
    };
    let op = *ops.choose(rng).unwrap();
    match op {
        Op::Substitute => substitution(kind, n, rng),
        Op::Unify | Op::CoUnify if n >= 5 => unification(kind, n, op == Op::CoUnify, rng),
        _ => leaf(kind, n, rng),
    }
}

fn leaf(kind: Kind, n: usize, rng: &mut ChaCha8Rng) -> (Graph, DecompTree) {
    if kind.pentagons() && n == 5 && rng.gen_bool(0.5) {
        return (Graph::cycle(5), DecompTree::PentagonLeaf { cycle: [0, 1, 2, 3, 4] });
    }
    let g = split_graph(n, rng);
    let partition = split_partition(&g).expect("constructed as a split graph");
    (g.clone(), DecompTree::SplitLeaf { graph: g, partition })
}

// clique 0..k, stable k..n, random edges across
fn split_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let k = rng.gen_range(0..=n);
    let p = rng.gen_range(0.2..0.8);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if v < k || (u < k && rng.gen_bool(p)) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn substitution(kind: Kind, n: usize, rng: &mut ChaCha8Rng) -> (Graph, DecompTree) {
    // outer + inner = n + 1, both at least 2
    let (outer, outer_tree) = if kind.pentagons() && n >= 6 && rng.gen_bool(0.4) {
        (Graph::cycle(5), DecompTree::PentagonLeaf { cycle: [0, 1, 2, 3, 4] })
    } else {
        grow(kind, rng.gen_range(2..n), rng)
    };
    let (inner, inner_tree) = grow(kind, n + 1 - outer.n(), rng);
    let x = rng.gen_range(0..outer.n());
    let g = substitute(&outer, x, &inner).expect("x is a vertex of outer");
    let tree = DecompTree::Substitution {
        n,
        x,
        outer: Box::new(outer_tree),
        inner: Box::new(inner_tree),
        order: (0..n).collect(),
    };
    (g, tree)
}

fn unification(kind: Kind, n: usize, complement: bool, rng: &mut ChaCha8Rng) -> (Graph, DecompTree) {
    let pair = random_pair(kind, n, rng);
    let first = member_tree(&pair.g1);
    let second = member_tree(&pair.g2);
    let mut g = unify_pair(&pair).expect("constructed pair is composable");
    let side = if complement {
        g = g.complement();
        Side::InComplement
    } else {
        Side::InG
    };
    let tree = DecompTree::Unify {
        n,
        side,
        roles: pair.roles,
        first: Box::new(first),
        second: Box::new(second),
        order: (0..n).collect(),
    };
    (g, tree)
}

fn member_tree(g: &Graph) -> DecompTree {
    match decompose(g) {
        RecognitionResult::Tree(t) => t,
        RecognitionResult::Witness(w) => panic!("pair part contains {} at {:?}", w.pattern, w.vertices),
    }
}

/// A composable pair whose union has `n >= 5` vertices and whose parts are
/// members. Random attempts are audited; if none passes, a pair in which
/// `A` and `C` are modules of their parts is used.
fn random_pair(kind: Kind, n: usize, rng: &mut ChaCha8Rng) -> ComposablePair {
    let l = rng.gen_range(0..=2.min(n - 4));
    let rest = n - l;
    let b = rng.gen_range(0..=2.min(rest - 4));
    let t = rng.gen_range(0..=2.min(rest - 4 - b));
    let a = rng.gen_range(2..=rest - b - t - 2);
    let c = rest - b - t - a;
    let ga = grow(kind, a, rng).0;
    let gc = grow(kind, c, rng).0;

    for _ in 0..PAIR_ATTEMPTS {
        let pair = build_pair(&ga, &gc, b, l, t, false, rng).expect("random choices are in range");
        if is_free(&pair.g1, &MEMBER_PATTERNS).is_free() && is_free(&pair.g2, &MEMBER_PATTERNS).is_free() {
            return pair;
        }
    }
    build_pair(&ga, &gc, b, l, t, true, rng).expect("random choices are in range")
}

/// Source of the free adjacency decisions of a composable pair.
trait Choices {
    fn bit(&mut self) -> bool;
    /// `None` when the source cannot name an index below `n`.
    fn index(&mut self, n: usize) -> Option<usize>;
}

impl Choices for ChaCha8Rng {
    fn bit(&mut self) -> bool {
        self.gen_bool(0.5)
    }

    fn index(&mut self, n: usize) -> Option<usize> {
        Some(self.gen_range(0..n))
    }
}

// replays a fixed prefix of decisions, then answers `false`
struct Replay {
    bits: Vec<bool>,
    used: usize,
}

impl Choices for Replay {
    fn bit(&mut self) -> bool {
        if self.used == self.bits.len() {
            self.bits.push(false);
        }
        self.used += 1;
        self.bits[self.used - 1]
    }

    fn index(&mut self, n: usize) -> Option<usize> {
        let width = usize::BITS - n.saturating_sub(1).leading_zeros();
        let i = (0..width).fold(0, |acc, k| acc | (self.bit() as usize) << k);
        (i < n).then_some(i)
    }
}

// G1: A, B, L, T, c*.  G2: B, L, T, C, a*.
fn build_pair(
    ga: &Graph,
    gc: &Graph,
    b: usize,
    l: usize,
    t: usize,
    safe: bool,
    ch: &mut impl Choices,
) -> Option<ComposablePair> {
    let (a, c) = (ga.n(), gc.n());
    let s = b + l + t;
    let is_b = |i: usize| i < b;
    let is_l = |i: usize| (b..b + l).contains(&i);

    // the shared graph on B u L u T, local labels 0..s
    let mut shared = Graph::new(s);
    for u in 0..s {
        for v in u + 1..s {
            let edge = match (u, v) {
                _ if is_l(u) && is_l(v) => true,
                _ if u >= b + l => false,
                _ if is_b(u) && is_l(v) => true,
                _ if is_b(u) && is_b(v) => safe || ch.bit(),
                _ => ch.bit(),
            };
            shared.set_edge(u, v, edge);
        }
    }

    let n1 = a + s + 1;
    let mut g1 = Graph::new(n1);
    let c_star = n1 - 1;
    for (u, v) in ga.edges() {
        g1.add_edge(u, v);
    }
    for (u, v) in shared.edges() {
        g1.add_edge(a + u, a + v);
    }
    let a0 = ch.index(a)?;
    for x in 0..a {
        for i in 0..b {
            g1.add_edge(x, a + i);
        }
        for i in b..b + l {
            if safe || x == a0 || ch.bit() {
                g1.add_edge(x, a + i);
            }
        }
    }
    for i in 0..b + l {
        g1.add_edge(c_star, a + i);
    }

    let n2 = s + c + 1;
    let mut g2 = Graph::new(n2);
    let a_star = n2 - 1;
    for (u, v) in shared.edges() {
        g2.add_edge(u, v);
    }
    for (u, v) in gc.edges() {
        g2.add_edge(s + u, s + v);
    }
    let bset = VertexSet::from_vertices(s, 0..b);
    let anti = shared.anticomponents(&bset);
    let c0 = ch.index(c)?;
    for y in 0..c {
        for i in b..b + l {
            g2.add_edge(s + y, i);
        }
        for q in &anti {
            if safe || y == c0 || ch.bit() {
                for i in q.iter() {
                    g2.add_edge(s + y, i);
                }
            }
        }
    }
    for i in 0..b + l {
        g2.add_edge(a_star, i);
    }

    let range = |n: usize, lo: usize, hi: usize| VertexSet::from_vertices(n, lo..hi);
    let roles = PairRoles {
        first: FirstRoles {
            a: range(n1, 0, a),
            b: range(n1, a, a + b),
            l: range(n1, a + b, a + b + l),
            t: range(n1, a + b + l, a + s),
            c_star,
            a0,
        },
        second: SecondRoles {
            b: range(n2, 0, b),
            c: range(n2, s, s + c),
            l: range(n2, b, b + l),
            t: range(n2, b + l, s),
            a_star,
            c0: s + c0,
        },
    };
    Some(ComposablePair { g1, g2, roles })
}

/// A random composable pair on `n >= 5` united vertices, each part a member
/// drawn from `kind`.
pub fn composable_pair(kind: Kind, n: usize, seed: u64) -> ComposablePair {
    assert!(n >= 5, "a composable pair needs at least 5 united vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_pair(kind, n, &mut rng)
}

/// A composable pair with `G1[A] = ga`, `G2[C] = gc`, role sets `B`, `L`,
/// `T` of the given sizes, and every adjacency the definition leaves open
/// drawn at random. The parts need not be members.
pub fn arbitrary_pair(ga: &Graph, gc: &Graph, b: usize, l: usize, t: usize, seed: u64) -> ComposablePair {
    assert!(ga.n() >= 1 && gc.n() >= 1, "A and C must be non-empty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build_pair(ga, gc, b, l, t, false, &mut rng).expect("random choices are in range")
}

/// Every composable pair with `1 <= |A| <= max_ac`, `1 <= |C| <= max_ac`
/// and `|B|, |L|, |T| <= max_blt`, each listed once, up to the fixed
/// labeling of role sets.
pub fn all_small_pairs(max_ac: usize, max_blt: usize) -> Vec<ComposablePair> {
    let mut out = Vec::new();
    for a in 1..=max_ac {
        for c in 1..=max_ac {
            for b in 0..=max_blt {
                for l in 0..=max_blt {
                    for t in 0..=max_blt {
                        small_pairs(a, b, c, l, t, &mut out);
                    }
                }
            }
        }
    }
    out
}

fn small_pairs(a: usize, b: usize, c: usize, l: usize, t: usize, out: &mut Vec<ComposablePair>) {
    let fill = |n: usize, ch: &mut Replay| {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, ch.bit());
            }
        }
        g
    };
    // depth-first over decision sequences: flip the last unset decision
    let mut bits = Vec::new();
    loop {
        let mut ch = Replay { bits, used: 0 };
        let ga = fill(a, &mut ch);
        let gc = fill(c, &mut ch);
        out.extend(build_pair(&ga, &gc, b, l, t, false, &mut ch));
        bits = ch.bits;
        bits.truncate(ch.used);
        match bits.iter().rposition(|&x| !x) {
            Some(i) => {
                bits.truncate(i);
                bits.push(true);
            }
            None => return,
        }
    }
}
