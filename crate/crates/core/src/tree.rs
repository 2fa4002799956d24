//! Decomposition trees: a graph with no induced P5 or co-P5 built from
//! pentagons and split graphs by substitution and split unification (in the
//! graph or its complement), together with recognition and replay.

use serde::{Deserialize, Serialize};

use crate::detect::{find_induced, is_free, split_partition, ForbiddenWitness, Pattern, SplitPartition};
use crate::divide::{divide_unchecked, split_into_pair, unify_pair, ComposablePair, PairRoles, Side};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::modular::{decompose_by_homogeneous_set, find_proper_homogeneous_set, substitute};

pub const MEMBER_PATTERNS: [Pattern; 2] = [Pattern::P5, Pattern::CoP5];
pub const PERFECT_PATTERNS: [Pattern; 3] = [Pattern::P5, Pattern::CoP5, Pattern::C5];

/// A certificate of membership. Internal nodes carry `order`, which places
/// the composed graph's vertices back at their labels: vertex `i` of the
/// composition is vertex `order[i]` of the node's graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum DecompTree {
    SplitLeaf {
        graph: Graph,
        partition: SplitPartition,
    },
    /// The 5-cycle `cycle[0]-cycle[1]-..-cycle[4]-cycle[0]`.
    PentagonLeaf {
        cycle: [usize; 5],
    },
    Substitution {
        n: usize,
        x: usize,
        outer: Box<DecompTree>,
        inner: Box<DecompTree>,
        order: Vec<usize>,
    },
    Unify {
        n: usize,
        side: Side,
        roles: PairRoles,
        first: Box<DecompTree>,
        second: Box<DecompTree>,
        order: Vec<usize>,
    },
}

impl DecompTree {
    /// Vertex count of the graph this node describes.
    pub fn n(&self) -> usize {
        match self {
            DecompTree::SplitLeaf { graph, .. } => graph.n(),
            DecompTree::PentagonLeaf { .. } => 5,
            DecompTree::Substitution { n, .. } | DecompTree::Unify { n, .. } => *n,
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            DecompTree::SplitLeaf { .. } | DecompTree::PentagonLeaf { .. } => 1,
            DecompTree::Substitution { outer, inner, .. } => 1 + outer.node_count() + inner.node_count(),
            DecompTree::Unify { first, second, .. } => 1 + first.node_count() + second.node_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecompTree::SplitLeaf { .. } | DecompTree::PentagonLeaf { .. } => 1,
            DecompTree::Substitution { outer, inner, .. } => 1 + outer.depth().max(inner.depth()),
            DecompTree::Unify { first, second, .. } => 1 + first.depth().max(second.depth()),
        }
    }

    pub fn has_pentagon(&self) -> bool {
        match self {
            DecompTree::SplitLeaf { .. } => false,
            DecompTree::PentagonLeaf { .. } => true,
            DecompTree::Substitution { outer, inner, .. } => outer.has_pentagon() || inner.has_pentagon(),
            DecompTree::Unify { first, second, .. } => first.has_pentagon() || second.has_pentagon(),
        }
    }

    /// The same tree describing `g.relabel(perm)` instead of `g`, where
    /// `perm` is a permutation of `0..n`.
    pub fn relabel(self, perm: &[usize]) -> DecompTree {
        // new vertex i is old vertex perm[i]; old vertex v is new inv[v]
        let mut inv = vec![0; perm.len()];
        for (i, &v) in perm.iter().enumerate() {
            inv[v] = i;
        }
        match self {
            DecompTree::SplitLeaf { graph, partition } => {
                let map = |s: &crate::graph::VertexSet| s.iter().map(|v| inv[v]).collect();
                DecompTree::SplitLeaf {
                    graph: graph.relabel(perm),
                    partition: SplitPartition { clique: map(&partition.clique), stable: map(&partition.stable) },
                }
            }
            DecompTree::PentagonLeaf { cycle } => DecompTree::PentagonLeaf { cycle: cycle.map(|v| inv[v]) },
            DecompTree::Substitution { n, x, outer, inner, order } => {
                DecompTree::Substitution { n, x, outer, inner, order: order.iter().map(|&v| inv[v]).collect() }
            }
            DecompTree::Unify { n, side, roles, first, second, order } => {
                DecompTree::Unify { n, side, roles, first, second, order: order.iter().map(|&v| inv[v]).collect() }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum RecognitionResult {
    Tree(DecompTree),
    Witness(ForbiddenWitness),
}

impl RecognitionResult {
    pub fn is_tree(&self) -> bool {
        matches!(self, RecognitionResult::Tree(_))
    }

    pub fn tree(&self) -> Option<&DecompTree> {
        match self {
            RecognitionResult::Tree(t) => Some(t),
            RecognitionResult::Witness(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&ForbiddenWitness> {
        match self {
            RecognitionResult::Tree(_) => None,
            RecognitionResult::Witness(w) => Some(w),
        }
    }
}

/// Either an induced P5 / co-P5 of `g`, or a decomposition tree for it.
pub fn decompose(g: &Graph) -> RecognitionResult {
    match is_free(g, &MEMBER_PATTERNS).into_witness() {
        Some(w) => RecognitionResult::Witness(w),
        None => RecognitionResult::Tree(build(g, true)),
    }
}

/// As [`decompose`] for graphs that must also avoid C5; the tree has split
/// leaves only.
pub fn decompose_perfect(g: &Graph) -> RecognitionResult {
    match is_free(g, &PERFECT_PATTERNS).into_witness() {
        Some(w) => RecognitionResult::Witness(w),
        None => RecognitionResult::Tree(build(g, false)),
    }
}

/// True iff `g` has no induced P5 and no induced co-P5.
pub fn recognize(g: &Graph) -> bool {
    decompose(g).is_tree()
}

// Children are built in parallel above this size.
const PARALLEL_MIN: usize = 24;

/// Branches: split, then proper homogeneous set, then pentagon, then split
/// divide. `g` must be free of P5 and co-P5 (and of C5 unless `pentagons`).
fn build(g: &Graph, pentagons: bool) -> DecompTree {
    let n = g.n();
    if let Some(partition) = split_partition(g) {
        return DecompTree::SplitLeaf { graph: g.clone(), partition };
    }
    if let Some(h) = find_proper_homogeneous_set(g) {
        let ms = decompose_by_homogeneous_set(g, &h).expect("module from the finder is proper");
        assert!(ms.outer.n() < n && ms.inner.n() < n);
        let (outer, inner) = (&ms.outer, &ms.inner);
        let (o, i) = if n >= PARALLEL_MIN {
            rayon::join(|| build(outer, pentagons), || build(inner, pentagons))
        } else {
            (build(outer, pentagons), build(inner, pentagons))
        };
        return DecompTree::Substitution { n, x: ms.x, outer: Box::new(o), inner: Box::new(i), order: ms.order };
    }
    if pentagons {
        if let Some(w) = find_induced(g, Pattern::C5) {
            // a prime graph free of P5 and co-P5 that contains C5 is C5
            assert_eq!(n, 5, "prime member with an induced C5 must be a pentagon");
            let cycle = [w.vertices[0], w.vertices[1], w.vertices[2], w.vertices[3], w.vertices[4]];
            return DecompTree::PentagonLeaf { cycle };
        }
    }
    let d = divide_unchecked(g).unwrap_or_else(|e| panic!("prime non-split member has a split divide: {e}"));
    let sp = split_into_pair(g, &d).expect("constructed divide is valid");
    let ComposablePair { g1, g2, roles } = sp.pair;
    assert!(g1.n() < n && g2.n() < n);
    let (first, second) = if n >= PARALLEL_MIN {
        rayon::join(|| build(&g1, pentagons), || build(&g2, pentagons))
    } else {
        (build(&g1, pentagons), build(&g2, pentagons))
    };
    DecompTree::Unify { n, side: d.side, roles, first: Box::new(first), second: Box::new(second), order: sp.order }
}

/// Replays the compositions bottom-up.
pub fn reconstruct(t: &DecompTree) -> Result<Graph> {
    match t {
        DecompTree::SplitLeaf { graph, partition } => {
            partition.validate(graph).map_err(|e| Error::MalformedTree(format!("split leaf: {e}")))?;
            Ok(graph.clone())
        }
        DecompTree::PentagonLeaf { cycle } => {
            let mut seen = [false; 5];
            for &v in cycle {
                if v >= 5 || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::MalformedTree(format!("pentagon order {cycle:?} is not a permutation of 0..5")));
                }
            }
            let mut g = Graph::new(5);
            for i in 0..5 {
                g.add_edge(cycle[i], cycle[(i + 1) % 5]);
            }
            Ok(g)
        }
        DecompTree::Substitution { n, x, outer, inner, order } => {
            let o = reconstruct(outer)?;
            let i = reconstruct(inner)?;
            if o.n() < 2 || i.n() < 2 {
                return Err(Error::MalformedTree("substitution of a single vertex".into()));
            }
            let composed = substitute(&o, *x, &i)?;
            place(composed, *n, order)
        }
        DecompTree::Unify { n, side, roles, first, second, order } => {
            let pair = ComposablePair { g1: reconstruct(first)?, g2: reconstruct(second)?, roles: roles.clone() };
            let mut composed = unify_pair(&pair)?;
            if pair.g1.n() >= composed.n() || pair.g2.n() >= composed.n() {
                return Err(Error::MalformedTree("unification parts are not smaller than the result".into()));
            }
            if *side == Side::InComplement {
                composed = composed.complement();
            }
            place(composed, *n, order)
        }
    }
}

fn place(composed: Graph, n: usize, order: &[usize]) -> Result<Graph> {
    if composed.n() != n || order.len() != n {
        return Err(Error::MalformedTree(format!(
            "node declares {n} vertices, composition has {} and order has {}",
            composed.n(),
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::MalformedTree(format!("order is not a permutation of 0..{n}")));
        }
    }
    Ok(composed.unrelabel(order))
}
