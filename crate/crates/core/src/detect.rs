//! Induced-subgraph search for the small patterns the class is defined by,
//! and split-graph recognition with a certificate either way.
//!
//! Every search returns the lexicographically least ordered witness tuple:
//! positions are filled in ascending vertex order by depth-first search, so
//! the first complete tuple found is the least one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    P4,
    P5,
    CoP5,
    C5,
    C4,
    CoC4,
}

impl Pattern {
    pub const ALL: [Pattern; 6] = [Pattern::P4, Pattern::P5, Pattern::CoP5, Pattern::C5, Pattern::C4, Pattern::CoC4];

    /// The pattern formed by the complement graph.
    pub fn complement(self) -> Pattern {
        match self {
            Pattern::P4 => Pattern::P4,
            Pattern::P5 => Pattern::CoP5,
            Pattern::CoP5 => Pattern::P5,
            Pattern::C5 => Pattern::C5,
            Pattern::C4 => Pattern::CoC4,
            Pattern::CoC4 => Pattern::C4,
        }
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::P4 | Pattern::C4 | Pattern::CoC4 => 4,
            Pattern::P5 | Pattern::CoP5 | Pattern::C5 => 5,
        }
    }

    fn shape(self) -> (Shape, bool) {
        match self {
            Pattern::P4 => (Shape::Path(4), false),
            Pattern::P5 => (Shape::Path(5), false),
            Pattern::CoP5 => (Shape::Path(5), true),
            Pattern::C5 => (Shape::Cycle(5), false),
            Pattern::C4 => (Shape::Cycle(4), false),
            Pattern::CoC4 => (Shape::Cycle(4), true),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pattern::P4 => "P4",
            Pattern::P5 => "P5",
            Pattern::CoP5 => "co-P5",
            Pattern::C5 => "C5",
            Pattern::C4 => "C4",
            Pattern::CoC4 => "co-C4",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy)]
enum Shape {
    Path(usize),
    Cycle(usize),
}

/// An ordered vertex tuple inducing `pattern`. For paths and cycles,
/// consecutive entries are adjacent (cyclically for cycles) and all other
/// pairs are not; for complemented patterns this holds in the complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl ForbiddenWitness {
    /// Checks that the tuple really induces the pattern in `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let (shape, co) = self.pattern.shape();
        let k = self.pattern.order();
        if self.vertices.len() != k {
            return Err(format!("{} needs {k} vertices, got {}", self.pattern, self.vertices.len()));
        }
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.n()) {
            return Err(format!("vertex {v} out of range"));
        }
        let distinct: VertexSet = self.vertices.iter().copied().collect();
        if distinct.len() != k {
            return Err("repeated vertex".into());
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || matches!(shape, Shape::Cycle(_)) && i == 0 && j == k - 1;
                let (u, v) = (self.vertices[i], self.vertices[j]);
                if g.has_edge(u, v) ^ co != consecutive {
                    return Err(format!(
                        "pair ({u},{v}) at positions ({i},{j}) has the wrong adjacency for {}",
                        self.pattern
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Least witness of `p` in `g`, if `g` contains it as an induced subgraph.
pub fn find_induced(g: &Graph, p: Pattern) -> Option<ForbiddenWitness> {
    let (shape, co) = p.shape();
    let host;
    let h = if co {
        host = g.complement();
        &host
    } else {
        g
    };
    let vertices = match shape {
        Shape::Path(k) => search_path(h, k),
        Shape::Cycle(k) => search_cycle(h, k),
    }?;
    Some(ForbiddenWitness { pattern: p, vertices })
}

fn search_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut tuple = Vec::with_capacity(k);
    let none = VertexSet::empty(g.n());
    for v0 in 0..g.n() {
        tuple.push(v0);
        let mut closed = g.neighbors(v0).clone();
        closed.insert(v0);
        if extend(g, k, &mut tuple, g.neighbors(v0).clone(), &none, &closed, None) {
            return Some(tuple);
        }
        tuple.pop();
    }
    None
}

fn search_cycle(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut tuple = Vec::with_capacity(k);
    let none = VertexSet::empty(g.n());
    for v0 in 0..g.n() {
        // v0 is the least vertex of the cycle
        let cand = g.neighbors(v0).above(v0);
        if cand.len() < 2 {
            continue;
        }
        let mut closed = g.neighbors(v0).clone();
        closed.insert(v0);
        tuple.push(v0);
        if extend(g, k, &mut tuple, cand, &none, &none, Some(&closed)) {
            return Some(tuple);
        }
        tuple.pop();
    }
    None
}

/// Extends the induced path `tuple` using `cand` for the next position.
/// `blocked` is the union of closed neighborhoods of the tuple vertices
/// before the last one, `last_closed` that of the last vertex.
///
/// For cycles `root_closed` is the closed neighborhood of `tuple[0]`, the
/// least cycle vertex; it is kept out of `blocked` since the closing vertex
/// must be adjacent to the root.
fn extend(
    g: &Graph,
    k: usize,
    tuple: &mut Vec<usize>,
    cand: VertexSet,
    blocked: &VertexSet,
    last_closed: &VertexSet,
    root_closed: Option<&VertexSet>,
) -> bool {
    let pos = tuple.len();
    let new_blocked = blocked.union(last_closed);
    for v in cand.iter() {
        tuple.push(v);
        if pos + 1 == k {
            return true;
        }
        let mut next = g.neighbors(v).difference(&new_blocked);
        if let Some(rc) = root_closed {
            let root = tuple[0];
            next = next.above(root);
            if pos + 2 == k {
                next.intersect_with(g.neighbors(root));
            } else {
                next.difference_with(rc);
            }
        }
        if !next.is_empty() {
            let mut closed = g.neighbors(v).clone();
            closed.insert(v);
            if extend(g, k, tuple, next, &new_blocked, &closed, root_closed) {
                return true;
            }
        }
        tuple.pop();
    }
    false
}

/// Outcome of [`is_free`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness {
    Free,
    Contains(ForbiddenWitness),
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }

    pub fn witness(&self) -> Option<&ForbiddenWitness> {
        match self {
            Freeness::Free => None,
            Freeness::Contains(w) => Some(w),
        }
    }

    pub fn into_witness(self) -> Option<ForbiddenWitness> {
        match self {
            Freeness::Free => None,
            Freeness::Contains(w) => Some(w),
        }
    }
}

/// Checks the patterns in the given order and reports the first one found.
pub fn is_free(g: &Graph, patterns: &[Pattern]) -> Freeness {
    patterns.iter().find_map(|&p| find_induced(g, p)).map_or(Freeness::Free, Freeness::Contains)
}

/// A partition of the vertices into a clique and a stable set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub stable: VertexSet,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if !self.clique.is_disjoint(&self.stable) {
            return Err("clique and stable parts overlap".into());
        }
        if self.clique.union(&self.stable).to_vec() != g.vertices().to_vec() {
            return Err("parts do not cover the vertex set".into());
        }
        if !g.is_clique(&self.clique) {
            return Err(format!("{} is not a clique", self.clique));
        }
        if !g.is_stable(&self.stable) {
            return Err(format!("{} is not stable", self.stable));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    Split(SplitPartition),
    NotSplit(ForbiddenWitness),
}

impl SplitOutcome {
    pub fn is_split(&self) -> bool {
        matches!(self, SplitOutcome::Split(_))
    }
}

/// Split recognition. The partition comes from the degree-sequence test:
/// with degrees sorted non-increasingly and `m` the largest index with
/// `d_m >= m - 1`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the top `m`
/// vertices form the clique. Otherwise the least C4, co-C4 or C5 is
/// returned (least tuple over the three patterns).
pub fn is_split(g: &Graph) -> SplitOutcome {
    match split_partition(g) {
        Some(p) => SplitOutcome::Split(p),
        None => {
            let w = [Pattern::C4, Pattern::CoC4, Pattern::C5]
                .into_iter()
                .filter_map(|p| find_induced(g, p))
                .min_by(|a, b| a.vertices.cmp(&b.vertices))
                .expect("a non-split graph contains C4, co-C4 or C5");
            SplitOutcome::NotSplit(w)
        }
    }
}

/// The degree-sequence half of [`is_split`], without the witness search.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    // 1-based m: largest i with d_i >= i - 1
    let m = (1..=n).rev().find(|&i| deg[i - 1] + 1 >= i).unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique = VertexSet::from_vertices(n, order[..m].iter().copied());
    let stable = VertexSet::from_vertices(n, order[m..].iter().copied());
    let p = SplitPartition { clique, stable };
    debug_assert!(p.validate(g).is_ok());
    Some(p)
}
