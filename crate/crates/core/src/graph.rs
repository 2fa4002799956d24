//! Dense simple graphs on `0..n` with bitset adjacency, plus the set
//! relations (complete / anticomplete / mixed) everything else is phrased in.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Words = SmallVec<[u64; 4]>;

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

/// A set of vertices of some host graph, stored as a bitset.
///
/// Sets built for the same host have the same word length; binary operations
/// and comparisons treat missing words as zero.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: Words,
}

impl VertexSet {
    fn significant(&self) -> &[u64] {
        let len = self.words.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
        &self.words[..len]
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.significant() == other.significant()
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.significant().hash(state);
    }
}

impl VertexSet {
    /// The empty set with room for vertices `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet { words: smallvec::smallvec![0; word_count(n)] }
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let k = (n - lo).min(64);
            *w = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n.max(v + 1));
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    fn grow(&mut self, v: usize) {
        let need = v / 64 + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.grow(v);
        let (w, b) = (v / 64, v % 64);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        match self.words.get_mut(w) {
            Some(word) => {
                let had = *word >> b & 1 == 1;
                *word &= !(1 << b);
                had
            }
            None => false,
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words.get(v / 64).is_some_and(|w| w >> (v % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| f(self.words.get(i).copied().unwrap_or(0), other.words.get(i).copied().unwrap_or(0)))
            .collect();
        VertexSet { words }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn union_with(&mut self, other: &Self) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().enumerate().all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Members strictly greater than `v`.
    pub fn above(&self, v: usize) -> Self {
        let mut s = self.clone();
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if lo + 63 <= v {
                *w = 0;
            } else if lo <= v {
                let b = v - lo;
                *w &= if b == 63 { 0 } else { u64::MAX << (b + 1) };
            }
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::default();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        Ok(vs.into_iter().collect())
    }
}

/// Ascending iterator over a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// How a vertex outside a set attaches to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Complete,
    Anticomplete,
    Mixed,
}

impl Relation {
    /// The relation seen in the complement graph.
    pub fn flip(self) -> Self {
        match self {
            Relation::Complete => Relation::Anticomplete,
            Relation::Anticomplete => Relation::Complete,
            Relation::Mixed => Relation::Mixed,
        }
    }
}

/// A finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![VertexSet::empty(n); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are in range")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`, rejecting out-of-range endpoints and loops.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds `uv`. Panics if either endpoint is out of range or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.add_edge(u, v)
        } else {
            self.remove_edge(u, v)
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].above(u).iter().map(move |v| (u, v)).collect::<Vec<_>>())
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by `s`, relabeled `0..|s|` in ascending order of
    /// the original labels. The returned map sends new labels to old ones.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        Ok((self.induced_by_order(&map), map))
    }

    /// The subgraph induced by the listed vertices, vertex `i` of the result
    /// being `order[i]`.
    pub fn induced_by_order(&self, order: &[usize]) -> Graph {
        let mut g = Graph::new(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// The graph `h` with `h.has_edge(i, j) == self.has_edge(order[i], order[j])`.
    /// `order` must be a permutation of `0..n`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        self.induced_by_order(order)
    }

    /// Inverse of [`Graph::relabel`]: returns `g` such that `g.relabel(order) == *self`.
    pub fn unrelabel(&self, order: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (i, j) in self.edges() {
            g.add_edge(order[i], order[j]);
        }
        g
    }

    /// Connected components of `G[s]`, sorted by least member.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        self.components_by(s, |v| self.adj[v].clone())
    }

    /// Anticomponents of `s`: components of the complement restricted to `s`.
    pub fn anticomponents(&self, s: &VertexSet) -> Vec<VertexSet> {
        self.components_by(s, |v| {
            let mut row = s.difference(&self.adj[v]);
            row.remove(v);
            row
        })
    }

    fn components_by(&self, s: &VertexSet, nbrs: impl Fn(usize) -> VertexSet) -> Vec<VertexSet> {
        let mut left = s.clone();
        let mut out = Vec::new();
        while let Some(start) = left.min() {
            let mut comp = VertexSet::singleton(self.n, start);
            let mut frontier = comp.clone();
            left.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    next.union_with(&nbrs(v).intersection(&left));
                }
                left.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        self.components(s).len() <= 1
    }

    /// How `v` attaches to `s`. `v` must lie outside the non-empty set `s`.
    pub fn relation(&self, v: usize, s: &VertexSet) -> Result<Relation> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if s.contains(v) {
            return Err(Error::VertexInSet(v));
        }
        Ok(self.relation_unchecked(v, s))
    }

    #[inline]
    pub(crate) fn relation_unchecked(&self, v: usize, s: &VertexSet) -> Relation {
        let hit = self.adj[v].intersects(s);
        let all = s.is_subset(&self.adj[v]);
        match (hit, all) {
            (_, true) => Relation::Complete,
            (false, _) => Relation::Anticomplete,
            _ => Relation::Mixed,
        }
    }

    pub fn is_complete_to(&self, v: usize, s: &VertexSet) -> bool {
        s.difference(&self.adj[v]).iter().all(|u| u == v)
    }

    pub fn is_anticomplete_to(&self, v: usize, s: &VertexSet) -> bool {
        !self.adj[v].intersects(s)
    }

    /// `v` has both a neighbor and a non-neighbor in `s` (ignoring `v` itself).
    pub fn is_mixed_on(&self, v: usize, s: &VertexSet) -> bool {
        !self.is_complete_to(v, s) && !self.is_anticomplete_to(v, s)
    }

    /// Every vertex of `s` is adjacent to every vertex of `t`.
    pub fn sets_complete(&self, s: &VertexSet, t: &VertexSet) -> bool {
        s.iter().all(|v| t.is_subset(&self.adj[v]))
    }

    pub fn sets_anticomplete(&self, s: &VertexSet, t: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(t))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.difference(&self.adj[v]);
            rest.remove(v);
            rest.is_empty()
        })
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edges().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Graph::from_edges(r.n, &r.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn complement_of_edgeless_is_complete() {
        assert_eq!(Graph::new(3).complement(), Graph::complete(3));
    }

    #[test]
    fn pentagon_is_self_complementary() {
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        // the complement cycle runs 0-2-4-1-3-0
        assert_eq!(co.relabel(&[0, 2, 4, 1, 3]), c5);
    }

    #[test]
    fn complement_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 8);
            assert_eq!(g.complement().complement(), g);
        }
        for n in 0..=10 {
            let g = random_graph(&mut rng, n);
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn induced_examples() {
        let p5 = Graph::path(5);
        let (p3, map) = p5.induced(&set(&[0, 1, 2])).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);

        let (p4, _) = Graph::cycle(5).induced(&set(&[0, 1, 2, 3])).unwrap();
        assert_eq!(p4, Graph::path(4));

        let (same, _) = p5.induced(&p5.vertices()).unwrap();
        assert_eq!(same, p5);

        assert!(matches!(p5.induced(&set(&[0, 7])), Err(Error::VertexOutOfRange { vertex: 7, n: 5 })));
    }

    #[test]
    fn components_examples() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components(&two_k2.vertices()), vec![set(&[0, 1]), set(&[2, 3])]);
        let k4 = Graph::complete(4);
        assert_eq!(k4.components(&k4.vertices()), vec![set(&[0, 1, 2, 3])]);
        assert!(k4.components(&VertexSet::empty(4)).is_empty());
    }

    #[test]
    fn anticomponents_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.anticomponents(&c4.vertices()), vec![set(&[0, 2]), set(&[1, 3])]);
        let k3 = Graph::complete(3);
        assert_eq!(k3.anticomponents(&k3.vertices()), vec![set(&[0]), set(&[1]), set(&[2])]);
        let e3 = Graph::new(3);
        assert_eq!(e3.anticomponents(&e3.vertices()), vec![set(&[0, 1, 2])]);
    }

    #[test]
    fn relation_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.relation(0, &set(&[1, 4])).unwrap(), Relation::Complete);
        assert_eq!(c5.relation(0, &set(&[2, 3])).unwrap(), Relation::Anticomplete);
        assert_eq!(c5.relation(0, &set(&[1, 2])).unwrap(), Relation::Mixed);
        assert!(matches!(c5.relation(0, &set(&[0, 1])), Err(Error::VertexInSet(0))));
        assert!(matches!(c5.relation(0, &VertexSet::empty(5)), Err(Error::EmptySet)));
    }

    #[test]
    fn tiny_graphs_are_legal() {
        let g0 = Graph::new(0);
        assert_eq!(g0.complement(), g0);
        assert!(g0.components(&g0.vertices()).is_empty());
        let g1 = Graph::new(1);
        assert_eq!(g1.anticomponents(&g1.vertices()), vec![set(&[0])]);
    }

    #[test]
    fn partitions_and_relation_duality() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let n = rng.gen_range(0..=10);
            let g = random_graph(&mut rng, n);
            let co = g.complement();
            let s: VertexSet = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
            for (parts, host) in [(g.components(&s), &g), (g.anticomponents(&s), &co)] {
                let mut union = VertexSet::empty(n);
                for p in &parts {
                    assert!(p.is_disjoint(&union));
                    union.union_with(p);
                    assert_eq!(host.components(p).len(), 1);
                }
                assert_eq!(union.to_vec(), s.to_vec());
                let mins: Vec<_> = parts.iter().map(|p| p.min().unwrap()).collect();
                assert!(mins.windows(2).all(|w| w[0] < w[1]));
            }
            for v in 0..n {
                if s.contains(v) || s.is_empty() {
                    continue;
                }
                assert_eq!(g.relation(v, &s).unwrap().flip(), co.relation(v, &s).unwrap());
            }
        }
    }

    #[test]
    fn vertex_set_ops() {
        let a = set(&[1, 5, 70, 130]);
        assert_eq!(a.min(), Some(1));
        assert_eq!(a.max(), Some(130));
        assert_eq!(a.above(5).to_vec(), vec![70, 130]);
        assert_eq!(a.above(63).to_vec(), vec![70, 130]);
        assert_eq!(a.above(130).to_vec(), Vec::<usize>::new());
        assert_eq!(VertexSet::full(65).len(), 65);
        assert!(set(&[1, 70]).is_subset(&a));
        assert!(!set(&[2]).is_subset(&a));
    }

    #[test]
    fn equality_ignores_capacity() {
        assert_eq!(VertexSet::empty(4), VertexSet::default());
        assert_eq!(VertexSet::from_vertices(200, [3]), VertexSet::singleton(4, 3));
        assert_ne!(VertexSet::empty(4), VertexSet::singleton(4, 0));
    }

    #[test]
    fn relabel_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_graph(&mut rng, 9);
        let order = [3, 1, 4, 0, 8, 5, 7, 2, 6];
        let h = g.relabel(&order);
        assert_eq!(h.unrelabel(&order), g);
        for i in 0..9 {
            for j in 0..9 {
                if i != j {
                    assert_eq!(h.has_edge(i, j), g.has_edge(order[i], order[j]));
                }
            }
        }
    }
}
