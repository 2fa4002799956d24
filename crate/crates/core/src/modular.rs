//! Homogeneous sets (modules), primality, and substitution.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A proper homogeneous set: `2 <= |members| < n` and no outside vertex is
/// mixed on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomogeneousSet {
    pub members: VertexSet,
}

impl fmt::Display for HomogeneousSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members.fmt(f)
    }
}

impl HomogeneousSet {
    /// Checks both invariants against `g`, naming a splitter on failure.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.members)?;
        let k = self.members.len();
        if k < 2 || k >= g.n() {
            return Err(Error::NotHomogeneous {
                set: self.members.to_string(),
                reason: format!("size {k} is not in 2..{}", g.n()),
            });
        }
        if let Some(v) = splitter(g, &self.members) {
            return Err(Error::NotHomogeneous {
                set: self.members.to_string(),
                reason: format!("vertex {v} is mixed on it"),
            });
        }
        Ok(())
    }
}

fn splitter(g: &Graph, s: &VertexSet) -> Option<usize> {
    g.vertices().difference(s).iter().find(|&v| g.is_mixed_on(v, s))
}

/// Least module containing `seed`. A vertex `x` outside the current set is mixed on it exactly when
/// its adjacency to some member differs from its adjacency to a fixed
/// reference member, so each newly added member only has to be compared
/// against the reference.
fn close_module(g: &Graph, seed: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut module = seed.clone();
    let Some(reference) = seed.min() else {
        return module;
    };
    let mut queue: Vec<usize> = seed.iter().filter(|&v| v != reference).collect();
    while let Some(w) = queue.pop() {
        let split = g.neighbors(w).symmetric_difference(g.neighbors(reference)).difference(&module);
        for x in split.iter() {
            module.insert(x);
            queue.push(x);
        }
        if module.len() == n {
            break;
        }
    }
    module
}

/// Returns an inclusion-maximal proper homogeneous set, or `None` if `g` is
/// prime.
///
/// The least module containing each vertex pair is computed; the largest
/// proper one wins (ties: least minimum element, then least member list).
/// It is then grown greedily in ascending vertex order while the closure
/// stays proper, which makes the result maximal under inclusion.
pub fn find_proper_homogeneous_set(g: &Graph) -> Option<HomogeneousSet> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let mut best: Option<VertexSet> = None;
    for u in 0..n {
        // closures seeded at u that already contain v cannot beat the one
        // that swallowed v
        let mut covered = VertexSet::empty(n);
        for v in u + 1..n {
            if covered.contains(v) {
                continue;
            }
            let mut seed = VertexSet::singleton(n, u);
            seed.insert(v);
            let m = close_module(g, &seed);
            if m.len() == n {
                continue;
            }
            covered.union_with(&m);
            let better = match &best {
                None => true,
                Some(b) => {
                    (std::cmp::Reverse(m.len()), m.min(), m.to_vec())
                        < (std::cmp::Reverse(b.len()), b.min(), b.to_vec())
                }
            };
            if better {
                best = Some(m);
            }
        }
    }
    let mut module = best?;
    let mut grown = true;
    while grown {
        grown = false;
        for w in 0..n {
            if module.contains(w) {
                continue;
            }
            let mut seed = module.clone();
            seed.insert(w);
            let m = close_module(g, &seed);
            if m.len() < n {
                module = m;
                grown = true;
            }
        }
    }
    Some(HomogeneousSet { members: module })
}

pub fn is_prime(g: &Graph) -> bool {
    find_proper_homogeneous_set(g).is_none()
}

/// Replaces vertex `x` of `outer` by `inner`, joining every inner vertex to
/// the neighbors of `x`.
///
/// Labels: the vertices of `outer` other than `x` come first in their
/// original order, then the vertices of `inner` in theirs.
pub fn substitute(outer: &Graph, x: usize, inner: &Graph) -> Result<Graph> {
    outer.check_vertex(x)?;
    if inner.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let no = outer.n() - 1;
    let mut g = Graph::new(no + inner.n());
    let map = |v: usize| if v < x { v } else { v - 1 };
    for (u, v) in outer.edges() {
        if u != x && v != x {
            g.add_edge(map(u), map(v));
        }
    }
    for (u, v) in inner.edges() {
        g.add_edge(no + u, no + v);
    }
    for y in outer.neighbors(x).iter() {
        for i in 0..inner.n() {
            g.add_edge(map(y), no + i);
        }
    }
    Ok(g)
}

/// The two parts of a graph split along a proper homogeneous set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSplit {
    pub inner: Graph,
    pub outer: Graph,
    /// The vertex of `outer` standing for the module.
    pub x: usize,
    /// `order[i]` is the vertex of the original graph that appears as vertex
    /// `i` of `substitute(outer, x, inner)`.
    pub order: Vec<usize>,
}

/// Splits `g` into `G[h]` and `G - (h - min h)`.
pub fn decompose_by_homogeneous_set(g: &Graph, h: &HomogeneousSet) -> Result<ModuleSplit> {
    h.validate(g)?;
    let rep = h.members.min().expect("proper sets are non-empty");
    let (inner, inner_map) = g.induced(&h.members)?;
    let mut keep = g.vertices().difference(&h.members);
    keep.insert(rep);
    let (outer, outer_map) = g.induced(&keep)?;
    let x = outer_map.iter().position(|&v| v == rep).expect("rep is kept");
    let order = outer_map.iter().copied().filter(|&v| v != rep).chain(inner_map.iter().copied()).collect();
    Ok(ModuleSplit { inner, outer, x, order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn brute_modules(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        (0u32..1 << n)
            .map(|mask| VertexSet::from_vertices(n, (0..n).filter(|i| mask >> i & 1 == 1)))
            .filter(|s| s.len() >= 2 && s.len() < n && splitter(g, s).is_none())
            .collect()
    }

    #[test]
    fn p4_and_c5_are_prime() {
        assert!(find_proper_homogeneous_set(&Graph::path(4)).is_none());
        assert!(brute_modules(&Graph::path(4)).is_empty());
        assert!(find_proper_homogeneous_set(&Graph::cycle(5)).is_none());
        assert!(brute_modules(&Graph::cycle(5)).is_empty());
    }

    #[test]
    fn c4_twins() {
        let h = find_proper_homogeneous_set(&Graph::cycle(4)).unwrap();
        assert_eq!(h.members.to_vec(), vec![0, 2]);
    }

    #[test]
    fn returned_set_is_inclusion_maximal() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(3..=8);
            let g = random_graph(&mut rng, n, 0.5);
            let mods = brute_modules(&g);
            match find_proper_homogeneous_set(&g) {
                None => assert!(mods.is_empty()),
                Some(h) => {
                    h.validate(&g).unwrap();
                    assert!(mods.iter().all(|m| !(h.members.is_subset(m) && *m != h.members)));
                }
            }
        }
        // edgeless: every 3-subset of 4 vertices is a module
        let h = find_proper_homogeneous_set(&Graph::new(4)).unwrap();
        assert_eq!(h.members.len(), 3);
    }

    #[test]
    fn substitute_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(substitute(&k2, 1, &k2).unwrap(), Graph::complete(3));

        // P3 with its middle blown up into two non-adjacent twins is C4
        let g = substitute(&Graph::path(3), 1, &Graph::new(2)).unwrap();
        assert_eq!(g.n(), 4);
        for i in [2, 3] {
            assert_eq!(g.neighbors(i).to_vec(), vec![0, 1]);
        }
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3));

        let p5 = Graph::path(5);
        let same = substitute(&p5, 4, &Graph::new(1)).unwrap();
        assert_eq!(same, p5);
        let moved = substitute(&p5, 2, &Graph::new(1)).unwrap();
        assert_eq!(moved, p5.relabel(&[0, 1, 3, 4, 2]));

        assert!(matches!(substitute(&p5, 5, &k2), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(substitute(&p5, 0, &Graph::new(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn decompose_examples() {
        let c4 = Graph::cycle(4);
        let h = HomogeneousSet { members: [0, 2].into_iter().collect() };
        let d = decompose_by_homogeneous_set(&c4, &h).unwrap();
        assert_eq!(d.inner, Graph::new(2));
        assert_eq!(d.outer, Graph::path(3).relabel(&[1, 0, 2]));
        assert_eq!(d.x, 0);

        let g = substitute(&Graph::path(4), 2, &Graph::complete(2)).unwrap();
        let h = HomogeneousSet { members: [3, 4].into_iter().collect() };
        let d = decompose_by_homogeneous_set(&g, &h).unwrap();
        assert_eq!(d.inner, Graph::complete(2));
        assert_eq!(d.outer, Graph::path(4).relabel(&[0, 1, 3, 2]));
        assert_eq!(d.x, 3);
        assert_eq!(substitute(&d.outer, d.x, &d.inner).unwrap().unrelabel(&d.order), g);

        let bad = HomogeneousSet { members: [0, 1].into_iter().collect() };
        assert!(decompose_by_homogeneous_set(&c4, &bad).is_err());
        let whole = HomogeneousSet { members: c4.vertices() };
        assert!(decompose_by_homogeneous_set(&c4, &whole).is_err());
    }

    #[test]
    fn substitute_then_decompose_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..1000 {
            let no = rng.gen_range(2..=5);
            let ni = rng.gen_range(2..=(9 - no).min(5));
            let outer = random_graph(&mut rng, no, 0.5);
            let inner = random_graph(&mut rng, ni, 0.5);
            let x = rng.gen_range(0..no);
            let g = substitute(&outer, x, &inner).unwrap();
            let h = HomogeneousSet { members: (no - 1..no - 1 + ni).collect() };
            h.validate(&g).unwrap();
            let d = decompose_by_homogeneous_set(&g, &h).unwrap();
            assert_eq!(d.inner, inner);
            // the outer part is relabeled with the module representative in
            // its place among the sorted labels
            let rebuilt = substitute(&d.outer, d.x, &d.inner).unwrap();
            assert_eq!(rebuilt, g.relabel(&d.order));
            assert_eq!(d.outer.relabel(&outer_order(no, x)), outer);
        }
    }

    // where each vertex of the original outer graph lands after a round trip
    fn outer_order(no: usize, x: usize) -> Vec<usize> {
        (0..no)
            .map(|v| {
                if v == x {
                    no - 1
                } else if v < x {
                    v
                } else {
                    v - 1
                }
            })
            .collect()
    }
}
