//! Exhaustive checks over every labeled graph on a few vertices.
//!
//! Work fans out across graph masks with rayon; results are merged
//! deterministically (disagreements sorted by graph6 string), so reports do
//! not depend on the thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::detect::{is_free, is_split, Pattern};
use crate::graph::Graph;
use crate::graph6;
use crate::oracle;
use crate::tree::{decompose, reconstruct, RecognitionResult};

/// Largest vertex count the harness accepts.
pub const MAX_N: usize = 7;

pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountLine {
    pub n: usize,
    pub graphs: u64,
    pub members: u64,
}

/// Number of labeled graphs on `n` vertices with no induced P5 or co-P5,
/// as decided by the decomposition.
pub fn count_members(n: usize) -> CountLine {
    let members = (0..labeled_graph_count(n))
        .into_par_iter()
        .filter(|&mask| decompose(&oracle::graph_from_mask(n, mask)).is_tree())
        .count() as u64;
    CountLine { n, graphs: labeled_graph_count(n), members }
}

/// The same count from the subset-scanning oracle.
pub fn count_members_brute(n: usize) -> u64 {
    (0..labeled_graph_count(n))
        .into_par_iter()
        .filter(|&mask| oracle::is_free(&oracle::graph_from_mask(n, mask), &[Pattern::P5, Pattern::CoP5]))
        .count() as u64
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Disagreement {
    pub graph6: String,
    pub what: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreeReport {
    pub n: usize,
    pub graphs: u64,
    pub members: u64,
    pub split: u64,
    pub disagreements: Vec<Disagreement>,
}

/// Checks one graph: recognition against the oracle, the returned
/// certificate against the graph, and split recognition against the
/// forbidden-pattern characterization.
pub fn check_graph(g: &crate::graph::Graph) -> (bool, bool, Vec<String>) {
    let mut bad = Vec::new();
    let result = decompose(g);
    let member = result.is_tree();
    if member != oracle::is_free(g, &[Pattern::P5, Pattern::CoP5]) {
        bad.push(format!("recognize = {member} disagrees with brute force"));
    }
    match &result {
        RecognitionResult::Tree(t) => match reconstruct(t) {
            Ok(h) if h == *g => {}
            Ok(_) => bad.push("tree replays to a different graph".into()),
            Err(e) => bad.push(format!("tree does not replay: {e}")),
        },
        RecognitionResult::Witness(w) => {
            if let Err(e) = w.validate(g) {
                bad.push(format!("bad witness: {e}"));
            }
        }
    }
    let split = is_split(g);
    let forbidden_free = is_free(g, &[Pattern::C4, Pattern::CoC4, Pattern::C5]).is_free();
    if split.is_split() != forbidden_free {
        bad.push(format!("is_split = {} but C4/co-C4/C5-free = {forbidden_free}", split.is_split()));
    }
    match &split {
        crate::detect::SplitOutcome::Split(p) => {
            if let Err(e) = p.validate(g) {
                bad.push(format!("bad split partition: {e}"));
            }
        }
        crate::detect::SplitOutcome::NotSplit(w) => {
            if let Err(e) = w.validate(g) {
                bad.push(format!("bad split witness: {e}"));
            }
        }
    }
    (member, split.is_split(), bad)
}

pub fn agree(n: usize) -> AgreeReport {
    let (members, split, mut disagreements) = (0..labeled_graph_count(n))
        .into_par_iter()
        .map(|mask| {
            let g = oracle::graph_from_mask(n, mask);
            let (member, split, bad) = check_graph(&g);
            let code = graph6::encode(&g);
            let bad: Vec<Disagreement> =
                bad.into_iter().map(|what| Disagreement { graph6: code.clone(), what }).collect();
            (member as u64, split as u64, bad)
        })
        .reduce(
            || (0, 0, Vec::new()),
            |mut a, b| {
                a.0 += b.0;
                a.1 += b.1;
                a.2.extend(b.2);
                a
            },
        );
    disagreements.sort();
    AgreeReport { n, graphs: labeled_graph_count(n), members, split, disagreements }
}

// adjacency rows of a graph on at most 8 vertices
type Small = [u8; 8];

/// Largest vertex count of the class enumeration.
pub const CLASS_MAX_N: usize = 8;

fn bits(mut s: u8) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            v
        })
    })
}

// P5 or C5 in G[s], for |s| = 5; co-P5 through `co`
fn path_or_cycle(adj: &Small, s: u8, co: bool) -> bool {
    let row = |v: usize| if co { !adj[v] & s & !(1 << v) } else { adj[v] & s };
    let (mut ends, mut edges, mut twos) = (0u8, 0, 0);
    for v in bits(s) {
        let d = row(v).count_ones();
        edges += d;
        match d {
            1 => ends |= 1 << v,
            2 => twos += 1,
            _ => return false,
        }
    }
    match (edges / 2, ends.count_ones()) {
        (5, 0) => !co,
        // K3 + K2 has the same degrees; there the two ends are adjacent
        (4, 2) => twos == 3 && row(ends.trailing_zeros() as usize) & ends == 0,
        _ => false,
    }
}

fn in_class(adj: &Small, s: u8) -> bool {
    !(path_or_cycle(adj, s, false) || path_or_cycle(adj, s, true))
}

fn has_co_c4(adj: &Small, n: usize) -> bool {
    quads(n).any(|q| bits(q).all(|v| (adj[v] & q).count_ones() == 1))
}

fn quads(n: usize) -> impl Iterator<Item = u8> {
    (0u16..1 << n).map(|q| q as u8).filter(|q| q.count_ones() == 4)
}

fn prime_small(adj: &Small, n: usize) -> bool {
    let full = ((1u16 << n) - 1) as u8;
    for u in 0..n {
        for v in u + 1..n {
            let mut m = (1u8 << u) | (1 << v);
            while let Some(w) = bits(full & !m).find(|&w| adj[w] & m != 0 && adj[w] & m != m) {
                m |= 1 << w;
            }
            if m != full {
                return false;
            }
        }
    }
    true
}

fn to_graph(adj: &Small, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for (u, &row) in adj.iter().enumerate().take(n) {
        for v in bits(row).filter(|&v| v > u) {
            g.add_edge(u, v);
        }
    }
    g
}

// extensions of `h` on k - 1 vertices by a vertex k - 1 that stay in the class
fn extend(h: &Small, k: usize) -> impl Iterator<Item = Small> + '_ {
    let w = k - 1;
    (0u16..1 << w).filter_map(move |mask| {
        let mut g = *h;
        g[w] = mask as u8;
        for u in bits(mask as u8) {
            g[u] |= 1 << w;
        }
        quads(w).all(|q| in_class(&g, q | 1 << w)).then_some(g)
    })
}

fn class_level(n: usize) -> Vec<Small> {
    let mut level = vec![[0u8; 8]];
    for k in 1..=n {
        level = level.par_iter().flat_map_iter(|h| extend(h, k)).collect();
    }
    level
}

/// Every labeled graph on `n <= 7` vertices with no induced P5, co-P5 or
/// C5.
///
/// The class is closed under taking induced subgraphs, so the members on
/// `n` vertices are exactly the one-vertex extensions of members on `n - 1`
/// that stay in the class.
pub fn class_members(n: usize) -> Vec<Graph> {
    assert!(n < CLASS_MAX_N, "class_members stores every member; use scan_structure_corpus");
    class_level(n).iter().map(|a| to_graph(a, n)).collect()
}

/// Runs `f` on every prime member on `n <= 8` vertices that contains a
/// co-C4 (the inputs of the structure partition and of split divides),
/// without storing them. Returns the number of graphs visited and the
/// `Some` results of `f`, in enumeration order.
pub fn scan_structure_corpus<T, F>(n: usize, f: F) -> (u64, Vec<T>)
where
    T: Send,
    F: Fn(&Graph) -> Option<T> + Sync,
{
    assert!(n <= CLASS_MAX_N, "enumeration is limited to {CLASS_MAX_N} vertices");
    if n == 0 {
        return (0, Vec::new());
    }
    class_level(n - 1)
        .par_iter()
        .map(|h| {
            let mut seen = 0;
            let mut out = Vec::new();
            for g in extend(h, n).filter(|g| has_co_c4(g, n) && prime_small(g, n)) {
                seen += 1;
                out.extend(f(&to_graph(&g, n)));
            }
            (seen, out)
        })
        .reduce(
            || (0, Vec::new()),
            |mut a, b| {
                a.0 += b.0;
                a.1.extend(b.1);
                a
            },
        )
}

/// The graphs visited by [`scan_structure_corpus`], collected.
pub fn structure_corpus(n: usize) -> Vec<Graph> {
    scan_structure_corpus(n, |g| Some(g.clone())).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::CLASS;

    #[test]
    fn counts_for_four_and_five() {
        assert_eq!(count_members(4).members, 64);
        assert_eq!(count_members(5).members, 904);
        assert_eq!(count_members_brute(5), 904);
    }

    #[test]
    fn mask_order_matches_graph6_bit_order() {
        for mask in [0u64, 1, 0b1010011001, 1023] {
            let g = oracle::graph_from_mask(5, mask);
            let back = graph6::decode(&graph6::encode(&g)).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn class_members_match_brute_force() {
        for n in 0..=6 {
            let brute = (0..labeled_graph_count(n))
                .filter(|&m| oracle::is_free(&oracle::graph_from_mask(n, m), &CLASS))
                .count();
            assert_eq!(class_members(n).len(), brute, "n = {n}");
        }
    }

    #[test]
    fn structure_corpus_matches_the_definition() {
        for n in 4..=6 {
            let expected: Vec<Graph> = (0..labeled_graph_count(n))
                .map(|m| oracle::graph_from_mask(n, m))
                .filter(|g| {
                    oracle::is_free(g, &CLASS) && oracle::contains(g, Pattern::CoC4) && crate::modular::is_prime(g)
                })
                .collect();
            let mut got = structure_corpus(n);
            got.sort_by_key(graph6::encode);
            let mut expected = expected;
            expected.sort_by_key(graph6::encode);
            assert_eq!(got, expected, "n = {n}");
        }
    }

    #[test]
    fn agree_on_five() {
        let r = agree(5);
        assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
        assert_eq!(r.members, 904);
    }
}
