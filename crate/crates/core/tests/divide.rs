//! Split divides over the structure corpus and its complements, and the
//! divide/unify round trip.

use p5free_core::enumerate::scan_structure_corpus;
use p5free_core::generate::{generate, Kind};
use p5free_core::{
    decompose_by_homogeneous_set, find_proper_homogeneous_set, find_split_divide, is_split, oracle, split_into_pair,
    unify_pair, validate_composable_pair, validate_split_divide, Graph, Side, SplitDivide,
};

fn definitional(g: &Graph, d: &SplitDivide) -> Result<(), String> {
    let h = match d.side {
        Side::InG => g.clone(),
        Side::InComplement => g.complement(),
    };
    oracle::split_divide(&h, &d.a.to_vec(), &d.b.to_vec(), &d.c.to_vec(), &d.l.to_vec(), &d.t.to_vec())
}

fn check(g: &Graph) -> Option<String> {
    match find_split_divide(g) {
        Err(e) => Some(format!("{g:?}: {e}")),
        Ok(None) if !oracle::is_split(g) => Some(format!("{g:?}: no divide but not split")),
        Ok(None) => None,
        Ok(Some(d)) => {
            let v = validate_split_divide(g, &d).unwrap();
            if !v.is_empty() {
                return Some(format!("{g:?}: {v:?}"));
            }
            if let Err(e) = definitional(g, &d) {
                return Some(format!("{g:?}: {e}"));
            }
            let sp = split_into_pair(g, &d).unwrap();
            if !validate_composable_pair(&sp.pair).is_empty() {
                return Some(format!("{g:?}: pair invalid"));
            }
            let h = match d.side {
                Side::InG => g.clone(),
                Side::InComplement => g.complement(),
            };
            let back = unify_pair(&sp.pair).unwrap().unrelabel(&sp.order);
            (back != h).then(|| format!("{g:?}: unify does not undo the split"))
        }
    }
}

#[test]
fn corpus_and_complements_up_to_seven() {
    for n in 4..=7 {
        let (_, failures) = scan_structure_corpus(n, |g| check(g).or_else(|| check(&g.complement())));
        assert!(failures.is_empty(), "n = {n}: {:?}", &failures[..failures.len().min(3)]);
    }
}

// collapses modules until the graph is prime
fn prime_quotient(mut g: Graph) -> Graph {
    while let Some(h) = find_proper_homogeneous_set(&g) {
        let outer = decompose_by_homogeneous_set(&g, &h).unwrap().outer;
        g = outer;
    }
    g
}

#[test]
fn generated_prime_members() {
    let mut divides = 0;
    for seed in 0..600 {
        let g = prime_quotient(generate(Kind::Unified, 10 + seed as usize % 30, seed).unwrap().graph);
        if g.n() < 6 {
            continue;
        }
        assert_eq!(check(&g), None);
        assert_eq!(check(&g.complement()), None);
        if !is_split(&g).is_split() {
            divides += 1;
        }
    }
    assert!(divides > 10, "{divides}");
}
