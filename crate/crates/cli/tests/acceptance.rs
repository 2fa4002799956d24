//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use p5free_core::enumerate::{labeled_graph_count, scan_structure_corpus, structure_corpus, CLASS_MAX_N};
use p5free_core::generate::{all_small_pairs, arbitrary_pair, composable_pair, generate, Kind};
use p5free_core::oracle::{self, graph_from_mask};
use p5free_core::{
    build_structure_partition, decompose, find_split_divide, is_free, is_split, lemma_abx, recognize, reconstruct,
    split_into_pair, unify_pair, validate_composable_pair, validate_split_divide, validate_structure_partition,
    ComposablePair, Graph, Pattern, RecognitionResult, Side, SplitDivide, VertexSet,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MEMBER: [Pattern; 2] = [Pattern::P5, Pattern::CoP5];
const CLASS: [Pattern; 3] = [Pattern::P5, Pattern::CoP5, Pattern::C5];

struct Verdict {
    failures: u64,
    detail: String,
}

fn report(k: usize, title: &str, start: Instant, v: Verdict) -> bool {
    let ok = v.failures == 0;
    println!(
        "criterion {k} [{}] {title}: failures={} {} ({:.1}s)",
        if ok { "PASS" } else { "FAIL" },
        v.failures,
        v.detail,
        start.elapsed().as_secs_f64()
    );
    ok
}

fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| (0..labeled_graph_count(n)).map(move |m| graph_from_mask(n, m)))
}

fn recognition() -> Verdict {
    let (mut graphs, mut failures) = (0, 0);
    for g in all_graphs(6) {
        graphs += 1;
        failures += (recognize(&g) != oracle::is_free(&g, &MEMBER)) as u64;
    }
    Verdict { failures, detail: format!("graphs={graphs} (all labeled, n <= 6)") }
}

fn split_characterization() -> Verdict {
    let (mut graphs, mut failures) = (0, 0);
    for g in all_graphs(6) {
        graphs += 1;
        let got = is_split(&g);
        let free = is_free(&g, &[Pattern::C4, Pattern::CoC4, Pattern::C5]).is_free();
        let bad = got.is_split() != free
            || free != oracle::is_free(&g, &[Pattern::C4, Pattern::CoC4, Pattern::C5])
            || free != oracle::is_split(&g)
            || match &got {
                p5free_core::SplitOutcome::Split(p) => p.validate(&g).is_err(),
                p5free_core::SplitOutcome::NotSplit(w) => w.validate(&g).is_err(),
            };
        failures += bad as u64;
    }
    Verdict { failures, detail: format!("graphs={graphs} (all labeled, n <= 6)") }
}

fn lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn structure_ok(g: &Graph) -> bool {
    match build_structure_partition(g) {
        Ok(sp) => {
            validate_structure_partition(g, &sp).is_ok_and(|v| v.is_empty())
                && oracle::structure_clauses(g, &lists(&sp.xs), &lists(&sp.ys)).is_ok()
        }
        Err(_) => false,
    }
}

fn side_graph(g: &Graph, d: &SplitDivide) -> Graph {
    match d.side {
        Side::InG => g.clone(),
        Side::InComplement => g.complement(),
    }
}

fn divide_ok(g: &Graph) -> bool {
    match find_split_divide(g) {
        Ok(Some(d)) => {
            let h = side_graph(g, &d);
            validate_split_divide(g, &d).is_ok_and(|v| v.is_empty())
                && oracle::split_divide(&h, &d.a.to_vec(), &d.b.to_vec(), &d.c.to_vec(), &d.l.to_vec(), &d.t.to_vec())
                    .is_ok()
        }
        Ok(None) => oracle::is_split(g),
        Err(_) => false,
    }
}

/// Criteria 3 and 4 share one pass over the corpus.
fn structure_and_divide() -> (Verdict, Verdict) {
    let (mut graphs, mut s_fail, mut d_fail, mut divides) = (0, 0, 0, 0);
    for n in 1..=CLASS_MAX_N {
        let (count, results) = scan_structure_corpus(n, |g| {
            let s = structure_ok(g);
            let d = divide_ok(g) && divide_ok(&g.complement());
            let real = [g.clone(), g.complement()].iter().filter(|h| !is_split(h).is_split()).count();
            Some((s, d, real))
        });
        graphs += count;
        for (s, d, real) in results {
            s_fail += !s as u64;
            d_fail += !d as u64;
            divides += real;
        }
    }
    let detail = format!("graphs={graphs} (full enumeration, n <= {CLASS_MAX_N})");
    (
        Verdict { failures: s_fail, detail: detail.clone() },
        Verdict { failures: d_fail, detail: format!("{detail}, plus complements; non-split inputs={divides}") },
    )
}

fn composition_counterexamples(p: &ComposablePair) -> u64 {
    let g = unify_pair(p).unwrap();
    CLASS
        .into_iter()
        .filter(|&h| oracle::contains(&g, h) != (oracle::contains(&p.g1, h) || oracle::contains(&p.g2, h)))
        .count() as u64
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    graph_from_mask(n, rng.gen::<u64>() & ((1u64 << bits) - 1))
}

fn composition() -> Verdict {
    let mut failures = 0;
    let tiny = all_small_pairs(3, 1);
    for p in &tiny {
        failures += !validate_composable_pair(p).is_empty() as u64;
        failures += composition_counterexamples(p);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for seed in 0..5_000u64 {
        let ga = random_graph(rng.gen_range(1..=5), &mut rng);
        let gc = random_graph(rng.gen_range(1..=5), &mut rng);
        let (b, l, t) = (rng.gen_range(0..=3), rng.gen_range(0..=2), rng.gen_range(0..=2));
        failures += composition_counterexamples(&arbitrary_pair(&ga, &gc, b, l, t, seed));
    }
    for seed in 0..5_000u64 {
        let kind = [Kind::Mixed, Kind::Unified, Kind::PentagonSub][seed as usize % 3];
        failures += composition_counterexamples(&composable_pair(kind, 5 + seed as usize % 10, seed));
    }
    let mut planted = 0;
    for h in CLASS {
        let hg = match h {
            Pattern::P5 => Graph::path(5),
            Pattern::CoP5 => Graph::path(5).complement(),
            _ => Graph::cycle(5),
        };
        for seed in 0..500u64 {
            let other = random_graph(rng.gen_range(1..=4), &mut rng);
            let (b, l, t) = (rng.gen_range(0..=2), rng.gen_range(0..=2), rng.gen_range(0..=2));
            for p in [arbitrary_pair(&hg, &other, b, l, t, seed), arbitrary_pair(&other, &hg, b, l, t, seed)] {
                planted += 1;
                failures += !oracle::contains(&unify_pair(&p).unwrap(), h) as u64;
            }
        }
    }
    Verdict {
        failures,
        detail: format!(
            "pairs={} ({} exhaustive tiny + 10000 seeded) x {{P5, co-P5, C5}}; planted={planted}",
            tiny.len() + 10_000,
            tiny.len()
        ),
    }
}

fn round_trips() -> Verdict {
    let mut failures = 0;
    let mut members = 0;
    for g in all_graphs(6) {
        if let RecognitionResult::Tree(t) = decompose(&g) {
            members += 1;
            failures += (reconstruct(&t).ok().as_ref() != Some(&g)) as u64;
        }
    }
    for seed in 0..10_000u64 {
        let kind = Kind::ALL[seed as usize % 4];
        let n = 1 + (seed as usize / 4) % 60;
        let ok = generate(kind, n, seed).is_ok_and(|gen| match decompose(&gen.graph) {
            RecognitionResult::Tree(t) => reconstruct(&t).is_ok_and(|h| h == gen.graph),
            RecognitionResult::Witness(_) => false,
        });
        failures += !ok as u64;
    }
    let mut divides = 0;
    'corpus: for g in structure_corpus(7) {
        for h in [g.complement(), g] {
            if divides == 1_000 {
                break 'corpus;
            }
            if let Ok(Some(d)) = find_split_divide(&h) {
                divides += 1;
                let side = side_graph(&h, &d);
                let ok = split_into_pair(&h, &d)
                    .and_then(|sp| Ok(unify_pair(&sp.pair)?.unrelabel(&sp.order)))
                    .is_ok_and(|u| u == side);
                failures += !ok as u64;
            }
        }
    }
    if divides < 1_000 {
        failures += 1;
    }
    Verdict { failures, detail: format!("members n <= 6: {members}; generated (n <= 60): 10000; divides: {divides}") }
}

fn counting() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_p5free"))
        .args(["enumerate", "--n", "5", "--mode", "count"])
        .output()
        .expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout);
    let reported = |n: usize| -> Option<u64> {
        text.lines()
            .find(|l| l.starts_with(&format!("n={n} ")))?
            .split_whitespace()
            .find_map(|f| f.strip_prefix("members="))?
            .parse()
            .ok()
    };
    let mut failures = (!out.status.success()) as u64;
    let mut detail = Vec::new();
    for n in [4, 5] {
        let brute = all_graphs(n).filter(|g| g.n() == n && oracle::is_free(g, &MEMBER)).count() as u64;
        let got = reported(n);
        failures += (got != Some(brute)) as u64;
        detail.push(format!("n={n}: reported {got:?}, brute force {brute}"));
    }
    Verdict { failures, detail: detail.join("; ") }
}

fn lemma() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut pool = structure_corpus(7);
    let mut seed = 0;
    while pool.len() < 13_000 {
        seed += 1;
        let g = generate(Kind::ALL[seed as usize % 4], rng.gen_range(6..20), seed).unwrap().graph;
        if is_free(&g, &CLASS).is_free() {
            pool.push(g);
        }
    }
    let (mut planted, mut failures) = (0, 0);
    while planted < 500 {
        let g = pool.choose(&mut rng).unwrap();
        let t = rng.gen_range(0..g.n());
        let mut far = g.vertices().difference(g.neighbors(t));
        far.remove(t);
        let Some(a) = g.components(&far).choose(&mut rng).cloned() else { continue };
        let b: VertexSet =
            g.neighbors(t).iter().filter(|&v| g.neighbors(v).intersects(&a) && rng.gen_bool(0.75)).collect();
        if b.is_empty() {
            continue;
        }
        planted += 1;
        let ok = lemma_abx(g, &a, &b, t).is_ok_and(|v| a.contains(v) && b.iter().all(|u| g.has_edge(u, v)));
        failures += !ok as u64;
    }
    Verdict { failures, detail: format!("instances={planted}") }
}

fn main() -> ExitCode {
    let mut ok = true;
    let t = Instant::now();
    ok &= report(1, "recognition equals brute-force {P5, co-P5}-freeness", t, recognition());
    let t = Instant::now();
    ok &= report(2, "split iff {C4, co-C4, C5}-free", t, split_characterization());
    let t = Instant::now();
    let (s, d) = structure_and_divide();
    ok &= report(3, "structure partition valid on prime class graphs with co-C4", t, s);
    ok &= report(4, "split divide or split certificate on corpus and complements", t, d);
    let t = Instant::now();
    ok &= report(5, "unification preserves H-freeness, H in {P5, co-P5, C5}", t, composition());
    let t = Instant::now();
    ok &= report(6, "round trips (trees, generated members, divide/unify)", t, round_trips());
    let t = Instant::now();
    ok &= report(7, "enumerate count matches brute force", t, counting());
    let t = Instant::now();
    ok &= report(8, "lemma_abx returns a vertex complete to B", t, lemma());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
