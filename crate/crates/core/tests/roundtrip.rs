//! Certificates replay to their graphs, survive serialization, and the
//! generator's trees agree with the graphs they describe.

use p5free_core::enumerate::labeled_graph_count;
use p5free_core::generate::{generate, Kind};
use p5free_core::oracle::graph_from_mask;
use p5free_core::{decompose, graph6, reconstruct, DecompTree, RecognitionResult};
use proptest::prelude::*;

#[test]
fn every_member_up_to_six_replays() {
    for n in 1..=6 {
        for mask in 0..labeled_graph_count(n) {
            let g = graph_from_mask(n, mask);
            if let RecognitionResult::Tree(t) = decompose(&g) {
                assert_eq!(reconstruct(&t).unwrap(), g, "mask {mask}");
                assert_eq!(t.n(), n);
            }
        }
    }
}

#[test]
fn generated_members_replay() {
    for seed in 0..600u64 {
        let kind = Kind::ALL[seed as usize % 4];
        let n = 1 + (seed as usize * 31) % 60;
        let gen = generate(kind, n, seed).unwrap();
        assert_eq!(reconstruct(&gen.tree).unwrap(), gen.graph);
        let t = decompose(&gen.graph).tree().cloned().expect("generated graphs are members");
        assert_eq!(reconstruct(&t).unwrap(), gen.graph, "{kind} n={n} seed={seed}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trees_survive_json(seed in any::<u64>(), n in 1usize..40, k in 0usize..4) {
        let gen = generate(Kind::ALL[k], n, seed).unwrap();
        let json = serde_json::to_string(&gen.tree).unwrap();
        let back: DecompTree = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &gen.tree);
        prop_assert_eq!(reconstruct(&back).unwrap(), gen.graph.clone());
        prop_assert_eq!(graph6::decode(&graph6::encode(&gen.graph)).unwrap(), gen.graph);
    }
}
