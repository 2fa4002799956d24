//! Serialization round trips.

use p5free_cli::{parse_graphs, write_graph, Body, CertificateDoc, Format};
use p5free_core::generate::{generate, Kind};
use p5free_core::{decompose, graph6, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    g.set_edge(u, v, bits[k]);
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_and_edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g.clone());
        if g.n() > 0 {
            for f in [Format::Graph6, Format::EdgeList] {
                prop_assert_eq!(parse_graphs(write_graph(&g, f).as_bytes(), f).unwrap(), vec![g.clone()]);
            }
        }
    }

    #[test]
    fn recognition_documents_round_trip(g in graph(9)) {
        let body = match decompose(&g) {
            p5free_core::RecognitionResult::Tree(tree) => Body::Tree { tree },
            p5free_core::RecognitionResult::Witness(witness) => Body::Witness { witness },
        };
        let d = CertificateDoc::new(Some(graph6::encode(&g)), body);
        prop_assert_eq!(CertificateDoc::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn generated_certificates_round_trip(seed in any::<u64>(), n in 1usize..50, k in 0usize..4) {
        let gen = generate(Kind::ALL[k], n, seed).unwrap();
        let d = CertificateDoc::new(Some(graph6::encode(&gen.graph)), Body::Tree { tree: gen.tree });
        let back = CertificateDoc::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert!(p5free_cli::commands::check_certificate(&gen.graph, &back).is_ok());
    }
}

#[test]
fn graph6_exhaustive_up_to_five() {
    for n in 0usize..=5 {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u64..1 << pairs {
            let g = p5free_core::oracle::graph_from_mask(n, mask);
            assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
        }
    }
}
