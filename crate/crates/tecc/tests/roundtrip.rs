//! Serialization round-trips on random multigraphs.

use proptest::prelude::*;
use tecc::doc::{DecompositionDoc, Format};
use tecc::{parse_edge_list, write_decomposition, write_edge_list};
use tecc_core::generator::random_pairs;
use tecc_core::{decompose, Multigraph};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn json_rebuilds_the_canonical_decomposition(n in 1usize..30, m in 0usize..60, seed in any::<u64>()) {
        let g = Multigraph::from_edge_list(n, &random_pairs(n, m, seed)).unwrap();
        let d = decompose(&g);
        let json = String::from_utf8(write_decomposition(&g, &d, Format::Json)).unwrap();
        let back = DecompositionDoc::from_json(&json).unwrap().to_decomposition().unwrap();
        prop_assert_eq!(back, d.canonical(&g));
    }

    #[test]
    fn edge_list_round_trip(n in 1usize..30, m in 0usize..60, seed in any::<u64>()) {
        let g = Multigraph::from_edge_list(n, &random_pairs(n, m, seed)).unwrap();
        let text = write_edge_list(&g, &["x".to_string()]);
        prop_assert_eq!(parse_edge_list(&text).unwrap().graph, g);
    }

    #[test]
    fn output_is_deterministic(n in 1usize..30, m in 0usize..60, seed in any::<u64>()) {
        let g = Multigraph::from_edge_list(n, &random_pairs(n, m, seed)).unwrap();
        for f in [Format::Json, Format::Text, Format::Dot] {
            prop_assert_eq!(write_decomposition(&g, &decompose(&g), f), write_decomposition(&g, &decompose(&g), f));
        }
    }
}
