//! Structural invariants on graphs too large for the oracle.

use proptest::prelude::*;
use tecc_core::generator::{
    gen_planted, gen_scaling_plant, random_pairs, Block, Connector, PlantSpec, Skeleton,
};
use tecc_core::invariants::structural_violations;
use tecc_core::{decompose, decompose_with, Multigraph, Options};

fn checked() -> Options {
    Options {
        check_path_invariants: true,
    }
}

fn assert_clean(g: &Multigraph) {
    let (d, c) = decompose_with(g, checked());
    let v = structural_violations(g, &d, Some(&c));
    assert!(v.is_empty(), "{v:#?}");
    assert_eq!(d, decompose(g), "path checks changed the result");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn random_multigraphs(n in 1usize..80, density in 0usize..5, seed in any::<u64>()) {
        let m = n * density / 2 + (seed % 7) as usize;
        let g = Multigraph::from_edge_list(n, &random_pairs(n, m, seed)).unwrap();
        assert_clean(&g);
    }

    #[test]
    fn same_graph_same_answer(n in 1usize..40, m in 0usize..120, seed in any::<u64>()) {
        let g = Multigraph::from_edge_list(n, &random_pairs(n, m, seed)).unwrap();
        let a = decompose_with(&g, Options { check_path_invariants: false });
        let b = decompose_with(&g, Options { check_path_invariants: false });
        prop_assert_eq!(a.0, b.0);
        prop_assert_eq!(a.1.alpha_insertions, b.1.alpha_insertions);
    }
}

#[test]
fn planted_chains_and_trees() {
    for seed in 0..40u64 {
        for (skeleton, connector) in [
            (Skeleton::Path, Connector::TwoEdgeBundle),
            (Skeleton::Tree, Connector::TwoEdgeBundle),
            (Skeleton::Tree, Connector::Bridge),
            (Skeleton::Cycle, Connector::Bridge),
        ] {
            let blocks = (0..30)
                .map(|i| [Block::Complete(4), Block::Wheel(5), Block::DoubledCycle(4)][i % 3])
                .collect();
            let p = gen_planted(&PlantSpec {
                blocks,
                skeleton,
                connector,
                seed,
                shuffle: true,
            })
            .unwrap();
            assert_clean(&p.graph);
            let d = decompose(&p.graph).canonical(&p.graph);
            let classes: Vec<_> = d.components.iter().map(|c| c.sigma.clone()).collect();
            assert_eq!(classes, p.classes);
        }
    }
}

#[test]
fn sparse_large_graphs() {
    for (n, m, seed) in [
        (5000, 6000, 1),
        (2000, 2000, 2),
        (3000, 9000, 3),
        (10_000, 30_000, 4),
    ] {
        assert_clean(&Multigraph::from_edge_list(n, &random_pairs(n, m, seed)).unwrap());
    }
    assert_clean(&gen_scaling_plant(50_000).graph);
}
