//! Byte-exact canonical output for small hand-checked graphs.

use std::path::PathBuf;

use tecc::doc::{DecompositionDoc, Format};
use tecc::{read_edge_list, write_decomposition};
use tecc_core::oracle::{self, SizeGuard};
use tecc_core::{decompose, VertexId};

const CASES: [&str; 5] = ["c4", "k4", "digon3", "two_k4_bundle", "two_k4_bridge"];

fn golden(name: &str, ext: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.{ext}"))
}

#[test]
fn outputs_match_byte_for_byte() {
    for name in CASES {
        let g = read_edge_list(&golden(name, "edges")).unwrap().graph;
        let d = decompose(&g);
        for (ext, f) in [("json", Format::Json), ("txt", Format::Text)] {
            let want = std::fs::read(golden(name, ext)).unwrap();
            let got = write_decomposition(&g, &d, f);
            assert!(
                got == want,
                "{name}.{ext} differs:\n{}",
                String::from_utf8_lossy(&got)
            );
        }
    }
}

#[test]
fn goldens_agree_with_the_oracle() {
    for name in CASES {
        let g = read_edge_list(&golden(name, "edges")).unwrap().graph;
        let text = std::fs::read_to_string(golden(name, "json")).unwrap();
        let d = DecompositionDoc::from_json(&text)
            .unwrap()
            .to_decomposition()
            .unwrap();
        let verdict = oracle::verify(&g, &d, SizeGuard::default()).unwrap();
        assert!(verdict.passed(), "{name}: {verdict}");
    }
}

#[test]
fn golden_shapes() {
    let classes = |name: &str| {
        let text = std::fs::read_to_string(golden(name, "json")).unwrap();
        let doc = DecompositionDoc::from_json(&text).unwrap();
        doc.components
            .iter()
            .map(|c| c.sigma.clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(classes("c4"), [vec![0], vec![1], vec![2], vec![3]]);
    assert_eq!(classes("k4"), [vec![0, 1, 2, 3]]);
    assert_eq!(classes("digon3"), [vec![0, 1]]);
    assert_eq!(
        classes("two_k4_bundle"),
        [vec![0, 1, 2, 3], vec![4, 5, 6, 7]]
    );
    assert_eq!(
        classes("two_k4_bridge"),
        [vec![0, 1, 2, 3], vec![4, 5, 6, 7]]
    );

    let g = read_edge_list(&golden("two_k4_bundle", "edges"))
        .unwrap()
        .graph;
    let d = decompose(&g).canonical(&g);
    let aux: Vec<Vec<(VertexId, VertexId)>> = d
        .components
        .iter()
        .map(|c| {
            c.alpha
                .iter()
                .filter(|e| e.is_auxiliary())
                .map(|e| {
                    let (a, b) = e.endpoints(&g);
                    (a.min(b), a.max(b))
                })
                .collect()
        })
        .collect();
    assert_eq!(
        aux,
        [
            vec![(VertexId(0), VertexId(1))],
            vec![(VertexId(4), VertexId(5))]
        ]
    );
}
