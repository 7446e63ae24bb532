//! Seeded random and planted multigraphs.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64`, so a seed
//! produces the same graph on every platform.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Multigraph, VertexId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` edges drawn uniformly with replacement from the `n(n+1)/2` unordered
/// vertex pairs, self-pairs included.
pub fn random_pairs(n: usize, m: usize, seed: u64) -> Vec<(usize, usize)> {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = rng(seed);
    let total = n * (n + 1) / 2;
    (0..m)
        .map(|_| {
            // row i holds the pairs (i, i..n)
            let mut k = rng.gen_range(0..total);
            let mut i = 0;
            while k >= n - i {
                k -= n - i;
                i += 1;
            }
            (i, i + k)
        })
        .collect()
}

pub fn gen_random_multigraph(n: usize, m: usize, seed: u64) -> Multigraph {
    Multigraph::from_edge_list(n, &random_pairs(n, m, seed)).expect("pairs are in range")
}

/// A 3-edge-connected building block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    /// `K_k`, `k >= 4`.
    Complete(usize),
    /// Hub plus a rim cycle of `k >= 3` vertices.
    Wheel(usize),
    /// Cycle on `k >= 2` vertices with every edge doubled.
    DoubledCycle(usize),
}

impl Block {
    pub fn vertex_count(&self) -> usize {
        match *self {
            Block::Complete(k) | Block::DoubledCycle(k) => k,
            Block::Wheel(k) => k + 1,
        }
    }

    fn validate(&self) -> Result<(), PlantError> {
        let ok = match *self {
            Block::Complete(k) => k >= 4,
            Block::Wheel(k) => k >= 3,
            Block::DoubledCycle(k) => k >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(PlantError::BlockTooSmall(*self))
        }
    }

    fn edges(&self, base: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        match *self {
            Block::Complete(k) => {
                for a in 0..k {
                    for b in a + 1..k {
                        out.push((base + a, base + b));
                    }
                }
            }
            Block::Wheel(k) => {
                let hub = base + k;
                for a in 0..k {
                    out.push((base + a, base + (a + 1) % k));
                    out.push((base + a, hub));
                }
            }
            Block::DoubledCycle(k) => {
                if k == 2 {
                    out.extend([(base, base + 1); 4]);
                } else {
                    for a in 0..k {
                        let e = (base + a, base + (a + 1) % k);
                        out.push(e);
                        out.push(e);
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Skeleton {
    /// Block `i > 0` hangs off a uniformly chosen earlier block.
    Tree,
    /// Blocks joined in order and the last one back to the first.
    Cycle,
    Path,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connector {
    Bridge,
    TwoEdgeBundle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantSpec {
    pub blocks: Vec<Block>,
    pub skeleton: Skeleton,
    pub connector: Connector,
    pub seed: u64,
    /// Relabel vertices and reorder edges at random.
    pub shuffle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PlantError {
    #[error("a plant needs at least one block")]
    NoBlocks,
    #[error("block {0:?} is too small to be 3-edge-connected")]
    BlockTooSmall(Block),
    #[error("a cycle skeleton needs at least two blocks")]
    CycleTooShort,
    #[error("two-edge bundles around a cycle make neighbouring blocks 4-edge-connected")]
    CycleWithBundles,
}

/// A generated graph with its ground truth.
#[derive(Clone, Debug)]
pub struct Planted {
    pub graph: Multigraph,
    /// Sorted classes ordered by smallest vertex.
    pub classes: Vec<Vec<VertexId>>,
    /// Expected auxiliary endpoint pairs `(min, max)` per class, sorted.
    pub aux_pairs: Vec<Vec<(VertexId, VertexId)>>,
}

/// A class and its expected auxiliary pairs.
type ClassTruth = (Vec<VertexId>, Vec<(VertexId, VertexId)>);

pub fn gen_planted(spec: &PlantSpec) -> Result<Planted, PlantError> {
    if spec.blocks.is_empty() {
        return Err(PlantError::NoBlocks);
    }
    for b in &spec.blocks {
        b.validate()?;
    }
    if spec.skeleton == Skeleton::Cycle {
        if spec.blocks.len() < 2 {
            return Err(PlantError::CycleTooShort);
        }
        if spec.connector == Connector::TwoEdgeBundle {
            return Err(PlantError::CycleWithBundles);
        }
    }
    let mut rng = rng(spec.seed);
    let mut base = Vec::with_capacity(spec.blocks.len());
    let mut pairs = Vec::new();
    let mut n = 0;
    for b in &spec.blocks {
        base.push(n);
        pairs.extend(b.edges(n));
        n += b.vertex_count();
    }
    let nb = spec.blocks.len();
    let links: Vec<(usize, usize)> = match spec.skeleton {
        Skeleton::Path => (1..nb).map(|i| (i - 1, i)).collect(),
        Skeleton::Cycle => (0..nb).map(|i| (i, (i + 1) % nb)).collect(),
        Skeleton::Tree => (1..nb).map(|i| (rng.gen_range(0..i), i)).collect(),
    };
    let pick =
        |rng: &mut ChaCha8Rng, b: usize| base[b] + rng.gen_range(0..spec.blocks[b].vertex_count());
    // attachment vertices, per block
    let mut attach: Vec<Vec<usize>> = vec![Vec::new(); nb];
    let mut aux: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nb];
    for &(a, b) in &links {
        match spec.connector {
            Connector::Bridge => {
                let (x, y) = (pick(&mut rng, a), pick(&mut rng, b));
                pairs.push((x, y));
                attach[a].push(x);
                attach[b].push(y);
            }
            Connector::TwoEdgeBundle => {
                let (x1, y1) = (pick(&mut rng, a), pick(&mut rng, b));
                let (x2, y2) = (pick(&mut rng, a), pick(&mut rng, b));
                pairs.push((x1, y1));
                pairs.push((x2, y2));
                if x1 != x2 {
                    aux[a].push((x1, x2));
                }
                if y1 != y2 {
                    aux[b].push((y1, y2));
                }
            }
        }
    }
    if spec.skeleton == Skeleton::Cycle {
        // every block sits on the cycle with one entry and one exit edge
        for (b, at) in attach.iter().enumerate() {
            debug_assert_eq!(at.len(), 2);
            if at[0] != at[1] {
                aux[b].push((at[0], at[1]));
            }
        }
    }

    let mut label: Vec<usize> = (0..n).collect();
    if spec.shuffle {
        label.shuffle(&mut rng);
        pairs.shuffle(&mut rng);
        for p in pairs.iter_mut() {
            if rng.gen_bool(0.5) {
                *p = (p.1, p.0);
            }
        }
    }
    let relabel = |x: usize| VertexId(label[x] as u32);
    let pairs: Vec<(usize, usize)> = if spec.shuffle {
        pairs.iter().map(|&(a, b)| (label[a], label[b])).collect()
    } else {
        pairs
    };
    let graph = Multigraph::from_edge_list(n, &pairs).expect("plant endpoints are in range");

    let mut truth: Vec<ClassTruth> = spec
        .blocks
        .iter()
        .enumerate()
        .map(|(b, blk)| {
            let mut class: Vec<VertexId> = (base[b]..base[b] + blk.vertex_count())
                .map(relabel)
                .collect();
            class.sort_unstable();
            let mut a: Vec<(VertexId, VertexId)> = aux[b]
                .iter()
                .map(|&(x, y)| {
                    let (x, y) = (relabel(x), relabel(y));
                    (x.min(y), x.max(y))
                })
                .collect();
            a.sort_unstable();
            (class, a)
        })
        .collect();
    truth.sort_by(|a, b| a.0.cmp(&b.0));
    let (classes, aux_pairs) = truth.into_iter().unzip();
    Ok(Planted {
        graph,
        classes,
        aux_pairs,
    })
}

/// K4 blocks chained by two-edge bundles: 8 edges per block minus the
/// missing final bundle, so `m = 8b - 2`.
pub fn gen_scaling_plant(target_edges: usize) -> Planted {
    let blocks = ((target_edges + 2 + 4) / 8).max(1);
    gen_planted(&PlantSpec {
        blocks: vec![Block::Complete(4); blocks],
        skeleton: Skeleton::Path,
        connector: Connector::TwoEdgeBundle,
        seed: target_edges as u64,
        shuffle: false,
    })
    .expect("valid scaling plant")
}

pub fn gen_scaling_instance(target_edges: usize) -> Multigraph {
    gen_scaling_plant(target_edges).graph
}

/// Instance `index` of a seeded random corpus: `n` uniform in `1..=max_n`,
/// `m` uniform in `0..=max_m`, then [`random_pairs`].
pub fn corpus_instance(
    seed: u64,
    index: u64,
    max_n: usize,
    max_m: usize,
) -> (usize, Vec<(usize, usize)>) {
    let s = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(index);
    let mut r = rng(s);
    let n = r.gen_range(1..=max_n.max(1));
    let m = r.gen_range(0..=max_m);
    (n, random_pairs(n, m, s ^ 0x5bd1_e995))
}

const PLANT_SHAPES: [(Skeleton, Connector); 5] = [
    (Skeleton::Path, Connector::TwoEdgeBundle),
    (Skeleton::Path, Connector::Bridge),
    (Skeleton::Tree, Connector::TwoEdgeBundle),
    (Skeleton::Tree, Connector::Bridge),
    (Skeleton::Cycle, Connector::Bridge),
];

const PLANT_PALETTE: [Block; 6] = [
    Block::Complete(4),
    Block::Wheel(3),
    Block::Wheel(4),
    Block::DoubledCycle(2),
    Block::DoubledCycle(3),
    Block::Complete(5),
];

/// Planted instance `index` of a seeded corpus: 2 to 4 small blocks, cycling
/// through every skeleton/connector combination.
pub fn planted_corpus_spec(seed: u64, index: u64) -> PlantSpec {
    let s = seed.wrapping_mul(0x2545_f491_4f6c_dd1d).wrapping_add(index);
    let mut r = rng(s);
    let (skeleton, connector) = PLANT_SHAPES[(index % 5) as usize];
    let count = r.gen_range(2..=4);
    let blocks = (0..count)
        .map(|_| *PLANT_PALETTE.choose(&mut r).expect("non-empty"))
        .collect();
    PlantSpec {
        blocks,
        skeleton,
        connector,
        seed: s,
        shuffle: true,
    }
}
