//! Wall-clock scaling benchmark on planted K4 chains.
//!
//! Each sample repeats the decomposition until at least [`MIN_SAMPLE`] has
//! elapsed and records the mean; a size reports the median sample. Ratios
//! between consecutive sizes are normalized to one doubling of `m`, so a
//! tenfold step that takes ten times as long counts as 2.0.

use std::time::{Duration, Instant};

use serde::Serialize;
use tecc_core::generator::gen_scaling_instance;
use tecc_core::{decompose_with, Multigraph, Options, WorkCounters};

pub const MIN_SAMPLE: Duration = Duration::from_millis(5);
pub const TIME_RATIO_RANGE: (f64, f64) = (1.6, 2.6);
pub const COUNTER_RATIO_MAX: f64 = 2.2;

#[derive(Clone, Debug, Serialize)]
pub struct CounterReport {
    pub dfs_steps: u64,
    pub path_link_traversals: u64,
    pub alpha_insertions: u64,
    pub ear_comparisons: u64,
    pub bounded_work: u64,
}

impl From<WorkCounters> for CounterReport {
    fn from(c: WorkCounters) -> Self {
        CounterReport {
            dfs_steps: c.dfs_steps,
            path_link_traversals: c.path_link_traversals,
            alpha_insertions: c.alpha_insertions,
            ear_comparisons: c.ear_comparisons,
            bounded_work: c.bounded_work(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SizeReport {
    pub target: usize,
    pub n: usize,
    pub m: usize,
    pub median_ns: f64,
    pub ns_per_edge: f64,
    pub counters: CounterReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub from_m: usize,
    pub to_m: usize,
    /// Time ratio normalized to one doubling of `m`.
    pub time_ratio: f64,
    /// Largest counter ratio, normalized the same way.
    pub counter_ratio: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub sizes: Vec<SizeReport>,
    pub steps: Vec<StepReport>,
    pub total_seconds: f64,
    pub pass: bool,
}

fn options() -> Options {
    Options {
        check_path_invariants: false,
    }
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

/// Inner repetitions so one sample of `g` lasts at least [`MIN_SAMPLE`].
/// Also serves as warm-up.
fn calibrate(g: &Multigraph) -> u32 {
    let t = Instant::now();
    std::hint::black_box(decompose_with(g, options()));
    let once = t.elapsed().max(Duration::from_nanos(1));
    (MIN_SAMPLE.as_nanos() / once.as_nanos()).clamp(1, 10_000) as u32
}

fn sample(g: &Multigraph, inner: u32) -> f64 {
    let t = Instant::now();
    for _ in 0..inner {
        std::hint::black_box(decompose_with(std::hint::black_box(g), options()));
    }
    t.elapsed().as_nanos() as f64 / f64::from(inner)
}

/// Median nanoseconds per decomposition of `g` over `reps` samples.
pub fn time_decomposition(g: &Multigraph, reps: usize) -> f64 {
    let inner = calibrate(g);
    median((0..reps.max(1)).map(|_| sample(g, inner)).collect())
}

fn per_doubling(ratio: f64, from: usize, to: usize) -> f64 {
    let steps = (to as f64 / from as f64).log2();
    ratio.powf(1.0 / steps)
}

/// Samples are taken round-robin over the sizes so that slow phases of the
/// machine hit every size alike.
pub fn run_bench(targets: &[usize], reps: usize) -> BenchReport {
    let start = Instant::now();
    let mut sorted = targets.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let graphs: Vec<Multigraph> = sorted.iter().map(|&t| gen_scaling_instance(t)).collect();
    let inner: Vec<u32> = graphs.iter().map(calibrate).collect();
    let mut samples = vec![Vec::with_capacity(reps); graphs.len()];
    for _ in 0..reps.max(1) {
        for (k, g) in graphs.iter().enumerate() {
            samples[k].push(sample(g, inner[k]));
        }
    }
    let sizes: Vec<SizeReport> = sorted
        .iter()
        .zip(&graphs)
        .zip(samples)
        .map(|((&target, g), xs)| {
            let (_, counters) = decompose_with(g, options());
            let median_ns = median(xs);
            SizeReport {
                target,
                n: g.vertex_count(),
                m: g.edge_count(),
                median_ns,
                ns_per_edge: median_ns / g.edge_count().max(1) as f64,
                counters: counters.into(),
            }
        })
        .collect();
    let steps: Vec<StepReport> = sizes
        .windows(2)
        .map(|w| {
            let (a, b) = (&w[0], &w[1]);
            let time_ratio = per_doubling(b.median_ns / a.median_ns, a.m, b.m);
            let pairs = [
                (a.counters.dfs_steps, b.counters.dfs_steps),
                (
                    a.counters.path_link_traversals,
                    b.counters.path_link_traversals,
                ),
                (a.counters.alpha_insertions, b.counters.alpha_insertions),
                (a.counters.ear_comparisons, b.counters.ear_comparisons),
            ];
            let counter_ratio = pairs
                .iter()
                .filter(|(x, _)| *x > 0)
                .map(|&(x, y)| per_doubling(y as f64 / x as f64, a.m, b.m))
                .fold(0.0, f64::max);
            let pass = (TIME_RATIO_RANGE.0..=TIME_RATIO_RANGE.1).contains(&time_ratio)
                && counter_ratio <= COUNTER_RATIO_MAX;
            StepReport {
                from_m: a.m,
                to_m: b.m,
                time_ratio,
                counter_ratio,
                pass,
            }
        })
        .collect();
    let pass = steps.iter().all(|s| s.pass);
    BenchReport {
        sizes,
        steps,
        total_seconds: start.elapsed().as_secs_f64(),
        pass,
    }
}

impl BenchReport {
    pub fn to_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>10} {:>10} {:>12} {:>9} {:>12}",
            "m", "n", "median_ms", "ns/edge", "work"
        );
        for s in &self.sizes {
            let _ = writeln!(
                out,
                "{:>10} {:>10} {:>12.3} {:>9.2} {:>12}",
                s.m,
                s.n,
                s.median_ns / 1e6,
                s.ns_per_edge,
                s.counters.bounded_work
            );
        }
        for s in &self.steps {
            let _ = writeln!(
                out,
                "step {} -> {}: time x{:.2} per doubling, counters x{:.2} [{}]",
                s.from_m,
                s.to_m,
                s.time_ratio,
                s.counter_ratio,
                if s.pass { "ok" } else { "out of range" }
            );
        }
        let _ = writeln!(out, "total {:.1} s", self.total_seconds);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn normalization() {
        assert!((per_doubling(10.0, 1000, 10_000) - 2.0).abs() < 1e-9);
        assert!((per_doubling(2.0, 500, 1000) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn small_bench_reports_every_size() {
        let r = run_bench(&[2000, 1000], 3);
        assert_eq!(r.sizes.len(), 2);
        assert_eq!(r.steps.len(), 1);
        assert!(r.sizes[0].m < r.sizes[1].m);
        assert!(r.steps[0].counter_ratio <= COUNTER_RATIO_MAX);
    }
}
