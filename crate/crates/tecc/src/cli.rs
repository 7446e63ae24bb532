//! `tecc` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use tecc_core::generator::{
    corpus_instance, gen_planted, gen_random_multigraph, gen_scaling_plant, planted_corpus_spec,
    Block, Connector, PlantSpec, Skeleton,
};
use tecc_core::oracle::{self, OracleError, SizeGuard};
use tecc_core::{decompose, Decomposition, Multigraph, VertexId};

use crate::doc::{write_decomposition, Format};
use crate::dot::export_dot;
use crate::edgelist::{read_edge_list, write_edge_list};
use crate::timing::run_bench;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tecc",
    version,
    about = "3-edge-connected components of multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose an edge-list file.
    Decompose {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long, value_enum, default_value = "text")]
        format: Format,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the decomposer against the brute-force oracle.
    Verify(VerifyArgs),
    /// Write a generated graph as an edge list.
    Gen {
        /// random:N:M, planted:BLOCKS:SKELETON:CONNECTOR or scaling:M
        #[arg(long)]
        spec: String,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time decompositions of planted chains of growing size.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "10000,100000,1000000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 7)]
        reps: usize,
        #[arg(long)]
        json: bool,
        /// Exit 1 when a scaling step is out of range.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(short, long, conflicts_with = "corpus")]
    input: Option<PathBuf>,
    /// Number of random instances.
    #[arg(long)]
    corpus: Option<u64>,
    /// Number of planted instances added to the corpus.
    #[arg(long, default_value_t = 0)]
    planted: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, default_value_t = 16)]
    max_m: usize,
    /// Oracle size guard; larger graphs are skipped.
    #[arg(long, default_value_t = oracle::DEFAULT_EDGE_LIMIT)]
    max_edges: usize,
    /// Corrupt each decomposition before checking (the check should fail).
    #[arg(long)]
    mutate: bool,
    /// Only print failures and the summary.
    #[arg(short, long)]
    quiet: bool,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Decompose {
            input,
            format,
            output,
        } => cmd_decompose(&mut io, &input, format, output.as_ref()),
        Command::Verify(args) => cmd_verify(&mut io, &args),
        Command::Gen { spec, seed, output } => cmd_gen(&mut io, &spec, seed, output.as_ref()),
        Command::Bench {
            sizes,
            reps,
            json,
            strict,
        } => cmd_bench(&mut io, &sizes, reps, json, strict),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(io: &mut Io, bytes: &[u8], output: Option<&PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => io.out.write_all(bytes).map_err(|e| e.to_string()),
    }
}

fn cmd_decompose(
    io: &mut Io,
    input: &Path,
    format: Format,
    output: Option<&PathBuf>,
) -> Result<i32, String> {
    let file = read_edge_list(input).map_err(|e| format!("{}: {e}", input.display()))?;
    let d = decompose(&file.graph);
    let bytes = match format {
        Format::Dot if !file.labels.is_empty() => {
            export_dot(&file.graph, &d, Some(&file.labels)).into_bytes()
        }
        f => write_decomposition(&file.graph, &d, f),
    };
    emit(io, &bytes, output)?;
    Ok(EXIT_OK)
}

/// Breaks `d` in a way the equivalence check must notice. `None` when the
/// decomposition is too small to corrupt.
pub fn mutate(d: &Decomposition) -> Option<Decomposition> {
    let mut d = d.clone();
    if let Some(c) = d.components.iter_mut().find(|c| !c.alpha.is_empty()) {
        c.alpha.remove(0);
        return Some(d);
    }
    if d.components.len() >= 2 {
        let second = d.components.remove(1);
        d.components[0].sigma.extend(second.sigma);
        d.components[0].sigma.sort_unstable();
        return Some(d);
    }
    None
}

enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

fn check_one(g: &Multigraph, guard: SizeGuard, mutate_it: bool) -> Outcome {
    let mut d = decompose(g);
    if mutate_it {
        match mutate(&d) {
            Some(m) => d = m,
            None => return Outcome::Skip("nothing to mutate".into()),
        }
    }
    match oracle::verify(g, &d, guard) {
        Ok(v) if v.passed() => Outcome::Pass,
        Ok(v) => Outcome::Fail(v.to_string()),
        Err(e @ OracleError::TooLarge { .. }) => Outcome::Skip(e.to_string()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn cmd_verify(io: &mut Io, a: &VerifyArgs) -> Result<i32, String> {
    let guard = SizeGuard {
        max_edges: a.max_edges,
    };
    let mut instances: Vec<(String, Multigraph)> = Vec::new();
    if let Some(path) = &a.input {
        let file = read_edge_list(path).map_err(|e| format!("{}: {e}", path.display()))?;
        instances.push((path.display().to_string(), file.graph));
    } else if a.corpus.is_none() && a.planted == 0 {
        return Err("verify needs --input FILE or --corpus N / --planted N".into());
    }
    for i in 0..a.corpus.unwrap_or(0) {
        let (n, pairs) = corpus_instance(a.seed, i, a.max_n, a.max_m);
        let g = Multigraph::from_edge_list(n, &pairs).map_err(|e| e.to_string())?;
        instances.push((format!("random {i}"), g));
    }
    for i in 0..a.planted {
        let p = gen_planted(&planted_corpus_spec(a.seed, i)).map_err(|e| e.to_string())?;
        instances.push((format!("planted {i}"), p.graph));
    }

    let (mut passed, mut failed, mut skipped) = (0usize, 0usize, 0usize);
    for (name, g) in &instances {
        let head = format!("{name}: n={} m={}", g.vertex_count(), g.edge_count());
        let w = |e: std::io::Error| e.to_string();
        match check_one(g, guard, a.mutate) {
            Outcome::Pass => {
                passed += 1;
                if !a.quiet {
                    writeln!(io.out, "{head} PASS").map_err(w)?;
                }
            }
            Outcome::Fail(why) => {
                failed += 1;
                writeln!(io.out, "{head} FAIL").map_err(w)?;
                for line in why.lines().skip(1) {
                    writeln!(io.out, "  {}", line.trim_start()).map_err(w)?;
                }
            }
            Outcome::Skip(why) => {
                skipped += 1;
                writeln!(io.err, "warning: {head} skipped: {why}").map_err(w)?;
            }
        }
    }
    let checked = passed + failed;
    writeln!(
        io.out,
        "summary: {passed}/{checked} PASS, {failed} FAIL, {skipped} skipped"
    )
    .map_err(|e| e.to_string())?;
    Ok(if failed > 0 { EXIT_FAIL } else { EXIT_OK })
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, String> {
    s.parse()
        .map_err(|_| format!("{what}: {s:?} is not a number"))
}

fn parse_block(s: &str) -> Result<Block, String> {
    let (kind, k) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
    let k: usize = parse_num(k, "block size")?;
    match kind {
        "k" => Ok(Block::Complete(k)),
        "w" => Ok(Block::Wheel(k)),
        "d" => Ok(Block::DoubledCycle(k)),
        _ => Err(format!("unknown block {s:?} (use kN, wN or dN)")),
    }
}

/// Parses a `gen` spec into a graph plus comment lines for the file header.
pub fn generate(spec: &str, seed: u64) -> Result<(Multigraph, Vec<String>), String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let mut comments = vec![format!("spec {spec} seed {seed}")];
    let class_lines = |classes: &[Vec<VertexId>]| -> Vec<String> {
        classes
            .iter()
            .map(|c| {
                let vs: Vec<String> = c.iter().map(|v| v.0.to_string()).collect();
                format!("class {}", vs.join(" "))
            })
            .collect()
    };
    match parts.as_slice() {
        ["random", n, m] => {
            let n: usize = parse_num(n, "n")?;
            if n == 0 {
                return Err("random graphs need n >= 1".into());
            }
            Ok((gen_random_multigraph(n, parse_num(m, "m")?, seed), comments))
        }
        ["planted", blocks, skeleton, connector] => {
            let blocks = blocks
                .split(',')
                .map(parse_block)
                .collect::<Result<Vec<_>, _>>()?;
            let skeleton = match *skeleton {
                "path" => Skeleton::Path,
                "tree" => Skeleton::Tree,
                "cycle" => Skeleton::Cycle,
                s => return Err(format!("unknown skeleton {s:?} (path, tree or cycle)")),
            };
            let connector = match *connector {
                "bridge" => Connector::Bridge,
                "bundle" => Connector::TwoEdgeBundle,
                s => return Err(format!("unknown connector {s:?} (bridge or bundle)")),
            };
            let p = gen_planted(&PlantSpec {
                blocks,
                skeleton,
                connector,
                seed,
                shuffle: true,
            })
            .map_err(|e| e.to_string())?;
            comments.extend(class_lines(&p.classes));
            Ok((p.graph, comments))
        }
        ["scaling", m] => {
            let p = gen_scaling_plant(parse_num(m, "m")?);
            Ok((p.graph, comments))
        }
        _ => Err(format!(
            "bad spec {spec:?}; expected random:N:M, planted:BLOCKS:SKELETON:CONNECTOR or scaling:M"
        )),
    }
}

fn cmd_gen(io: &mut Io, spec: &str, seed: u64, output: Option<&PathBuf>) -> Result<i32, String> {
    let (g, comments) = generate(spec, seed)?;
    emit(io, write_edge_list(&g, &comments).as_bytes(), output)?;
    Ok(EXIT_OK)
}

fn cmd_bench(
    io: &mut Io,
    sizes: &[usize],
    reps: usize,
    json: bool,
    strict: bool,
) -> Result<i32, String> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err("--sizes needs positive edge counts".into());
    }
    let report = run_bench(sizes, reps);
    let text = if json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        s.push('\n');
        s
    } else {
        report.to_text()
    };
    io.out
        .write_all(text.as_bytes())
        .map_err(|e| e.to_string())?;
    Ok(if strict && !report.pass {
        EXIT_FAIL
    } else {
        EXIT_OK
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_names() {
        assert_eq!(parse_block("k4").unwrap(), Block::Complete(4));
        assert_eq!(parse_block("w12").unwrap(), Block::Wheel(12));
        assert_eq!(parse_block("d2").unwrap(), Block::DoubledCycle(2));
        assert!(parse_block("x4").is_err());
        assert!(parse_block("k").is_err());
        assert!(parse_block("").is_err());
    }

    #[test]
    fn specs() {
        let (g, _) = generate("random:5:9", 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 9));
        let (g, comments) = generate("planted:k4,k4:path:bundle", 3).unwrap();
        assert_eq!(g.edge_count(), 14);
        assert_eq!(
            comments.iter().filter(|c| c.starts_with("class ")).count(),
            2
        );
        assert!(generate("planted:k4,k4,k4:cycle:bundle", 0).is_err());
        assert!(generate("random:0:1", 0).is_err());
        assert!(generate("nope", 0).is_err());
    }

    #[test]
    fn mutation_breaks_something() {
        let g = Multigraph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = decompose(&g);
        let m = mutate(&d).unwrap();
        assert_eq!(m.components.len(), 3);
        let single = Multigraph::from_edge_list(1, &[]).unwrap();
        assert!(mutate(&decompose(&single)).is_none());
    }
}
