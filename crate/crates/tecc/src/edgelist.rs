//! Plain-text edge lists.
//!
//! ```text
//! # optional comments, and "# label <i> <name>" vertex labels
//! n m
//! u v        (m lines, 0-based)
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use tecc_core::Multigraph;

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: endpoint {value} out of range for n = {n}")]
    EndpointOutOfRange { line: usize, value: usize, n: usize },
    #[error("line {line}: expected {expected} edge lines, found {found}")]
    EdgeCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Clone, Debug)]
pub struct EdgeListFile {
    pub graph: Multigraph,
    /// Names from `# label <i> <name>` comments.
    pub labels: BTreeMap<usize, String>,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn two_numbers(line: usize, text: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace();
    let mut next = |name: &str| -> Result<usize, ParseError> {
        let tok = it
            .next()
            .ok_or_else(|| syntax(line, format!("{what}: missing {name}")))?;
        tok.parse().map_err(|_| {
            syntax(
                line,
                format!("{what}: {name} {tok:?} is not a non-negative integer"),
            )
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(syntax(
            line,
            format!("{what}: unexpected trailing field {extra:?}"),
        ));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListFile, ParseError> {
    let mut labels = BTreeMap::new();
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(comment) = t.strip_prefix('#') {
            let mut it = comment.split_whitespace();
            if it.next() == Some("label") {
                if let (Some(idx), Some(name)) = (it.next().and_then(|s| s.parse().ok()), it.next())
                {
                    labels.insert(idx, name.to_string());
                }
            }
            continue;
        }
        match header {
            None => header = Some(two_numbers(line, t, "header")?),
            Some((n, m)) => {
                if pairs.len() == m {
                    return Err(ParseError::EdgeCount {
                        line,
                        expected: m,
                        found: m + 1,
                    });
                }
                let (u, v) = two_numbers(line, t, "edge")?;
                for value in [u, v] {
                    if value >= n {
                        return Err(ParseError::EndpointOutOfRange { line, value, n });
                    }
                }
                pairs.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| syntax(last_line.max(1), "missing \"n m\" header"))?;
    if pairs.len() != m {
        return Err(ParseError::EdgeCount {
            line: last_line,
            expected: m,
            found: pairs.len(),
        });
    }
    let graph = Multigraph::from_edge_list(n, &pairs).map_err(|e| syntax(1, e.to_string()))?;
    Ok(EdgeListFile { graph, labels })
}

pub fn read_edge_list(path: &Path) -> Result<EdgeListFile, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(&text)
}

/// Serializes `g` with optional leading comment lines.
pub fn write_edge_list(g: &Multigraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u.0, v.0);
    }
    out
}
