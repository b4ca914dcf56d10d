//! Text formats and command reports behind the `wogtoric` binary.
//!
//! Graph files are line oriented:
//!
//! ```text
//! # a balanced square
//! vertices 4
//! weights 1 1 1 1
//! edges
//! 1 2
//! 2 3
//! 3 4
//! 4 1
//! ```
//!
//! Each report function returns the text to print together with the process
//! exit status, so the binary only has to do argument parsing and I/O.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{
    classify_structure, connected_components, prune_leaves, EdgeGraph, EdgeId, GraphError, OrientedEdge, SharedPart,
    WeightedOrientedGraph,
};
use crate::oracle::{verify_membership, OracleError};
use crate::toric::{
    compute_toric_ideal_with, incidence_matrix, is_balanced, is_zero_ideal, Binomial, ComputeOptions, ToricError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    InvalidInput = 1,
    Uncertified = 2,
    Internal = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Toric(ToricError),
}

impl From<ToricError> for CliError {
    fn from(e: ToricError) -> Self {
        match e {
            ToricError::Graph(g) => CliError::Graph(g),
            other => CliError::Toric(other),
        }
    }
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Toric(ToricError::Internal(_))
            | CliError::Toric(ToricError::GenFormViolation { .. })
            | CliError::Toric(ToricError::Oracle(OracleError::NonBinomial { .. })) => ExitStatus::Internal,
            _ => ExitStatus::InvalidInput,
        }
    }
}

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub parsed: WeightedOrientedGraph,
    pub source_path: PathBuf,
}

impl GraphFile {
    pub fn load(path: &Path) -> Result<GraphFile, CliError> {
        let text = read_text(path)?;
        Ok(GraphFile {
            parsed: parse_graph(&text)?,
            source_path: path.to_path_buf(),
        })
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Whitespace-separated tokens of a line with their 1-based columns, comments removed.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &content[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &content[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (content[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_graph(text: &str) -> Result<WeightedOrientedGraph, CliError> {
    let err = |line: usize, column: usize, message: String| CliError::Parse { line, column, message };
    let number = |line: usize, (col, tok): (usize, &str)| -> Result<u64, CliError> {
        tok.parse::<u64>()
            .map_err(|_| err(line, col, format!("expected a non-negative integer, found `{tok}`")))
    };
    let mut vertices: Option<(usize, usize)> = None;
    let mut weights: Option<(usize, Vec<u64>)> = None;
    let mut edges: Option<Vec<OrientedEdge>> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = tokens(raw);
        let Some(&(col, head)) = toks.first() else {
            continue;
        };
        if let Some(list) = edges.as_mut() {
            if toks.len() != 2 {
                return Err(err(
                    line,
                    col,
                    format!("expected `tail head`, found {} tokens", toks.len()),
                ));
            }
            let tail = number(line, toks[0])? as usize;
            let head = number(line, toks[1])? as usize;
            list.push(OrientedEdge::new(tail, head));
            continue;
        }
        match head {
            "vertices" => {
                if vertices.is_some() {
                    return Err(err(line, col, "duplicate `vertices` line".into()));
                }
                if toks.len() != 2 {
                    return Err(err(line, col, "expected `vertices <count>`".into()));
                }
                vertices = Some((line, number(line, toks[1])? as usize));
            }
            "weights" => {
                if weights.is_some() {
                    return Err(err(line, col, "duplicate `weights` line".into()));
                }
                let ws = toks[1..]
                    .iter()
                    .map(|&t| number(line, t))
                    .collect::<Result<Vec<_>, _>>()?;
                weights = Some((line, ws));
            }
            "edges" => {
                if toks.len() != 1 {
                    return Err(err(line, toks[1].0, "unexpected token after `edges`".into()));
                }
                edges = Some(Vec::new());
            }
            other => return Err(err(line, col, format!("unknown keyword `{other}`"))),
        }
    }
    let (_, n) = vertices.ok_or_else(|| err(last_line.max(1), 1, "missing `vertices` line".into()))?;
    let (wline, ws) = weights.ok_or_else(|| err(last_line.max(1), 1, "missing `weights` line".into()))?;
    if ws.len() != n {
        return Err(err(wline, 1, format!("`vertices {n}` but {} weights given", ws.len())));
    }
    let edges = edges.ok_or_else(|| err(last_line.max(1), 1, "missing `edges` section".into()))?;
    Ok(WeightedOrientedGraph::new(ws, edges)?)
}

/// Inverse of [`parse_graph`].
pub fn print_graph(g: &WeightedOrientedGraph) -> String {
    let mut s = format!("vertices {}\nweights", g.vertex_count());
    for w in g.weights() {
        let _ = write!(s, " {w}");
    }
    s.push_str("\nedges\n");
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.tail, e.head);
    }
    s
}

/// Text plus exit status of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub stderr: String,
    pub status: ExitStatus,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report {
            stdout,
            stderr: String::new(),
            status: ExitStatus::Success,
        }
    }

    pub fn from_error(e: &CliError) -> Self {
        Report {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            status: e.exit_status(),
        }
    }
}

fn edge_list(edges: impl IntoIterator<Item = EdgeId>) -> String {
    edges.into_iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join(" ")
}

/// Shape of every component after pruning, followed by each cycle and its balance.
pub fn classify_report(g: &WeightedOrientedGraph) -> Result<Report, CliError> {
    let mut out = String::new();
    let pruned = prune_leaves(g);
    if !pruned.removed_edges.is_empty() {
        let _ = writeln!(out, "pruned: {}", edge_list(pruned.removed_edges.iter().copied()));
    }
    let cores: Vec<_> = connected_components(&pruned.graph)
        .into_iter()
        .filter(|c| c.graph.edge_count() > 0)
        .collect();
    if cores.is_empty() {
        out.push_str("structure: forest\n");
    }
    for (k, core) in cores.iter().enumerate() {
        let s = classify_structure(&core.graph)?;
        let to_input = |e: EdgeId| pruned.edge_map[core.edge_map[e - 1] - 1];
        let prefix = if cores.len() > 1 {
            format!("component {}: ", k + 1)
        } else {
            String::new()
        };
        let _ = writeln!(
            out,
            "{prefix}structure: {} (cycle rank {})",
            s.tag.describe(),
            s.cycle_rank
        );
        match &s.shared {
            SharedPart::None => {}
            SharedPart::Vertex(v) => {
                let _ = writeln!(out, "{prefix}shared vertex: x{}", pruned_vertex(core, *v));
            }
            SharedPart::Path(p) => {
                let _ = writeln!(
                    out,
                    "{prefix}shared path: {}",
                    edge_list(p.iter().map(|&e| to_input(e)))
                );
            }
            SharedPart::Bridge(p) => {
                let _ = writeln!(out, "{prefix}bridge: {}", edge_list(p.iter().map(|&e| to_input(e))));
            }
        }
        for c in &s.cycles {
            let balanced = is_balanced(&core.graph, c.edges())?;
            let _ = writeln!(
                out,
                "{prefix}cycle: {} (length {}, {})",
                edge_list(c.edges().iter().map(|&e| to_input(e))),
                c.len(),
                if balanced { "balanced" } else { "unbalanced" }
            );
        }
    }
    Ok(Report::ok(out))
}

fn pruned_vertex(core: &crate::graph::Component<WeightedOrientedGraph>, v: usize) -> usize {
    core.vertex_map[v - 1]
}

pub fn zero_report(g: &WeightedOrientedGraph) -> Report {
    let v = is_zero_ideal(g);
    Report::ok(match v.reason {
        Some(r) if v.is_zero => format!("zero ({r})\n"),
        _ => "nonzero\n".to_string(),
    })
}

pub fn generators_report(g: &WeightedOrientedGraph, options: &ComputeOptions, json: bool) -> Result<Report, CliError> {
    let r = compute_toric_ideal_with(g, options)?;
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(&r).expect("result serializes");
        s.push('\n');
        s
    } else if r.generators.is_empty() {
        "zero ideal\n".to_string()
    } else {
        r.generators.iter().map(|b| format!("{b}\n")).collect()
    };
    if r.certified_minimal {
        Ok(Report::ok(stdout))
    } else {
        Ok(Report {
            stdout,
            stderr: "warning: oracle budget exhausted; generators are not certified\n".into(),
            status: ExitStatus::Uncertified,
        })
    }
}

pub fn matrix_report(g: &WeightedOrientedGraph) -> Report {
    Report::ok(incidence_matrix(g).matrix.to_string())
}

/// Checks each binomial line of `text` for kernel and ideal membership.
pub fn verify_report(g: &WeightedOrientedGraph, text: &str, options: &ComputeOptions) -> Result<Report, CliError> {
    let a = incidence_matrix(g);
    let ideal = compute_toric_ideal_with(g, options)?;
    let mut out = String::new();
    for (idx, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let b = Binomial::parse(content, g.edge_count()).map_err(|e| CliError::Parse {
            line: idx + 1,
            column: 1,
            message: e.to_string(),
        })?;
        let kernel = a.annihilates(&b);
        let member = verify_membership(&b, &ideal.generators);
        let yn = |x: bool| if x { "yes" } else { "no" };
        let _ = writeln!(out, "{b}: kernel {}, ideal {}", yn(kernel), yn(member));
        if kernel != member && ideal.certified_minimal {
            return Err(CliError::Toric(ToricError::Internal(format!(
                "{b}: kernel and ideal membership disagree"
            ))));
        }
    }
    let status = if ideal.certified_minimal {
        ExitStatus::Success
    } else {
        ExitStatus::Uncertified
    };
    Ok(Report {
        stdout: out,
        stderr: String::new(),
        status,
    })
}

/// DOT digraph, weights as vertex labels and edge ids on the arrows.
pub fn dot_report(g: &WeightedOrientedGraph) -> Report {
    let mut s = String::from("digraph D {\n");
    for v in 1..=g.vertex_count() {
        let _ = writeln!(s, "  x{v} [label=\"x{v} (w={})\"];", g.weight(v));
    }
    for (i, e) in g.edges().iter().enumerate() {
        let _ = writeln!(s, "  x{} -> x{} [label=\"e{}\"];", e.tail, e.head, i + 1);
    }
    s.push_str("}\n");
    Report::ok(s)
}
