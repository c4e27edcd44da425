//! Initial belief configurations and influence-graph topologies.
//!
//! The generators are deterministic closed-form constructions; graphs from
//! anywhere else come in through [`load_graph`] / [`parse_graph`].

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{BeliefConfig, InfluenceGraph};

/// Default strength of clique, circular and block influences.
pub const DEFAULT_STRENGTH: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BeliefKind {
    Uniform,
    Mild,
    Extreme,
    Tripolar,
}

impl BeliefKind {
    pub const ALL: [BeliefKind; 4] = [BeliefKind::Uniform, BeliefKind::Mild, BeliefKind::Extreme, BeliefKind::Tripolar];

    pub fn name(self) -> &'static str {
        match self {
            BeliefKind::Uniform => "uniform",
            BeliefKind::Mild => "mild",
            BeliefKind::Extreme => "extreme",
            BeliefKind::Tripolar => "tripolar",
        }
    }

    pub fn generate(self, n: usize) -> Result<BeliefConfig> {
        match self {
            BeliefKind::Uniform => beliefs_uniform(n),
            BeliefKind::Mild => beliefs_mild(n),
            BeliefKind::Extreme => beliefs_extreme(n),
            BeliefKind::Tripolar => beliefs_tripolar(n),
        }
    }
}

impl fmt::Display for BeliefKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BeliefKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BeliefKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown belief kind `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Clique,
    Circular,
    Disconnected,
    Unrelenting,
    Faint,
}

impl GraphKind {
    pub const ALL: [GraphKind; 5] =
        [GraphKind::Clique, GraphKind::Circular, GraphKind::Disconnected, GraphKind::Unrelenting, GraphKind::Faint];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Clique => "clique",
            GraphKind::Circular => "circular",
            GraphKind::Disconnected => "disconnected",
            GraphKind::Unrelenting => "unrelenting",
            GraphKind::Faint => "faint",
        }
    }

    /// `strength` is used by the clique, circular and disconnected graphs;
    /// the unrelenting and faint topologies have fixed weights.
    pub fn generate(self, n: usize, strength: f64) -> Result<InfluenceGraph> {
        match self {
            GraphKind::Clique => graph_clique(n, strength),
            GraphKind::Circular => graph_circular(n, strength),
            GraphKind::Disconnected => graph_disconnected(n, strength),
            GraphKind::Unrelenting => graph_unrelenting(n),
            GraphKind::Faint => graph_faint(n),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown graph kind `{s}`")))
    }
}

/// Where the initial beliefs come from.
#[derive(Debug, Clone, PartialEq)]
pub enum BeliefSource {
    Kind(BeliefKind),
    Explicit(Vec<f64>),
}

/// Where the influence graph comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    Kind(GraphKind),
    File(std::path::PathBuf),
}

/// A complete scenario: initial beliefs plus topology.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec {
    pub beliefs: BeliefSource,
    pub graph: GraphSource,
    pub n: usize,
    pub strength: f64,
}

impl ScenarioSpec {
    pub fn new(beliefs: BeliefKind, graph: GraphKind, n: usize) -> Self {
        Self { beliefs: BeliefSource::Kind(beliefs), graph: GraphSource::Kind(graph), n, strength: DEFAULT_STRENGTH }
    }

    pub fn build(&self) -> Result<(BeliefConfig, InfluenceGraph)> {
        let graph = match &self.graph {
            GraphSource::Kind(kind) => kind.generate(self.n, self.strength)?,
            GraphSource::File(path) => load_graph(path)?,
        };
        let beliefs = match &self.beliefs {
            BeliefSource::Kind(kind) => kind.generate(graph.n())?,
            BeliefSource::Explicit(values) => BeliefConfig::new(values.clone())?,
        };
        crate::model::validate(&graph, &beliefs)?;
        Ok((beliefs, graph))
    }
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Scenario(what()))
    }
}

fn require_strength(c: f64) -> Result<()> {
    require(c > 0.0 && c <= 1.0, || format!("strength {c} outside (0, 1]"))
}

fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

/// `i / (n - 1)`: equally spaced over `[0, 1]`. A single agent gets belief 0.
pub fn beliefs_uniform(n: usize) -> Result<BeliefConfig> {
    require(n >= 1, || "uniform beliefs need n >= 1".into())?;
    if n == 1 {
        return Ok(BeliefConfig::new_unchecked(vec![0.0]));
    }
    let span = (n - 1) as f64;
    Ok(BeliefConfig::new_unchecked((0..n).map(|i| i as f64 / span).collect()))
}

/// Two groups over `[0.2, 0.4)` and `[0.6, 0.8)`.
pub fn beliefs_mild(n: usize) -> Result<BeliefConfig> {
    two_groups(n, 0.2, 0.6, "mild")
}

/// Two groups over `[0, 0.2)` and `[0.8, 1)`.
pub fn beliefs_extreme(n: usize) -> Result<BeliefConfig> {
    two_groups(n, 0.0, 0.8, "extreme")
}

fn two_groups(n: usize, low: f64, high: f64, name: &str) -> Result<BeliefConfig> {
    require(n >= 2, || format!("{name} beliefs need n >= 2"))?;
    let h = ceil_half(n);
    let beliefs = (0..n)
        .map(|i| {
            if i < h {
                0.2 * i as f64 / h as f64 + low
            } else {
                0.2 * (i - h) as f64 / (n - h) as f64 + high
            }
        })
        .collect();
    Ok(BeliefConfig::new_unchecked(beliefs))
}

/// Three blocks, split at `floor(n/3)` and `ceil(2n/3)`, over `[0, 0.2)`,
/// `[0.4, 0.6)` and `[0.8, 1)`.
pub fn beliefs_tripolar(n: usize) -> Result<BeliefConfig> {
    require(n >= 3, || "tripolar beliefs need n >= 3".into())?;
    let a = n / 3;
    let b = (2 * n).div_ceil(3);
    let beliefs = (0..n)
        .map(|i| {
            if i < a {
                0.2 * i as f64 / a as f64
            } else if i < b {
                0.2 * (i - a) as f64 / (b - a) as f64 + 0.4
            } else {
                0.2 * (i - b) as f64 / (n - b) as f64 + 0.8
            }
        })
        .collect();
    Ok(BeliefConfig::new_unchecked(beliefs))
}

/// Every agent influences every other with weight `c`.
pub fn graph_clique(n: usize, c: f64) -> Result<InfluenceGraph> {
    require(n >= 1, || "clique needs n >= 1".into())?;
    require_strength(c)?;
    Ok(InfluenceGraph::from_fn(n, |_, _| c)?)
}

/// Agent `i` influences only its successor `(i + 1) mod n`, with weight `c`.
pub fn graph_circular(n: usize, c: f64) -> Result<InfluenceGraph> {
    require(n >= 2, || "circular graph needs n >= 2".into())?;
    require_strength(c)?;
    Ok(InfluenceGraph::from_fn(n, |i, j| if (i + 1) % n == j { c } else { 0.0 })?)
}

/// Two cliques of sizes `ceil(n/2)` and `n - ceil(n/2)` with no cross influence.
pub fn graph_disconnected(n: usize, c: f64) -> Result<InfluenceGraph> {
    require(n >= 2, || "disconnected graph needs n >= 2".into())?;
    require_strength(c)?;
    let h = ceil_half(n);
    Ok(InfluenceGraph::from_fn(n, |i, j| if (i < h) == (j < h) { c } else { 0.0 })?)
}

/// Agents 0 and `n - 1` push 0.6 onto everyone else and listen to nobody;
/// the remaining agents exchange 0.1.
pub fn graph_unrelenting(n: usize) -> Result<InfluenceGraph> {
    require(n >= 3, || "unrelenting graph needs n >= 3".into())?;
    let last = n - 1;
    Ok(InfluenceGraph::from_fn(n, |i, j| {
        if (i == 0 && j != last) || (i == last && j != 0) {
            0.6
        } else if j == 0 || j == last {
            0.0
        } else {
            0.1
        }
    })?)
}

/// Two dense groups (0.5) joined by weak links (0.1). Agents `0..=ceil(n/2)`
/// form the first group, so the split differs by one from
/// [`graph_disconnected`].
pub fn graph_faint(n: usize) -> Result<InfluenceGraph> {
    require(n >= 2, || "faint graph needs n >= 2".into())?;
    let h = ceil_half(n);
    Ok(InfluenceGraph::from_fn(n, |i, j| if (i <= h) == (j <= h) { 0.5 } else { 0.1 })?)
}

/// Reads a graph edge-list file; see [`parse_graph`] for the format.
pub fn load_graph(path: impl AsRef<Path>) -> Result<InfluenceGraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph(&text, path)
}

/// Parses the edge-list format:
///
/// ```text
/// # comment
/// n=3
/// 0 1 0.5
/// 2 0 0.25
/// ```
///
/// The header must be the first non-comment line. Unlisted pairs are 0 and
/// the diagonal is always 1, whatever a self-edge line says. `source` only
/// labels error messages.
pub fn parse_graph(text: &str, source: impl AsRef<Path>) -> Result<InfluenceGraph> {
    let source = source.as_ref();
    let err = |line: usize, message: String| Error::GraphFile { path: source.to_path_buf(), line, message };

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing `n=<count>` header".into()))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| err(header_line, format!("expected `n=<count>`, found `{header}`")))?;
    if n == 0 {
        return Err(err(header_line, "agent count must be positive".into()));
    }

    let mut weights = vec![vec![0.0; n]; n];
    let mut seen = vec![false; n * n];
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [src, dst, w] = fields[..] else {
            return Err(err(line, format!("expected `<src> <dst> <weight>`, found `{content}`")));
        };
        let index = |s: &str| -> Result<usize> {
            let i: usize = s.parse().map_err(|_| err(line, format!("bad agent index `{s}`")))?;
            if i >= n {
                return Err(err(line, format!("agent index {i} out of range for n={n}")));
            }
            Ok(i)
        };
        let (from, to) = (index(src)?, index(dst)?);
        let value: f64 = w.parse().map_err(|_| err(line, format!("bad weight `{w}`")))?;
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::GraphWeight { path: source.to_path_buf(), line, from, to, value });
        }
        if std::mem::replace(&mut seen[from * n + to], true) {
            return Err(err(line, format!("duplicate edge {from} -> {to}")));
        }
        weights[from][to] = value;
    }
    for (i, row) in weights.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    Ok(InfluenceGraph::from_rows(weights)?)
}

/// Serializes a graph in the format accepted by [`parse_graph`], listing
/// positive off-diagonal entries in row-major order.
pub fn format_graph(graph: &InfluenceGraph) -> String {
    let mut out = format!("n={}\n", graph.n());
    for (i, j, w) in graph.edges() {
        let _ = writeln!(out, "{i} {j} {w}");
    }
    out
}
