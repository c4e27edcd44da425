//! Experiment orchestration behind the `beliefsim` binary: single runs,
//! batch grids, scenario materialization and graph analysis.
//!
//! Every entry point is deterministic: identical inputs produce
//! byte-identical files.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{detect_convergence, diagnose_persistence, predict_consensus};
use crate::analysis::{ConvergenceReport, PersistenceDiagnosis, StructureReport};
use crate::config::{BeliefChoice, BinsSpec, ExperimentConfig};
use crate::dynamics::{evolve_every, UpdateRule};
use crate::error::{Error, Result};
use crate::io::{beliefs_csv, read_file, trace_csv, trace_svg, write_file};
use crate::scenarios::{format_graph, load_graph, BeliefKind, GraphKind, DEFAULT_STRENGTH};
use crate::trace::Trace;

pub const TRACE_FILE: &str = "trace.csv";
pub const SUMMARY_FILE: &str = "summary.json";
pub const SVG_FILE: &str = "trace.svg";
pub const INDEX_FILE: &str = "index.json";
pub const DEFAULT_OUT_DIR: &str = "out";

impl Error {
    /// 2 for unparseable input, 3 for invalid values, 4 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::GraphFile { .. } => 2,
            Error::Validation(_) | Error::Scenario(_) | Error::GraphWeight { .. } => 3,
            Error::Io { .. } => 4,
        }
    }
}

/// Everything `summary.json` reports about one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    /// The resolved configuration, with `n` and `t_max` filled in.
    pub config: ExperimentConfig,
    pub structure: StructureReport,
    pub convergence: ConvergenceReport,
    pub persistence: PersistenceDiagnosis,
    pub persistence_conditions: Vec<u8>,
    pub predicted_consensus: Option<f64>,
    pub final_mean: f64,
    /// `|final_mean - predicted_consensus|`, when a prediction exists.
    pub prediction_error: Option<f64>,
    pub polarization_initial: f64,
    pub polarization_final: f64,
    pub recorded_steps: usize,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub trace: Trace,
    pub summary: Summary,
}

/// Runs one experiment in memory.
pub fn simulate(config: &ExperimentConfig) -> Result<RunOutput> {
    let scenario = config.scenario()?;
    let (initial, graph) = scenario.build()?;
    let config = config.resolve(graph.n())?;
    let bins = config.bins.discretization()?;
    let t_max = config.t_max.expect("resolved");
    let label = match &config.graph_file {
        Some(path) if config.graph_kind == "file" => path.display().to_string(),
        _ => config.graph_kind.clone(),
    };
    let trace = evolve_every(&initial, &graph, config.update_rule, t_max, &bins, config.er(), config.record_every)
        .with_graph_label(label);

    let structure = StructureReport::of(&graph);
    let convergence = detect_convergence(&trace, config.epsilon, config.epsilon);
    let persistence = diagnose_persistence(&graph, &initial, &trace, &bins, config.epsilon);
    let predicted_consensus = predict_consensus(&graph, &initial, config.update_rule);
    let final_mean = trace.last().mean();
    let summary = Summary {
        persistence_conditions: persistence.conditions(),
        prediction_error: predicted_consensus.map(|p| (final_mean - p).abs()),
        polarization_initial: trace.polarization[0],
        polarization_final: trace.final_polarization(),
        recorded_steps: trace.len(),
        config,
        structure,
        convergence,
        persistence,
        predicted_consensus,
        final_mean,
    };
    Ok(RunOutput { trace, summary })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Also write `trace.svg`.
    pub svg: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

/// Runs one experiment and writes `trace.csv` and `summary.json` (and
/// optionally `trace.svg`) into the config's `out_dir`.
pub fn run_single(config: &ExperimentConfig, options: RunOptions) -> Result<RunOutput> {
    let output = simulate(config)?;
    let dir = config.out_dir.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR));
    create_dir(&dir)?;
    write_file(&dir.join(TRACE_FILE), &trace_csv(&output.trace))?;
    write_file(&dir.join(SUMMARY_FILE), &to_json(&output.summary))?;
    if options.svg {
        write_file(&dir.join(SVG_FILE), &trace_svg(&output.trace))?;
    }
    Ok(output)
}

pub fn load_config(path: &Path) -> Result<ExperimentConfig> {
    ExperimentConfig::from_json(&read_file(path)?)
}

/// A grid of belief kinds by graph kinds sharing every other parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchSpec {
    pub belief_kinds: Vec<BeliefKind>,
    pub graph_kinds: Vec<GraphKind>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub t_max: Option<usize>,
    #[serde(default)]
    pub update_rule: UpdateRule,
    #[serde(default)]
    pub bins: BinsSpec,
    #[serde(rename = "K", default)]
    pub scale: Option<f64>,
    #[serde(default)]
    pub alpha: Option<f64>,
    #[serde(default)]
    pub epsilon: Option<f64>,
    #[serde(default)]
    pub record_every: Option<usize>,
    pub out_dir: PathBuf,
}

impl BatchSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn cell_name(belief: BeliefKind, graph: GraphKind) -> String {
        format!("{belief}__{graph}")
    }

    /// Cell configurations in row-major (graph, belief) order.
    pub fn cells(&self) -> Result<Vec<(String, ExperimentConfig)>> {
        if self.belief_kinds.is_empty() || self.graph_kinds.is_empty() {
            return Err(Error::Config("batch axes must be non-empty".into()));
        }
        let base = ExperimentConfig::default();
        let mut cells = Vec::new();
        for &graph in &self.graph_kinds {
            for &belief in &self.belief_kinds {
                let name = Self::cell_name(belief, graph);
                let config = ExperimentConfig {
                    n: self.n,
                    belief_kind: BeliefChoice::Named(belief.name().into()),
                    graph_kind: graph.name().into(),
                    graph_file: None,
                    update_rule: self.update_rule,
                    t_max: self.t_max,
                    epsilon: self.epsilon.unwrap_or(base.epsilon),
                    bins: self.bins.clone(),
                    scale: self.scale.unwrap_or(base.scale),
                    alpha: self.alpha.unwrap_or(base.alpha),
                    record_every: self.record_every.unwrap_or(base.record_every),
                    out_dir: Some(self.out_dir.join(&name)),
                };
                cells.push((name, config));
            }
        }
        Ok(cells)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchCell {
    pub name: String,
    pub belief_kind: String,
    pub graph_kind: String,
    /// Paths relative to the batch output directory.
    pub trace: String,
    pub summary: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polarization_final: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchIndex {
    pub spec: BatchSpec,
    pub cells: Vec<BatchCell>,
}

impl BatchIndex {
    /// Exit code of the first failing cell, 0 if all succeeded.
    pub fn exit_code(&self) -> i32 {
        self.cells.iter().map(|c| c.exit_code).find(|&c| c != 0).unwrap_or(0)
    }
}

/// Runs every cell (concurrently) and writes `index.json` once all are done.
pub fn run_batch(spec: &BatchSpec, options: RunOptions) -> Result<BatchIndex> {
    let cells = spec.cells()?;
    create_dir(&spec.out_dir)?;
    let results: Vec<BatchCell> = cells
        .par_iter()
        .map(|(name, config)| {
            let outcome = run_single(config, options);
            let (exit_code, error) = match &outcome {
                Ok(_) => (0, None),
                Err(e) => (e.exit_code(), Some(e.to_string())),
            };
            let BeliefChoice::Named(belief_kind) = &config.belief_kind else { unreachable!("batch cells are named") };
            BatchCell {
                name: name.clone(),
                belief_kind: belief_kind.clone(),
                graph_kind: config.graph_kind.clone(),
                trace: format!("{name}/{TRACE_FILE}"),
                summary: format!("{name}/{SUMMARY_FILE}"),
                exit_code,
                error,
                polarization_final: outcome.as_ref().ok().map(|o| o.summary.polarization_final),
                converged: outcome.as_ref().ok().map(|o| o.summary.convergence.converged),
            }
        })
        .collect();
    let index = BatchIndex { spec: spec.clone(), cells: results };
    write_file(&spec.out_dir.join(INDEX_FILE), &to_json(&index))?;
    Ok(index)
}

pub fn load_batch_spec(path: &Path) -> Result<BatchSpec> {
    BatchSpec::from_json(&read_file(path)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenTarget {
    Graph,
    Beliefs,
}

/// Writes a generated graph (edge list) or belief configuration (CSV).
pub fn gen(target: GenTarget, kind: &str, n: usize, strength: Option<f64>, out: &Path) -> Result<()> {
    let text = match target {
        GenTarget::Graph => {
            format_graph(&kind.parse::<GraphKind>()?.generate(n, strength.unwrap_or(DEFAULT_STRENGTH))?)
        }
        GenTarget::Beliefs => beliefs_csv(&kind.parse::<BeliefKind>()?.generate(n)?),
    };
    if let Some(parent) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
        create_dir(parent)?;
    }
    write_file(out, &text)
}

/// Structure report of a graph file.
pub fn analyze(path: &Path) -> Result<StructureReport> {
    Ok(StructureReport::of(&load_graph(path)?))
}

pub fn analyze_json(path: &Path) -> Result<String> {
    Ok(to_json(&analyze(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Error::Config("x".into()).exit_code(), 2);
        assert_eq!(Error::Scenario("x".into()).exit_code(), 3);
        assert_eq!(Error::io("p", std::io::Error::other("x")).exit_code(), 4);
    }

    #[test]
    fn zero_horizon_summary() {
        let config = ExperimentConfig::from_json(r#"{"n": 10, "t_max": 0}"#).unwrap();
        let out = simulate(&config).unwrap();
        assert_eq!(out.trace.len(), 1);
        assert_eq!(out.summary.polarization_final, out.summary.polarization_initial);
    }

    #[test]
    fn batch_cells_grid() {
        let spec = BatchSpec::from_json(
            r#"{"belief_kinds": ["uniform", "mild"], "graph_kinds": ["clique", "faint", "circular"], "out_dir": "b"}"#,
        )
        .unwrap();
        let cells = spec.cells().unwrap();
        assert_eq!(cells.len(), 6);
        assert_eq!(cells[0].0, "uniform__clique");
        assert_eq!(cells[5].1.out_dir, Some(PathBuf::from("b/mild__circular")));
        let empty = BatchSpec { belief_kinds: vec![], ..spec };
        assert_eq!(empty.cells().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn batch_rejects_unknown_kind() {
        let err = BatchSpec::from_json(r#"{"belief_kinds": ["bogus"], "graph_kinds": ["clique"], "out_dir": "b"}"#);
        assert_eq!(err.unwrap_err().exit_code(), 2);
    }
}
