//! Declarative description of one simulation, as read from JSON.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::analysis::DEFAULT_EPSILON;
use crate::dynamics::UpdateRule;
use crate::error::{Error, Result, ValidationError, Violation};
use crate::model::Discretization;
use crate::polarization::ErParams;
use crate::scenarios::{BeliefKind, BeliefSource, GraphKind, GraphSource, ScenarioSpec, DEFAULT_STRENGTH};

/// Agent count when none is given, except for circular graphs.
pub const DEFAULT_AGENTS: usize = 1000;
pub const DEFAULT_CIRCULAR_AGENTS: usize = 12;

/// Initial beliefs: a generator name or an explicit list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BeliefChoice {
    Named(String),
    Explicit(Vec<f64>),
}

/// `"bins": 5` or `"bins": [0, 0.5, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BinsSpec {
    Count(usize),
    Boundaries(Vec<f64>),
}

impl Default for BinsSpec {
    fn default() -> Self {
        BinsSpec::Count(5)
    }
}

impl BinsSpec {
    pub fn discretization(&self) -> Result<Discretization, ValidationError> {
        match self {
            BinsSpec::Count(k) => Discretization::uniform(*k),
            BinsSpec::Boundaries(b) => Discretization::from_boundaries(b.clone()),
        }
    }
}

fn default_belief() -> BeliefChoice {
    BeliefChoice::Named(BeliefKind::Uniform.name().into())
}

fn default_graph() -> String {
    GraphKind::Clique.name().into()
}

fn default_epsilon() -> f64 {
    DEFAULT_EPSILON
}

fn default_scale() -> f64 {
    ErParams::default().scale
}

fn default_alpha() -> f64 {
    ErParams::default().alpha
}

fn default_stride() -> usize {
    1
}

/// One experiment. Optional fields are filled in by [`ExperimentConfig::resolve`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default = "default_belief")]
    pub belief_kind: BeliefChoice,
    /// A generator name, or `"file"` together with `graph_file`.
    #[serde(default = "default_graph")]
    pub graph_kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_file: Option<PathBuf>,
    #[serde(default)]
    pub update_rule: UpdateRule,
    #[serde(default)]
    pub t_max: Option<usize>,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default)]
    pub bins: BinsSpec,
    #[serde(rename = "K", default = "default_scale")]
    pub scale: f64,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default = "default_stride")]
    pub record_every: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields have defaults")
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn er(&self) -> ErParams {
        ErParams { scale: self.scale, alpha: self.alpha }
    }

    pub fn scenario(&self) -> Result<ScenarioSpec> {
        let graph = match self.graph_kind.as_str() {
            "file" => GraphSource::File(
                self.graph_file.clone().ok_or_else(|| Error::Config("graph_kind `file` needs graph_file".into()))?,
            ),
            name => GraphSource::Kind(name.parse()?),
        };
        let beliefs = match &self.belief_kind {
            BeliefChoice::Named(name) => BeliefSource::Kind(name.parse()?),
            BeliefChoice::Explicit(values) => BeliefSource::Explicit(values.clone()),
        };
        let n = match (&self.n, &beliefs, &graph) {
            (Some(n), _, _) => *n,
            (None, BeliefSource::Explicit(v), _) => v.len(),
            (None, _, GraphSource::Kind(GraphKind::Circular)) => DEFAULT_CIRCULAR_AGENTS,
            _ => DEFAULT_AGENTS,
        };
        Ok(ScenarioSpec { beliefs, graph, n, strength: DEFAULT_STRENGTH })
    }

    /// Horizon: explicit `t_max`, else 500 steps for up to 100 agents and
    /// 2000 beyond.
    pub fn horizon(&self, n: usize) -> usize {
        self.t_max.unwrap_or(if n <= 100 { 500 } else { 2000 })
    }

    /// Checks numeric parameters and fills in `n` and `t_max`. The agent
    /// count of a file graph is known only after loading, so `n` is passed in.
    pub fn resolve(&self, n: usize) -> Result<Self> {
        let mut violations = Vec::new();
        let mut bad = |msg: String| violations.push(Violation::Parameter(msg));
        if !(self.epsilon > 0.0) {
            bad(format!("epsilon must be positive, got {}", self.epsilon));
        }
        if !(self.scale > 0.0) {
            bad(format!("K must be positive, got {}", self.scale));
        }
        if !(self.alpha > 0.0) {
            bad(format!("alpha must be positive, got {}", self.alpha));
        }
        if self.record_every == 0 {
            bad("record_every must be at least 1".into());
        }
        if let Err(e) = self.bins.discretization() {
            violations.extend(e.violations().iter().cloned());
        }
        ValidationError::check(violations)?;
        Ok(Self { n: Some(n), t_max: Some(self.horizon(n)), ..self.clone() })
    }
}
