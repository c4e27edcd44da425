use serde::Serialize;

use crate::dynamics::UpdateRule;
use crate::model::{BeliefConfig, Discretization};
use crate::polarization::ErParams;

/// Recorded history of one run. Entry `k` holds the configuration at time
/// `steps[k]` and its polarization.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub steps: Vec<usize>,
    pub configs: Vec<BeliefConfig>,
    pub polarization: Vec<f64>,
    pub meta: TraceMeta,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceMeta {
    pub rule: UpdateRule,
    pub graph: Option<String>,
    pub bins: Discretization,
    pub er: ErParams,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn initial(&self) -> &BeliefConfig {
        &self.configs[0]
    }

    pub fn last(&self) -> &BeliefConfig {
        self.configs.last().expect("trace is never empty")
    }

    pub fn last_step(&self) -> usize {
        *self.steps.last().expect("trace is never empty")
    }

    pub fn final_polarization(&self) -> f64 {
        *self.polarization.last().expect("trace is never empty")
    }

    /// `(t, config, rho)` triples in time order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BeliefConfig, f64)> {
        self.steps.iter().zip(&self.configs).zip(&self.polarization).map(|((&t, b), &p)| (t, b, p))
    }

    pub fn with_graph_label(mut self, label: impl Into<String>) -> Self {
        self.meta.graph = Some(label.into());
        self
    }
}
