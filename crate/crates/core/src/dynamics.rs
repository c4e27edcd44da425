//! Synchronous belief updates.
//!
//! Each agent moves toward its neighbors by the average of
//! `factor * I[j][i] * (B_j - B_i)` over its neighbor set `A_i`
//! (self included, contributing zero). The confirmation-bias rule uses
//! `factor = 1 - |B_j - B_i|`; the classical rule uses `factor = 1`.
//!
//! Neighbor sums run in ascending `j` so reruns are bit-identical.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::model::{BeliefConfig, Discretization, InfluenceGraph};
use crate::polarization::{polarization, ErParams};
use crate::trace::{Trace, TraceMeta};

/// Below this agent count a step runs on the calling thread.
const PARALLEL_MIN_AGENTS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpdateRule {
    #[default]
    ConfirmationBias,
    Classical,
}

impl UpdateRule {
    pub const ALL: [UpdateRule; 2] = [UpdateRule::ConfirmationBias, UpdateRule::Classical];

    pub fn name(self) -> &'static str {
        match self {
            UpdateRule::ConfirmationBias => "confirmation_bias",
            UpdateRule::Classical => "classical",
        }
    }
}

impl fmt::Display for UpdateRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UpdateRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "confirmation_bias" | "cb" => Ok(UpdateRule::ConfirmationBias),
            "classical" => Ok(UpdateRule::Classical),
            _ => Err(Error::Config(format!("unknown update rule `{s}`"))),
        }
    }
}

/// Confirmation-bias factor `1 - |b_j - b_i|`.
#[inline]
pub fn cb_factor(b_i: f64, b_j: f64) -> f64 {
    1.0 - (b_j - b_i).abs()
}

/// True iff every agent holds exactly 0 or 1.
pub fn is_radical(beliefs: &BeliefConfig) -> bool {
    beliefs.as_slice().iter().all(|&b| b == 0.0 || b == 1.0)
}

/// Pre-extracted in-neighbor lists of a graph, reusable across steps.
#[derive(Debug, Clone)]
pub struct Stepper {
    rule: UpdateRule,
    in_neighbors: Vec<Vec<(usize, f64)>>,
}

impl Stepper {
    pub fn new(graph: &InfluenceGraph, rule: UpdateRule) -> Self {
        let in_neighbors = (0..graph.n()).map(|i| graph.in_neighbors(i).collect()).collect();
        Self { rule, in_neighbors }
    }

    pub fn rule(&self) -> UpdateRule {
        self.rule
    }

    fn agent(&self, beliefs: &[f64], i: usize) -> f64 {
        let b_i = beliefs[i];
        let neighbors = &self.in_neighbors[i];
        let mut correction = 0.0;
        for &(j, w) in neighbors {
            let diff = beliefs[j] - b_i;
            correction += match self.rule {
                UpdateRule::ConfirmationBias => cb_factor(b_i, beliefs[j]) * w * diff,
                UpdateRule::Classical => w * diff,
            };
        }
        b_i + correction / neighbors.len() as f64
    }

    pub fn step(&self, beliefs: &BeliefConfig) -> BeliefConfig {
        let b = beliefs.as_slice();
        assert_eq!(b.len(), self.in_neighbors.len(), "configuration and graph sizes differ");
        let next: Vec<f64> = if b.len() >= PARALLEL_MIN_AGENTS {
            (0..b.len()).into_par_iter().map(|i| self.agent(b, i)).collect()
        } else {
            (0..b.len()).map(|i| self.agent(b, i)).collect()
        };
        debug_assert!({
            let (lo, hi) = (beliefs.min(), beliefs.max());
            next.iter().all(|&x| lo <= x && x <= hi)
        });
        BeliefConfig::new_unchecked(next)
    }
}

pub fn step(beliefs: &BeliefConfig, graph: &InfluenceGraph, rule: UpdateRule) -> BeliefConfig {
    Stepper::new(graph, rule).step(beliefs)
}

pub fn step_cb(beliefs: &BeliefConfig, graph: &InfluenceGraph) -> BeliefConfig {
    step(beliefs, graph, UpdateRule::ConfirmationBias)
}

pub fn step_classical(beliefs: &BeliefConfig, graph: &InfluenceGraph) -> BeliefConfig {
    step(beliefs, graph, UpdateRule::Classical)
}

/// Runs `t_max` steps, recording every configuration.
pub fn evolve(
    initial: &BeliefConfig,
    graph: &InfluenceGraph,
    rule: UpdateRule,
    t_max: usize,
    bins: &Discretization,
    er: ErParams,
) -> Trace {
    evolve_every(initial, graph, rule, t_max, bins, er, 1)
}

/// Like [`evolve`], but records only steps divisible by `record_every`
/// plus the final step `t_max`.
pub fn evolve_every(
    initial: &BeliefConfig,
    graph: &InfluenceGraph,
    rule: UpdateRule,
    t_max: usize,
    bins: &Discretization,
    er: ErParams,
    record_every: usize,
) -> Trace {
    assert!(record_every >= 1, "record_every must be at least 1");
    let stepper = Stepper::new(graph, rule);
    let capacity = t_max / record_every + 2;
    let mut trace = Trace {
        steps: Vec::with_capacity(capacity),
        configs: Vec::with_capacity(capacity),
        polarization: Vec::with_capacity(capacity),
        meta: TraceMeta { rule, graph: None, bins: bins.clone(), er },
    };
    let mut record = |t: usize, b: &BeliefConfig| {
        trace.steps.push(t);
        trace.polarization.push(polarization(b, bins, er));
        trace.configs.push(b.clone());
    };

    let mut current = initial.clone();
    record(0, &current);
    for t in 1..=t_max {
        current = stepper.step(&current);
        if t % record_every == 0 || t == t_max {
            record(t, &current);
        }
    }
    trace
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pair_graph(w: f64) -> InfluenceGraph {
        InfluenceGraph::from_rows(vec![vec![1.0, w], vec![w, 1.0]]).unwrap()
    }

    fn cfg(v: &[f64]) -> BeliefConfig {
        BeliefConfig::new(v.to_vec()).unwrap()
    }

    #[test]
    fn factor_values() {
        assert_eq!(cb_factor(0.5, 0.5), 1.0);
        assert_eq!(cb_factor(0.0, 1.0), 0.0);
        assert_abs_diff_eq!(cb_factor(0.2, 0.7), 0.5, epsilon = 1e-15);
        assert_eq!(cb_factor(0.2, 0.7), cb_factor(0.7, 0.2));
    }

    #[test]
    fn cb_step_two_agents() {
        let next = step_cb(&cfg(&[0.1, 0.9]), &pair_graph(0.5));
        assert_abs_diff_eq!(next[0], 0.14, epsilon = 1e-15);
        assert_abs_diff_eq!(next[1], 0.86, epsilon = 1e-15);
    }

    #[test]
    fn classical_step_two_agents() {
        let next = step_classical(&cfg(&[0.1, 0.9]), &pair_graph(0.5));
        assert_abs_diff_eq!(next[0], 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(next[1], 0.7, epsilon = 1e-15);
    }

    #[test]
    fn radical_pair_behaviour() {
        let radical = cfg(&[0.0, 1.0]);
        assert_eq!(step_cb(&radical, &pair_graph(1.0)), radical);
        assert_eq!(step_classical(&radical, &pair_graph(1.0)).as_slice(), &[0.5, 0.5]);
    }

    #[test]
    fn consensus_is_fixed() {
        let g = crate::scenarios::graph_unrelenting(5).unwrap();
        let b = cfg(&[0.3; 5]);
        for rule in UpdateRule::ALL {
            assert_eq!(step(&b, &g, rule), b);
        }
    }

    #[test]
    fn radical_detection() {
        assert!(is_radical(&cfg(&[0.0, 1.0, 1.0])));
        assert!(!is_radical(&cfg(&[0.0, 0.5])));
        assert!(is_radical(&cfg(&[1.0])));
    }

    #[test]
    fn zero_horizon_trace() {
        let b = cfg(&[0.1, 0.9]);
        let t = evolve(&b, &pair_graph(0.5), UpdateRule::ConfirmationBias, 0, &Discretization::default(), ErParams::default());
        assert_eq!(t.len(), 1);
        assert_eq!(t.steps, vec![0]);
        assert_eq!(t.initial(), &b);
    }

    #[test]
    fn stride_keeps_final_step() {
        let b = cfg(&[0.1, 0.9]);
        let t = evolve_every(&b, &pair_graph(0.5), UpdateRule::Classical, 7, &Discretization::default(), ErParams::default(), 3);
        assert_eq!(t.steps, vec![0, 3, 6, 7]);
        let full = evolve(&b, &pair_graph(0.5), UpdateRule::Classical, 7, &Discretization::default(), ErParams::default());
        assert_eq!(t.configs[2], full.configs[6]);
        assert_eq!(t.last(), full.last());
    }

    #[test]
    fn parallel_and_serial_steps_agree() {
        let n = PARALLEL_MIN_AGENTS + 3;
        let g = crate::scenarios::graph_faint(n).unwrap();
        let b = crate::scenarios::beliefs_tripolar(n).unwrap();
        let stepper = Stepper::new(&g, UpdateRule::ConfirmationBias);
        let parallel = stepper.step(&b);
        let serial: Vec<f64> = (0..n).map(|i| stepper.agent(b.as_slice(), i)).collect();
        assert_eq!(parallel.as_slice(), serial.as_slice());
    }

    #[test]
    fn rule_names() {
        for r in UpdateRule::ALL {
            assert_eq!(r.name().parse::<UpdateRule>().unwrap(), r);
        }
        assert!("bayes".parse::<UpdateRule>().is_err());
    }
}
