//! Structural diagnostics of influence graphs, convergence detection,
//! consensus prediction, the DeGroot reduction of the classical update and
//! the polarization-persistence diagnosis.

use petgraph::algo::{connected_components, tarjan_scc};
use petgraph::graph::DiGraph;
use serde::Serialize;

use crate::dynamics::{is_radical, UpdateRule};
use crate::error::{ValidationError, Violation};
use crate::model::{BeliefConfig, Discretization, InfluenceGraph};
use crate::trace::Trace;

/// Absolute tolerance for flow balance and stochastic row sums.
pub const FLOW_TOLERANCE: f64 = 1e-12;

/// Default convergence threshold on `max - min`.
pub const DEFAULT_EPSILON: f64 = 1e-6;

fn support_graph(graph: &InfluenceGraph) -> DiGraph<(), ()> {
    let mut g = DiGraph::with_capacity(graph.n(), 0);
    let nodes: Vec<_> = (0..graph.n()).map(|_| g.add_node(())).collect();
    for (i, j, _) in graph.edges() {
        g.add_edge(nodes[i], nodes[j], ());
    }
    g
}

/// Every agent reaches every other along positive-weight edges.
pub fn is_strongly_connected(graph: &InfluenceGraph) -> bool {
    tarjan_scc(&support_graph(graph)).len() == 1
}

/// The support graph is connected once edge directions are ignored.
pub fn is_weakly_connected(graph: &InfluenceGraph) -> bool {
    connected_components(&support_graph(graph)) == 1
}

/// Out-flow minus in-flow of every agent (diagonal cancels).
pub fn flow_imbalance(graph: &InfluenceGraph) -> Vec<f64> {
    let n = graph.n();
    (0..n)
        .map(|i| {
            let out: f64 = graph.row(i).iter().sum();
            let inflow: f64 = (0..n).map(|j| graph.weight(j, i)).sum();
            out - inflow
        })
        .collect()
}

/// Circulation check: every imbalance within [`FLOW_TOLERANCE`].
pub fn is_balanced(graph: &InfluenceGraph) -> bool {
    flow_imbalance(graph).iter().all(|d| d.abs() <= FLOW_TOLERANCE)
}

/// `I[i][j] == I[j][i]` exactly, for every pair.
pub fn is_reciprocal(graph: &InfluenceGraph) -> bool {
    let n = graph.n();
    (0..n).all(|i| (i + 1..n).all(|j| graph.weight(i, j) == graph.weight(j, i)))
}

/// All agents have the same number of neighbors `|A_i|`.
pub fn is_regular(graph: &InfluenceGraph) -> bool {
    let counts = graph.neighbor_counts();
    counts.windows(2).all(|w| w[0] == w[1])
}

/// Total weight from `group` to the rest, and from the rest to `group`.
pub fn group_flow_conservation(graph: &InfluenceGraph, group: &[usize]) -> Result<(f64, f64), ValidationError> {
    let n = graph.n();
    let mut inside = vec![false; n];
    let mut violations = Vec::new();
    for &a in group {
        if a >= n {
            violations.push(Violation::AgentOutOfRange { agent: a, n });
        } else if std::mem::replace(&mut inside[a], true) {
            violations.push(Violation::Parameter(format!("agent {a} listed twice in partition")));
        }
    }
    let size = inside.iter().filter(|&&x| x).count();
    if violations.is_empty() && (size == 0 || size == n) {
        violations.push(Violation::Parameter("both sides of the partition must be non-empty".into()));
    }
    if !violations.is_empty() {
        return Err(ValidationError::new(violations));
    }

    let (mut out, mut back) = (0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            match (inside[i], inside[j]) {
                (true, false) => out += graph.weight(i, j),
                (false, true) => back += graph.weight(i, j),
                _ => {}
            }
        }
    }
    Ok((out, back))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub strongly_connected: bool,
    pub weakly_connected: bool,
    pub balanced: bool,
    pub reciprocal: bool,
    pub regular: bool,
    pub neighbor_counts: Vec<usize>,
    /// Out-flow minus in-flow per agent.
    pub flow_imbalance: Vec<f64>,
}

impl StructureReport {
    pub fn of(graph: &InfluenceGraph) -> Self {
        let flow_imbalance = flow_imbalance(graph);
        Self {
            n: graph.n(),
            strongly_connected: is_strongly_connected(graph),
            weakly_connected: is_weakly_connected(graph),
            balanced: flow_imbalance.iter().all(|d| d.abs() <= FLOW_TOLERANCE),
            reciprocal: is_reciprocal(graph),
            regular: is_regular(graph),
            neighbor_counts: graph.neighbor_counts(),
            flow_imbalance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub converged: bool,
    /// First recorded step with spread below epsilon.
    pub t_converged: Option<usize>,
    /// Mean of the final configuration, when converged.
    pub consensus_value: Option<f64>,
    pub spread_final: f64,
    /// Converged to within `borderline_epsilon` of an interior bin boundary.
    pub near_borderline: bool,
}

/// Scans recorded steps for the first spread `< epsilon`. With a recording
/// stride the reported step is the first recorded one, not necessarily the
/// first simulated one.
pub fn detect_convergence(trace: &Trace, epsilon: f64, borderline_epsilon: f64) -> ConvergenceReport {
    let t_converged = trace.iter().find(|(_, b, _)| b.spread() < epsilon).map(|(t, _, _)| t);
    let last = trace.last();
    let spread_final = last.spread();
    let converged = spread_final < epsilon;
    let consensus_value = converged.then(|| last.mean());
    let near_borderline = consensus_value
        .and_then(|v| trace.meta.bins.distance_to_borderline(v))
        .is_some_and(|d| d < borderline_epsilon);
    ConvergenceReport { converged, t_converged: if converged { t_converged } else { None }, consensus_value, spread_final, near_borderline }
}

/// Mean of the initial beliefs when the graph is regular and weakly
/// connected and either reciprocal under confirmation bias or balanced
/// under the classical rule. `None` when those hypotheses fail.
pub fn predict_consensus(graph: &InfluenceGraph, initial: &BeliefConfig, rule: UpdateRule) -> Option<f64> {
    if !(is_regular(graph) && is_weakly_connected(graph)) {
        return None;
    }
    let symmetric = match rule {
        UpdateRule::ConfirmationBias => is_reciprocal(graph),
        UpdateRule::Classical => is_balanced(graph),
    };
    symmetric.then(|| initial.mean())
}

/// Row-stochastic matrix with entries in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl StochasticMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, ValidationError> {
        let n = rows.len();
        let mut violations = Vec::new();
        if n == 0 {
            violations.push(Violation::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                violations.push(Violation::NonSquare { row: i, len: row.len(), n });
                continue;
            }
            for (j, &x) in row.iter().enumerate() {
                if !(0.0..=1.0).contains(&x) {
                    violations.push(Violation::WeightOutOfRange { from: i, to: j, value: x });
                }
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > FLOW_TOLERANCE {
                violations.push(Violation::Parameter(format!("row {i} sums to {sum}")));
            }
        }
        ValidationError::check(violations)?;
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// `T * f`, summing each row in ascending column order.
    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        assert_eq!(f.len(), self.n, "vector and matrix sizes differ");
        (0..self.n).map(|i| self.row(i).iter().zip(f).map(|(t, x)| t * x).sum()).collect()
    }
}

/// DeGroot matrix equivalent to the classical update:
/// `T[i][j] = I[j][i] / |A_i|` off the diagonal and
/// `T[i][i] = 1 - sum_{j in A_i, j != i} I[j][i] / |A_i|`.
pub fn degroot_matrix(graph: &InfluenceGraph) -> StochasticMatrix {
    let n = graph.n();
    let counts = graph.neighbor_counts();
    let rows = (0..n)
        .map(|i| {
            let a = counts[i] as f64;
            let mut row: Vec<f64> = (0..n).map(|j| if i == j { 0.0 } else { graph.weight(j, i) / a }).collect();
            let others: f64 = (0..n).filter(|&j| j != i).map(|j| graph.weight(j, i)).sum();
            row[i] = 1.0 - others / a;
            row
        })
        .collect();
    StochasticMatrix::from_rows(rows).expect("valid influence graph yields a stochastic matrix")
}

/// `T^steps * f0`.
pub fn degroot_iterate(matrix: &StochasticMatrix, initial: &BeliefConfig, steps: usize) -> BeliefConfig {
    let mut f = initial.as_slice().to_vec();
    for _ in 0..steps {
        f = matrix.apply(&f);
    }
    BeliefConfig::new_unchecked(f)
}

/// Which of the four possible causes of persistent polarization hold for a
/// run, plus a consistency verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PersistenceDiagnosis {
    /// (1) the graph is not a circulation.
    pub not_balanced: bool,
    /// (2) the graph is not weakly connected.
    pub not_weakly_connected: bool,
    /// (3) the initial configuration is radical.
    pub radical_initial: bool,
    /// (4) the run converged to within epsilon of a borderline point.
    pub borderline_limit: bool,
    pub final_polarization: f64,
    /// Final polarization exceeds epsilon.
    pub polarization_persists: bool,
    /// Polarization persists yet no condition holds. Points at a bug or a
    /// horizon too short to see convergence.
    pub inconsistent: bool,
}

impl PersistenceDiagnosis {
    /// Numbers (1 to 4) of the conditions that hold.
    pub fn conditions(&self) -> Vec<u8> {
        [self.not_balanced, self.not_weakly_connected, self.radical_initial, self.borderline_limit]
            .iter()
            .zip(1..)
            .filter_map(|(&held, k)| held.then_some(k))
            .collect()
    }
}

pub fn diagnose_persistence(
    graph: &InfluenceGraph,
    initial: &BeliefConfig,
    trace: &Trace,
    bins: &Discretization,
    epsilon: f64,
) -> PersistenceDiagnosis {
    let last = trace.last();
    let borderline_limit = last.spread() < epsilon
        && bins.distance_to_borderline(last.mean()).is_some_and(|d| d < epsilon);
    let final_polarization = trace.final_polarization();
    let mut diagnosis = PersistenceDiagnosis {
        not_balanced: !is_balanced(graph),
        not_weakly_connected: !is_weakly_connected(graph),
        radical_initial: is_radical(initial),
        borderline_limit,
        final_polarization,
        polarization_persists: final_polarization > epsilon,
        inconsistent: false,
    };
    diagnosis.inconsistent = diagnosis.polarization_persists && diagnosis.conditions().is_empty();
    diagnosis
}
