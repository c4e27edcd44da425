//! Domain types shared by every other module: belief configurations,
//! influence graphs and bin discretizations of `[0, 1]`.
//!
//! Agents are indexed from 0. All values are `f64` and every range check is
//! an exact `<=`/`>=` comparison against the closed interval bounds.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ValidationError, Violation};

/// One belief value per agent, each the agent's confidence in a single
/// proposition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BeliefConfig(Vec<f64>);

impl BeliefConfig {
    /// Builds a configuration, rejecting empty input and values outside `[0, 1]`.
    pub fn new(beliefs: Vec<f64>) -> Result<Self, ValidationError> {
        let mut violations = Vec::new();
        belief_violations(&beliefs, &mut violations);
        ValidationError::check(violations)?;
        Ok(Self(beliefs))
    }

    /// Wraps values without checking them. [`validate`] can be used later
    /// to report every violated invariant at once.
    pub fn new_unchecked(beliefs: Vec<f64>) -> Self {
        Self(beliefs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn get(&self, i: usize) -> Option<f64> {
        self.0.get(i).copied()
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `max - min` over all agents.
    pub fn spread(&self) -> f64 {
        self.max() - self.min()
    }

    /// Ascending-index sum.
    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.sum() / self.0.len() as f64
    }
}

impl std::ops::Index<usize> for BeliefConfig {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Dense `n x n` matrix of direct influences; entry `(i, j)` is the weight
/// agent `i` carries with agent `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct InfluenceGraph {
    n: usize,
    weights: Vec<f64>,
}

impl InfluenceGraph {
    /// Builds a graph from rows, checking squareness, weight ranges and the
    /// unit diagonal.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, ValidationError> {
        let graph = Self::from_rows_unchecked(rows)?;
        let mut violations = Vec::new();
        graph_violations(&graph, &mut violations);
        ValidationError::check(violations)?;
        Ok(graph)
    }

    /// Only the shape is checked; weights are stored as given.
    pub fn from_rows_unchecked(rows: Vec<Vec<f64>>) -> Result<Self, ValidationError> {
        let n = rows.len();
        let mut violations = Vec::new();
        if n == 0 {
            violations.push(Violation::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                violations.push(Violation::NonSquare { row: i, len: row.len(), n });
            }
        }
        ValidationError::check(violations)?;
        Ok(Self { n, weights: rows.into_iter().flatten().collect() })
    }

    /// Builds a graph from an `n x n` weight function. The diagonal is set to
    /// 1 regardless of what `weight` returns for `(i, i)`.
    pub fn from_fn(n: usize, mut weight: impl FnMut(usize, usize) -> f64) -> Result<Self, ValidationError> {
        if n == 0 {
            return Err(ValidationError::new(vec![Violation::Empty]));
        }
        let mut weights = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                weights.push(if i == j { 1.0 } else { weight(i, j) });
            }
        }
        let graph = Self { n, weights };
        let mut violations = Vec::new();
        graph_violations(&graph, &mut violations);
        ValidationError::check(violations)?;
        Ok(graph)
    }

    /// A graph whose only positive entries are the diagonal.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n.max(1), |_, _| 0.0).expect("identity graph is valid")
    }

    /// Agent count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Influence of `i` on `j`.
    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.n + j]
    }

    /// Row `i`: the influence of `i` on every agent.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.weights[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.weights.chunks(self.n)
    }

    /// Positive-weight edges `(i, j, w)` with `i != j`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n).filter_map(move |j| {
                let w = self.weight(i, j);
                (i != j && w > 0.0).then_some((i, j, w))
            })
        })
    }

    /// Agents with positive influence on `i` (always including `i`), ascending.
    pub fn neighbors(&self, i: usize) -> Result<Vec<usize>, ValidationError> {
        if i >= self.n {
            return Err(ValidationError::new(vec![Violation::AgentOutOfRange { agent: i, n: self.n }]));
        }
        Ok(self.in_neighbors(i).map(|(j, _)| j).collect())
    }

    /// `(j, I[j][i])` for every `j` with `I[j][i] > 0`, ascending in `j`.
    pub(crate) fn in_neighbors(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        (0..self.n).filter_map(move |j| {
            let w = self.weight(j, i);
            (w > 0.0).then_some((j, w))
        })
    }

    /// `|A_i|` for every agent.
    pub fn neighbor_counts(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.in_neighbors(i).count()).collect()
    }
}

/// Partition of `[0, 1]` into `k` consecutive bins. Bin `m` is
/// `[l_m, r_m)`, except the last bin which is closed at 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discretization {
    boundaries: Vec<f64>,
}

impl Discretization {
    /// `k` equal-width bins with boundaries `m / k`.
    pub fn uniform(k: usize) -> Result<Self, ValidationError> {
        if k == 0 {
            return Err(ValidationError::new(vec![Violation::Bins("need at least one bin".into())]));
        }
        Self::from_boundaries((0..=k).map(|m| m as f64 / k as f64).collect())
    }

    /// Explicit boundary list `0 = b_0 < b_1 < ... < b_k = 1`.
    pub fn from_boundaries(boundaries: Vec<f64>) -> Result<Self, ValidationError> {
        let bad = |msg: String| Err(ValidationError::new(vec![Violation::Bins(msg)]));
        if boundaries.len() < 2 {
            return bad(format!("need at least 2 boundaries, got {}", boundaries.len()));
        }
        if boundaries[0] != 0.0 || *boundaries.last().unwrap() != 1.0 {
            return bad("boundaries must start at 0 and end at 1".into());
        }
        if let Some(w) = boundaries.windows(2).find(|w| !(w[0] < w[1])) {
            return bad(format!("boundaries not strictly increasing at {} -> {}", w[0], w[1]));
        }
        Ok(Self { boundaries })
    }

    /// Bin count `k`.
    pub fn bins(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn boundaries(&self) -> &[f64] {
        &self.boundaries
    }

    /// Boundaries other than 0 and 1 (the borderline points).
    pub fn interior(&self) -> &[f64] {
        &self.boundaries[1..self.boundaries.len() - 1]
    }

    pub fn bin(&self, m: usize) -> (f64, f64) {
        (self.boundaries[m], self.boundaries[m + 1])
    }

    pub fn midpoint(&self, m: usize) -> f64 {
        let (l, r) = self.bin(m);
        (l + r) / 2.0
    }

    /// Distance from `v` to the nearest borderline point, `None` for `k = 1`.
    pub fn distance_to_borderline(&self, v: f64) -> Option<f64> {
        self.interior().iter().map(|b| (v - b).abs()).reduce(f64::min)
    }
}

impl Default for Discretization {
    fn default() -> Self {
        Self::uniform(5).expect("5 bins")
    }
}

impl fmt::Display for Discretization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in 0..self.bins() {
            let (l, r) = self.bin(m);
            let close = if m + 1 == self.bins() { ']' } else { ')' };
            if m > 0 {
                write!(f, " ")?;
            }
            write!(f, "[{l}, {r}{close}")?;
        }
        Ok(())
    }
}

/// Checks every invariant of the pair and reports all violations found.
pub fn validate(graph: &InfluenceGraph, beliefs: &BeliefConfig) -> Result<(), ValidationError> {
    let mut violations = Vec::new();
    if graph.n() != beliefs.len() {
        violations.push(Violation::DimensionMismatch { graph: graph.n(), beliefs: beliefs.len() });
    }
    graph_violations(graph, &mut violations);
    belief_violations(beliefs.as_slice(), &mut violations);
    ValidationError::check(violations)
}

fn in_unit(x: f64) -> bool {
    (0.0..=1.0).contains(&x)
}

fn graph_violations(graph: &InfluenceGraph, out: &mut Vec<Violation>) {
    for i in 0..graph.n() {
        for j in 0..graph.n() {
            let w = graph.weight(i, j);
            if i == j {
                if w != 1.0 {
                    out.push(Violation::Diagonal { agent: i, value: w });
                }
            } else if !in_unit(w) {
                out.push(Violation::WeightOutOfRange { from: i, to: j, value: w });
            }
        }
    }
}

fn belief_violations(beliefs: &[f64], out: &mut Vec<Violation>) {
    if beliefs.is_empty() {
        out.push(Violation::Empty);
    }
    for (i, &b) in beliefs.iter().enumerate() {
        if !in_unit(b) {
            out.push(Violation::BeliefOutOfRange { agent: i, value: b });
        }
    }
}
