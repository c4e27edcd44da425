//! Esteban-Ray polarization of a belief configuration, measured after
//! pooling agents into the bins of a [`Discretization`].

use serde::{Deserialize, Serialize};

use crate::model::{BeliefConfig, Discretization};

/// Parameters of the Esteban-Ray measure: the scale `K > 0` and the
/// sensitivity `alpha > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErParams {
    #[serde(rename = "K")]
    pub scale: f64,
    pub alpha: f64,
}

impl Default for ErParams {
    fn default() -> Self {
        Self { scale: 1000.0, alpha: 1.6 }
    }
}

/// Discrete distribution over the occupied bins: `weights[m]` is the
/// fraction of agents at `positions[m]`. Empty bins are not listed.
#[derive(Debug, Clone, PartialEq)]
pub struct BinDistribution {
    pub weights: Vec<f64>,
    pub positions: Vec<f64>,
}

impl BinDistribution {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// The bin containing `b`. Interior boundaries belong to the bin on their
/// right; 1 belongs to the last bin.
pub fn bin_index(b: f64, bins: &Discretization) -> usize {
    bins.interior().partition_point(|&edge| edge <= b)
}

/// Per-bin occupancy counts, `bins.bins()` entries.
pub fn bin_counts(beliefs: &BeliefConfig, bins: &Discretization) -> Vec<usize> {
    let mut counts = vec![0; bins.bins()];
    for &b in beliefs.as_slice() {
        counts[bin_index(b, bins)] += 1;
    }
    counts
}

pub fn to_distribution(beliefs: &BeliefConfig, bins: &Discretization) -> BinDistribution {
    let n = beliefs.len() as f64;
    let (weights, positions) = bin_counts(beliefs, bins)
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(m, c)| (c as f64 / n, bins.midpoint(m)))
        .unzip();
    BinDistribution { weights, positions }
}

/// `K * sum_i sum_j pi_i^(1+alpha) * pi_j * |y_i - y_j|`.
pub fn esteban_ray(dist: &BinDistribution, params: ErParams) -> f64 {
    let ErParams { scale, alpha } = params;
    debug_assert!(scale > 0.0 && alpha > 0.0);
    let mut total = 0.0;
    for (&pi_i, &y_i) in dist.weights.iter().zip(&dist.positions) {
        let head = pi_i.powf(1.0 + alpha);
        for (&pi_j, &y_j) in dist.weights.iter().zip(&dist.positions) {
            total += head * pi_j * (y_i - y_j).abs();
        }
    }
    scale * total
}

pub fn polarization(beliefs: &BeliefConfig, bins: &Discretization, params: ErParams) -> f64 {
    esteban_ray(&to_distribution(beliefs, bins), params)
}
