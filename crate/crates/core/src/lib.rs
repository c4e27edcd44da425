//! Belief evolution under confirmation bias on weighted influence graphs.
//!
//! Agents hold a confidence value in `[0, 1]` for a single proposition and
//! repeatedly move toward the beliefs of the agents that influence them.
//! Under the confirmation-bias rule each pull is discounted by how far
//! apart the two beliefs are; the classical rule reduces to a DeGroot
//! iteration. Polarization is measured with the Esteban-Ray functional over
//! a bin discretization of `[0, 1]`.
//!
//! ```
//! use beliefsim::prelude::*;
//!
//! let graph = graph_clique(50, 0.5).unwrap();
//! let beliefs = beliefs_tripolar(50).unwrap();
//! let bins = Discretization::default();
//! let trace = evolve(&beliefs, &graph, UpdateRule::ConfirmationBias, 200, &bins, ErParams::default());
//! assert!(trace.last().spread() < 1e-6);
//! assert_eq!(trace.final_polarization(), 0.0);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod io;
pub mod model;
pub mod polarization;
pub mod scenarios;
pub mod trace;

pub use error::{Error, Result, ValidationError, Violation};

pub mod prelude {
    pub use crate::analysis::{
        degroot_iterate, degroot_matrix, detect_convergence, diagnose_persistence, group_flow_conservation,
        is_balanced, is_reciprocal, is_regular, is_strongly_connected, is_weakly_connected, predict_consensus,
        StructureReport,
    };
    pub use crate::config::ExperimentConfig;
    pub use crate::dynamics::{cb_factor, evolve, evolve_every, is_radical, step, step_cb, step_classical, UpdateRule};
    pub use crate::model::{validate, BeliefConfig, Discretization, InfluenceGraph};
    pub use crate::polarization::{bin_index, esteban_ray, polarization, to_distribution, BinDistribution, ErParams};
    pub use crate::scenarios::{
        beliefs_extreme, beliefs_mild, beliefs_tripolar, beliefs_uniform, graph_circular, graph_clique,
        graph_disconnected, graph_faint, graph_unrelenting, load_graph, BeliefKind, GraphKind,
    };
    pub use crate::trace::Trace;
}
