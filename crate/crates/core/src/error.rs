use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// A single broken invariant of a graph, configuration or discretization.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    Empty,
    NonSquare { row: usize, len: usize, n: usize },
    DimensionMismatch { graph: usize, beliefs: usize },
    WeightOutOfRange { from: usize, to: usize, value: f64 },
    Diagonal { agent: usize, value: f64 },
    BeliefOutOfRange { agent: usize, value: f64 },
    AgentOutOfRange { agent: usize, n: usize },
    Bins(String),
    Parameter(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "no agents"),
            Violation::NonSquare { row, len, n } => write!(f, "row {row} has {len} entries, expected {n}"),
            Violation::DimensionMismatch { graph, beliefs } => {
                write!(f, "graph has {graph} agents but configuration has {beliefs}")
            }
            Violation::WeightOutOfRange { from, to, value } => {
                write!(f, "weight ({from}, {to}) = {value} outside [0, 1]")
            }
            Violation::Diagonal { agent, value } => write!(f, "self-influence of agent {agent} is {value}, expected 1"),
            Violation::BeliefOutOfRange { agent, value } => write!(f, "belief of agent {agent} = {value} outside [0, 1]"),
            Violation::AgentOutOfRange { agent, n } => write!(f, "agent {agent} out of range for {n} agents"),
            Violation::Bins(msg) => write!(f, "invalid discretization: {msg}"),
            Violation::Parameter(msg) => f.write_str(msg),
        }
    }
}

/// Every violation found by one validation pass.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct ValidationError {
    violations: Vec<Violation>,
}

impl ValidationError {
    pub fn new(violations: Vec<Violation>) -> Self {
        Self { violations }
    }

    pub(crate) fn check(violations: Vec<Violation>) -> Result<(), Self> {
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Self { violations })
        }
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation(s): ", self.violations.len())?;
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),

    /// A generator precondition failed (agent count, strength parameter).
    #[error("scenario: {0}")]
    Scenario(String),

    #[error("{path}:{line}: {message}")]
    GraphFile { path: PathBuf, line: usize, message: String },

    #[error("{path}:{line}: weight ({from}, {to}) = {value} outside [0, 1]")]
    GraphWeight { path: PathBuf, line: usize, from: usize, to: usize, value: f64 },

    #[error("config: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
