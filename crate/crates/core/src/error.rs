use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(&'static str),

    #[error("angle {0} is outside [0, 360)")]
    AngleOutOfRange(f64),

    #[error("irregularity coefficient must be positive, got {0}")]
    InvalidCoefficient(f64),

    #[error("pattern generation exhausted after {attempts} attempts")]
    GenerationExhausted { attempts: u32 },

    #[error("link budget {budget_db} dB is not positive; node is inaudible at any distance")]
    NoRange { budget_db: f64 },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("pattern generation failed for node {node_id}")]
    Node {
        node_id: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("sweep failed at doi {doi}, replication {replication}")]
    Sweep {
        doi: f64,
        replication: u32,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Attempts tried, if this error (or the one it wraps) is a
    /// generation-exhausted failure.
    pub fn attempts(&self) -> Option<u32> {
        match self {
            Error::GenerationExhausted { attempts } => Some(*attempts),
            Error::Node { source, .. } | Error::Sweep { source, .. } => source.attempts(),
            _ => None,
        }
    }
}
