//! Radio irregularity model.
//!
//! Each node carries a random but fixed set of 360 per-degree coefficients
//! that scale its free-space path loss (in dB) depending on the direction of
//! departure. The [`scenario`] module applies this to sets of nodes and
//! counts the asymmetric links that result.

pub mod error;
pub mod geometry;
pub mod irregularity;
pub mod propagation;
pub mod rng;
pub mod scenario;

pub use error::{Error, Result};
pub use geometry::{bearing_deg, distance, Position};
pub use irregularity::{IrregularityPattern, PatternConfig};
pub use propagation::{
    adjusted_path_loss_db, fspl_db, range_at_bearing, received_power_dbm, PathLossParams,
    RadioParams,
};
pub use rng::{Purpose, RngStream, StreamId, Weibull};
pub use scenario::{doi_sweep, AsymmetryReport, ConnectivityGraph, Edge, Node, Scenario, SweepRow};
