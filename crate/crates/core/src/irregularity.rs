//! Per-node irregularity coefficients.
//!
//! A pattern holds one coefficient per integer degree of departure. It starts
//! at `k[0] = 1` and moves by a signed Weibull step scaled by the degree of
//! irregularity (DOI) at every degree:
//!
//! ```text
//! k[i] = k[i-1] + sign_i * w_i * doi,    sign_i = ±1 (fair),  w_i ~ Weibull(a, b)
//! ```
//!
//! The walk must close on itself, `|k[0] - k[359]| <= doi`, and every
//! coefficient must stay positive. Whole sequences that violate either
//! condition are discarded and redrawn from fresh randomness, so accepted
//! patterns follow the recurrence's distribution conditioned on the
//! constraints.

use crate::error::{Error, Result};
use crate::rng::{RngStream, StreamId, Weibull};

pub const DEGREES: usize = 360;

/// Random draws consumed by one generation attempt (a sign and a magnitude
/// for each of the 359 steps).
pub const DRAWS_PER_ATTEMPT: u64 = 2 * (DEGREES as u64 - 1);

pub const DEFAULT_DOI: f64 = 0.006;
pub const DEFAULT_MAX_ATTEMPTS: u32 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternConfig {
    pub doi: f64,
    pub weibull: Weibull,
    pub max_attempts: u32,
}

impl Default for PatternConfig {
    fn default() -> Self {
        PatternConfig {
            doi: DEFAULT_DOI,
            weibull: Weibull::default(),
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }
}

impl PatternConfig {
    pub fn with_doi(doi: f64) -> Self {
        PatternConfig {
            doi,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.doi >= 0.0 && self.doi.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "doi",
                value: self.doi,
                reason: "must be non-negative and finite",
            });
        }
        if self.max_attempts == 0 {
            return Err(Error::InvalidParameter {
                name: "max_attempts",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        Ok(())
    }
}

/// One node's 360 irregularity coefficients, indexed by integer degree.
#[derive(Debug, Clone, PartialEq)]
pub struct IrregularityPattern {
    k: Box<[f64; DEGREES]>,
    doi: f64,
    stream_id: StreamId,
    attempts_used: u32,
}

impl IrregularityPattern {
    /// Draw a pattern from `stream`.
    ///
    /// Attempt `n` (1-based) reads draws `(n - 1) * DRAWS_PER_ATTEMPT ..
    /// n * DRAWS_PER_ATTEMPT` relative to the stream's starting position.
    pub fn generate(stream: &mut RngStream, config: &PatternConfig) -> Result<Self> {
        config.validate()?;
        let doi = config.doi;
        let mut k = Box::new([0.0; DEGREES]);
        for attempt in 1..=config.max_attempts {
            k[0] = 1.0;
            let mut positive = true;
            for i in 1..DEGREES {
                let sign = stream.next_sign();
                let step = stream.sample_weibull(&config.weibull);
                k[i] = k[i - 1] + sign * step * doi;
                positive &= k[i] > 0.0;
            }
            if positive && (k[0] - k[DEGREES - 1]).abs() <= doi {
                return Ok(IrregularityPattern {
                    k,
                    doi,
                    stream_id: stream.stream_id(),
                    attempts_used: attempt,
                });
            }
        }
        Err(Error::GenerationExhausted {
            attempts: config.max_attempts,
        })
    }

    /// The pattern with every coefficient equal to 1 (no irregularity).
    pub fn isotropic() -> Self {
        IrregularityPattern {
            k: Box::new([1.0; DEGREES]),
            doi: 0.0,
            stream_id: StreamId(0),
            attempts_used: 1,
        }
    }

    /// Build a pattern from explicit coefficients, checking the closure and
    /// positivity constraints.
    pub fn from_coefficients(k: [f64; DEGREES], doi: f64) -> Result<Self> {
        if !(doi >= 0.0 && doi.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "doi",
                value: doi,
                reason: "must be non-negative and finite",
            });
        }
        if k[0] != 1.0 {
            return Err(Error::InvalidParameter {
                name: "k[0]",
                value: k[0],
                reason: "must be exactly 1",
            });
        }
        if let Some(&bad) = k.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidCoefficient(bad));
        }
        if (k[0] - k[DEGREES - 1]).abs() > doi {
            return Err(Error::InvalidParameter {
                name: "k[359]",
                value: k[DEGREES - 1],
                reason: "must lie within doi of k[0]",
            });
        }
        Ok(IrregularityPattern {
            k: Box::new(k),
            doi,
            stream_id: StreamId(0),
            attempts_used: 1,
        })
    }

    pub fn coefficients(&self) -> &[f64; DEGREES] {
        &self.k
    }

    pub fn doi(&self) -> f64 {
        self.doi
    }

    pub fn stream_id(&self) -> StreamId {
        self.stream_id
    }

    pub fn attempts_used(&self) -> u32 {
        self.attempts_used
    }

    /// Coefficient for direction `theta_deg`, which must lie in `[0, 360)`.
    /// Piecewise constant over unit-degree bins.
    pub fn k_at(&self, theta_deg: f64) -> Result<f64> {
        if !(0.0..360.0).contains(&theta_deg) {
            return Err(Error::AngleOutOfRange(theta_deg));
        }
        Ok(self.k[theta_deg.floor() as usize])
    }
}
