//! Deterministic, splittable random streams and Weibull sampling.
//!
//! Every random quantity in the model is drawn from an [`RngStream`], a
//! counter-based generator keyed by a `(master_seed, stream_id)` pair. The
//! n-th output of a stream is a pure function of the key and `n`:
//!
//! ```text
//! key      = mix64(master_seed ^ mix64(stream_id ^ STREAM_SALT))
//! output_n = mix64(key + (n + 1) * GOLDEN_GAMMA)        (wrapping arithmetic)
//! ```
//!
//! where `mix64` is the SplitMix64 finalizer. Outputs are therefore identical
//! on every platform, and any position in a stream can be reached with
//! [`RngStream::seek`] without replaying the prefix.
//!
//! Stream ids for per-node purposes are derived with [`StreamId::derive`]:
//!
//! ```text
//! stream_id(node_id, purpose) = mix64(mix64(node_id) ^ fnv1a64(purpose_tag))
//! ```
//!
//! The only purpose used by the model is `"pattern"` (irregularity pattern
//! generation).
//!
//! Transcendental functions throughout the crate come from `libm` rather
//! than the platform math library, so results are bit-identical across
//! targets.

use crate::error::{Error, Result};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const STREAM_SALT: u64 = 0xD1B5_4A32_D192_ED03;

/// SplitMix64 finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xCBF2_9CE4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

/// What a stream is used for. Distinct purposes give distinct stream ids for
/// the same node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Purpose {
    /// Irregularity pattern generation.
    Pattern,
}

impl Purpose {
    pub fn tag(self) -> &'static str {
        match self {
            Purpose::Pattern => "pattern",
        }
    }
}

/// Identifier of an independent random stream under one master seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StreamId(pub u64);

impl StreamId {
    /// Stream id for `node_id` used for `purpose`.
    pub fn derive(node_id: u64, purpose: Purpose) -> Self {
        StreamId(mix64(mix64(node_id) ^ fnv1a64(purpose.tag().as_bytes())))
    }
}

/// A deterministic stream of pseudo-random numbers.
///
/// Single owner; clone to fork an identical copy of the current position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngStream {
    master_seed: u64,
    stream_id: StreamId,
    key: u64,
    counter: u64,
}

impl RngStream {
    pub fn new(master_seed: u64, stream_id: StreamId) -> Self {
        let key = mix64(master_seed ^ mix64(stream_id.0 ^ STREAM_SALT));
        RngStream {
            master_seed,
            stream_id,
            key,
            counter: 0,
        }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_id(&self) -> StreamId {
        self.stream_id
    }

    /// Number of 64-bit draws consumed so far.
    pub fn position(&self) -> u64 {
        self.counter
    }

    /// Jump to an absolute draw position.
    pub fn seek(&mut self, position: u64) {
        self.counter = position;
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix64(
            self.key
                .wrapping_add(self.counter.wrapping_mul(GOLDEN_GAMMA)),
        )
    }

    /// Uniform variate in (0, 1). Never 0 and never 1, so both `ln(u)` and
    /// `ln(1 - u)` are finite and non-zero.
    pub fn next_uniform(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        ((self.next_u64() >> 11) as f64 + 0.5) * SCALE
    }

    /// Fair coin: `+1.0` or `-1.0`, one draw per call.
    pub fn next_sign(&mut self) -> f64 {
        if self.next_u64() >> 63 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// One Weibull(scale, shape) sample by inverse transform, one draw per
    /// call.
    pub fn sample_weibull(&mut self, weibull: &Weibull) -> f64 {
        weibull.inverse_transform(self.next_uniform())
    }
}

/// Weibull distribution with scale `a` and shape `b`:
/// `F(x) = 1 - exp(-(x / a)^b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weibull {
    scale: f64,
    shape: f64,
}

impl Weibull {
    pub const DEFAULT_SCALE: f64 = 1.5;
    pub const DEFAULT_SHAPE: f64 = 1.0;

    pub fn new(scale: f64, shape: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "weibull scale",
                value: scale,
                reason: "must be positive and finite",
            });
        }
        if !(shape > 0.0 && shape.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "weibull shape",
                value: shape,
                reason: "must be positive and finite",
            });
        }
        Ok(Weibull { scale, shape })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    /// Maps `u` in (0, 1] to `scale * (-ln u)^(1/shape)`.
    ///
    /// Sampling `u` uniformly yields a Weibull variate because `1 - u` is
    /// uniform as well.
    pub fn inverse_transform(&self, u: f64) -> f64 {
        self.scale * libm::pow(-libm::log(u), self.shape.recip())
    }
}

impl Default for Weibull {
    fn default() -> Self {
        Weibull {
            scale: Self::DEFAULT_SCALE,
            shape: Self::DEFAULT_SHAPE,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_range_and_determinism() {
        let mut a = RngStream::new(1, StreamId(0));
        let mut b = RngStream::new(1, StreamId(0));
        let first = a.next_uniform();
        assert!(first > 0.0 && first <= 1.0);
        assert_eq!(first.to_bits(), b.next_uniform().to_bits());
    }

    #[test]
    fn uniform_mean() {
        let mut s = RngStream::new(7, StreamId(3));
        let n = 1_000_000;
        let mean = (0..n).map(|_| s.next_uniform()).sum::<f64>() / n as f64;
        assert!((mean - 0.5).abs() < 0.002, "mean = {mean}");
    }

    #[test]
    fn sign_balance_and_codomain() {
        let mut s = RngStream::new(11, StreamId(5));
        let n = 1_000_000;
        let mut plus = 0usize;
        for _ in 0..n {
            let v = s.next_sign();
            assert!(v == 1.0 || v == -1.0);
            if v > 0.0 {
                plus += 1;
            }
        }
        let frac = plus as f64 / n as f64;
        assert!((frac - 0.5).abs() < 0.002, "fraction = {frac}");
    }

    #[test]
    fn sign_sequence_reproducible() {
        let seq = |seed| {
            let mut s = RngStream::new(seed, StreamId(9));
            (0..64).map(|_| s.next_sign()).collect::<Vec<_>>()
        };
        assert_eq!(seq(42), seq(42));
        assert_ne!(seq(42), seq(43));
    }

    #[test]
    fn forced_u_inverse_transform() {
        let u = (-1.0f64).exp();
        assert_eq!(Weibull::new(1.5, 1.0).unwrap().inverse_transform(u), 1.5);
        assert_eq!(Weibull::new(1.5, 2.0).unwrap().inverse_transform(u), 1.5);
    }

    #[test]
    fn weibull_rejects_bad_parameters() {
        assert!(Weibull::new(0.0, 1.0).is_err());
        assert!(Weibull::new(1.5, -1.0).is_err());
        assert!(Weibull::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn seek_matches_replay() {
        let mut a = RngStream::new(3, StreamId(4));
        for _ in 0..100 {
            a.next_u64();
        }
        let mut b = RngStream::new(3, StreamId(4));
        b.seek(100);
        assert_eq!(a.next_u64(), b.next_u64());
    }

    #[test]
    fn derived_stream_ids_differ() {
        let ids: std::collections::HashSet<_> = (0..1000)
            .map(|n| StreamId::derive(n, Purpose::Pattern))
            .collect();
        assert_eq!(ids.len(), 1000);
    }

    // Frozen first outputs: the generator is part of the reproducibility
    // contract, so any change to it must be deliberate.
    #[test]
    fn frozen_first_draws() {
        let mut s = RngStream::new(0, StreamId(0));
        let got: Vec<u64> = (0..3).map(|_| s.next_u64()).collect();
        assert_eq!(got, FROZEN);
    }

    const FROZEN: [u64; 3] = [
        0xfd0c_822e_52af_cb14,
        0x003d_bc13_fc88_79f8,
        0xb0ba_8c5c_fb35_ac55,
    ];
}
