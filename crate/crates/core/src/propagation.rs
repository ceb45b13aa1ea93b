//! Free-space path loss with a directional irregularity factor.
//!
//! The irregular loss toward a receiver is the isotropic loss in dB scaled by
//! the transmitter's coefficient for the bearing to that receiver:
//!
//! ```text
//! PL(d)      = max(0, 10 * alpha * log10(4 * pi * d / lambda) + L_sys)   [dB]
//! PL_rim     = PL(d) * k(theta)
//! P_rx       = P_tx + G_tx + G_rx - PL_rim                               [dBm]
//! ```
//!
//! Solving `P_rx = S` for `d` gives the range contour
//!
//! ```text
//! d(theta) = lambda / (4 * pi) * 10^((B / k(theta) - L_sys) / (10 * alpha)),
//! B        = P_tx + G_tx + G_rx - S
//! ```

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{bearing_deg, distance, Position};
use crate::irregularity::IrregularityPattern;

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLossParams {
    frequency_hz: f64,
    alpha: f64,
    system_loss_db: f64,
}

impl PathLossParams {
    pub const DEFAULT_ALPHA: f64 = 2.0;
    pub const DEFAULT_SYSTEM_LOSS_DB: f64 = 0.0;

    pub fn new(frequency_hz: f64, alpha: f64, system_loss_db: f64) -> Result<Self> {
        if !(frequency_hz > 0.0 && frequency_hz.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "frequency_hz",
                value: frequency_hz,
                reason: "must be positive and finite",
            });
        }
        if !(alpha >= 1.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must be at least 1",
            });
        }
        if !(system_loss_db >= 0.0 && system_loss_db.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "system_loss_db",
                value: system_loss_db,
                reason: "must be non-negative and finite",
            });
        }
        Ok(PathLossParams {
            frequency_hz,
            alpha,
            system_loss_db,
        })
    }

    /// Free-space parameters (alpha = 2, no system loss).
    pub fn free_space(frequency_hz: f64) -> Result<Self> {
        Self::new(
            frequency_hz,
            Self::DEFAULT_ALPHA,
            Self::DEFAULT_SYSTEM_LOSS_DB,
        )
    }

    pub fn frequency_hz(&self) -> f64 {
        self.frequency_hz
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn system_loss_db(&self) -> f64 {
        self.system_loss_db
    }

    pub fn wavelength(&self) -> f64 {
        SPEED_OF_LIGHT / self.frequency_hz
    }

    /// `lambda / (4 * pi)`: the distance at which free-space loss is 0 dB.
    pub fn reference_distance(&self) -> f64 {
        self.wavelength() / (4.0 * PI)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioParams {
    pub tx_power_dbm: f64,
    pub tx_gain_db: f64,
    pub rx_gain_db: f64,
    pub rx_sensitivity_dbm: f64,
}

impl RadioParams {
    pub fn new(
        tx_power_dbm: f64,
        tx_gain_db: f64,
        rx_gain_db: f64,
        rx_sensitivity_dbm: f64,
    ) -> Result<Self> {
        for (name, value) in [
            ("tx_power_dbm", tx_power_dbm),
            ("tx_gain_db", tx_gain_db),
            ("rx_gain_db", rx_gain_db),
            ("rx_sensitivity_dbm", rx_sensitivity_dbm),
        ] {
            if !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be finite",
                });
            }
        }
        Ok(RadioParams {
            tx_power_dbm,
            tx_gain_db,
            rx_gain_db,
            rx_sensitivity_dbm,
        })
    }

    /// Zero antenna gains.
    pub fn simple(tx_power_dbm: f64, rx_sensitivity_dbm: f64) -> Result<Self> {
        Self::new(tx_power_dbm, 0.0, 0.0, rx_sensitivity_dbm)
    }
}

/// Link budget in dB between a transmitter and a receiver with the given
/// sensitivity.
pub fn link_budget_db(tx: &RadioParams, rx_gain_db: f64, sensitivity_dbm: f64) -> f64 {
    tx.tx_power_dbm + tx.tx_gain_db + rx_gain_db - sensitivity_dbm
}

pub fn fspl_db(d: f64, params: &PathLossParams) -> Result<f64> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::DegenerateGeometry(
            "path loss needs a positive distance",
        ));
    }
    let loss =
        10.0 * params.alpha * libm::log10(d / params.reference_distance()) + params.system_loss_db;
    Ok(loss.max(0.0))
}

pub fn adjusted_path_loss_db(pl_db: f64, k: f64) -> Result<f64> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidCoefficient(k));
    }
    Ok(pl_db * k)
}

/// Received power at `rx_pos` from a transmitter at `tx_pos` with pattern
/// `tx_pattern`. The transmitter's coefficient toward the receiver is used.
pub fn received_power_dbm(
    tx_pos: Position,
    tx_pattern: &IrregularityPattern,
    tx_radio: &RadioParams,
    rx_pos: Position,
    rx_radio: &RadioParams,
    params: &PathLossParams,
) -> Result<f64> {
    let theta = bearing_deg(tx_pos, rx_pos)?;
    let pl = fspl_db(distance(tx_pos, rx_pos), params)?;
    let adjusted = adjusted_path_loss_db(pl, tx_pattern.k_at(theta)?)?;
    Ok(tx_radio.tx_power_dbm + tx_radio.tx_gain_db + rx_radio.rx_gain_db - adjusted)
}

/// Distance along `theta_deg` at which the received power falls to
/// `peer_sensitivity_dbm`. The peer's receive gain is taken from `radio`.
pub fn range_at_bearing(
    pattern: &IrregularityPattern,
    radio: &RadioParams,
    peer_sensitivity_dbm: f64,
    params: &PathLossParams,
    theta_deg: f64,
) -> Result<f64> {
    let budget = link_budget_db(radio, radio.rx_gain_db, peer_sensitivity_dbm);
    if budget.is_nan() || budget <= 0.0 {
        return Err(Error::NoRange { budget_db: budget });
    }
    let k = pattern.k_at(theta_deg)?;
    let exponent = (budget / k - params.system_loss_db) / (10.0 * params.alpha);
    Ok(params.reference_distance() * libm::pow(10.0, exponent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irregularity::DEGREES;

    fn wifi() -> PathLossParams {
        PathLossParams::free_space(2.4e9).unwrap()
    }

    #[test]
    fn fspl_zero_at_unit_argument() {
        let p = wifi();
        assert_eq!(fspl_db(p.wavelength() / (4.0 * PI), &p).unwrap(), 0.0);
        assert_eq!(fspl_db(p.reference_distance(), &p).unwrap(), 0.0);
    }

    #[test]
    fn fspl_reference_value() {
        // 20 * log10(4 * pi * 100 * 2.4e9 / c), evaluated in arbitrary precision.
        let got = fspl_db(100.0, &wifi()).unwrap();
        assert!((got - 80.052_008_056_115_5).abs() < 1e-9, "{got}");
    }

    #[test]
    fn fspl_doubling_law() {
        let p = wifi();
        let delta = fspl_db(200.0, &p).unwrap() - fspl_db(100.0, &p).unwrap();
        assert!((delta - 20.0 * 2f64.log10()).abs() < 1e-12);
    }

    #[test]
    fn fspl_clamped_in_near_field() {
        let p = wifi();
        assert_eq!(fspl_db(p.wavelength() / 100.0, &p).unwrap(), 0.0);
        assert!(fspl_db(p.wavelength(), &p).unwrap() > 0.0);
    }

    #[test]
    fn fspl_rejects_non_positive_distance() {
        assert!(fspl_db(0.0, &wifi()).is_err());
        assert!(fspl_db(-1.0, &wifi()).is_err());
    }

    #[test]
    fn adjusted_loss() {
        assert_eq!(adjusted_path_loss_db(80.0, 1.0).unwrap(), 80.0);
        assert!((adjusted_path_loss_db(80.0, 1.05).unwrap() - 84.0).abs() < 1e-12);
        assert!((adjusted_path_loss_db(80.0, 0.95).unwrap() - 76.0).abs() < 1e-12);
        assert!(matches!(
            adjusted_path_loss_db(80.0, 0.0),
            Err(Error::InvalidCoefficient(_))
        ));
    }

    #[test]
    fn received_power_with_k_at_90() {
        let mut k = [1.0; DEGREES];
        k[90] = 1.05;
        let pattern = IrregularityPattern::from_coefficients(k, 0.006).unwrap();
        let radio = RadioParams::simple(0.0, -100.0).unwrap();
        let prx = received_power_dbm(
            Position::new(0.0, 0.0).unwrap(),
            &pattern,
            &radio,
            Position::new(0.0, 100.0).unwrap(),
            &radio,
            &wifi(),
        )
        .unwrap();
        // -80.052008 * 1.05
        assert!((prx - -84.054_608_459).abs() < 1e-6, "{prx}");
    }

    #[test]
    fn received_power_due_east_ignores_pattern() {
        let mut k = [1.0; DEGREES];
        k[1] = 1.2;
        k[180] = 1.3;
        let pattern = IrregularityPattern::from_coefficients(k, 0.006).unwrap();
        let radio = RadioParams::new(10.0, 2.0, 3.0, -90.0).unwrap();
        let tx = Position::new(5.0, 5.0).unwrap();
        let rx = Position::new(155.0, 5.0).unwrap();
        let got = received_power_dbm(tx, &pattern, &radio, rx, &radio, &wifi()).unwrap();
        let plain = 10.0 + 2.0 + 3.0 - fspl_db(150.0, &wifi()).unwrap();
        assert_eq!(got, plain);
    }

    #[test]
    fn coincident_nodes_rejected() {
        let radio = RadioParams::simple(0.0, -90.0).unwrap();
        let p = Position::new(1.0, 1.0).unwrap();
        let err = received_power_dbm(
            p,
            &IrregularityPattern::isotropic(),
            &radio,
            p,
            &radio,
            &wifi(),
        );
        assert!(matches!(err, Err(Error::DegenerateGeometry(_))));
    }

    #[test]
    fn isotropic_range_inverts_fspl() {
        let fspl = fspl_db(100.0, &wifi()).unwrap();
        let radio = RadioParams::simple(0.0, -fspl).unwrap();
        let r = range_at_bearing(
            &IrregularityPattern::isotropic(),
            &radio,
            radio.rx_sensitivity_dbm,
            &wifi(),
            123.4,
        )
        .unwrap();
        assert!((r - 100.0).abs() < 1e-9, "{r}");
    }

    #[test]
    fn larger_k_shrinks_range() {
        let mut k = [1.0; DEGREES];
        k[10] = 1.02;
        let pattern = IrregularityPattern::from_coefficients(k, 0.006).unwrap();
        let radio = RadioParams::simple(0.0, -80.0).unwrap();
        let r0 = range_at_bearing(&pattern, &radio, -80.0, &wifi(), 0.5).unwrap();
        let r10 = range_at_bearing(&pattern, &radio, -80.0, &wifi(), 10.5).unwrap();
        assert!(r10 < r0);
    }

    #[test]
    fn no_range_without_budget() {
        let radio = RadioParams::simple(0.0, 0.0).unwrap();
        let err = range_at_bearing(&IrregularityPattern::isotropic(), &radio, 0.0, &wifi(), 0.0);
        assert!(matches!(err, Err(Error::NoRange { .. })));
    }

    #[test]
    fn invalid_params() {
        assert!(PathLossParams::new(0.0, 2.0, 0.0).is_err());
        assert!(PathLossParams::new(1e9, 0.5, 0.0).is_err());
        assert!(PathLossParams::new(1e9, 2.0, -1.0).is_err());
        assert!(RadioParams::simple(f64::NAN, -90.0).is_err());
    }
}
