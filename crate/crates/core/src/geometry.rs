//! Planar positions, distances and bearings.
//!
//! Bearings are measured counterclockwise from the +x axis, in degrees,
//! normalized into `[0, 360)`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Position {
    pub x: f64,
    pub y: f64,
}

impl Position {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::InvalidParameter {
                name: "x",
                value: x,
                reason: "coordinates must be finite",
            });
        }
        if !y.is_finite() {
            return Err(Error::InvalidParameter {
                name: "y",
                value: y,
                reason: "coordinates must be finite",
            });
        }
        Ok(Position { x, y })
    }

    /// Point at `distance` meters from `self` along `bearing_deg`.
    pub fn offset(&self, bearing_deg: f64, distance: f64) -> Position {
        let (s, c) = libm::sincos(bearing_deg.to_radians());
        Position {
            x: self.x + distance * c,
            y: self.y + distance * s,
        }
    }
}

pub fn distance(p: Position, q: Position) -> f64 {
    libm::hypot(q.x - p.x, q.y - p.y)
}

/// Direction of `to` as seen from `from`, in `[0, 360)`.
pub fn bearing_deg(from: Position, to: Position) -> Result<f64> {
    let dx = to.x - from.x;
    let dy = to.y - from.y;
    if dx == 0.0 && dy == 0.0 {
        return Err(Error::DegenerateGeometry(
            "bearing between coincident points",
        ));
    }
    let deg = libm::atan2(dy, dx).to_degrees();
    let deg = if deg < 0.0 { deg + 360.0 } else { deg };
    // -tiny + 360 rounds to 360.0
    Ok(if deg >= 360.0 { 0.0 } else { deg })
}
