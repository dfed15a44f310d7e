//! One-sided unit-octonion products and four-plane decompositions.
//!
//! Left multiplication by a unit octonion `exp(eps * theta)` along any of the
//! seven hypercomplex axes rotates four mutually orthogonal coordinate planes
//! simultaneously by the same angle: compact planes for the pseudovector axes
//! `j_n`, hyperbolic planes for `J_n` and `I`. One of the four planes always
//! contains the scalar coordinate.
//!
//! Plane pairings and orientations are read off the basis product table, so
//! the decomposition exists for every axis, not only the three the canonical
//! formulas are usually written for. Phases are oriented so that a left
//! rotation shifts all four of them by the same amount.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

use crate::algebra::{mul, BasisProductTable, SplitOctonion, COEFF_NAMES, DIM};

/// One of the seven hypercomplex basis directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    /// Vector-like `J_n` (square +1, hyperbolic), n in 1..=3.
    Vector(u8),
    /// Pseudovector-like `j_n` (square -1, compact), n in 1..=3.
    Pseudovector(u8),
    /// Pseudoscalar-like `I` (square +1, hyperbolic).
    Pseudoscalar,
}

impl Axis {
    pub const ALL: [Axis; 7] = [
        Axis::Vector(1),
        Axis::Vector(2),
        Axis::Vector(3),
        Axis::Pseudovector(1),
        Axis::Pseudovector(2),
        Axis::Pseudovector(3),
        Axis::Pseudoscalar,
    ];

    /// Coefficient index in 1..=7.
    pub fn index(self) -> usize {
        match self {
            Axis::Vector(n) => n as usize,
            Axis::Pseudovector(n) => 3 + n as usize,
            Axis::Pseudoscalar => 7,
        }
    }

    pub fn from_index(i: usize) -> Option<Axis> {
        match i {
            1..=3 => Some(Axis::Vector(i as u8)),
            4..=6 => Some(Axis::Pseudovector((i - 3) as u8)),
            7 => Some(Axis::Pseudoscalar),
            _ => None,
        }
    }

    /// Compact axes rotate with cos/sin, hyperbolic ones with cosh/sinh.
    pub fn is_compact(self) -> bool {
        matches!(self, Axis::Pseudovector(_))
    }

    pub fn unit(self) -> SplitOctonion {
        SplitOctonion::basis(self.index())
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Vector(n) => write!(f, "J{n}"),
            Axis::Pseudovector(n) => write!(f, "j{n}"),
            Axis::Pseudoscalar => write!(f, "I"),
        }
    }
}

impl FromStr for Axis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "J1" => Ok(Axis::Vector(1)),
            "J2" => Ok(Axis::Vector(2)),
            "J3" => Ok(Axis::Vector(3)),
            "j1" => Ok(Axis::Pseudovector(1)),
            "j2" => Ok(Axis::Pseudovector(2)),
            "j3" => Ok(Axis::Pseudovector(3)),
            "I" => Ok(Axis::Pseudoscalar),
            other => Err(format!(
                "unknown axis `{other}` (expected one of J1 J2 J3 j1 j2 j3 I)"
            )),
        }
    }
}

/// Exponential `exp(eps * angle)` of a single basis direction: unit norm by
/// construction (`cos^2 + sin^2` or `cosh^2 - sinh^2`).
pub fn rotor_exp(axis: Axis, angle: f64) -> SplitOctonion {
    let (c, s) = if axis.is_compact() {
        (angle.cos(), angle.sin())
    } else {
        (angle.cosh(), angle.sinh())
    };
    let mut o = SplitOctonion::zero();
    o.set_coeff(0, c);
    o.set_coeff(axis.index(), s);
    o
}

/// A rotation along one basis axis.
///
/// `angle` follows the two-sided convention: the realized one-sided factor is
/// the half-angle exponential `exp(eps * angle / 2)`, so `left_rotate` shifts
/// each of the four plane phases by `angle / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rotor {
    pub axis: Axis,
    pub angle: f64,
}

impl Rotor {
    pub fn new(axis: Axis, angle: f64) -> Self {
        Self { axis, angle }
    }

    /// The unit octonion this rotor multiplies by.
    pub fn realization(&self) -> SplitOctonion {
        rotor_exp(self.axis, 0.5 * self.angle)
    }
}

/// Left product `R s` with the rotor's realized unit octonion. Preserves the
/// norm form since `N^2(R) = 1`.
pub fn left_rotate(r: &Rotor, s: &SplitOctonion) -> SplitOctonion {
    mul(&r.realization(), s)
}

/// One rotation plane of a decomposition: which two coefficients it spans,
/// the plane magnitude, and the phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneEntry {
    /// Coefficient index carrying the cos/cosh part.
    pub cos_index: usize,
    /// Coefficient index carrying the sin/sinh part.
    pub sin_index: usize,
    /// Orientation sign relating the sin coefficient to the phase.
    pub orientation: f64,
    pub magnitude: f64,
    pub phase: f64,
}

impl PlaneEntry {
    /// Label of the plane as a coordinate pair, cos axis first.
    pub fn label(&self) -> String {
        format!(
            "{},{}",
            COEFF_NAMES[self.cos_index], COEFF_NAMES[self.sin_index]
        )
    }
}

/// Decomposition of an octonion into four orthogonal rotation planes of one
/// axis. Reconstruction is exact: `cos` coefficient = `m cos(phase)` (or
/// cosh), `sin` coefficient = `orientation * m sin(phase)` (or sinh).
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneDecomposition {
    pub axis: Axis,
    pub planes: [PlaneEntry; 4],
}

impl PlaneDecomposition {
    pub fn reconstruct(&self) -> SplitOctonion {
        let mut c = [0.0; DIM];
        for p in &self.planes {
            let (cv, sv) = if self.axis.is_compact() {
                (p.phase.cos(), p.phase.sin())
            } else {
                (p.phase.cosh(), p.phase.sinh())
            };
            c[p.cos_index] = p.magnitude * cv;
            c[p.sin_index] = p.orientation * p.magnitude * sv;
        }
        SplitOctonion::from_coeffs(c)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RotorError {
    #[error("plane ({plane}): non-positive radicand {radicand:e}; hyperbolic decomposition requires the leading squared coordinate to dominate")]
    DomainViolation { plane: String, radicand: f64 },
    #[error("plane ({plane}): leading hyperbolic coordinate must be positive")]
    NegativeBranch { plane: String },
}

/// Plane pairing for an axis, read off the product table.
///
/// The scalar always pairs with the axis itself. Every remaining basis unit
/// `e_c` pairs with `e_d = +-(e_a e_c)`. For compact axes the ordering is
/// normalized so the table sign is positive; for hyperbolic axes the cos slot
/// goes to the plus-signature coordinate (`w` or an `x_n`), which is the one
/// whose square must dominate the plane.
pub(crate) fn plane_specs(axis: Axis) -> [(usize, usize, f64); 4] {
    let a = axis.index();
    let table = &BasisProductTable::canonical().entries;
    let mut out = [(0usize, a, 1.0); 4];
    let mut filled = 1;
    let mut used = [false; DIM];
    used[0] = true;
    used[a] = true;
    for c in 1..DIM {
        if used[c] {
            continue;
        }
        let (sign, d) = table[a][c];
        used[c] = true;
        used[d] = true;
        let (cos_i, sin_i) = if axis.is_compact() {
            if sign > 0.0 {
                (c, d)
            } else {
                (d, c)
            }
        } else if (4..=6).contains(&c) {
            (c, d)
        } else {
            (d, c)
        };
        let orientation = table[a][cos_i].0;
        debug_assert_eq!(table[a][cos_i].1, sin_i);
        out[filled] = (cos_i, sin_i, orientation);
        filled += 1;
    }
    debug_assert_eq!(filled, 4);
    out
}

/// Decompose `s` into the four rotation planes of `axis`.
///
/// Compact axes succeed for any input (zero-magnitude planes get phase 0 by
/// convention). Hyperbolic axes require every plane radicand
/// `cos_coord^2 - sin_coord^2` to be strictly positive with a positive
/// leading coordinate; the first violated plane is reported.
pub fn decompose(s: &SplitOctonion, axis: Axis) -> Result<PlaneDecomposition, RotorError> {
    let c = s.coeffs();
    let mut planes = [PlaneEntry {
        cos_index: 0,
        sin_index: 0,
        orientation: 1.0,
        magnitude: 0.0,
        phase: 0.0,
    }; 4];
    for (slot, &(cos_i, sin_i, orientation)) in planes.iter_mut().zip(plane_specs(axis).iter()) {
        let u = c[cos_i];
        let v = orientation * c[sin_i];
        let (magnitude, phase) = if axis.is_compact() {
            let m = u.hypot(v);
            let mut phi = if m == 0.0 { 0.0 } else { v.atan2(u) };
            if phi == -std::f64::consts::PI {
                phi = std::f64::consts::PI;
            }
            (m, phi)
        } else {
            let radicand = u * u - v * v;
            let label = format!("{},{}", COEFF_NAMES[cos_i], COEFF_NAMES[sin_i]);
            if radicand <= 0.0 {
                return Err(RotorError::DomainViolation { plane: label, radicand });
            }
            if u <= 0.0 {
                return Err(RotorError::NegativeBranch { plane: label });
            }
            let m = radicand.sqrt();
            (m, (v / m).asinh())
        };
        *slot = PlaneEntry {
            cos_index: cos_i,
            sin_index: sin_i,
            orientation,
            magnitude,
            phase,
        };
    }
    Ok(PlaneDecomposition { axis, planes })
}
