//! Quantization axes given by polar angles.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::LandeError;

/// Slack allowed on `theta` before it is rejected rather than clamped.
const THETA_SLACK: f64 = 1e-9;

/// A unit vector `(sin θ cos φ, sin θ sin φ, cos θ)` stored as its polar
/// angles in radians, with `theta ∈ [0, π]` and `phi ∈ [0, 2π)`.
///
/// At the poles `phi` is kept as given. The amplitude formulas depend on it
/// even though the Cartesian vector does not.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Result<Self, LandeError> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(LandeError::InvalidDirection(format!(
                "angles must be finite (theta={theta}, phi={phi})"
            )));
        }
        if !(-THETA_SLACK..=PI + THETA_SLACK).contains(&theta) {
            return Err(LandeError::InvalidDirection(format!(
                "theta={theta} outside [0, pi]"
            )));
        }
        Ok(Self {
            theta: theta.clamp(0.0, PI),
            phi: wrap_phi(phi),
        })
    }

    pub fn from_degrees(theta_deg: f64, phi_deg: f64) -> Result<Self, LandeError> {
        Self::new(theta_deg.to_radians(), phi_deg.to_radians())
    }

    /// The `+z` pole with `phi = 0`.
    pub const fn north() -> Self {
        Self { theta: 0.0, phi: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Bitwise equality of both stored angles.
    pub fn same_bits(&self, other: &Direction) -> bool {
        self.theta.to_bits() == other.theta.to_bits() && self.phi.to_bits() == other.phi.to_bits()
    }

    /// Builds a direction from two numbers in `[0, 1)`, uniformly over the sphere.
    pub fn from_unit_samples(u: f64, v: f64) -> Self {
        let theta = (1.0 - 2.0 * u).clamp(-1.0, 1.0).acos();
        Self {
            theta,
            phi: wrap_phi(TAU * v),
        }
    }
}

fn wrap_phi(phi: f64) -> f64 {
    let wrapped = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs.
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

pub fn to_cartesian(d: &Direction) -> [f64; 3] {
    let (st, ct) = d.theta.sin_cos();
    let (sp, cp) = d.phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// Cosine of the angle between two axes, via the polar-angle form
/// `cos(θ−θ′) − 2 sin θ sin θ′ sin²((φ−φ′)/2)`.
pub fn cos_angle_between(a: &Direction, c: &Direction) -> f64 {
    let half_dphi = 0.5 * (a.phi - c.phi);
    (a.theta - c.theta).cos() - 2.0 * a.theta.sin() * c.theta.sin() * half_dphi.sin().powi(2)
}

/// `cos²(Θ/2) = cos²((θ−θ′)/2) − sin θ sin θ′ sin²((φ−φ′)/2)`.
pub fn cos_sq_half_angle(a: &Direction, c: &Direction) -> f64 {
    let half_dtheta = 0.5 * (a.theta - c.theta);
    let half_dphi = 0.5 * (a.phi - c.phi);
    (half_dtheta.cos().powi(2) - a.theta.sin() * c.theta.sin() * half_dphi.sin().powi(2))
        .clamp(0.0, 1.0)
}

/// `sin²(Θ/2) = sin²((θ−θ′)/2) + sin θ sin θ′ sin²((φ−φ′)/2)`.
pub fn sin_sq_half_angle(a: &Direction, c: &Direction) -> f64 {
    let half_dtheta = 0.5 * (a.theta - c.theta);
    let half_dphi = 0.5 * (a.phi - c.phi);
    (half_dtheta.sin().powi(2) + a.theta.sin() * c.theta.sin() * half_dphi.sin().powi(2))
        .clamp(0.0, 1.0)
}

/// The angle Θ ∈ [0, π] between two axes.
pub fn angle_between(a: &Direction, c: &Direction) -> f64 {
    // arccos loses precision near 0 and π; the half-angle route does not.
    let s = sin_sq_half_angle(a, c).sqrt();
    let k = cos_sq_half_angle(a, c).sqrt();
    2.0 * s.atan2(k)
}
