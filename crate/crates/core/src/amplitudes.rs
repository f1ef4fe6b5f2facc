//! Transition amplitudes between spin-1/2 projection states on arbitrary axes.
//!
//! For an initial state with outcome `m` along `â = (θ, φ)` and a final state
//! with outcome `n` along `ĉ = (θ′, φ′)`, writing `e = e^{i(φ−φ′)}`,
//!
//! ```text
//! chi(+â; +ĉ) = cos θ/2 cos θ′/2 + e sin θ/2 sin θ′/2
//! chi(+â; −ĉ) = cos θ/2 sin θ′/2 − e sin θ/2 cos θ′/2
//! chi(−â; +ĉ) = sin θ/2 cos θ′/2 − e cos θ/2 sin θ′/2
//! chi(−â; −ĉ) = sin θ/2 sin θ′/2 + e cos θ/2 cos θ′/2
//! ```
//!
//! This phase convention is fixed: `chi(−â; −b̂)` with `b̂ = (0, π)` equals
//! `−e^{iφ} cos θ/2`. Every operator and eigenvector in [`crate::operators`]
//! is built from these amplitudes, so they share one convention.

use serde::{Deserialize, Serialize};

use crate::geometry::{cos_sq_half_angle, sin_sq_half_angle, Direction};
use crate::linalg2::{cis, Complex, Mat2, ONE, ZERO};

pub type Amplitude = Complex;

/// Spin projection outcome, `+1/2` (`Up`) or `−1/2` (`Down`) in units of ħ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Up,
    Down,
}

impl Outcome {
    pub const ALL: [Outcome; 2] = [Outcome::Up, Outcome::Down];

    /// 0 for `Up`, 1 for `Down`; the row/column index used by every matrix.
    pub fn index(self) -> usize {
        match self {
            Outcome::Up => 0,
            Outcome::Down => 1,
        }
    }

    pub fn from_index(index: usize) -> Self {
        if index == 0 {
            Outcome::Up
        } else {
            Outcome::Down
        }
    }

    /// Eigenvalue of the spin projection in units of ħ/2.
    pub fn sign(self) -> f64 {
        match self {
            Outcome::Up => 1.0,
            Outcome::Down => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Outcome::Up => Outcome::Down,
            Outcome::Down => Outcome::Up,
        }
    }
}

/// A definite projection outcome with respect to an axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinContext {
    pub outcome: Outcome,
    pub axis: Direction,
}

impl SpinContext {
    pub const fn new(outcome: Outcome, axis: Direction) -> Self {
        Self { outcome, axis }
    }

    pub const fn up(axis: Direction) -> Self {
        Self::new(Outcome::Up, axis)
    }

    pub const fn down(axis: Direction) -> Self {
        Self::new(Outcome::Down, axis)
    }
}

/// Amplitude for finding `to` given the system was prepared in `from`.
///
/// Bitwise-identical axes give exactly 1 or 0; anything else goes through the
/// closed forms.
pub fn chi(from: &SpinContext, to: &SpinContext) -> Amplitude {
    if from.axis.same_bits(&to.axis) {
        return if from.outcome == to.outcome { ONE } else { ZERO };
    }
    chi_closed_form(from, to)
}

/// The four closed forms without the equal-axes shortcut.
pub fn chi_closed_form(from: &SpinContext, to: &SpinContext) -> Amplitude {
    let (s, c) = (0.5 * from.axis.theta()).sin_cos();
    let (sp, cp) = (0.5 * to.axis.theta()).sin_cos();
    let e = cis(from.axis.phi() - to.axis.phi());
    match (from.outcome, to.outcome) {
        (Outcome::Up, Outcome::Up) => e * (s * sp) + c * cp,
        (Outcome::Up, Outcome::Down) => -e * (s * cp) + c * sp,
        (Outcome::Down, Outcome::Up) => -e * (c * sp) + s * cp,
        (Outcome::Down, Outcome::Down) => e * (c * cp) + s * sp,
    }
}

/// `|chi(from, to) − conj(chi(to, from))|`.
pub fn hermitian_pair_check(from: &SpinContext, to: &SpinContext) -> f64 {
    (chi(from, to) - chi(to, from).conj()).norm()
}

/// Expands `chi(from, to)` over both outcomes along `via_axis`.
pub fn compose(from: &SpinContext, via_axis: &Direction, to: &SpinContext) -> Amplitude {
    Outcome::ALL
        .iter()
        .map(|&m| {
            let mid = SpinContext::new(m, *via_axis);
            chi(from, &mid) * chi(&mid, to)
        })
        .sum()
}

pub fn probability(from: &SpinContext, to: &SpinContext) -> f64 {
    chi(from, to).norm_sqr()
}

/// Probability from the inter-axis angle: `cos²(Θ/2)` when the outcomes agree,
/// `sin²(Θ/2)` when they differ.
pub fn probability_from_angle(from: &SpinContext, to: &SpinContext) -> f64 {
    if from.outcome == to.outcome {
        cos_sq_half_angle(&from.axis, &to.axis)
    } else {
        sin_sq_half_angle(&from.axis, &to.axis)
    }
}

/// Probability in the expanded polar-angle form
/// `cos²(θ/2 − θ′/2) − sin θ sin θ′ sin²(φ/2 − φ′/2)` (and its complement).
pub fn probability_expanded(from: &SpinContext, to: &SpinContext) -> f64 {
    let (a, c) = (&from.axis, &to.axis);
    let half_dtheta = 0.5 * a.theta() - 0.5 * c.theta();
    let cross = a.theta().sin() * c.theta().sin() * (0.5 * a.phi() - 0.5 * c.phi()).sin().powi(2);
    if from.outcome == to.outcome {
        half_dtheta.cos().powi(2) - cross
    } else {
        half_dtheta.sin().powi(2) + cross
    }
}

/// Matrix whose `(i, n)` entry is `chi((m_i, a); (m_n, c))`.
pub fn amplitude_matrix(a: &Direction, c: &Direction) -> Mat2 {
    let entry = |i: Outcome, n: Outcome| chi(&SpinContext::new(i, *a), &SpinContext::new(n, *c));
    Mat2::new(
        entry(Outcome::Up, Outcome::Up),
        entry(Outcome::Up, Outcome::Down),
        entry(Outcome::Down, Outcome::Up),
        entry(Outcome::Down, Outcome::Down),
    )
}

/// Largest deviation of the row and column sums of `|entry|²` from 1.
pub fn stochastic_deviation(m: &Mat2) -> f64 {
    let p = m.rows().map(|row| row.map(|z| z.norm_sqr()));
    let rows = [p[0][0] + p[0][1], p[1][0] + p[1][1]];
    let cols = [p[0][0] + p[1][0], p[0][1] + p[1][1]];
    rows.iter()
        .chain(cols.iter())
        .map(|s| (s - 1.0).abs())
        .fold(0.0, f64::max)
}
