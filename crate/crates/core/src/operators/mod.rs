//! Spin operators expressed in the eigenbasis of an arbitrary reference axis.
//!
//! Every operator here takes two axes. `basis` (b̂) supplies the intermediate
//! states whose amplitudes form the matrix rows and columns. `measure` (ĉ) is
//! the axis whose spin component is being represented. With `basis == measure`
//! the Pauli matrices come back.
//!
//! Spin is measured in units of ħ/2 throughout. That is where the factor 2
//! in the ladder operators and the eigenvalue 3 of σ² come from.
//!
//! The ladder operators are built as outer products of the σ_ĉ eigenvectors:
//! σ₊ = 2 ξ₊ξ₋† and σ₋ = 2 ξ₋ξ₊†. So σ₊ξ₋ = 2ξ₊ and σ₋ξ₊ = 2ξ₋, and each
//! operator annihilates the other eigenvector. Expanded element-by-element
//! formulas for the same operators live in [`printed`] as an independent
//! cross-check.

pub mod printed;

use serde::{Deserialize, Serialize};

use crate::amplitudes::{chi, Outcome, SpinContext};
use crate::error::LandeError;
use crate::geometry::Direction;
use crate::linalg2::{cis, Complex, Mat2, Vec2, I};

/// An observable taking value `r1` when spin is up along `measure` and `r2`
/// when down, represented in the eigenbasis of `basis`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObservableSpec {
    pub r1: f64,
    pub r2: f64,
    pub basis: Direction,
    pub measure: Direction,
}

impl ObservableSpec {
    pub fn new(r1: f64, r2: f64, basis: Direction, measure: Direction) -> Result<Self, LandeError> {
        if !r1.is_finite() || !r2.is_finite() {
            return Err(LandeError::InvalidObservable(format!(
                "eigenvalues must be finite (r1={r1}, r2={r2})"
            )));
        }
        Ok(Self { r1, r2, basis, measure })
    }

    pub fn value(&self, outcome: Outcome) -> f64 {
        match outcome {
            Outcome::Up => self.r1,
            Outcome::Down => self.r2,
        }
    }
}

/// Closed-form matrix of the observable. With `(θ, φ)` for the basis axis,
/// `(θ′, φ′)` for the measured axis and `Δ = φ − φ′`:
///
/// ```text
/// R11 = P r1 + Q r2        R12 = h (sin θ cos θ′ − sin θ′ [cos θ cos Δ + i sin Δ])
/// R22 = Q r1 + P r2        R21 = h (sin θ cos θ′ − sin θ′ [cos θ cos Δ − i sin Δ])
/// ```
///
/// where `P = cos²((θ−θ′)/2) − sin θ sin θ′ sin²(Δ/2)`, `Q = 1 − P` in its
/// expanded form, and `h = (r1 − r2)/2`.
pub fn observable_matrix(spec: &ObservableSpec) -> Mat2 {
    let ObservableSpec { r1, r2, basis, measure } = *spec;
    if basis.same_bits(&measure) {
        return Mat2::diag(r1, r2);
    }
    let (st, ct) = basis.theta().sin_cos();
    let (stp, ctp) = measure.theta().sin_cos();
    let dphi = basis.phi() - measure.phi();
    let (sd, cd) = dphi.sin_cos();
    let half_dtheta = 0.5 * (basis.theta() - measure.theta());
    let cross = st * stp * (0.5 * dphi).sin().powi(2);
    let aligned = half_dtheta.cos().powi(2) - cross;
    let crossed = half_dtheta.sin().powi(2) + cross;
    let h = 0.5 * (r1 - r2);
    let re = st * ctp - stp * ct * cd;
    let im = stp * sd;
    Mat2::new(
        Complex::new(aligned * r1 + crossed * r2, 0.0),
        Complex::new(h * re, -h * im),
        Complex::new(h * re, h * im),
        Complex::new(crossed * r1 + aligned * r2, 0.0),
    )
}

/// Observable matrix from its defining sum
/// `R_jj′ = Σₙ conj(chi(j b̂; n ĉ)) chi(j′ b̂; n ĉ) rₙ`.
pub fn observable_matrix_by_summation(spec: &ObservableSpec) -> Mat2 {
    let element = |j: Outcome, jp: Outcome| -> Complex {
        Outcome::ALL
            .iter()
            .map(|&n| {
                let target = SpinContext::new(n, spec.measure);
                chi(&SpinContext::new(j, spec.basis), &target).conj()
                    * chi(&SpinContext::new(jp, spec.basis), &target)
                    * spec.value(n)
            })
            .sum()
    };
    Mat2::new(
        element(Outcome::Up, Outcome::Up),
        element(Outcome::Up, Outcome::Down),
        element(Outcome::Down, Outcome::Up),
        element(Outcome::Down, Outcome::Down),
    )
}

/// Spin component along `measure` in the `basis` eigenbasis (r1 = +1, r2 = −1).
pub fn sigma_c(basis: &Direction, measure: &Direction) -> Mat2 {
    observable_matrix(&ObservableSpec {
        r1: 1.0,
        r2: -1.0,
        basis: *basis,
        measure: *measure,
    })
}

/// Eigenvectors `(ξ₊, ξ₋)` of [`sigma_c`] for eigenvalues +1 and −1.
///
/// Component `j` of `ξ±` is `chi((±, measure); (m_j, basis))`: the state is
/// prepared along the measured axis, so a repeat measurement must return its
/// eigenvalue.
pub fn sigma_c_eigenvectors(basis: &Direction, measure: &Direction) -> (Vec2, Vec2) {
    let column = |m: Outcome| {
        let from = SpinContext::new(m, *measure);
        Vec2::new(
            chi(&from, &SpinContext::up(*basis)),
            chi(&from, &SpinContext::down(*basis)),
        )
    };
    (column(Outcome::Up), column(Outcome::Down))
}

/// `(σ₊, σ₋)` with `σ₊ = 2 ξ₊ξ₋†` and `σ₋ = 2 ξ₋ξ₊† = σ₊†`.
pub fn ladder_operators(basis: &Direction, measure: &Direction) -> (Mat2, Mat2) {
    let (up, down) = sigma_c_eigenvectors(basis, measure);
    (up.outer(down) * 2.0, down.outer(up) * 2.0)
}

/// `(σ_x, σ_y)` with `σ_x = (σ₊ + σ₋)/2` and `σ_y = −i(σ₊ − σ₋)/2`.
pub fn sigma_xy(basis: &Direction, measure: &Direction) -> (Mat2, Mat2) {
    let (plus, minus) = ladder_operators(basis, measure);
    let x = (plus + minus) * 0.5;
    let y = (plus - minus) * (-I * 0.5);
    (x, y)
}

/// σ² = 3·I, independent of any axis.
pub fn sigma_squared() -> Mat2 {
    Mat2::diag(3.0, 3.0)
}

/// `σ·â` in the standard z basis: `[[cos θ, sin θ e^{−iφ}], [sin θ e^{iφ}, −cos θ]]`.
pub fn sigma_dot_a(a: &Direction) -> Mat2 {
    let (st, ct) = a.theta().sin_cos();
    Mat2::new(
        Complex::new(ct, 0.0),
        cis(-a.phi()) * st,
        cis(a.phi()) * st,
        Complex::new(-ct, 0.0),
    )
}

/// Eigenvectors of [`sigma_dot_a`]: `(cos θ/2, e^{iφ} sin θ/2)` for +1 and
/// `(sin θ/2, −e^{iφ} cos θ/2)` for −1.
pub fn sigma_dot_a_eigenvectors(a: &Direction) -> (Vec2, Vec2) {
    let (s, c) = (0.5 * a.theta()).sin_cos();
    let e = cis(a.phi());
    (
        Vec2::new(Complex::new(c, 0.0), e * s),
        Vec2::new(Complex::new(s, 0.0), -e * c),
    )
}

/// Pauli matrices in the order `(σ_x, σ_y, σ_z)`.
pub fn pauli() -> (Mat2, Mat2, Mat2) {
    (
        Mat2::real(0.0, 1.0, 1.0, 0.0),
        Mat2::new(Complex::new(0.0, 0.0), -I, I, Complex::new(0.0, 0.0)),
        Mat2::diag(1.0, -1.0),
    )
}

/// The generalized spin triple `(σ_x, σ_y, σ_ĉ)` for one pair of axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinTriple {
    pub x: Mat2,
    pub y: Mat2,
    pub c: Mat2,
}

pub fn spin_triple(basis: &Direction, measure: &Direction) -> SpinTriple {
    let (x, y) = sigma_xy(basis, measure);
    SpinTriple {
        x,
        y,
        c: sigma_c(basis, measure),
    }
}
