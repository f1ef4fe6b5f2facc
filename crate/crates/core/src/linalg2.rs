//! Fixed-size complex linear algebra: scalars, 2-vectors and 2×2 matrices.
//!
//! Everything here is `Copy` and allocation-free. The only non-trivial routine
//! is [`eig_hermitian`], a closed-form eigendecomposition for Hermitian 2×2
//! matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::LandeError;
use crate::tolerance::default_tolerance;

pub type Complex = Complex64;

/// Eigenvalue gap below which a Hermitian matrix is treated as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-10;

/// Magnitude below which a component is ignored when fixing eigenvector phase.
pub const PHASE_FLOOR: f64 = 1e-12;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// `e^{i angle}`.
#[inline]
pub fn cis(angle: f64) -> Complex {
    let (s, c) = angle.sin_cos();
    Complex::new(c, s)
}

/// Column vector with two complex components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub c0: Complex,
    pub c1: Complex,
}

impl Vec2 {
    pub const fn new(c0: Complex, c1: Complex) -> Self {
        Self { c0, c1 }
    }

    pub const fn real(c0: f64, c1: f64) -> Self {
        Self::new(Complex::new(c0, 0.0), Complex::new(c1, 0.0))
    }

    /// First canonical basis vector (1, 0).
    pub const fn e0() -> Self {
        Self::real(1.0, 0.0)
    }

    /// Second canonical basis vector (0, 1).
    pub const fn e1() -> Self {
        Self::real(0.0, 1.0)
    }

    pub fn to_array(self) -> [Complex; 2] {
        [self.c0, self.c1]
    }

    /// Hermitian inner product `self† · other` (conjugate-linear in `self`).
    pub fn inner(self, other: Vec2) -> Complex {
        self.c0.conj() * other.c0 + self.c1.conj() * other.c1
    }

    pub fn norm_sqr(self) -> f64 {
        self.c0.norm_sqr() + self.c1.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn conj(self) -> Self {
        Self::new(self.c0.conj(), self.c1.conj())
    }

    pub fn scale(self, k: Complex) -> Self {
        Self::new(self.c0 * k, self.c1 * k)
    }

    /// Largest component magnitude.
    pub fn max_abs(self) -> f64 {
        self.c0.norm().max(self.c1.norm())
    }

    /// Outer product `self · other†`.
    pub fn outer(self, other: Vec2) -> Mat2 {
        Mat2::new(
            self.c0 * other.c0.conj(),
            self.c0 * other.c1.conj(),
            self.c1 * other.c0.conj(),
            self.c1 * other.c1.conj(),
        )
    }

    pub fn is_finite(self) -> bool {
        self.c0.is_finite() && self.c1.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.c0 + rhs.c0, self.c1 + rhs.c1)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.c0 - rhs.c0, self.c1 - rhs.c1)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.c0, -self.c1)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, k: f64) -> Vec2 {
        Vec2::new(self.c0 * k, self.c1 * k)
    }
}

impl Mul<Complex> for Vec2 {
    type Output = Vec2;
    fn mul(self, k: Complex) -> Vec2 {
        self.scale(k)
    }
}

/// Row-major 2×2 complex matrix `[[a11, a12], [a21, a22]]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat2 {
    pub a11: Complex,
    pub a12: Complex,
    pub a21: Complex,
    pub a22: Complex,
}

impl Mat2 {
    pub const fn new(a11: Complex, a12: Complex, a21: Complex, a22: Complex) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub const fn real(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Self::new(
            Complex::new(a11, 0.0),
            Complex::new(a12, 0.0),
            Complex::new(a21, 0.0),
            Complex::new(a22, 0.0),
        )
    }

    pub const fn zero() -> Self {
        Self::real(0.0, 0.0, 0.0, 0.0)
    }

    pub const fn identity() -> Self {
        Self::real(1.0, 0.0, 0.0, 1.0)
    }

    pub const fn diag(d1: f64, d2: f64) -> Self {
        Self::real(d1, 0.0, 0.0, d2)
    }

    pub fn from_rows(rows: [[Complex; 2]; 2]) -> Self {
        Self::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn rows(&self) -> [[Complex; 2]; 2] {
        [[self.a11, self.a12], [self.a21, self.a22]]
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.rows()[row][col]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::new(self.a11.conj(), self.a21.conj(), self.a12.conj(), self.a22.conj())
    }

    pub fn trace(&self) -> Complex {
        self.a11 + self.a22
    }

    pub fn det(&self) -> Complex {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn scale(&self, k: Complex) -> Self {
        Self::new(self.a11 * k, self.a12 * k, self.a21 * k, self.a22 * k)
    }

    /// Largest entry magnitude (the entrywise ∞-norm).
    pub fn max_abs(&self) -> f64 {
        self.a11
            .norm()
            .max(self.a12.norm())
            .max(self.a21.norm())
            .max(self.a22.norm())
    }

    /// `max |m - m†|` over entries.
    pub fn hermitian_deviation(&self) -> f64 {
        (*self - self.dagger()).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.a11.is_finite() && self.a12.is_finite() && self.a21.is_finite() && self.a22.is_finite()
    }

    pub fn apply(&self, v: Vec2) -> Vec2 {
        Vec2::new(
            self.a11 * v.c0 + self.a12 * v.c1,
            self.a21 * v.c0 + self.a22 * v.c1,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 + rhs.a11,
            self.a12 + rhs.a12,
            self.a21 + rhs.a21,
            self.a22 + rhs.a22,
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 - rhs.a11,
            self.a12 - rhs.a12,
            self.a21 - rhs.a21,
            self.a22 - rhs.a22,
        )
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-self.a11, -self.a12, -self.a21, -self.a22)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        mat_mul(&self, &rhs)
    }
}

impl Mul<Vec2> for Mat2 {
    type Output = Vec2;
    fn mul(self, v: Vec2) -> Vec2 {
        self.apply(v)
    }
}

impl Mul<Complex> for Mat2 {
    type Output = Mat2;
    fn mul(self, k: Complex) -> Mat2 {
        self.scale(k)
    }
}

impl Mul<f64> for Mat2 {
    type Output = Mat2;
    fn mul(self, k: f64) -> Mat2 {
        self.scale(Complex::new(k, 0.0))
    }
}

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    Mat2::new(
        a.a11 * b.a11 + a.a12 * b.a21,
        a.a11 * b.a12 + a.a12 * b.a22,
        a.a21 * b.a11 + a.a22 * b.a21,
        a.a21 * b.a12 + a.a22 * b.a22,
    )
}

/// `ab - ba`.
pub fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    mat_mul(a, b) - mat_mul(b, a)
}

/// `ab + ba`.
pub fn anticommutator(a: &Mat2, b: &Mat2) -> Mat2 {
    mat_mul(a, b) + mat_mul(b, a)
}

/// An eigenvalue with its unit-norm eigenvector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec2,
}

impl EigenPair {
    /// `‖m v − λ v‖₂`.
    pub fn residual(&self, m: &Mat2) -> f64 {
        (m.apply(self.vector) - self.vector * self.value).norm()
    }
}

/// Rotates `v` so its first component with magnitude above [`PHASE_FLOOR`]
/// is real and positive.
pub fn fix_phase(v: Vec2) -> Vec2 {
    let pivot = if v.c0.norm() > PHASE_FLOOR {
        v.c0
    } else if v.c1.norm() > PHASE_FLOOR {
        v.c1
    } else {
        return v;
    };
    v.scale(pivot.conj() / pivot.norm())
}

/// Closed-form eigendecomposition of a Hermitian 2×2 matrix using the
/// process-wide tolerance for the Hermiticity check.
pub fn eig_hermitian(m: &Mat2) -> Result<(EigenPair, EigenPair), LandeError> {
    eig_hermitian_with_tol(m, default_tolerance())
}

/// Eigenvalues come back sorted descending. Eigenvectors are orthonormal and
/// phase-fixed by [`fix_phase`]. When the eigenvalues differ by less than
/// [`DEGENERACY_GAP`] the canonical basis is returned.
pub fn eig_hermitian_with_tol(m: &Mat2, tol: f64) -> Result<(EigenPair, EigenPair), LandeError> {
    // f64::max drops NaN, so non-finite input has to be caught explicitly.
    let deviation = if m.is_finite() {
        m.hermitian_deviation()
    } else {
        f64::INFINITY
    };
    if deviation > tol {
        return Err(LandeError::NonHermitian {
            deviation,
            tolerance: tol,
        });
    }

    // Work with the Hermitian part so round-off in the input cannot leak
    // complex diagonal terms into the result.
    let a = m.a11.re;
    let d = m.a22.re;
    let b = (m.a12 + m.a21.conj()) * 0.5;

    let mean = 0.5 * (a + d);
    let half_gap = 0.5 * (a - d);
    let radius = half_gap.hypot(b.norm());
    let upper = mean + radius;
    let lower = mean - radius;

    if upper - lower < DEGENERACY_GAP {
        return Ok((
            EigenPair { value: upper, vector: Vec2::e0() },
            EigenPair { value: lower, vector: Vec2::e1() },
        ));
    }

    // (m - λ) v = 0 has two candidate null vectors, one per row; take whichever
    // is better conditioned.
    let from_row1 = Vec2::new(b, Complex::new(upper - a, 0.0));
    let from_row2 = Vec2::new(Complex::new(upper - d, 0.0), b.conj());
    let raw = if from_row1.norm_sqr() >= from_row2.norm_sqr() {
        from_row1
    } else {
        from_row2
    };
    let top = fix_phase(raw * (1.0 / raw.norm()));
    let bottom = fix_phase(Vec2::new(-top.c1.conj(), top.c0.conj()));

    Ok((
        EigenPair { value: upper, vector: top },
        EigenPair { value: lower, vector: bottom },
    ))
}
