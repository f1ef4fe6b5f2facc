//! Element-by-element closed forms for the generalized operators.
//!
//! These are transcribed term by term, not derived from the eigenvector
//! construction in the parent module, so comparing the two catches slips in
//! either. Angles follow the parent convention: `(θ, φ)` is the basis axis and
//! `(θ′, φ′)` the measured axis. `D = φ′ − φ`.

use crate::geometry::Direction;
use crate::linalg2::{cis, Complex, Mat2, Vec2};

struct Trig {
    st: f64,
    ct: f64,
    stp: f64,
    ctp: f64,
    /// cos²(θ/2), sin²(θ/2), cos²(θ′/2), sin²(θ′/2)
    c2: f64,
    s2: f64,
    cp2: f64,
    sp2: f64,
    /// cos D and sin D with D = φ′ − φ
    cd: f64,
    sd: f64,
}

impl Trig {
    fn new(basis: &Direction, measure: &Direction) -> Self {
        let (st, ct) = basis.theta().sin_cos();
        let (stp, ctp) = measure.theta().sin_cos();
        let (sh, ch) = (0.5 * basis.theta()).sin_cos();
        let (shp, chp) = (0.5 * measure.theta()).sin_cos();
        let (sd, cd) = (measure.phi() - basis.phi()).sin_cos();
        Self {
            st,
            ct,
            stp,
            ctp,
            c2: ch * ch,
            s2: sh * sh,
            cp2: chp * chp,
            sp2: shp * shp,
            cd,
            sd,
        }
    }
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// σ_ĉ with diagonal `cos θ cos θ′ + sin θ sin θ′ cos(φ−φ′)` and off-diagonal
/// `sin θ cos θ′ − sin θ′ [cos θ cos(φ−φ′) ± i sin(φ−φ′)]`.
pub fn sigma_c(basis: &Direction, measure: &Direction) -> Mat2 {
    let t = Trig::new(basis, measure);
    // cos(φ−φ′) = cos D, sin(φ−φ′) = −sin D
    let diag = t.ct * t.ctp + t.st * t.stp * t.cd;
    let off_re = t.st * t.ctp - t.stp * t.ct * t.cd;
    Mat2::new(
        c(diag, 0.0),
        c(off_re, t.stp * t.sd),
        c(off_re, -t.stp * t.sd),
        c(-diag, 0.0),
    )
}

/// Raising operator σ₊, element by element.
pub fn sigma_plus(basis: &Direction, measure: &Direction) -> Mat2 {
    let t = Trig::new(basis, measure);
    let a11 = c(-t.st * t.ctp * t.cd + t.ct * t.stp, t.st * t.sd);
    let a12 = c(
        2.0 * (t.c2 * t.cp2 + t.sp2 * t.s2) * t.cd + t.st * t.stp,
        2.0 * (t.s2 * t.sp2 - t.cp2 * t.c2) * t.sd,
    );
    let a21 = c(
        -2.0 * (t.s2 * t.cp2 + t.sp2 * t.c2) * t.cd + t.st * t.stp,
        -2.0 * (t.sp2 * t.c2 - t.s2 * t.cp2) * t.sd,
    );
    let a22 = c(t.st * t.ctp * t.cd - t.ct * t.stp, -t.st * t.sd);
    Mat2::new(a11, a12, a21, a22)
}

/// Lowering operator σ₋, element by element.
pub fn sigma_minus(basis: &Direction, measure: &Direction) -> Mat2 {
    let t = Trig::new(basis, measure);
    let a11 = c(-t.st * t.ctp * t.cd + t.ct * t.stp, -t.st * t.sd);
    let a12 = c(
        -2.0 * (t.c2 * t.sp2 + t.cp2 * t.s2) * t.cd + t.st * t.stp,
        -2.0 * (t.cp2 * t.s2 - t.c2 * t.sp2) * t.sd,
    );
    let a21 = c(
        2.0 * (t.s2 * t.sp2 + t.cp2 * t.c2) * t.cd + t.st * t.stp,
        2.0 * (t.c2 * t.cp2 - t.sp2 * t.s2) * t.sd,
    );
    let a22 = c(t.st * t.ctp * t.cd - t.ct * t.stp, t.st * t.sd);
    Mat2::new(a11, a12, a21, a22)
}

pub fn sigma_x(basis: &Direction, measure: &Direction) -> Mat2 {
    let t = Trig::new(basis, measure);
    let diag = -t.st * t.ctp * t.cd + t.stp * t.ct;
    let off_re = t.ct * t.ctp * t.cd + t.st * t.stp;
    Mat2::new(
        c(diag, 0.0),
        c(off_re, -t.ctp * t.sd),
        c(off_re, t.ctp * t.sd),
        c(-diag, 0.0),
    )
}

pub fn sigma_y(basis: &Direction, measure: &Direction) -> Mat2 {
    let t = Trig::new(basis, measure);
    Mat2::new(
        c(t.st * t.sd, 0.0),
        c(-t.ct * t.sd, -t.cd),
        c(-t.ct * t.sd, t.cd),
        c(-t.st * t.sd, 0.0),
    )
}

/// Reduced forms with the basis axis at the pole `θ = 0, φ = π`, written in
/// the measured angles `(θ′, φ′)`.
pub mod pole_limit {
    use super::*;

    fn parts(measure: &Direction) -> (f64, f64, f64, f64, Complex) {
        let (s, c) = measure.theta().sin_cos();
        let (sh, ch) = (0.5 * measure.theta()).sin_cos();
        (s, c, sh, ch, cis(measure.phi()))
    }

    /// `[[cos θ′, sin θ′ e^{−iφ′}], [sin θ′ e^{iφ′}, −cos θ′]]`.
    pub fn sigma_c(measure: &Direction) -> Mat2 {
        let (s, c, _, _, e) = parts(measure);
        Mat2::new(Complex::new(c, 0.0), e.conj() * s, e * s, Complex::new(-c, 0.0))
    }

    /// `(cos θ′/2, −e^{iφ′} sin θ′/2)` and `(sin θ′/2, e^{iφ′} cos θ′/2)`.
    ///
    /// These match the eigenvectors for a basis at `θ = 0, φ = 0`, not `φ = π`.
    /// At `φ = π` the second components have the opposite sign.
    pub fn eigenvectors(measure: &Direction) -> (Vec2, Vec2) {
        let (_, _, sh, ch, e) = parts(measure);
        (
            Vec2::new(Complex::new(ch, 0.0), -e * sh),
            Vec2::new(Complex::new(sh, 0.0), e * ch),
        )
    }

    /// `[[sin θ′, −2cos²(θ′/2) e^{−iφ′}], [2sin²(θ′/2) e^{iφ′}, −sin θ′]]`.
    pub fn sigma_plus(measure: &Direction) -> Mat2 {
        let (s, _, sh, ch, e) = parts(measure);
        Mat2::new(
            Complex::new(s, 0.0),
            -e.conj() * (2.0 * ch * ch),
            e * (2.0 * sh * sh),
            Complex::new(-s, 0.0),
        )
    }

    /// `[[sin θ′, 2sin²(θ′/2) e^{−iφ′}], [−2cos²(θ′/2) e^{iφ′}, −sin θ′]]`.
    pub fn sigma_minus(measure: &Direction) -> Mat2 {
        let (s, _, sh, ch, e) = parts(measure);
        Mat2::new(
            Complex::new(s, 0.0),
            e.conj() * (2.0 * sh * sh),
            -e * (2.0 * ch * ch),
            Complex::new(-s, 0.0),
        )
    }

    /// `[[sin θ′, −e^{−iφ′} cos θ′], [−e^{iφ′} cos θ′, −sin θ′]]`.
    pub fn sigma_x(measure: &Direction) -> Mat2 {
        let (s, c, _, _, e) = parts(measure);
        Mat2::new(Complex::new(s, 0.0), -e.conj() * c, -e * c, Complex::new(-s, 0.0))
    }

    /// `[[0, i e^{−iφ′}], [−i e^{iφ′}, 0]]`.
    pub fn sigma_y(measure: &Direction) -> Mat2 {
        let (_, _, _, _, e) = parts(measure);
        let i = Complex::new(0.0, 1.0);
        Mat2::new(Complex::new(0.0, 0.0), i * e.conj(), -i * e, Complex::new(0.0, 0.0))
    }
}
