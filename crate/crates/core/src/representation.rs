//! Matrix mechanics for a single measurement: the state vector, the operator
//! and the expectation value, for each choice of reference (basis) axis.
//!
//! A measurement starts in `initial` (an outcome along â), is expanded over
//! the eigenstates of a basis axis b̂, and measures an observable whose
//! eigenstates lie along ĉ. The five [`CaseSelector`] variants pin b̂ and ĉ
//! relative to â. The general case and the two basis-alignment cases describe
//! the same physics. The repeat-measurement cases (ĉ = â) describe a second
//! measurement along the preparation axis.

use serde::{Deserialize, Serialize};

use crate::amplitudes::{chi, probability, Outcome, SpinContext};
use crate::error::LandeError;
use crate::geometry::Direction;
use crate::linalg2::{Complex, Mat2, Vec2};
use crate::operators::{observable_matrix, ObservableSpec};
use crate::tolerance::default_tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseSelector {
    /// b̂ and ĉ both free.
    General,
    /// b̂ = â: the state vector is a canonical basis vector.
    BasisEqualsInitial,
    /// b̂ = ĉ: the operator is diagonal.
    BasisEqualsFinal,
    /// ĉ = â: a repeat measurement.
    FinalEqualsInitial,
    /// b̂ = ĉ = â.
    AllEqual,
}

impl CaseSelector {
    pub const ALL: [CaseSelector; 5] = [
        CaseSelector::General,
        CaseSelector::BasisEqualsInitial,
        CaseSelector::BasisEqualsFinal,
        CaseSelector::FinalEqualsInitial,
        CaseSelector::AllEqual,
    ];

    /// Classifies three axes by exact (bitwise) equality.
    pub fn infer(initial: &Direction, basis: &Direction, final_axis: &Direction) -> Self {
        let b_a = basis.same_bits(initial);
        let c_a = final_axis.same_bits(initial);
        let b_c = basis.same_bits(final_axis);
        match (b_a, c_a, b_c) {
            (true, true, _) => CaseSelector::AllEqual,
            (_, true, _) => CaseSelector::FinalEqualsInitial,
            (true, _, _) => CaseSelector::BasisEqualsInitial,
            (_, _, true) => CaseSelector::BasisEqualsFinal,
            _ => CaseSelector::General,
        }
    }
}

/// Observable eigenvalues: `r1` for spin up along ĉ, `r2` for spin down.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalues {
    pub r1: f64,
    pub r2: f64,
}

impl Eigenvalues {
    pub fn value(&self, outcome: Outcome) -> f64 {
        match outcome {
            Outcome::Up => self.r1,
            Outcome::Down => self.r2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSetup {
    pub case: CaseSelector,
    pub initial: SpinContext,
    pub basis: Direction,
    pub final_axis: Direction,
    pub observable: Eigenvalues,
}

impl MeasurementSetup {
    /// Builds a setup for `case`. Axes the case ties to the initial or final
    /// axis are overwritten with it, so the passed-in value for a tied axis is
    /// ignored.
    pub fn for_case(
        case: CaseSelector,
        initial: SpinContext,
        basis: Direction,
        final_axis: Direction,
        observable: Eigenvalues,
    ) -> Result<Self, LandeError> {
        if !observable.r1.is_finite() || !observable.r2.is_finite() {
            return Err(LandeError::InvalidObservable(format!(
                "eigenvalues must be finite (r1={}, r2={})",
                observable.r1, observable.r2
            )));
        }
        let a = initial.axis;
        let (basis, final_axis) = match case {
            CaseSelector::General => (basis, final_axis),
            CaseSelector::BasisEqualsInitial => (a, final_axis),
            CaseSelector::BasisEqualsFinal => (final_axis, final_axis),
            CaseSelector::FinalEqualsInitial => (basis, a),
            CaseSelector::AllEqual => (a, a),
        };
        Ok(Self {
            case,
            initial,
            basis,
            final_axis,
            observable,
        })
    }

    /// Builds a setup and classifies it with [`CaseSelector::infer`].
    pub fn inferred(
        initial: SpinContext,
        basis: Direction,
        final_axis: Direction,
        observable: Eigenvalues,
    ) -> Result<Self, LandeError> {
        let case = CaseSelector::infer(&initial.axis, &basis, &final_axis);
        Self::for_case(case, initial, basis, final_axis, observable)
    }

    pub fn observable_spec(&self) -> ObservableSpec {
        ObservableSpec {
            r1: self.observable.r1,
            r2: self.observable.r2,
            basis: self.basis,
            measure: self.final_axis,
        }
    }
}

/// `(chi(initial; +b̂), chi(initial; −b̂))`. Does not depend on the final axis.
pub fn state_vector(setup: &MeasurementSetup) -> Vec2 {
    Vec2::new(
        chi(&setup.initial, &SpinContext::up(setup.basis)),
        chi(&setup.initial, &SpinContext::down(setup.basis)),
    )
}

pub fn operator_matrix(setup: &MeasurementSetup) -> Mat2 {
    observable_matrix(&setup.observable_spec())
}

/// Born-rule sum `Σₙ |chi(initial; n ĉ)|² rₙ`.
pub fn expectation_direct(setup: &MeasurementSetup) -> f64 {
    Outcome::ALL
        .iter()
        .map(|&n| {
            probability(&setup.initial, &SpinContext::new(n, setup.final_axis))
                * setup.observable.value(n)
        })
        .sum()
}

/// `ψ† R ψ` as a complex number. The imaginary part is round-off.
pub fn expectation_matrix_complex(setup: &MeasurementSetup) -> Complex {
    let psi = state_vector(setup);
    psi.inner(operator_matrix(setup) * psi)
}

pub fn expectation_matrix(setup: &MeasurementSetup) -> f64 {
    expectation_matrix_complex(setup).re
}

/// Outcome of checking that a repeat-measurement state vector is an
/// eigenvector of the observable matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenConsistency {
    pub state: Vec2Parts,
    pub eigenvalue: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// A [`Vec2`] flattened for serialization as `[[re, im], [re, im]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec2Parts(pub [[f64; 2]; 2]);

impl From<Vec2> for Vec2Parts {
    fn from(v: Vec2) -> Self {
        Vec2Parts([[v.c0.re, v.c0.im], [v.c1.re, v.c1.im]])
    }
}

/// For ĉ = â, checks `R ψ = r ψ` with `r` the eigenvalue of the initial
/// outcome. Returns [`LandeError::CaseMismatch`] when ĉ ≠ â.
pub fn eigen_consistency_report(setup: &MeasurementSetup) -> Result<EigenConsistency, LandeError> {
    if !setup.final_axis.same_bits(&setup.initial.axis) {
        return Err(LandeError::CaseMismatch(format!(
            "eigenvector check needs final axis == initial axis (case {:?})",
            setup.case
        )));
    }
    let psi = state_vector(setup);
    let eigenvalue = setup.observable.value(setup.initial.outcome);
    let residual = (operator_matrix(setup) * psi - psi * eigenvalue).norm();
    let tolerance = default_tolerance();
    Ok(EigenConsistency {
        state: psi.into(),
        eigenvalue,
        residual,
        tolerance,
        pass: residual <= tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir(theta: f64, phi: f64) -> Direction {
        Direction::new(theta, phi).unwrap()
    }

    fn setup(case: CaseSelector, outcome: Outcome, r1: f64, r2: f64) -> MeasurementSetup {
        MeasurementSetup::for_case(
            case,
            SpinContext::new(outcome, dir(0.8, 1.7)),
            dir(2.1, 4.0),
            dir(1.4, 0.3),
            Eigenvalues { r1, r2 },
        )
        .unwrap()
    }

    #[test]
    fn basis_on_initial_axis_gives_canonical_vectors() {
        for case in [CaseSelector::BasisEqualsInitial, CaseSelector::AllEqual] {
            assert_eq!(state_vector(&setup(case, Outcome::Up, 1.0, -1.0)), Vec2::e0());
            assert_eq!(state_vector(&setup(case, Outcome::Down, 1.0, -1.0)), Vec2::e1());
        }
    }

    #[test]
    fn all_equal_expectation_is_initial_eigenvalue() {
        let s = setup(CaseSelector::AllEqual, Outcome::Up, 4.5, -2.0);
        assert_eq!(expectation_matrix(&s), 4.5);
        assert_eq!(expectation_direct(&s), 4.5);
    }

    #[test]
    fn repeat_measurement_expectation() {
        let s = setup(CaseSelector::FinalEqualsInitial, Outcome::Up, 1.0, -1.0);
        assert_eq!(expectation_direct(&s), 1.0);
    }

    #[test]
    fn spin_squared_expectation_is_three() {
        for case in CaseSelector::ALL {
            let s = setup(case, Outcome::Down, 3.0, 3.0);
            assert!((expectation_direct(&s) - 3.0).abs() < 1e-14);
            assert!((expectation_matrix(&s) - 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn infer_classifies_by_exact_equality() {
        let a = dir(1.0, 1.0);
        let b = dir(2.0, 2.0);
        let c = dir(0.5, 3.0);
        assert_eq!(CaseSelector::infer(&a, &b, &c), CaseSelector::General);
        assert_eq!(CaseSelector::infer(&a, &a, &c), CaseSelector::BasisEqualsInitial);
        assert_eq!(CaseSelector::infer(&a, &c, &c), CaseSelector::BasisEqualsFinal);
        assert_eq!(CaseSelector::infer(&a, &b, &a), CaseSelector::FinalEqualsInitial);
        assert_eq!(CaseSelector::infer(&a, &a, &a), CaseSelector::AllEqual);
        let nudged = dir(1.0, 1.0 + 1e-15);
        assert_eq!(CaseSelector::infer(&a, &nudged, &c), CaseSelector::General);
    }

    #[test]
    fn eigen_report_rejects_general_case() {
        let s = setup(CaseSelector::General, Outcome::Up, 1.0, -1.0);
        assert!(matches!(
            eigen_consistency_report(&s),
            Err(LandeError::CaseMismatch(_))
        ));
    }

    #[test]
    fn eigen_report_all_equal_is_exact() {
        let s = setup(CaseSelector::AllEqual, Outcome::Down, 2.0, 9.0);
        let report = eigen_consistency_report(&s).unwrap();
        assert_eq!(report.residual, 0.0);
        assert_eq!(report.eigenvalue, 9.0);
        assert_eq!(report.state, Vec2::e1().into());
    }
}
