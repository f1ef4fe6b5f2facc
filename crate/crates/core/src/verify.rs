//! Named identity checks over random axes, collected into a report.
//!
//! Each check draws its own directions from a [`CounterRng`] keyed by the run
//! seed and the check name, so a report does not depend on which checks ran
//! before it. Checks whose name starts with `printed_` compare the
//! element-by-element formulas in [`crate::operators::printed`] against the
//! construction. They are kept apart from the algebra checks, so a
//! transcription slip shows up as its own failing line.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::amplitudes::{
    amplitude_matrix, chi, compose, hermitian_pair_check, probability, probability_expanded,
    stochastic_deviation, Outcome, SpinContext,
};
use crate::geometry::{cos_angle_between, cos_sq_half_angle, to_cartesian, Direction};
use crate::linalg2::{anticommutator, commutator, eig_hermitian, Complex, Mat2, Vec2, I};
use crate::operators::{
    ladder_operators, observable_matrix, observable_matrix_by_summation, pauli, printed, sigma_c,
    sigma_c_eigenvectors, sigma_dot_a, sigma_dot_a_eigenvectors, sigma_squared, spin_triple,
    ObservableSpec, SpinTriple,
};
use crate::representation::{
    eigen_consistency_report, expectation_direct, expectation_matrix_complex, state_vector,
    CaseSelector, Eigenvalues, MeasurementSetup,
};
use crate::rng::CounterRng;
use crate::tolerance::default_tolerance;

/// Bound for identities that hold exactly up to a few rounding steps.
pub const EXACT_TOLERANCE: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    /// The identity being checked, written out as a formula.
    pub identity: String,
    pub samples: u64,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Labels of the quantities that exceeded the tolerance on some sample.
    pub mismatches: Vec<String>,
}

/// Running maximum plus the labels that ever exceeded the tolerance.
struct Tally {
    tol: f64,
    max: f64,
    over: BTreeSet<String>,
}

impl Tally {
    fn new(tol: f64) -> Self {
        Self {
            tol,
            max: 0.0,
            over: BTreeSet::new(),
        }
    }

    fn record(&mut self, label: &str, err: f64) {
        // NaN must count as a failure.
        let err = if err.is_nan() { f64::INFINITY } else { err };
        if err > self.max {
            self.max = err;
        }
        if err > self.tol {
            self.over.insert(label.to_string());
        }
    }

    fn record_mat(&mut self, label: &str, got: &Mat2, want: &Mat2) {
        for i in 0..2 {
            for j in 0..2 {
                let err = (got.get(i, j) - want.get(i, j)).norm();
                self.record(&format!("{label}[{}][{}]", i + 1, j + 1), err);
            }
        }
    }

    fn record_vec(&mut self, label: &str, got: Vec2, want: Vec2) {
        for (k, (g, w)) in got.to_array().iter().zip(want.to_array()).enumerate() {
            self.record(&format!("{label}[{}]", k + 1), (g - w).norm());
        }
    }
}

/// Per-check random source.
struct Sampler {
    rng: CounterRng,
}

impl Sampler {
    fn new(seed: u64, name: &str) -> Self {
        // FNV-1a of the name keeps checks on disjoint streams.
        let salt = name
            .bytes()
            .fold(0xCBF2_9CE4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01B3));
        Self {
            rng: CounterRng::new(seed ^ salt),
        }
    }

    fn uniform(&self, sample: u64, slot: u64) -> f64 {
        self.rng.uniform(sample, slot)
    }

    fn direction(&self, sample: u64, slot: u64) -> Direction {
        Direction::from_unit_samples(self.uniform(sample, 2 * slot), self.uniform(sample, 2 * slot + 1))
    }

    fn eigenvalue(&self, sample: u64, slot: u64) -> f64 {
        10.0 * self.uniform(sample, 100 + slot) - 5.0
    }
}

type CheckFn = fn(&Sampler, u64, &mut Tally);

struct CheckDef {
    name: &'static str,
    identity: &'static str,
    exact: bool,
    run: CheckFn,
}

fn contexts(a: Direction) -> [SpinContext; 2] {
    [SpinContext::up(a), SpinContext::down(a)]
}

fn pole_pi() -> Direction {
    Direction::new(0.0, PI).expect("pole is a valid direction")
}

fn angle_identities(s: &Sampler, i: u64, t: &mut Tally) {
    let (a, c) = (s.direction(i, 0), s.direction(i, 1));
    let (va, vc) = (to_cartesian(&a), to_cartesian(&c));
    let dot: f64 = va.iter().zip(&vc).map(|(x, y)| x * y).sum();
    t.record("cos_theta", (cos_angle_between(&a, &c) - dot).abs());
    t.record("cos_sq_half_theta", (cos_sq_half_angle(&a, &c) - 0.5 * (1.0 + dot)).abs());
}

fn hermiticity(s: &Sampler, i: u64, t: &mut Tally) {
    let (a, c) = (s.direction(i, 0), s.direction(i, 1));
    for from in contexts(a) {
        for to in contexts(c) {
            t.record("chi", hermitian_pair_check(&from, &to));
        }
    }
}

fn composition(s: &Sampler, i: u64, t: &mut Tally) {
    let (a, via, c) = (s.direction(i, 0), s.direction(i, 1), s.direction(i, 2));
    for from in contexts(a) {
        for to in contexts(c) {
            t.record("chi", (compose(&from, &via, &to) - chi(&from, &to)).norm());
        }
    }
}

fn unitarity(s: &Sampler, i: u64, t: &mut Tally) {
    let u = amplitude_matrix(&s.direction(i, 0), &s.direction(i, 1));
    t.record_mat("u_udag", &(u * u.dagger()), &Mat2::identity());
    t.record_mat("udag_u", &(u.dagger() * u), &Mat2::identity());
    t.record("row_col_sums", stochastic_deviation(&u));
}

fn born_closed_form(s: &Sampler, i: u64, t: &mut Tally) {
    let (a, c) = (s.direction(i, 0), s.direction(i, 1));
    let dot: f64 = to_cartesian(&a).iter().zip(&to_cartesian(&c)).map(|(x, y)| x * y).sum();
    let aligned = 0.5 * (1.0 + dot);
    for from in contexts(a) {
        for to in contexts(c) {
            let want = if from.outcome == to.outcome { aligned } else { 1.0 - aligned };
            t.record("probability", (probability(&from, &to) - want).abs());
        }
    }
}

fn born_expanded_form(s: &Sampler, i: u64, t: &mut Tally) {
    let (a, c) = (s.direction(i, 0), s.direction(i, 1));
    for from in contexts(a) {
        for to in contexts(c) {
            t.record("probability", (probability(&from, &to) - probability_expanded(&from, &to)).abs());
        }
    }
}

fn normalization(s: &Sampler, i: u64, t: &mut Tally) {
    let (a, c) = (s.direction(i, 0), s.direction(i, 1));
    for from in contexts(a) {
        let total: f64 = contexts(c).iter().map(|to| probability(&from, to)).sum();
        t.record("sum", (total - 1.0).abs());
    }
}

fn amplitude_eigen_oracle(s: &Sampler, i: u64, t: &mut Tally) {
    let (a, c) = (s.direction(i, 0), s.direction(i, 1));
    let (Ok((a_up, a_down)), Ok((c_up, c_down))) =
        (eig_hermitian(&sigma_dot_a(&a)), eig_hermitian(&sigma_dot_a(&c)))
    else {
        t.record("eig", f64::INFINITY);
        return;
    };
    for (from, v) in contexts(a).iter().zip([a_up.vector, a_down.vector]) {
        let oracle = [c_up.vector.inner(v), c_down.vector.inner(v)];
        let lib = [chi(from, &SpinContext::up(c)), chi(from, &SpinContext::down(c))];
        for k in 0..2 {
            t.record("probability", (lib[k].norm_sqr() - oracle[k].norm_sqr()).abs());
        }
        // Equal up/down ratio, cross-multiplied so a vanishing amplitude is harmless.
        t.record("ratio", (lib[0] * oracle[1] - lib[1] * oracle[0]).norm());
    }
}

fn random_spec(s: &Sampler, i: u64) -> ObservableSpec {
    ObservableSpec {
        r1: s.eigenvalue(i, 0),
        r2: s.eigenvalue(i, 1),
        basis: s.direction(i, 0),
        measure: s.direction(i, 1),
    }
}

fn observable_eigenvalues(s: &Sampler, i: u64, t: &mut Tally) {
    let spec = random_spec(s, i);
    let m = observable_matrix(&spec);
    t.record("hermitian", m.hermitian_deviation());
    t.record("trace", (m.trace() - Complex::new(spec.r1 + spec.r2, 0.0)).norm());
    match eig_hermitian(&m) {
        Ok((hi, lo)) => {
            t.record("eigenvalue_max", (hi.value - spec.r1.max(spec.r2)).abs());
            t.record("eigenvalue_min", (lo.value - spec.r1.min(spec.r2)).abs());
        }
        Err(_) => t.record("eig", f64::INFINITY),
    }
}

fn printed_observable_elements(s: &Sampler, i: u64, t: &mut Tally) {
    let spec = random_spec(s, i);
    t.record_mat("R", &observable_matrix(&spec), &observable_matrix_by_summation(&spec));
}

fn printed_sigma_c_elements(s: &Sampler, i: u64, t: &mut Tally) {
    let (b, c) = (s.direction(i, 0), s.direction(i, 1));
    let summed = observable_matrix_by_summation(&ObservableSpec { r1: 1.0, r2: -1.0, basis: b, measure: c });
    t.record_mat("sigma_c", &printed::sigma_c(&b, &c), &summed);
}

fn eigenvector_residuals(s: &Sampler, i: u64, t: &mut Tally) {
    let (b, c) = (s.direction(i, 0), s.direction(i, 1));
    let m = sigma_c(&b, &c);
    let (up, down) = sigma_c_eigenvectors(&b, &c);
    t.record("residual_plus", (m * up - up).norm());
    t.record("residual_minus", (m * down + down).norm());
    t.record("norm_plus", (up.norm() - 1.0).abs());
    t.record("norm_minus", (down.norm() - 1.0).abs());
    t.record("overlap", up.inner(down).norm());
}

fn ladder_relations(s: &Sampler, i: u64, t: &mut Tally) {
    let (b, c) = (s.direction(i, 0), s.direction(i, 1));
    let (up, down) = sigma_c_eigenvectors(&b, &c);
    let (plus, minus) = ladder_operators(&b, &c);
    t.record("plus_on_up", (plus * up).norm());
    t.record("plus_on_down", (plus * down - up * 2.0).norm());
    t.record("minus_on_down", (minus * down).norm());
    t.record("minus_on_up", (minus * up - down * 2.0).norm());
    t.record_mat("minus_vs_plus_dagger", &minus, &plus.dagger());
}

fn printed_ladder_elements(s: &Sampler, i: u64, t: &mut Tally) {
    let (b, c) = (s.direction(i, 0), s.direction(i, 1));
    let (plus, minus) = ladder_operators(&b, &c);
    t.record_mat("sigma_plus", &printed::sigma_plus(&b, &c), &plus);
    t.record_mat("sigma_minus", &printed::sigma_minus(&b, &c), &minus);
}

fn printed_xy_elements(s: &Sampler, i: u64, t: &mut Tally) {
    let (b, c) = (s.direction(i, 0), s.direction(i, 1));
    let SpinTriple { x, y, .. } = spin_triple(&b, &c);
    t.record_mat("sigma_x", &printed::sigma_x(&b, &c), &x);
    t.record_mat("sigma_y", &printed::sigma_y(&b, &c), &y);
}

fn algebra_squares(s: &Sampler, i: u64, t: &mut Tally) {
    let SpinTriple { x, y, c } = spin_triple(&s.direction(i, 0), &s.direction(i, 1));
    t.record_mat("x^2", &(x * x), &Mat2::identity());
    t.record_mat("y^2", &(y * y), &Mat2::identity());
    t.record_mat("c^2", &(c * c), &Mat2::identity());
}

fn algebra_anticommutators(s: &Sampler, i: u64, t: &mut Tally) {
    let SpinTriple { x, y, c } = spin_triple(&s.direction(i, 0), &s.direction(i, 1));
    let zero = Mat2::zero();
    t.record_mat("{x,y}", &anticommutator(&x, &y), &zero);
    t.record_mat("{y,c}", &anticommutator(&y, &c), &zero);
    t.record_mat("{c,x}", &anticommutator(&c, &x), &zero);
}

fn algebra_commutators(s: &Sampler, i: u64, t: &mut Tally) {
    let SpinTriple { x, y, c } = spin_triple(&s.direction(i, 0), &s.direction(i, 1));
    let two_i = I * 2.0;
    t.record_mat("[x,y]", &commutator(&x, &y), &(c * two_i));
    t.record_mat("[y,c]", &commutator(&y, &c), &(x * two_i));
    t.record_mat("[c,x]", &commutator(&c, &x), &(y * two_i));
}

fn sigma_squared_sum(s: &Sampler, i: u64, t: &mut Tally) {
    let SpinTriple { x, y, c } = spin_triple(&s.direction(i, 0), &s.direction(i, 1));
    t.record_mat("x^2+y^2+c^2", &(x * x + y * y + c * c), &sigma_squared());
    t.record_mat("[sigma^2,c]", &commutator(&sigma_squared(), &c), &Mat2::zero());
}

fn pauli_limit(s: &Sampler, i: u64, t: &mut Tally) {
    let a = s.direction(i, 0);
    let (px, py, pz) = pauli();
    let SpinTriple { x, y, c } = spin_triple(&a, &a);
    t.record_mat("sigma_x", &x, &px);
    t.record_mat("sigma_y", &y, &py);
    t.record_mat("sigma_c", &c, &pz);
    // The element-by-element formulas take the same limit.
    t.record_mat("printed_sigma_x", &printed::sigma_x(&a, &a), &px);
    t.record_mat("printed_sigma_y", &printed::sigma_y(&a, &a), &py);
    t.record_mat("printed_sigma_c", &printed::sigma_c(&a, &a), &pz);
}

fn special_limit_amplitudes(s: &Sampler, i: u64, t: &mut Tally) {
    let a = s.direction(i, 0);
    let b = pole_pi();
    let (up, down) = sigma_dot_a_eigenvectors(&a);
    // chi(± â; ·) along the pole equals the components of the σ·â eigenvectors.
    let lib_up = Vec2::new(chi(&SpinContext::up(a), &SpinContext::up(b)), chi(&SpinContext::up(a), &SpinContext::down(b)));
    let lib_down = Vec2::new(chi(&SpinContext::down(a), &SpinContext::up(b)), chi(&SpinContext::down(a), &SpinContext::down(b)));
    t.record_vec("chi_up", lib_up, up);
    t.record_vec("chi_down", lib_down, down);
}

fn special_limit_eigenvectors(s: &Sampler, i: u64, t: &mut Tally) {
    let c = s.direction(i, 0);
    let (up, down) = sigma_c_eigenvectors(&pole_pi(), &c);
    let (want_up, want_down) = sigma_dot_a_eigenvectors(&c);
    t.record_vec("xi_plus", up, want_up);
    t.record_vec("xi_minus", down, want_down);
}

fn printed_limit_operators(s: &Sampler, i: u64, t: &mut Tally) {
    let c = s.direction(i, 0);
    let b = pole_pi();
    let SpinTriple { x, y, c: z } = spin_triple(&b, &c);
    let (plus, minus) = ladder_operators(&b, &c);
    t.record_mat("sigma_c", &z, &printed::pole_limit::sigma_c(&c));
    t.record_mat("sigma_c_vs_sigma_dot_a", &z, &sigma_dot_a(&c));
    t.record_mat("sigma_plus", &plus, &printed::pole_limit::sigma_plus(&c));
    t.record_mat("sigma_minus", &minus, &printed::pole_limit::sigma_minus(&c));
    t.record_mat("sigma_x", &x, &printed::pole_limit::sigma_x(&c));
    t.record_mat("sigma_y", &y, &printed::pole_limit::sigma_y(&c));
}

fn printed_limit_eigenvectors(s: &Sampler, i: u64, t: &mut Tally) {
    // The printed reduced eigenvectors correspond to the pole with φ = 0.
    let c = s.direction(i, 0);
    let (up, down) = sigma_c_eigenvectors(&Direction::north(), &c);
    let (want_up, want_down) = printed::pole_limit::eigenvectors(&c);
    t.record_vec("xi_plus", up, want_up);
    t.record_vec("xi_minus", down, want_down);
}

fn random_setup(s: &Sampler, i: u64, case: CaseSelector) -> MeasurementSetup {
    let outcome = if s.uniform(i, 200) < 0.5 { Outcome::Up } else { Outcome::Down };
    MeasurementSetup::for_case(
        case,
        SpinContext::new(outcome, s.direction(i, 0)),
        s.direction(i, 1),
        s.direction(i, 2),
        Eigenvalues { r1: s.eigenvalue(i, 0), r2: s.eigenvalue(i, 1) },
    )
    .expect("random eigenvalues are finite")
}

fn expectation_equivalence(s: &Sampler, i: u64, t: &mut Tally) {
    for case in CaseSelector::ALL {
        let setup = random_setup(s, i, case);
        let via_matrix = expectation_matrix_complex(&setup);
        let label = format!("{case:?}");
        t.record(&label, (via_matrix.re - expectation_direct(&setup)).abs());
        t.record(&format!("{label}.imag"), via_matrix.im.abs());
    }
    // Same physics under the three general-type cases.
    let general = random_setup(s, i, CaseSelector::General);
    let reference = expectation_direct(&general);
    for case in [CaseSelector::BasisEqualsInitial, CaseSelector::BasisEqualsFinal] {
        let alt = MeasurementSetup::for_case(
            case,
            general.initial,
            general.basis,
            general.final_axis,
            general.observable,
        )
        .expect("finite eigenvalues");
        t.record(
            &format!("{case:?}.vs_general"),
            (expectation_matrix_complex(&alt).re - reference).abs(),
        );
    }
}

fn case_d_eigen_consistency(s: &Sampler, i: u64, t: &mut Tally) {
    let setup = random_setup(s, i, CaseSelector::FinalEqualsInitial);
    match eigen_consistency_report(&setup) {
        Ok(report) => t.record("residual", report.residual),
        Err(_) => t.record("case", f64::INFINITY),
    }
}

fn state_vector_normalization(s: &Sampler, i: u64, t: &mut Tally) {
    let setup = random_setup(s, i, CaseSelector::General);
    let psi = state_vector(&setup);
    t.record("norm", (psi.norm() - 1.0).abs());
    let moved = MeasurementSetup { final_axis: s.direction(i, 5), ..setup };
    t.record("final_axis_independence", (state_vector(&moved) - psi).max_abs());
}

const CHECKS: &[CheckDef] = &[
    CheckDef { name: "algebra_anticommutators", identity: "{sx,sy} = {sy,sc} = {sc,sx} = 0", exact: false, run: algebra_anticommutators },
    CheckDef { name: "algebra_commutators", identity: "[sx,sy] = 2i sc, [sy,sc] = 2i sx, [sc,sx] = 2i sy", exact: false, run: algebra_commutators },
    CheckDef { name: "algebra_squares", identity: "sx^2 = sy^2 = sc^2 = I", exact: false, run: algebra_squares },
    CheckDef { name: "amplitude_eigen_oracle", identity: "chi(m a; n c) ~ <xi_n(c)|xi_m(a)> from eig(sigma.a), up to phase", exact: false, run: amplitude_eigen_oracle },
    CheckDef { name: "angle_identities", identity: "cos T = cos(t-t') - 2 sin t sin t' sin^2((p-p')/2) = a.c; cos^2(T/2) = (1 + a.c)/2", exact: false, run: angle_identities },
    CheckDef { name: "born_closed_form", identity: "|chi(m a; m c)|^2 = cos^2(T/2), |chi(m a; -m c)|^2 = sin^2(T/2)", exact: false, run: born_closed_form },
    CheckDef { name: "born_expanded_form", identity: "|chi|^2 = cos^2(t/2 - t'/2) -/+ sin t sin t' sin^2(p/2 - p'/2)", exact: false, run: born_expanded_form },
    CheckDef { name: "case_d_eigen_consistency", identity: "c = a: [R] psi = r(initial) psi", exact: false, run: case_d_eigen_consistency },
    CheckDef { name: "composition_closure", identity: "chi(A;C) = sum_B chi(A;B) chi(B;C)", exact: false, run: composition },
    CheckDef { name: "eigenvector_residuals", identity: "[sc] xi_+ = +xi_+, [sc] xi_- = -xi_-, orthonormal", exact: false, run: eigenvector_residuals },
    CheckDef { name: "expectation_equivalence", identity: "psi^dagger [R] psi = sum_n |psi_n|^2 r_n for every case", exact: false, run: expectation_equivalence },
    CheckDef { name: "hermiticity", identity: "chi(A;C) = conj(chi(C;A))", exact: false, run: hermiticity },
    CheckDef { name: "ladder_relations", identity: "s+ xi_+ = 0, s+ xi_- = 2 xi_+, s- xi_- = 0, s- xi_+ = 2 xi_-, s- = s+^dagger", exact: false, run: ladder_relations },
    CheckDef { name: "normalization", identity: "P(m a; +c) + P(m a; -c) = 1", exact: false, run: normalization },
    CheckDef { name: "observable_eigenvalues", identity: "[R] Hermitian, tr = r1 + r2, eigenvalues {r1, r2}", exact: false, run: observable_eigenvalues },
    CheckDef { name: "pauli_limit", identity: "b = c: sc, sx, sy = Pauli z, x, y", exact: true, run: pauli_limit },
    CheckDef { name: "printed_ladder_elements", identity: "element formulas for s+ and s- = 2 xi_+- xi_-+^dagger", exact: false, run: printed_ladder_elements },
    CheckDef { name: "printed_limit_eigenvectors", identity: "b = (0,0): xi_+ = (cos t'/2, -e^{ip'} sin t'/2), xi_- = (sin t'/2, e^{ip'} cos t'/2)", exact: false, run: printed_limit_eigenvectors },
    CheckDef { name: "printed_limit_operators", identity: "b = (0,pi): reduced sc, s+, s-, sx, sy", exact: false, run: printed_limit_operators },
    CheckDef { name: "printed_observable_elements", identity: "closed-form R_jj' = sum_n conj(phi(j;n)) phi(j';n) r_n", exact: false, run: printed_observable_elements },
    CheckDef { name: "printed_sigma_c_elements", identity: "(sc)_11 = cos t cos t' + sin t sin t' cos(p-p') etc.", exact: false, run: printed_sigma_c_elements },
    CheckDef { name: "printed_xy_elements", identity: "element formulas for sx = (s+ + s-)/2, sy = -i(s+ - s-)/2", exact: false, run: printed_xy_elements },
    CheckDef { name: "sigma_squared_sum", identity: "sx^2 + sy^2 + sc^2 = [sigma^2] = 3 I", exact: false, run: sigma_squared_sum },
    CheckDef { name: "special_limit_amplitudes", identity: "c = (0,pi): chi(+a;+) = cos t/2, chi(+a;-) = e^{ip} sin t/2, chi(-a;+) = sin t/2, chi(-a;-) = -e^{ip} cos t/2", exact: true, run: special_limit_amplitudes },
    CheckDef { name: "special_limit_eigenvectors", identity: "b = (0,pi): xi_+- = eigenvectors of sigma.c", exact: false, run: special_limit_eigenvectors },
    CheckDef { name: "state_vector_normalization", identity: "|psi| = 1, psi independent of final axis", exact: false, run: state_vector_normalization },
    CheckDef { name: "unitarity", identity: "U U^dagger = I, rows and columns of |U|^2 sum to 1", exact: false, run: unitarity },
];

/// Names of every check [`run_all`] produces, in report order.
pub fn check_names() -> Vec<&'static str> {
    let mut names: Vec<_> = CHECKS.iter().map(|c| c.name).collect();
    names.sort_unstable();
    names
}

fn run_check(def: &CheckDef, seed: u64, samples: u64) -> CheckReport {
    let tol = if def.exact { EXACT_TOLERANCE } else { default_tolerance() };
    let sampler = Sampler::new(seed, def.name);
    let mut tally = Tally::new(tol);
    for i in 0..samples {
        (def.run)(&sampler, i, &mut tally);
    }
    CheckReport {
        name: def.name.to_string(),
        identity: def.identity.to_string(),
        samples,
        max_abs_error: tally.max,
        tolerance: tol,
        pass: tally.max <= tol,
        mismatches: tally.over.into_iter().collect(),
    }
}

/// Runs one named check. Returns `None` for an unknown name.
pub fn run_named(name: &str, seed: u64, samples: u64) -> Option<CheckReport> {
    CHECKS
        .iter()
        .find(|c| c.name == name)
        .map(|def| run_check(def, seed, samples.max(1)))
}

/// Runs every check with `samples` random draws each (at least one) and
/// returns the reports sorted by name.
pub fn run_all(seed: u64, samples: u64) -> Vec<CheckReport> {
    let samples = samples.max(1);
    let mut reports: Vec<CheckReport> = CHECKS.iter().map(|def| run_check(def, seed, samples)).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_sorted() {
        let names = check_names();
        let set: BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
        let reports = run_all(5, 1);
        let got: Vec<_> = reports.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(got, names);
    }

    #[test]
    fn tally_records_nan_as_failure() {
        let mut t = Tally::new(1e-12);
        t.record("x", f64::NAN);
        assert_eq!(t.max, f64::INFINITY);
        assert!(t.over.contains("x"));
    }

    #[test]
    fn unknown_check_name() {
        assert!(run_named("nope", 1, 1).is_none());
        assert!(run_named("hermiticity", 1, 3).unwrap().pass);
    }
}
