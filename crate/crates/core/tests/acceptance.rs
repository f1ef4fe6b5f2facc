//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use lande_core::amplitudes::{amplitude_matrix, chi, compose, probability};
use lande_core::geometry::to_cartesian;
use lande_core::linalg2::{anticommutator, commutator, I};
use lande_core::operators::{ladder_operators, pauli, sigma_c, sigma_c_eigenvectors, sigma_dot_a_eigenvectors, spin_triple};
use lande_core::representation::{eigen_consistency_report, expectation_direct, expectation_matrix_complex};
use lande_core::simulator::{run_chain_with_workers, sigma_deviation};
use lande_core::verify::run_named;
use lande_core::{
    CaseSelector, ChainSpec, Complex, Direction, Eigenvalues, Mat2, MeasurementSetup, Outcome,
    SpinContext, Vec2,
};
use rand::Rng;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn random_context(r: &mut impl Rng) -> SpinContext {
    let o = if r.gen_bool(0.5) { Outcome::Up } else { Outcome::Down };
    SpinContext::new(o, random_direction(r))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn born_closed_form() -> Verdict {
    let mut r = rng(1);
    let (err, took) = timed(|| {
        let mut err: f64 = 0.0;
        for _ in 0..10_000 {
            let (a, c) = (random_direction(&mut r), random_direction(&mut r));
            // half-angle from the Cartesian dot product, not from the library
            let d = dot(to_cartesian(&a), to_cartesian(&c));
            let (cos2, sin2) = (0.5 * (1.0 + d), 0.5 * (1.0 - d));
            for m in Outcome::ALL {
                let from = SpinContext::new(m, a);
                let same = chi(&from, &SpinContext::new(m, c)).norm_sqr();
                let flip = chi(&from, &SpinContext::new(m.flipped(), c)).norm_sqr();
                err = err.max((same - cos2).abs()).max((flip - sin2).abs());
            }
        }
        err
    });
    verdict(
        err <= 1e-12 && took < Duration::from_secs(1),
        format!("max |chi|^2 error {err:.2e} (tol 1e-12), {} ms", took.as_millis()),
    )
}

fn composition_law() -> Verdict {
    let mut r = rng(2);
    let (err, took) = timed(|| {
        let mut err: f64 = 0.0;
        for _ in 0..10_000 {
            let (from, via, to) = (random_context(&mut r), random_direction(&mut r), random_context(&mut r));
            err = err.max((compose(&from, &via, &to) - chi(&from, &to)).norm());
        }
        err
    });
    verdict(
        err <= 1e-12 && took < Duration::from_secs(1),
        format!("max |compose - chi| {err:.2e} (tol 1e-12), {} ms", took.as_millis()),
    )
}

fn unitarity() -> Verdict {
    let mut r = rng(3);
    let mut err: f64 = 0.0;
    for _ in 0..10_000 {
        let (a, c) = (random_direction(&mut r), random_direction(&mut r));
        let u = amplitude_matrix(&a, &c);
        err = err.max((u * u.dagger() - Mat2::identity()).max_abs());
        err = err.max((u.dagger() * u - Mat2::identity()).max_abs());
        let p: Vec<[f64; 2]> = u.rows().iter().map(|row| [row[0].norm_sqr(), row[1].norm_sqr()]).collect();
        let rows = p.iter().map(|row| row[0] + row[1]);
        let cols = (0..2).map(|k| p[0][k] + p[1][k]);
        err = rows.chain(cols).fold(err, |e, sum| e.max((sum - 1.0).abs()));
    }
    verdict(err <= 1e-12, format!("max deviation {err:.2e} (tol 1e-12)"))
}

fn operator_algebra() -> Verdict {
    let mut r = rng(4);
    let mut err: f64 = 0.0;
    let one = Mat2::identity();
    for _ in 0..1000 {
        let t = spin_triple(&random_direction(&mut r), &random_direction(&mut r));
        for m in [&t.x, &t.y, &t.c] {
            err = err.max((*m * *m - one).max_abs());
        }
        for (p, q) in [(&t.x, &t.y), (&t.y, &t.c), (&t.c, &t.x)] {
            err = err.max(anticommutator(p, q).max_abs());
        }
        let two_i = I * 2.0;
        err = err.max((commutator(&t.x, &t.y) - t.c * two_i).max_abs());
        err = err.max((commutator(&t.y, &t.c) - t.x * two_i).max_abs());
        err = err.max((commutator(&t.c, &t.x) - t.y * two_i).max_abs());
    }
    verdict(err <= 1e-12, format!("max deviation {err:.2e} (tol 1e-12)"))
}

fn eigen_system() -> Verdict {
    let mut r = rng(5);
    let mut err: f64 = 0.0;
    for _ in 0..1000 {
        let (b, c) = (random_direction(&mut r), random_direction(&mut r));
        let m = sigma_c(&b, &c);
        let (up, down) = sigma_c_eigenvectors(&b, &c);
        err = err.max((m * up - up).norm()).max((m * down + down).norm());
        err = err.max((up.norm() - 1.0).abs()).max((down.norm() - 1.0).abs());
        err = err.max(up.inner(down).norm());
    }
    verdict(err <= 1e-12, format!("max residual/norm/overlap error {err:.2e} (tol 1e-12)"))
}

fn max_diff(a: &Mat2, b: &Mat2) -> f64 {
    (*a - *b).max_abs()
}

fn limit_reductions() -> Verdict {
    let mut r = rng(6);
    let pole = Direction::new(0.0, PI).unwrap();
    let (px, py, pz) = pauli();
    let (mut pauli_err, mut pole_err, mut amp_err, mut flip_err): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    let mut zero_phi_err: f64 = 0.0;
    let c1 = |x: f64| Complex::new(x, 0.0);

    for _ in 0..1000 {
        // equal axes give the Pauli matrices
        let a = random_angles(&mut r);
        let t = spin_triple(&a, &a);
        let (plus, minus) = ladder_operators(&a, &a);
        pauli_err = pauli_err
            .max(max_diff(&t.x, &px))
            .max(max_diff(&t.y, &py))
            .max(max_diff(&t.c, &pz))
            .max(max_diff(&plus, &Mat2::real(0.0, 2.0, 0.0, 0.0)))
            .max(max_diff(&minus, &Mat2::real(0.0, 0.0, 2.0, 0.0)));

        // basis at (0, π): operator forms written out here from the closed expressions
        let c = random_angles(&mut r);
        let (s, co) = c.theta().sin_cos();
        let (sh, ch) = (0.5 * c.theta()).sin_cos();
        let e = cis(c.phi());
        let want_c = Mat2::new(c1(co), e.conj() * s, e * s, c1(-co));
        let want_plus = Mat2::new(c1(s), -e.conj() * (2.0 * ch * ch), e * (2.0 * sh * sh), c1(-s));
        let want_minus = Mat2::new(c1(s), e.conj() * (2.0 * sh * sh), -e * (2.0 * ch * ch), c1(-s));
        let want_x = Mat2::new(c1(s), -e.conj() * co, -e * co, c1(-s));
        let want_y = Mat2::new(c1(0.0), I * e.conj(), -I * e, c1(0.0));
        let t = spin_triple(&pole, &c);
        let (plus, minus) = ladder_operators(&pole, &c);
        pole_err = pole_err
            .max(max_diff(&t.c, &want_c))
            .max(max_diff(&plus, &want_plus))
            .max(max_diff(&minus, &want_minus))
            .max(max_diff(&t.x, &want_x))
            .max(max_diff(&t.y, &want_y));

        // at (0, π) the eigenvectors are those of σ·ĉ
        let (up, down) = sigma_c_eigenvectors(&pole, &c);
        let (want_up, want_down) = sigma_dot_a_eigenvectors(&c);
        pole_err = pole_err.max((up - want_up).max_abs()).max((down - want_down).max_abs());

        // the reduced eigenvector forms hold with the basis at (0, 0)
        let printed_up = Vec2::new(c1(ch), -e * sh);
        let printed_down = Vec2::new(c1(sh), e * ch);
        let (up0, down0) = sigma_c_eigenvectors(&Direction::north(), &c);
        zero_phi_err = zero_phi_err
            .max((up0 - printed_up).max_abs())
            .max((down0 - printed_down).max_abs());
        // ... and at (0, π) they differ only in the sign of the second component
        let flipped = |v: Vec2| Vec2::new(v.c0, -v.c1);
        flip_err = flip_err
            .max((up - flipped(printed_up)).max_abs())
            .max((down - flipped(printed_down)).max_abs());

        // amplitudes into the (0, π) axis
        let a = random_angles(&mut r);
        let (sa, ca) = (0.5 * a.theta()).sin_cos();
        let ea = cis(a.phi());
        let want = [
            (Outcome::Up, Outcome::Up, c1(ca)),
            (Outcome::Up, Outcome::Down, ea * sa),
            (Outcome::Down, Outcome::Up, c1(sa)),
            (Outcome::Down, Outcome::Down, -ea * ca),
        ];
        for (m, n, w) in want {
            amp_err = amp_err.max((chi(&SpinContext::new(m, a), &SpinContext::new(n, pole)) - w).norm());
        }
    }

    // (0, π) forms at θ′ = 0, φ′ = π give back σ_x, σ_y
    let t = spin_triple(&pole, &pole);
    pole_err = pole_err.max(max_diff(&t.x, &px)).max(max_diff(&t.y, &py));

    let pass = pauli_err <= 1e-15 && pole_err <= 1e-12 && amp_err <= 1e-15 && zero_phi_err <= 1e-12 && flip_err <= 1e-12;
    verdict(
        pass,
        format!(
            "pauli {pauli_err:.2e} (tol 1e-15); basis (0,pi) operators/eigenvectors {pole_err:.2e} (tol 1e-12); \
             amplitudes {amp_err:.2e} (tol 1e-15); reduced eigenvectors match basis (0,0) {zero_phi_err:.2e}, \
             differ at (0,pi) by the sign of the lower component {flip_err:.2e}"
        ),
    )
}

fn expectation_equivalence() -> Verdict {
    let mut r = rng(7);
    let (mut err, mut imag, mut resid): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..1000 {
        let initial = random_context(&mut r);
        let (b, c) = (random_direction(&mut r), random_direction(&mut r));
        let ev = Eigenvalues { r1: r.gen_range(-5.0..5.0), r2: r.gen_range(-5.0..5.0) };
        for case in CaseSelector::ALL {
            let s = MeasurementSetup::for_case(case, initial, b, c, ev).unwrap();
            let m = expectation_matrix_complex(&s);
            err = err.max((m.re - expectation_direct(&s)).abs());
            imag = imag.max(m.im.abs());
            if matches!(case, CaseSelector::FinalEqualsInitial | CaseSelector::AllEqual) {
                resid = resid.max(eigen_consistency_report(&s).unwrap().residual);
            }
        }
        // cross-check against the Born weights
        let s = MeasurementSetup::for_case(CaseSelector::General, initial, b, c, ev).unwrap();
        let p_up = probability(&initial, &SpinContext::up(c));
        err = err.max((expectation_direct(&s) - (ev.r1 * p_up + ev.r2 * (1.0 - p_up))).abs());
    }
    verdict(
        err <= 1e-12 && imag <= 1e-12 && resid <= 1e-12,
        format!("max |matrix - direct| {err:.2e}, imag {imag:.2e}, repeat-axis eigen residual {resid:.2e} (tol 1e-12)"),
    )
}

fn monte_carlo() -> Verdict {
    let mut r = rng(8);
    let ((worst, identical), took) = timed(|| {
        let mut worst: f64 = 0.0;
        let mut identical = true;
        for chain in 0..100 {
            let len = r.gen_range(1..=3);
            let spec = ChainSpec {
                initial: random_context(&mut r),
                axes: (0..len).map(|_| random_direction(&mut r)).collect(),
                trials: 1_000_000,
                seed: 0x5EED,
            };
            let res = run_chain_with_workers(&spec, 4).unwrap();
            for (c, p) in res.counts.iter().zip(&res.analytic_freqs) {
                worst = worst.max(sigma_deviation(c.up, spec.trials, p[0]));
            }
            // rerun a subset with different worker counts
            if chain % 10 == 0 {
                for w in [1, 3] {
                    identical &= run_chain_with_workers(&spec, w).unwrap() == res;
                }
            }
        }
        (worst, identical)
    });
    verdict(
        worst <= 5.0 && identical && took < Duration::from_secs(30),
        format!(
            "max deviation {worst:.2} sigma (tol 5), reruns bit-identical: {identical}, {:.1} s",
            took.as_secs_f64()
        ),
    )
}

fn printed_cross_check() -> Verdict {
    let mut lines = Vec::new();
    let mut documented = true;
    for name in ["printed_ladder_elements", "printed_xy_elements"] {
        let rep = run_named(name, 9, 1000).expect("check exists");
        documented &= rep.samples == 1000 && (rep.pass || !rep.mismatches.is_empty());
        if rep.pass {
            lines.push(format!("{name}: agree, max {:.2e}", rep.max_abs_error));
        } else {
            lines.push(format!("{name}: mismatched {:?}", rep.mismatches));
        }
    }
    verdict(documented, lines.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("born closed form", born_closed_form),
        ("composition law", composition_law),
        ("unitarity / double stochasticity", unitarity),
        ("operator algebra", operator_algebra),
        ("eigen-system", eigen_system),
        ("limit reductions", limit_reductions),
        ("expectation equivalence", expectation_equivalence),
        ("monte-carlo validation", monte_carlo),
        ("printed-formula cross-check", printed_cross_check),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {} [{name}]: {tag} - {}", k + 1, out.detail);
        failed += usize::from(!out.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
