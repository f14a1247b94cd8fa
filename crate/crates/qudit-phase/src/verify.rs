//! The full invariant suite for one dimension, aggregated into a
//! report. Randomized checks draw from a fixed-seed generator so the
//! report is reproducible.

use std::time::Instant;

use num_complex::Complex64;

use crate::fourier;
use crate::linalg::QuditState;
use crate::mub;
use crate::pauli::{self, PrimeDim};
use crate::phase::{self, CovariantPovm, PhaseAngles};
use crate::polar;
use crate::qubit;
use crate::qutrit;
use crate::report::{Check, Report};
use crate::rng::SplitMix64;
use crate::tol;
use crate::Result;

fn random_state(rng: &mut SplitMix64, dim: usize) -> QuditState {
    loop {
        let amps: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)))
            .collect();
        if amps.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3 {
            return QuditState::normalized(amps).expect("nonzero norm");
        }
    }
}

fn random_angles(rng: &mut SplitMix64, d: PrimeDim) -> PhaseAngles {
    let values = (0..d.get() - 1).map(|_| rng.angle()).collect();
    PhaseAngles::new(d, values).expect("correct angle count")
}

/// Run every check for dimension d. All tolerances are fixed here; the
/// aggregate passes only if every gated check passes.
pub fn run(d: PrimeDim) -> Result<Report> {
    let started = Instant::now();
    let n = d.get();
    let mut report = Report::new("verify", n);
    let mut rng = SplitMix64::new(0x5eed ^ n as u64);

    report.push(pauli::weyl_check(d));

    let fourier_report = fourier::fourier_pair_check(d);
    report.extend(fourier_report.checks);
    report.push(Check::new(
        "quadratic-phase-form",
        fourier::quadratic_phase_form_residual(d),
        tol::EIGEN,
    ));

    // class structure
    let mut commutation = 0.0f64;
    let mut traces = 0.0f64;
    for k in 0..=n {
        let class = pauli::commuting_class(d, k)?;
        commutation = commutation.max(class.commutation_residual());
        traces = traces.max(class.trace_residual());
    }
    report.push(Check::new("class-commutation", commutation, tol::ALGEBRAIC));
    report.push(Check::new("class-tracelessness", traces, tol::ALGEBRAIC));

    let span = (1..n)
        .map(|k| pauli::inversion_span_residual(d, &pauli::clock(d).pow(k)))
        .fold(0.0, f64::max);
    report.push(Check::new("inversion-span", span, tol::ALGEBRAIC));

    // MUB collection
    let mubs = mub::build_mubs(d)?;
    let count_ok = mubs.len() == n + 1;
    report.push(Check::new(
        "mub-count",
        if count_ok { 0.0 } else { 1.0 },
        0.5,
    ));
    let unbiased = mub::unbiasedness_report(&mubs);
    report.push(Check::new(
        "mub-unbiasedness",
        unbiased.max_deviation,
        unbiased.tolerance,
    ));
    report.push(Check::new(
        "mub-class-diagonalization",
        mub::class_diagonalization_residual(d, &mubs)?,
        tol::EIGEN_AGGREGATE,
    ));
    if n > 2 {
        report.push(Check::new(
            "mub-route-equivalence",
            mub::route_equivalence_residual(d, &mubs)?,
            tol::EIGEN_AGGREGATE,
        ));
    }

    // phase-operator family
    let mut inversion_invariance = 0.0f64;
    let mut unitarity = 0.0f64;
    let mut group_law = 0.0f64;
    for _ in 0..4 {
        let phis = random_angles(&mut rng, d);
        let u = phase::phase_shift(&phis);
        for j in 0..n - 1 {
            let h = pauli::inversion(d, j)?;
            let conj = u.adjoint().mat_mul(&h.mat_mul(&u)?)?;
            inversion_invariance = inversion_invariance.max(conj.max_abs_diff(&h));
        }
        let e1 = phase::phase_operator(d, &phis, 1)?;
        for k in 1..n {
            let ek = phase::phase_operator(d, &phis, k)?;
            unitarity = unitarity.max(ek.unitarity_residual());
            group_law = group_law.max(ek.max_abs_diff(&e1.pow(k)));
            let complement = phase::phase_operator(d, &phis, n - k)?;
            group_law = group_law.max(complement.max_abs_diff(&ek.adjoint()));
        }
    }
    report.push(Check::new(
        "inversion-invariance",
        inversion_invariance,
        tol::CONJUGATION,
    ));
    report.push(Check::new("phase-unitarity", unitarity, tol::CONJUGATION));
    report.push(Check::new("phase-group-law", group_law, tol::CONJUGATION));

    // moments, kernel, distribution
    let mut cross_check = 0.0f64;
    let mut moment_identity = 0.0f64;
    let mut reality = 0.0f64;
    for _ in 0..20 {
        let state = random_state(&mut rng, n);
        let phis = random_angles(&mut rng, d);
        let kernel = phase::moment_kernel(&state, &phis)?;
        let x_moments = phase::shift_moments(&state);
        let mut distribution_term = Complex64::new(1.0, 0.0);
        for l in 1..n {
            let from_sum = phase::phase_moment_sum(&state, &phis, l)?;
            let from_matrix = phase::phase_moment_bilinear(&state, &phis, l)?;
            cross_check = cross_check.max((from_sum - from_matrix).norm());
            let xl = pauli::shift(d).pow(l);
            let traced = kernel.mat_mul(&xl)?.trace() * phase::angle_volume(n) / n as f64;
            moment_identity = moment_identity.max((traced - from_sum).norm());
            distribution_term += from_sum.conj() * x_moments[l - 1];
        }
        reality = reality.max(distribution_term.im.abs());
    }
    report.push(Check::new(
        "moment-cross-check",
        cross_check,
        tol::CONJUGATION,
    ));
    report.push(Check::new("moment-identity", moment_identity, tol::EIGEN));
    report.push(Check::new("distribution-reality", reality, tol::REALITY));

    // quadrature-based checks stay desk scale: grid sweeps only where
    // N^(d-1) is small
    if n <= 5 {
        let grid_n = if n <= 3 { 64 } else { 12 };
        let state = random_state(&mut rng, n);
        let dist = phase::phase_distribution(&state, grid_n)?;
        report.push(Check::new(
            "distribution-normalization",
            (dist.riemann_sum() - 1.0).abs(),
            tol::QUADRATURE,
        ));
    }

    // covariant POVM with unit coefficients
    let povm = CovariantPovm::uniform(d);
    let mut hermiticity = 0.0f64;
    let mut covariance = 0.0f64;
    for _ in 0..4 {
        let phis = random_angles(&mut rng, d);
        hermiticity = hermiticity.max(povm.element(&phis).hermiticity_residual());
        for j in 0..n - 1 {
            covariance = covariance.max(povm.covariance_residual(&phis, j, rng.angle())?);
        }
    }
    report.push(Check::new(
        "povm-hermiticity",
        hermiticity,
        tol::CONJUGATION,
    ));
    report.push(Check::new("povm-covariance", covariance, tol::CONJUGATION));
    if n <= 5 {
        report.push(Check::new(
            "povm-identity-integral",
            povm.identity_integral_residual(if n <= 3 { 16 } else { 8 })?,
            tol::QUADRATURE,
        ));
    }

    // dimension-specific closed forms
    if n == 2 {
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let theta = rng.range(0.0, std::f64::consts::PI);
            let chi = rng.angle();
            let phi = rng.angle();
            let state = qubit::bloch_state(theta, chi)?;
            let direct = qubit::phase_operator(phi).expectation(&state);
            let closed = qubit::phase_expectation(theta, chi, phi);
            worst = worst.max((direct - Complex64::new(closed, 0.0)).norm());
        }
        report.push(Check::new("qubit-closed-form", worst, tol::EIGEN));
    }
    if n == 3 {
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let theta = rng.range(0.0, std::f64::consts::PI);
            let xi = rng.range(0.0, std::f64::consts::PI);
            let (c1, c2) = (rng.angle(), rng.angle());
            let (p1, p2) = (rng.angle(), rng.angle());
            let state = qutrit::state(theta, xi, c1, c2)?;
            let phis = PhaseAngles::new(d, vec![p1, p2])?;
            let matrix_path = phase::phase_moment(&state, &phis, 1)?;
            let closed = qutrit::phase_expectation(theta, xi, c1, c2, p1, p2);
            worst = worst.max((matrix_path - closed).norm());
        }
        report.push(Check::new("qutrit-closed-form", worst, tol::CONJUGATION));

        let mut polar_worst = 0.0f64;
        for _ in 0..50 {
            let a = rng.range(0.0, std::f64::consts::FRAC_PI_2);
            let x = Complex64::from_polar(a.cos(), rng.angle());
            let y = Complex64::from_polar(a.sin(), rng.angle());
            let e12 = polar::transition_phase_operator(x, y)?;
            polar_worst = polar_worst.max(e12.unitarity_residual());
            polar_worst = polar_worst.max(polar::decomposition_residual(x, y)?);
        }
        report.push(Check::new(
            "polar-decomposition",
            polar_worst,
            tol::ALGEBRAIC,
        ));
    }

    report.elapsed = Some(started.elapsed());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_small_dims() {
        for dim in [2usize, 3, 5] {
            let report = run(PrimeDim::new(dim).unwrap()).unwrap();
            assert!(report.passed(), "d={dim}: {} failures", report.failures());
        }
    }

    #[test]
    fn suite_passes_d7() {
        let report = run(PrimeDim::new(7).unwrap()).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn d2_report_notes_sigma_y_target() {
        let report = run(PrimeDim::new(2).unwrap()).unwrap();
        let ladder = report
            .checks
            .iter()
            .find(|c| c.name == "quadratic-phase-ladder")
            .expect("ladder check present");
        assert!(ladder
            .note
            .as_deref()
            .unwrap_or("")
            .contains("i*shift*clock"));
    }

    #[test]
    fn deterministic_residuals() {
        let d = PrimeDim::new(3).unwrap();
        let a = run(d).unwrap();
        let b = run(d).unwrap();
        for (ca, cb) in a.checks.iter().zip(&b.checks) {
            assert_eq!(ca.name, cb.name);
            assert_eq!(ca.residual.to_bits(), cb.residual.to_bits());
        }
    }
}
