use hoi_core::numerics::{eig_hermitian, tensor_product};
use hoi_core::qqt::{
    effect_range, effect_range_witnesses, is_qqt_effect, is_qqt_state, qqt_hyperdecohere,
    qqt_interference, qqt_parameter_count, qqt_slit_experiment, qqt_swap_counterexample,
    random_qqt_state, sampled_effect_range, QqtState, QqtTheory, SlitVariant,
};
use hoi_core::sampling::{haar_unitary, random_density, random_hermitian, random_simplex};
use hoi_core::sorkin::{trace_pairing, validate_experiment};
use hoi_core::ComplexMatrix;

use super::{Claim, ClaimError, Ctx, Eval, Outcome, Suite, Tolerance};
use crate::report::Provenance;

fn superquantum(n: usize, ctx: &Ctx) -> Result<Outcome, ClaimError> {
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let value = qqt_interference(n, SlitVariant::SuperQuantum)?;
    Ok(Outcome::close(value, sign * (1.0 - n as f64), ctx.tol))
}

fn i2(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    superquantum(2, ctx)
}

fn i3(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    superquantum(3, ctx)
}

fn i4(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    superquantum(4, ctx)
}

fn quantum_variant(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut worst = 0.0f64;
    for n in 2..=4 {
        worst = worst.max(qqt_interference(n, SlitVariant::Quantum)?.abs());
    }
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

fn validate(_: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut violations = 0;
    for n in 2..=5 {
        for variant in [SlitVariant::SuperQuantum, SlitVariant::Quantum] {
            let exp = qqt_slit_experiment(n, variant)?;
            violations += validate_experiment(&exp, &QqtTheory { n }, 1e-12).len();
        }
    }
    Ok(Outcome::count(violations, 0))
}

fn pure_rejected(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut accepted = false;
    for n in [2, 3] {
        accepted |= is_qqt_state(&ComplexMatrix::basis_projector(n * n, 0), n, ctx.tol)?;
    }
    Ok(Outcome::flag(accepted, false))
}

fn mixed_accepted(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut accepted = true;
    for n in [2, 3] {
        let d = n * n;
        let mixed = ComplexMatrix::identity(d).scale_real(1.0 / d as f64);
        accepted &= is_qqt_state(&mixed, n, ctx.tol)?;
    }
    Ok(Outcome::flag(accepted, true))
}

fn singleton_effect(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut accepted = true;
    for n in [2, 3] {
        let e = ComplexMatrix::basis_projector(n * n, 0).scale_real(n as f64);
        accepted &= is_qqt_effect(&e, n, ctx.tol)?;
    }
    Ok(Outcome::flag(accepted, true))
}

/// Largest amount by which sampling escapes the closed-form range, or by which the
/// witness states miss its endpoints.
fn effect_oracle(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut worst = 0.0f64;
    for n in [2, 3] {
        let d = n * n;
        let mut effects = vec![
            ComplexMatrix::basis_projector(d, 0).scale_real(n as f64),
            ComplexMatrix::identity(d).scale_real(2.0),
        ];
        for _ in 0..2 {
            effects.push(random_hermitian(d, &mut ctx.rng).scale_real(0.5));
        }
        for e in &effects {
            let exact = effect_range(e, n)?;
            let sampled = sampled_effect_range(e, n, 10_000, &mut ctx.rng);
            worst = worst.max(exact.min - sampled.min).max(sampled.max - exact.max);
            let (lo, hi) = effect_range_witnesses(e, n)?;
            if !is_qqt_state(&lo, n, 1e-9)? || !is_qqt_state(&hi, n, 1e-9)? {
                worst = f64::INFINITY;
            }
            worst = worst
                .max((trace_pairing(e, &lo) - exact.min).abs())
                .max((trace_pairing(e, &hi) - exact.max).abs());
        }
    }
    Ok(Outcome::close(worst.max(0.0), 0.0, ctx.tol))
}

fn unitary_closure(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut failures = 0;
    for n in [2, 3] {
        let d = n * n;
        for _ in 0..500 {
            let s = random_qqt_state(n, 3, &mut ctx.rng);
            let u = haar_unitary(d, &mut ctx.rng);
            let rotated = &(&u * &s) * &u.dagger();
            let w = random_simplex(2, &mut ctx.rng);
            let mixed = &rotated.scale_real(w[0]) + &s.scale_real(w[1]);
            if !is_qqt_state(&rotated, n, 1e-10)? || !is_qqt_state(&mixed, n, 1e-10)? {
                failures += 1;
            }
        }
    }
    Ok(Outcome::count(failures, 0))
}

fn k2(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::count(qqt_parameter_count(2, &mut ctx.rng)?, 16))
}

fn k3(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::count(qqt_parameter_count(3, &mut ctx.rng)?, 81))
}

fn swap(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::close(qqt_swap_counterexample(2)?.lambda_max, 1.0, ctx.tol))
}

fn swap_valid(_: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut any_valid = false;
    for n in [2, 3] {
        let r = qqt_swap_counterexample(n)?;
        any_valid |= r.is_valid || !r.marginals_valid_before_swap || !r.swap_is_unitary;
    }
    Ok(Outcome::flag(any_valid, false))
}

fn hyperdecoherence(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut worst = 0.0f64;
    for n in [2, 3] {
        let flat = ComplexMatrix::identity(n).scale_real(1.0 / n as f64);
        for _ in 0..100 {
            let rho = random_density(n, &mut ctx.rng);
            let lifted = QqtState::new(tensor_product(&rho, &flat), n)?;
            worst = worst.max(qqt_hyperdecohere(&lifted).max_abs_diff(&rho));

            let s = QqtState::new(random_qqt_state(n, 2, &mut ctx.rng), n)?;
            let out = qqt_hyperdecohere(&s);
            let min_eig = eig_hermitian(&out)?.min_eigenvalue();
            worst = worst.max((out.trace().re - 1.0).abs()).max(-min_eig);
        }
    }
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

pub(super) fn claims() -> Vec<Claim> {
    let claim = |id, description, location, provenance, tolerance, eval: Eval| Claim {
        id,
        suite: Suite::Qqt,
        description,
        location,
        provenance,
        tolerance,
        eval,
    };
    use Provenance::{Derived, Paper, Trivial};
    use Tolerance::{Default, Exact, Fixed};
    vec![
        claim("QQT-I2", "I2 with singleton effects N|ii><ii| at the witness state, N = 2",
            "Quartic quantum theory: higher-order interference", Derived, Fixed(1e-10), i2),
        claim("QQT-I3", "I3 with singleton effects N|ii><ii| at the witness state, N = 3",
            "Quartic quantum theory: higher-order interference", Derived, Fixed(1e-10), i3),
        claim("QQT-I4", "I4 with singleton effects N|ii><ii| at the witness state, N = 4",
            "Quartic quantum theory: higher-order interference", Derived, Fixed(1e-10), i4),
        claim("QQT-QUANTUM", "max |I_N| with lifted quantum slit effects, N = 2..4",
            "Quartic quantum theory: higher-order interference", Derived, Fixed(1e-12), quantum_variant),
        claim("QQT-VALIDATE", "slit-blocking violations for both effect choices, N = 2..5",
            "Quartic quantum theory: higher-order interference", Paper, Exact, validate),
        claim("QQT-STATE-PURE", "|00><00| is a QQT state (N = 2, 3)",
            "Quartic quantum theory: states", Trivial, Default, pure_rejected),
        claim("QQT-STATE-MIXED", "I/N^2 is a QQT state (N = 2, 3)",
            "Quartic quantum theory: states", Trivial, Default, mixed_accepted),
        claim("QQT-EFFECT-N00", "N|00><00| is a QQT effect (N = 2, 3)",
            "Quartic quantum theory: effects", Paper, Default, singleton_effect),
        claim("QQT-EFFECT-ORACLE", "closed-form effect range against 10^4 sampled extreme states",
            "Quartic quantum theory: effects", Derived, Fixed(1e-9), effect_oracle),
        claim("QQT-UNITARY", "states leaving the state space under unitaries or mixing",
            "Quartic quantum theory: transformations", Paper, Exact, unitary_closure),
        claim("QQT-K2", "real parameters of a two-level system",
            "Quartic quantum theory: parameter counting", Paper, Exact, k2),
        claim("QQT-K3", "real parameters of a three-level system",
            "Quartic quantum theory: parameter counting", Paper, Exact, k3),
        claim("QQT-SWAP", "largest eigenvalue of the swapped marginal, N = 2",
            "Quartic quantum theory: composite systems", Paper, Default, swap),
        claim("QQT-SWAP-VALID", "swapped marginal of valid product inputs is a QQT state",
            "Quartic quantum theory: composite systems", Paper, Exact, swap_valid),
        claim("QQT-HD", "partial trace recovers lifted qutrits and keeps states positive",
            "Quartic quantum theory: hyper-decoherence", Derived, Fixed(1e-12), hyperdecoherence),
    ]
}
