use hoi_core::sampling::random_density;
use hoi_core::sorkin::{
    quantum_slit_experiment, sorkin_i, sorkin_i2_expanded, sorkin_i3_expanded,
    uniform_superposition_effect, validate_experiment, QuantumTheory, SubsetMask,
};
use hoi_core::ComplexMatrix;

use super::{max_of, Claim, ClaimError, Ctx, Outcome, Suite, Tolerance};
use crate::report::Provenance;

const STATES: usize = 100;

fn max_quantum_term(n: usize, ctx: &mut Ctx) -> Result<f64, ClaimError> {
    let exp = quantum_slit_experiment(n, &uniform_superposition_effect(n))?;
    let th = QuantumTheory::new(n);
    let mut worst = 0.0f64;
    for _ in 0..STATES {
        let s = random_density(n, &mut ctx.rng);
        worst = worst.max(sorkin_i(n, &exp, &s, &th)?.value.abs());
    }
    Ok(worst)
}

fn i2_uniform(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let e = uniform_superposition_effect(2);
    let exp = quantum_slit_experiment(2, &e)?;
    let value = sorkin_i(2, &exp, &e, &QuantumTheory::new(2))?.value;
    Ok(Outcome::close(value, 0.5, ctx.tol))
}

fn i3_quantum(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::close(max_quantum_term(3, ctx)?, 0.0, ctx.tol))
}

fn i4_quantum(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::close(max_quantum_term(4, ctx)?, 0.0, ctx.tol))
}

/// Five slits, random screen effect and random state.
fn hereditary(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let n = 5;
    let th = QuantumTheory::new(n);
    let mut worst = 0.0f64;
    for _ in 0..STATES {
        let e = random_density(n, &mut ctx.rng);
        let exp = quantum_slit_experiment(n, &e)?;
        let s = random_density(n, &mut ctx.rng);
        worst = worst.max(sorkin_i(n, &exp, &s, &th)?.value.abs());
    }
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

fn expansion(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut diffs = Vec::new();
    for n in [2, 3] {
        let e = random_density(n, &mut ctx.rng);
        let exp = quantum_slit_experiment(n, &e)?;
        let th = QuantumTheory::new(n);
        for _ in 0..STATES {
            let s = random_density(n, &mut ctx.rng);
            let sum = sorkin_i(n, &exp, &s, &th)?.value;
            let written = if n == 2 {
                sorkin_i2_expanded(&exp, &s, &th)
            } else {
                sorkin_i3_expanded(&exp, &s, &th)
            };
            diffs.push((sum - written).abs());
        }
    }
    Ok(Outcome::close(max_of(diffs), 0.0, ctx.tol))
}

fn validate_quantum(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut violations = 0;
    for n in 2..=5 {
        let exp = quantum_slit_experiment(n, &random_density(n, &mut ctx.rng))?;
        violations += validate_experiment(&exp, &QuantumTheory::new(n), 1e-12).len();
    }
    Ok(Outcome::count(violations, 0))
}

fn zero_effect(_: &mut Ctx) -> Result<Outcome, ClaimError> {
    let n = 3;
    let exp = quantum_slit_experiment(n, &uniform_superposition_effect(n))?
        .with_effect(SubsetMask::singleton(0), ComplexMatrix::zeros(n, n));
    Ok(Outcome::count(validate_experiment(&exp, &QuantumTheory::new(n), 1e-12).len(), 1))
}

pub(super) fn claims() -> Vec<Claim> {
    let claim = |id, description, location, provenance, tolerance, eval| Claim {
        id,
        suite: Suite::Sorkin,
        description,
        location,
        provenance,
        tolerance,
        eval,
    };
    vec![
        claim(
            "SK-I2-QT",
            "quantum two-slit term at the uniform superposition",
            "Interference hierarchy: second order",
            Provenance::Derived,
            Tolerance::Fixed(1e-12),
            i2_uniform as super::Eval,
        ),
        claim(
            "SK-I3-QT",
            "max |I3| of a quantum three-slit experiment over 100 random states",
            "Interference hierarchy: quantum theory",
            Provenance::Paper,
            Tolerance::Fixed(1e-12),
            i3_quantum,
        ),
        claim(
            "SK-I4-QT",
            "max |I4| of a quantum four-slit experiment over 100 random states",
            "Interference hierarchy: quantum theory",
            Provenance::Paper,
            Tolerance::Fixed(1e-12),
            i4_quantum,
        ),
        claim(
            "SK-HEREDITARY",
            "max |I5| for random quantum screens and states",
            "Interference hierarchy: vanishing propagates upward",
            Provenance::Paper,
            Tolerance::Fixed(1e-12),
            hereditary,
        ),
        claim(
            "SK-EXPANSION",
            "subset sum agrees with the written-out I2 and I3",
            "Interference hierarchy: definition",
            Provenance::Trivial,
            Tolerance::Fixed(1e-14),
            expansion,
        ),
        claim(
            "SK-VALIDATE-QT",
            "slit-blocking violations in quantum experiments with 2 to 5 slits",
            "Interference hierarchy: slit conditions",
            Provenance::Trivial,
            Tolerance::Exact,
            validate_quantum,
        ),
        claim(
            "SK-ZERO-EFFECT",
            "violations after zeroing the slit-1 effect of a three-slit experiment",
            "Interference hierarchy: slit conditions",
            Provenance::Derived,
            Tolerance::Exact,
            zero_effect,
        ),
    ]
}
