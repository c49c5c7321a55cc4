use hoi_core::collision::{
    dc_associate, dc_collision_error, dc_oracle, dc_pair_inner, qt_collision_error, qt_oracle,
    qutrit_overlap, uniform_qutrit, TaggedDCState, TritBitFunction,
};
use hoi_core::densitycube::{cube_inner, is_hermitian_cube};
use hoi_core::sampling::{random_pure_state, SampleRng};
use rand::Rng;

use super::{max_of, non_constant_functions, Claim, ClaimError, Ctx, Eval, Outcome, Suite, Tolerance};
use crate::report::Provenance;

const TRIALS: usize = 1000;

fn random_tagged(rng: &mut SampleRng) -> TaggedDCState {
    let v = random_pure_state(3, rng);
    TaggedDCState::new([v[0], v[1], v[2]], rng.random_range(0..3)).expect("unit vector")
}

fn start() -> TaggedDCState {
    TaggedDCState::new(uniform_qutrit(), 0).expect("unit vector")
}

fn quantum_error(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::close(qt_collision_error(), 1.0 / 9.0, ctx.tol))
}

fn dual_path(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let s = start();
    let mut gaps: Vec<f64> = non_constant_functions()
        .map(|f| dc_pair_inner(&s, &dc_oracle(f, &s)).discrepancy())
        .collect();
    for _ in 0..TRIALS {
        let a = random_tagged(&mut ctx.rng);
        let b = random_tagged(&mut ctx.rng);
        gaps.push(dc_pair_inner(&a, &b).discrepancy());
    }
    Ok(Outcome::close(max_of(gaps), 0.0, ctx.tol))
}

fn dc_error(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::close(dc_collision_error().contraction, 1.0 / 32.0, ctx.tol))
}

fn advantage(_: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::above(qt_collision_error() - dc_collision_error().contraction, 0.05))
}

fn positivity(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let min = (0..TRIALS)
        .map(|_| {
            let a = random_tagged(&mut ctx.rng);
            let b = random_tagged(&mut ctx.rng);
            dc_pair_inner(&a, &b).contraction
        })
        .fold(f64::INFINITY, f64::min);
    Ok(Outcome::at_least(min, 0.0, ctx.tol))
}

fn oracle_outputs(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut ok = true;
    for _ in 0..50 {
        let s = random_tagged(&mut ctx.rng);
        for f in TritBitFunction::all() {
            let q = qt_oracle(f, s.psi());
            ok &= (qutrit_overlap(&q, &q).re - 1.0).abs() <= ctx.tol;
            let cube = dc_associate(&dc_oracle(f, &s));
            ok &= is_hermitian_cube(&cube, ctx.tol).is_valid();
            ok &= (cube_inner(&cube, &cube).re - 1.0).abs() <= ctx.tol;
        }
    }
    Ok(Outcome::flag(ok, true))
}

fn constant_functions(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let s = start();
    let phi = uniform_qutrit();
    let worst = max_of(TritBitFunction::all().filter(|f| f.all_equal()).flat_map(|f| {
        [
            (dc_pair_inner(&s, &dc_oracle(f, &s)).contraction - 1.0).abs(),
            (qutrit_overlap(&phi, &qt_oracle(f, &phi)).norm_sqr() - 1.0).abs(),
        ]
    }));
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

pub(super) fn claims() -> Vec<Claim> {
    let claim = |id, description, location, provenance, tolerance, eval: Eval| Claim {
        id,
        suite: Suite::Collision,
        description,
        location,
        provenance,
        tolerance,
        eval,
    };
    use Provenance::{Derived, Paper, Trivial};
    use Tolerance::{Default, Exact, Fixed};
    vec![
        claim("COLL-QT-ERR", "worst-case single-query error of the qutrit oracle",
            "Density cubes: three collision problem", Paper, Fixed(1e-12), quantum_error),
        claim("COLL-DUAL", "max |tensor contraction - closed form| over random tagged pairs",
            "Density cubes: three collision problem", Derived, Fixed(1e-12), dual_path),
        claim("COLL-ERR", "worst-case single-query error of the density-cube oracle",
            "Density cubes: three collision problem", Paper, Fixed(1e-12), dc_error),
        claim("COLL-ADV", "quantum error minus density-cube error",
            "Density cubes: three collision problem", Paper, Exact, advantage),
        claim("COLL-POS", "min pairing between random tagged cubes",
            "Density cubes: three collision problem", Derived, Fixed(1e-12), positivity),
        claim("COLL-ORACLE", "both oracles keep states normalized; cube outputs stay Hermitian",
            "Density cubes: three collision problem", Trivial, Default, oracle_outputs),
        claim("COLL-CONST", "constant functions leave the start state unchanged (max deviation)",
            "Density cubes: three collision problem", Trivial, Fixed(1e-12), constant_functions),
    ]
}
