use hoi_core::densitycube::{
    apply_cvec_transform, canonical_cubes, constant_t, constant_t_prime, counterexample_cv,
    cube_inner, cvec_to_cube, dc_parameter_count, embed_hermitian, embed_quantum, hyperdecohere,
    is_hermitian_cube, is_physical_basis, min_inner_against_embedded, random_hermitian_cube,
    split_orders, validate_transformation, CVec, Cube, QutritDensity,
};
use hoi_core::numerics::c64;
use hoi_core::sampling::{random_density, random_simplex};
use hoi_core::{is_unitary, ComplexMatrix};

use super::{max_of, Claim, ClaimError, Ctx, Eval, Outcome, Suite, Tolerance};
use crate::report::Provenance;

const PAIRS: usize = 1000;

fn orthonormal(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let cubes = canonical_cubes().cubes;
    let mut worst = 0.0f64;
    for a in 0..3 {
        for b in 0..3 {
            let delta = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((cube_inner(&cubes[a], &cubes[b]) - c64(delta, 0.0)).norm());
        }
    }
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

fn canonical_hermitian(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let s = canonical_cubes();
    let all = s
        .cubes
        .iter()
        .cloned()
        .chain(s.rho.iter().map(cvec_to_cube))
        .all(|c| is_hermitian_cube(&c, ctx.tol).is_valid());
    Ok(Outcome::flag(all, true))
}

fn c45_not_hermitian(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let fails = [3, 4].iter().all(|&n| {
        let check = is_hermitian_cube(&cvec_to_cube(&CVec::basis(n)), ctx.tol);
        check.fails(2)
    });
    Ok(Outcome::flag(fails, true))
}

fn cubes_of(vs: &[CVec; 3]) -> [Cube; 3] {
    std::array::from_fn(|i| cvec_to_cube(&vs[i]))
}

fn physical_d0(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::flag(is_physical_basis(&cubes_of(&canonical_cubes().q), ctx.tol), true))
}

fn physical_d(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::flag(is_physical_basis(&cubes_of(&canonical_cubes().rho), ctx.tol), true))
}

fn t_unitary(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let t = constant_t();
    let m = t.matrix();
    let residual = m.dagger().matmul(m)?.max_abs_diff(&ComplexMatrix::identity(5));
    Ok(Outcome::close(residual, 0.0, ctx.tol))
}

fn t_maps_basis(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let s = canonical_cubes();
    let t = constant_t();
    let worst = max_of((0..3).map(|i| apply_cvec_transform(&t, &s.q[i]).max_abs_diff(&s.rho[i])));
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

/// `{q_i}`, `{rho_i}` and a few mixtures of them.
fn transformation_samples(ctx: &mut Ctx) -> Vec<CVec> {
    let s = canonical_cubes();
    let mut samples: Vec<CVec> = s.q.iter().chain(&s.rho).cloned().collect();
    for _ in 0..20 {
        let w = random_simplex(6, &mut ctx.rng);
        let mix = samples[..6]
            .iter()
            .zip(&w)
            .fold(CVec::from_real([0.0; 5]), |acc, (v, &wi)| acc.add(&v.scale(c64(wi, 0.0))));
        samples.push(mix);
    }
    samples
}

fn t_prime_axioms(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let samples = transformation_samples(ctx);
    let report = validate_transformation(&constant_t_prime(), &samples, ctx.tol);
    let t_report = validate_transformation(&constant_t(), &samples, ctx.tol);
    Ok(Outcome::flag(report.satisfies_axioms() && t_report.all_pass(), true))
}

fn t_prime_breaks_hermiticity(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let samples = transformation_samples(ctx);
    let report = validate_transformation(&constant_t_prime(), &samples, ctx.tol);
    // sample 3 is rho_1
    let preserved = report.preserves_hermiticity || !report.hermiticity_failures.contains(&3);
    Ok(Outcome::flag(preserved, false))
}

fn t_prime_image(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let image = apply_cvec_transform(&constant_t_prime(), &canonical_cubes().rho[0]);
    let displayed = [
        c64(0.9, 0.0),
        c64(0.03, -0.2),
        c64(0.03, 0.2),
        c64(0.09, 0.0),
        c64(-0.2, 0.0),
    ];
    Ok(Outcome::vector(&image.0, &displayed, ctx.tol))
}

fn random_qutrit(ctx: &mut Ctx) -> Result<QutritDensity, ClaimError> {
    Ok(QutritDensity::new(random_density(3, &mut ctx.rng))?)
}

fn embedding_isometry(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut worst = 0.0f64;
    for _ in 0..PAIRS {
        let rho = random_qutrit(ctx)?;
        let sigma = random_qutrit(ctx)?;
        let qt = rho.matrix().hs_inner(sigma.matrix());
        let dc = cube_inner(&embed_quantum(&rho), &embed_quantum(&sigma));
        worst = worst.max((qt - dc).norm());
    }
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

fn decohere_embed_identity(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut worst = 0.0f64;
    for _ in 0..PAIRS {
        let rho = random_qutrit(ctx)?;
        worst = worst.max(hyperdecohere(&embed_quantum(&rho)).max_abs_diff(rho.matrix()));
    }
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

fn adjoint(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let d: Vec<Cube> = canonical_cubes().rho.iter().map(cvec_to_cube).collect();
    let mut worst = 0.0f64;
    for k in 0..PAIRS {
        let cube = if k % 2 == 0 {
            let w = random_simplex(3, &mut ctx.rng);
            d.iter().zip(&w).fold(Cube::zero(), |acc, (c, &wi)| acc.add(&c.scale(wi)))
        } else {
            random_hermitian_cube(&mut ctx.rng)
        };
        let sigma = random_density(3, &mut ctx.rng);
        let lhs = hyperdecohere(&cube).hs_inner(&sigma);
        let rhs = cube_inner(&cube, &embed_hermitian(&sigma));
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

fn decohere_rho1(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let out = hyperdecohere(&cvec_to_cube(&canonical_cubes().rho[0]));
    let diag = out.max_abs_diff(&ComplexMatrix::diag_real(&[0.0, 0.5, 0.5]));
    Ok(Outcome::close(diag, 0.0, ctx.tol))
}

fn split(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (third, _) = split_orders(&embed_quantum(&random_qutrit(ctx)?));
        worst = worst.max(third.max_abs_diff(&Cube::zero()));
        let cube = random_hermitian_cube(&mut ctx.rng);
        let (a, b) = split_orders(&cube);
        worst = worst.max(a.add(&b).max_abs_diff(&cube));
    }
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

fn third_order_rho1(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let (third, _) = split_orders(&cvec_to_cube(&canonical_cubes().rho[0]));
    let target = 1.0 / (2.0 * 3f64.sqrt());
    let perms = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
    let worst = max_of(perms.iter().map(|&[i, j, k]| (third.get(i, j, k).norm() - target).abs()));
    Ok(Outcome::close(worst, 0.0, ctx.tol))
}

fn cv_inner(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::close(counterexample_cv().inner, -55.0 / 256.0, ctx.tol))
}

fn cv_positive(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    let cv = counterexample_cv();
    let c = min_inner_against_embedded(&cvec_to_cube(&cv.c), PAIRS, &mut ctx.rng);
    let v = min_inner_against_embedded(&cvec_to_cube(&cv.v), PAIRS, &mut ctx.rng);
    Ok(Outcome::at_least(c.min(v), 0.0, ctx.tol))
}

fn params(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::count(dc_parameter_count(200, &mut ctx.rng).hermitian_dimension, 11))
}

fn params_normalized(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::count(dc_parameter_count(200, &mut ctx.rng).normalized_parameters, 10))
}

fn t_prime_unitary(ctx: &mut Ctx) -> Result<Outcome, ClaimError> {
    Ok(Outcome::flag(is_unitary(constant_t_prime().matrix(), ctx.tol), true))
}

pub(super) fn claims() -> Vec<Claim> {
    let claim = |id, description, location, provenance, tolerance, eval: Eval| Claim {
        id,
        suite: Suite::Dc,
        description,
        location,
        provenance,
        tolerance,
        eval,
    };
    use Provenance::{Derived, Paper, Trivial};
    use Tolerance::{Default, Exact, Fixed};
    vec![
        claim("DC-ORTHO", "max |(rho^(a), rho^(b)) - delta_ab| over the displayed pure states",
            "Density cubes: pure states", Paper, Fixed(1e-12), orthonormal),
        claim("DC-HERM", "displayed states and D satisfy all four Hermiticity conditions",
            "Density cubes: Hermitian cubes", Paper, Default, canonical_hermitian),
        claim("DC-C45-NONHERM", "C^(4) and C^(5) alone fail the cyclic-conjugate condition",
            "Density cubes: C-basis", Paper, Default, c45_not_hermitian),
        claim("DC-PHYS-D0", "D0 = {q1, q2, q3} is a physical basis",
            "Density cubes: C-basis", Trivial, Default, physical_d0),
        claim("DC-PHYS-D", "D = {rho1, rho2, rho3} is a physical basis",
            "Density cubes: C-basis", Derived, Default, physical_d),
        claim("DC-T-UNITARY", "max |T^dagger T - I|",
            "Density cubes: transformation T", Paper, Default, t_unitary),
        claim("DC-T-MAP", "max |T q_i - rho_i|",
            "Density cubes: transformation T", Paper, Fixed(1e-12), t_maps_basis),
        claim("DC-TP-UNITARY", "T' is unitary",
            "Density cubes: ill-defined transformations", Paper, Default, t_prime_unitary),
        claim("DC-TP-AXIOMS", "T' meets the transformation axioms (and T meets them plus Hermiticity)",
            "Density cubes: ill-defined transformations", Paper, Default, t_prime_axioms),
        claim("DC-TP-NONHERM", "T' keeps every sampled Hermitian state Hermitian",
            "Density cubes: ill-defined transformations", Paper, Default, t_prime_breaks_hermiticity),
        claim("DC-TP-IMAGE", "T' rho1 against the rounded displayed image",
            "Density cubes: ill-defined transformations", Paper, Fixed(5e-2), t_prime_image),
        claim("DC-EMBED-ISO", "max |(rho, sigma)_QT - (E rho, E sigma)_DC| over 1000 pairs",
            "Density cubes: embedding of quantum theory", Paper, Fixed(1e-12), embedding_isometry),
        claim("DC-DE-ID", "max |D[E[rho]] - rho| over 1000 qutrits",
            "Density cubes: hyper-decoherence", Paper, Fixed(1e-12), decohere_embed_identity),
        claim("DC-ADJOINT", "max |(D[rho], sigma)_QT - (rho, E[sigma])_DC| over 1000 pairs",
            "Density cubes: hyper-decoherence", Paper, Fixed(1e-12), adjoint),
        claim("DC-HD-RHO1", "max |D[rho1] - diag(0, 1/2, 1/2)|",
            "Density cubes: hyper-decoherence", Derived, Fixed(1e-12), decohere_rho1),
        claim("DC-SPLIT", "embedded states have no third-order part; split parts sum back",
            "Density cubes: order decomposition", Paper, Fixed(1e-12), split),
        claim("DC-THIRD-ORDER", "rho1 carries third-order entries of modulus 1/(2 sqrt 3)",
            "Density cubes: order decomposition", Derived, Fixed(1e-12), third_order_rho1),
        claim("DC-CV", "(c, v) for the two competing states",
            "Density cubes: ill-defined state space", Derived, Fixed(1e-12), cv_inner),
        claim("DC-CV-POS", "min of (c, E rho) and (v, E rho) over 1000 random qutrits",
            "Density cubes: ill-defined state space", Derived, Fixed(1e-12), cv_positive),
        claim("DC-PARAMS", "real dimension of the Hermitian-cube space",
            "Quartic quantum theory: parameter counting", Paper, Exact, params),
        claim("DC-PARAMS-NORM", "real parameters of a normalized three-level cube",
            "Density cubes: Hermitian cubes", Paper, Exact, params_normalized),
    ]
}
