//! Quartic quantum theory.
//!
//! An N-level system is carried by an `N^2`-dimensional quantum system. States are
//! mixtures of unitary images of `(1/N) I (x) |0><0|`; these are exactly the density
//! matrices whose largest eigenvalue is at most `1/N`. Effects are all Hermitian
//! operators whose pairing with every state lies in `[0, 1]`. The extreme states are
//! `(1/N)` times rank-N projectors, so an effect's range over the state space is
//! `[sum of its N smallest eigenvalues, sum of its N largest] / N`.

use rand::Rng;
use thiserror::Error;

use crate::numerics::{
    c64, eig_hermitian, factor_permutation, is_unitary, numerical_rank, partial_trace,
    tensor_product, ComplexMatrix, NumericsError, TracedFactor, DEFAULT_TOL,
};
use crate::sampling::{haar_unitary, random_orthonormal, random_simplex};
use crate::sorkin::{sorkin_i, trace_pairing, SlitExperiment, SorkinError, SubsetMask, Theory};

/// Largest level count accepted by the slit-experiment constructors.
pub const MAX_LEVELS: usize = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QqtError {
    #[error("dimension mismatch: expected {expected}x{expected}, got {rows}x{cols}")]
    DimensionMismatch { expected: usize, rows: usize, cols: usize },
    #[error("level count {0} out of range")]
    LevelCount(usize),
    #[error("not a QQT state: {0}")]
    NotAState(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Sorkin(#[from] SorkinError),
}

fn check_dims(m: &ComplexMatrix, n: usize) -> Result<(), QqtError> {
    let d = n * n;
    if m.rows() != d || m.cols() != d {
        return Err(QqtError::DimensionMismatch {
            expected: d,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(())
}

/// Hermitian, unit trace and `lambda_max <= 1/N + tol`.
pub fn is_qqt_state(rho: &ComplexMatrix, n: usize, tol: f64) -> Result<bool, QqtError> {
    check_dims(rho, n)?;
    if !rho.is_hermitian(tol) || (rho.trace() - c64(1.0, 0.0)).norm() > tol {
        return Ok(false);
    }
    let eig = eig_hermitian(rho)?;
    Ok(eig.max_eigenvalue() <= 1.0 / n as f64 + tol && eig.min_eigenvalue() >= -tol)
}

/// A validated QQT state.
#[derive(Debug, Clone, PartialEq)]
pub struct QqtState {
    n: usize,
    rho: ComplexMatrix,
}

impl QqtState {
    pub fn new(rho: ComplexMatrix, n: usize) -> Result<Self, QqtError> {
        if !is_qqt_state(&rho, n, DEFAULT_TOL)? {
            let lmax = eig_hermitian(&rho).map(|e| e.max_eigenvalue()).unwrap_or(f64::NAN);
            return Err(QqtError::NotAState(format!(
                "lambda_max = {lmax}, bound 1/{n}, trace = {}",
                rho.trace()
            )));
        }
        Ok(Self { n, rho })
    }

    pub fn levels(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn lambda_max(&self) -> f64 {
        eig_hermitian(&self.rho).expect("validated Hermitian").max_eigenvalue()
    }
}

/// A validated QQT effect.
#[derive(Debug, Clone, PartialEq)]
pub struct QqtEffect {
    n: usize,
    e: ComplexMatrix,
}

impl QqtEffect {
    pub fn new(e: ComplexMatrix, n: usize) -> Result<Option<Self>, QqtError> {
        Ok(is_qqt_effect(&e, n, DEFAULT_TOL)?.then_some(Self { n, e }))
    }

    pub fn levels(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.e
    }
}

/// Minimum and maximum of `Tr(e s)` over all QQT states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectRange {
    pub min: f64,
    pub max: f64,
}

/// Closed-form range of an effect over the QQT state space.
pub fn effect_range(e: &ComplexMatrix, n: usize) -> Result<EffectRange, QqtError> {
    check_dims(e, n)?;
    let eig = eig_hermitian(e)?;
    let lam = &eig.eigenvalues;
    let nf = n as f64;
    Ok(EffectRange {
        max: lam[..n].iter().sum::<f64>() / nf,
        min: lam[lam.len() - n..].iter().sum::<f64>() / nf,
    })
}

/// The extreme states attaining the minimum and maximum of [`effect_range`]:
/// `(1/N)` times the projector onto the bottom / top N eigenvectors.
pub fn effect_range_witnesses(
    e: &ComplexMatrix,
    n: usize,
) -> Result<(ComplexMatrix, ComplexMatrix), QqtError> {
    check_dims(e, n)?;
    let eig = eig_hermitian(e)?;
    let d = n * n;
    let v = &eig.eigenvectors;
    let proj = |cols: std::ops::Range<usize>| {
        ComplexMatrix::from_fn(d, d, |r, c| {
            cols.clone().map(|k| v.get(r, k) * v.get(c, k).conj()).sum::<crate::C64>() / n as f64
        })
    };
    Ok((proj(d - n..d), proj(0..n)))
}

/// `0 <= Tr(e s) <= 1` for every QQT state `s`, within `tol`.
pub fn is_qqt_effect(e: &ComplexMatrix, n: usize, tol: f64) -> Result<bool, QqtError> {
    check_dims(e, n)?;
    let range = effect_range(e, n)?;
    Ok(range.min >= -tol && range.max <= 1.0 + tol)
}

/// Quartic quantum theory on N levels, paired by `Re Tr(e s)`.
#[derive(Debug, Clone, Copy)]
pub struct QqtTheory {
    pub n: usize,
}

impl Theory for QqtTheory {
    type State = ComplexMatrix;
    type Effect = ComplexMatrix;

    fn pair(&self, effect: &ComplexMatrix, state: &ComplexMatrix) -> f64 {
        trace_pairing(effect, state)
    }

    fn is_state(&self, state: &ComplexMatrix) -> bool {
        is_qqt_state(state, self.n, DEFAULT_TOL).unwrap_or(false)
    }
}

/// `(1/N) I (x) |0><0|`
pub fn s_initial(n: usize) -> ComplexMatrix {
    tensor_product(
        &ComplexMatrix::identity(n),
        &ComplexMatrix::basis_projector(n, 0),
    )
    .scale_real(1.0 / n as f64)
}

/// `(1/N) sum_i |ii><ii|`: a state with flat spectrum on the diagonal pairs.
pub fn qqt_witness_state(n: usize) -> QqtState {
    let d = n * n;
    let rho = ComplexMatrix::from_fn(d, d, |r, c| {
        if r == c && r / n == r % n {
            c64(1.0 / n as f64, 0.0)
        } else {
            c64(0.0, 0.0)
        }
    });
    QqtState::new(rho, n).expect("witness is a valid QQT state")
}

/// Which single-slit effects to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlitVariant {
    /// `e_i = N |ii><ii|`, an effect with no quantum counterpart.
    SuperQuantum,
    /// `e_{i} = |i><i| (x) I`, the quantum slit effect lifted to QQT.
    Quantum,
}

/// `sum_{i in I} |i><i| (x) I`
fn lifted_slit_projector(n: usize, subset: SubsetMask) -> ComplexMatrix {
    let d = n * n;
    ComplexMatrix::from_fn(d, d, |r, c| {
        if r == c && subset.contains(r / n) {
            c64(1.0, 0.0)
        } else {
            c64(0.0, 0.0)
        }
    })
}

/// The N-slit QQT experiment with faces `F_i = {(1/N) |i><i| (x) I}` and screen
/// effect `E = I`.
pub fn qqt_slit_experiment(
    n: usize,
    variant: SlitVariant,
) -> Result<SlitExperiment<ComplexMatrix, ComplexMatrix>, QqtError> {
    if !(2..=MAX_LEVELS).contains(&n) {
        return Err(QqtError::LevelCount(n));
    }
    let d = n * n;
    let faces = (0..n)
        .map(|i| vec![lifted_slit_projector(n, SubsetMask::singleton(i)).scale_real(1.0 / n as f64)])
        .collect();
    Ok(SlitExperiment::new(ComplexMatrix::identity(d), faces, |subset| {
        match (variant, subset.len()) {
            (SlitVariant::SuperQuantum, 1) => {
                let i = subset.slits()[0];
                ComplexMatrix::basis_projector(d, i * n + i).scale_real(n as f64)
            }
            _ => lifted_slit_projector(n, subset),
        }
    })?)
}

/// `I_N` of the N-slit experiment at the witness state.
pub fn qqt_interference(n: usize, variant: SlitVariant) -> Result<f64, QqtError> {
    let exp = qqt_slit_experiment(n, variant)?;
    let s = qqt_witness_state(n);
    Ok(sorkin_i(n, &exp, s.matrix(), &QqtTheory { n })?.value)
}

/// Hyper-decoherence to an N-level quantum state: trace out the second factor.
pub fn qqt_hyperdecohere(s: &QqtState) -> ComplexMatrix {
    partial_trace(s.matrix(), s.n, s.n, TracedFactor::Second).expect("N^2 x N^2 state")
}

/// Outcome of swapping the inner factors of two QQT systems and discarding one.
#[derive(Debug, Clone)]
pub struct SwapReport {
    pub marginal: ComplexMatrix,
    pub lambda_max: f64,
    pub is_valid: bool,
    pub swap_is_unitary: bool,
    /// Both single-system marginals before the swap are valid QQT states.
    pub marginals_valid_before_swap: bool,
}

/// Starts from `(1/N^2) |0><0| (x) I (x) |0><0| (x) I` on factors `A1 A2 B1 B2`, swaps
/// `A2` and `B1`, then traces out `B1 B2`.
pub fn qqt_swap_counterexample(n: usize) -> Result<SwapReport, QqtError> {
    if n < 2 {
        return Err(QqtError::LevelCount(n));
    }
    let single = tensor_product(&ComplexMatrix::basis_projector(n, 0), &ComplexMatrix::identity(n))
        .scale_real(1.0 / n as f64);
    let s_ab = tensor_product(&single, &single);
    let d = n * n;

    let before_a = partial_trace(&s_ab, d, d, TracedFactor::Second)?;
    let before_b = partial_trace(&s_ab, d, d, TracedFactor::First)?;
    let marginals_valid_before_swap =
        is_qqt_state(&before_a, n, DEFAULT_TOL)? && is_qqt_state(&before_b, n, DEFAULT_TOL)?;

    let swap = factor_permutation(&[n, n, n, n], &[0, 2, 1, 3])?;
    let swapped = swap.matmul(&s_ab)?.matmul(&swap.dagger())?;
    let marginal = partial_trace(&swapped, d, d, TracedFactor::Second)?;
    let lambda_max = eig_hermitian(&marginal)?.max_eigenvalue();
    Ok(SwapReport {
        is_valid: is_qqt_state(&marginal, n, DEFAULT_TOL)?,
        marginal,
        lambda_max,
        swap_is_unitary: is_unitary(&swap, DEFAULT_TOL),
        marginals_valid_before_swap,
    })
}

/// `U s_initial U^dagger` for a Haar-random `U`.
pub fn random_orbit_point<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let u = haar_unitary(n * n, rng);
    &(&u * &s_initial(n)) * &u.dagger()
}

/// An extreme point `(1/N) P` with `P` a Haar-random rank-N projector. Same
/// distribution as [`random_orbit_point`] without the full unitary.
pub fn random_extreme_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let d = n * n;
    let vs = random_orthonormal(d, n, rng);
    ComplexMatrix::from_fn(d, d, |r, c| {
        vs.iter().map(|v| v[r] * v[c].conj()).sum::<crate::C64>() / n as f64
    })
}

/// Convex mixture of `components` random extreme states.
pub fn random_qqt_state<R: Rng + ?Sized>(n: usize, components: usize, rng: &mut R) -> ComplexMatrix {
    let weights = random_simplex(components, rng);
    let d = n * n;
    weights.into_iter().fold(ComplexMatrix::zeros(d, d), |acc, w| {
        &acc + &random_extreme_state(n, rng).scale_real(w)
    })
}

/// Smallest and largest `Tr(e s)` over `samples` random extreme states.
pub fn sampled_effect_range<R: Rng + ?Sized>(
    e: &ComplexMatrix,
    n: usize,
    samples: usize,
    rng: &mut R,
) -> EffectRange {
    let mut range = EffectRange {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
    };
    for _ in 0..samples {
        let p = trace_pairing(e, &random_extreme_state(n, rng));
        range.min = range.min.min(p);
        range.max = range.max.max(p);
    }
    range
}

/// Number of real parameters of an N-level QQT state, as the numerical rank of
/// `4 N^4` sampled states (orbit points of `s_initial` and pairwise mixtures).
pub fn qqt_parameter_count<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<usize, QqtError> {
    if !(2..=3).contains(&n) {
        return Err(QqtError::LevelCount(n));
    }
    let target = 4 * n.pow(4);
    let mut states: Vec<ComplexMatrix> = Vec::with_capacity(target);
    while states.len() < target {
        let a = random_orbit_point(n, rng);
        if states.len() % 2 == 1 {
            let w: f64 = rng.random();
            let mixed = &a.scale_real(w) + &states[states.len() - 1].scale_real(1.0 - w);
            states.push(mixed);
        } else {
            states.push(a);
        }
    }
    let rows: Vec<Vec<f64>> = states.iter().map(ComplexMatrix::hermitian_coordinates).collect();
    Ok(numerical_rank(&rows, 1e-9))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_density, seeded_rng};
    use crate::sorkin::validate_experiment;

    #[test]
    fn state_membership_examples() {
        for n in [2, 3] {
            let d = n * n;
            let mixed = ComplexMatrix::identity(d).scale_real(1.0 / d as f64);
            assert!(is_qqt_state(&mixed, n, 1e-10).unwrap());
            let pure = ComplexMatrix::basis_projector(d, 0);
            assert!(!is_qqt_state(&pure, n, 1e-10).unwrap());
            assert!(is_qqt_state(qqt_witness_state(n).matrix(), n, 1e-10).unwrap());
            assert!(is_qqt_state(&s_initial(n), n, 1e-10).unwrap());
        }
        assert!(is_qqt_state(&ComplexMatrix::identity(3), 2, 1e-10).is_err());
    }

    #[test]
    fn witness_spectrum() {
        let s = qqt_witness_state(3);
        assert!((s.lambda_max() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(s.matrix().trace(), c64(1.0, 0.0));
    }

    #[test]
    fn effect_examples() {
        for n in [2, 3] {
            let d = n * n;
            let e = ComplexMatrix::basis_projector(d, 0).scale_real(n as f64);
            assert!(is_qqt_effect(&e, n, 1e-10).unwrap());
            let two = ComplexMatrix::identity(d).scale_real(2.0);
            assert!(!is_qqt_effect(&two, n, 1e-10).unwrap());
            for m in 1..(1u32 << n) {
                let p = lifted_slit_projector(n, SubsetMask(m));
                assert!(is_qqt_effect(&p, n, 1e-10).unwrap());
            }
        }
        let nonherm = ComplexMatrix::from_fn(4, 4, |r, c| c64(if r < c { 1.0 } else { 0.0 }, 0.0));
        assert!(is_qqt_effect(&nonherm, 2, 1e-10).is_err());
    }

    #[test]
    fn effect_range_is_attained() {
        let mut rng = seeded_rng(12);
        let e = crate::sampling::random_hermitian(9, &mut rng);
        let range = effect_range(&e, 3).unwrap();
        let (lo, hi) = effect_range_witnesses(&e, 3).unwrap();
        assert!(is_qqt_state(&lo, 3, 1e-10).unwrap());
        assert!(is_qqt_state(&hi, 3, 1e-10).unwrap());
        assert!((trace_pairing(&e, &lo) - range.min).abs() < 1e-10);
        assert!((trace_pairing(&e, &hi) - range.max).abs() < 1e-10);
    }

    #[test]
    fn slit_pairings() {
        let exp = qqt_slit_experiment(3, SlitVariant::SuperQuantum).unwrap();
        let th = QqtTheory { n: 3 };
        let f1 = &exp.faces()[0][0];
        let f2 = &exp.faces()[1][0];
        let e1 = exp.effect(SubsetMask::singleton(0));
        assert!((th.pair(e1, f1) - 1.0).abs() < 1e-15);
        assert!((th.pair(exp.global_effect(), f1) - 1.0).abs() < 1e-15);
        assert_eq!(th.pair(e1, f2), 0.0);
    }

    #[test]
    fn both_variants_validate() {
        for n in 2..=5 {
            for variant in [SlitVariant::SuperQuantum, SlitVariant::Quantum] {
                let exp = qqt_slit_experiment(n, variant).unwrap();
                assert!(validate_experiment(&exp, &QqtTheory { n }, 1e-12).is_empty());
            }
        }
    }

    #[test]
    fn interference_values() {
        assert!((qqt_interference(3, SlitVariant::SuperQuantum).unwrap() - 2.0).abs() < 1e-10);
        assert!((qqt_interference(4, SlitVariant::SuperQuantum).unwrap() + 3.0).abs() < 1e-10);
        assert!((qqt_interference(2, SlitVariant::SuperQuantum).unwrap() + 1.0).abs() < 1e-10);
        assert!(qqt_interference(3, SlitVariant::Quantum).unwrap().abs() < 1e-12);
        assert!(qqt_interference(7, SlitVariant::Quantum).is_err());
    }

    #[test]
    fn hyperdecoherence_examples() {
        let s = QqtState::new(s_initial(3), 3).unwrap();
        let out = qqt_hyperdecohere(&s);
        assert!(out.max_abs_diff(&ComplexMatrix::identity(3).scale_real(1.0 / 3.0)) < 1e-15);

        let mut rng = seeded_rng(2);
        let rho = random_density(3, &mut rng);
        let lifted = tensor_product(&rho, &ComplexMatrix::identity(3).scale_real(1.0 / 3.0));
        let s = QqtState::new(lifted, 3).unwrap();
        assert!(qqt_hyperdecohere(&s).max_abs_diff(&rho) < 1e-12);
    }

    #[test]
    fn swap_counterexample_n2() {
        let r = qqt_swap_counterexample(2).unwrap();
        let expected = tensor_product(
            &ComplexMatrix::basis_projector(2, 0),
            &ComplexMatrix::basis_projector(2, 0),
        );
        assert!(r.marginal.max_abs_diff(&expected) < 1e-15);
        assert!((r.lambda_max - 1.0).abs() < 1e-12);
        assert!(!r.is_valid);
        assert!(r.swap_is_unitary);
        assert!(r.marginals_valid_before_swap);
    }

    #[test]
    fn parameter_count_n2() {
        assert_eq!(qqt_parameter_count(2, &mut seeded_rng(1)).unwrap(), 16);
        assert!(qqt_parameter_count(4, &mut seeded_rng(1)).is_err());
    }

    #[test]
    fn state_constructor_rejects_pure() {
        let err = QqtState::new(ComplexMatrix::basis_projector(4, 0), 2).unwrap_err();
        assert!(matches!(err, QqtError::NotAState(_)));
    }
}
