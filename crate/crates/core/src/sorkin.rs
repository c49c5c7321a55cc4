//! n-slit experiments and the Sorkin interference hierarchy.
//!
//! A theory only has to say how an effect pairs with a state. An experiment is a
//! global effect `E`, one effect `e_I` per nonempty subset `I` of open slits (with
//! `e_{1..n} = E`), and for each slit a finite list of states known to pass through it.

use std::fmt;

use thiserror::Error;

use crate::numerics::{eig_hermitian, ComplexMatrix, C64};

/// Largest slit count accepted by subset enumeration.
pub const MAX_SLITS: usize = 12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SorkinError {
    #[error("subset enumeration limit: order {0} outside 2..={MAX_SLITS}")]
    SubsetEnumerationLimit(usize),
    #[error("order {requested} does not match the {slits}-slit experiment")]
    OrderMismatch { requested: usize, slits: usize },
    #[error("expected {expected} faces, got {got}")]
    FaceCount { expected: usize, got: usize },
    #[error("invalid effect: {0}")]
    InvalidEffect(String),
}

/// Pairing between effects and states in some probabilistic theory.
pub trait Theory {
    type State;
    type Effect;

    /// Probability `(e|s)`.
    fn pair(&self, effect: &Self::Effect, state: &Self::State) -> f64;

    /// Membership in the theory's state space.
    fn is_state(&self, state: &Self::State) -> bool;
}

/// Subset of slits `{0..n}` as a bit mask (bit `i` set means slit `i` is open).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub fn full(n: usize) -> Self {
        Self((1u32 << n) - 1)
    }

    pub fn singleton(i: usize) -> Self {
        Self(1 << i)
    }

    pub fn from_slits(slits: &[usize]) -> Self {
        Self(slits.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// All nonempty subsets of `{0..n}` in increasing mask order.
    pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
        (1u32..(1u32 << n)).map(SubsetMask)
    }

    pub fn slits(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based, like slit labels on a barrier
        let labels: Vec<String> = self.slits().iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// An n-slit experiment.
#[derive(Debug, Clone)]
pub struct SlitExperiment<E, S> {
    n: usize,
    faces: Vec<Vec<S>>,
    /// Indexed by `mask - 1`; the last entry is the global effect.
    subset_effects: Vec<E>,
}

impl<E: Clone, S> SlitExperiment<E, S> {
    /// `subset_effect` is queried for every proper nonempty subset; the full subset
    /// always maps to `global`.
    pub fn new(
        global: E,
        faces: Vec<Vec<S>>,
        mut subset_effect: impl FnMut(SubsetMask) -> E,
    ) -> Result<Self, SorkinError> {
        let n = faces.len();
        if !(2..=MAX_SLITS).contains(&n) {
            return Err(SorkinError::SubsetEnumerationLimit(n));
        }
        let full = SubsetMask::full(n);
        let subset_effects = SubsetMask::nonempty_subsets(n)
            .map(|m| if m == full { global.clone() } else { subset_effect(m) })
            .collect();
        Ok(Self {
            n,
            faces,
            subset_effects,
        })
    }

    pub fn slits(&self) -> usize {
        self.n
    }

    pub fn global_effect(&self) -> &E {
        self.subset_effects.last().expect("at least 3 subsets")
    }

    pub fn effect(&self, subset: SubsetMask) -> &E {
        &self.subset_effects[subset.0 as usize - 1]
    }

    pub fn faces(&self) -> &[Vec<S>] {
        &self.faces
    }

    /// Replaces the effect for one proper subset.
    pub fn with_effect(mut self, subset: SubsetMask, effect: E) -> Self {
        assert!(
            !subset.is_empty() && subset != SubsetMask::full(self.n),
            "only proper nonempty subsets can be replaced"
        );
        self.subset_effects[subset.0 as usize - 1] = effect;
        self
    }
}

/// What a listed face state did wrong under some `e_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// A state in `F_I` where `(e_I|s) != (E|s)`.
    OpenSlitMismatch,
    /// A state in a face disjoint from `F_I` where `(e_I|s) != 0`.
    ClosedSlitLeak,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub subset: SubsetMask,
    /// 0-based slit index of the face the state belongs to.
    pub face: usize,
    /// Position of the state within that face.
    pub state: usize,
    pub kind: ViolationKind,
    pub magnitude: f64,
}

/// Checks both slit-blocking conditions on every listed face state.
pub fn validate_experiment<T: Theory>(
    exp: &SlitExperiment<T::Effect, T::State>,
    theory: &T,
    tol: f64,
) -> Vec<Violation>
where
    T::Effect: Clone,
{
    let mut violations = Vec::new();
    for subset in SubsetMask::nonempty_subsets(exp.n) {
        let e_sub = exp.effect(subset);
        for (face, states) in exp.faces.iter().enumerate() {
            for (idx, s) in states.iter().enumerate() {
                let p = theory.pair(e_sub, s);
                let (kind, magnitude) = if subset.contains(face) {
                    (
                        ViolationKind::OpenSlitMismatch,
                        (p - theory.pair(exp.global_effect(), s)).abs(),
                    )
                } else {
                    (ViolationKind::ClosedSlitLeak, p.abs())
                };
                if magnitude > tol {
                    violations.push(Violation {
                        subset,
                        face,
                        state: idx,
                        kind,
                        magnitude,
                    });
                }
            }
        }
    }
    violations
}

/// An interference term `I_n` evaluated at one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceValue {
    pub order: usize,
    pub value: f64,
}

/// `I_n = sum over nonempty I of (-1)^(n-|I|) (e_I|s)`.
pub fn sorkin_i<T: Theory>(
    n: usize,
    exp: &SlitExperiment<T::Effect, T::State>,
    state: &T::State,
    theory: &T,
) -> Result<InterferenceValue, SorkinError>
where
    T::Effect: Clone,
{
    if !(2..=MAX_SLITS).contains(&n) {
        return Err(SorkinError::SubsetEnumerationLimit(n));
    }
    if n != exp.n {
        return Err(SorkinError::OrderMismatch {
            requested: n,
            slits: exp.n,
        });
    }
    let value = SubsetMask::nonempty_subsets(n)
        .map(|subset| {
            let sign = if (n - subset.len()).is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * theory.pair(exp.effect(subset), state)
        })
        .sum();
    Ok(InterferenceValue { order: n, value })
}

/// Two-slit term written out: `(E|s) - (e_1|s) - (e_2|s)`.
pub fn sorkin_i2_expanded<T: Theory>(
    exp: &SlitExperiment<T::Effect, T::State>,
    state: &T::State,
    theory: &T,
) -> f64
where
    T::Effect: Clone,
{
    assert_eq!(exp.n, 2);
    let p = |slits: &[usize]| theory.pair(exp.effect(SubsetMask::from_slits(slits)), state);
    theory.pair(exp.global_effect(), state) - p(&[0]) - p(&[1])
}

/// Three-slit term written out pair by pair.
pub fn sorkin_i3_expanded<T: Theory>(
    exp: &SlitExperiment<T::Effect, T::State>,
    state: &T::State,
    theory: &T,
) -> f64
where
    T::Effect: Clone,
{
    assert_eq!(exp.n, 3);
    let p = |slits: &[usize]| theory.pair(exp.effect(SubsetMask::from_slits(slits)), state);
    theory.pair(exp.global_effect(), state) - p(&[0, 1]) - p(&[1, 2]) - p(&[2, 0])
        + p(&[0])
        + p(&[1])
        + p(&[2])
}

/// Ordinary quantum theory on `C^dim`: states are density matrices, effects are
/// Hermitian operators, and `(e|s) = Re Tr(e s)`.
#[derive(Debug, Clone, Copy)]
pub struct QuantumTheory {
    pub dim: usize,
    pub tol: f64,
}

impl QuantumTheory {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            tol: crate::numerics::DEFAULT_TOL,
        }
    }
}

/// `Re Tr(e s)` without forming the product.
pub fn trace_pairing(effect: &ComplexMatrix, state: &ComplexMatrix) -> f64 {
    let n = effect.rows();
    let mut acc = C64::new(0.0, 0.0);
    for r in 0..n {
        for c in 0..n {
            acc += effect.get(r, c) * state.get(c, r);
        }
    }
    acc.re
}

impl Theory for QuantumTheory {
    type State = ComplexMatrix;
    type Effect = ComplexMatrix;

    fn pair(&self, effect: &ComplexMatrix, state: &ComplexMatrix) -> f64 {
        trace_pairing(effect, state)
    }

    fn is_state(&self, state: &ComplexMatrix) -> bool {
        state.rows() == self.dim
            && state.is_hermitian(self.tol)
            && (state.trace().re - 1.0).abs() <= self.tol
            && eig_hermitian(state).is_ok_and(|e| e.min_eigenvalue() >= -self.tol)
    }
}

/// `|eta><eta|` with `eta` the uniform superposition of `n` levels.
pub fn uniform_superposition_effect(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| C64::new(1.0 / n as f64, 0.0))
}

/// Projector onto `span{|i> : i in subset}`.
pub fn subset_projector(n: usize, subset: SubsetMask) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |r, c| {
        if r == c && subset.contains(r) {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Quantum n-slit experiment with screen effect `e_global`: slit `i` is `|i><i|` and
/// `e_I = P_I E P_I`.
pub fn quantum_slit_experiment(
    n: usize,
    e_global: &ComplexMatrix,
) -> Result<SlitExperiment<ComplexMatrix, ComplexMatrix>, SorkinError> {
    if !(2..=MAX_SLITS).contains(&n) {
        return Err(SorkinError::SubsetEnumerationLimit(n));
    }
    if e_global.rows() != n || !e_global.is_square() {
        return Err(SorkinError::InvalidEffect(format!(
            "expected {n}x{n}, got {}x{}",
            e_global.rows(),
            e_global.cols()
        )));
    }
    let tol = crate::numerics::DEFAULT_TOL;
    let eig = eig_hermitian(e_global).map_err(|e| SorkinError::InvalidEffect(e.to_string()))?;
    if eig.min_eigenvalue() < -tol || eig.max_eigenvalue() > 1.0 + tol {
        return Err(SorkinError::InvalidEffect(format!(
            "spectrum [{}, {}] outside [0, 1]",
            eig.min_eigenvalue(),
            eig.max_eigenvalue()
        )));
    }
    let faces = (0..n)
        .map(|i| vec![ComplexMatrix::basis_projector(n, i)])
        .collect();
    SlitExperiment::new(e_global.clone(), faces, |subset| {
        let p = subset_projector(n, subset);
        &(&p * e_global) * &p
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_density, seeded_rng};

    #[test]
    fn subset_masks() {
        assert_eq!(SubsetMask::full(3).0, 0b111);
        assert_eq!(SubsetMask::nonempty_subsets(3).count(), 7);
        assert_eq!(SubsetMask::from_slits(&[0, 2]).len(), 2);
        assert_eq!(format!("{:?}", SubsetMask::from_slits(&[0, 2])), "{1,3}");
    }

    #[test]
    fn quantum_experiments_validate() {
        for n in 2..=5 {
            let exp = quantum_slit_experiment(n, &uniform_superposition_effect(n)).unwrap();
            let v = validate_experiment(&exp, &QuantumTheory::new(n), 1e-12);
            assert!(v.is_empty(), "n={n}: {v:?}");
        }
    }

    #[test]
    fn zero_singleton_effect_is_caught() {
        let n = 3;
        let exp = quantum_slit_experiment(n, &uniform_superposition_effect(n))
            .unwrap()
            .with_effect(SubsetMask::singleton(0), ComplexMatrix::zeros(n, n));
        let v = validate_experiment(&exp, &QuantumTheory::new(n), 1e-12);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].subset, SubsetMask::singleton(0));
        assert_eq!(v[0].face, 0);
        assert_eq!(v[0].kind, ViolationKind::OpenSlitMismatch);
        assert!((v[0].magnitude - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn two_slit_uniform_superposition() {
        // 1 - 1/4 - 1/4
        let e = uniform_superposition_effect(2);
        let exp = quantum_slit_experiment(2, &e).unwrap();
        let th = QuantumTheory::new(2);
        let i2 = sorkin_i(2, &exp, &e, &th).unwrap();
        assert!((i2.value - 0.5).abs() < 1e-12);
        assert!((sorkin_i2_expanded(&exp, &e, &th) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn quantum_third_order_vanishes() {
        let mut rng = seeded_rng(5);
        let e = uniform_superposition_effect(3);
        let exp = quantum_slit_experiment(3, &e).unwrap();
        let th = QuantumTheory::new(3);
        for _ in 0..20 {
            let s = random_density(3, &mut rng);
            let i3 = sorkin_i(3, &exp, &s, &th).unwrap().value;
            assert!(i3.abs() < 1e-12);
            assert!((i3 - sorkin_i3_expanded(&exp, &s, &th)).abs() < 1e-14);
        }
    }

    #[test]
    fn order_limits() {
        let e = uniform_superposition_effect(3);
        let exp = quantum_slit_experiment(3, &e).unwrap();
        let th = QuantumTheory::new(3);
        let err = sorkin_i(13, &exp, &e, &th).unwrap_err();
        assert!(err.to_string().contains("subset enumeration limit"));
        assert!(matches!(
            sorkin_i(2, &exp, &e, &th),
            Err(SorkinError::OrderMismatch { .. })
        ));
        assert!(quantum_slit_experiment(1, &ComplexMatrix::identity(1)).is_err());
    }

    #[test]
    fn rejects_invalid_screen_effect() {
        let err = quantum_slit_experiment(2, &ComplexMatrix::identity(2).scale_real(2.0)).unwrap_err();
        assert!(err.to_string().contains("invalid effect"));
        let nonherm = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(quantum_slit_experiment(2, &nonherm).is_err());
    }
}
