//! Three-level density cubes.
//!
//! A cube is a `3x3x3` complex tensor `rho_ijk`. Externally (display, violation
//! reports) indices are 1-based as in the usual `rho_123` notation; internally they
//! are 0-based. Entry `rho_ijk` sits at row `j`, column `k` of the `i`-th slice.
//!
//! Hermitian cubes satisfy
//! 1. `rho_iij = rho_iji = rho_jii` real, for `i != j`;
//! 2. `rho_123 = rho_312 = rho_231 = conj(rho_213) = conj(rho_321) = conj(rho_132)`;
//! 3. `rho_111 + rho_222 + rho_333 = 1`;
//! 4. `rho_iii >= 0`.
//!
//! Conditions 3 and 4 are normalization and positivity of outcome probabilities;
//! [`hermiticity_violations`] checks only 1 and 2.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::numerics::{
    c64, eig_hermitian, is_unitary, numerical_rank, omega, omega_pow, ComplexMatrix, C64,
};
use crate::sampling::{random_complex, random_density};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DensityCubeError {
    #[error("not in C-span: {0}")]
    NotInCSpan(String),
    #[error("not a quantum state: {0}")]
    NotQuantumState(String),
    #[error("expected a 5x5 matrix, got {0}x{1}")]
    NotCvecTransform(usize, usize),
}

#[inline]
fn idx(i: usize, j: usize, k: usize) -> usize {
    9 * i + 3 * j + k
}

/// Positions of the multiset `{d, d, s}`.
fn doubled_positions(d: usize, s: usize) -> [(usize, usize, usize); 3] {
    [(d, d, s), (d, s, d), (s, d, d)]
}

/// Even permutations of `(0, 1, 2)`; these carry `z` in a Hermitian cube.
const EVEN_PERMS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];
/// Odd permutations; these carry `conj(z)`.
const ODD_PERMS: [(usize, usize, usize); 3] = [(1, 0, 2), (2, 1, 0), (0, 2, 1)];

fn all_distinct(i: usize, j: usize, k: usize) -> bool {
    i != j && j != k && i != k
}

/// A `3x3x3` complex tensor.
#[derive(Clone, Copy, PartialEq)]
pub struct Cube {
    entries: [C64; 27],
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Cube [")?;
        for i in 0..3 {
            for j in 0..3 {
                write!(f, "  ")?;
                for k in 0..3 {
                    let z = self.get(i, j, k);
                    write!(f, "{:>8.4}{:+.4}i ", z.re, z.im)?;
                }
                writeln!(f)?;
            }
            if i < 2 {
                writeln!(f, "  --")?;
            }
        }
        write!(f, "]")
    }
}

impl Default for Cube {
    fn default() -> Self {
        Self::zero()
    }
}

impl Cube {
    pub fn zero() -> Self {
        Self {
            entries: [c64(0.0, 0.0); 27],
        }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize, usize) -> C64) -> Self {
        let mut c = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    c.entries[idx(i, j, k)] = f(i, j, k);
                }
            }
        }
        c
    }

    /// Builds a cube from three displayed slices: `slices[i][j][k] = rho_ijk`.
    pub fn from_slices(slices: [[[C64; 3]; 3]; 3]) -> Self {
        Self::from_fn(|i, j, k| slices[i][j][k])
    }

    /// `sum_n delta_in delta_jn delta_kn`
    pub fn unit_diagonal() -> Self {
        Self::from_fn(|i, j, k| if i == j && j == k { c64(1.0, 0.0) } else { c64(0.0, 0.0) })
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize, k: usize) -> C64 {
        self.entries[idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, z: C64) {
        self.entries[idx(i, j, k)] = z;
    }

    pub fn entries(&self) -> &[C64; 27] {
        &self.entries
    }

    /// Writes `value` to all three positions of the multiset `{d, d, s}`.
    pub fn set_doubled(&mut self, d: usize, s: usize, value: f64) {
        for (i, j, k) in doubled_positions(d, s) {
            self.set(i, j, k, c64(value, 0.0));
        }
    }

    /// Writes `z` on even permutations of `(1,2,3)` and `conj(z)` on odd ones.
    pub fn set_third_order(&mut self, z: C64) {
        for (i, j, k) in EVEN_PERMS {
            self.set(i, j, k, z);
        }
        for (i, j, k) in ODD_PERMS {
            self.set(i, j, k, z.conj());
        }
    }

    pub fn diagonal(&self) -> [C64; 3] {
        [self.get(0, 0, 0), self.get(1, 1, 1), self.get(2, 2, 2)]
    }

    pub fn trace(&self) -> C64 {
        self.diagonal().iter().sum()
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let mut out = *self;
        for z in out.entries.iter_mut() {
            *z = f(*z);
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Real coordinates `(Re, Im)` of all 27 entries.
    pub fn real_coordinates(&self) -> Vec<f64> {
        self.entries.iter().flat_map(|z| [z.re, z.im]).collect()
    }
}

/// `(rho, sigma) = sum_ijk conj(rho_ijk) sigma_ijk`.
pub fn cube_inner(rho: &Cube, sigma: &Cube) -> C64 {
    rho.entries
        .iter()
        .zip(&sigma.entries)
        .map(|(a, b)| a.conj() * b)
        .sum()
}

/// A failed cube condition. Indices are 1-based.
#[derive(Debug, Clone, PartialEq)]
pub enum CubeCondition {
    /// Condition 1 for the multiset `{doubled, doubled, single}`.
    PairSymmetry { doubled: usize, single: usize },
    /// Condition 2.
    CyclicConjugate,
    /// Condition 3; carries the actual trace.
    Trace(C64),
    /// Condition 4 (or a complex diagonal entry) at `rho_iii`.
    Probability { index: usize, value: C64 },
}

impl CubeCondition {
    pub fn number(&self) -> u8 {
        match self {
            Self::PairSymmetry { .. } => 1,
            Self::CyclicConjugate => 2,
            Self::Trace(_) => 3,
            Self::Probability { .. } => 4,
        }
    }
}

/// Violations of conditions 1 and 2 only.
pub fn hermiticity_violations(rho: &Cube, tol: f64) -> Vec<CubeCondition> {
    let mut out = Vec::new();
    for d in 0..3 {
        for s in 0..3 {
            if d == s {
                continue;
            }
            let vals: Vec<C64> = doubled_positions(d, s)
                .iter()
                .map(|&(i, j, k)| rho.get(i, j, k))
                .collect();
            let real = vals.iter().all(|z| z.im.abs() <= tol);
            let equal = vals.iter().all(|z| (z - vals[0]).norm() <= tol);
            if !(real && equal) {
                out.push(CubeCondition::PairSymmetry {
                    doubled: d + 1,
                    single: s + 1,
                });
            }
        }
    }
    let z = rho.get(0, 1, 2);
    let even_ok = EVEN_PERMS.iter().all(|&(i, j, k)| (rho.get(i, j, k) - z).norm() <= tol);
    let odd_ok = ODD_PERMS
        .iter()
        .all(|&(i, j, k)| (rho.get(i, j, k) - z.conj()).norm() <= tol);
    if !(even_ok && odd_ok) {
        out.push(CubeCondition::CyclicConjugate);
    }
    out
}

/// Result of checking all four cube conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct CubeCheck {
    pub violations: Vec<CubeCondition>,
}

impl CubeCheck {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, condition: u8) -> bool {
        self.violations.iter().any(|v| v.number() == condition)
    }
}

/// Checks conditions 1-4.
pub fn is_hermitian_cube(rho: &Cube, tol: f64) -> CubeCheck {
    let mut violations = hermiticity_violations(rho, tol);
    let tr = rho.trace();
    if (tr - c64(1.0, 0.0)).norm() > tol {
        violations.push(CubeCondition::Trace(tr));
    }
    for (i, z) in rho.diagonal().into_iter().enumerate() {
        if z.re < -tol || z.im.abs() > tol {
            violations.push(CubeCondition::Probability {
                index: i + 1,
                value: z,
            });
        }
    }
    CubeCheck { violations }
}

/// Orthogonal projection of an arbitrary cube onto the real space of cubes satisfying
/// conditions 1 and 2.
pub fn hermitian_part(rho: &Cube) -> Cube {
    let mut out = Cube::zero();
    for i in 0..3 {
        out.set(i, i, i, c64(rho.get(i, i, i).re, 0.0));
    }
    for d in 0..3 {
        for s in 0..3 {
            if d != s {
                let mean = doubled_positions(d, s)
                    .iter()
                    .map(|&(i, j, k)| rho.get(i, j, k).re)
                    .sum::<f64>()
                    / 3.0;
                out.set_doubled(d, s, mean);
            }
        }
    }
    let z = (EVEN_PERMS.iter().map(|&(i, j, k)| rho.get(i, j, k)).sum::<C64>()
        + ODD_PERMS.iter().map(|&(i, j, k)| rho.get(i, j, k).conj()).sum::<C64>())
        / 6.0;
    out.set_third_order(z);
    out
}

/// Coordinates `(a_1..a_5)` in the basis `C^(1)..C^(5)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CVec(pub [C64; 5]);

impl CVec {
    pub fn new(a: [C64; 5]) -> Self {
        Self(a)
    }

    pub fn from_real(a: [f64; 5]) -> Self {
        Self(a.map(|x| c64(x, 0.0)))
    }

    /// `(p1, p2, p3, z, conj(z))`
    pub fn hermitian(p: [f64; 3], z: C64) -> Self {
        Self([c64(p[0], 0.0), c64(p[1], 0.0), c64(p[2], 0.0), z, z.conj()])
    }

    pub fn basis(n: usize) -> Self {
        let mut a = [c64(0.0, 0.0); 5];
        a[n] = c64(1.0, 0.0);
        Self(a)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self(self.0.map(|z| z * s))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(&other.0) {
            *x += y;
        }
        Self(a)
    }

    /// `sum conj(a_i) b_i`; equals [`cube_inner`] of the corresponding cubes.
    pub fn inner(&self, other: &Self) -> C64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Worst deviation from the form `(r1, r2, r3, w, conj(w))` with real `r`.
    pub fn hermitian_form_defect(&self) -> f64 {
        let a = &self.0;
        let imag = a[..3].iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        imag.max((a[4] - a[3].conj()).norm())
    }

    pub fn is_hermitian_form(&self, tol: f64) -> bool {
        self.hermitian_form_defect() <= tol
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.0[0] + self.0[1] + self.0[2] - c64(1.0, 0.0)).norm() <= tol
    }
}

/// The cube `sum_n a_n C^(n)`.
pub fn cvec_to_cube(v: &CVec) -> Cube {
    let mut cube = Cube::zero();
    for i in 0..3 {
        cube.set(i, i, i, v.0[i]);
    }
    for (i, j, k) in EVEN_PERMS {
        cube.set(i, j, k, v.0[3] / SQRT3);
    }
    for (i, j, k) in ODD_PERMS {
        cube.set(i, j, k, v.0[4] / SQRT3);
    }
    cube
}

/// Inverse of [`cvec_to_cube`] on `Span[C^(n)]`.
pub fn cube_to_cvec(cube: &Cube, tol: f64) -> Result<CVec, DensityCubeError> {
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let on_diagonal = i == j && j == k;
                if !on_diagonal && !all_distinct(i, j, k) && cube.get(i, j, k).norm() > tol {
                    return Err(DensityCubeError::NotInCSpan(format!(
                        "entry rho_{}{}{} = {}",
                        i + 1,
                        j + 1,
                        k + 1,
                        cube.get(i, j, k)
                    )));
                }
            }
        }
    }
    let class_value = |perms: &[(usize, usize, usize); 3]| -> Result<C64, DensityCubeError> {
        let first = cube.get(perms[0].0, perms[0].1, perms[0].2);
        if perms.iter().any(|&(i, j, k)| (cube.get(i, j, k) - first).norm() > tol) {
            return Err(DensityCubeError::NotInCSpan(
                "third-order entries are not constant on cyclic permutations".into(),
            ));
        }
        Ok(first * SQRT3)
    };
    let d = cube.diagonal();
    Ok(CVec([d[0], d[1], d[2], class_value(&EVEN_PERMS)?, class_value(&ODD_PERMS)?]))
}

/// The displayed pure states `rho^(j)`, `j = 1, 2, 3` (index `j - 1` here).
pub fn displayed_cube(j: usize) -> Cube {
    assert!((1..=3).contains(&j));
    let w = omega_pow(j as i64 - 1);
    let a = w / (2.0 * SQRT3);
    let b = w.conj() / (2.0 * SQRT3);
    let d = |n: usize| c64(if n == j { 0.0 } else { 0.5 }, 0.0);
    let o = c64(0.0, 0.0);
    Cube::from_slices([
        [[d(1), o, o], [o, o, a], [o, b, o]],
        [[o, o, b], [o, d(2), o], [a, o, o]],
        [[o, a, o], [b, o, o], [o, o, d(3)]],
    ])
}

/// Canonical states of the three-level theory.
#[derive(Debug, Clone)]
pub struct CanonicalStates {
    /// The displayed pure states `rho^(1..3)`.
    pub cubes: [Cube; 3],
    /// `D_0 = {q_1, q_2, q_3}`.
    pub q: [CVec; 3],
    /// `D = {rho_1, rho_2, rho_3}`.
    pub rho: [CVec; 3],
}

pub fn canonical_cubes() -> CanonicalStates {
    let w = omega();
    let h = c64(0.5, 0.0);
    let half = |a: [C64; 5]| CVec(a).scale(h);
    let one = c64(1.0, 0.0);
    let zero = c64(0.0, 0.0);
    CanonicalStates {
        cubes: [displayed_cube(1), displayed_cube(2), displayed_cube(3)],
        q: [CVec::basis(0), CVec::basis(1), CVec::basis(2)],
        rho: [
            half([zero, one, one, one, one]),
            half([one, zero, one, w, w.conj()]),
            half([one, one, zero, w.conj(), w]),
        ],
    }
}

/// Pairwise orthonormal and summing to the unit diagonal cube.
pub fn is_physical_basis(set: &[Cube; 3], tol: f64) -> bool {
    for a in 0..3 {
        for b in 0..3 {
            let expected = if a == b { 1.0 } else { 0.0 };
            if (cube_inner(&set[a], &set[b]) - c64(expected, 0.0)).norm() > tol {
                return false;
            }
        }
    }
    let sum = set[0].add(&set[1]).add(&set[2]);
    sum.max_abs_diff(&Cube::unit_diagonal()) <= tol
}

/// A linear map on `Span[C^(n)]`, written as a `5x5` matrix in the C-basis.
#[derive(Debug, Clone, PartialEq)]
pub struct CvecTransform(ComplexMatrix);

impl CvecTransform {
    pub fn new(m: ComplexMatrix) -> Result<Self, DensityCubeError> {
        if m.rows() != 5 || m.cols() != 5 {
            return Err(DensityCubeError::NotCvecTransform(m.rows(), m.cols()));
        }
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        Self(ComplexMatrix::identity(5))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }
}

pub fn apply_cvec_transform(m: &CvecTransform, v: &CVec) -> CVec {
    let out = m.0.apply(&v.0).expect("5x5 acting on a 5-vector");
    CVec([out[0], out[1], out[2], out[3], out[4]])
}

/// The unitary `T` with `T q_i = rho_i`.
pub fn constant_t() -> CvecTransform {
    let w = omega();
    let wc = w.conj();
    let o = c64(0.0, 0.0);
    let l = c64(1.0, 0.0);
    let rows = [
        [o, l, l, l, l],
        [l, o, l, wc, w],
        [l, l, o, w, wc],
        [l, w, wc, l, o],
        [l, wc, w, o, l],
    ];
    let m = ComplexMatrix::new(5, 5, rows.iter().flatten().map(|z| z * 0.5).collect())
        .expect("finite 5x5");
    CvecTransform(m)
}

/// A unitary that also maps `D_0` to `D` but does not keep Hermitian cubes Hermitian.
pub fn constant_t_prime() -> CvecTransform {
    let w = omega();
    let wc = w.conj();
    let s = c64(SQRT3, 0.0);
    let o = c64(0.0, 0.0);
    let l = c64(1.0, 0.0);
    let h = 0.5;
    let rows = [
        [o, l, l, (l + s) * h, (-l + s) * h],
        [l, o, l, (wc + s * w) * h, (-w + s * wc) * h],
        [l, l, o, (w + s * wc) * h, (-wc + s * w) * h],
        [l, w, wc, c64(0.5, 0.0), s * h],
        [l, wc, w, s * h, c64(-0.5, 0.0)],
    ];
    let m = ComplexMatrix::new(5, 5, rows.iter().flatten().map(|z| z * 0.5).collect())
        .expect("finite 5x5");
    CvecTransform(m)
}

/// Outcome of checking a C-basis transformation against the stated axioms plus
/// Hermiticity preservation on a sample list.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformationReport {
    pub unitary: bool,
    /// The image of `D_0` is a physical basis.
    pub maps_physical_basis: bool,
    pub preserves_hermiticity: bool,
    /// Indices into the sample list whose images are not of Hermitian form.
    pub hermiticity_failures: Vec<usize>,
}

impl TransformationReport {
    /// Linearity and subspace preservation hold by construction for a `5x5` matrix.
    pub fn satisfies_axioms(&self) -> bool {
        self.unitary && self.maps_physical_basis
    }

    pub fn all_pass(&self) -> bool {
        self.satisfies_axioms() && self.preserves_hermiticity
    }
}

pub fn validate_transformation(m: &CvecTransform, samples: &[CVec], tol: f64) -> TransformationReport {
    let unitary = is_unitary(&m.0, tol);
    let images: [Cube; 3] =
        std::array::from_fn(|i| cvec_to_cube(&apply_cvec_transform(m, &CVec::basis(i))));
    let maps_physical_basis = is_physical_basis(&images, tol);
    let hermiticity_failures: Vec<usize> = samples
        .iter()
        .enumerate()
        .filter(|(_, v)| !apply_cvec_transform(m, v).is_hermitian_form(tol))
        .map(|(i, _)| i)
        .collect();
    TransformationReport {
        unitary,
        maps_physical_basis,
        preserves_hermiticity: hermiticity_failures.is_empty(),
        hermiticity_failures,
    }
}

/// A qutrit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct QutritDensity(ComplexMatrix);

impl QutritDensity {
    pub fn new(m: ComplexMatrix) -> Result<Self, DensityCubeError> {
        let bad = |msg: String| Err(DensityCubeError::NotQuantumState(msg));
        if m.rows() != 3 || m.cols() != 3 {
            return bad(format!("expected 3x3, got {}x{}", m.rows(), m.cols()));
        }
        if !m.is_hermitian(1e-10) {
            return bad("not Hermitian".into());
        }
        if (m.trace().re - 1.0).abs() > 1e-10 {
            return bad(format!("trace {}", m.trace().re));
        }
        let lmin = eig_hermitian(&m)
            .map_err(|e| DensityCubeError::NotQuantumState(e.to_string()))?
            .min_eigenvalue();
        if lmin < -1e-10 {
            return bad(format!("negative eigenvalue {lmin}"));
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }
}

const SQRT_2_3: f64 = 0.816_496_580_927_726;
const SQRT_3_2: f64 = 1.224_744_871_391_589;

/// The embedding applied to any Hermitian `3x3` matrix (linear over the reals).
///
/// For `i < j` the multiset `{i,i,j}` carries `sqrt(2/3) Re h_ij` and `{i,j,j}` carries
/// `sqrt(2/3) Im h_ij`; third-order entries are zero.
pub fn embed_hermitian(h: &ComplexMatrix) -> Cube {
    assert!(h.rows() == 3 && h.cols() == 3, "embedding acts on 3x3 matrices");
    let mut cube = Cube::zero();
    for i in 0..3 {
        cube.set(i, i, i, c64(h.get(i, i).re, 0.0));
        for j in i + 1..3 {
            let hij = h.get(i, j);
            cube.set_doubled(i, j, SQRT_2_3 * hij.re);
            cube.set_doubled(j, i, SQRT_2_3 * hij.im);
        }
    }
    cube
}

pub fn embed_quantum(rho: &QutritDensity) -> Cube {
    embed_hermitian(rho.matrix())
}

/// `(rho^(3), rho^(2,1))`: entries with all indices distinct, and the rest.
pub fn split_orders(rho: &Cube) -> (Cube, Cube) {
    let third = Cube::from_fn(|i, j, k| {
        if all_distinct(i, j, k) {
            rho.get(i, j, k)
        } else {
            c64(0.0, 0.0)
        }
    });
    let lower = Cube::from_fn(|i, j, k| {
        if all_distinct(i, j, k) {
            c64(0.0, 0.0)
        } else {
            rho.get(i, j, k)
        }
    });
    (third, lower)
}

/// Hyper-decoherence: drops third-order terms and reads the qutrit matrix back from
/// the lower-order part.
///
/// Each coherence is `sqrt(3/2)` times the mean of its multiset entries, which is
/// exactly the adjoint of [`embed_hermitian`]; on Hermitian cubes every entry of a
/// multiset is equal, so this is the plain inversion of the embedding.
pub fn hyperdecohere(rho: &Cube) -> ComplexMatrix {
    let (_, lower) = split_orders(rho);
    let mean = |d: usize, s: usize| {
        doubled_positions(d, s)
            .iter()
            .map(|&(i, j, k)| lower.get(i, j, k).re)
            .sum::<f64>()
            / 3.0
    };
    ComplexMatrix::from_fn(3, 3, |r, c| {
        if r == c {
            c64(lower.get(r, r, r).re, 0.0)
        } else {
            let (i, j) = (r.min(c), r.max(c));
            let z = c64(SQRT_3_2 * mean(i, j), SQRT_3_2 * mean(j, i));
            if r < c {
                z
            } else {
                z.conj()
            }
        }
    })
}

/// Two C-span states that are each positive against all embedded quantum states but
/// have a negative mutual inner product.
#[derive(Debug, Clone)]
pub struct CvCounterexample {
    pub c: CVec,
    pub v: CVec,
    pub inner: f64,
}

pub fn counterexample_cv() -> CvCounterexample {
    let c = CVec::from_real([1.0, 1.0, 0.0, 1.0, 1.0]).scale(c64(0.5, 0.0));
    let r595 = 595f64.sqrt();
    let v = CVec([
        c64(10.0, 0.0),
        c64(10.0, 0.0),
        c64(236.0, 0.0),
        -c64(65.0, r595),
        -c64(65.0, -r595),
    ])
    .scale(c64(1.0 / 256.0, 0.0));
    let inner = cube_inner(&cvec_to_cube(&c), &cvec_to_cube(&v)).re;
    CvCounterexample { c, v, inner }
}

/// Smallest real inner product of `cube` against the embeddings of `count` random
/// qutrit densities.
pub fn min_inner_against_embedded<R: Rng + ?Sized>(cube: &Cube, count: usize, rng: &mut R) -> f64 {
    (0..count)
        .map(|_| cube_inner(cube, &embed_hermitian(&random_density(3, rng))).re)
        .fold(f64::INFINITY, f64::min)
}

/// Random cube satisfying conditions 1 and 2 (not normalized).
pub fn random_hermitian_cube<R: Rng + ?Sized>(rng: &mut R) -> Cube {
    hermitian_part(&Cube::from_fn(|_, _, _| random_complex(rng)))
}

/// Real dimensions of the Hermitian-cube space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DcParameterCount {
    /// Dimension of the real vector space of Hermitian cubes.
    pub hermitian_dimension: usize,
    /// Affine dimension of the unit-trace slice.
    pub normalized_parameters: usize,
}

/// Counts parameters by numerical rank over `samples` random Hermitian cubes.
pub fn dc_parameter_count<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> DcParameterCount {
    let cubes: Vec<Cube> = (0..samples).map(|_| random_hermitian_cube(rng)).collect();
    let rows: Vec<Vec<f64>> = cubes.iter().map(Cube::real_coordinates).collect();
    let hermitian_dimension = numerical_rank(&rows, 1e-9);

    // unit-trace representatives, then differences from the first
    let normalized: Vec<Cube> = cubes
        .iter()
        .filter(|c| c.trace().re.abs() > 1e-3)
        .map(|c| c.scale(1.0 / c.trace().re))
        .collect();
    let diffs: Vec<Vec<f64>> = normalized[1..]
        .iter()
        .map(|c| c.sub(&normalized[0]).real_coordinates())
        .collect();
    let normalized_parameters = numerical_rank(&diffs, 1e-9);
    DcParameterCount {
        hermitian_dimension,
        normalized_parameters,
    }
}
