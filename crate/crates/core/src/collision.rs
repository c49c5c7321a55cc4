//! The three-collision problem: given `f: {0,1,2} -> {0,1}` as an oracle, decide after
//! one query whether `f(0) = f(1) = f(2)`.
//!
//! The quantum oracle flips signs, `|i> -> (-1)^f(i) |i>`. The density-cube oracle
//! does the same on the qutrit part of a tagged cube `rho^(n)(psi)` and advances the
//! tag by `f(0) + f(1) + f(2)` mod 3. Error probability is the worst-case overlap
//! between the post-query state of a non-constant `f` and the unchanged reference.

use crate::densitycube::{cube_inner, Cube};
use crate::numerics::{c64, omega_pow, C64};

const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT6: f64 = 2.449_489_742_783_178;

/// `f: {0,1,2} -> {0,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TritBitFunction([u8; 3]);

impl TritBitFunction {
    /// Panics unless every value is 0 or 1.
    pub fn new(values: [u8; 3]) -> Self {
        assert!(values.iter().all(|&v| v <= 1), "values must be bits");
        Self(values)
    }

    /// All eight functions in lexicographic order.
    pub fn all() -> impl Iterator<Item = Self> {
        (0u8..8).map(|m| Self([(m >> 2) & 1, (m >> 1) & 1, m & 1]))
    }

    pub fn values(self) -> [u8; 3] {
        self.0
    }

    pub fn all_equal(self) -> bool {
        self.0[0] == self.0[1] && self.0[1] == self.0[2]
    }

    pub fn weight(self) -> u8 {
        self.0.iter().sum()
    }
}

pub type Qutrit = [C64; 3];

/// `(1, 1, 1) / sqrt(3)`
pub fn uniform_qutrit() -> Qutrit {
    [c64(1.0 / SQRT3, 0.0); 3]
}

pub fn qutrit_overlap(a: &Qutrit, b: &Qutrit) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// `|i> -> (-1)^f(i) |i>`
pub fn qt_oracle(f: TritBitFunction, psi: &Qutrit) -> Qutrit {
    std::array::from_fn(|i| if f.0[i] == 1 { -psi[i] } else { psi[i] })
}

/// Worst-case `|<phi|O_f phi>|^2` over non-constant `f`.
pub fn qt_collision_error() -> f64 {
    let phi = uniform_qutrit();
    TritBitFunction::all()
        .filter(|f| !f.all_equal())
        .map(|f| qutrit_overlap(&phi, &qt_oracle(f, &phi)).norm_sqr())
        .fold(0.0, f64::max)
}

/// A normalized qutrit together with its third-order tag `n mod 3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaggedDCState {
    psi: Qutrit,
    tag: u8,
}

impl TaggedDCState {
    /// `None` unless `||psi|| = 1` within `1e-12`.
    pub fn new(psi: Qutrit, tag: i64) -> Option<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        ((norm2.sqrt() - 1.0).abs() <= 1e-12).then_some(Self {
            psi,
            tag: tag.rem_euclid(3) as u8,
        })
    }

    pub fn psi(&self) -> &Qutrit {
        &self.psi
    }

    pub fn tag(&self) -> u8 {
        self.tag
    }
}

/// The cube `rho^(n)(psi)`, with 0-based indices:
/// `rho_iij = -Re(conj(c_i) c_j)/sqrt 6` and `rho_ijj = -Im(conj(c_i) c_j)/sqrt 6` for
/// `i < j`, `rho_iii = (1 - |c_i|^2)/2`, `rho_012 = omega^n / (2 sqrt 3)`.
pub fn dc_associate(s: &TaggedDCState) -> Cube {
    let c = &s.psi;
    let mut cube = Cube::zero();
    for i in 0..3 {
        cube.set(i, i, i, c64((1.0 - c[i].norm_sqr()) / 2.0, 0.0));
        for j in i + 1..3 {
            let z = c[i].conj() * c[j];
            cube.set_doubled(i, j, -z.re / SQRT6);
            cube.set_doubled(j, i, -z.im / SQRT6);
        }
    }
    cube.set_third_order(omega_pow(s.tag as i64) / (2.0 * SQRT3));
    cube
}

/// The pairing between two tagged cubes, computed two ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DcPairInner {
    /// Full 27-term contraction of the associated cubes.
    pub contraction: f64,
    /// `(1 + |<phi|psi>|^2)/4 + cos(2 pi (n - m)/3)/2`
    pub closed_form: f64,
}

impl DcPairInner {
    pub fn discrepancy(&self) -> f64 {
        (self.contraction - self.closed_form).abs()
    }
}

pub fn dc_pair_inner(a: &TaggedDCState, b: &TaggedDCState) -> DcPairInner {
    let contraction = cube_inner(&dc_associate(a), &dc_associate(b)).re;
    let overlap = qutrit_overlap(&a.psi, &b.psi).norm_sqr();
    let dn = a.tag as f64 - b.tag as f64;
    let closed_form =
        0.25 * (1.0 + overlap) + 0.5 * (2.0 * std::f64::consts::PI * dn / 3.0).cos();
    DcPairInner {
        contraction,
        closed_form,
    }
}

/// `(psi, n) -> (O_f psi, n + f(0) + f(1) + f(2))`
pub fn dc_oracle(f: TritBitFunction, s: &TaggedDCState) -> TaggedDCState {
    TaggedDCState {
        psi: qt_oracle(f, &s.psi),
        tag: (s.tag + f.weight()) % 3,
    }
}

/// Worst-case single-query error of the density-cube oracle, starting from the tagged
/// uniform superposition with tag 0.
pub fn dc_collision_error() -> DcPairInner {
    let start = TaggedDCState::new(uniform_qutrit(), 0).expect("normalized");
    TritBitFunction::all()
        .filter(|f| !f.all_equal())
        .map(|f| dc_pair_inner(&start, &dc_oracle(f, &start)))
        .max_by(|x, y| x.contraction.total_cmp(&y.contraction))
        .expect("six non-constant functions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densitycube::is_hermitian_cube;
    use crate::sampling::{random_pure_state, seeded_rng};

    fn to_qutrit(v: Vec<C64>) -> Qutrit {
        [v[0], v[1], v[2]]
    }

    #[test]
    fn eight_functions() {
        let all: Vec<_> = TritBitFunction::all().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all.iter().filter(|f| f.all_equal()).count(), 2);
    }

    #[test]
    fn quantum_oracle_examples() {
        let phi = uniform_qutrit();
        assert_eq!(qt_oracle(TritBitFunction::new([0, 0, 0]), &phi), phi);
        let out = qt_oracle(TritBitFunction::new([1, 0, 0]), &phi);
        let r = 1.0 / 3f64.sqrt();
        assert_eq!(out, [c64(-r, 0.0), c64(r, 0.0), c64(r, 0.0)]);
        for f in TritBitFunction::all() {
            assert_eq!(qt_oracle(f, &qt_oracle(f, &phi)), phi);
        }
    }

    #[test]
    fn quantum_error_one_ninth() {
        assert!((qt_collision_error() - 1.0 / 9.0).abs() < 1e-12);
        let phi = uniform_qutrit();
        let ov = qutrit_overlap(&phi, &qt_oracle(TritBitFunction::new([1, 1, 1]), &phi));
        assert!((ov.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn association_of_basis_state() {
        let s = TaggedDCState::new([c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0)], 0).unwrap();
        let cube = dc_associate(&s);
        assert_eq!(cube.get(0, 0, 0), c64(0.0, 0.0));
        assert_eq!(cube.get(1, 1, 1), c64(0.5, 0.0));
        assert_eq!(cube.get(2, 2, 2), c64(0.5, 0.0));
        assert!((cube.get(0, 1, 2).re - 1.0 / (2.0 * 3f64.sqrt())).abs() < 1e-15);
        assert!(is_hermitian_cube(&cube, 1e-12).is_valid());
    }

    #[test]
    fn associated_cubes_are_normalized_hermitian() {
        let mut rng = seeded_rng(3);
        for n in 0..3 {
            let s = TaggedDCState::new(to_qutrit(random_pure_state(3, &mut rng)), n).unwrap();
            let cube = dc_associate(&s);
            assert!(is_hermitian_cube(&cube, 1e-12).is_valid());
            assert!((cube_inner(&cube, &cube).re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn pair_inner_special_values() {
        let phi = uniform_qutrit();
        let a = TaggedDCState::new(phi, 0).unwrap();
        let b = TaggedDCState::new(phi, 1).unwrap();
        let same = dc_pair_inner(&a, &a);
        assert!((same.contraction - 1.0).abs() < 1e-12);
        let shifted = dc_pair_inner(&a, &b);
        assert!((shifted.contraction - 0.25).abs() < 1e-12);
        assert!(shifted.discrepancy() < 1e-12);
    }

    #[test]
    fn dc_oracle_examples() {
        let phi = uniform_qutrit();
        let s = TaggedDCState::new(phi, 0).unwrap();
        assert_eq!(dc_oracle(TritBitFunction::new([0, 0, 0]), &s), s);
        let out = dc_oracle(TritBitFunction::new([1, 0, 0]), &s);
        assert_eq!(out.tag(), 1);
        assert_eq!(out.psi(), &qt_oracle(TritBitFunction::new([1, 0, 0]), &phi));
        let out = dc_oracle(TritBitFunction::new([1, 1, 1]), &s);
        assert_eq!(out.tag(), 0);
        assert_eq!(out.psi(), &phi.map(|z| -z));
    }

    #[test]
    fn dc_error_matches_closed_form_and_beats_quantum() {
        let err = dc_collision_error();
        assert!(err.discrepancy() < 1e-12);
        // 1/4 (1 + 1/9) + 1/2 cos(2 pi / 3)
        assert!((err.closed_form - 1.0 / 36.0).abs() < 1e-12);
        assert!(qt_collision_error() - err.contraction > 0.05);
    }

    #[test]
    fn rejects_unnormalized_state() {
        assert!(TaggedDCState::new([c64(1.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0)], 0).is_none());
    }
}
