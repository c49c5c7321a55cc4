//! Seeded random states, unitaries and Hermitian matrices.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::numerics::{c64, ComplexMatrix, C64};

pub type SampleRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_c64<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c64(re, im)
}

fn normalize(v: &mut [C64]) {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in v.iter_mut() {
        *z /= norm;
    }
}

/// Haar-random unit vector in `C^dim`.
pub fn random_pure_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<C64> {
    let mut v: Vec<C64> = (0..dim).map(|_| gaussian_c64(rng)).collect();
    normalize(&mut v);
    v
}

/// `count` orthonormal Haar-random vectors in `C^dim` (Gram-Schmidt on Gaussian vectors).
pub fn random_orthonormal<R: Rng + ?Sized>(dim: usize, count: usize, rng: &mut R) -> Vec<Vec<C64>> {
    assert!(count <= dim, "cannot draw {count} orthonormal vectors in dimension {dim}");
    let mut basis: Vec<Vec<C64>> = Vec::with_capacity(count);
    while basis.len() < count {
        let mut v: Vec<C64> = (0..dim).map(|_| gaussian_c64(rng)).collect();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for b in &basis {
                let overlap: C64 = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= overlap * bi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            normalize(&mut v);
            basis.push(v);
        }
    }
    basis
}

/// Haar-random unitary; columns are `random_orthonormal(dim, dim)`.
pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let cols = random_orthonormal(dim, dim, rng);
    ComplexMatrix::from_fn(dim, dim, |r, c| cols[c][r])
}

/// Density matrix mixing `dim` Haar-random pure states with uniformly drawn weights.
pub fn random_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let weights: Vec<f64> = (0..dim).map(|_| rng.random::<f64>()).collect();
    let total: f64 = weights.iter().sum();
    let mut rho = ComplexMatrix::zeros(dim, dim);
    for w in weights {
        let psi = random_pure_state(dim, rng);
        rho = &rho + &ComplexMatrix::projector(&psi).scale_real(w / total);
    }
    rho
}

/// Hermitian matrix with i.i.d. Gaussian entries (GUE-like, unnormalized).
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, dim, |_, _| gaussian_c64(rng));
    (&g + &g.dagger()).scale_real(0.5)
}

/// Convex weights of length `k` drawn uniformly from the simplex.
pub fn random_simplex<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = (0..k).map(|_| -rng.random::<f64>().max(f64::MIN_POSITIVE).ln()).collect();
    let total: f64 = e.iter().sum();
    e.into_iter().map(|x| x / total).collect()
}

pub fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    gaussian_c64(rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{eig_hermitian, is_unitary};

    #[test]
    fn haar_unitary_is_unitary() {
        let mut rng = seeded_rng(1);
        for dim in [1, 2, 5, 9] {
            assert!(is_unitary(&haar_unitary(dim, &mut rng), 1e-12));
        }
    }

    #[test]
    fn random_density_is_state() {
        let mut rng = seeded_rng(2);
        let rho = random_density(4, &mut rng);
        assert!((rho.trace().re - 1.0).abs() < 1e-12);
        assert!(rho.is_hermitian(1e-14));
        assert!(eig_hermitian(&rho).unwrap().min_eigenvalue() > -1e-12);
    }

    #[test]
    fn same_seed_same_samples() {
        let a = random_pure_state(3, &mut seeded_rng(7));
        let b = random_pure_state(3, &mut seeded_rng(7));
        assert_eq!(a, b);
    }

    #[test]
    fn simplex_weights_sum_to_one() {
        let w = random_simplex(6, &mut seeded_rng(3));
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        assert!(w.iter().all(|&x| x >= 0.0));
    }
}
