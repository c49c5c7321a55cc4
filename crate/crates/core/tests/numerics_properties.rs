use hoi_core::numerics::{
    eig_hermitian, partial_trace, permute_factors, tensor_product, ComplexMatrix, TracedFactor,
    C64, EIG_TOL,
};
use hoi_core::sampling::{random_hermitian, seeded_rng};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn eigen_residuals_on_random_hermitian_matrices() {
    let mut rng = seeded_rng(2024);
    for trial in 0..1000 {
        let n = rng.random_range(1..=32usize);
        // keep the big ones rarer so the suite stays quick
        let n = if trial % 10 == 0 { n } else { n.min(8) };
        let h = random_hermitian(n, &mut rng);
        let eig = eig_hermitian(&h).unwrap();
        let scale = h.frobenius_norm().max(1.0);
        let recon = (&eig.reconstruct() - &h).frobenius_norm();
        assert!(recon <= EIG_TOL * scale, "trial {trial}, n={n}: residual {recon}");
        let v = &eig.eigenvectors;
        let ortho = (&(&v.dagger() * v) - &ComplexMatrix::identity(n)).frobenius_norm();
        assert!(ortho <= EIG_TOL, "trial {trial}: orthonormality {ortho}");
        assert!(eig.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }
}

#[test]
fn eigen_handles_degenerate_spectra() {
    let mut rng = seeded_rng(5);
    let u = hoi_core::sampling::haar_unitary(6, &mut rng);
    let d = ComplexMatrix::diag_real(&[2.0, 2.0, 2.0, -1.0, -1.0, 0.0]);
    let h = &(&u * &d) * &u.dagger();
    let eig = eig_hermitian(&h).unwrap();
    let expected = [2.0, 2.0, 2.0, 0.0, -1.0, -1.0];
    for (a, b) in eig.eigenvalues.iter().zip(expected) {
        assert!((a - b).abs() < 1e-12);
    }
}

fn small_int_matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-5i32..=5, -5i32..=5), dim * dim).prop_map(move |v| {
        ComplexMatrix::new(
            dim,
            dim,
            v.into_iter().map(|(a, b)| C64::new(a as f64, b as f64)).collect(),
        )
        .unwrap()
    })
}

fn gaussian_matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim * dim).prop_map(move |v| {
        ComplexMatrix::new(dim, dim, v.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap()
    })
}

proptest! {
    #[test]
    fn kron_is_associative_on_integers(
        a in small_int_matrix(2),
        b in small_int_matrix(3),
        c in small_int_matrix(2),
    ) {
        let left = tensor_product(&tensor_product(&a, &b), &c);
        let right = tensor_product(&a, &tensor_product(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn partial_trace_commutes_with_swap(m in gaussian_matrix(6)) {
        // M on C^2 (x) C^3; swapped lives on C^3 (x) C^2
        let swapped = permute_factors(&m, &[2, 3], &[1, 0]).unwrap();
        let via_swap = partial_trace(&swapped, 3, 2, TracedFactor::First).unwrap();
        let direct = partial_trace(&m, 2, 3, TracedFactor::Second).unwrap();
        prop_assert!(via_swap.max_abs_diff(&direct) <= 1e-12);
    }

    #[test]
    fn partial_trace_preserves_trace(m in gaussian_matrix(6)) {
        for which in [TracedFactor::First, TracedFactor::Second] {
            let p = partial_trace(&m, 2, 3, which).unwrap();
            prop_assert!((p.trace() - m.trace()).norm() <= 1e-12);
        }
    }
}
