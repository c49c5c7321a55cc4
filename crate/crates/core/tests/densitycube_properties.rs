use hoi_core::densitycube::{
    apply_cvec_transform, canonical_cubes, constant_t, constant_t_prime, cube_inner, cube_to_cvec,
    cvec_to_cube, embed_hermitian, embed_quantum, hyperdecohere, is_hermitian_cube,
    random_hermitian_cube, split_orders, CVec, Cube, QutritDensity,
};
use hoi_core::numerics::{c64, C64};
use hoi_core::sampling::{random_complex, random_density, random_hermitian, random_simplex, seeded_rng, SampleRng};
use proptest::prelude::*;


fn random_cvec(rng: &mut SampleRng) -> CVec {
    CVec::new(std::array::from_fn(|_| random_complex(rng)))
}

fn random_state_cvec(rng: &mut SampleRng) -> CVec {
    let p = random_simplex(3, rng);
    let z = random_complex(rng) * 0.3;
    CVec::hermitian([p[0], p[1], p[2]], z)
}

#[test]
fn c_basis_is_orthonormal() {
    for a in 0..5 {
        for b in 0..5 {
            let got = cube_inner(&cvec_to_cube(&CVec::basis(a)), &cvec_to_cube(&CVec::basis(b)));
            let expected = if a == b { 1.0 } else { 0.0 };
            assert!((got - c64(expected, 0.0)).norm() <= 1e-14, "({a},{b})");
        }
    }
}

#[test]
fn cvec_round_trip_and_inner_product() {
    let mut rng = seeded_rng(1);
    for _ in 0..100 {
        let v = random_cvec(&mut rng);
        let w = random_cvec(&mut rng);
        let back = cube_to_cvec(&cvec_to_cube(&v), 1e-12).unwrap();
        assert!(back.max_abs_diff(&v) <= 1e-14);
        let via_cubes = cube_inner(&cvec_to_cube(&v), &cvec_to_cube(&w));
        assert!((via_cubes - v.inner(&w)).norm() <= 1e-14);
    }
}

#[test]
fn t_preserves_hermitian_form_and_t_prime_does_not() {
    let mut rng = seeded_rng(2);
    let t = constant_t();
    for _ in 0..1000 {
        let v = random_state_cvec(&mut rng);
        let img = apply_cvec_transform(&t, &v);
        assert!(img.0[..3].iter().all(|z| z.im.abs() <= 1e-12));
        assert!((img.0[4] - img.0[3].conj()).norm() <= 1e-12);
    }
    let rho1 = canonical_cubes().rho[0];
    assert!(!apply_cvec_transform(&constant_t_prime(), &rho1).is_hermitian_form(1e-12));
}

#[test]
fn embedding_is_an_isometry() {
    let mut rng = seeded_rng(3);
    for _ in 0..1000 {
        let rho = random_density(3, &mut rng);
        let sigma = random_density(3, &mut rng);
        let qt = rho.hs_inner(&sigma);
        let dc = cube_inner(&embed_hermitian(&rho), &embed_hermitian(&sigma));
        assert!((qt - dc).norm() <= 1e-12);
    }
}

#[test]
fn hyperdecoherence_left_inverts_embedding() {
    let mut rng = seeded_rng(4);
    for _ in 0..1000 {
        let rho = QutritDensity::new(random_density(3, &mut rng)).unwrap();
        let back = hyperdecohere(&embed_quantum(&rho));
        assert!(back.max_abs_diff(rho.matrix()) <= 1e-12);
    }
}

#[test]
fn hyperdecoherence_is_adjoint_of_embedding() {
    let mut rng = seeded_rng(5);
    let s = canonical_cubes();
    let mut cubes: Vec<Cube> = s.rho.iter().map(cvec_to_cube).collect();
    for _ in 0..50 {
        let w = random_simplex(3, &mut rng);
        cubes.push(
            cubes[0]
                .scale(w[0])
                .add(&cubes[1].scale(w[1]))
                .add(&cubes[2].scale(w[2])),
        );
        cubes.push(random_hermitian_cube(&mut rng));
    }
    for rho in &cubes {
        for _ in 0..10 {
            let sigma = random_density(3, &mut rng);
            let lhs = hyperdecohere(rho).hs_inner(&sigma);
            let rhs = cube_inner(rho, &embed_hermitian(&sigma));
            assert!((lhs - rhs).norm() <= 1e-12);
        }
    }
}

#[test]
fn hyperdecoherence_of_states_is_hermitian_unit_trace() {
    let mut rng = seeded_rng(6);
    let s = canonical_cubes();
    for _ in 0..100 {
        let w = random_simplex(3, &mut rng);
        let mix = s.cubes[0]
            .scale(w[0])
            .add(&s.cubes[1].scale(w[1]))
            .add(&s.cubes[2].scale(w[2]));
        let d = hyperdecohere(&mix);
        assert!(d.is_hermitian(1e-14));
        assert!((d.trace() - c64(1.0, 0.0)).norm() <= 1e-12);
        assert!(QutritDensity::new(d).is_ok());
    }
}

#[test]
fn split_orders_is_a_complementary_projection_pair() {
    let mut rng = seeded_rng(7);
    for _ in 0..100 {
        let cube = Cube::from_fn(|_, _, _| random_complex(&mut rng));
        let (third, lower) = split_orders(&cube);
        assert_eq!(third.add(&lower), cube);
        let (t2, l2) = split_orders(&third);
        assert_eq!(t2, third);
        assert_eq!(l2, Cube::zero());
        let (t3, l3) = split_orders(&lower);
        assert_eq!(t3, Cube::zero());
        assert_eq!(l3, lower);
    }
}

#[test]
fn embedded_random_hermitian_matrices_are_hermitian_cubes() {
    let mut rng = seeded_rng(8);
    for _ in 0..100 {
        let h = random_hermitian(3, &mut rng);
        let check = is_hermitian_cube(&embed_hermitian(&h), 1e-12);
        assert!(!check.fails(1) && !check.fails(2));
    }
}

fn arb_cube() -> impl Strategy<Value = Cube> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 27).prop_map(|v| {
        let mut it = v.into_iter();
        Cube::from_fn(|_, _, _| {
            let (a, b) = it.next().unwrap();
            C64::new(a, b)
        })
    })
}

proptest! {
    #[test]
    fn inner_product_is_conjugate_symmetric(a in arb_cube(), b in arb_cube()) {
        prop_assert_eq!(cube_inner(&a, &b), cube_inner(&b, &a).conj());
    }

    #[test]
    fn inner_product_is_real_on_hermitian_pairs(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let a = random_hermitian_cube(&mut rng);
        let b = random_hermitian_cube(&mut rng);
        prop_assert!(cube_inner(&a, &b).im.abs() <= 1e-12);
    }

    #[test]
    fn random_hermitian_cubes_satisfy_conditions(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let cube = random_hermitian_cube(&mut rng);
        let check = is_hermitian_cube(&cube, 1e-12);
        prop_assert!(!check.fails(1) && !check.fails(2));
    }
}
