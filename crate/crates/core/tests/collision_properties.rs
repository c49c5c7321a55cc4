use hoi_core::collision::{
    dc_associate, dc_collision_error, dc_oracle, dc_pair_inner, qt_collision_error, qt_oracle,
    TaggedDCState, TritBitFunction,
};
use hoi_core::densitycube::{cube_inner, is_hermitian_cube};
use hoi_core::sampling::{random_pure_state, seeded_rng, SampleRng};
use rand::Rng;

fn random_tagged(rng: &mut SampleRng) -> TaggedDCState {
    let v = random_pure_state(3, rng);
    TaggedDCState::new([v[0], v[1], v[2]], rng.random_range(0..3)).unwrap()
}

#[test]
fn contraction_matches_closed_form() {
    let mut rng = seeded_rng(31);
    for _ in 0..1000 {
        let a = random_tagged(&mut rng);
        let b = random_tagged(&mut rng);
        let p = dc_pair_inner(&a, &b);
        assert!(p.discrepancy() <= 1e-12, "{p:?}");
        assert!(p.contraction >= -1e-12);
    }
}

#[test]
fn oracles_preserve_norm_and_trace() {
    let mut rng = seeded_rng(32);
    for _ in 0..50 {
        let s = random_tagged(&mut rng);
        for f in TritBitFunction::all() {
            let q = qt_oracle(f, s.psi());
            let norm: f64 = q.iter().map(|z| z.norm_sqr()).sum();
            assert!((norm - 1.0).abs() <= 1e-12);

            let out = dc_oracle(f, &s);
            let cube = dc_associate(&out);
            assert!(is_hermitian_cube(&cube, 1e-12).is_valid(), "fragment left for {f:?}");
            assert!((cube.trace().re - 1.0).abs() <= 1e-12);
            assert!((cube_inner(&cube, &cube).re - 1.0).abs() <= 1e-12);
        }
    }
}

#[test]
fn constant_functions_give_zero_error_on_both_oracles() {
    let phi = hoi_core::collision::uniform_qutrit();
    let start = TaggedDCState::new(phi, 0).unwrap();
    for f in TritBitFunction::all().filter(|f| f.all_equal()) {
        let p = dc_pair_inner(&start, &dc_oracle(f, &start));
        assert!((p.contraction - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn density_cube_advantage_margin() {
    let dc = dc_collision_error();
    assert!(dc.discrepancy() <= 1e-12);
    assert!(qt_collision_error() - dc.contraction > 0.05);
}
