use ppoly::graded::{
    ar_window, check_repetitive_d, forget, graded_ext1_dim, graded_hom_dim, lift_triangulation, nu_z,
    objects_at_level, omega_inv_z, omega_z, shift, tau_inv_z, tau_z, GradedIndec, DEFAULT_WINDOW,
};
use ppoly::graded::is_tilting_window;
use ppoly::oracle::hom::{graded_hom_oracle, graded_omega_oracle};
use ppoly::oracle::linalg::{Field, PRIMES};
use ppoly::{PolygonCtx, TaggedEdge, TaggedTriangulation};
use proptest::prelude::*;
use GradedIndec::{Arc, Notch, Star};

#[test]
fn index_maps() {
    let c4 = PolygonCtx::new(4).unwrap();
    assert_eq!(shift(&c4, &Arc { i: 1, j: 3 }, 1), Arc { i: 5, j: 7 });
    let c5 = PolygonCtx::new(5).unwrap();
    assert_eq!(forget(&c5, &Star { i: 6 }), TaggedEdge::plain(1));
    for n in 3..=6 {
        let c = PolygonCtx::new(n).unwrap();
        for i in -5..5 {
            assert_eq!(omega_z(&c, &Star { i }).unwrap(), Notch { i: i + 1 - n as i64 });
        }
    }
}

#[test]
fn fan_lifts() {
    for n in 3..=6usize {
        let c = PolygonCtx::new(n).unwrap();
        let m = n as i64;
        let lift = lift_triangulation(&TaggedTriangulation::fan(&c, 1), None).unwrap();
        let mut want: Vec<GradedIndec> = (m + 3..=2 * m).map(|j| Arc { i: m + 1, j }).collect();
        want.push(Star { i: m + 1 });
        want.push(Notch { i: m + 1 });
        want.sort();
        assert_eq!(lift, want);
        assert!(is_tilting_window(&c, &lift, -(DEFAULT_WINDOW)..=DEFAULT_WINDOW));
        let star = lift_triangulation(&TaggedTriangulation::plain_star(&c), None).unwrap();
        assert_eq!(star, (1..=m).map(|i| Star { i }).collect::<Vec<_>>());
    }
}

#[test]
fn ar_window_has_type_d_shape() {
    for n in 3..=6 {
        let c = PolygonCtx::new(n).unwrap();
        let r = check_repetitive_d(&c, 0, 3);
        assert_eq!(r.orbits, n + 1);
        assert!(r.dynkin_d);
        assert!(r.meshes_checked > 0);
        assert_eq!(r.mesh_mismatches, 0);
        let w = ar_window(&c, 0, 2 * n as i64);
        assert!(w.to_dot().contains("->"));
    }
}

#[test]
fn hom_and_omega_against_oracle() {
    let c = PolygonCtx::new(3).unwrap();
    let field = Field::new(PRIMES[0]);
    let top = 4 * 9;
    let objs = objects_at_level(&c, 6);
    for x in &objs {
        if !x.is_projective() {
            assert!(graded_omega_oracle(&c, x, top, &field), "{x}");
        }
        for l in 4..=9 {
            for y in objects_at_level(&c, l) {
                assert_eq!(graded_hom_oracle(&c, x, &y, top, &field), graded_hom_dim(&c, x, &y).unwrap(), "{x} -> {y}");
            }
        }
    }
}

fn non_projective_object() -> impl Strategy<Value = (usize, GradedIndec)> {
    (3usize..=8, -40i64..40, 0usize..64).prop_map(|(n, level, k)| {
        let c = PolygonCtx::new(n).unwrap();
        let objs: Vec<GradedIndec> = objects_at_level(&c, level).into_iter().filter(|x| !x.is_projective()).collect();
        (n, objs[k % objs.len()])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]
    #[test]
    fn omega_after_nu_is_tau((n, x) in non_projective_object()) {
        let c = PolygonCtx::new(n).unwrap();
        prop_assert_eq!(omega_z(&c, &nu_z(&c, &x)).unwrap(), tau_z(&c, &x).unwrap());
        prop_assert_eq!(tau_inv_z(&c, &tau_z(&c, &x).unwrap()).unwrap(), x);
        prop_assert_eq!(omega_inv_z(&c, &omega_z(&c, &x).unwrap()).unwrap(), x);
        prop_assert_eq!(graded_ext1_dim(&c, &x, &tau_z(&c, &x).unwrap()), 1);
    }
}
