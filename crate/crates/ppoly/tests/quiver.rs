use ppoly::cluster::{is_dynkin_d, mutable_dynkin_graph};
use ppoly::quiver::{build_full_qp, build_ice_qp, check_potential_homogeneous};
use ppoly::triangulation::enumerate_all;
use ppoly::{PolygonCtx, TaggedTriangulation};

#[test]
fn potentials_are_homogeneous() {
    for n in 3..=6 {
        let c = PolygonCtx::new(n).unwrap();
        for t in enumerate_all(&c).unwrap() {
            for qp in [build_full_qp(&t), build_ice_qp(&t)] {
                assert!(qp.terms_are_cycles());
                assert!(check_potential_homogeneous(&qp), "{:?}", t.arcs());
            }
        }
    }
}

#[test]
fn arrows_carry_theta_lengths() {
    let c = PolygonCtx::new(5).unwrap();
    for t in enumerate_all(&c).unwrap() {
        let qp = build_full_qp(&t);
        assert_eq!(qp.frozen.len(), 5);
        for a in &qp.arrows {
            assert_ne!(a.source, a.target);
            assert_eq!(a.theta, c.theta_length(&qp.vertices[a.source], &qp.vertices[a.target]));
        }
        let used = qp.term_counts().iter().filter(|r| !r.is_empty()).count();
        assert!(used > 0);
    }
}

#[test]
fn perturbed_theta_is_detected() {
    let c = PolygonCtx::new(4).unwrap();
    let mut qp = build_ice_qp(&TaggedTriangulation::fan(&c, 1));
    qp.arrows[0].theta += 1;
    assert!(!check_potential_homogeneous(&qp));
}

#[test]
fn fan_triangle_weights() {
    let n = 6;
    let c = PolygonCtx::new(n).unwrap();
    let qp = build_full_qp(&TaggedTriangulation::plain_star(&c));
    assert!(qp.potential.iter().all(|t| qp.term_theta(t) == 2 * n));
}

#[test]
fn min_path_is_theta_length() {
    let c = PolygonCtx::new(5).unwrap();
    for t in enumerate_all(&c).unwrap() {
        let qp = build_ice_qp(&t);
        for (i, a) in qp.vertices.iter().enumerate() {
            assert_eq!(qp.min_path_theta(i, i), Some(0));
            for (j, b) in qp.vertices.iter().enumerate() {
                if !a.tagged_differently(b) {
                    assert_eq!(qp.min_path_theta(i, j), Some(c.theta_length(a, b)), "{a} -> {b}");
                }
            }
        }
    }
}

#[test]
fn fan_mutable_part_is_type_d() {
    for n in 3..=7 {
        let c = PolygonCtx::new(n).unwrap();
        let (m, edges) = mutable_dynkin_graph(&build_ice_qp(&TaggedTriangulation::fan(&c, 1))).unwrap();
        assert_eq!(m, n);
        assert!(is_dynkin_d(m, &edges));
    }
}

#[test]
fn dot_output_lists_every_vertex() {
    let c = PolygonCtx::new(4).unwrap();
    let qp = build_ice_qp(&TaggedTriangulation::fan(&c, 1));
    let dot = qp.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), qp.arrows.len());
}
