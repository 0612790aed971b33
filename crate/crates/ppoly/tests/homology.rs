use ppoly::homology::{ar_sequence, ext1_dim, ext1_table, extension_list, hom_module, hom_via_columns, nu, omega, stable_hom, tau, tau_inv};
use ppoly::order::{graded_dim, hom_descriptor, lambda_matrix, Descriptor};
use ppoly::{PolygonCtx, TaggedEdge};
use proptest::prelude::*;

#[test]
fn descriptor_algebra_values() {
    for n in 3..=6usize {
        let m = n as i64;
        assert_eq!(hom_descriptor(n, &Descriptor::u(0), &Descriptor::u(0)), Descriptor::u(0));
        assert!(hom_descriptor(n, &Descriptor::v(3), &Descriptor::w(5)).is_zero());
        assert_eq!(hom_descriptor(n, &Descriptor::v(1), &Descriptor::u(3)), Descriptor::v(2 + 2 * m));
        assert_eq!(graded_dim(n, &Descriptor::u(0), 0), 1);
        assert_eq!(graded_dim(n, &Descriptor::u(0), 2 * m), 2);
        for k in -3..4 {
            assert_eq!(graded_dim(n, &Descriptor::v(k), k + 1), 0);
        }
        let lam = lambda_matrix(&PolygonCtx::new(n).unwrap());
        for i in 2..=n {
            assert_eq!(lam.at(i, i - 1), Descriptor::uv(2 * (m - 1)));
        }
    }
}

#[test]
fn hom_examples() {
    let c = PolygonCtx::new(5).unwrap();
    let a = c.edge(1, 3).unwrap();
    assert_eq!(hom_module(&c, &a, &a), Descriptor::u(0));
    assert!(hom_module(&c, &TaggedEdge::plain(1), &TaggedEdge::notched(1)).is_zero());
    assert!(hom_module(&c, &TaggedEdge::plain(1), &TaggedEdge::notched(2)).is_zero());
    for x in c.all_edges() {
        for y in c.all_edges() {
            assert_eq!(hom_module(&c, &x, &y), hom_via_columns(&c, &x, &y), "{x} {y}");
        }
    }
}

#[test]
fn stable_and_ext_examples() {
    let c6 = PolygonCtx::new(6).unwrap();
    let a = c6.edge(1, 4).unwrap();
    assert_eq!(stable_hom(&c6, &a, &a).epsilon, 1);
    let c = PolygonCtx::new(5).unwrap();
    assert_eq!(stable_hom(&c, &TaggedEdge::plain(1), &TaggedEdge::plain(3)).epsilon, 1);
    for b in c.all_edges() {
        assert_eq!(stable_hom(&c, &c.side(2), &b).epsilon, 0);
    }
    assert_eq!(ext1_dim(&c, &TaggedEdge::plain(1), &TaggedEdge::notched(3)), 1);
    for x in c.all_edges() {
        assert_eq!(ext1_dim(&c, &x, &x), 0);
    }
}

#[test]
fn translations() {
    let c = PolygonCtx::new(5).unwrap();
    assert_eq!(tau(&c, &c.edge(3, 5).unwrap()).unwrap(), c.edge(2, 4).unwrap());
    assert_eq!(tau(&c, &TaggedEdge::plain(3)).unwrap(), TaggedEdge::notched(2));
    assert_eq!(nu(&c, &TaggedEdge::plain(3)).unwrap(), TaggedEdge::plain(1));
    assert_eq!(omega(&c, &TaggedEdge::plain(1)).unwrap(), TaggedEdge::notched(2));
    assert!(tau(&c, &c.side(4)).is_err());
    assert!(omega(&c, &c.side(4)).is_err());
}

#[test]
fn ar_sequences() {
    for n in 3..=7 {
        let c = PolygonCtx::new(n).unwrap();
        for i in 1..=n {
            let s = ar_sequence(&c, &TaggedEdge::plain(i)).unwrap();
            assert_eq!(s.middle, vec![c.edge((i % n + 1) as i64, i as i64).unwrap()]);
            assert_eq!(s.right, tau_inv(&c, &TaggedEdge::plain(i)).unwrap());
        }
        for a in c.tagged_arcs() {
            let s = ar_sequence(&c, &a).unwrap();
            assert!(extension_list(&c, &s.right, &a).contains(&s.middle), "{a}");
        }
    }
}

fn non_side_pair() -> impl Strategy<Value = (usize, usize, usize)> {
    (3usize..=8).prop_flat_map(|n| (Just(n), 0..n * n, 0..n * n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn two_calabi_yau((n, x, y) in non_side_pair()) {
        let c = PolygonCtx::new(n).unwrap();
        let arcs = c.tagged_arcs();
        let (a, b) = (arcs[x], arcs[y]);
        prop_assert_eq!(ext1_dim(&c, &a, &b), ext1_dim(&c, &b, &a));
        prop_assert_eq!(ext1_dim(&c, &a, &b), ext1_table(&c, &a, &b));
        prop_assert_eq!(ext1_dim(&c, &a, &b), c.crossing_number(&a, &b).unwrap());
        prop_assert_eq!(extension_list(&c, &a, &b).len(), ext1_dim(&c, &a, &b));
    }

    #[test]
    fn tau_is_omega_after_nu((n, x, _y) in non_side_pair()) {
        let c = PolygonCtx::new(n).unwrap();
        let a = c.tagged_arcs()[x];
        prop_assert_eq!(tau(&c, &a).unwrap(), omega(&c, &nu(&c, &a).unwrap()).unwrap());
        prop_assert_eq!(tau_inv(&c, &tau(&c, &a).unwrap()).unwrap(), a);
        let mut b = a;
        for _ in 0..n {
            b = tau(&c, &b).unwrap();
        }
        prop_assert_eq!(b.a1, a.a1);
        prop_assert_eq!(b == a, n % 2 == 0 || !a.is_puncture());
        prop_assert_eq!(ext1_dim(&c, &tau_inv(&c, &a).unwrap(), &a), 1);
    }
}
