use ppoly::polygon::{EdgeKind, Interval};
use ppoly::{Error, PolygonCtx, TaggedEdge};
use proptest::prelude::*;

fn ctx(n: usize) -> PolygonCtx {
    PolygonCtx::new(n).unwrap()
}

#[test]
fn digon_rejected() {
    assert_eq!(PolygonCtx::new(2), Err(Error::TooFewVertices(2)));
}

#[test]
fn distances_and_intervals() {
    let c = ctx(6);
    assert_eq!(c.d(2, 5), 3);
    assert_eq!(c.d(5, 2), 3);
    assert_eq!(c.d(4, 4), 0);
    assert!(c.within(Interval::Open, 2, 5, 3));
    assert!(!c.within(Interval::Open, 2, 5, 2));
    assert!(c.within(Interval::Open, 5, 2, 6));
    assert!(!c.within(Interval::Open, 5, 2, 3));
    assert!(!c.within(Interval::Open, 3, 3, 3));
    assert!(c.within(Interval::Open, 3, 3, 1));
}

#[test]
fn theta_lengths_of_the_fan_arrows() {
    for n in 3..=8 {
        let c = ctx(n);
        for i in 1..=n {
            let next = i % n + 1;
            assert_eq!(c.theta_length(&c.side(i), &c.side(next)), 2);
            assert_eq!(c.theta_length(&c.side(i), &TaggedEdge::plain(i)), n - 1);
        }
    }
}

#[test]
fn vdash_on_sides() {
    for n in 3..=7 {
        let c = ctx(n);
        for i in 1..=n {
            let next = c.side(i % n + 1);
            assert!(c.vdash(&next, &c.side(i)).unwrap());
            assert!(!c.vdash(&c.side(i), &next).unwrap());
        }
    }
    let c = ctx(6);
    let a = c.edge(1, 4).unwrap();
    assert!(!c.vdash(&a, &a).unwrap());
    assert!(c.vdash(&TaggedEdge::plain(1), &a).is_err());
}

#[test]
fn compatibility_examples() {
    let c = ctx(5);
    assert!(c.is_compatible(&TaggedEdge::plain(1), &TaggedEdge::notched(1)));
    assert!(!c.is_compatible(&TaggedEdge::plain(1), &TaggedEdge::notched(3)));
    assert!(!c.is_compatible(&c.edge(1, 3).unwrap(), &c.edge(2, 4).unwrap()));
    assert_eq!(c.crossing_number(&TaggedEdge::plain(1), &TaggedEdge::notched(3)), Ok(1));
    assert_eq!(c.crossing_number(&c.edge(1, 3).unwrap(), &c.edge(2, 4).unwrap()), Ok(1));
    assert!(c.crossing_number(&c.side(1), &TaggedEdge::plain(1)).is_err());
}

#[test]
fn edge_census() {
    for (n, want) in [(3, 12), (4, 20), (8, 72)] {
        let edges = ctx(n).all_edges();
        assert_eq!(edges.len(), want);
        assert_eq!(edges.iter().filter(|e| e.kind == EdgeKind::Side).count(), n);
    }
}

#[test]
fn malformed_edges() {
    let c = ctx(5);
    assert!(c.edge(3, 3).is_err());
    assert_eq!(c.edge(3, 4).unwrap(), c.side(3));
    assert!(serde_json::from_str::<TaggedEdge>(r#"{"kind":"arc","a1":2,"a2":2}"#).is_err());
    let e: TaggedEdge = serde_json::from_str(r#"{"kind":"arc","a1":9,"a2":2}"#).unwrap();
    assert!(c.check_edge(e).is_err());
}

fn edge_strategy() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (3usize..=8).prop_flat_map(|n| {
        let k = n * n + n;
        (Just(n), 0..k, 0..k, 0..k)
    })
}

proptest! {
    #[test]
    fn distance_is_antisymmetric_mod_n(n in 3usize..=9, r in 1usize..=9, s in 1usize..=9) {
        prop_assume!(r <= n && s <= n);
        let c = ctx(n);
        prop_assert_eq!((c.d(r, s) + c.d(s, r)) % n, 0);
    }

    #[test]
    fn theta_triangle_inequality((n, x, y, z) in edge_strategy()) {
        let c = ctx(n);
        let e = c.all_edges();
        let (a, b, d) = (e[x], e[y], e[z]);
        prop_assert_eq!(c.theta_length(&a, &a), 0);
        prop_assert!(c.theta_defect(&a, &b, &d) >= 0);
    }

    #[test]
    fn crossing_is_symmetric((n, x, y, _z) in edge_strategy()) {
        let c = ctx(n);
        let e = c.all_edges();
        let (a, b) = (e[x], e[y]);
        prop_assume!(!a.is_side() && !b.is_side());
        prop_assert_eq!(c.crossing_number(&a, &b), c.crossing_number(&b, &a));
        prop_assert_eq!(c.crossing_number(&a, &a), Ok(0));
        prop_assert_eq!(c.is_compatible(&a, &b), c.is_compatible(&b, &a));
    }

    #[test]
    fn json_roundtrip((n, x, _y, _z) in edge_strategy()) {
        let c = ctx(n);
        let e = c.all_edges()[x];
        let s = serde_json::to_string(&e).unwrap();
        let back: TaggedEdge = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(c.check_edge(back).unwrap(), e);
    }
}
