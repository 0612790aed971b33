use ppoly::triangulation::{enumerate_all, exchange_graph, PuncturePattern};
use ppoly::{Error, PolygonCtx, TaggedEdge, TaggedTriangulation};
use proptest::prelude::*;

#[test]
fn fan_validates_and_subsets_do_not() {
    let c = PolygonCtx::new(5).unwrap();
    let fan = TaggedTriangulation::fan(&c, 1);
    assert_eq!(fan.arcs().len(), 5);
    assert!(TaggedTriangulation::validate(&c, fan.arcs()).is_ok());
    assert!(matches!(TaggedTriangulation::validate(&c, &fan.arcs()[1..]), Err(Error::NotMaximal(_))));
    let bad = [TaggedEdge::plain(1), TaggedEdge::notched(3)];
    assert!(matches!(TaggedTriangulation::validate(&c, &bad), Err(Error::Incompatible(_, _))));
}

#[test]
fn counts() {
    for (n, want) in [(3, 14), (4, 50), (5, 182)] {
        assert_eq!(enumerate_all(&PolygonCtx::new(n).unwrap()).unwrap().len(), want);
    }
}

#[test]
fn fan_flip_is_unique() {
    let c = PolygonCtx::new(4).unwrap();
    let fan = TaggedTriangulation::fan(&c, 1);
    let (t, added) = fan.flip(&c.edge(1, 3).unwrap()).unwrap();
    assert_eq!(added, c.edge(2, 4).unwrap());
    assert!(t.contains(&added));
}

#[test]
fn every_flip_shape_occurs() {
    // arc-arc, arc-to-puncture and puncture-to-puncture replacements
    let c = PolygonCtx::new(4).unwrap();
    let mut seen = [false; 4];
    for t in enumerate_all(&c).unwrap() {
        for a in t.arcs() {
            let (_, b) = t.flip(a).unwrap();
            seen[usize::from(a.is_puncture()) * 2 + usize::from(b.is_puncture())] = true;
        }
    }
    assert_eq!(seen, [true; 4]);
}

#[test]
fn exchange_graphs_are_regular() {
    for (n, v) in [(3, 14), (4, 50)] {
        let g = exchange_graph(&PolygonCtx::new(n).unwrap()).unwrap();
        assert_eq!(g.triangulations.len(), v);
        assert!(g.is_connected());
        assert!((0..v).all(|k| g.degree(k) == n));
    }
}

#[test]
fn puncture_patterns() {
    let c = PolygonCtx::new(4).unwrap();
    assert_eq!(TaggedTriangulation::plain_star(&c).puncture_pattern(), PuncturePattern::AllPlain(4));
    assert_eq!(TaggedTriangulation::fan(&c, 1).puncture_pattern(), PuncturePattern::BothTags(1));
}

#[test]
fn json_roundtrip() {
    let c = PolygonCtx::new(5).unwrap();
    for t in enumerate_all(&c).unwrap().iter().step_by(17) {
        let s = serde_json::to_string(t).unwrap();
        let back: TaggedTriangulation = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn flip_is_an_involution(n in 3usize..=6, pick in any::<prop::sample::Index>(), arc in 0usize..6) {
        let c = PolygonCtx::new(n).unwrap();
        let tris = enumerate_all(&c).unwrap();
        let t = pick.get(&tris);
        let a = t.arcs()[arc % n];
        let (t2, b) = t.flip(&a).unwrap();
        prop_assert_ne!(a, b);
        prop_assert_ne!(&t2, t);
        let (back, a2) = t2.flip(&b).unwrap();
        prop_assert_eq!(&back, t);
        prop_assert_eq!(a2, a);
    }
}
