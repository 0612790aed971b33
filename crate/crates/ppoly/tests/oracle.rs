use ppoly::homology::{ext1_dim, hom_module, stable_hom};
use ppoly::oracle::linalg::PRIMES;
use ppoly::oracle::ring::TruncatedRing;
use ppoly::oracle::{
    columns_agree, degree_limit, oracle_enumerate_maximal_compatible, oracle_hom_graded, oracle_stable_and_ext,
    relation_failures, DEFAULT_T,
};
use ppoly::order::graded_dim;
use ppoly::{Error, PolygonCtx, TaggedEdge};

#[test]
fn truncated_ring_is_a_commutative_ring() {
    for t in 1..=5 {
        assert!(TruncatedRing::new(t).check_structure());
    }
}

#[test]
fn modules_satisfy_the_relations() {
    for n in 3..=6 {
        let c = PolygonCtx::new(n).unwrap();
        assert_eq!(relation_failures(&c, DEFAULT_T, PRIMES[0]), 0, "n = {n}");
        assert!(columns_agree(&c));
    }
}

#[test]
fn clique_counts() {
    for (n, want) in [(3, 14), (4, 50), (5, 182), (6, 672)] {
        assert_eq!(oracle_enumerate_maximal_compatible(&PolygonCtx::new(n).unwrap()), want);
    }
}

#[test]
fn degree_bound_is_enforced() {
    let c = PolygonCtx::new(4).unwrap();
    let a = c.side(1);
    let limit = degree_limit(4, 3);
    assert_eq!(
        oracle_hom_graded(&c, &a, &a, 3, limit, PRIMES[0]),
        Err(Error::DegreeBound { bound: limit, limit })
    );
    assert!(oracle_hom_graded(&c, &a, &a, 3, limit - 1, PRIMES[0]).is_ok());
}

#[test]
fn endomorphisms_of_a_side() {
    let c = PolygonCtx::new(4).unwrap();
    let h = oracle_hom_graded(&c, &c.side(2), &c.side(2), DEFAULT_T, 10, PRIMES[1]).unwrap();
    assert_eq!(h[&0], 1);
}

#[test]
fn plain_to_notched_vanishes() {
    let c = PolygonCtx::new(4).unwrap();
    let h = oracle_hom_graded(&c, &TaggedEdge::plain(1), &TaggedEdge::notched(1), DEFAULT_T, 31, PRIMES[0]).unwrap();
    assert!(h.values().all(|&d| d == 0));
}

#[test]
fn matches_descriptors_for_both_primes() {
    let c = PolygonCtx::new(3).unwrap();
    let bound = 8 * 3 - 1;
    for a in c.all_edges() {
        for b in c.all_edges() {
            let h = hom_module(&c, &a, &b);
            let mut per_prime = Vec::new();
            for p in PRIMES {
                let o = oracle_hom_graded(&c, &a, &b, DEFAULT_T, bound, p).unwrap();
                for (d, k) in &o {
                    assert_eq!(*k, graded_dim(3, &h, *d), "{a} -> {b} in degree {d}");
                }
                per_prime.push(o);
            }
            assert_eq!(per_prime[0], per_prime[1]);
        }
    }
}

#[test]
fn stable_and_ext_for_triangle() {
    let c = PolygonCtx::new(3).unwrap();
    for a in c.all_edges() {
        for b in c.all_edges() {
            let o = oracle_stable_and_ext(&c, &a, &b, DEFAULT_T, PRIMES[0]).unwrap();
            let s = stable_hom(&c, &a, &b);
            let want: usize = if s.epsilon == 0 { 0 } else { s.epsilon };
            assert_eq!(o.stable.values().sum::<usize>(), want, "{a} -> {b}");
            if want > 0 {
                assert_eq!(o.stable.keys().copied().collect::<Vec<_>>(), vec![s.degree as i64]);
            }
            assert_eq!(o.ext1, ext1_dim(&c, &a, &b), "Ext {a}, {b}");
        }
    }
}

#[test]
fn projective_source_is_stably_zero() {
    let c = PolygonCtx::new(4).unwrap();
    for b in c.all_edges() {
        let o = oracle_stable_and_ext(&c, &c.side(3), &b, DEFAULT_T, PRIMES[1]).unwrap();
        assert!(o.stable.is_empty());
        assert_eq!(o.ext1, 0);
    }
}
