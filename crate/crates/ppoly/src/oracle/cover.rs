//! Crossing numbers read off the universal cover of the punctured disk.
//!
//! The cover is the upper half plane with the lifted boundary vertices at
//! the integers and the puncture at infinity. A winding arc `(a1, a2)` lifts
//! to the chords `[a1 + kn, a1 + d(a1,a2) + kn]`, a puncture arc to the
//! vertical rays over `a1 + kn`.

use crate::polygon::{PolygonCtx, TaggedEdge};

enum Lift {
    Chord(i64, i64),
    Ray(i64),
}

fn lift(ctx: &PolygonCtx, e: &TaggedEdge) -> Lift {
    let p = e.a1 as i64;
    if e.is_puncture() {
        Lift::Ray(p)
    } else {
        Lift::Chord(p, p + ctx.d(e.a1, e.a2) as i64)
    }
}

/// Number of translates of the second lift meeting one fixed lift of the
/// first. Plain and notched arcs at distinct vertices cross once by
/// convention.
pub fn cover_crossing(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> usize {
    let n = ctx.n() as i64;
    let shifts = -2..=2;
    match (lift(ctx, a), lift(ctx, b)) {
        (Lift::Chord(p, q), Lift::Chord(r, s)) => shifts
            .filter(|k| {
                let (r, s) = (r + k * n, s + k * n);
                (p < r && r < q && q < s) || (r < p && p < s && s < q)
            })
            .count(),
        (Lift::Chord(p, q), Lift::Ray(x)) | (Lift::Ray(x), Lift::Chord(p, q)) => {
            shifts.filter(|k| p < x + k * n && x + k * n < q).count()
        }
        (Lift::Ray(_), Lift::Ray(_)) => usize::from(a.tagged_differently(b) && a.a1 != b.a1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let c = PolygonCtx::new(5).unwrap();
        let a = c.edge(1, 3).unwrap();
        let b = c.edge(2, 4).unwrap();
        assert_eq!(cover_crossing(&c, &a, &b), 1);
        assert_eq!(cover_crossing(&c, &a, &a), 0);
        assert_eq!(cover_crossing(&c, &TaggedEdge::plain(1), &TaggedEdge::notched(3)), 1);
        assert_eq!(cover_crossing(&c, &TaggedEdge::plain(1), &TaggedEdge::notched(1)), 0);
        let c4 = PolygonCtx::new(4).unwrap();
        let x = c4.edge(1, 3).unwrap();
        let y = c4.edge(3, 1).unwrap();
        assert_eq!(cover_crossing(&c4, &x, &y), 0);
    }
}
