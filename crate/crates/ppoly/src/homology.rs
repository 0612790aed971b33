//! Hom, stable Hom, Ext¹ and Auslander-Reiten data for the ungraded
//! Cohen-Macaulay modules `M_a`, indexed by tagged edges.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{self, Descriptor};
use crate::polygon::{EdgeKind, PolygonCtx, TaggedEdge};

/// `Hom(M_a, M_b)` as a descriptor.
///
/// The closed form `A_{a,b}` is compared against the intersection over the
/// rows of the multiplier modules `Hom_{R'}(A_{i,a}, A_{i,b})`; a mismatch
/// panics.
pub fn hom_module(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> Descriptor {
    let closed = order::descriptor_for(ctx, a, b);
    let rows = hom_via_columns(ctx, a, b);
    assert_eq!(closed, rows, "Hom({a},{b}) disagrees with the row intersection");
    closed
}

/// `⋂_i Hom_{R'}(A_{i,a}, A_{i,b})`.
pub fn hom_via_columns(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> Descriptor {
    let n = ctx.n();
    let ca = order::module_column(ctx, a);
    let cb = order::module_column(ctx, b);
    ca.entries
        .iter()
        .zip(&cb.entries)
        .map(|(x, y)| order::hom_descriptor(n, x, y))
        .reduce(|acc, h| order::intersect(n, &acc, &h))
        .expect("n >= 3 rows")
}

/// Stable Hom `u^degree (R'/(X,Y))^epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StableHom {
    pub degree: usize,
    pub epsilon: usize,
}

fn delta(b: bool) -> usize {
    usize::from(b)
}

/// The two δ-products of the stable Hom formula.
pub fn epsilon_terms(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> (usize, usize) {
    let (a1, a2, b1, b2) = (a.a1 as i64, a.a2 as i64, b.a1 as i64, b.a2 as i64);
    let first = delta(ctx.in_open(b1, b2, a1 - 1)) * delta(ctx.in_open(a1, a2, b2 + 1));
    let second = delta(ctx.in_open(b1, b2, a2 - 1)) * delta(ctx.in_open(a1, a2, b1 + 1));
    (first, second)
}

pub fn stable_hom(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> StableHom {
    let degree = ctx.theta_length(a, b);
    if a.tagged_differently(b) {
        return StableHom { degree, epsilon: 0 };
    }
    let (first, second) = epsilon_terms(ctx, a, b);
    let epsilon = if a.is_untagged() && b.is_untagged() { first + second } else { first };
    StableHom { degree, epsilon }
}

fn rotate(ctx: &PolygonCtx, a: &TaggedEdge, by: i64, swap_tags: bool) -> Result<TaggedEdge> {
    match a.kind {
        EdgeKind::Side => Err(Error::Projective(a.to_string())),
        EdgeKind::Arc => ctx.edge(a.a1 as i64 + by, a.a2 as i64 + by),
        _ => {
            let v = ctx.normalize(a.a1 as i64 + by);
            let e = TaggedEdge { a1: v, a2: v, ..*a };
            Ok(if swap_tags { e.other_tag() } else { e })
        }
    }
}

/// AR translation: `(i,j) ↦ (i-1,j-1)`, `(i,*) ↦ (i-1,⋈)`.
pub fn tau(ctx: &PolygonCtx, a: &TaggedEdge) -> Result<TaggedEdge> {
    rotate(ctx, a, -1, true)
}

pub fn tau_inv(ctx: &PolygonCtx, a: &TaggedEdge) -> Result<TaggedEdge> {
    rotate(ctx, a, 1, true)
}

/// Syzygy: `(i,j) ↦ (i+1,j+1)`, `(i,*) ↦ (i+1,⋈)`.
pub fn omega(ctx: &PolygonCtx, a: &TaggedEdge) -> Result<TaggedEdge> {
    rotate(ctx, a, 1, true)
}

/// Nakayama functor: rotation by two steps clockwise, tags kept.
pub fn nu(ctx: &PolygonCtx, a: &TaggedEdge) -> Result<TaggedEdge> {
    rotate(ctx, a, -2, false)
}

/// `dim Ext¹(M_a, M_b)` by AR duality: `ε` of the stable Hom from `b` to `τa`.
pub fn ext1_dim(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> usize {
    if a.is_side() || b.is_side() {
        return 0;
    }
    let ta = tau(ctx, a).expect("a is not a side");
    stable_hom(ctx, b, &ta).epsilon
}

/// `dim Ext¹(M_a, M_b)` from the explicit case table.
pub fn ext1_table(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> usize {
    use EdgeKind::*;
    if a.is_side() || b.is_side() {
        return 0;
    }
    let o = |r: usize, s: usize, x: usize| delta(ctx.in_open(r as i64, s as i64, x as i64));
    let (k, l, i, j) = (a.a1, a.a2, b.a1, b.a2);
    match (a.kind, b.kind) {
        (Arc, Arc) => o(k, l, i) * o(i, j, l) + o(k, l, j) * o(i, j, k),
        (Plain | Notched, Arc) => o(i, j, k),
        (Arc, Plain | Notched) => o(k, l, i),
        _ if a.kind == b.kind => 0,
        _ => delta(i != k),
    }
}

/// The edge `(P_x, P_y)`, reading `(P_x, P_x)` as the pair of tagged arcs
/// at `x`.
pub fn expand_pair(ctx: &PolygonCtx, x: i64, y: i64) -> Vec<TaggedEdge> {
    let (x, y) = (ctx.normalize(x), ctx.normalize(y));
    if x == y {
        vec![TaggedEdge::plain(x), TaggedEdge::notched(x)]
    } else {
        vec![ctx.edge(x as i64, y as i64).expect("distinct vertices")]
    }
}

/// `0 → left → middle → right → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ARSequence {
    pub left: TaggedEdge,
    pub middle: Vec<TaggedEdge>,
    pub right: TaggedEdge,
}

/// The AR sequence starting at `a`.
pub fn ar_sequence(ctx: &PolygonCtx, a: &TaggedEdge) -> Result<ARSequence> {
    let right = tau_inv(ctx, a)?;
    let (i, j) = (a.a1 as i64, a.a2 as i64);
    let mut middle = match a.kind {
        EdgeKind::Arc => {
            let mut m = expand_pair(ctx, i + 1, j);
            m.extend(expand_pair(ctx, i, j + 1));
            m
        }
        _ => expand_pair(ctx, i + 1, i),
    };
    middle.sort_by_key(|e| ctx.edge_index(e));
    Ok(ARSequence { left: *a, middle, right })
}

/// Middle terms of a basis of `Ext¹(M_a, M_b)`, i.e. of the non-split
/// sequences `0 → M_b → E → M_a → 0`.
pub fn extension_list(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> Vec<Vec<TaggedEdge>> {
    use EdgeKind::*;
    if a.is_side() || b.is_side() {
        return Vec::new();
    }
    let open = |r: usize, s: usize, x: usize| ctx.in_open(r as i64, s as i64, x as i64);
    let left_open = |r: usize, s: usize, x: usize| ctx.within(crate::Interval::LeftOpen, r, s, x);
    let right_open = |r: usize, s: usize, x: usize| ctx.within(crate::Interval::RightOpen, r, s, x);
    let pair = |x: usize, y: usize| expand_pair(ctx, x as i64, y as i64);
    let join = |mut x: Vec<TaggedEdge>, y: Vec<TaggedEdge>| {
        x.extend(y);
        x.sort_by_key(|e| ctx.edge_index(e));
        x
    };
    let (k, l, i, j) = (a.a1, a.a2, b.a1, b.a2);
    let mut out = Vec::new();
    match (b.kind, a.kind) {
        (Arc, Arc) => {
            if open(i, j, k) && left_open(j, i, l) {
                out.push(join(pair(i, l), pair(k, j)));
            }
            if right_open(j, i, k) && open(i, j, l) {
                out.push(join(pair(k, i), pair(l, j)));
            }
            if i != k && open(i, k, l) && open(k, i, j) {
                out.push(join(pair(k, i), pair(l, j)));
                out.push(join(pair(l, i), pair(k, j)));
            }
        }
        (Arc, Plain | Notched) => {
            if open(i, j, k) {
                let tagged = TaggedEdge { a1: i, a2: i, ..*a };
                out.push(join(pair(k, j), vec![tagged]));
            }
        }
        (Plain | Notched, Arc) => {
            if open(k, l, i) {
                let tagged = TaggedEdge { a1: l, a2: l, ..*b };
                out.push(join(pair(k, i), vec![tagged]));
            }
        }
        (Plain, Notched) | (Notched, Plain) => {
            if i != k {
                out.push(pair(k, i));
            }
        }
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translations() {
        let c = PolygonCtx::new(5).unwrap();
        assert_eq!(tau(&c, &c.edge(3, 5).unwrap()).unwrap(), c.edge(2, 4).unwrap());
        assert_eq!(tau(&c, &TaggedEdge::plain(3)).unwrap(), TaggedEdge::notched(2));
        assert_eq!(nu(&c, &TaggedEdge::plain(3)).unwrap(), TaggedEdge::plain(1));
        assert_eq!(omega(&c, &TaggedEdge::plain(1)).unwrap(), TaggedEdge::notched(2));
        assert!(tau(&c, &c.side(1)).is_err());
    }

    #[test]
    fn small_values() {
        let c = PolygonCtx::new(6).unwrap();
        let a = c.edge(1, 4).unwrap();
        assert_eq!(stable_hom(&c, &a, &a).epsilon, 1);
        let c5 = PolygonCtx::new(5).unwrap();
        assert_eq!(stable_hom(&c5, &TaggedEdge::plain(1), &TaggedEdge::plain(3)).epsilon, 1);
        assert_eq!(ext1_dim(&c5, &TaggedEdge::plain(1), &TaggedEdge::notched(3)), 1);
        let c4 = PolygonCtx::new(4).unwrap();
        assert_eq!(hom_module(&c4, &TaggedEdge::plain(1), &TaggedEdge::plain(2)), Descriptor::v(2));
        assert!(hom_module(&c4, &TaggedEdge::plain(1), &TaggedEdge::notched(2)).is_zero());
    }

    #[test]
    fn fork_in_ar_sequence() {
        let c = PolygonCtx::new(4).unwrap();
        let s = ar_sequence(&c, &c.edge(1, 4).unwrap()).unwrap();
        assert_eq!(s.middle.len(), 3);
        let p = ar_sequence(&c, &TaggedEdge::plain(2)).unwrap();
        assert_eq!(p.middle, vec![c.edge(3, 2).unwrap()]);
        assert_eq!(p.right, TaggedEdge::notched(3));
    }
}
