//! Cyclic combinatorics of the once-punctured n-gon.
//!
//! Vertices are numbered `1..=n` counter-clockwise. Every edge of the
//! punctured polygon is a [`TaggedEdge`]: a side `(P_i, P_{i+1})`, a winding
//! arc `(P_{a1}, P_{a2})` that turns counter-clockwise around the puncture,
//! or an arc from `P_{a1}` to the puncture carrying a plain or notched tag.
//! Puncture arcs store `a2 = a1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The four kinds of edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Side,
    Arc,
    Plain,
    Notched,
}

/// A side or tagged arc of the punctured polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeJson", into = "EdgeJson")]
pub struct TaggedEdge {
    pub kind: EdgeKind,
    pub a1: usize,
    pub a2: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum EdgeJson {
    Side { a1: usize },
    Arc { a1: usize, a2: usize },
    Plain { a1: usize },
    Notched { a1: usize },
}

impl From<TaggedEdge> for EdgeJson {
    fn from(e: TaggedEdge) -> Self {
        match e.kind {
            EdgeKind::Side => EdgeJson::Side { a1: e.a1 },
            EdgeKind::Arc => EdgeJson::Arc { a1: e.a1, a2: e.a2 },
            EdgeKind::Plain => EdgeJson::Plain { a1: e.a1 },
            EdgeKind::Notched => EdgeJson::Notched { a1: e.a1 },
        }
    }
}

impl TryFrom<EdgeJson> for TaggedEdge {
    type Error = Error;
    fn try_from(j: EdgeJson) -> Result<Self> {
        // The side's second endpoint depends on n, so it is filled in by
        // `PolygonCtx::check_edge`; here a2 = 0 marks it as pending.
        let e = match j {
            EdgeJson::Side { a1 } => TaggedEdge { kind: EdgeKind::Side, a1, a2: 0 },
            EdgeJson::Arc { a1, a2 } => {
                if a1 == a2 {
                    return Err(Error::BadEdge(format!("arc ({a1},{a2}) has equal endpoints")));
                }
                TaggedEdge { kind: EdgeKind::Arc, a1, a2 }
            }
            EdgeJson::Plain { a1 } => TaggedEdge::plain(a1),
            EdgeJson::Notched { a1 } => TaggedEdge::notched(a1),
        };
        if e.a1 == 0 {
            return Err(Error::BadEdge("vertex 0 does not exist".into()));
        }
        Ok(e)
    }
}

impl TaggedEdge {
    pub fn plain(i: usize) -> Self {
        TaggedEdge { kind: EdgeKind::Plain, a1: i, a2: i }
    }
    pub fn notched(i: usize) -> Self {
        TaggedEdge { kind: EdgeKind::Notched, a1: i, a2: i }
    }
    pub fn is_side(&self) -> bool {
        self.kind == EdgeKind::Side
    }
    pub fn is_puncture(&self) -> bool {
        matches!(self.kind, EdgeKind::Plain | EdgeKind::Notched)
    }
    /// Sides and winding arcs carry no tag.
    pub fn is_untagged(&self) -> bool {
        !self.is_puncture()
    }
    /// Same base vertex with the other tag. Identity on untagged edges.
    pub fn other_tag(&self) -> Self {
        match self.kind {
            EdgeKind::Plain => TaggedEdge::notched(self.a1),
            EdgeKind::Notched => TaggedEdge::plain(self.a1),
            _ => *self,
        }
    }
    /// Both puncture arcs, with different tags.
    pub fn tagged_differently(&self, other: &TaggedEdge) -> bool {
        self.is_puncture() && other.is_puncture() && self.kind != other.kind
    }
}

impl fmt::Display for TaggedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EdgeKind::Side => write!(f, "s{}", self.a1),
            EdgeKind::Arc => write!(f, "({},{})", self.a1, self.a2),
            EdgeKind::Plain => write!(f, "({},*)", self.a1),
            EdgeKind::Notched => write!(f, "({},x)", self.a1),
        }
    }
}

/// Kinds of cyclic intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    /// `[r,s] = {r, r+1, ..., s}`
    Closed,
    /// `]r,s[ = [1,n] \ [s,r]`
    Open,
    /// `]r,s] = [r,s] \ {r}`
    LeftOpen,
    /// `[r,s[ = [r,s] \ {s}`
    RightOpen,
}

/// The polygon: just the number of boundary vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolygonCtx {
    n: usize,
}

impl PolygonCtx {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        Ok(PolygonCtx { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Reduce any integer into `[1, n]`.
    pub fn normalize(&self, i: i64) -> usize {
        (i - 1).rem_euclid(self.n as i64) as usize + 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v as i64, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Side `(P_i, P_{i+1})`.
    pub fn side(&self, i: usize) -> TaggedEdge {
        let i = self.normalize(i as i64);
        TaggedEdge { kind: EdgeKind::Side, a1: i, a2: self.normalize(i as i64 + 1) }
    }

    /// The edge `(P_r, P_s)` for `r != s`: a side when `s = r + 1`, a winding
    /// arc otherwise. Indices are reduced mod n first.
    pub fn edge(&self, r: i64, s: i64) -> Result<TaggedEdge> {
        let (r, s) = (self.normalize(r), self.normalize(s));
        if r == s {
            return Err(Error::BadEdge(format!("({r},{s}) is not an edge")));
        }
        if s == self.normalize(r as i64 + 1) {
            Ok(self.side(r))
        } else {
            Ok(TaggedEdge { kind: EdgeKind::Arc, a1: r, a2: s })
        }
    }

    /// Validate an edge (and complete a side parsed from JSON).
    pub fn check_edge(&self, e: TaggedEdge) -> Result<TaggedEdge> {
        self.check_vertex(e.a1)?;
        match e.kind {
            EdgeKind::Side => Ok(self.side(e.a1)),
            EdgeKind::Arc => {
                self.check_vertex(e.a2)?;
                if e.a2 == e.a1 || e.a2 == self.normalize(e.a1 as i64 + 1) {
                    Err(Error::BadEdge(format!("({},{}) is not a winding arc", e.a1, e.a2)))
                } else {
                    Ok(e)
                }
            }
            _ => {
                if e.a2 != e.a1 {
                    Err(Error::BadEdge(format!("puncture arc with a2 = {} != a1", e.a2)))
                } else {
                    Ok(e)
                }
            }
        }
    }

    /// `d(r,s)`: steps counter-clockwise from `r` to `s`.
    pub fn d(&self, r: usize, s: usize) -> usize {
        (s + self.n - r) % self.n
    }

    pub fn cyclic_distance(&self, r: usize, s: usize) -> Result<usize> {
        self.check_vertex(r)?;
        self.check_vertex(s)?;
        Ok(self.d(r, s))
    }

    /// Membership in a cyclic interval (unchecked indices).
    pub fn within(&self, kind: Interval, r: usize, s: usize, x: usize) -> bool {
        let closed = |r: usize, s: usize, x: usize| self.d(r, x) <= self.d(r, s);
        match kind {
            Interval::Closed => closed(r, s, x),
            Interval::Open => !closed(s, r, x),
            Interval::LeftOpen => closed(r, s, x) && x != r,
            Interval::RightOpen => closed(r, s, x) && x != s,
        }
    }

    pub fn interval_contains(&self, kind: Interval, r: usize, s: usize, x: usize) -> Result<bool> {
        self.check_vertex(r)?;
        self.check_vertex(s)?;
        self.check_vertex(x)?;
        Ok(self.within(kind, r, s, x))
    }

    /// `x ∈ ]r,s[` with indices taken mod n.
    pub fn in_open(&self, r: i64, s: i64, x: i64) -> bool {
        self.within(Interval::Open, self.normalize(r), self.normalize(s), self.normalize(x))
    }

    /// The θ-length `ℓ^θ_{a,b}`.
    pub fn theta_length(&self, a: &TaggedEdge, b: &TaggedEdge) -> usize {
        let n = self.n;
        let first = self.within(Interval::Open, b.a1, a.a2, a.a1);
        let second = self.within(Interval::Open, b.a1, a.a2, b.a2);
        self.d(a.a1, b.a1) + self.d(a.a2, b.a2) + if first != second { n } else { 0 }
    }

    /// `(ℓ_{a,b} + ℓ_{b,c} - ℓ_{a,c}) / 2n`; the numerator is always a
    /// non-negative multiple of `2n`.
    pub fn theta_defect(&self, a: &TaggedEdge, b: &TaggedEdge, c: &TaggedEdge) -> i64 {
        let num = self.theta_length(a, b) as i64 + self.theta_length(b, c) as i64
            - self.theta_length(a, c) as i64;
        let m = 2 * self.n as i64;
        debug_assert_eq!(num.rem_euclid(m), 0);
        num.div_euclid(m)
    }

    /// Argument of the edge vector in units of `π/n`, up to the constant
    /// offset `n/2` that cancels in every difference.
    pub fn angle_index(&self, a: &TaggedEdge) -> usize {
        let wrap = if a.a1 >= a.a2 { self.n } else { 0 };
        (a.a1 + a.a2 + wrap) % (2 * self.n)
    }

    /// The relation `a ⊢ b` between untagged edges.
    pub fn vdash(&self, a: &TaggedEdge, b: &TaggedEdge) -> Result<bool> {
        for e in [a, b] {
            if e.is_puncture() {
                return Err(Error::PunctureIncident(*e));
            }
        }
        Ok(self.vdash_unchecked(a, b))
    }

    pub(crate) fn vdash_unchecked(&self, a: &TaggedEdge, b: &TaggedEdge) -> bool {
        self.within(Interval::Open, b.a2, a.a1, a.a2) || self.within(Interval::Open, b.a2, a.a1, b.a1)
    }

    /// Minimal number of crossings between two tagged arcs.
    pub fn crossing_number(&self, a: &TaggedEdge, b: &TaggedEdge) -> Result<usize> {
        for e in [a, b] {
            if e.is_side() {
                return Err(Error::SideNotAllowed(*e));
            }
        }
        Ok(crate::oracle::cover::cover_crossing(self, a, b))
    }

    /// Compatibility of tagged arcs; sides are compatible with everything.
    pub fn is_compatible(&self, a: &TaggedEdge, b: &TaggedEdge) -> bool {
        if a.is_side() || b.is_side() {
            return true;
        }
        if a.tagged_differently(b) && a.a1 != b.a1 {
            return false;
        }
        crate::oracle::cover::cover_crossing(self, a, b) == 0
    }

    /// The `n` sides.
    pub fn sides(&self) -> Vec<TaggedEdge> {
        (1..=self.n).map(|i| self.side(i)).collect()
    }

    /// All `n(n-2) + 2n` tagged arcs in canonical order.
    pub fn tagged_arcs(&self) -> Vec<TaggedEdge> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for a1 in 1..=n {
            for len in 2..n {
                out.push(TaggedEdge { kind: EdgeKind::Arc, a1, a2: self.normalize((a1 + len) as i64) });
            }
        }
        out.extend((1..=n).map(TaggedEdge::plain));
        out.extend((1..=n).map(TaggedEdge::notched));
        out
    }

    /// Sides first, then winding arcs by `(a1, d(a1,a2))`, then plain and
    /// notched puncture arcs.
    pub fn all_edges(&self) -> Vec<TaggedEdge> {
        let mut out = self.sides();
        out.extend(self.tagged_arcs());
        out
    }

    /// Position of an edge in [`PolygonCtx::all_edges`].
    pub fn edge_index(&self, e: &TaggedEdge) -> usize {
        let n = self.n;
        match e.kind {
            EdgeKind::Side => e.a1 - 1,
            EdgeKind::Arc => n + (e.a1 - 1) * (n - 2) + self.d(e.a1, e.a2) - 2,
            EdgeKind::Plain => n + n * (n - 2) + e.a1 - 1,
            EdgeKind::Notched => n + n * (n - 2) + n + e.a1 - 1,
        }
    }
}

/// Canonical ordering key matching [`PolygonCtx::all_edges`].
pub fn canonical_key(ctx: &PolygonCtx, e: &TaggedEdge) -> usize {
    ctx.edge_index(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances() {
        let c = PolygonCtx::new(6).unwrap();
        assert_eq!(c.d(2, 5), 3);
        assert_eq!(c.d(5, 2), 3);
        assert_eq!(c.d(4, 4), 0);
        assert!(c.cyclic_distance(0, 3).is_err());
        assert!(PolygonCtx::new(2).is_err());
    }

    #[test]
    fn open_intervals() {
        let c = PolygonCtx::new(6).unwrap();
        assert!(c.within(Interval::Open, 2, 5, 3));
        assert!(!c.within(Interval::Open, 2, 5, 2));
        assert!(c.within(Interval::Open, 5, 2, 6));
        assert!(!c.within(Interval::Open, 5, 2, 3));
        assert!(!c.within(Interval::Open, 3, 3, 3));
        assert!(c.within(Interval::Open, 3, 3, 1));
    }

    #[test]
    fn edge_index_matches_order() {
        for n in 3..9 {
            let c = PolygonCtx::new(n).unwrap();
            for (k, e) in c.all_edges().iter().enumerate() {
                assert_eq!(c.edge_index(e), k);
            }
        }
    }

    #[test]
    fn theta_examples() {
        let c = PolygonCtx::new(7).unwrap();
        for i in 1..=7 {
            let s = c.side(i);
            assert_eq!(c.theta_length(&s, &s), 0);
            assert_eq!(c.theta_length(&s, &c.side(i + 1)), 2);
            assert_eq!(c.theta_length(&s, &TaggedEdge::plain(i)), 6);
        }
    }

    #[test]
    fn json_roundtrip() {
        let c = PolygonCtx::new(5).unwrap();
        for e in c.all_edges() {
            let s = serde_json::to_string(&e).unwrap();
            let back: TaggedEdge = serde_json::from_str(&s).unwrap();
            assert_eq!(c.check_edge(back).unwrap(), e);
        }
        let s = serde_json::to_string(&c.side(2)).unwrap();
        assert_eq!(s, r#"{"kind":"side","a1":2}"#);
    }
}
