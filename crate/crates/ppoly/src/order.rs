//! Graded submodules of `𝓡' = K[u^{±1}, v]/(vu - v²)` and the order Λ.
//!
//! Inverting `u` splits `𝓡'` into two Laurent rings through the orthogonal
//! idempotents `v/u` and `(u-v)/u`, so the degree `d` part of `𝓡'` is the
//! plane spanned by `u^d·v/u` and `u^d·(u-v)/u`. Every submodule used here
//! is one of five shapes, and its degree `d` part is one of five subspaces
//! of that plane ([`Piece`]). Sums, intersections and containment are
//! decided piece by piece.
//!
//! `R' = K[X,Y]/(Y(X-Y))` sits inside via `X = u^{2n}`, `Y = v^{2n}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polygon::{PolygonCtx, TaggedEdge};

/// Shape of a [`Descriptor`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    /// `u^k R'`
    U,
    /// `u^{k-1} v R'`
    V,
    /// `u^{k-1} (u-v) R'`
    W,
    /// `u^k R' + v^k R'`
    UV,
    #[serde(rename = "zero")]
    Zero,
}

/// A graded `R'`-submodule of `𝓡'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Descriptor {
    pub shape: Shape,
    pub degree: i64,
}

impl Descriptor {
    pub const ZERO: Descriptor = Descriptor { shape: Shape::Zero, degree: 0 };
    pub fn u(k: i64) -> Self {
        Descriptor { shape: Shape::U, degree: k }
    }
    pub fn v(k: i64) -> Self {
        Descriptor { shape: Shape::V, degree: k }
    }
    pub fn w(k: i64) -> Self {
        Descriptor { shape: Shape::W, degree: k }
    }
    pub fn uv(k: i64) -> Self {
        Descriptor { shape: Shape::UV, degree: k }
    }
    pub fn is_zero(&self) -> bool {
        self.shape == Shape::Zero
    }
    /// Multiply by `u^s`.
    pub fn shifted(&self, s: i64) -> Self {
        if self.is_zero() {
            *self
        } else {
            Descriptor { shape: self.shape, degree: self.degree + s }
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            Shape::Zero => write!(f, "0"),
            s => write!(f, "{:?}({})", s, self.degree),
        }
    }
}

/// A subspace of the plane `span(e_v, e_w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    Zero,
    /// spanned by `e_v + e_w` (a power of `u`)
    Diag,
    /// spanned by `e_v`
    VLine,
    /// spanned by `e_w`
    WLine,
    Full,
}

impl Piece {
    pub fn dim(self) -> usize {
        match self {
            Piece::Zero => 0,
            Piece::Full => 2,
            _ => 1,
        }
    }
    pub fn sum(self, o: Piece) -> Piece {
        use Piece::*;
        match (self, o) {
            (Zero, x) | (x, Zero) => x,
            (a, b) if a == b => a,
            _ => Full,
        }
    }
    pub fn meet(self, o: Piece) -> Piece {
        use Piece::*;
        match (self, o) {
            (Full, x) | (x, Full) => x,
            (a, b) if a == b => a,
            _ => Zero,
        }
    }
    pub fn contains(self, o: Piece) -> bool {
        self.meet(o) == o
    }
    /// Span of all products, multiplying coordinates separately.
    pub fn product(self, o: Piece) -> Piece {
        let mut out = Piece::Zero;
        for a in self.gens() {
            for b in o.gens() {
                out = out.sum(Piece::from_vec((a.0 * b.0, a.1 * b.1)));
            }
        }
        out
    }

    fn gens(self) -> Vec<(u8, u8)> {
        match self {
            Piece::Zero => vec![],
            Piece::Diag => vec![(1, 1)],
            Piece::VLine => vec![(1, 0)],
            Piece::WLine => vec![(0, 1)],
            Piece::Full => vec![(1, 0), (0, 1)],
        }
    }

    fn from_vec(v: (u8, u8)) -> Piece {
        match v {
            (0, 0) => Piece::Zero,
            (1, 1) => Piece::Diag,
            (1, 0) => Piece::VLine,
            _ => Piece::WLine,
        }
    }
}

/// Degree `d` part of a descriptor.
pub fn piece(n: usize, x: &Descriptor, d: i64) -> Piece {
    let p = 2 * n as i64;
    let off = d - x.degree;
    if x.is_zero() || off < 0 || off % p != 0 {
        return Piece::Zero;
    }
    match x.shape {
        Shape::U if off == 0 => Piece::Diag,
        Shape::U => Piece::Full,
        Shape::V => Piece::VLine,
        Shape::W => Piece::WLine,
        Shape::UV => Piece::Full,
        Shape::Zero => Piece::Zero,
    }
}

/// `dim_K` of the degree `deg` part.
pub fn graded_dim(n: usize, x: &Descriptor, deg: i64) -> usize {
    piece(n, x, deg).dim()
}

/// Recognize a descriptor from its pieces on `[lo, hi]`. Pieces are read
/// in the residue class of the first nonzero one; the result is checked on
/// the whole range. Returns `None` if no shape fits.
pub fn from_pieces(n: usize, lo: i64, hi: i64, f: impl Fn(i64) -> Piece) -> Option<Descriptor> {
    let p = 2 * n as i64;
    let d0 = match (lo..=hi).find(|&d| f(d) != Piece::Zero) {
        None => return Some(Descriptor::ZERO),
        Some(d) => d,
    };
    let cand = match (f(d0), f(d0 + p)) {
        (Piece::Diag, Piece::Full) => Descriptor::u(d0),
        (Piece::VLine, Piece::VLine) => Descriptor::v(d0),
        (Piece::WLine, Piece::WLine) => Descriptor::w(d0),
        (Piece::Full, Piece::Full) => Descriptor::uv(d0),
        _ => return None,
    };
    (lo..=hi).all(|d| f(d) == piece(n, &cand, d)).then_some(cand)
}

fn window(xs: &[Descriptor], n: usize) -> (i64, i64) {
    let p = 2 * n as i64;
    let degs: Vec<i64> = xs.iter().filter(|x| !x.is_zero()).map(|x| x.degree).collect();
    let lo = degs.iter().min().copied().unwrap_or(0);
    let hi = degs.iter().max().copied().unwrap_or(0);
    (lo - p, hi + 3 * p)
}

/// Sum of submodules (must stay within the five shapes).
pub fn sum(n: usize, a: &Descriptor, b: &Descriptor) -> Descriptor {
    let (lo, hi) = window(&[*a, *b], n);
    from_pieces(n, lo, hi, |d| piece(n, a, d).sum(piece(n, b, d)))
        .unwrap_or_else(|| panic!("{a} + {b} leaves the five shapes"))
}

/// Intersection of submodules.
pub fn intersect(n: usize, a: &Descriptor, b: &Descriptor) -> Descriptor {
    let (lo, hi) = window(&[*a, *b], n);
    from_pieces(n, lo, hi, |d| piece(n, a, d).meet(piece(n, b, d)))
        .unwrap_or_else(|| panic!("{a} ∩ {b} leaves the five shapes"))
}

/// `inner ⊆ outer`.
pub fn contains(n: usize, outer: &Descriptor, inner: &Descriptor) -> bool {
    let (lo, hi) = window(&[*outer, *inner], n);
    (lo..=hi).all(|d| piece(n, outer, d).contains(piece(n, inner, d)))
}

/// Product submodule `f·g`; degrees add.
pub fn descriptor_mul(f: &Descriptor, g: &Descriptor) -> Descriptor {
    use Shape::*;
    let shape = match (f.shape, g.shape) {
        (Zero, _) | (_, Zero) | (V, W) | (W, V) => return Descriptor::ZERO,
        (U, s) | (s, U) => s,
        (UV, s) | (s, UV) => s,
        (V, V) => V,
        (W, W) => W,
    };
    Descriptor { shape, degree: f.degree + g.degree }
}

/// `Hom_{R'}(src, dst)` realized as multipliers in `𝓡'`.
pub fn hom_descriptor(n: usize, src: &Descriptor, dst: &Descriptor) -> Descriptor {
    use Shape::*;
    let p = 2 * n as i64;
    match (src.shape, dst.shape) {
        (Zero, _) | (_, Zero) => Descriptor::ZERO,
        (UV, _) => {
            let a = hom_descriptor(n, &Descriptor::v(src.degree), dst);
            let b = hom_descriptor(n, &Descriptor::w(src.degree), dst);
            sum(n, &a, &b)
        }
        (_, UV) => {
            let a = hom_descriptor(n, src, &Descriptor::v(dst.degree));
            let b = hom_descriptor(n, src, &Descriptor::w(dst.degree));
            sum(n, &a, &b)
        }
        _ => {
            let k = dst.degree - src.degree;
            match (src.shape, dst.shape) {
                (V, V) => Descriptor::v(k),
                (W, W) => Descriptor::w(k),
                (V, W) | (W, V) => Descriptor::ZERO,
                (V, U) => Descriptor::v(k + p),
                (W, U) => Descriptor::w(k + p),
                (U, V) => Descriptor::v(k),
                (U, W) => Descriptor::w(k),
                (U, U) => Descriptor::u(k),
                _ => unreachable!(),
            }
        }
    }
}

/// `A_{a,b}`, the graded submodule housing `Hom(M_a, M_b)`.
pub fn descriptor_for(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge) -> Descriptor {
    use crate::polygon::EdgeKind::*;
    if a.tagged_differently(b) {
        return Descriptor::ZERO;
    }
    let l = ctx.theta_length(a, b) as i64;
    match (a.kind, b.kind) {
        (Plain, _) | (_, Plain) => Descriptor::v(l),
        (Notched, _) | (_, Notched) => Descriptor::w(l),
        _ if ctx.vdash_unchecked(a, b) => Descriptor::uv(l),
        _ => Descriptor::u(l),
    }
}

/// An `n × n` matrix of descriptors, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderMatrix {
    pub n: usize,
    pub entries: Vec<Vec<Descriptor>>,
}

impl OrderMatrix {
    /// Entry `(i, j)` with 1-based indices.
    pub fn at(&self, i: usize, j: usize) -> Descriptor {
        self.entries[i - 1][j - 1]
    }
}

/// Λ in `u`-coordinates: `U(2d(i,j))`, or `UV(2d(i,j))` when `j = i-1`.
pub fn lambda_matrix(ctx: &PolygonCtx) -> OrderMatrix {
    let n = ctx.n();
    let entries = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let k = 2 * ctx.d(i, j) as i64;
                    if j == ctx.normalize(i as i64 - 1) {
                        Descriptor::uv(k)
                    } else {
                        Descriptor::u(k)
                    }
                })
                .collect()
        })
        .collect();
    OrderMatrix { n, entries }
}

/// The column `(A_{s_i, a})_i` of `M_a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleColumn {
    pub edge: TaggedEdge,
    pub entries: Vec<Descriptor>,
}

pub fn module_column(ctx: &PolygonCtx, a: &TaggedEdge) -> ModuleColumn {
    let entries = (1..=ctx.n()).map(|i| descriptor_for(ctx, &ctx.side(i), a)).collect();
    ModuleColumn { edge: *a, entries }
}

/// Generators of the ideals appearing in the columns over `R'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdealGen {
    /// `R'`
    One,
    /// `(Y)`
    Y,
    /// `(X - Y)`
    XmY,
    /// `(X, Y)`
    XY,
}

/// The fractional ideal `X^xpow · gen`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Ideal {
    pub xpow: i64,
    pub gen: IdealGen,
}

impl Ideal {
    pub const R: Ideal = Ideal { xpow: 0, gen: IdealGen::One };
    pub const X: Ideal = Ideal { xpow: 1, gen: IdealGen::One };
    pub const X2: Ideal = Ideal { xpow: 2, gen: IdealGen::One };
    pub const Y: Ideal = Ideal { xpow: 0, gen: IdealGen::Y };
    /// `(Y²) = X·(Y)`
    pub const Y2: Ideal = Ideal { xpow: 1, gen: IdealGen::Y };
    pub const XMY: Ideal = Ideal { xpow: 0, gen: IdealGen::XmY };
    /// `(X² - Y²) = X·(X - Y)`
    pub const X2MY2: Ideal = Ideal { xpow: 1, gen: IdealGen::XmY };
    pub const XY: Ideal = Ideal { xpow: 0, gen: IdealGen::XY };
    /// `(X², Y²) = X·(X, Y)`
    pub const X2Y2: Ideal = Ideal { xpow: 1, gen: IdealGen::XY };
    /// `X⁻¹(X, Y)`
    pub const XINV_XY: Ideal = Ideal { xpow: -1, gen: IdealGen::XY };

    /// Contained in `R'`.
    pub fn is_integral(&self) -> bool {
        self.xpow >= 0
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.gen {
            IdealGen::One => "R'",
            IdealGen::Y => "(Y)",
            IdealGen::XmY => "(X-Y)",
            IdealGen::XY => "(X,Y)",
        };
        match self.xpow {
            0 => write!(f, "{g}"),
            k => write!(f, "X^{k}{g}"),
        }
    }
}

/// Read a descriptor whose degree is a multiple of `2n` as an ideal.
pub fn to_ideal(n: usize, x: &Descriptor) -> Option<Ideal> {
    let p = 2 * n as i64;
    if x.is_zero() || x.degree.rem_euclid(p) != 0 {
        return None;
    }
    let k = x.degree / p;
    Some(match x.shape {
        Shape::U => Ideal { xpow: k, gen: IdealGen::One },
        Shape::V => Ideal { xpow: k - 1, gen: IdealGen::Y },
        Shape::W => Ideal { xpow: k - 1, gen: IdealGen::XmY },
        Shape::UV => Ideal { xpow: k - 1, gen: IdealGen::XY },
        Shape::Zero => unreachable!(),
    })
}

/// Move row `i` by `u^{2d(1,i)}` and then scale the whole column by the
/// largest power of `u` that keeps every entry inside `R'`. This turns
/// [`module_column`] into the ideal columns over `R'`.
pub fn normalize_column(ctx: &PolygonCtx, col: &ModuleColumn) -> Vec<Ideal> {
    let n = ctx.n();
    let p = 2 * n as i64;
    let moved: Vec<Descriptor> =
        col.entries.iter().enumerate().map(|(r, x)| x.shifted(2 * r as i64)).collect();
    let res = moved[0].degree.rem_euclid(p);
    assert!(moved.iter().all(|x| x.degree.rem_euclid(p) == res), "rows in different residues");
    // Each entry X^k·G needs k >= 0 after the global shift.
    let need = moved
        .iter()
        .map(|x| {
            let base = to_ideal(n, &x.shifted(-res)).expect("aligned");
            base.xpow
        })
        .min()
        .expect("nonempty column");
    moved
        .iter()
        .map(|x| to_ideal(n, &x.shifted(-res - need * p)).expect("aligned"))
        .collect()
}

/// Λ conjugated by `diag(u^{2d(1,i)})`, read as ideals of `R'`.
pub fn lambda_ideals(ctx: &PolygonCtx) -> Vec<Vec<Ideal>> {
    let n = ctx.n();
    let l = lambda_matrix(ctx);
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let s = 2 * (i as i64 - 1) - 2 * (j as i64 - 1);
                    to_ideal(n, &l.at(i, j).shifted(s)).expect("aligned")
                })
                .collect()
        })
        .collect()
}

/// Degree `d` part of the graded piece `S_ī` of
/// `S = K[x,y]/(x^{n-1}y - y²)`, with `deg x = 1`, `deg y = -1` mod n.
///
/// `S` has the basis `x^a`, `x^a y`. Inside `𝓡'` take `x = u²` and
/// `y = u^{2n-2}·v/u`, so `x^a` lies on the diagonal in `u`-degree `2a` and
/// `x^a y` lies on the `v` line in degree `2a + 2n - 2`.
pub fn s_piece(n: usize, i: usize, d: i64) -> Piece {
    let nn = n as i64;
    let mut p = Piece::Zero;
    if d >= 0 && d % 2 == 0 && (d / 2).rem_euclid(nn) == i as i64 {
        p = p.sum(Piece::Diag);
    }
    let e = d - (2 * nn - 2);
    if e >= 0 && e % 2 == 0 && (e / 2 - 1).rem_euclid(nn) == i as i64 {
        p = p.sum(Piece::VLine);
    }
    p
}

/// `S_ī` as a descriptor, read from [`s_piece`].
pub fn s_graded_descriptor(n: usize, i: usize) -> Descriptor {
    let p = 2 * n as i64;
    from_pieces(n, -p, 4 * p, |d| s_piece(n, i, d)).expect("S pieces have a shape")
}

/// `S^[n]` with entry `(r, c)` equal to `S_{c - r}` (1-based).
pub fn s_bracket_matrix(n: usize, pieces: &[Descriptor]) -> OrderMatrix {
    let entries = (0..n).map(|r| (0..n).map(|c| pieces[(c + n - r) % n]).collect()).collect();
    OrderMatrix { n, entries }
}

/// Conjugate by `diag(x^i)` and compare with Λ in ideal coordinates.
pub fn s_bracket_certificate(ctx: &PolygonCtx, pieces: &[Descriptor]) -> bool {
    let n = ctx.n();
    let s = s_bracket_matrix(n, pieces);
    let target = lambda_ideals(ctx);
    (1..=n).all(|r| {
        (1..=n).all(|c| {
            // x^{r-1} S_{c-r} x^{-(c-1)}, with x of u-degree 2
            let shift = 2 * (r as i64 - 1) - 2 * (c as i64 - 1);
            to_ideal(n, &s.at(r, c).shifted(shift)) == Some(target[r - 1][c - 1])
        })
    })
}

/// Build `S^[n]` from its graded pieces and certify `B S^[n] B⁻¹ = Λ`.
pub fn s_bracket_n(ctx: &PolygonCtx) -> (OrderMatrix, bool) {
    let n = ctx.n();
    let pieces: Vec<Descriptor> = (0..n).map(|i| s_graded_descriptor(n, i)).collect();
    (s_bracket_matrix(n, &pieces), s_bracket_certificate(ctx, &pieces))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_dims() {
        let n = 4;
        assert_eq!(graded_dim(n, &Descriptor::u(0), 0), 1);
        assert_eq!(graded_dim(n, &Descriptor::u(0), 8), 2);
        assert_eq!(graded_dim(n, &Descriptor::v(3), 4), 0);
        assert_eq!(graded_dim(n, &Descriptor::uv(3), 11), 2);
    }

    #[test]
    fn hom_table() {
        let n = 5;
        assert_eq!(hom_descriptor(n, &Descriptor::u(0), &Descriptor::u(0)), Descriptor::u(0));
        assert_eq!(hom_descriptor(n, &Descriptor::v(3), &Descriptor::w(5)), Descriptor::ZERO);
        assert_eq!(hom_descriptor(n, &Descriptor::v(1), &Descriptor::u(3)), Descriptor::v(12));
        assert_eq!(hom_descriptor(n, &Descriptor::uv(1), &Descriptor::u(3)), Descriptor::uv(12));
    }

    #[test]
    fn products() {
        assert_eq!(descriptor_mul(&Descriptor::v(2), &Descriptor::v(3)), Descriptor::v(5));
        assert_eq!(descriptor_mul(&Descriptor::v(2), &Descriptor::w(3)), Descriptor::ZERO);
        assert_eq!(descriptor_mul(&Descriptor::u(2), &Descriptor::uv(3)), Descriptor::uv(5));
    }

    #[test]
    fn s_pieces() {
        for n in 3..9 {
            for i in 0..n - 1 {
                assert_eq!(s_graded_descriptor(n, i), Descriptor::u(2 * i as i64));
            }
            assert_eq!(s_graded_descriptor(n, n - 1), Descriptor::uv(2 * n as i64 - 2));
        }
    }
}
