//! Concrete graded Λ-modules.
//!
//! A [`GradedRep`] stores, for every row `i` (idempotent `E_ii`) and every
//! `u`-degree `e`, the dimension of that piece, plus the matrices of the
//! generators `α_i = E_{i,i+1}`, `α_n = X E_{n,1}`, `β_i = Y E_{i+1,i}`,
//! `β_n = X⁻¹Y E_{1,n}` between pieces. Everything above degree `top` is
//! cut off.
//!
//! Indecomposables are built from the ideal columns of `R'`: row `i` of
//! `M_a` is an ideal `I_i`, its `R'`-degree `g` part sits inside the plane
//! spanned by `X^g` and `X^{g-1}Y`, and lies in `u`-degree
//! `2n·g - 2(i-1) + c_a`.

use std::collections::BTreeMap;

use super::linalg::{Field, Mat};
use super::ring::{Monomial, TruncatedRing};
use crate::polygon::{EdgeKind, PolygonCtx, TaggedEdge};

/// Multiplier carried by a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplier {
    One,
    X,
    Y,
    XinvY,
}

#[derive(Debug, Clone, Copy)]
pub struct Generator {
    pub src: usize,
    pub dst: usize,
    pub mult: Multiplier,
    pub degree: i64,
}

/// `α_1..α_n` followed by `β_1..β_n`.
pub fn generators(n: usize) -> Vec<Generator> {
    let next = |i: usize| i % n + 1;
    let alphas = (1..=n).map(|i| Generator {
        src: next(i),
        dst: i,
        mult: if i == n { Multiplier::X } else { Multiplier::One },
        degree: 2,
    });
    let betas = (1..=n).map(|i| Generator {
        src: i,
        dst: next(i),
        mult: if i == n { Multiplier::XinvY } else { Multiplier::Y },
        degree: 2 * n as i64 - 2,
    });
    alphas.chain(betas).collect()
}

pub type PieceKey = (usize, i64);

#[derive(Debug, Clone)]
pub struct GradedRep {
    pub n: usize,
    pub top: i64,
    pub dims: BTreeMap<PieceKey, usize>,
    /// Per generator, keyed by source piece.
    pub actions: Vec<BTreeMap<PieceKey, Mat>>,
}

impl GradedRep {
    pub fn empty(n: usize, top: i64) -> Self {
        GradedRep { n, top, dims: BTreeMap::new(), actions: vec![BTreeMap::new(); 2 * n] }
    }

    pub fn dim(&self, key: &PieceKey) -> usize {
        self.dims.get(key).copied().unwrap_or(0)
    }

    /// Total dimension in degree `e`, over all rows.
    pub fn degree_dim(&self, e: i64) -> usize {
        self.dims.iter().filter(|((_, d), _)| *d == e).map(|(_, k)| k).sum()
    }

    pub fn lowest_degree(&self) -> Option<i64> {
        self.dims.iter().filter(|(_, &k)| k > 0).map(|((_, e), _)| *e).min()
    }

    /// Matrix of generator `g` on the piece `key`, or `None` when the
    /// source or target piece is empty or cut off.
    pub fn action(&self, g: usize, key: &PieceKey) -> Option<&Mat> {
        self.actions[g].get(key)
    }

    /// `self(s)`: every piece moves up by `s`, and so does the cut-off.
    pub fn shifted(&self, s: i64) -> GradedRep {
        let dims = self.dims.iter().map(|(&(r, e), &k)| ((r, e + s), k)).collect();
        let actions = self
            .actions
            .iter()
            .map(|m| m.iter().map(|(&(r, e), mat)| ((r, e + s), mat.clone())).collect())
            .collect();
        GradedRep { n: self.n, top: self.top + s, dims, actions }
    }

    /// Direct sum; returns the sum and, per summand, the offset of its
    /// coordinates inside each piece.
    pub fn direct_sum(parts: &[GradedRep]) -> (GradedRep, Vec<BTreeMap<PieceKey, usize>>) {
        let n = parts[0].n;
        let top = parts[0].top;
        let mut sum = GradedRep::empty(n, top);
        let mut offsets = vec![BTreeMap::new(); parts.len()];
        for (k, p) in parts.iter().enumerate() {
            for (&key, &d) in &p.dims {
                let cur = sum.dims.entry(key).or_insert(0);
                offsets[k].insert(key, *cur);
                *cur += d;
            }
        }
        let gens = generators(n);
        for (gi, g) in gens.iter().enumerate() {
            let keys: Vec<PieceKey> = sum.dims.keys().copied().filter(|k| k.0 == g.src).collect();
            for key in keys {
                let tkey = (g.dst, key.1 + g.degree);
                if tkey.1 > top || sum.dim(&key) == 0 || sum.dim(&tkey) == 0 {
                    continue;
                }
                let mut m = Mat::zeros(sum.dim(&tkey), sum.dim(&key));
                for (k, p) in parts.iter().enumerate() {
                    if let Some(block) = p.action(gi, &key) {
                        let (ro, co) = (offsets[k][&tkey], offsets[k][&key]);
                        for r in 0..block.rows {
                            for c in 0..block.cols {
                                m.set(ro + r, co + c, block.get(r, c));
                            }
                        }
                    }
                }
                sum.actions[gi].insert(key, m);
            }
        }
        (sum, offsets)
    }
}

/// Ideals of `R'` appearing in the columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColIdeal {
    R,
    X,
    Y,
    Y2,
    XmY,
    X2mY2,
    XY,
    X2Y2,
}

impl ColIdeal {
    /// The same ideal in the notation of [`crate::order::Ideal`].
    pub fn as_ideal(self) -> crate::order::Ideal {
        use crate::order::Ideal;
        match self {
            ColIdeal::R => Ideal::R,
            ColIdeal::X => Ideal::X,
            ColIdeal::Y => Ideal::Y,
            ColIdeal::Y2 => Ideal::Y2,
            ColIdeal::XmY => Ideal::XMY,
            ColIdeal::X2mY2 => Ideal::X2MY2,
            ColIdeal::XY => Ideal::XY,
            ColIdeal::X2Y2 => Ideal::X2Y2,
        }
    }

    /// Basis of the `R'`-degree `g` part, in coordinates
    /// `(X^g, X^{g-1}Y)`.
    pub fn piece(self, g: i64) -> Vec<[i64; 2]> {
        use ColIdeal::*;
        let full = vec![[1, 0], [0, 1]];
        match self {
            R if g == 0 => vec![[1, 0]],
            R if g >= 1 => full,
            X if g == 1 => vec![[1, 0]],
            X if g >= 2 => full,
            Y if g >= 1 => vec![[0, 1]],
            Y2 if g >= 2 => vec![[0, 1]],
            XmY if g >= 1 => vec![[1, -1]],
            X2mY2 if g >= 2 => vec![[1, -1]],
            XY if g >= 1 => full,
            X2Y2 if g >= 2 => full,
            _ => vec![],
        }
    }
}

/// The ideal column of `M_a`, row 1 first.
pub fn column_ideals(ctx: &PolygonCtx, a: &TaggedEdge) -> Vec<ColIdeal> {
    use ColIdeal::*;
    let n = ctx.n();
    let (a1, a2) = (a.a1, a.a2);
    (1..=n)
        .map(|row| match a.kind {
            EdgeKind::Plain => {
                if row <= a1 {
                    Y
                } else {
                    Y2
                }
            }
            EdgeKind::Notched => {
                if row <= a1 {
                    XmY
                } else {
                    X2mY2
                }
            }
            _ if a1 < a2 => {
                if row <= a1 {
                    R
                } else if row <= a2 {
                    XY
                } else {
                    X
                }
            }
            _ => {
                if row <= a2 {
                    XY
                } else if row <= a1 {
                    X
                } else {
                    X2Y2
                }
            }
        })
        .collect()
}

/// Image of `(a, b) = a X^g + b X^{g-1}Y` under a multiplier, computed in
/// the truncated ring after clearing one power of `X`. Returns the new
/// `R'`-degree and coordinates.
pub fn multiply(ring: &TruncatedRing, mult: Multiplier, g: i64, v: [i64; 2]) -> (i64, [i64; 2]) {
    let g = g as usize;
    let mut lifted = vec![0; ring.dim()];
    lifted[ring.index(Monomial { m: g + 1, y: false })] += v[0];
    lifted[ring.index(Monomial { m: g, y: true })] += v[1];
    let (mono, dg, extra) = match mult {
        Multiplier::One => (Monomial { m: 0, y: false }, 0, 0),
        Multiplier::X => (Monomial { m: 1, y: false }, 1, 0),
        Multiplier::Y => (Monomial { m: 0, y: true }, 1, 0),
        Multiplier::XinvY => (Monomial { m: 0, y: true }, 0, 1),
    };
    let mut mv = vec![0; ring.dim()];
    mv[ring.index(mono)] = 1;
    let prod = ring.mul(&lifted, &mv);
    let g2 = g + dg;
    let shift = 1 + extra;
    let a = prod[ring.index(Monomial { m: g2 + shift, y: false })];
    let b = prod[ring.index(Monomial { m: g2 + shift - 1, y: true })];
    let rest: i64 = prod.iter().map(|c| c.abs()).sum::<i64>() - a.abs() - b.abs();
    assert_eq!(rest, 0, "product left the expected degree");
    (g2 as i64, [a, b])
}

/// An indecomposable `M_a` realized over `F_p`.
#[derive(Debug, Clone)]
pub struct IdealModule {
    pub edge: TaggedEdge,
    pub ideals: Vec<ColIdeal>,
    /// `u`-degree of the `R'`-degree 0 part of row 1.
    pub anchor: i64,
    /// Basis of each piece in plane coordinates, keyed like `rep.dims`.
    pub basis: BTreeMap<PieceKey, Vec<[i64; 2]>>,
    /// `R'`-degree of each piece.
    pub rdeg: BTreeMap<PieceKey, i64>,
    pub rep: GradedRep,
}

/// `u`-degree of the `R'`-degree `g` part of row `i`.
pub fn u_degree(n: usize, anchor: i64, row: usize, g: i64) -> i64 {
    2 * n as i64 * g - 2 * (row as i64 - 1) + anchor
}

/// Coordinates of `v` in the basis `b` (panics if `v` is outside its span).
fn coords(field: &Field, b: &[[i64; 2]], v: [i64; 2]) -> Vec<u64> {
    let cols: Vec<Vec<u64>> = b.iter().map(|x| vec![field.reduce(x[0]), field.reduce(x[1])]).collect();
    let m = Mat::from_cols(2, &cols);
    field
        .solve(&m, &[field.reduce(v[0]), field.reduce(v[1])])
        .expect("image lies in the target ideal")
}

pub fn ideal_module(ctx: &PolygonCtx, a: &TaggedEdge, top: i64, field: &Field) -> IdealModule {
    let n = ctx.n();
    let ideals = column_ideals(ctx, a);
    let gmin1 = (0..).find(|&g| !ideals[0].piece(g).is_empty()).expect("nonzero ideal");
    let anchor = ctx.theta_length(&ctx.side(1), a) as i64 - 2 * n as i64 * gmin1;
    let gmax = (top - anchor) / (2 * n as i64) + 2;
    let ring = TruncatedRing::new(gmax as usize + 4);
    let mut basis = BTreeMap::new();
    let mut rdeg = BTreeMap::new();
    let mut rep = GradedRep::empty(n, top);
    for (k, ideal) in ideals.iter().enumerate() {
        let row = k + 1;
        for g in 0..=gmax {
            let e = u_degree(n, anchor, row, g);
            let b = ideal.piece(g);
            if e > top || b.is_empty() {
                continue;
            }
            rep.dims.insert((row, e), b.len());
            basis.insert((row, e), b);
            rdeg.insert((row, e), g);
        }
    }
    for (gi, gen) in generators(n).iter().enumerate() {
        let keys: Vec<PieceKey> = basis.keys().copied().filter(|k| k.0 == gen.src).collect();
        for key in keys {
            let tkey = (gen.dst, key.1 + gen.degree);
            if tkey.1 > top {
                continue;
            }
            let src = &basis[&key];
            let g = rdeg[&key];
            let images: Vec<(i64, [i64; 2])> = src.iter().map(|v| multiply(&ring, gen.mult, g, *v)).collect();
            let Some(tb) = basis.get(&tkey) else {
                assert!(images.iter().all(|(_, w)| *w == [0, 0]), "{a}: generator leaves the module");
                continue;
            };
            assert!(images.iter().all(|(g2, _)| *g2 == rdeg[&tkey]), "degree bookkeeping");
            let cols: Vec<Vec<u64>> = images.iter().map(|(_, w)| coords(field, tb, *w)).collect();
            rep.actions[gi].insert(key, Mat::from_cols(tb.len(), &cols));
        }
    }
    IdealModule { edge: *a, ideals, anchor, basis, rdeg, rep }
}

/// Matrix of a multiplier acting directly on a piece, in piece bases.
fn direct_multiplier(m: &IdealModule, field: &Field, key: &PieceKey, mult: &[Multiplier], tkey: &PieceKey) -> Option<Mat> {
    let tb = m.basis.get(tkey)?;
    let ring = TruncatedRing::new(m.rdeg.values().copied().max().unwrap_or(0) as usize + 4 + mult.len());
    let cols: Vec<Vec<u64>> = m.basis[key]
        .iter()
        .map(|v| {
            let (mut g, mut w) = (m.rdeg[key], *v);
            for x in mult {
                (g, w) = multiply(&ring, *x, g, w);
            }
            assert_eq!(g, m.rdeg[tkey]);
            coords(field, tb, w)
        })
        .collect();
    Some(Mat::from_cols(tb.len(), &cols))
}

/// Apply generators in order (first element acts first).
fn path_matrix(rep: &GradedRep, field: &Field, path: &[usize], key: &PieceKey) -> Option<(PieceKey, Mat)> {
    let gens = generators(rep.n);
    let mut cur = *key;
    let mut acc = Mat::identity(rep.dim(key));
    for &g in path {
        let next = (gens[g].dst, cur.1 + gens[g].degree);
        if next.1 > rep.top {
            return None;
        }
        let step = rep.action(g, &cur).cloned().unwrap_or_else(|| Mat::zeros(rep.dim(&next), rep.dim(&cur)));
        acc = field.matmul(&step, &acc);
        cur = next;
    }
    Some((cur, acc))
}

/// The relations `α_i⋯α_{i-1} = X`, `β_{i-1}⋯β_i = Y^{n-1}` and
/// `α_iβ_i = β_{i-1}α_{i-1} = Y` on every piece where they fit under the
/// cut-off. Returns the number of failing instances.
pub fn check_relations(m: &IdealModule, field: &Field) -> usize {
    let n = m.rep.n;
    let alpha = |i: usize| (i + n - 1) % n; // index of α_i for 1-based i (mod n)
    let beta = |i: usize| n + (i + n - 1) % n;
    let mut bad = 0;
    for key in m.basis.keys() {
        let i = key.0;
        // α_{i-1} acts first, α_i last.
        let a_path: Vec<usize> = (0..n).map(|s| alpha(i + n - 1 - s)).collect();
        let b_path: Vec<usize> = (0..n).map(|s| beta(i + s)).collect();
        let ab = vec![beta(i), alpha(i)];
        let ba = vec![alpha(i + n - 1), beta(i + n - 1)];
        let checks: [(&[usize], Vec<Multiplier>); 4] = [
            (&a_path, vec![Multiplier::X]),
            (&b_path, vec![Multiplier::Y; n - 1]),
            (&ab, vec![Multiplier::Y]),
            (&ba, vec![Multiplier::Y]),
        ];
        for (path, mult) in checks {
            let Some((tkey, got)) = path_matrix(&m.rep, field, path, key) else { continue };
            let want = direct_multiplier(m, field, key, &mult, &tkey)
                .unwrap_or_else(|| Mat::zeros(got.rows, got.cols));
            if got != want {
                bad += 1;
            }
        }
    }
    bad
}
