//! The graded category `CM^ℤ(Λ)`.
//!
//! Indecomposables are `(i,j)` with `0 < j-i < n`, `(i,*)` and `(i,⋈)` for
//! integers `i`, `j`. Writing `A_2 = i+n` for the puncture objects, every
//! morphism goes from a pair `(A_1, A_2)` to a componentwise larger pair, so
//! the *level* `A_1 + A_2` strictly increases along irreducible maps and
//! Hom dimensions can be knitted level by level.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::cluster::is_dynkin_d;
use crate::error::{Error, Result};
use crate::homology::ext1_dim;
use crate::polygon::{PolygonCtx, TaggedEdge};
use crate::triangulation::{PuncturePattern, TaggedTriangulation};

/// Default index window, in periods of `2n` levels.
pub const DEFAULT_WINDOW: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GradedIndec {
    Arc { i: i64, j: i64 },
    Star { i: i64 },
    Notch { i: i64 },
}

use GradedIndec::{Arc, Notch, Star};

impl std::fmt::Display for GradedIndec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Arc { i, j } => write!(f, "({i},{j})"),
            Star { i } => write!(f, "({i},*)"),
            Notch { i } => write!(f, "({i},x)"),
        }
    }
}

impl GradedIndec {
    pub fn first(&self) -> i64 {
        match *self {
            Arc { i, .. } | Star { i } | Notch { i } => i,
        }
    }

    /// `A_2`; `i + n` for puncture objects.
    pub fn second(&self, n: usize) -> i64 {
        match *self {
            Arc { j, .. } => j,
            Star { i } | Notch { i } => i + n as i64,
        }
    }

    pub fn level(&self, n: usize) -> i64 {
        self.first() + self.second(n)
    }

    pub fn is_projective(&self) -> bool {
        matches!(*self, Arc { i, j } if j == i + 1)
    }

    pub fn is_valid(&self, n: usize) -> bool {
        match *self {
            Arc { i, j } => 0 < j - i && j - i < n as i64,
            _ => true,
        }
    }

    fn swap_tag(self) -> Self {
        match self {
            Star { i } => Notch { i },
            Notch { i } => Star { i },
            a => a,
        }
    }

    fn translate(self, by: i64) -> Self {
        match self {
            Arc { i, j } => Arc { i: i + by, j: j + by },
            Star { i } => Star { i: i + by },
            Notch { i } => Notch { i: i + by },
        }
    }
}

/// `(i,j)` read with the convention `(i, i+n) = (i,*) ⊕ (i,⋈)`.
pub fn expand_graded(n: usize, i: i64, j: i64) -> Vec<GradedIndec> {
    if j - i == n as i64 {
        vec![Star { i }, Notch { i }]
    } else {
        vec![Arc { i, j }]
    }
}

/// Degree shift `x(k)`.
pub fn shift(ctx: &PolygonCtx, x: &GradedIndec, k: i64) -> GradedIndec {
    x.translate(k * ctx.n() as i64)
}

/// The underlying ungraded module.
pub fn forget(ctx: &PolygonCtx, x: &GradedIndec) -> TaggedEdge {
    match *x {
        Arc { i, j } => ctx.edge(i, j).expect("valid graded arc"),
        Star { i } => TaggedEdge::plain(ctx.normalize(i)),
        Notch { i } => TaggedEdge::notched(ctx.normalize(i)),
    }
}

fn non_projective(x: &GradedIndec) -> Result<()> {
    if x.is_projective() {
        Err(Error::Projective(x.to_string()))
    } else {
        Ok(())
    }
}

/// Syzygy `Ω`: shift by `1 - n`, swapping tags.
pub fn omega_z(ctx: &PolygonCtx, x: &GradedIndec) -> Result<GradedIndec> {
    non_projective(x)?;
    Ok(x.translate(1 - ctx.n() as i64).swap_tag())
}

/// Cosyzygy `Ω⁻¹`.
pub fn omega_inv_z(ctx: &PolygonCtx, x: &GradedIndec) -> Result<GradedIndec> {
    non_projective(x)?;
    Ok(x.translate(ctx.n() as i64 - 1).swap_tag())
}

/// `Ω^k` for any integer `k`.
pub fn omega_pow(ctx: &PolygonCtx, x: &GradedIndec, k: i64) -> Result<GradedIndec> {
    non_projective(x)?;
    let y = x.translate(k * (1 - ctx.n() as i64));
    Ok(if k % 2 != 0 { y.swap_tag() } else { y })
}

/// Nakayama functor: shift indices by `n - 2`, tags kept.
pub fn nu_z(ctx: &PolygonCtx, x: &GradedIndec) -> GradedIndec {
    x.translate(ctx.n() as i64 - 2)
}

/// AR translation `(i,j) ↦ (i-1,j-1)`, `(i,*) ↦ (i-1,⋈)`.
pub fn tau_z(_ctx: &PolygonCtx, x: &GradedIndec) -> Result<GradedIndec> {
    non_projective(x)?;
    Ok(x.translate(-1).swap_tag())
}

pub fn tau_inv_z(_ctx: &PolygonCtx, x: &GradedIndec) -> Result<GradedIndec> {
    non_projective(x)?;
    Ok(x.translate(1).swap_tag())
}

/// Middle term of the AR sequence ending at a non-projective `z`.
pub fn mesh_middle(ctx: &PolygonCtx, z: &GradedIndec) -> Result<Vec<GradedIndec>> {
    non_projective(z)?;
    let n = ctx.n();
    let mut out = match *z {
        Arc { i, j } => {
            let mut m = expand_graded(n, i - 1, j);
            m.push(Arc { i, j: j - 1 });
            m
        }
        Star { i } | Notch { i } => vec![Arc { i, j: i - 1 + n as i64 }],
    };
    out.sort();
    Ok(out)
}

/// Non-split extensions `0 → b → E → a → 0`, one middle term per basis
/// element of `Ext¹(a, b)`.
pub fn graded_extension_list(ctx: &PolygonCtx, a: &GradedIndec, b: &GradedIndec) -> Vec<Vec<GradedIndec>> {
    let n = ctx.n() as i64;
    let nu = ctx.n();
    let mut out: Vec<Vec<GradedIndec>> = Vec::new();
    let mut push = |mut m: Vec<GradedIndec>| {
        m.sort();
        out.push(m);
    };
    if a.is_projective() || b.is_projective() {
        return Vec::new();
    }
    match (*b, *a) {
        (Arc { i, j }, Arc { i: k, j: l }) => {
            if i < k && k < j && j < l && l <= i + n {
                let mut m = expand_graded(nu, i, l);
                m.push(Arc { i: k, j });
                push(m);
            }
            // Last term `(k, l')` with `l' = l + n`.
            let l = l - n;
            if i < l && l < j && j <= k && k < i + n {
                let mut m = expand_graded(nu, k, i + n);
                m.push(Arc { i: l, j });
                push(m);
            }
            if i < l && l < k && k < j && j < i + n {
                push(vec![Arc { i: k, j: i + n }, Arc { i: l, j }]);
                push(vec![Arc { i: l, j: i + n }, Arc { i: k, j }]);
            }
        }
        (Arc { i, j }, Star { i: k } | Notch { i: k }) => {
            if i < k && k < j {
                let tagged = if matches!(a, Star { .. }) { Star { i } } else { Notch { i } };
                push(vec![Arc { i: k, j }, tagged]);
            }
        }
        (Star { i } | Notch { i }, Arc { i: k, j: l }) => {
            let l = l - n;
            if i < l && l < k && k < i + n {
                let tagged = if matches!(b, Star { .. }) { Star { i: l } } else { Notch { i: l } };
                let mut m = expand_graded(nu, k, i + n);
                m.push(tagged);
                push(m);
            }
        }
        (Star { i }, Notch { i: k }) | (Notch { i }, Star { i: k }) => {
            if i < k && k < i + n {
                push(expand_graded(nu, k, i + n));
            }
        }
        _ => {}
    }
    out
}

/// `dim Ext¹(a, b)`: extensions with `b` on the left.
pub fn graded_ext1_dim(ctx: &PolygonCtx, a: &GradedIndec, b: &GradedIndec) -> usize {
    graded_extension_list(ctx, a, b).len()
}

/// Every indecomposable of the given level.
pub fn objects_at_level(ctx: &PolygonCtx, level: i64) -> Vec<GradedIndec> {
    let n = ctx.n() as i64;
    let mut out: Vec<GradedIndec> = (1..n)
        .filter(|d| (level - d).rem_euclid(2) == 0)
        .map(|d| {
            let i = (level - d).div_euclid(2);
            Arc { i, j: i + d }
        })
        .collect();
    if (level - n).rem_euclid(2) == 0 {
        let i = (level - n).div_euclid(2);
        out.push(Star { i });
        out.push(Notch { i });
    }
    out.sort();
    out
}

/// `dim Hom(x, z)` for every `z` with level up to `max_level`, by knitting
/// along AR meshes from `x`.
pub fn knit_from(ctx: &PolygonCtx, x: &GradedIndec, max_level: i64) -> HashMap<GradedIndec, usize> {
    let n = ctx.n();
    let l0 = x.level(n);
    let mut h: HashMap<GradedIndec, usize> = HashMap::new();
    let get = |h: &HashMap<GradedIndec, usize>, z: &GradedIndec| h.get(z).copied().unwrap_or(0);
    for level in l0..=max_level {
        for z in objects_at_level(ctx, level) {
            let own = usize::from(z == *x);
            let val = if level == l0 {
                own
            } else if let Arc { i, j } = z {
                if z.is_projective() {
                    get(&h, &Arc { i: i - 1, j }) + own
                } else {
                    let mid: usize = mesh_middle(ctx, &z).expect("non-projective").iter().map(|m| get(&h, m)).sum();
                    let t = get(&h, &tau_z(ctx, &z).expect("non-projective"));
                    (mid + own).checked_sub(t).expect("knitting went negative")
                }
            } else {
                let mid: usize = mesh_middle(ctx, &z).expect("puncture object").iter().map(|m| get(&h, m)).sum();
                let t = get(&h, &tau_z(ctx, &z).expect("puncture object"));
                (mid + own).checked_sub(t).expect("knitting went negative")
            };
            if val > 0 {
                h.insert(z, val);
            }
        }
    }
    h
}

/// `dim Hom(x, y)` in `CM^ℤ(Λ)`, with the default window.
pub fn graded_hom_dim(ctx: &PolygonCtx, x: &GradedIndec, y: &GradedIndec) -> Result<usize> {
    graded_hom_dim_window(ctx, x, y, DEFAULT_WINDOW)
}

/// `dim Hom(x, y)`, refusing targets more than `window` periods above `x`.
pub fn graded_hom_dim_window(ctx: &PolygonCtx, x: &GradedIndec, y: &GradedIndec, window: i64) -> Result<usize> {
    let n = ctx.n();
    let (lx, ly) = (x.level(n), y.level(n));
    if ly - lx > 2 * n as i64 * window {
        return Err(Error::WindowExceeded(format!("{y} is more than {window} periods above {x}")));
    }
    if ly < lx || y.first() < x.first() || y.second(n) < x.second(n) {
        return Ok(0);
    }
    Ok(knit_from(ctx, x, ly).get(y).copied().unwrap_or(0))
}

/// Stable Hom by graded AR duality: `dim Ext¹(y, τx)`.
pub fn stable_graded_hom_dim(ctx: &PolygonCtx, x: &GradedIndec, y: &GradedIndec) -> usize {
    if x.is_projective() || y.is_projective() {
        return 0;
    }
    let tx = tau_z(ctx, x).expect("non-projective");
    graded_ext1_dim(ctx, y, &tx)
}

/// Summands of the injective hull of a non-projective `x`.
pub fn injective_hull(ctx: &PolygonCtx, x: &GradedIndec) -> Result<Vec<GradedIndec>> {
    non_projective(x)?;
    let n = ctx.n() as i64;
    Ok(match *x {
        Arc { i, j } => vec![Arc { i: i - 1 + n, j: i + n }, Arc { i: j - 1, j }],
        Star { i } | Notch { i } => vec![Arc { i: i - 1 + n, j: i + n }],
    })
}

/// `dim Hom(x, y)` as stable part plus maps through projectives, the
/// latter read off `0 → x → I(x) → Ω⁻¹x → 0`.
pub fn hom_via_duality(ctx: &PolygonCtx, x: &GradedIndec, y: &GradedIndec) -> Result<usize> {
    if x.is_projective() {
        return graded_hom_dim(ctx, x, y);
    }
    let through: usize = injective_hull(ctx, x)?
        .iter()
        .map(|p| graded_hom_dim_window(ctx, p, y, DEFAULT_WINDOW + 1))
        .sum::<Result<usize>>()?;
    let cok = graded_hom_dim_window(ctx, &omega_inv_z(ctx, x)?, y, DEFAULT_WINDOW + 1)?;
    Ok(stable_graded_hom_dim(ctx, x, y) + through - cok)
}

/// A vertex of the polygon meeting no arc of `tri`, if any.
pub fn free_vertex(tri: &TaggedTriangulation) -> Option<usize> {
    (1..=tri.ctx().n()).find(|&v| !tri.has_arc_at(v))
}

/// Lift the arcs of `tri` to `CM^ℤ(Λ)`.
///
/// With a free base vertex `i0` every arc `(a1, a2)` becomes the object
/// with `i0 < A_1 < i0 + n`. When every arc ends at the puncture with one
/// tag, the lift is `(i,*)` (or `(i,⋈)`) for `1 ≤ i ≤ n`.
pub fn lift_triangulation(tri: &TaggedTriangulation, base_vertex: Option<usize>) -> Result<Vec<GradedIndec>> {
    let ctx = tri.ctx();
    let n = ctx.n() as i64;
    let i0 = match base_vertex.or_else(|| free_vertex(tri)) {
        Some(v) if !tri.has_arc_at(v) => v as i64,
        Some(_) => return Err(Error::NoLiftVertex),
        None => {
            return match tri.puncture_pattern() {
                PuncturePattern::AllPlain(_) => Ok((1..=n).map(|i| Star { i }).collect()),
                PuncturePattern::AllNotched(_) => Ok((1..=n).map(|i| Notch { i }).collect()),
                _ => Err(Error::NoLiftVertex),
            }
        }
    };
    let mut out: Vec<GradedIndec> = tri
        .arcs()
        .iter()
        .map(|a| {
            let a1 = i0 + 1 + (a.a1 as i64 - i0 - 1).rem_euclid(n);
            if a.is_puncture() {
                if a.kind == crate::EdgeKind::Plain {
                    Star { i: a1 }
                } else {
                    Notch { i: a1 }
                }
            } else {
                Arc { i: a1, j: a1 + ctx.d(a.a1, a.a2) as i64 }
            }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `Hom_stable(T, Ω^k T) = 0` for every `k` in `ks` other than 0.
pub fn is_tilting_window(ctx: &PolygonCtx, set: &[GradedIndec], ks: impl IntoIterator<Item = i64>) -> bool {
    let ks: Vec<i64> = ks.into_iter().filter(|&k| k != 0).collect();
    set.iter().all(|a| {
        set.iter().all(|b| {
            ks.iter().all(|&k| {
                let bk = omega_pow(ctx, b, k).expect("lift has no projective summand");
                stable_graded_hom_dim(ctx, a, &bk) == 0
            })
        })
    })
}

/// The AR quiver on the levels `[lo, hi]`.
#[derive(Debug, Clone, Serialize)]
pub struct ArWindow {
    pub vertices: Vec<GradedIndec>,
    /// Irreducible maps.
    pub arrows: Vec<(usize, usize)>,
    /// `(z, τz)` pairs.
    pub translations: Vec<(usize, usize)>,
}

pub fn ar_window(ctx: &PolygonCtx, lo: i64, hi: i64) -> ArWindow {
    let vertices: Vec<GradedIndec> = (lo..=hi).flat_map(|l| objects_at_level(ctx, l)).collect();
    let index: HashMap<GradedIndec, usize> = vertices.iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let mut arrows = BTreeSet::new();
    let mut translations = Vec::new();
    for (k, z) in vertices.iter().enumerate() {
        if let Arc { i, j } = *z {
            if z.is_projective() {
                if let Some(&r) = index.get(&Arc { i: i - 1, j }) {
                    arrows.insert((r, k));
                }
                continue;
            }
        }
        for m in mesh_middle(ctx, z).expect("non-projective") {
            if let Some(&mi) = index.get(&m) {
                arrows.insert((mi, k));
            }
        }
        if let Some(&t) = index.get(&tau_z(ctx, z).expect("non-projective")) {
            translations.push((k, t));
        }
    }
    ArWindow { vertices, arrows: arrows.into_iter().collect(), translations }
}

impl ArWindow {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar {\n  rankdir=LR;\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let shape = if v.is_projective() { "box" } else { "ellipse" };
            s.push_str(&format!("  v{k} [label=\"{v}\", shape={shape}];\n"));
        }
        for (a, b) in &self.arrows {
            s.push_str(&format!("  v{a} -> v{b};\n"));
        }
        for (z, t) in &self.translations {
            s.push_str(&format!("  v{z} -> v{t} [style=dashed, constraint=false];\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Orbit label: arc length, or the parity class of a puncture object.
fn orbit_of(x: &GradedIndec) -> (u8, i64) {
    match *x {
        Arc { i, j } => (0, j - i),
        Star { i } => (1, i.rem_euclid(2)),
        Notch { i } => (1, (i + 1).rem_euclid(2)),
    }
}

/// Shape report for [`check_repetitive_d`].
#[derive(Debug, Clone, Serialize)]
pub struct ShapeReport {
    pub orbits: usize,
    pub dynkin_d: bool,
    pub meshes_checked: usize,
    pub mesh_mismatches: usize,
}

/// The window `[lo, lo + periods·2n]` is a piece of the repetitive quiver of
/// type `D_{n+1}`: orbits (τ-orbits plus the projectives) form a `D_{n+1}`
/// diagram, and every mesh fully inside the window agrees with the
/// extension families.
pub fn check_repetitive_d(ctx: &PolygonCtx, lo: i64, periods: i64) -> ShapeReport {
    let n = ctx.n();
    let hi = lo + periods * 2 * n as i64;
    let w = ar_window(ctx, lo, hi);
    let mut label: BTreeMap<(u8, i64), usize> = BTreeMap::new();
    for v in &w.vertices {
        let next = label.len();
        label.entry(orbit_of(v)).or_insert(next);
    }
    let orbit_edges: BTreeSet<(usize, usize)> = w
        .arrows
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (label[&orbit_of(&w.vertices[a])], label[&orbit_of(&w.vertices[b])]);
            (x.min(y), x.max(y))
        })
        .collect();
    let edges: Vec<(usize, usize)> = orbit_edges.into_iter().collect();
    let (mut checked, mut bad) = (0, 0);
    for z in w.vertices.iter().filter(|z| !z.is_projective() && z.level(n) >= lo + 2) {
        checked += 1;
        let t = tau_z(ctx, z).expect("non-projective");
        let fam = graded_extension_list(ctx, z, &t);
        if fam != vec![mesh_middle(ctx, z).expect("non-projective")] {
            bad += 1;
        }
    }
    ShapeReport {
        orbits: label.len(),
        dynkin_d: label.len() == n + 1 && is_dynkin_d(n + 1, &edges),
        meshes_checked: checked,
        mesh_mismatches: bad,
    }
}

/// `Σ_k dim Ext¹(x, y(k))` against the ungraded `dim Ext¹`.
pub fn ext_window_sum(ctx: &PolygonCtx, x: &GradedIndec, y: &GradedIndec, k_range: std::ops::RangeInclusive<i64>) -> (usize, usize) {
    let graded: usize = k_range.map(|k| graded_ext1_dim(ctx, x, &shift(ctx, y, k))).sum();
    (graded, ext1_dim(ctx, &forget(ctx, x), &forget(ctx, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_maps() {
        let c = PolygonCtx::new(4).unwrap();
        let x = Arc { i: 1, j: 3 };
        assert_eq!(shift(&c, &x, 1), Arc { i: 5, j: 7 });
        assert_eq!(forget(&c, &Arc { i: 5, j: 7 }), c.edge(1, 3).unwrap());
        let c5 = PolygonCtx::new(5).unwrap();
        assert_eq!(forget(&c5, &Star { i: 6 }), TaggedEdge::plain(1));
        assert_eq!(omega_z(&c, &Star { i: 2 }).unwrap(), Notch { i: -1 });
        assert_eq!(tau_z(&c, &x).unwrap(), Arc { i: 0, j: 2 });
        assert_eq!(omega_z(&c, &nu_z(&c, &x)).unwrap(), tau_z(&c, &x).unwrap());
        assert!(tau_z(&c, &Arc { i: 1, j: 2 }).is_err());
    }

    #[test]
    fn identity_and_projectives() {
        let c = PolygonCtx::new(5).unwrap();
        for x in objects_at_level(&c, 7) {
            assert_eq!(graded_hom_dim(&c, &x, &x).unwrap(), 1);
        }
        assert_eq!(stable_graded_hom_dim(&c, &Arc { i: 1, j: 2 }, &Arc { i: 1, j: 3 }), 0);
    }
}
