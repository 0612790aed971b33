//! Graded Hom, stable Hom and Ext¹ between truncated representations, by
//! solving the commutation equations directly.

use std::collections::BTreeMap;

use super::linalg::{Field, Mat};
use super::module::{generators, ideal_module, GradedRep, PieceKey};
use crate::polygon::PolygonCtx;

/// A degree-`d` morphism: one block per source piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    pub degree: i64,
    pub blocks: BTreeMap<PieceKey, Mat>,
}

impl GradedMap {
    pub fn block(&self, key: &PieceKey, rows: usize, cols: usize) -> Mat {
        self.blocks.get(key).cloned().unwrap_or_else(|| Mat::zeros(rows, cols))
    }
}

/// Source pieces carrying an unknown block, with their offsets.
fn layout(m: &GradedRep, n: &GradedRep, d: i64) -> (Vec<(PieceKey, usize)>, usize) {
    let mut out = Vec::new();
    let mut off = 0;
    for (&(r, e), &dm) in &m.dims {
        let dn = n.dim(&(r, e + d));
        if dm == 0 || dn == 0 || e + d > n.top {
            continue;
        }
        out.push(((r, e), off));
        off += dm * dn;
    }
    (out, off)
}

fn flatten(m: &GradedRep, n: &GradedRep, d: i64, f: &GradedMap) -> Vec<u64> {
    let (lay, total) = layout(m, n, d);
    let mut v = vec![0; total];
    for ((r, e), off) in lay {
        let (dm, dn) = (m.dim(&(r, e)), n.dim(&(r, e + d)));
        if let Some(b) = f.blocks.get(&(r, e)) {
            for i in 0..dn {
                for j in 0..dm {
                    v[off + i * dm + j] = b.get(i, j);
                }
            }
        }
    }
    v
}

/// Basis of `Hom_d(M, N)` (maps raising degree by `d`), as far as the
/// truncation of `N` sees it.
pub fn hom_space(field: &Field, m: &GradedRep, n: &GradedRep, d: i64) -> Vec<GradedMap> {
    let (lay, total) = layout(m, n, d);
    if total == 0 {
        return vec![];
    }
    let offs: BTreeMap<PieceKey, usize> = lay.iter().copied().collect();
    let gens = generators(m.n);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        for (&(r, e), &dm) in &m.dims {
            if r != g.src || dm == 0 {
                continue;
            }
            let src_n = (r, e + d);
            let tgt_m = (g.dst, e + g.degree);
            let tgt_n = (g.dst, e + g.degree + d);
            if tgt_n.1 > n.top || tgt_m.1 > m.top {
                continue;
            }
            let dn_t = n.dim(&tgt_n);
            if dn_t == 0 {
                continue;
            }
            // f(tgt_m) · γ_M  -  γ_N · f(r, e) = 0, entrywise.
            let gm = m.action(gi, &(r, e));
            let gn = n.action(gi, &src_n);
            let dm_t = m.dim(&tgt_m);
            let dn_s = n.dim(&src_n);
            for i in 0..dn_t {
                for j in 0..dm {
                    let mut row = vec![0u64; total];
                    if let (Some(gm), Some(&off)) = (gm, offs.get(&tgt_m)) {
                        for k in 0..dm_t {
                            let c = gm.get(k, j);
                            if c != 0 {
                                let idx = off + i * dm_t + k;
                                row[idx] = field.add(row[idx], c);
                            }
                        }
                    }
                    if let (Some(gn), Some(&off)) = (gn, offs.get(&(r, e))) {
                        for k in 0..dn_s {
                            let c = gn.get(i, k);
                            if c != 0 {
                                let idx = off + k * dm + j;
                                row[idx] = field.sub(row[idx], c);
                            }
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let mut eq = Mat::zeros(rows.len(), total);
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            eq.set(i, j, x);
        }
    }
    field
        .nullspace(&eq)
        .into_iter()
        .map(|v| {
            let blocks = lay
                .iter()
                .map(|&((r, e), off)| {
                    let (dm, dn) = (m.dim(&(r, e)), n.dim(&(r, e + d)));
                    let mut b = Mat::zeros(dn, dm);
                    for i in 0..dn {
                        for j in 0..dm {
                            b.set(i, j, v[off + i * dm + j]);
                        }
                    }
                    ((r, e), b)
                })
                .collect();
            GradedMap { degree: d, blocks }
        })
        .collect()
}

/// `g ∘ f`.
pub fn compose(field: &Field, f: &GradedMap, g: &GradedMap) -> GradedMap {
    let blocks = f
        .blocks
        .iter()
        .filter_map(|(&(r, e), fb)| g.blocks.get(&(r, e + f.degree)).map(|gb| ((r, e), field.matmul(gb, fb))))
        .collect();
    GradedMap { degree: f.degree + g.degree, blocks }
}

/// Projective cover `π: P → N` with its kernel embedding.
#[derive(Debug, Clone)]
pub struct Cover {
    pub proj: GradedRep,
    /// `(row, generator degree)` of each indecomposable summand.
    pub summands: Vec<(usize, i64)>,
    pub pi: GradedMap,
    pub kernel: GradedRep,
    /// Columns spanning the kernel inside each piece of `proj`.
    pub iota: GradedMap,
}

/// `P_r` with its generator placed in degree `at`, built far enough up to
/// fill `top`.
pub fn projective_at(ctx: &PolygonCtx, r: usize, at: i64, top: i64, field: &Field) -> GradedRep {
    let side = ctx.side(r);
    let probe = ideal_module(ctx, &side, 4 * ctx.n() as i64 * ctx.n() as i64, field);
    let low = probe.rep.dims.keys().filter(|k| k.0 == r).map(|k| k.1).min().expect("P_r has row r");
    let s = at - low;
    ideal_module(ctx, &side, top - s, field).rep.shifted(s)
}

fn top_space(field: &Field, n: &GradedRep, key: &PieceKey) -> Vec<Vec<u64>> {
    let dim = n.dim(key);
    let gens = generators(n.n);
    let mut images: Vec<Vec<u64>> = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if g.dst != key.0 {
            continue;
        }
        if let Some(mat) = n.action(gi, &(g.src, key.1 - g.degree)) {
            images.extend((0..mat.cols).map(|c| mat.col(c)));
        }
    }
    // Extend a basis of the image span by unit vectors.
    let mut chosen: Vec<Vec<u64>> = Vec::new();
    let mut span = images.clone();
    let base = field.rank_of(&span, dim);
    let mut rank = base;
    for u in 0..dim {
        let mut e = vec![0; dim];
        e[u] = 1;
        span.push(e.clone());
        let r = field.rank_of(&span, dim);
        if r > rank {
            rank = r;
            chosen.push(e);
        } else {
            span.pop();
        }
    }
    chosen
}

/// Kernel of a degree-0 map, as a representation with its inclusion.
fn kernel(field: &Field, p: &GradedRep, pi: &GradedMap, target: &GradedRep) -> (GradedRep, GradedMap) {
    let mut ker = GradedRep::empty(p.n, p.top);
    let mut basis: BTreeMap<PieceKey, Mat> = BTreeMap::new();
    for (&key, &dp) in &p.dims {
        let dn = target.dim(&key);
        let b = pi.block(&key, dn, dp);
        let ns = field.nullspace(&b);
        if ns.is_empty() {
            continue;
        }
        ker.dims.insert(key, ns.len());
        basis.insert(key, Mat::from_cols(dp, &ns));
    }
    for (gi, g) in generators(p.n).iter().enumerate() {
        for (key, kb) in &basis {
            if key.0 != g.src {
                continue;
            }
            let tkey = (g.dst, key.1 + g.degree);
            if tkey.1 > p.top {
                continue;
            }
            let Some(tb) = basis.get(&tkey) else { continue };
            let Some(act) = p.action(gi, key) else { continue };
            let img = field.matmul(act, kb);
            let cols: Vec<Vec<u64>> = (0..img.cols)
                .map(|c| field.solve(tb, &img.col(c)).expect("kernel is a submodule"))
                .collect();
            ker.actions[gi].insert(*key, Mat::from_cols(tb.cols, &cols));
        }
    }
    (ker, GradedMap { degree: 0, blocks: basis })
}

pub fn projective_cover(ctx: &PolygonCtx, n: &GradedRep, field: &Field) -> Cover {
    let mut summands = Vec::new();
    let mut parts = Vec::new();
    let mut targets = Vec::new();
    for &key in n.dims.keys() {
        for v in top_space(field, n, &key) {
            summands.push(key);
            parts.push(projective_at(ctx, key.0, key.1, n.top, field));
            targets.push((key, v));
        }
    }
    let (proj, offsets) = GradedRep::direct_sum(&parts);
    let mut pi = GradedMap { degree: 0, blocks: BTreeMap::new() };
    for (&key, &dp) in &proj.dims {
        pi.blocks.insert(key, Mat::zeros(n.dim(&key), dp));
    }
    for (k, (part, (gkey, v))) in parts.iter().zip(&targets).enumerate() {
        // The unique degree-0 map sending the generator to v.
        let homs = hom_space(field, part, n, 0);
        let vals: Vec<Vec<u64>> = homs.iter().map(|h| h.block(gkey, n.dim(gkey), 1).col(0)).collect();
        let m = Mat::from_cols(n.dim(gkey), &vals);
        let coef = field.solve(&m, v).expect("generator value reachable");
        for (&key, &dpart) in &part.dims {
            let dn = n.dim(&key);
            let mut acc = Mat::zeros(dn, dpart);
            for (h, &c) in homs.iter().zip(&coef) {
                if c == 0 {
                    continue;
                }
                let b = h.block(&key, dn, dpart);
                for x in 0..acc.data.len() {
                    acc.data[x] = field.add(acc.data[x], field.mul(c, b.data[x]));
                }
            }
            let off = offsets[k][&key];
            let blk = pi.blocks.get_mut(&key).expect("piece present");
            for i in 0..dn {
                for j in 0..dpart {
                    blk.set(i, off + j, acc.get(i, j));
                }
            }
        }
    }
    let (kernel, iota) = kernel(field, &proj, &pi, n);
    Cover { proj, summands, pi, kernel, iota }
}

/// `dim Hom_d(M, N)` minus the maps factoring through the projective
/// cover of `N`.
pub fn stable_hom_dim(field: &Field, m: &GradedRep, n: &GradedRep, cover_n: &Cover, d: i64) -> usize {
    let homs = hom_space(field, m, n, d);
    if homs.is_empty() {
        return 0;
    }
    let through: Vec<Vec<u64>> = hom_space(field, m, &cover_n.proj, d)
        .iter()
        .map(|f| flatten(m, n, d, &compose(field, f, &cover_n.pi)))
        .collect();
    let (_, total) = layout(m, n, d);
    homs.len() - field.rank_of(&through, total)
}

/// `dim Ext¹_d(M, N) = dim Hom_d(ΩM, N) - rank(Hom_d(P, N) → Hom_d(ΩM, N))`.
pub fn ext1_dim_at(field: &Field, cover_m: &Cover, n: &GradedRep, d: i64) -> usize {
    let om = &cover_m.kernel;
    let homs = hom_space(field, om, n, d);
    if homs.is_empty() {
        return 0;
    }
    let restricted: Vec<Vec<u64>> = hom_space(field, &cover_m.proj, n, d)
        .iter()
        .map(|f| flatten(om, n, d, &compose(field, &cover_m.iota, f)))
        .collect();
    let (_, total) = layout(om, n, d);
    homs.len() - field.rank_of(&restricted, total)
}

/// Random linear combination of a Hom basis, seeded.
pub fn random_combination(field: &Field, basis: &[GradedMap], seed: u64) -> Option<GradedMap> {
    use rand::{Rng, SeedableRng};
    let first = basis.first()?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let coef: Vec<u64> = basis.iter().map(|_| rng.random_range(1..field.p)).collect();
    let mut out = first.clone();
    for (key, blk) in out.blocks.iter_mut() {
        for x in blk.data.iter_mut() {
            *x = 0;
        }
        for (h, &c) in basis.iter().zip(&coef) {
            let b = &h.blocks[key];
            for (y, &z) in blk.data.iter_mut().zip(&b.data) {
                *y = field.add(*y, field.mul(c, z));
            }
        }
    }
    Some(out)
}

/// Whether a degree-`d` map is bijective on every piece of `M` whose
/// image lies under the cut-off, with matching dimensions.
pub fn is_graded_iso(field: &Field, m: &GradedRep, n: &GradedRep, f: &GradedMap) -> bool {
    let d = f.degree;
    let lo = m.lowest_degree().unwrap_or(0);
    let span_ok = m.dims.iter().all(|(&(r, e), &dm)| e + d > n.top || n.dim(&(r, e + d)) == dm);
    let extra_ok = n.dims.iter().all(|(&(r, e), &dn)| dn == 0 || e - d < lo || m.dim(&(r, e - d)) == dn || e - d > m.top);
    span_ok
        && extra_ok
        && m.dims.iter().all(|(&(r, e), &dm)| {
            if e + d > n.top || dm == 0 {
                return true;
            }
            field.rank(&f.block(&(r, e), dm, dm)) == dm
        })
}

/// The syzygy of `M_a` computed from its projective cover, compared with
/// `M_b` for the predicted `b`. Returns the grading shift `s` with
/// `ΩM_a ≅ M_b(s)` if the two agree under the cut-off.
pub fn syzygy_shift(ctx: &PolygonCtx, a: &crate::TaggedEdge, b: &crate::TaggedEdge, top: i64, field: &Field) -> Option<i64> {
    let ma = ideal_module(ctx, a, top, field);
    let cover = projective_cover(ctx, &ma.rep, field);
    let om = &cover.kernel;
    let probe = ideal_module(ctx, b, 4 * ctx.n() as i64 * ctx.n() as i64, field);
    let s = om.lowest_degree()? - probe.rep.lowest_degree()?;
    let mb = ideal_module(ctx, b, top - s, field).rep.shifted(s);
    if mb.dims.iter().filter(|(_, &k)| k > 0).collect::<Vec<_>>() != om.dims.iter().filter(|(_, &k)| k > 0).collect::<Vec<_>>() {
        return None;
    }
    let homs = hom_space(field, &mb, om, 0);
    let f = random_combination(field, &homs, 0x5eed)?;
    is_graded_iso(field, &mb, om, &f).then_some(s)
}

/// Rows of the indecomposable summands of the projective cover of `M_a`.
pub fn cover_rows(ctx: &PolygonCtx, a: &crate::TaggedEdge, top: i64, field: &Field) -> Vec<usize> {
    let ma = ideal_module(ctx, a, top, field);
    let mut rows: Vec<usize> = projective_cover(ctx, &ma.rep, field).summands.iter().map(|k| k.0).collect();
    rows.sort_unstable();
    rows
}

/// `dim Hom(x, y)` in the graded category, read off the oracle: the graded
/// object `x` is `M_{forget x}` placed so that Hom lands in `u`-degree
/// `level(y) - level(x)`.
pub fn graded_hom_oracle(ctx: &PolygonCtx, x: &crate::graded::GradedIndec, y: &crate::graded::GradedIndec, top: i64, field: &Field) -> usize {
    use crate::graded::forget;
    let n = ctx.n();
    let ma = ideal_module(ctx, &forget(ctx, x), top, field);
    let mb = ideal_module(ctx, &forget(ctx, y), top, field);
    hom_space(field, &ma.rep, &mb.rep, y.level(n) - x.level(n)).len()
}

/// Whether the kernel of the projective cover of `x` is `Ω_z x` with the
/// grading predicted by the index formula.
pub fn graded_omega_oracle(ctx: &PolygonCtx, x: &crate::graded::GradedIndec, top: i64, field: &Field) -> bool {
    use crate::graded::{forget, omega_z};
    let n = ctx.n();
    let Ok(ox) = omega_z(ctx, x) else { return false };
    syzygy_shift(ctx, &forget(ctx, x), &forget(ctx, &ox), top, field) == Some(x.level(n) - ox.level(n))
}
