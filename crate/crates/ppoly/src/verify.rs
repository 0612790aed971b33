//! Verification suites comparing closed formulas with each other and with
//! the brute-force oracles. Used by the `verify` subcommand.

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cluster::{endo_degree_check, maximal_rigid_sets};
use crate::graded::{self, GradedIndec};
use crate::homology::{ext1_dim, ext1_table, omega, stable_hom, tau, tau_inv, nu};
use crate::oracle::{self, hom as ohom, linalg::Field};
use crate::order::{graded_dim, s_bracket_n};
use crate::polygon::{PolygonCtx, TaggedEdge};
use crate::quiver::{build_ice_qp, check_potential_homogeneous};
use crate::triangulation::{enumerate_all, exchange_graph, TaggedTriangulation};

/// Outcome of one check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: String,
    pub n: usize,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub pass: bool,
    pub checks: Vec<Check>,
}

/// Knobs shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub t: i64,
    pub primes: &'static [u64],
    pub seed: u64,
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { t: oracle::DEFAULT_T, primes: &oracle::linalg::PRIMES, seed: 0, samples: 100 }
    }
}

pub const SUITES: [&str; 13] = [
    "census",
    "enumeration",
    "exchange",
    "potential",
    "min-path",
    "hom-oracle",
    "stable-oracle",
    "crossing",
    "calabi-yau",
    "translation",
    "cluster",
    "s-bracket",
    "graded",
];

/// Values of `n` a suite runs on when none is given.
pub fn default_range(suite: &str) -> Vec<usize> {
    match suite {
        "census" | "crossing" | "calabi-yau" | "translation" | "s-bracket" => (3..=8).collect(),
        "potential" => (3..=8).collect(),
        "enumeration" | "exchange" | "cluster" => (3..=6).collect(),
        "min-path" | "graded" => (3..=5).collect(),
        "hom-oracle" => (3..=5).collect(),
        "stable-oracle" => (3..=4).collect(),
        _ => vec![],
    }
}

fn check(suite: &str, n: usize, pass: bool, detail: Value) -> Check {
    Check { suite: suite.to_string(), n, pass, detail }
}

fn pairs(edges: &[TaggedEdge]) -> Vec<(TaggedEdge, TaggedEdge)> {
    edges.iter().flat_map(|a| edges.iter().map(move |b| (*a, *b))).collect()
}

pub fn census(ctx: &PolygonCtx) -> Check {
    let n = ctx.n();
    let count = ctx.all_edges().len();
    check("census", n, count == n * n + n, json!({ "edges": count, "expected": n * n + n }))
}

pub fn enumeration(ctx: &PolygonCtx) -> crate::Result<Check> {
    let mut tris: Vec<Vec<usize>> = enumerate_all(ctx)?
        .iter()
        .map(|t| {
            let mut k: Vec<usize> = t.arcs().iter().map(|e| ctx.edge_index(e)).collect();
            k.sort_unstable();
            k
        })
        .collect();
    let mut cliques: Vec<Vec<usize>> = oracle::maximal_compatible_sets(ctx)
        .iter()
        .map(|s| {
            let mut k: Vec<usize> = s.iter().map(|e| ctx.edge_index(e)).collect();
            k.sort_unstable();
            k
        })
        .collect();
    tris.sort();
    cliques.sort();
    Ok(check(
        "enumeration",
        ctx.n(),
        tris == cliques,
        json!({ "triangulations": tris.len(), "oracle": cliques.len() }),
    ))
}

pub fn exchange(ctx: &PolygonCtx) -> crate::Result<Check> {
    let n = ctx.n();
    let g = exchange_graph(ctx)?;
    let regular = (0..g.triangulations.len()).all(|v| g.degree(v) == n);
    let involution = g.triangulations.iter().all(|t| {
        t.arcs().iter().all(|a| match t.flip(a) {
            Ok((t2, added)) => added != *a && t2 != *t && t2.flip(&added).map(|(back, _)| back == *t).unwrap_or(false),
            Err(_) => false,
        })
    });
    let connected = g.is_connected();
    Ok(check(
        "exchange",
        n,
        regular && involution && connected,
        json!({ "vertices": g.triangulations.len(), "connected": connected, "regular": regular, "involution": involution }),
    ))
}

/// All triangulations for `n ≤ 6`, otherwise a seeded sample.
pub fn triangulation_sample(ctx: &PolygonCtx, opts: &Options) -> crate::Result<Vec<TaggedTriangulation>> {
    let all = enumerate_all(ctx)?;
    if ctx.n() <= 6 {
        return Ok(all);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    Ok((0..opts.samples).map(|_| all.choose(&mut rng).expect("nonempty").clone()).collect())
}

pub fn potential(ctx: &PolygonCtx, opts: &Options) -> crate::Result<Check> {
    let tris = triangulation_sample(ctx, opts)?;
    let bad = tris.par_iter().filter(|t| !check_potential_homogeneous(&build_ice_qp(t))).count();
    Ok(check("potential", ctx.n(), bad == 0, json!({ "checked": tris.len(), "failures": bad, "seed": opts.seed })))
}

/// Shortest θ-paths between edges shared by a triangulation and its flip
/// agree.
pub fn min_path(ctx: &PolygonCtx) -> crate::Result<Check> {
    let tris = enumerate_all(ctx)?;
    let bad: usize = tris
        .par_iter()
        .map(|t| {
            let q = build_ice_qp(t);
            t.arcs()
                .iter()
                .map(|a| {
                    let (t2, _) = t.flip(a).expect("flip");
                    let q2 = build_ice_qp(&t2);
                    let common: Vec<&TaggedEdge> = q.vertices.iter().filter(|v| *v != a).collect();
                    let mut bad = 0;
                    for x in &common {
                        for y in &common {
                            let (i, j) = (q.vertex_index(x).unwrap(), q.vertex_index(y).unwrap());
                            let (i2, j2) = (q2.vertex_index(x).unwrap(), q2.vertex_index(y).unwrap());
                            if q.min_path_theta(i, j) != q2.min_path_theta(i2, j2) {
                                bad += 1;
                            }
                        }
                    }
                    bad
                })
                .sum::<usize>()
        })
        .sum();
    Ok(check("min-path", ctx.n(), bad == 0, json!({ "triangulations": tris.len(), "mismatches": bad })))
}

pub fn hom_oracle(ctx: &PolygonCtx, opts: &Options) -> crate::Result<Check> {
    let n = ctx.n();
    let deg_bound = (8 * n as i64 - 1).min(oracle::degree_limit(n, opts.t) - 1);
    let edges = ctx.all_edges();
    let mut per_prime = Vec::new();
    let mut pass = true;
    for &p in opts.primes {
        let results: Vec<crate::Result<usize>> = pairs(&edges)
            .par_iter()
            .map(|(a, b)| {
                let dims = oracle::oracle_hom_graded(ctx, a, b, opts.t, deg_bound, p)?;
                let h = crate::homology::hom_module(ctx, a, b);
                Ok(dims.iter().filter(|(&d, &k)| graded_dim(n, &h, d) != k).count())
            })
            .collect();
        let mut bad = 0;
        for r in results {
            bad += r?;
        }
        pass &= bad == 0;
        per_prime.push(json!({ "prime": p, "mismatches": bad }));
    }
    Ok(check(
        "hom-oracle",
        n,
        pass,
        json!({ "pairs": edges.len() * edges.len(), "degrees": deg_bound + 1, "t": opts.t, "primes": per_prime }),
    ))
}

pub fn stable_oracle(ctx: &PolygonCtx, opts: &Options) -> crate::Result<Check> {
    let n = ctx.n();
    let edges = ctx.all_edges();
    let mut per_prime = Vec::new();
    let mut pass = true;
    for &p in opts.primes {
        let results: Vec<crate::Result<(bool, bool)>> = pairs(&edges)
            .par_iter()
            .map(|(a, b)| {
                let o = oracle::oracle_stable_and_ext(ctx, a, b, opts.t, p)?;
                let s = stable_hom(ctx, a, b);
                let want: std::collections::BTreeMap<i64, usize> =
                    if s.epsilon > 0 { [(s.degree as i64, s.epsilon)].into() } else { Default::default() };
                Ok((o.stable == want, o.ext1 == ext1_dim(ctx, a, b)))
            })
            .collect();
        let (mut sbad, mut ebad) = (0, 0);
        for r in results {
            let (s, e) = r?;
            sbad += usize::from(!s);
            ebad += usize::from(!e);
        }
        pass &= sbad == 0 && ebad == 0;
        per_prime.push(json!({ "prime": p, "stable_mismatches": sbad, "ext_mismatches": ebad }));
    }
    Ok(check("stable-oracle", n, pass, json!({ "pairs": edges.len() * edges.len(), "primes": per_prime })))
}

pub fn crossing(ctx: &PolygonCtx) -> Check {
    let arcs = ctx.tagged_arcs();
    let bad = pairs(&arcs)
        .iter()
        .filter(|(a, b)| {
            let e = ext1_dim(ctx, a, b);
            e != ext1_table(ctx, a, b) || Ok(e) != ctx.crossing_number(a, b)
        })
        .count();
    check("crossing", ctx.n(), bad == 0, json!({ "pairs": arcs.len() * arcs.len(), "mismatches": bad }))
}

pub fn calabi_yau(ctx: &PolygonCtx) -> Check {
    let edges = ctx.all_edges();
    let bad = pairs(&edges).iter().filter(|(a, b)| ext1_dim(ctx, a, b) != ext1_dim(ctx, b, a)).count();
    check("calabi-yau", ctx.n(), bad == 0, json!({ "pairs": edges.len() * edges.len(), "asymmetric": bad }))
}

pub fn translation(ctx: &PolygonCtx) -> crate::Result<Check> {
    let n = ctx.n();
    let arcs = ctx.tagged_arcs();
    let mut bad = Vec::new();
    for a in &arcs {
        if tau(ctx, a)? != omega(ctx, &nu(ctx, a)?)? {
            bad.push(format!("tau != omega nu at {a}"));
        }
        let mut x = *a;
        for k in 1..=2 * n {
            x = tau(ctx, &x)?;
            if k == n {
                let flipped = a.is_puncture() && x == a.other_tag();
                let expect_flip = a.is_puncture() && n % 2 == 1;
                if (expect_flip && !flipped) || (!expect_flip && x != *a) {
                    bad.push(format!("tau^n at {a}"));
                }
            }
        }
        if x != *a {
            bad.push(format!("tau^2n at {a}"));
        }
        if ext1_dim(ctx, &tau_inv(ctx, a)?, a) != 1 {
            bad.push(format!("Ext(tau^-1 a, a) at {a}"));
        }
    }
    Ok(check("translation", n, bad.is_empty(), json!({ "arcs": arcs.len(), "failures": bad })))
}

pub fn cluster(ctx: &PolygonCtx) -> crate::Result<Check> {
    let tris = enumerate_all(ctx)?;
    let mut tri_sets: Vec<Vec<usize>> = tris
        .iter()
        .map(|t| {
            let mut k: Vec<usize> = t.arcs().iter().map(|e| ctx.edge_index(e)).collect();
            k.sort_unstable();
            k
        })
        .collect();
    tri_sets.sort();
    let mut rigid: Vec<Vec<usize>> =
        maximal_rigid_sets(ctx).iter().map(|s| s.iter().map(|e| ctx.edge_index(e)).collect()).collect();
    for r in rigid.iter_mut() {
        r.sort_unstable();
    }
    rigid.sort();
    let endo_bad = tris.par_iter().filter(|t| !endo_degree_check(t)).count();
    Ok(check(
        "cluster",
        ctx.n(),
        rigid == tri_sets && endo_bad == 0,
        json!({ "maximal_rigid": rigid.len(), "triangulations": tri_sets.len(), "endo_failures": endo_bad }),
    ))
}

pub fn s_bracket(ctx: &PolygonCtx) -> Check {
    let (_, ok) = s_bracket_n(ctx);
    check("s-bracket", ctx.n(), ok, json!({ "certificate": ok }))
}

/// Objects in `periods` consecutive periods starting at level `n + 3`.
fn graded_objects(ctx: &PolygonCtx, periods: i64) -> Vec<GradedIndec> {
    let n = ctx.n() as i64;
    (n + 3..n + 3 + periods * 2 * n).flat_map(|l| graded::objects_at_level(ctx, l)).collect()
}

/// `Σ_k dim Hom(x, y⟨k⟩)` arranged by degree against the descriptor of the
/// underlying ungraded Hom.
pub fn hom_window_matches(ctx: &PolygonCtx, x: &GradedIndec, y: &GradedIndec) -> crate::Result<bool> {
    let n = ctx.n();
    let desc = crate::homology::hom_module(ctx, &graded::forget(ctx, x), &graded::forget(ctx, y));
    let dims: Vec<usize> = (-3..=3)
        .map(|k| graded::graded_hom_dim_window(ctx, x, &graded::shift(ctx, y, k), 8))
        .collect::<crate::Result<_>>()?;
    Ok(match (desc.is_zero(), dims.iter().position(|&d| d > 0)) {
        (true, None) => true,
        (false, Some(m0)) => (m0..dims.len())
            .all(|k| dims[k] == graded_dim(n, &desc, desc.degree + 2 * n as i64 * (k - m0) as i64)),
        _ => false,
    })
}

pub fn graded_suite(ctx: &PolygonCtx, opts: &Options) -> crate::Result<Check> {
    let n = ctx.n();
    let objs = graded_objects(ctx, 1);
    let mut detail = serde_json::Map::new();
    let mut pass = true;
    if n <= 4 {
        let field = Field::new(opts.primes[0]);
        let top = 2 * n as i64 * opts.t;
        let bad = objs
            .par_iter()
            .filter(|x| !x.is_projective() && !ohom::graded_omega_oracle(ctx, x, top, &field))
            .count();
        pass &= bad == 0;
        detail.insert("omega_mismatches".into(), json!(bad));
    }
    let mut hom_bad = 0;
    for x in &objs {
        for y in &objs {
            if !hom_window_matches(ctx, x, y)? {
                hom_bad += 1;
            }
        }
    }
    pass &= hom_bad == 0;
    detail.insert("hom_window_mismatches".into(), json!(hom_bad));
    let fan = TaggedTriangulation::fan(ctx, 1);
    let lift = graded::lift_triangulation(&fan, None)?;
    let tilting = graded::is_tilting_window(ctx, &lift, -4..=4);
    pass &= tilting;
    detail.insert("fan_lift".into(), json!(lift));
    detail.insert("fan_lift_tilting".into(), json!(tilting));
    let shape = graded::check_repetitive_d(ctx, 0, 3);
    let shape_ok = shape.dynkin_d && shape.orbits == n + 1 && shape.mesh_mismatches == 0;
    pass &= shape_ok;
    detail.insert("ar_shape".into(), json!(shape));
    Ok(check("graded", n, pass, Value::Object(detail)))
}

/// Run one suite for one `n`.
pub fn run_suite(suite: &str, n: usize, opts: &Options) -> crate::Result<Check> {
    let ctx = PolygonCtx::new(n)?;
    match suite {
        "census" => Ok(census(&ctx)),
        "enumeration" => enumeration(&ctx),
        "exchange" => exchange(&ctx),
        "potential" => potential(&ctx, opts),
        "min-path" => min_path(&ctx),
        "hom-oracle" => hom_oracle(&ctx, opts),
        "stable-oracle" => stable_oracle(&ctx, opts),
        "crossing" => Ok(crossing(&ctx)),
        "calabi-yau" => Ok(calabi_yau(&ctx)),
        "translation" => translation(&ctx),
        "cluster" => cluster(&ctx),
        "s-bracket" => Ok(s_bracket(&ctx)),
        "graded" => graded_suite(&ctx, opts),
        other => Err(crate::Error::Parse(format!("unknown suite {other}"))),
    }
}

/// Run the named suites (or all of them) on the given `n`, or on each
/// suite's default range. Checks are ordered by suite name, then `n`.
pub fn run(suites: &[&str], n: Option<usize>, opts: &Options) -> crate::Result<Report> {
    let mut jobs: Vec<(&str, usize)> = Vec::new();
    for s in suites {
        let ns = match n {
            Some(n) => vec![n],
            None => default_range(s),
        };
        jobs.extend(ns.into_iter().map(|n| (*s, n)));
    }
    jobs.sort();
    let results: Vec<crate::Result<Check>> = jobs.par_iter().map(|(s, n)| run_suite(s, *n, opts)).collect();
    let checks = results.into_iter().collect::<crate::Result<Vec<_>>>()?;
    Ok(Report { pass: checks.iter().all(|c| c.pass), checks })
}
