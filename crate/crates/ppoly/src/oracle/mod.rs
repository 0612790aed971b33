//! Brute-force cross-checks.
//!
//! * [`cover`]: crossing numbers from the universal cover.
//! * [`module`], [`hom`]: concrete truncated Λ-modules over `F_p` and the
//!   linear algebra for Hom, stable Hom, Ext¹ and syzygies.
//! * [`oracle_enumerate_maximal_compatible`]: maximal cliques of the
//!   compatibility graph.

pub mod cover;
pub mod hom;
pub mod linalg;
pub mod module;
pub mod ring;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{PolygonCtx, TaggedEdge};
use linalg::Field;
use module::{column_ideals, ideal_module};

/// Default truncation order.
pub const DEFAULT_T: i64 = 6;

/// Largest admissible degree bound is `2n(t - 2) - 1`.
pub fn degree_limit(n: usize, t: i64) -> i64 {
    2 * n as i64 * (t - 2)
}

fn cut_off(n: usize, t: i64) -> i64 {
    2 * n as i64 * t
}

fn check_bound(n: usize, t: i64, deg_bound: i64) -> Result<()> {
    let limit = degree_limit(n, t);
    if deg_bound >= limit || deg_bound < 0 {
        return Err(Error::DegreeBound { bound: deg_bound, limit });
    }
    Ok(())
}

/// `d ↦ dim Hom_d(M_a, M_b)` for `0 ≤ d ≤ deg_bound`, truncated at
/// `X^t = 0`.
pub fn oracle_hom_graded(
    ctx: &PolygonCtx,
    a: &TaggedEdge,
    b: &TaggedEdge,
    t: i64,
    deg_bound: i64,
    prime: u64,
) -> Result<BTreeMap<i64, usize>> {
    check_bound(ctx.n(), t, deg_bound)?;
    let field = Field::new(prime);
    let top = cut_off(ctx.n(), t);
    let ma = ideal_module(ctx, a, top, &field);
    let mb = ideal_module(ctx, b, top, &field);
    Ok((0..=deg_bound).map(|d| (d, hom::hom_space(&field, &ma.rep, &mb.rep, d).len())).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableExt {
    /// Nonzero stable Hom dimensions by degree.
    pub stable: BTreeMap<i64, usize>,
    /// Total `dim Ext¹(M_a, M_b)` over all degrees.
    pub ext1: usize,
}

/// Stable Hom in degrees `0..2n(t-2)` and the total Ext¹, from projective
/// covers.
pub fn oracle_stable_and_ext(ctx: &PolygonCtx, a: &TaggedEdge, b: &TaggedEdge, t: i64, prime: u64) -> Result<StableExt> {
    let n = ctx.n();
    let limit = degree_limit(n, t);
    check_bound(n, t, limit - 1)?;
    let field = Field::new(prime);
    let top = cut_off(n, t);
    let ma = ideal_module(ctx, a, top, &field);
    let mb = ideal_module(ctx, b, top, &field);
    let cover_a = hom::projective_cover(ctx, &ma.rep, &field);
    let cover_b = hom::projective_cover(ctx, &mb.rep, &field);
    let stable = (0..limit)
        .map(|d| (d, hom::stable_hom_dim(&field, &ma.rep, &mb.rep, &cover_b, d)))
        .filter(|&(_, k)| k > 0)
        .collect();
    let ext1 = (-4 * n as i64..limit).map(|d| hom::ext1_dim_at(&field, &cover_a, &mb.rep, d)).sum();
    Ok(StableExt { stable, ext1 })
}

/// Generator relations checked on `M_a` for every edge; returns the number
/// of failing instances.
pub fn relation_failures(ctx: &PolygonCtx, t: i64, prime: u64) -> usize {
    let field = Field::new(prime);
    ctx.all_edges()
        .iter()
        .map(|a| module::check_relations(&ideal_module(ctx, a, cut_off(ctx.n(), t), &field), &field))
        .sum()
}

/// Whether the hard-coded ideal columns agree with the ones obtained by
/// normalizing the descriptor columns.
pub fn columns_agree(ctx: &PolygonCtx) -> bool {
    ctx.all_edges().iter().all(|a| {
        let ours: Vec<_> = column_ideals(ctx, a).into_iter().map(|c| c.as_ideal()).collect();
        ours == crate::order::normalize_column(ctx, &crate::order::module_column(ctx, a))
    })
}

/// All maximal sets of pairwise compatible tagged arcs, found as maximal
/// cliques of the compatibility graph.
pub fn maximal_compatible_sets(ctx: &PolygonCtx) -> Vec<Vec<TaggedEdge>> {
    use petgraph::graph::UnGraph;
    let arcs = ctx.tagged_arcs();
    let mut g = UnGraph::<usize, ()>::new_undirected();
    let nodes: Vec<_> = (0..arcs.len()).map(|k| g.add_node(k)).collect();
    for x in 0..arcs.len() {
        for y in x + 1..arcs.len() {
            if ctx.is_compatible(&arcs[x], &arcs[y]) {
                g.add_edge(nodes[x], nodes[y], ());
            }
        }
    }
    petgraph::algo::maximal_cliques(&g)
        .into_iter()
        .map(|c| {
            let mut idx: Vec<usize> = c.into_iter().map(|v| g[v]).collect();
            idx.sort_unstable();
            idx.into_iter().map(|k| arcs[k]).collect()
        })
        .collect()
}

pub fn oracle_enumerate_maximal_compatible(ctx: &PolygonCtx) -> usize {
    maximal_compatible_sets(ctx).len()
}
