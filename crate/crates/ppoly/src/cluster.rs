//! Cluster tilting objects `T_σ = ⊕ M_a` and their comparison with tagged
//! triangulations.

use std::collections::BTreeSet;

use petgraph::graph::UnGraph;
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::homology::{ext1_dim, hom_module};
use crate::polygon::{PolygonCtx, TaggedEdge};
use crate::quiver::{build_ice_qp, IceQuiverWithPotential};
use crate::triangulation::{enumerate_all, TaggedTriangulation};

fn arcs_only(cand: &[TaggedEdge]) -> Vec<TaggedEdge> {
    cand.iter().copied().filter(|e| !e.is_side()).collect()
}

fn rigid_with(ctx: &PolygonCtx, e: &TaggedEdge, set: &[TaggedEdge]) -> bool {
    set.iter().all(|x| ext1_dim(ctx, e, x) == 0 && ext1_dim(ctx, x, e) == 0)
}

/// Rigid and maximal among all tagged arcs. Sides in `cand` are ignored
/// (they are projective and always summands).
pub fn is_cluster_tilting(ctx: &PolygonCtx, cand: &[TaggedEdge]) -> bool {
    let set = arcs_only(cand);
    let distinct: BTreeSet<usize> = set.iter().map(|e| ctx.edge_index(e)).collect();
    if distinct.len() != set.len() {
        return false;
    }
    if !set.iter().all(|e| rigid_with(ctx, e, &set)) {
        return false;
    }
    ctx.tagged_arcs()
        .iter()
        .filter(|e| !set.contains(e))
        .all(|e| !rigid_with(ctx, e, &set))
}

/// Every maximal set of tagged arcs with pairwise vanishing Ext¹, each
/// sorted canonically, the list sorted lexicographically.
pub fn maximal_rigid_sets(ctx: &PolygonCtx) -> Vec<Vec<TaggedEdge>> {
    let arcs = ctx.tagged_arcs();
    let mut g = UnGraph::<usize, ()>::new_undirected();
    let nodes: Vec<_> = (0..arcs.len()).map(|k| g.add_node(k)).collect();
    for x in 0..arcs.len() {
        for y in x + 1..arcs.len() {
            if ext1_dim(ctx, &arcs[x], &arcs[y]) == 0 && ext1_dim(ctx, &arcs[y], &arcs[x]) == 0 {
                g.add_edge(nodes[x], nodes[y], ());
            }
        }
    }
    let mut out: Vec<Vec<TaggedEdge>> = petgraph::algo::maximal_cliques(&g)
        .into_iter()
        .map(|c| {
            let mut idx: Vec<usize> = c.into_iter().map(|v| g[v]).collect();
            idx.sort_unstable();
            idx.into_iter().map(|k| arcs[k]).collect()
        })
        .collect();
    out.sort_by_key(|s| s.iter().map(|e| ctx.edge_index(e)).collect::<Vec<_>>());
    out
}

/// Degrees of Hom between summands of `T_σ` against shortest θ-paths in
/// `Q_σ`.
pub fn endo_degree_check(tri: &TaggedTriangulation) -> bool {
    endo_degree_check_with(tri, &build_ice_qp(tri))
}

/// As [`endo_degree_check`] with a caller-supplied quiver, so that a
/// damaged quiver can be fed in.
///
/// For every ordered pair `(a, b)` of vertices: if `a`, `b` are puncture
/// arcs with different tags the Hom descriptor must be zero; otherwise `b`
/// must be reachable from `a` and the shortest path must have θ-length
/// equal to the degree of `Hom(M_a, M_b)`.
pub fn endo_degree_check_with(tri: &TaggedTriangulation, qp: &IceQuiverWithPotential) -> bool {
    let ctx = tri.ctx();
    (0..qp.vertices.len()).all(|s| {
        let dist = qp.min_path_from(s);
        let a = qp.vertices[s];
        qp.vertices.iter().zip(dist).all(|(b, d)| {
            let h = hom_module(ctx, &a, b);
            if a.tagged_differently(b) {
                h.is_zero()
            } else {
                !h.is_zero() && d == Some(h.degree as usize)
            }
        })
    })
}

/// For one triangulation and one of its arcs: the edges `e` such that
/// replacing the arc by `e` is again cluster tilting.
pub fn tilting_replacements(tri: &TaggedTriangulation, arc: &TaggedEdge) -> Vec<TaggedEdge> {
    let ctx = tri.ctx();
    let rest: Vec<TaggedEdge> = tri.arcs().iter().copied().filter(|e| e != arc).collect();
    ctx.tagged_arcs()
        .into_iter()
        .filter(|e| e != arc && !rest.contains(e) && rigid_with(ctx, e, &rest))
        .filter(|e| {
            let mut cand = rest.clone();
            cand.push(*e);
            is_cluster_tilting(ctx, &cand)
        })
        .collect()
}

fn move_agrees(tri: &TaggedTriangulation, arc: &TaggedEdge) -> bool {
    match tri.flip(arc) {
        Ok((_, added)) => tilting_replacements(tri, arc) == vec![added],
        Err(_) => false,
    }
}

/// Every flip is the unique summand exchange keeping cluster tilting.
pub fn exchange_vs_mutation(ctx: &PolygonCtx) -> crate::Result<bool> {
    let tris = enumerate_all(ctx)?;
    Ok(tris.iter().all(|t| t.arcs().iter().all(|a| move_agrees(t, a))))
}

/// Seeded sample of `samples` (triangulation, arc) moves.
pub fn exchange_vs_mutation_sampled(ctx: &PolygonCtx, samples: usize, seed: u64) -> crate::Result<bool> {
    let tris = enumerate_all(ctx)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..samples).all(|_| {
        let t = tris.choose(&mut rng).expect("nonempty");
        let a = t.arcs().choose(&mut rng).expect("n arcs");
        move_agrees(t, a)
    }))
}

/// Whether an undirected simple graph on `m` vertices is a Dynkin diagram
/// of type `D_m` (with `D_3 = A_3`).
pub fn is_dynkin_d(m: usize, edges: &[(usize, usize)]) -> bool {
    let mut und: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(x, y) in edges {
        if x == y || !und.insert((x.min(y), x.max(y))) {
            return false;
        }
    }
    if m < 3 || und.len() != m - 1 {
        return false;
    }
    let mut g = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..m).map(|_| g.add_node(())).collect();
    for &(x, y) in &und {
        g.add_edge(nodes[x], nodes[y], ());
    }
    if petgraph::algo::connected_components(&g) != 1 {
        return false;
    }
    let deg = |v| g.neighbors(nodes[v]).count();
    let branch: Vec<usize> = (0..m).filter(|&v| deg(v) >= 3).collect();
    match branch.as_slice() {
        [] => m == 3,
        [c] if deg(*c) == 3 => g.neighbors(nodes[*c]).filter(|w| g.neighbors(*w).count() == 1).count() >= 2,
        _ => false,
    }
}

/// Undirected simple graph of the mutable part of `Q_σ`, relabelled
/// `0..m`, together with `m`. Returns `None` if the mutable part has a
/// directed cycle or a repeated arrow.
pub fn mutable_dynkin_graph(qp: &IceQuiverWithPotential) -> Option<(usize, Vec<(usize, usize)>)> {
    let free: Vec<usize> = (0..qp.vertices.len()).filter(|v| !qp.frozen.contains(v)).collect();
    let pos = |v: usize| free.iter().position(|&w| w == v);
    let mut dg = petgraph::graph::DiGraph::<(), ()>::new();
    let nodes: Vec<_> = free.iter().map(|_| dg.add_node(())).collect();
    let mut edges = Vec::new();
    for (s, t) in crate::quiver::mutable_part_edges(qp) {
        let (s, t) = (pos(s)?, pos(t)?);
        dg.add_edge(nodes[s], nodes[t], ());
        edges.push((s, t));
    }
    if petgraph::algo::is_cyclic_directed(&dg) {
        return None;
    }
    Some((free.len(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dynkin_recognition() {
        assert!(is_dynkin_d(3, &[(0, 1), (1, 2)]));
        assert!(is_dynkin_d(4, &[(0, 1), (0, 2), (0, 3)]));
        assert!(is_dynkin_d(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]));
        assert!(!is_dynkin_d(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]));
        assert!(is_dynkin_d(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]));
        assert!(!is_dynkin_d(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]));
    }

    #[test]
    fn fan_is_tilting() {
        let c = PolygonCtx::new(4).unwrap();
        let fan = TaggedTriangulation::fan(&c, 1);
        assert!(is_cluster_tilting(&c, fan.arcs()));
        assert!(!is_cluster_tilting(&c, &fan.arcs()[1..]));
        assert!(endo_degree_check(&fan));
    }
}
