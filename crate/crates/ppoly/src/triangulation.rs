//! Tagged triangulations, their enumeration, flips and the exchange graph.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygon::{PolygonCtx, TaggedEdge};

/// Largest `n` accepted by the exhaustive routines.
pub const DEFAULT_BOUND: usize = 8;

/// A maximal set of pairwise compatible tagged arcs. Sides are implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedTriangulation {
    ctx: PolygonCtx,
    arcs: Vec<TaggedEdge>,
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    n: usize,
    arcs: Vec<TaggedEdge>,
}

impl Serialize for TaggedTriangulation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TriangulationJson { n: self.ctx.n(), arcs: self.arcs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TaggedTriangulation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TriangulationJson::deserialize(d)?;
        let ctx = PolygonCtx::new(j.n).map_err(serde::de::Error::custom)?;
        TaggedTriangulation::validate(&ctx, &j.arcs).map_err(serde::de::Error::custom)
    }
}

impl TaggedTriangulation {
    /// Check compatibility and maximality, then canonicalize.
    pub fn validate(ctx: &PolygonCtx, arcs: &[TaggedEdge]) -> Result<Self> {
        let mut checked = Vec::with_capacity(arcs.len());
        for a in arcs {
            let a = ctx.check_edge(*a)?;
            if a.is_side() {
                return Err(Error::SideNotAllowed(a));
            }
            if checked.contains(&a) {
                return Err(Error::Duplicate(a));
            }
            checked.push(a);
        }
        for (i, a) in checked.iter().enumerate() {
            for b in &checked[i + 1..] {
                if !ctx.is_compatible(a, b) {
                    return Err(Error::Incompatible(*a, *b));
                }
            }
        }
        for e in ctx.tagged_arcs() {
            if !checked.contains(&e) && checked.iter().all(|a| ctx.is_compatible(a, &e)) {
                return Err(Error::NotMaximal(e));
            }
        }
        checked.sort_by_key(|e| ctx.edge_index(e));
        Ok(TaggedTriangulation { ctx: *ctx, arcs: checked })
    }

    pub(crate) fn from_sorted_unchecked(ctx: PolygonCtx, arcs: Vec<TaggedEdge>) -> Self {
        TaggedTriangulation { ctx, arcs }
    }

    pub fn ctx(&self) -> &PolygonCtx {
        &self.ctx
    }

    /// The tagged arcs in canonical order.
    pub fn arcs(&self) -> &[TaggedEdge] {
        &self.arcs
    }

    /// Sides followed by arcs.
    pub fn edges(&self) -> Vec<TaggedEdge> {
        let mut v = self.ctx.sides();
        v.extend_from_slice(&self.arcs);
        v
    }

    pub fn contains(&self, e: &TaggedEdge) -> bool {
        e.is_side() || self.arcs.contains(e)
    }

    /// The fan at vertex `v` with both tags at the puncture:
    /// `(v,v+2), ..., (v,v-1), (v,*), (v,⋈)`.
    pub fn fan(ctx: &PolygonCtx, v: usize) -> Self {
        let n = ctx.n() as i64;
        let mut arcs: Vec<TaggedEdge> =
            (2..n).map(|k| ctx.edge(v as i64, v as i64 + k).expect("winding arc")).collect();
        arcs.push(TaggedEdge::plain(v));
        arcs.push(TaggedEdge::notched(v));
        Self::validate(ctx, &arcs).expect("fan is a triangulation")
    }

    /// All arcs to the puncture with the plain tag.
    pub fn plain_star(ctx: &PolygonCtx) -> Self {
        let arcs: Vec<_> = (1..=ctx.n()).map(TaggedEdge::plain).collect();
        Self::validate(ctx, &arcs).expect("plain star is a triangulation")
    }

    /// Replace `arc` by the unique other arc completing a triangulation.
    pub fn flip(&self, arc: &TaggedEdge) -> Result<(TaggedTriangulation, TaggedEdge)> {
        if !self.arcs.contains(arc) {
            return Err(Error::NotInTriangulation(*arc));
        }
        let rest: Vec<TaggedEdge> = self.arcs.iter().copied().filter(|a| a != arc).collect();
        let mut found = None;
        for e in self.ctx.tagged_arcs() {
            if e == *arc || rest.contains(&e) {
                continue;
            }
            if rest.iter().all(|a| self.ctx.is_compatible(a, &e)) {
                if found.is_some() {
                    return Err(Error::NonUniqueReplacement(*arc));
                }
                found = Some(e);
            }
        }
        let e = found.ok_or(Error::NoReplacement(*arc))?;
        let mut arcs = rest;
        arcs.push(e);
        Ok((Self::validate(&self.ctx, &arcs)?, e))
    }

    /// Tag pattern of the arcs at the puncture.
    pub fn puncture_pattern(&self) -> PuncturePattern {
        let punct: Vec<&TaggedEdge> = self.arcs.iter().filter(|a| a.is_puncture()).collect();
        let plain = punct.iter().filter(|a| a.kind == crate::polygon::EdgeKind::Plain).count();
        let notched = punct.len() - plain;
        match (plain, notched) {
            (_, 0) => PuncturePattern::AllPlain(plain),
            (0, _) => PuncturePattern::AllNotched(notched),
            (1, 1) if punct[0].a1 == punct[1].a1 => PuncturePattern::BothTags(punct[0].a1),
            _ => PuncturePattern::Other,
        }
    }

    /// Whether some arc of the triangulation ends at vertex `v`.
    pub fn has_arc_at(&self, v: usize) -> bool {
        self.arcs.iter().any(|a| a.a1 == v || a.a2 == v)
    }
}

/// How the puncture is met by a triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PuncturePattern {
    AllPlain(usize),
    AllNotched(usize),
    /// One plain and one notched arc at the given vertex.
    BothTags(usize),
    Other,
}

fn check_bound(n: usize) -> Result<()> {
    if n > DEFAULT_BOUND {
        Err(Error::BoundExceeded { n, bound: DEFAULT_BOUND })
    } else {
        Ok(())
    }
}

/// Every tagged triangulation, in lexicographic order of the canonical arc
/// sequence.
pub fn enumerate_all(ctx: &PolygonCtx) -> Result<Vec<TaggedTriangulation>> {
    check_bound(ctx.n())?;
    let arcs = ctx.tagged_arcs();
    let m = arcs.len();
    debug_assert!(m <= 64);
    let mut incompat = vec![0u64; m];
    for i in 0..m {
        for j in 0..m {
            if !ctx.is_compatible(&arcs[i], &arcs[j]) {
                incompat[i] |= 1 << j;
            }
        }
    }
    let mut found = Vec::new();
    let mut search = Search { m, incompat: &incompat, found: &mut found };
    search.run(0, 0, 0);
    let mut out: Vec<TaggedTriangulation> = found
        .into_iter()
        .map(|mask| {
            let chosen = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| arcs[i]).collect();
            TaggedTriangulation::from_sorted_unchecked(*ctx, chosen)
        })
        .collect();
    out.sort_by(|a, b| {
        let ka: Vec<usize> = a.arcs.iter().map(|e| ctx.edge_index(e)).collect();
        let kb: Vec<usize> = b.arcs.iter().map(|e| ctx.edge_index(e)).collect();
        ka.cmp(&kb)
    });
    Ok(out)
}

struct Search<'a> {
    m: usize,
    incompat: &'a [u64],
    found: &'a mut Vec<u64>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, chosen: u64, excluded: u64) {
        let future = if k >= 64 { 0 } else { !0u64 << k } & self.mask();
        // Arcs still addable later: undecided and compatible with the choice.
        let blocked = chosen.iter_incompat(self.incompat);
        let open = future & !blocked;
        let mut ex = excluded;
        while ex != 0 {
            let e = ex.trailing_zeros() as usize;
            ex &= ex - 1;
            if self.incompat[e] & (chosen | open) == 0 {
                return;
            }
        }
        if k == self.m {
            self.found.push(chosen);
            return;
        }
        if (blocked >> k) & 1 == 0 {
            self.run(k + 1, chosen | 1 << k, excluded);
        }
        let excluded = if (blocked >> k) & 1 == 0 { excluded | 1 << k } else { excluded };
        self.run(k + 1, chosen, excluded);
    }

    fn mask(&self) -> u64 {
        if self.m == 64 {
            !0
        } else {
            (1u64 << self.m) - 1
        }
    }
}

trait IncompatUnion {
    fn iter_incompat(self, table: &[u64]) -> u64;
}

impl IncompatUnion for u64 {
    fn iter_incompat(self, table: &[u64]) -> u64 {
        let mut acc = 0;
        let mut s = self;
        while s != 0 {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            acc |= table[i];
        }
        acc
    }
}

/// Vertices are triangulations, edges are flips.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    pub triangulations: Vec<TaggedTriangulation>,
    /// `(i, j, removed, added)` with `i < j`.
    pub edges: Vec<(usize, usize, TaggedEdge, TaggedEdge)>,
}

impl ExchangeGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(i, j, _, _)| *i == v || *j == v).count()
    }

    pub fn is_connected(&self) -> bool {
        let mut g = petgraph::graph::UnGraph::<(), ()>::new_undirected();
        let nodes: Vec<_> = self.triangulations.iter().map(|_| g.add_node(())).collect();
        for (i, j, _, _) in &self.edges {
            g.add_edge(nodes[*i], nodes[*j], ());
        }
        petgraph::algo::connected_components(&g) == 1
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph exchange {\n");
        for (k, t) in self.triangulations.iter().enumerate() {
            let label: Vec<String> = t.arcs().iter().map(|e| e.to_string()).collect();
            s.push_str(&format!("  t{k} [label=\"{}\"];\n", label.join(" ")));
        }
        for (i, j, r, a) in &self.edges {
            s.push_str(&format!("  t{i} -- t{j} [label=\"{r}/{a}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Flip graph on [`enumerate_all`].
pub fn exchange_graph(ctx: &PolygonCtx) -> Result<ExchangeGraph> {
    let triangulations = enumerate_all(ctx)?;
    let index: HashMap<&TaggedTriangulation, usize> =
        triangulations.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut edges = Vec::new();
    for (i, t) in triangulations.iter().enumerate() {
        for a in t.arcs() {
            let (t2, added) = t.flip(a)?;
            let j = index[&t2];
            if i < j {
                edges.push((i, j, *a, added));
            }
        }
    }
    Ok(ExchangeGraph { triangulations, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_is_valid_and_minus_one_is_not() {
        let c = PolygonCtx::new(5).unwrap();
        let f = TaggedTriangulation::fan(&c, 1);
        assert_eq!(f.arcs().len(), 5);
        let fewer = &f.arcs()[1..];
        assert!(matches!(TaggedTriangulation::validate(&c, fewer), Err(Error::NotMaximal(_))));
        let bad = [TaggedEdge::plain(1), TaggedEdge::notched(3)];
        assert!(matches!(TaggedTriangulation::validate(&c, &bad), Err(Error::Incompatible(_, _))));
        let dup = [TaggedEdge::plain(1), TaggedEdge::plain(1)];
        assert!(matches!(TaggedTriangulation::validate(&c, &dup), Err(Error::Duplicate(_))));
    }

    #[test]
    fn small_counts() {
        for (n, count) in [(3, 14), (4, 50)] {
            let c = PolygonCtx::new(n).unwrap();
            assert_eq!(enumerate_all(&c).unwrap().len(), count);
        }
    }

    #[test]
    fn bound() {
        let c = PolygonCtx::new(9).unwrap();
        assert!(matches!(enumerate_all(&c), Err(Error::BoundExceeded { .. })));
    }
}
