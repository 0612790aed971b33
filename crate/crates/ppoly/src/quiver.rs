//! Ice quivers with potential attached to a tagged triangulation.
//!
//! The vertices are the edges of the triangulation (sides are frozen). At a
//! boundary vertex `P_v` the incident edges are ordered counter-clockwise by
//! an integer key: `d(v,w)` for an edge leaving towards `P_w`, `n` for an arc
//! to the puncture and `2n - d(w,v)` for an edge arriving from `P_w`. An
//! internal arrow goes from an edge to its counter-clockwise successor
//! inside a common triangle.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::polygon::{EdgeKind, PolygonCtx, TaggedEdge};
use crate::triangulation::{PuncturePattern, TaggedTriangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    Internal,
    External,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub kind: ArrowKind,
    pub theta: usize,
}

/// A signed cycle of the potential; `cycle` lists arrow indices in path
/// order, rotated so that the sequence is lexicographically least.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub sign: i8,
    pub cycle: Vec<usize>,
}

impl Term {
    fn new(sign: i8, mut cycle: Vec<usize>) -> Self {
        let best = (0..cycle.len())
            .min_by_key(|&r| {
                let mut c = cycle.clone();
                c.rotate_left(r);
                c
            })
            .unwrap_or(0);
        cycle.rotate_left(best);
        Term { sign, cycle }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IceQuiverWithPotential {
    #[serde(skip)]
    pub n: usize,
    pub vertices: Vec<TaggedEdge>,
    pub arrows: Vec<Arrow>,
    pub potential: Vec<Term>,
    pub frozen: Vec<usize>,
}

/// Counter-clockwise position of edge `e` around boundary vertex `v`.
fn key_at(ctx: &PolygonCtx, v: usize, e: &TaggedEdge) -> usize {
    let n = ctx.n();
    if e.is_puncture() {
        n
    } else if e.a1 == v {
        ctx.d(v, e.a2)
    } else {
        2 * n - ctx.d(e.a1, v)
    }
}

struct Builder<'a> {
    ctx: &'a PolygonCtx,
    vertices: Vec<TaggedEdge>,
    index: HashMap<TaggedEdge, usize>,
    arrows: Vec<Arrow>,
    terms: Vec<Term>,
}

impl Builder<'_> {
    fn arrow(&mut self, s: &TaggedEdge, t: &TaggedEdge, kind: ArrowKind) -> usize {
        let (si, ti) = (self.index[s], self.index[t]);
        let theta = self.ctx.theta_length(s, t);
        self.arrows.push(Arrow { source: si, target: ti, kind, theta });
        self.arrows.len() - 1
    }

    fn find(&self, s: &TaggedEdge, t: &TaggedEdge) -> usize {
        let (si, ti) = (self.index[s], self.index[t]);
        self.arrows
            .iter()
            .position(|a| a.source == si && a.target == ti && a.kind == ArrowKind::Internal)
            .unwrap_or_else(|| panic!("missing internal arrow {s} -> {t}"))
    }
}

/// The full quiver `Q'` with potential `W'`: every boundary vertex carries
/// an external arrow.
pub fn build_full_qp(tri: &TaggedTriangulation) -> IceQuiverWithPotential {
    let ctx = tri.ctx();
    let n = ctx.n();
    let vertices = tri.edges();
    let index = vertices.iter().enumerate().map(|(k, e)| (*e, k)).collect();
    let mut b = Builder { ctx, vertices: vertices.clone(), index, arrows: vec![], terms: vec![] };
    let untagged: Vec<TaggedEdge> = vertices.iter().copied().filter(|e| e.is_untagged()).collect();

    // Triangles avoiding the puncture: (x,y), (y,z), (x,z).
    for e1 in &untagged {
        for e2 in &untagged {
            if e1.a2 != e2.a1 {
                continue;
            }
            let (x, y, z) = (e1.a1, e1.a2, e2.a2);
            if ctx.d(x, y) + ctx.d(y, z) >= n {
                continue;
            }
            let e3 = ctx.edge(x as i64, z as i64).expect("distinct endpoints");
            if !tri.contains(&e3) {
                continue;
            }
            let p = b.arrow(e1, &e3, ArrowKind::Internal);
            let q = b.arrow(&e3, e2, ArrowKind::Internal);
            let r = b.arrow(e2, e1, ArrowKind::Internal);
            b.terms.push(Term::new(1, vec![p, q, r]));
        }
    }

    let punct: Vec<TaggedEdge> = tri.arcs().iter().copied().filter(|e| e.is_puncture()).collect();
    let mut preferred_at_puncture = None;
    match tri.puncture_pattern() {
        PuncturePattern::BothTags(k) => {
            let i = TaggedEdge::plain(k);
            let j = TaggedEdge::notched(k);
            preferred_at_puncture = Some((k, i));
            let m = (1..=n)
                .find(|&m| {
                    m != k
                        && tri.contains(&ctx.edge(k as i64, m as i64).unwrap())
                        && tri.contains(&ctx.edge(m as i64, k as i64).unwrap())
                })
                .expect("the puncture sits in a digon");
            let eb = ctx.edge(k as i64, m as i64).unwrap();
            let ea = ctx.edge(m as i64, k as i64).unwrap();
            let eta = b.arrow(&ea, &eb, ArrowKind::Internal);
            let alpha = b.arrow(&eb, &j, ArrowKind::Internal);
            let beta = b.arrow(&j, &ea, ArrowKind::Internal);
            let gamma = b.arrow(&eb, &i, ArrowKind::Internal);
            let delta = b.arrow(&i, &ea, ArrowKind::Internal);
            b.terms.push(Term::new(1, vec![eta, alpha, beta]));
            b.terms.push(Term::new(1, vec![eta, gamma, delta]));
        }
        PuncturePattern::AllPlain(_) | PuncturePattern::AllNotched(_) => {
            let r = punct.len();
            assert!(r >= 2, "a single arc at the puncture cannot occur");
            let mut cycle = Vec::with_capacity(r);
            for t in 0..r {
                let (pp, pq) = (punct[t], punct[(t + 1) % r]);
                let base = ctx.edge(pp.a1 as i64, pq.a1 as i64).expect("distinct vertices");
                assert!(tri.contains(&base), "missing base {base} of a punctured triangle");
                let x = b.arrow(&base, &pp, ArrowKind::Internal);
                let y = b.arrow(&pp, &pq, ArrowKind::Internal);
                let z = b.arrow(&pq, &base, ArrowKind::Internal);
                b.terms.push(Term::new(1, vec![x, y, z]));
                cycle.push(y);
            }
            b.terms.push(Term::new(-1, cycle));
        }
        PuncturePattern::Other => panic!("unexpected tag pattern at the puncture"),
    }

    // External arrows and the cycles around each boundary vertex.
    for v in 1..=n {
        let prev = ctx.side(v + n - 1);
        let next = ctx.side(v);
        let ext = b.arrow(&prev, &next, ArrowKind::External);
        let mut around: BTreeMap<usize, TaggedEdge> = BTreeMap::new();
        for e in &vertices {
            let incident = if e.is_puncture() { e.a1 == v } else { e.a1 == v || e.a2 == v };
            if !incident {
                continue;
            }
            let key = key_at(ctx, v, e);
            match preferred_at_puncture {
                Some((k, keep)) if k == v && e.is_puncture() => {
                    around.insert(key, keep);
                }
                _ => {
                    let old = around.insert(key, *e);
                    assert!(old.is_none(), "two edges in the same direction at {v}");
                }
            }
        }
        let seq: Vec<TaggedEdge> = around.into_values().collect();
        let mut cycle = vec![ext];
        for w in seq.windows(2) {
            cycle.push(b.find(&w[0], &w[1]));
        }
        b.terms.push(Term::new(-1, cycle));
    }

    let frozen = (0..n).collect();
    IceQuiverWithPotential { n, vertices: b.vertices, arrows: b.arrows, potential: b.terms, frozen }
}

/// `Q` and `W`: drop the external arrows at vertices that no arc reaches,
/// together with the potential terms through them.
pub fn build_ice_qp(tri: &TaggedTriangulation) -> IceQuiverWithPotential {
    let full = build_full_qp(tri);
    let ctx = tri.ctx();
    let n = ctx.n();
    let removed: Vec<bool> = full
        .arrows
        .iter()
        .map(|a| {
            a.kind == ArrowKind::External && {
                // An external arrow s_{v-1} -> s_v sits at vertex v.
                let v = full.vertices[a.target].a1;
                !tri.has_arc_at(v)
            }
        })
        .collect();
    let mut remap = vec![usize::MAX; full.arrows.len()];
    let mut arrows = Vec::new();
    for (k, a) in full.arrows.iter().enumerate() {
        if !removed[k] {
            remap[k] = arrows.len();
            arrows.push(a.clone());
        }
    }
    let potential = full
        .potential
        .iter()
        .filter(|t| t.cycle.iter().all(|&k| !removed[k]))
        .map(|t| Term::new(t.sign, t.cycle.iter().map(|&k| remap[k]).collect()))
        .collect();
    IceQuiverWithPotential { n, vertices: full.vertices, arrows, potential, frozen: full.frozen }
}

impl IceQuiverWithPotential {
    pub fn vertex_index(&self, e: &TaggedEdge) -> Option<usize> {
        self.vertices.iter().position(|v| v == e)
    }

    /// Total θ-length of a potential term.
    pub fn term_theta(&self, t: &Term) -> usize {
        t.cycle.iter().map(|&k| self.arrows[k].theta).sum()
    }

    /// Consecutive arrows of every term compose, and the last returns to
    /// the start.
    pub fn terms_are_cycles(&self) -> bool {
        self.potential.iter().all(|t| {
            let c = &t.cycle;
            (0..c.len()).all(|i| self.arrows[c[i]].target == self.arrows[c[(i + 1) % c.len()]].source)
        })
    }

    /// Shortest θ-weighted directed path length, `None` if unreachable.
    pub fn min_path_theta(&self, a: usize, b: usize) -> Option<usize> {
        let mut g = petgraph::graph::DiGraph::<(), usize>::new();
        let nodes: Vec<_> = self.vertices.iter().map(|_| g.add_node(())).collect();
        for ar in &self.arrows {
            g.add_edge(nodes[ar.source], nodes[ar.target], ar.theta);
        }
        let dist = petgraph::algo::dijkstra(&g, nodes[a], Some(nodes[b]), |e| *e.weight());
        dist.get(&nodes[b]).copied()
    }

    /// All shortest path lengths from `a`.
    pub fn min_path_from(&self, a: usize) -> Vec<Option<usize>> {
        let mut g = petgraph::graph::DiGraph::<(), usize>::new();
        let nodes: Vec<_> = self.vertices.iter().map(|_| g.add_node(())).collect();
        for ar in &self.arrows {
            g.add_edge(nodes[ar.source], nodes[ar.target], ar.theta);
        }
        let dist = petgraph::algo::dijkstra(&g, nodes[a], None, |e| *e.weight());
        nodes.iter().map(|v| dist.get(v).copied()).collect()
    }

    /// Signs of the potential terms containing each arrow, indexed by arrow.
    pub fn term_counts(&self) -> Vec<Vec<i8>> {
        let mut signs = vec![Vec::new(); self.arrows.len()];
        for t in &self.potential {
            for &k in &t.cycle {
                signs[k].push(t.sign);
            }
        }
        signs
    }

    /// Graphviz rendering; the potential goes into a comment block.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph qp {\n");
        s.push_str("  /* potential:\n");
        for t in &self.potential {
            let names: Vec<String> = t.cycle.iter().map(|k| format!("a{k}")).collect();
            s.push_str(&format!("     {} {}\n", if t.sign > 0 { '+' } else { '-' }, names.join(" ")));
        }
        s.push_str("  */\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let json = serde_json::to_string(v).expect("edge json").replace('"', "\\\"");
            let shape = if self.frozen.contains(&k) { "box" } else { "ellipse" };
            s.push_str(&format!("  v{k} [label=\"{json}\", shape={shape}];\n"));
        }
        for (k, a) in self.arrows.iter().enumerate() {
            let style = if a.kind == ArrowKind::External { ", style=dashed" } else { "" };
            s.push_str(&format!(
                "  v{} -> v{} [label=\"a{k} theta={}\"{style}];\n",
                a.source, a.target, a.theta
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// Every term has θ-length exactly `2n`.
pub fn check_potential_homogeneous(qp: &IceQuiverWithPotential) -> bool {
    qp.potential.iter().all(|t| qp.term_theta(t) == 2 * qp.n)
}

/// Underlying undirected graph on the non-frozen vertices.
pub fn mutable_part_edges(qp: &IceQuiverWithPotential) -> Vec<(usize, usize)> {
    qp.arrows
        .iter()
        .filter(|a| !qp.frozen.contains(&a.source) && !qp.frozen.contains(&a.target))
        .map(|a| (a.source, a.target))
        .collect()
}

/// Whether an edge kind is an arc to the puncture.
pub fn is_puncture_kind(k: EdgeKind) -> bool {
    matches!(k, EdgeKind::Plain | EdgeKind::Notched)
}
