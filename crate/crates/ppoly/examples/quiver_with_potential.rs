//! The ice quiver with potential of a triangulation: arrows with their
//! θ-weights, the potential, and the homogeneity of every term.

use ppoly::quiver::{build_ice_qp, check_potential_homogeneous};
use ppoly::{PolygonCtx, TaggedTriangulation};

fn main() -> ppoly::Result<()> {
    let ctx = PolygonCtx::new(5)?;
    let tri = TaggedTriangulation::plain_star(&ctx);
    let qp = build_ice_qp(&tri);
    println!("vertices:");
    for (k, v) in qp.vertices.iter().enumerate() {
        let tag = if qp.frozen.contains(&k) { " (frozen)" } else { "" };
        println!("  {k}: {v}{tag}");
    }
    println!("arrows:");
    for a in &qp.arrows {
        println!("  {} -> {}  θ = {}", qp.vertices[a.source], qp.vertices[a.target], a.theta);
    }
    println!("potential has {} terms, each of θ-weight 2n = 10: {}", qp.potential.len(), check_potential_homogeneous(&qp));
    println!("\n{}", qp.to_dot());
    Ok(())
}
