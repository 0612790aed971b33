//! Edges of a once-punctured hexagon, their θ-lengths from the first side,
//! and crossing numbers against one fixed arc.

use ppoly::PolygonCtx;

fn main() -> ppoly::Result<()> {
    let ctx = PolygonCtx::new(6)?;
    let edges = ctx.all_edges();
    println!("n = 6 has {} edges (n² + n = {})", edges.len(), 36 + 6);
    let s1 = ctx.side(1);
    for e in &edges {
        println!("{e:>8}  θ-length from side 1: {:>2}", ctx.theta_length(&s1, e));
    }
    let probe = ctx.edge(2, 5)?;
    println!("\ncrossings with {probe}:");
    for a in ctx.tagged_arcs() {
        let c = ctx.crossing_number(&probe, &a)?;
        if c > 0 {
            println!("  {a} crosses {c} time(s)");
        }
    }
    Ok(())
}
