//! Enumerate tagged triangulations, flip every arc of the fan and build the
//! exchange graph.

use ppoly::triangulation::{enumerate_all, exchange_graph};
use ppoly::{PolygonCtx, TaggedTriangulation};

fn main() -> ppoly::Result<()> {
    for n in 3..=6 {
        let ctx = PolygonCtx::new(n)?;
        println!("n = {n}: {} tagged triangulations", enumerate_all(&ctx)?.len());
    }

    let ctx = PolygonCtx::new(4)?;
    let fan = TaggedTriangulation::fan(&ctx, 1);
    println!("\nfan at 1: {}", fan.arcs().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "));
    for a in fan.arcs() {
        let (t, added) = fan.flip(a)?;
        let (back, _) = t.flip(&added)?;
        println!("  flip {a} -> {added}; flipping back restores the fan: {}", back == fan);
    }

    let g = exchange_graph(&ctx)?;
    println!(
        "\nexchange graph for n = 4: {} vertices, {} edges, connected = {}",
        g.triangulations.len(),
        g.edges.len(),
        g.is_connected()
    );
    Ok(())
}
