//! Hom spaces between Cohen-Macaulay modules as graded R'-submodules, and
//! their dimensions degree by degree.

use ppoly::homology::hom_module;
use ppoly::order::{graded_dim, lambda_ideals};
use ppoly::{PolygonCtx, TaggedEdge};

fn main() -> ppoly::Result<()> {
    let ctx = PolygonCtx::new(4)?;
    println!("Λ conjugated into ideals of R' (n = 4):");
    for row in lambda_ideals(&ctx) {
        println!("  {}", row.iter().map(|i| format!("{i:>10}")).collect::<Vec<_>>().join(" "));
    }

    let pairs = [
        (TaggedEdge::plain(1), TaggedEdge::plain(2)),
        (TaggedEdge::plain(1), TaggedEdge::notched(1)),
        (ctx.edge(1, 3)?, ctx.edge(2, 4)?),
        (ctx.side(1), ctx.edge(1, 3)?),
    ];
    for (a, b) in pairs {
        let h = hom_module(&ctx, &a, &b);
        let dims: Vec<usize> = (0..16).map(|d| graded_dim(4, &h, d)).collect();
        println!("Hom({a}, {b}) = {h:?}; dims in degrees 0..16: {dims:?}");
    }
    Ok(())
}
