//! Stable Hom, Ext¹, the Auslander-Reiten translation and the middle terms
//! of nonsplit extensions.

use ppoly::homology::{ar_sequence, ext1_dim, extension_list, stable_hom, tau};
use ppoly::{PolygonCtx, TaggedEdge};

fn main() -> ppoly::Result<()> {
    let ctx = PolygonCtx::new(5)?;
    let a = ctx.edge(1, 4)?;
    let b = ctx.edge(2, 5)?;
    println!("stable Hom({a}, {a}) = {:?}", stable_hom(&ctx, &a, &a));
    println!("Ext¹({a}, {b}) = {} = Ext¹({b}, {a}) = {}", ext1_dim(&ctx, &a, &b), ext1_dim(&ctx, &b, &a));
    for mid in extension_list(&ctx, &a, &b) {
        let terms: Vec<String> = mid.iter().map(|e| e.to_string()).collect();
        println!("  0 -> {b} -> {} -> {a} -> 0", terms.join(" ⊕ "));
    }

    let p = TaggedEdge::plain(1);
    println!("\nτ orbit of {p}:");
    let mut x = p;
    for _ in 0..2 * ctx.n() {
        print!(" {x}");
        x = tau(&ctx, &x)?;
    }
    println!();
    println!("\nAR sequences:");
    for a in ctx.tagged_arcs().iter().take(6) {
        let s = ar_sequence(&ctx, a)?;
        let mid: Vec<String> = s.middle.iter().map(|e| e.to_string()).collect();
        println!("  0 -> {} -> {} -> {} -> 0", s.left, mid.join(" ⊕ "), s.right);
    }
    Ok(())
}
