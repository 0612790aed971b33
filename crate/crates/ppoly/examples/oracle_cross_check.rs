//! Compare the closed formulas with brute-force linear algebra over F_p:
//! graded Hom dimensions, stable Hom and Ext¹, and the triangulation count.

use ppoly::homology::{ext1_dim, hom_module, stable_hom};
use ppoly::oracle::{oracle_enumerate_maximal_compatible, oracle_hom_graded, oracle_stable_and_ext, DEFAULT_T};
use ppoly::order::graded_dim;
use ppoly::triangulation::enumerate_all;
use ppoly::PolygonCtx;

fn main() -> ppoly::Result<()> {
    let ctx = PolygonCtx::new(4)?;
    let a = ctx.edge(1, 3)?;
    let b = ctx.edge(2, 4)?;
    let dims = oracle_hom_graded(&ctx, &a, &b, DEFAULT_T, 20, 32003)?;
    let h = hom_module(&ctx, &a, &b);
    println!("Hom({a}, {b}) = {h:?}");
    for (d, k) in &dims {
        println!("  degree {d:>2}: oracle {k}, formula {}", graded_dim(4, &h, *d));
    }
    let o = oracle_stable_and_ext(&ctx, &a, &b, DEFAULT_T, 65537)?;
    println!("stable Hom oracle {:?} vs formula {:?}", o.stable, stable_hom(&ctx, &a, &b));
    println!("Ext¹ oracle {} vs formula {}", o.ext1, ext1_dim(&ctx, &a, &b));
    println!(
        "maximal compatible sets {} vs enumerated triangulations {}",
        oracle_enumerate_maximal_compatible(&ctx),
        enumerate_all(&ctx)?.len()
    );
    Ok(())
}
