//! The graded category: index maps, Hom and Ext between graded
//! indecomposables, a tilting lift and the shape of the AR quiver.

use ppoly::graded::{
    check_repetitive_d, graded_ext1_dim, graded_hom_dim, is_tilting_window, lift_triangulation, omega_z, tau_z,
    GradedIndec,
};
use ppoly::{PolygonCtx, TaggedTriangulation};

fn main() -> ppoly::Result<()> {
    let ctx = PolygonCtx::new(4)?;
    let x = GradedIndec::Arc { i: 2, j: 5 };
    println!("x = {x}, Ωx = {}, τx = {}", omega_z(&ctx, &x)?, tau_z(&ctx, &x)?);
    for y in [GradedIndec::Arc { i: 3, j: 5 }, GradedIndec::Star { i: 2 }, GradedIndec::Arc { i: 5, j: 7 }] {
        println!("  Hom(x, {y}) = {}, Ext¹({y}, x) = {}", graded_hom_dim(&ctx, &x, &y)?, graded_ext1_dim(&ctx, &y, &x));
    }
    let fan = TaggedTriangulation::fan(&ctx, 1);
    let lift = lift_triangulation(&fan, None)?;
    let shown: Vec<String> = lift.iter().map(|x| x.to_string()).collect();
    println!("lift of the fan: {}", shown.join(" "));
    println!("tilting in the window [-4, 4]: {}", is_tilting_window(&ctx, &lift, -4..=4));
    let shape = check_repetitive_d(&ctx, 0, 3);
    println!("AR quiver: {} orbits, D_(n+1) diagram: {}, meshes checked: {}", shape.orbits, shape.dynkin_d, shape.meshes_checked);
    Ok(())
}
