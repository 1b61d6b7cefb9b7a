//! The three-parameter affine Hecke algebra of type C.

use affine_schur::eval::eval_hecke;
use affine_schur::{HeckeAlgebra, Params};

fn main() -> affine_schur::Result<()> {
    let h = HeckeAlgebra::new(2, Params::generic())?;
    for i in 0..=2 {
        let g = h.gen_data(i);
        println!("T{i}: roots ({}, {}), eigenvalue on x_lambda {}", g.roots.0, g.roots.1, g.eigen);
    }

    let t0 = h.generator(0)?;
    println!("T0^2 = {}", h.mul(&t0, &t0)?);
    println!("T0^-1 = {}", h.generator_inverse(0)?);

    let x1 = h.x(1, 1)?;
    println!("X_1 = {x1}");
    println!("T0 X_1^-1 T0 = {}", eval_hecke(&h, "T[s0]*X[1]^-1*T[s0]")?);

    let failing: Vec<String> = h
        .defining_relations()?
        .into_iter()
        .chain(h.td_relations()?)
        .filter(|r| !r.holds())
        .map(|r| r.name)
        .collect();
    println!("relations that fail: {failing:?}");
    Ok(())
}
