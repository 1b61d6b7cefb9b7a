//! The right action of the Hecke algebra on V^{⊗d}.

use affine_schur::eval::eval_tensor;
use affine_schur::{Params, TensorModule, Variant};

fn main() -> affine_schur::Result<()> {
    let m = TensorModule::new(3, 2, Variant::JJ, Params::generic())?;
    let v = m.basis(&[1, -2])?;
    println!("n = {}", m.n());
    for i in 0..=2 {
        println!("M[1,-2] . T{i} = {}", m.act_t(&v, i)?);
    }
    println!("M[1,-2] . X_1 = {}", m.act_x(&v, 1, 1)?);

    let (dom, w) = m.reduce_to_dominant(&[1, -2]);
    println!("dominant representative {dom:?} via {w}");

    for c in m.relation_checks(&[1, -2])? {
        println!("{:<40} {}", c.name, if c.holds() { "ok" } else { "FAILS" });
    }
    println!("eval: {}", eval_tensor(&m, "M[1,-2]*T[s0.s1] + (e_0*f_0 - f_0*e_0) . M[1,-2]")?);
    Ok(())
}
