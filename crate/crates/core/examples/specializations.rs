//! The quadratic relation of T0 in each parameter regime.

use affine_schur::{HeckeAlgebra, Params, Specialization};

fn main() -> affine_schur::Result<()> {
    for spec in [Specialization::Generic, Specialization::B2, Specialization::B1, Specialization::D1] {
        let h = HeckeAlgebra::new(2, Params::new(spec))?;
        let t0 = h.generator(0)?;
        let (a, b) = &h.gen_data(0).roots;
        println!("{:>7}: roots ({a}, {b}), T0^2 = {}", spec.name(), h.mul(&t0, &t0)?);
    }
    Ok(())
}
