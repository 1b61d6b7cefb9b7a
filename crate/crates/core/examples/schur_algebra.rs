//! The affine q-Schur algebra: φ-basis, composition and the image of Ψ.

use affine_schur::coideal::CoidealGen;
use affine_schur::eval::eval_schur;
use affine_schur::schur::{Composition, SchurAlgebra};
use affine_schur::{Params, Variant, WeylElt};

fn main() -> affine_schur::Result<()> {
    let s = SchurAlgebra::new(3, 2, Variant::JJ, Params::generic())?;
    println!("{} compositions, omega = {}", s.compositions().len(), s.composition(s.omega()?));

    let w = s.omega()?;
    let s0 = WeylElt::generator(2, 0)?;
    let phi = s.phi(w, w, &s0)?;
    println!("phi^s0 o phi^s0 = {}", s.describe(&s.compose(&phi, &phi)?));

    for g in [CoidealGen::E(0), CoidealGen::F(3), CoidealGen::H(1, 1)] {
        println!("Psi({}) = {}", g.name(3), s.describe(&s.psi(g)?));
    }

    let lam = s.index_of(&Composition::parse("(0,0,1,1,0)")?)?;
    println!("interpolated idempotent equals phi^e: {}", s.idempotent(lam)? == s.phi(lam, lam, &WeylElt::identity(2))?);

    let x = eval_schur(&s, "id[(0,1,1,0,0)] * f_0 * e_0 * id[(0,1,1,0,0)]")?;
    println!("id f_0 e_0 id = {}", s.describe(&x));
    Ok(())
}
