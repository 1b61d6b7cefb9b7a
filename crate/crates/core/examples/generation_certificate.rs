//! Expressing φ-basis elements as words in Ψ(generators), and re-checking them.

use affine_schur::schur::{Certificate, SchurAlgebra};
use affine_schur::{Params, Variant};

fn main() -> affine_schur::Result<()> {
    let s = SchurAlgebra::new(2, 1, Variant::JJ, Params::generic())?;
    let cert = Certificate::build(&s, 3)?;
    println!("{} records", cert.records.len());
    for rec in cert.records.iter().take(8) {
        println!("  {} := {}", rec.name, rec.word);
    }
    let checks = cert.verify(&s)?;
    let bad = checks.iter().filter(|c| !c.ok).count();
    println!("re-evaluated: {} ok, {bad} mismatched", checks.len() - bad);
    println!("uncovered basis elements: {:?}", cert.missing(&s, 3)?);
    Ok(())
}
