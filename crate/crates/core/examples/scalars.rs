//! Exact arithmetic in Q(q, q0, q1) and the parameter specializations.

use affine_schur::{Params, Scalar, Specialization};

fn main() -> affine_schur::Result<()> {
    let q = Scalar::q();
    let q0 = Scalar::q0();
    let q1 = Scalar::q1();

    // (q - q^-1) / (q0 - q1): stays reduced after every operation.
    let x = (&q - q.inv()?).checked_div(&(&q0 - &q1))?;
    println!("x         = {x}");
    println!("x * (q0 - q1) = {}", &x * (&q0 - &q1));

    // The printed form parses back to the same canonical value.
    let parsed: Scalar = x.to_string().parse()?;
    assert_eq!(parsed, x);
    let y: Scalar = "(q^2 - 1)/(q^2*q0 - q*q1)".parse()?;
    println!("y         = {y}");
    println!("x / y     = {}", x.checked_div(&y)?);

    for spec in [Specialization::B2, Specialization::B1, Specialization::D1] {
        let y = Params::new(spec).specialize(&(&q0 * q1.inv()? + &q))?;
        println!("{:>7}: q0/q1 + q -> {y}", spec.name());
    }
    Ok(())
}
