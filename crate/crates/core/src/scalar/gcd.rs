//! Multivariate gcd over `Z[q, q0, q1]`.
//!
//! Recursive: strip monomial and integer content, pick a variable present in
//! both inputs, split off the content with respect to that variable and run a
//! subresultant remainder sequence on the primitive parts.

use super::poly::{normalize_sign, Exp, Poly, NVARS};
use num_integer::Integer;

/// Greatest common divisor, normalized to a positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ma = a.mono_content();
    let mb = b.mono_content();
    let mut m: Exp = [0; NVARS];
    for k in 0..NVARS {
        m[k] = ma[k].min(mb[k]);
    }
    let a1 = a.div_monomial(&ma);
    let b1 = b.div_monomial(&mb);
    let ca = a1.content();
    let cb = b1.content();
    let c = ca.gcd(&cb);
    let a2 = a1.div_int_exact(&ca);
    let b2 = b1.div_int_exact(&cb);
    let g = gcd_primitive(&a2, &b2);
    normalize_sign(g.mul_term(&m, &c))
}

/// Inputs have unit integer content and no monomial factor.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b || *a == b.neg() {
        return a.clone();
    }
    let v = (0..NVARS)
        .find(|&v| a.deg(v) > 0 || b.deg(v) > 0)
        .expect("non-constant polynomial has a variable");
    match (a.deg(v) > 0, b.deg(v) > 0) {
        (true, false) => gcd(&content_in(a, v), b),
        (false, true) => gcd(a, &content_in(b, v)),
        _ => {
            let ca = content_in(a, v);
            let cb = content_in(b, v);
            let gc = gcd(&ca, &cb);
            let pa = a.div_exact(&ca).expect("content divides");
            let pb = b.div_exact(&cb).expect("content divides");
            let gp = subresultant(pa.coeffs_in(v), pb.coeffs_in(v));
            let gp = Poly::from_coeffs_in(v, &gp);
            gc.mul(&gp)
        }
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

type Upoly = Vec<Poly>;

fn udeg(p: &Upoly) -> usize {
    p.len() - 1
}

fn trim(mut p: Upoly) -> Upoly {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Poly::zero());
    }
    p
}

fn uis_zero(p: &Upoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &Upoly, b: &Upoly) -> Upoly {
    let db = udeg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut e = udeg(a) + 1 - db;
    while !uis_zero(&r) && udeg(&r) >= db {
        let dr = udeg(&r);
        let lr = r[dr].clone();
        let s = dr - db;
        let mut next: Upoly = r.iter().map(|c| c.mul(lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + s] = next[k + s].sub(&bc.mul(&lr));
        }
        r = trim(next);
        e -= 1;
    }
    let f = lb.pow(e as u32);
    r.into_iter().map(|c| c.mul(&f)).collect()
}

fn ucontent(p: &Upoly) -> Poly {
    let mut g = Poly::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn udiv(p: &Upoly, c: &Poly) -> Upoly {
    p.iter()
        .map(|x| x.div_exact(c).expect("exact coefficient division"))
        .collect()
}

/// Subresultant gcd of two primitive univariate polynomials, returned primitive.
fn subresultant(a: Upoly, b: Upoly) -> Upoly {
    let (mut a, mut b) = (trim(a), trim(b));
    if udeg(&a) < udeg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = udeg(&a) - udeg(&b);
        let r = trim(prem(&a, &b));
        if uis_zero(&r) {
            break;
        }
        if udeg(&r) == 0 {
            return vec![Poly::one()];
        }
        let divisor = g.mul(&h.pow(delta as u32));
        a = b;
        b = udiv(&r, &divisor);
        g = a[udeg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta as u32)
                .div_exact(&h.pow(delta as u32 - 1))
                .expect("subresultant division is exact"),
        };
    }
    let c = ucontent(&b);
    udiv(&b, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q() -> Poly {
        Poly::var(0)
    }
    fn q0() -> Poly {
        Poly::var(1)
    }
    fn q1() -> Poly {
        Poly::var(2)
    }
    fn k(c: i64) -> Poly {
        Poly::constant(BigInt::from(c))
    }

    #[test]
    fn common_factor_recovered() {
        let f = q().mul(&q0()).sub(&q1()).add(&k(3));
        let a = f.mul(&q().add(&q1()));
        let b = f.mul(&q0().sub(&k(2))).mul(&q());
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn content_and_monomials() {
        let a = q().mul(&q()).mul(&q0()).scale(&BigInt::from(6));
        let b = q().mul(&q1()).scale(&BigInt::from(-4));
        assert_eq!(gcd(&a, &b), q().scale(&BigInt::from(2)));
    }

    #[test]
    fn coprime_gives_one() {
        let a = q().mul(&q()).sub(&k(1));
        let b = q0().mul(&q1()).add(&q());
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn univariate_high_degree() {
        // (q^5 - 1) and (q^3 - 1) share q - 1.
        let a = q().pow(5).sub(&k(1));
        let b = q().pow(3).sub(&k(1));
        assert_eq!(gcd(&a, &b), q().sub(&k(1)));
    }
}
