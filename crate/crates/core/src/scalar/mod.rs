//! The coefficient field `Q(q, q0, q1)`.
//!
//! A [`Scalar`] is a reduced fraction of integer polynomials. Negative powers
//! of the variables live in the denominator, so Laurent monomials such as
//! `q0^-1*q1` are ordinary fractions with a monomial denominator.

mod gcd;
mod poly;

pub use gcd::gcd;
pub use poly::{Exp, Poly, NVARS, VAR_NAMES};

use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Canonical form: `gcd(num, den) = 1` in `Z[q, q0, q1]` (integer content
/// included), the denominator has a positive leading coefficient, and zero is
/// `0/1`. Equal field elements therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Scalar {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::var(0))
    }

    pub fn q0() -> Self {
        Self::from_poly(Poly::var(1))
    }

    pub fn q1() -> Self {
        Self::from_poly(Poly::var(2))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    /// `c * q^e[0] * q0^e[1] * q1^e[2]` with arbitrary integer exponents.
    pub fn laurent_monomial(c: i64, e: [i32; NVARS]) -> Self {
        let mut up = [0u32; NVARS];
        let mut down = [0u32; NVARS];
        for k in 0..NVARS {
            if e[k] >= 0 {
                up[k] = e[k] as u32;
            } else {
                down[k] = (-e[k]) as u32;
            }
        }
        Self::new(
            Poly::monomial(up, BigInt::from(c)),
            Poly::monomial(down, BigInt::one()),
        )
        .expect("monomial denominator is nonzero")
    }

    /// Reduces `num/den` to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar { num, den })
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(c)` when the scalar is an integer constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar { num, den })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs();
        Ok(Scalar {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let on = if negate { other.num.neg() } else { other.num.clone() };
        if self.den == other.den {
            let num = self.num.add(&on);
            if self.den.is_one() {
                return Scalar {
                    num,
                    den: self.den.clone(),
                };
            }
            return Self::new(num, self.den.clone()).expect("nonzero denominator");
        }
        // With g = gcd(b, d): a/b + c/d = (a d' + c b') / (b' d' g), and only
        // g can share factors with the new numerator.
        let g = gcd(&self.den, &other.den);
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&on.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = b1.mul(&d1).mul(&g);
        if g.is_one() {
            return Scalar { num, den };
        }
        let h = gcd(&num, &g);
        if h.is_one() {
            Scalar { num, den }
        } else {
            Scalar {
                num: num.div_exact(&h).expect("gcd divides"),
                den: den.div_exact(&h).expect("gcd divides"),
            }
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar {
                num: self.num.mul(&other.num),
                den: Poly::one(),
            };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = other.den.div_exact(&g1).expect("gcd divides");
        let c = other.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = a.mul(&c);
        let mut den = b.mul(&d);
        if den.leading().is_some_and(|(_, x)| x.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    /// Applies a parameter substitution; fails when a denominator vanishes.
    pub fn specialize(&self, s: &Substitution) -> Result<Self> {
        let images = s.images();
        let num = self.num.substitute(&images);
        let den = self.den.substitute(&images);
        Self::new(num, den)
    }

    /// Evaluates at integer points `(q, q0, q1) = (x[0], x[1], x[2])` as an
    /// exact rational pair `(numerator, denominator)`.
    pub fn eval_at(&self, x: &[BigInt; NVARS]) -> (BigInt, BigInt) {
        let ev = |p: &Poly| {
            let mut acc = BigInt::zero();
            for (e, c) in p.terms() {
                let mut t = c.clone();
                for k in 0..NVARS {
                    t *= x[k].pow(e[k]);
                }
                acc += t;
            }
            acc
        };
        (ev(&self.num), ev(&self.den))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

/// Image of a parameter under a specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Image {
    Keep,
    Q,
    Q1,
    One,
}

/// Substitution of `q0` and `q1`; `q` is always kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Substitution {
    pub q0: Image,
    pub q1: Image,
}

impl Substitution {
    fn images(&self) -> [Poly; NVARS] {
        let img = |i: Image, own: usize| match i {
            Image::Keep => Poly::var(own),
            Image::Q => Poly::var(0),
            Image::Q1 => Poly::var(2),
            Image::One => Poly::one(),
        };
        [Poly::var(0), img(self.q0, 1), img(self.q1, 2)]
    }
}

/// The named parameter regimes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Specialization {
    /// Three independent parameters.
    #[default]
    Generic,
    /// `q0 = q1`: two-parameter type B.
    B2,
    /// `q0 = q1 = q`: equal-parameter type B.
    B1,
    /// `q0 = q1 = 1`: type D.
    D1,
}

impl Specialization {
    pub const ALL: [Specialization; 4] = [
        Specialization::Generic,
        Specialization::B2,
        Specialization::B1,
        Specialization::D1,
    ];

    pub fn substitution(self) -> Substitution {
        use Image::*;
        match self {
            Specialization::Generic => Substitution { q0: Keep, q1: Keep },
            Specialization::B2 => Substitution { q0: Q1, q1: Keep },
            Specialization::B1 => Substitution { q0: Q, q1: Q },
            Specialization::D1 => Substitution { q0: One, q1: One },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Specialization::Generic => "generic",
            Specialization::B2 => "b2",
            Specialization::B1 => "b1",
            Specialization::D1 => "d1",
        }
    }
}

impl FromStr for Specialization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(Specialization::Generic),
            "b2" | "q0=q1" => Ok(Specialization::B2),
            "b1" | "q0=q1=q" => Ok(Specialization::B1),
            "d1" | "q0=q1=1" => Ok(Specialization::D1),
            _ => Err(Error::InvalidParameters(format!("unknown specialization {s:?}"))),
        }
    }
}

/// Parameter values used by every algebra in the crate. Specialized
/// regimes are handled by building the algebra over specialized values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub q: Scalar,
    pub q0: Scalar,
    pub q1: Scalar,
    pub spec: Specialization,
}

impl Params {
    pub fn generic() -> Self {
        Self::new(Specialization::Generic)
    }

    pub fn new(spec: Specialization) -> Self {
        let s = spec.substitution();
        let q0 = Scalar::q0().specialize(&s).expect("polynomial substitution");
        let q1 = Scalar::q1().specialize(&s).expect("polynomial substitution");
        Params {
            q: Scalar::q(),
            q0,
            q1,
            spec,
        }
    }

    /// `q^a * q0^b * q1^c` in this regime.
    pub fn mono(&self, a: i32, b: i32, c: i32) -> Scalar {
        let f = |x: &Scalar, k: i32| x.pow(k).expect("parameters are nonzero");
        &(&f(&self.q, a) * &f(&self.q0, b)) * &f(&self.q1, c)
    }

    /// `q - q^{-1}`, the denominator of the quantum commutator.
    pub fn q_minus_qinv(&self) -> Scalar {
        &self.q - &self.mono(-1, 0, 0)
    }

    pub fn specialize(&self, x: &Scalar) -> Result<Scalar> {
        x.specialize(&self.spec.substitution())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_impl(b, false));
binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_impl(b, true));
binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_impl(b));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::from_int(c)
    }
}

fn write_monomial(out: &mut String, e: &[i64; NVARS]) -> bool {
    let mut wrote = false;
    for k in 0..NVARS {
        if e[k] == 0 {
            continue;
        }
        if wrote {
            out.push('*');
        }
        out.push_str(VAR_NAMES[k]);
        if e[k] != 1 {
            out.push('^');
            out.push_str(&e[k].to_string());
        }
        wrote = true;
    }
    wrote
}

/// Writes a sum of Laurent terms (already in descending order).
fn write_laurent(terms: &[([i64; NVARS], BigInt)]) -> String {
    let mut s = String::new();
    for (idx, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let is_const = e.iter().all(|&x| x == 0);
        if is_const {
            s.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            write_monomial(&mut s, e);
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl Scalar {
    /// True when the text form needs parentheses as a factor in a product.
    pub fn is_compound(&self) -> bool {
        let s = self.to_string();
        s.contains(" + ") || s.contains(" - ") || s.contains('/')
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.den.mono_content();
        let rest = self.den.div_monomial(&m);
        let laurent: Vec<([i64; NVARS], BigInt)> = self
            .num
            .terms()
            .iter()
            .map(|(e, c)| {
                let mut le = [0i64; NVARS];
                for k in 0..NVARS {
                    le[k] = e[k] as i64 - m[k] as i64;
                }
                (le, c.clone())
            })
            .collect();
        let top = write_laurent(&laurent);
        if rest.is_one() {
            return f.write_str(&top);
        }
        let top = if laurent.len() > 1 { format!("({top})") } else { top };
        let bottom_terms: Vec<([i64; NVARS], BigInt)> = rest
            .terms()
            .iter()
            .map(|(e, c)| ([e[0] as i64, e[1] as i64, e[2] as i64], c.clone()))
            .collect();
        let bottom = write_laurent(&bottom_terms);
        if bottom_terms.len() > 1 {
            write!(f, "{top}/({bottom})")
        } else {
            write!(f, "{top}/{bottom}")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// Evaluates a parsed expression that only involves `q`, `q0`, `q1` and
/// integers.
pub(crate) fn eval_scalar_expr(e: &Expr) -> std::result::Result<Scalar, String> {
    Ok(match e {
        Expr::Int(c) => Scalar::from_bigint(c.clone()),
        Expr::Sym(s) => match s.as_str() {
            "q" => Scalar::q(),
            "q0" => Scalar::q0(),
            "q1" => Scalar::q1(),
            other => return Err(format!("unknown symbol {other:?}")),
        },
        Expr::Neg(a) => -eval_scalar_expr(a)?,
        Expr::Add(a, b) => eval_scalar_expr(a)? + eval_scalar_expr(b)?,
        Expr::Sub(a, b) => eval_scalar_expr(a)? - eval_scalar_expr(b)?,
        Expr::Mul(a, b) => eval_scalar_expr(a)? * eval_scalar_expr(b)?,
        Expr::Div(a, b) => eval_scalar_expr(a)?
            .checked_div(&eval_scalar_expr(b)?)
            .map_err(|e| e.to_string())?,
        Expr::Pow(a, k) => {
            let k = i32::try_from(*k).map_err(|_| "exponent too large".to_string())?;
            eval_scalar_expr(a)?.pow(k).map_err(|e| e.to_string())?
        }
        Expr::Indexed(name, _) => return Err(format!("unexpected indexed symbol {name}[..]")),
        Expr::Act(..) => return Err("unexpected action operator".to_string()),
    })
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let e = expr::parse(s)?;
        eval_scalar_expr(&e).map_err(|message| Error::Parse {
            input: s.to_string(),
            pos: 0,
            message,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn canonical_forms_agree() {
        assert_eq!(s("(q^2 - 1)/(q - 1)"), s("q + 1"));
        assert_eq!(s("q0^-1*q1") * s("q0"), s("q1"));
        assert_eq!(s("2/4"), s("1/2"));
        assert_eq!(s("(q - q1)/(q1 - q)"), s("-1"));
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = s("q - q");
        assert!(z.is_zero());
        assert!(z.denom().is_one());
    }

    #[test]
    fn text_forms() {
        assert_eq!(s("q0^-1 * q1").to_string(), "q0^-1*q1");
        assert_eq!(s("(q^2*q0 - 1)/(q - q1)").to_string(), "(q^2*q0 - 1)/(q - q1)");
        assert_eq!(s("q1 - 1/q0").to_string(), "q1 - q0^-1");
        assert_eq!(s("1/(2*q)").to_string(), "q^-1/2");
        assert_eq!(s("0").to_string(), "0");
        assert_eq!(s("-q/(q^2 - 1)").to_string(), "-q/(q^2 - 1)");
    }

    #[test]
    fn round_trip_of_display() {
        for t in [
            "(q^2*q0 - 1)/(q - q1)",
            "q0^-1*q1 - 1",
            "-3*q^-2 + q0",
            "(q1 - q0^-1)/(q - q^-1)",
            "(1 - q0*q1^-1)/(q - q^-1)",
        ] {
            let x = s(t);
            assert_eq!(s(&x.to_string()), x, "{t}");
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
        assert!("1/(q - q)".parse::<Scalar>().is_err());
    }

    #[test]
    fn specialization_maps() {
        let x = s("(q0 - q1)/(q + q0)");
        let b2 = Specialization::B2.substitution();
        assert!(x.specialize(&b2).unwrap().is_zero());
        let y = s("1/(q0 - q1)");
        assert_eq!(y.specialize(&b2), Err(Error::DivisionByZero));
        let d1 = Specialization::D1.substitution();
        assert_eq!(s("q0^-1*q1 + q").specialize(&d1).unwrap(), s("1 + q"));
    }

    #[test]
    fn params_in_regimes() {
        let p = Params::new(Specialization::B1);
        assert_eq!(p.q0, Scalar::q());
        assert_eq!(p.mono(1, -1, 1), Scalar::q());
    }
}
