//! Sparse polynomials in `Z[q, q0, q1]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub const NVARS: usize = 3;
pub type Exp = [u32; NVARS];

pub const VAR_NAMES: [&str; NVARS] = ["q", "q0", "q1"];

/// Terms are kept sorted by exponent in strictly descending lex order
/// (`q > q0 > q1`) with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Exp, BigInt)>,
}

fn exp_add(a: &Exp, b: &Exp) -> Exp {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn exp_divides(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn monomial(e: Exp, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(e, c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(mut terms: Vec<(Exp, BigInt)>) -> Self {
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Exp, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0; NVARS] && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if *e == [0; NVARS] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Exp, BigInt)> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg(&self, v: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn mul_term(&self, e: &Exp, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(x, y)| (exp_add(x, e), y * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                prods.push((exp_add(ea, eb), ca * cb));
            }
        }
        Self::from_terms(prods)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Nonnegative gcd of the integer coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Exp {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return [0; NVARS];
        };
        let mut m = *first;
        for (e, _) in it {
            for k in 0..NVARS {
                m[k] = m[k].min(e[k]);
            }
        }
        m
    }

    pub fn div_monomial(&self, m: &Exp) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (exp_sub(e, m), c.clone())).collect(),
        }
    }

    /// Divides every coefficient by `c`; caller guarantees exactness.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    debug_assert!((x % c).is_zero());
                    (*e, x / c)
                })
                .collect(),
        }
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (x, y) in &self.terms {
                if !exp_divides(e, x) {
                    return None;
                }
                let (qt, rm) = y.div_rem(c);
                if !rm.is_zero() {
                    return None;
                }
                out.push((exp_sub(x, e), qt));
            }
            return Some(Poly { terms: out });
        }
        let (le, lc) = &other.terms[0];
        let degs: Vec<u32> = (0..NVARS).map(|v| other.deg(v)).collect();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.terms.first().cloned() {
            if !exp_divides(le, &re) {
                return None;
            }
            // A nonzero multiple of `other` has at least its degree in every variable.
            if (0..NVARS).any(|v| rem.deg(v) < degs[v]) {
                return None;
            }
            let (qt, rm) = rc.div_rem(lc);
            if !rm.is_zero() {
                return None;
            }
            let qe = exp_sub(&re, le);
            rem = rem.sub(&other.mul_term(&qe, &qt));
            quot.push((qe, qt));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to variable `v`, indexed by degree.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let d = self.deg(v) as usize;
        let mut buckets: Vec<Vec<(Exp, BigInt)>> = vec![Vec::new(); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[v] = 0;
            buckets[e[v] as usize].push((e2, c.clone()));
        }
        // Terms inside each bucket stay in descending order because the
        // remaining coordinates order them consistently.
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[Poly]) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e2 = *e;
                e2[v] += k as u32;
                terms.push((e2, x.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Substitutes a polynomial for each variable.
    pub fn substitute(&self, images: &[Poly; NVARS]) -> Self {
        let mut cache: [Vec<Poly>; NVARS] = Default::default();
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for v in 0..NVARS {
                let k = e[v] as usize;
                if k == 0 {
                    continue;
                }
                while cache[v].len() <= k {
                    let next = match cache[v].last() {
                        None => Self::one(),
                        Some(p) => p.mul(&images[v]),
                    };
                    cache[v].push(next);
                }
                t = t.mul(&cache[v][k]);
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// Returns `p` or `-p`, whichever has a positive leading coefficient.
pub fn normalize_sign(p: Poly) -> Poly {
    match p.terms.first() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[([u32; 3], i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))).collect())
    }

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let a = p(&[([1, 0, 0], 2), ([0, 0, 0], 1), ([1, 0, 0], -2)]);
        assert_eq!(a, Poly::one());
    }

    #[test]
    fn difference_of_squares_divides() {
        let q = Poly::var(0);
        let one = Poly::one();
        let a = q.mul(&q).sub(&one);
        let b = q.sub(&one);
        assert_eq!(a.div_exact(&b), Some(q.add(&one)));
        assert_eq!(b.div_exact(&a), None);
    }

    #[test]
    fn coefficient_split_round_trips() {
        let a = p(&[([2, 1, 0], 3), ([0, 1, 4], -1), ([1, 0, 0], 5), ([0, 0, 0], 7)]);
        for v in 0..3 {
            assert_eq!(Poly::from_coeffs_in(v, &a.coeffs_in(v)), a);
        }
    }

    #[test]
    fn substitution_is_evaluation() {
        // q0 -> q1 in (q0 - q1)(q0 + 1) gives zero.
        let a = Poly::var(1).sub(&Poly::var(2)).mul(&Poly::var(1).add(&Poly::one()));
        let imgs = [Poly::var(0), Poly::var(2), Poly::var(2)];
        assert!(a.substitute(&imgs).is_zero());
    }
}
