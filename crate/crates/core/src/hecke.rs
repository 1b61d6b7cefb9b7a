//! The three-parameter affine Hecke algebra of type C_d in its Coxeter basis
//! `{T_w : w in W}`.
//!
//! Quadratic relations `(T_s - a_s)(T_s - b_s) = 0` with
//! `(a, b) = (q0^-1, -q1)` for `s0`, `(q^-1, -q)` for `si` and
//! `(q1^-1, -q0^-1)` for `sd`. The Bernstein elements `X_a` are derived from
//! the `T_i`.

use crate::error::{Error, Result};
use crate::scalar::{Params, Scalar};
use crate::weyl::{self, WeylElt};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

/// Finite linear combination of Coxeter basis elements.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    terms: BTreeMap<WeylElt, Scalar>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: WeylElt) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn term(w: WeylElt, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        HeckeElt { terms }
    }

    /// `c * T_e`.
    pub fn scalar(d: usize, c: Scalar) -> Self {
        Self::term(WeylElt::identity(d), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &WeylElt) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElt, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: &WeylElt, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(w) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(w);
                }
            }
            None => {
                self.terms.insert(w.clone(), c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HeckeElt {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Applies a map to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w, &f(c)?);
        }
        Ok(out)
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(|w| w.length()).max().unwrap_or(0)
    }
}

impl Add<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, c);
        }
        out
    }
}

impl Sub<&HeckeElt> for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, &-c);
        }
        out
    }
}

impl Neg for &HeckeElt {
    type Output = HeckeElt;
    fn neg(self) -> HeckeElt {
        self.scale(&Scalar::from_int(-1))
    }
}

/// Writes `coef*B` with the conventions shared by every linear combination
/// printed by the crate.
pub(crate) fn write_combination<'a>(items: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (basis, c) in items {
        let cs = c.to_string();
        let (neg, body) = if c.is_compound() {
            (false, format!("({cs})*{basis}"))
        } else if let Some(rest) = cs.strip_prefix('-') {
            (true, if rest == "1" { basis } else { format!("{rest}*{basis}") })
        } else if cs == "1" {
            (false, basis)
        } else {
            (false, format!("{cs}*{basis}"))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<(usize, String, &Scalar)> = self
            .terms
            .iter()
            .map(|(w, c)| (w.length(), w.word_string(), c))
            .collect();
        items.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        let s = write_combination(items.into_iter().map(|(_, w, c)| (format!("T[{w}]"), c)));
        f.write_str(&s)
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElt({self})")
    }
}

/// Per-generator data for one parameter regime.
#[derive(Clone, Debug)]
pub struct GenData {
    /// Roots `(a_s, b_s)` of the quadratic relation.
    pub roots: (Scalar, Scalar),
    /// `a_s + b_s`.
    pub trace: Scalar,
    /// `a_s * b_s`.
    pub norm: Scalar,
    /// The weight `q_s` entering `q_w`.
    pub weight: Scalar,
    /// Eigenvalue of `T_s` on the parabolic symmetrizer, `a_s` above.
    pub eigen: Scalar,
}

pub struct HeckeAlgebra {
    d: usize,
    params: Params,
    gens: Vec<GenData>,
    xs: OnceLock<Vec<(HeckeElt, HeckeElt)>>,
}

impl HeckeAlgebra {
    pub fn new(d: usize, params: Params) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameters("rank d must be at least 1".into()));
        }
        let p = &params;
        let gens = (0..=d)
            .map(|i| {
                let (a, b, w) = if i == 0 {
                    (p.mono(0, -1, 0), -&p.q1, p.q1.clone())
                } else if i == d {
                    (p.mono(0, 0, -1), -p.mono(0, -1, 0), p.mono(0, -1, 0))
                } else {
                    (p.mono(-1, 0, 0), -&p.q, p.q.clone())
                };
                GenData {
                    trace: &a + &b,
                    norm: &a * &b,
                    eigen: a.clone(),
                    roots: (a, b),
                    weight: w,
                }
            })
            .collect();
        Ok(HeckeAlgebra {
            d,
            params,
            gens,
            xs: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn gen_data(&self, i: usize) -> &GenData {
        &self.gens[i]
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i > self.d {
            Err(Error::GeneratorOutOfRange { index: i, max: self.d })
        } else {
            Ok(())
        }
    }

    pub fn one(&self) -> HeckeElt {
        HeckeElt::basis(WeylElt::identity(self.d))
    }

    pub fn scalar(&self, c: Scalar) -> HeckeElt {
        HeckeElt::scalar(self.d, c)
    }

    pub fn generator(&self, i: usize) -> Result<HeckeElt> {
        Ok(HeckeElt::basis(WeylElt::generator(self.d, i)?))
    }

    pub fn basis(&self, w: &WeylElt) -> Result<HeckeElt> {
        if w.rank() != self.d {
            return Err(Error::RankMismatch(w.rank(), self.d));
        }
        Ok(HeckeElt::basis(w.clone()))
    }

    /// `T_s^{-1} = (T_s - (a_s + b_s)) / (-a_s b_s)`.
    pub fn generator_inverse(&self, i: usize) -> Result<HeckeElt> {
        self.check_gen(i)?;
        let g = &self.gens[i];
        let c = (-&g.norm).inv()?;
        let mut h = self.generator(i)?.scale(&c);
        h.add_term(&WeylElt::identity(self.d), &(-&g.trace * &c));
        Ok(h)
    }

    /// `h * T_i`.
    pub fn mul_gen_right(&self, h: &HeckeElt, i: usize) -> Result<HeckeElt> {
        self.check_gen(i)?;
        let g = &self.gens[i];
        let mut out = HeckeElt::zero();
        for (w, c) in &h.terms {
            let ws = w.mul_gen(i)?;
            if ws.length() > w.length() {
                out.add_term(&ws, c);
            } else {
                out.add_term(w, &(c * &g.trace));
                out.add_term(&ws, &-(c * &g.norm));
            }
        }
        Ok(out)
    }

    /// `T_i * h`.
    pub fn mul_gen_left(&self, i: usize, h: &HeckeElt) -> Result<HeckeElt> {
        self.check_gen(i)?;
        let g = &self.gens[i];
        let mut out = HeckeElt::zero();
        for (w, c) in &h.terms {
            let sw = w.gen_mul(i)?;
            if sw.length() > w.length() {
                out.add_term(&sw, c);
            } else {
                out.add_term(w, &(c * &g.trace));
                out.add_term(&sw, &-(c * &g.norm));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero();
        for (w, c) in &b.terms {
            let mut part = a.scale(c);
            for i in w.reduced_word() {
                part = self.mul_gen_right(&part, i)?;
            }
            out = &out + &part;
        }
        Ok(out)
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, factors: &[HeckeElt]) -> Result<HeckeElt> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `T_w` as the product of generators along `word` (which need not be
    /// reduced).
    pub fn word(&self, word: &[usize]) -> Result<HeckeElt> {
        let mut acc = self.one();
        for &i in word {
            acc = self.mul_gen_right(&acc, i)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, h: &HeckeElt, k: u32) -> Result<HeckeElt> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, h)?;
        }
        Ok(acc)
    }

    /// `q_w`: product of the generator weights along a reduced word.
    pub fn q_weight(&self, w: &WeylElt) -> Scalar {
        weyl::word_product(
            &w.reduced_word(),
            &self.gens.iter().map(|g| g.weight.clone()).collect::<Vec<_>>(),
            Scalar::one(),
            |a, b| a * b,
        )
    }

    /// `p_w`: product of generator eigenvalues along a reduced word.
    pub fn eigen_weight(&self, w: &WeylElt) -> Scalar {
        weyl::word_product(
            &w.reduced_word(),
            &self.gens.iter().map(|g| g.eigen.clone()).collect::<Vec<_>>(),
            Scalar::one(),
            |a, b| a * b,
        )
    }

    /// `T_X = sum_{w in X} q_w^{-1} T_w`.
    pub fn t_sum<'a>(&self, elems: impl IntoIterator<Item = &'a WeylElt>) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero();
        for w in elems {
            out.add_term(w, &self.q_weight(w).inv()?);
        }
        Ok(out)
    }

    /// Parabolic symmetrizer `x = T_{W_J}` for a proper generator subset `J`.
    pub fn x_parabolic(&self, gens: &[usize]) -> Result<HeckeElt> {
        let elems = weyl::parabolic_elements(self.d, gens)?;
        self.t_sum(&elems)
    }

    fn xs(&self) -> &Vec<(HeckeElt, HeckeElt)> {
        self.xs.get_or_init(|| self.build_xs().expect("Bernstein elements are well defined"))
    }

    fn build_xs(&self) -> Result<Vec<(HeckeElt, HeckeElt)>> {
        let d = self.d;
        let q0 = self.params.q0.clone();
        // X_d = q0 T_d T_{d-1} ... T_1 T_0 T_1 ... T_{d-1}
        let mut word = vec![d];
        word.extend((0..d).rev());
        word.extend(1..d);
        let xd = self.word(&word)?.scale(&q0);
        // X_d^{-1} = q0^{-1} T_{d-1}^{-1} ... T_0^{-1} ... T_{d-1}^{-1} T_d^{-1}
        let mut factors: Vec<HeckeElt> = Vec::new();
        for i in (0..d).rev().chain(1..d) {
            factors.push(self.generator_inverse(i)?);
        }
        factors.push(self.generator_inverse(d)?);
        let xd_inv = self.product(&factors)?.scale(&q0.inv()?);
        let mut xs = vec![(HeckeElt::zero(), HeckeElt::zero()); d];
        xs[d - 1] = (xd, xd_inv);
        for i in (1..d).rev() {
            let ti = self.generator(i)?;
            let ti_inv = self.generator_inverse(i)?;
            let (next, next_inv) = xs[i].clone();
            let x = self.product(&[ti_inv.clone(), next, ti_inv])?;
            let x_inv = self.product(&[ti.clone(), next_inv, ti])?;
            xs[i - 1] = (x, x_inv);
        }
        Ok(xs)
    }

    /// `X_a^k` for `1 <= a <= d` and any integer `k`.
    pub fn x(&self, a: usize, k: i32) -> Result<HeckeElt> {
        if a == 0 || a > self.d {
            return Err(Error::InvalidParameters(format!("X index {a} outside 1..={}", self.d)));
        }
        let (x, xi) = &self.xs()[a - 1];
        let base = if k >= 0 { x } else { xi };
        self.pow(base, k.unsigned_abs())
    }

    /// `q0^{-1} X_d T_{d-1}^{-1} ... T_1^{-1} T_0^{-1} T_1^{-1} ... T_{d-1}^{-1}`.
    pub fn td_from_x(&self) -> Result<HeckeElt> {
        let d = self.d;
        let mut factors = vec![self.x(d, 1)?];
        for i in (0..d).rev().chain(1..d) {
            factors.push(self.generator_inverse(i)?);
        }
        Ok(self.product(&factors)?.scale(&self.params.q0.inv()?))
    }

    /// `q0^{-1} T_{d-1} ... T_1 (X_1 T_0^{-1}) T_1^{-1} ... T_{d-1}^{-1}`.
    pub fn td_via_x1(&self) -> Result<HeckeElt> {
        let d = self.d;
        let mut factors = Vec::new();
        for i in (1..d).rev() {
            factors.push(self.generator(i)?);
        }
        factors.push(self.x(1, 1)?);
        factors.push(self.generator_inverse(0)?);
        for i in 1..d {
            factors.push(self.generator_inverse(i)?);
        }
        Ok(self.product(&factors)?.scale(&self.params.q0.inv()?))
    }

    /// Applies a parameter specialization to every coefficient.
    pub fn specialize(&self, h: &HeckeElt, p: &Params) -> Result<HeckeElt> {
        h.map_coeffs(|c| p.specialize(c))
    }

    /// Parses `coef*T[s0.s1] + ...` and `X[a]^k` forms.
    pub fn parse(&self, text: &str) -> Result<HeckeElt> {
        crate::eval::eval_hecke(self, text)
    }
}

/// One named identity `lhs = rhs` in the Hecke algebra.
pub struct HeckeIdentity {
    pub name: String,
    pub lhs: HeckeElt,
    pub rhs: HeckeElt,
}

impl HeckeIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn ident(name: impl Into<String>, lhs: HeckeElt, rhs: HeckeElt) -> HeckeIdentity {
    HeckeIdentity {
        name: name.into(),
        lhs,
        rhs,
    }
}

impl HeckeAlgebra {
    /// `(T_s - a)(T_s - b)` for a candidate element playing the role of `T_s`.
    fn quadratic(&self, t: &HeckeElt, a: &Scalar, b: &Scalar) -> Result<HeckeElt> {
        let one = self.one();
        self.mul(&(t - &one.scale(a)), &(t - &one.scale(b)))
    }

    /// Defining relations of the Bernstein presentation: Hecke quadratic and
    /// braid relations for `T_0..T_{d-1}`, toric relations and the two
    /// Bernstein-Lusztig cross relations.
    pub fn defining_relations(&self) -> Result<Vec<HeckeIdentity>> {
        let d = self.d;
        let mut out = Vec::new();
        let zero = HeckeElt::zero();
        for i in 0..=d {
            let t = self.generator(i)?;
            let (a, b) = self.gens[i].roots.clone();
            out.push(ident(format!("quadratic T{i}"), self.quadratic(&t, &a, &b)?, zero.clone()));
            let inv = self.generator_inverse(i)?;
            out.push(ident(format!("inverse T{i}"), self.mul(&t, &inv)?, self.one()));
        }
        for k in 2..d {
            out.push(ident(
                format!("braid T{k}T{}T{k}", k - 1),
                self.word(&[k, k - 1, k])?,
                self.word(&[k - 1, k, k - 1])?,
            ));
        }
        if d >= 2 {
            out.push(ident("braid (T0T1)^2", self.word(&[0, 1, 0, 1])?, self.word(&[1, 0, 1, 0])?));
        }
        for i in 0..d {
            for j in i + 2..d {
                out.push(ident(format!("commute T{i}T{j}"), self.word(&[i, j])?, self.word(&[j, i])?));
            }
        }
        for a in 1..=d {
            let xa = self.x(a, 1)?;
            let xai = self.x(a, -1)?;
            out.push(ident(format!("toric X{a}X{a}^-1"), self.mul(&xa, &xai)?, self.one()));
            out.push(ident(format!("toric X{a}^-1X{a}"), self.mul(&xai, &xa)?, self.one()));
            for b in a + 1..=d {
                let xb = self.x(b, 1)?;
                out.push(ident(format!("toric X{a}X{b}"), self.mul(&xa, &xb)?, self.mul(&xb, &xa)?));
            }
        }
        let p = &self.params;
        let t0 = self.generator(0)?;
        let c = p.mono(0, -1, 1);
        let lhs = self.product(&[t0.clone(), self.x(1, -1)?, t0.clone()])?;
        let rhs = &self.x(1, 1)?.scale(&c) + &t0.scale(&(&c - &Scalar::one()));
        out.push(ident("T0 X1^-1 T0", lhs, rhs));
        for i in 1..d {
            let ti = self.generator(i)?;
            let lhs = self.product(&[ti.clone(), self.x(i, 1)?, ti.clone()])?;
            out.push(ident(format!("T{i} X{i} T{i}"), lhs, self.x(i + 1, 1)?));
        }
        for i in 0..d {
            let ti = self.generator(i)?;
            for j in 1..=d {
                if j == i || j == i + 1 {
                    continue;
                }
                let xj = self.x(j, 1)?;
                out.push(ident(format!("T{i} X{j} commute"), self.mul(&ti, &xj)?, self.mul(&xj, &ti)?));
            }
        }
        Ok(out)
    }

    /// Relations satisfied by `T_d` built from the Bernstein generators.
    pub fn td_relations(&self) -> Result<Vec<HeckeIdentity>> {
        let d = self.d;
        let p = &self.params;
        let td = self.td_from_x()?;
        let mut out = vec![
            ident("Td composite equals Coxeter generator", td.clone(), self.generator(d)?),
            ident("Td via X1", self.td_via_x1()?, td.clone()),
        ];
        let (a, b) = (p.mono(0, 0, -1), -p.mono(0, -1, 0));
        out.push(ident("Td quadratic", self.quadratic(&td, &a, &b)?, HeckeElt::zero()));
        for i in 0..d.saturating_sub(1) {
            let ti = self.generator(i)?;
            out.push(ident(format!("Td T{i} commute"), self.mul(&td, &ti)?, self.mul(&ti, &td)?));
        }
        if d >= 2 {
            let t = self.generator(d - 1)?;
            let a = self.product(&[t.clone(), td.clone(), t.clone(), td.clone()])?;
            let b = self.product(&[td.clone(), t.clone(), td.clone(), t])?;
            out.push(ident(format!("braid (T{}Td)^2", d - 1), a, b));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(d: usize) -> HeckeAlgebra {
        HeckeAlgebra::new(d, Params::generic()).unwrap()
    }

    #[test]
    fn generator_squares() {
        let h = alg(2);
        for i in 0..=2 {
            let t = h.generator(i).unwrap();
            let sq = h.mul(&t, &t).unwrap();
            let g = h.gen_data(i);
            let want = &t.scale(&g.trace) - &h.one().scale(&g.norm);
            assert_eq!(sq, want);
        }
    }

    #[test]
    fn inverse_formulas() {
        let h = alg(2);
        let p = Params::generic();
        let t0i = h.generator_inverse(0).unwrap();
        let mut want = h.generator(0).unwrap().scale(&p.mono(0, 1, -1));
        want.add_term(&WeylElt::identity(2), &(&p.q0 - &p.mono(0, 0, -1)));
        assert_eq!(t0i, want);
        let t2i = h.generator_inverse(2).unwrap();
        let mut want = h.generator(2).unwrap().scale(&p.mono(0, 1, 1));
        want.add_term(&WeylElt::identity(2), &(&p.q1 - &p.q0));
        assert_eq!(t2i, want);
    }

    #[test]
    fn display_orders_by_length() {
        let h = alg(1);
        let mut e = h.generator(0).unwrap();
        e = &e + &h.one();
        e = &e + &h.word(&[0, 1]).unwrap().scale(&"q0^-1*q1".parse().unwrap());
        assert_eq!(e.to_string(), "q0^-1*q1*T[s0.s1] + T[s0] + T[]");
    }

    #[test]
    fn rank_one_relations() {
        let h = alg(1);
        for r in h.defining_relations().unwrap() {
            assert!(r.holds(), "{}", r.name);
        }
        for r in h.td_relations().unwrap() {
            assert!(r.holds(), "{}", r.name);
        }
    }
}
