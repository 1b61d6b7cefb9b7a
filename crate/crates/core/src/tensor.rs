//! The tensor space `V^{⊗d}` with basis `M_f`, `f in Z^d`, and its right
//! action of the affine Hecke algebra of type C_d.

use crate::coideal::Variant;
use crate::error::{Error, Result};
use crate::hecke::{write_combination, HeckeAlgebra, HeckeElt};
use crate::scalar::{Params, Scalar};
use crate::weyl::WeylElt;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Mutex;

/// Finite linear combination of basis tensors `M_f`, ordered
/// lexicographically by `f`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorVec {
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl TensorVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(f: Vec<i64>) -> Self {
        Self::term(f, Scalar::one())
    }

    pub fn term(f: Vec<i64>, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(f, c);
        }
        TensorVec { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, f: &[i64]) -> Scalar {
        self.terms.get(f).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, f: &[i64], c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(f) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(f);
                }
            }
            None => {
                self.terms.insert(f.to_vec(), c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (f, x) in &other.terms {
            self.add_term(f, &(x * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TensorVec {
            terms: self.terms.iter().map(|(f, x)| (f.clone(), x * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, mut g: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut out = Self::zero();
        for (f, c) in &self.terms {
            out.add_term(f, &g(c)?);
        }
        Ok(out)
    }

    /// Applies a linear map given on basis vectors.
    pub fn map_linear(&self, mut g: impl FnMut(&[i64]) -> Result<TensorVec>) -> Result<Self> {
        let mut out = Self::zero();
        for (f, c) in &self.terms {
            out.add_scaled(&g(f)?, c);
        }
        Ok(out)
    }

    /// Leading term under a caller-supplied key (largest key wins).
    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }
}

impl Add<&TensorVec> for &TensorVec {
    type Output = TensorVec;
    fn add(self, rhs: &TensorVec) -> TensorVec {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub<&TensorVec> for &TensorVec {
    type Output = TensorVec;
    fn sub(self, rhs: &TensorVec) -> TensorVec {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Neg for &TensorVec {
    type Output = TensorVec;
    fn neg(self) -> TensorVec {
        self.scale(&Scalar::from_int(-1))
    }
}

impl fmt::Display for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.terms.iter().map(|(idx, c)| {
            let body = idx.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            let name = if idx.len() == 1 { "v" } else { "M" };
            (format!("{name}[{body}]"), c)
        });
        f.write_str(&write_combination(items))
    }
}

impl fmt::Debug for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorVec({self})")
    }
}

/// `(x^{u0} y^{u1} - x^{v0} y^{v1}) / (y - x)` for equal total degrees, as
/// a list of exponent pairs with signs.
fn divided_difference(u: (i64, i64), v: (i64, i64)) -> Vec<((i64, i64), i64)> {
    debug_assert_eq!(u.0 + u.1, v.0 + v.1);
    if u.1 == v.1 {
        return Vec::new();
    }
    if u.1 < v.1 {
        return divided_difference(v, u)
            .into_iter()
            .map(|(e, c)| (e, -c))
            .collect();
    }
    // x^{u0} y^{v1} (y^k - x^k) / (y - x) with k = u1 - v1
    let k = u.1 - v.1;
    (0..k).map(|j| ((u.0 + j, v.1 + k - 1 - j), 1)).collect()
}

/// Right action of the Hecke algebra on `V^{⊗d}`.
pub struct TensorModule {
    r: usize,
    d: usize,
    n: i64,
    variant: Variant,
    hecke: HeckeAlgebra,
    td_cache: Mutex<HashMap<Vec<i64>, TensorVec>>,
}

impl TensorModule {
    pub fn new(r: usize, d: usize, variant: Variant, params: Params) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameters("r must be at least 1".into()));
        }
        let hecke = HeckeAlgebra::new(d, params)?;
        Ok(TensorModule {
            r,
            d,
            n: 2 * r as i64 + 2,
            variant,
            hecke,
            td_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn params(&self) -> &Params {
        self.hecke.params()
    }

    pub fn hecke(&self) -> &HeckeAlgebra {
        &self.hecke
    }

    /// Whether `M_f` lies in the variant's subspace.
    pub fn allows(&self, f: &[i64]) -> bool {
        f.iter().all(|&x| self.variant.allows_residue(x.rem_euclid(self.n), self.r))
    }

    pub fn basis(&self, f: &[i64]) -> Result<TensorVec> {
        if f.len() != self.d {
            return Err(Error::RankMismatch(f.len(), self.d));
        }
        if !self.allows(f) {
            return Err(Error::ExcludedIndex(f.to_vec()));
        }
        Ok(TensorVec::basis(f.to_vec()))
    }

    /// All allowed `f` with every coordinate in `[-mult*n, mult*n]`.
    pub fn window(&self, mult: i64) -> Vec<Vec<i64>> {
        let lo = -mult * self.n;
        let hi = mult * self.n;
        let coords: Vec<i64> = (lo..=hi)
            .filter(|x| self.variant.allows_residue(x.rem_euclid(self.n), self.r))
            .collect();
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..self.d {
            let mut next = Vec::with_capacity(out.len() * coords.len());
            for p in &out {
                for &x in &coords {
                    let mut v = p.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    /// `f = fbar + n c` with every `fbar_i` in `[-r, r+1]`.
    pub fn decompose(&self, f: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let r = self.r as i64;
        let c: Vec<i64> = f.iter().map(|&x| (x + r).div_euclid(self.n)).collect();
        let fb: Vec<i64> = f.iter().zip(&c).map(|(&x, &k)| x - k * self.n).collect();
        (fb, c)
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i > self.d {
            Err(Error::GeneratorOutOfRange { index: i, max: self.d })
        } else {
            Ok(())
        }
    }

    /// `v X_a^k`: each `X_a` lowers coordinate `a` by `n`.
    pub fn act_x(&self, v: &TensorVec, a: usize, k: i64) -> Result<TensorVec> {
        if a == 0 || a > self.d {
            return Err(Error::InvalidParameters(format!("X index {a} outside 1..={}", self.d)));
        }
        let mut out = TensorVec::zero();
        for (f, c) in v.iter() {
            let mut g = f.clone();
            g[a - 1] -= k * self.n;
            out.add_term(&g, c);
        }
        Ok(out)
    }

    fn ti_basis(&self, f: &[i64], i: usize) -> TensorVec {
        let p = self.params();
        let (fb, c) = self.decompose(f);
        let (a, b) = (i - 1, i);
        let qinv = p.mono(-1, 0, 0);
        let coef = &qinv - &p.q;
        let mut out = TensorVec::zero();
        let mut fs = f.to_vec();
        fs.swap(a, b);
        let (ca, cb) = (c[a], c[b]);
        let poly = if fb[b] >= fb[a] {
            out.add_term(&fs, &if fb[b] == fb[a] { qinv.clone() } else { Scalar::one() });
            // x (x^{cb} y^{ca} - x^{ca} y^{cb}) / (y - x)
            divided_difference((cb, ca), (ca, cb))
                .into_iter()
                .map(|((ex, ey), s)| ((ex + 1, ey), s))
                .collect::<Vec<_>>()
        } else {
            out.add_term(&fs, &Scalar::one());
            // (x^{cb} y^{ca+1} - x^{ca+1} y^{cb}) / (y - x)
            divided_difference((cb, ca + 1), (ca + 1, cb))
        };
        for ((ex, ey), s) in poly {
            let mut g = f.to_vec();
            g[a] = fb[a] + ex * self.n;
            g[b] = fb[b] + ey * self.n;
            out.add_term(&g, &(&coef * &Scalar::from_int(s)));
        }
        out
    }

    /// `v_{f1} T_0` on a single factor, as `(index, coefficient)` pairs.
    pub fn t0_single(&self, f1: i64) -> Vec<(i64, Scalar)> {
        let p = self.params();
        let r = self.r as i64;
        let n = self.n;
        let j = (f1 + r).div_euclid(n);
        let k = f1 - n * j;
        let q0i = p.mono(0, -1, 0);
        let q0iq1 = p.mono(0, -1, 1);
        let a = &p.q1 - &q0i;
        let b = &q0iq1 - &Scalar::one();
        let (na, nb) = (-&a, -&b);
        let mut out: Vec<(i64, Scalar)> = Vec::new();
        let mut put = |kk: i64, jj: i64, c: &Scalar| out.push((kk + n * jj, c.clone()));
        let one = Scalar::one();
        if k == r + 1 && j >= 0 {
            put(-k, -j, &q0iq1);
            for l in 1..=j {
                put(k, j - 2 * l, &a);
                put(k, j + 1 - 2 * l, &b);
            }
        } else if k == r + 1 {
            put(-k, -j, &one);
            for l in 1..=-j {
                put(k, -j - 2 * l, &na);
            }
            for l in 2..=-j {
                put(k, -j + 1 - 2 * l, &nb);
            }
        } else if k > 0 && j >= 0 {
            put(-k, -j, &one);
            for l in 1..=j {
                put(k, j - 2 * l, &a);
                put(k, j + 1 - 2 * l, &b);
            }
        } else if k > 0 {
            put(-k, -j, &one);
            for l in 1..=-j {
                put(k, -j - 2 * l, &na);
                put(k, -j + 1 - 2 * l, &nb);
            }
        } else if k == 0 && j >= 0 {
            put(0, -j, &q0i);
            for l in 1..=j {
                put(k, j - 2 * l, &a);
                put(k, j + 1 - 2 * l, &b);
            }
        } else if k == 0 {
            put(0, -j, &p.q1);
            for l in 0..=-j {
                put(0, -j - 2 * l, &na);
            }
            for l in 1..=-j {
                put(k, -j + 1 - 2 * l, &nb);
            }
        } else if j > 0 {
            put(-k, -j, &q0iq1);
            for l in 1..j {
                put(k, j - 2 * l, &a);
            }
            for l in 1..=j {
                put(k, j + 1 - 2 * l, &b);
            }
        } else {
            put(-k, -j, &q0iq1);
            for l in 0..=-j {
                put(k, -j - 2 * l, &na);
            }
            for l in 1..=-j {
                put(k, -j + 1 - 2 * l, &nb);
            }
        }
        out
    }

    fn t0_basis(&self, f: &[i64]) -> TensorVec {
        let mut out = TensorVec::zero();
        for (x, c) in self.t0_single(f[0]) {
            let mut g = f.to_vec();
            g[0] = x;
            out.add_term(&g, &c);
        }
        out
    }

    /// `M_f T_d` through `T_d = q0^{-1} X_d T_{d-1}^{-1} ... T_0^{-1} ... T_{d-1}^{-1}`.
    fn td_basis(&self, f: &[i64]) -> Result<TensorVec> {
        if let Some(v) = self.td_cache.lock().expect("cache lock").get(f) {
            return Ok(v.clone());
        }
        let d = self.d;
        let mut v = self.act_x(&TensorVec::basis(f.to_vec()), d, 1)?;
        for i in (0..d).rev().chain(1..d) {
            v = self.act_t_inv(&v, i)?;
        }
        let v = v.scale(&self.params().q0.inv()?);
        self.td_cache
            .lock()
            .expect("cache lock")
            .insert(f.to_vec(), v.clone());
        Ok(v)
    }

    /// `v T_i` for `0 <= i <= d`.
    pub fn act_t(&self, v: &TensorVec, i: usize) -> Result<TensorVec> {
        self.check_gen(i)?;
        v.map_linear(|f| {
            if i == 0 {
                Ok(self.t0_basis(f))
            } else if i == self.d {
                self.td_basis(f)
            } else {
                Ok(self.ti_basis(f, i))
            }
        })
    }

    /// `v T_i^{-1}` from the quadratic relation.
    pub fn act_t_inv(&self, v: &TensorVec, i: usize) -> Result<TensorVec> {
        self.check_gen(i)?;
        let g = self.hecke.gen_data(i);
        let c1 = (-&g.norm).inv()?;
        let c0 = &g.trace * &g.norm.inv()?;
        let mut out = self.act_t(v, i)?.scale(&c1);
        out.add_scaled(v, &c0);
        Ok(out)
    }

    /// Applies generators left to right.
    pub fn act_word(&self, v: &TensorVec, word: &[usize]) -> Result<TensorVec> {
        let mut out = v.clone();
        for &i in word {
            out = self.act_t(&out, i)?;
        }
        Ok(out)
    }

    /// `v h` for a Hecke element in the Coxeter basis.
    pub fn act_hecke(&self, v: &TensorVec, h: &HeckeElt) -> Result<TensorVec> {
        let mut out = TensorVec::zero();
        for (w, c) in h.iter() {
            if w.rank() != self.d {
                return Err(Error::RankMismatch(w.rank(), self.d));
            }
            out.add_scaled(&self.act_word(v, &w.reduced_word())?, c);
        }
        Ok(out)
    }

    /// Moves `f` into `0 <= f_1 <= ... <= f_d <= r+1` by generator steps.
    /// Returns the dominant representative `g` and `w` with `f = g . w`.
    pub fn reduce_to_dominant(&self, f: &[i64]) -> (Vec<i64>, WeylElt) {
        let d = self.d;
        let top = self.r as i64 + 1;
        let mut g = f.to_vec();
        let mut steps: Vec<usize> = Vec::new();
        loop {
            let s = if g[0] < 0 {
                Some(0)
            } else if let Some(i) = (1..d).find(|&i| g[i - 1] > g[i]) {
                Some(i)
            } else if g[d - 1] > top {
                Some(d)
            } else {
                None
            };
            match s {
                None => break,
                Some(i) => {
                    g = WeylElt::generator(d, i).expect("in range").act(&g, self.n);
                    steps.push(i);
                }
            }
        }
        steps.reverse();
        let w = WeylElt::from_word(d, &steps).expect("in range");
        (g, w)
    }

    pub fn specialize(&self, v: &TensorVec, p: &Params) -> Result<TensorVec> {
        v.map_coeffs(|c| p.specialize(c))
    }
}

/// One named identity checked on a basis vector.
pub struct ModuleCheck {
    pub name: String,
    pub input: Vec<i64>,
    pub lhs: TensorVec,
    pub rhs: TensorVec,
}

impl ModuleCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl TensorModule {
    /// Every defining Hecke relation, plus the `T_d` relations through the
    /// composite action, evaluated on `M_f`.
    pub fn relation_checks(&self, f: &[i64]) -> Result<Vec<ModuleCheck>> {
        let d = self.d;
        let p = self.params().clone();
        let v = self.basis(f)?;
        let mut out = Vec::new();
        let mut push = |name: String, lhs: TensorVec, rhs: TensorVec| {
            out.push(ModuleCheck {
                name,
                input: f.to_vec(),
                lhs,
                rhs,
            })
        };
        let word = |w: &[usize]| self.act_word(&v, w);
        for i in 0..=d {
            let (a, b) = self.hecke.gen_data(i).roots.clone();
            let t = self.act_t(&v, i)?;
            let u = &t - &v.scale(&a);
            let u2 = &self.act_t(&u, i)? - &u.scale(&b);
            push(format!("quadratic T{i}"), u2, TensorVec::zero());
        }
        for k in 2..d {
            push(format!("braid T{k}T{}T{k}", k - 1), word(&[k, k - 1, k])?, word(&[k - 1, k, k - 1])?);
        }
        if d >= 2 {
            push("braid (T0T1)^2".into(), word(&[0, 1, 0, 1])?, word(&[1, 0, 1, 0])?);
            push(
                format!("braid (T{}Td)^2", d - 1),
                word(&[d - 1, d, d - 1, d])?,
                word(&[d, d - 1, d, d - 1])?,
            );
        }
        for i in 0..=d {
            for j in i + 2..=d {
                push(format!("commute T{i}T{j}"), word(&[i, j])?, word(&[j, i])?);
            }
        }
        for a in 1..=d {
            let xa = self.act_x(&v, a, 1)?;
            push(format!("toric X{a}X{a}^-1"), self.act_x(&xa, a, -1)?, v.clone());
            for b in a + 1..=d {
                push(
                    format!("toric X{a}X{b}"),
                    self.act_x(&xa, b, 1)?,
                    self.act_x(&self.act_x(&v, b, 1)?, a, 1)?,
                );
            }
        }
        let c = p.mono(0, -1, 1);
        let lhs = self.act_t(&self.act_x(&self.act_t(&v, 0)?, 1, -1)?, 0)?;
        let mut rhs = self.act_x(&v, 1, 1)?.scale(&c);
        rhs.add_scaled(&self.act_t(&v, 0)?, &(&c - &Scalar::one()));
        push("T0 X1^-1 T0".into(), lhs, rhs);
        for i in 1..d {
            let lhs = self.act_t(&self.act_x(&self.act_t(&v, i)?, i, 1)?, i)?;
            push(format!("T{i} X{i} T{i}"), lhs, self.act_x(&v, i + 1, 1)?);
        }
        for i in 0..d {
            for j in 1..=d {
                if j == i || j == i + 1 {
                    continue;
                }
                push(
                    format!("T{i} X{j} commute"),
                    self.act_x(&self.act_t(&v, i)?, j, 1)?,
                    self.act_t(&self.act_x(&v, j, 1)?, i)?,
                );
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(r: usize, d: usize) -> TensorModule {
        TensorModule::new(r, d, Variant::JJ, Params::generic()).unwrap()
    }

    #[test]
    fn divided_difference_small_cases() {
        // (y^2 - x^2)/(y - x) = x + y
        let mut t = divided_difference((0, 2), (2, 0));
        t.sort();
        assert_eq!(t, vec![((0, 1), 1), ((1, 0), 1)]);
        assert_eq!(divided_difference((2, 0), (0, 2)).len(), 2);
        assert!(divided_difference((1, 1), (1, 1)).is_empty());
    }

    #[test]
    fn fundamental_domain_formulas() {
        let m = module(3, 2);
        let qinv = m.params().mono(-1, 0, 0);
        let v = m.basis(&[1, 2]).unwrap();
        assert_eq!(m.act_t(&v, 1).unwrap(), m.basis(&[2, 1]).unwrap());
        let v = m.basis(&[1, 1]).unwrap();
        assert_eq!(m.act_t(&v, 1).unwrap(), v.scale(&qinv));
        let v = m.basis(&[0, 2]).unwrap();
        assert_eq!(m.act_t(&v, 0).unwrap(), v.scale(&m.params().mono(0, -1, 0)));
        let v = m.basis(&[4, 4]).unwrap();
        assert_eq!(
            m.act_t(&v, 0).unwrap(),
            m.basis(&[-4, 4]).unwrap().scale(&m.params().mono(0, -1, 1))
        );
    }

    #[test]
    fn x_moves_by_n() {
        let m = module(3, 2);
        let v = m.basis(&[1, 2]).unwrap();
        assert_eq!(m.act_x(&v, 2, 1).unwrap(), m.basis(&[1, -6]).unwrap());
    }

    #[test]
    fn reduction_reaches_domain() {
        let m = module(3, 2);
        for f in m.window(1) {
            let (g, w) = m.reduce_to_dominant(&f);
            assert!(g[0] >= 0 && g[0] <= g[1] && g[1] <= 4, "{f:?} -> {g:?}");
            assert_eq!(w.act(&g, m.n()), f);
        }
    }

    #[test]
    fn rank_one_relations_on_small_window() {
        let m = module(2, 1);
        for f in m.window(2) {
            for c in m.relation_checks(&f).unwrap() {
                assert!(c.holds(), "{} at {:?}", c.name, f);
            }
        }
    }
}
