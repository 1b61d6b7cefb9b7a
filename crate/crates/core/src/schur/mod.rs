//! Affine Schur algebras realized as `End_H` of the tensor module.
//!
//! An element is stored by its images on the generators `M_λ = κ(x_λ)`.
//! The φ-basis expansion is recovered on demand through `κ^{-1}`, which
//! also certifies that a family of images is `H`-linear.

mod certificate;
mod identities;

pub use certificate::{Certificate, CertRecord, Word};

use crate::coideal::{CoidealAction, CoidealGen, Layout, Variant};
use crate::error::{Error, Result};
use crate::hecke::{write_combination, HeckeAlgebra, HeckeElt};
use crate::scalar::{Params, Scalar};
use crate::tensor::{TensorModule, TensorVec};
use crate::weyl::{self, WeylElt};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

/// A weak composition `(λ_0, ..., λ_{r+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len() - 2
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_0, λ_{0,1}, ..., λ_{0,r}`.
    pub fn cuts(&self) -> Vec<usize> {
        let mut acc = 0;
        self.0[..self.0.len() - 1]
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Generators of `W_λ`: `{0..d}` minus the cut points.
    pub fn parabolic_gens(&self) -> Vec<usize> {
        let cuts = self.cuts();
        (0..=self.size()).filter(|i| !cuts.contains(i)).collect()
    }

    /// `ẽ_i`: move one unit from slot `i+1` to slot `i`.
    pub fn tilde_e(&self, i: usize) -> Option<Composition> {
        self.shift(i + 1, i)
    }

    /// `f̃_i`: move one unit from slot `i` to slot `i+1`.
    pub fn tilde_f(&self, i: usize) -> Option<Composition> {
        self.shift(i, i + 1)
    }

    fn shift(&self, from: usize, to: usize) -> Option<Composition> {
        if from >= self.0.len() || to >= self.0.len() || self.0[from] == 0 {
            return None;
        }
        let mut p = self.0.clone();
        p[from] -= 1;
        p[to] += 1;
        Some(Composition(p))
    }

    /// Index of `M_λ = v_0^{λ_0} ⊗ ... ⊗ v_{r+1}^{λ_{r+1}}`.
    pub fn m_index(&self) -> Vec<i64> {
        let mut f = Vec::with_capacity(self.size());
        for (j, &p) in self.0.iter().enumerate() {
            f.extend(std::iter::repeat_n(j as i64, p));
        }
        f
    }

    /// Composition of a dominant index (entries in `0..=r+1`).
    pub fn from_dominant(f: &[i64], r: usize) -> Option<Composition> {
        let mut p = vec![0; r + 2];
        for &x in f {
            let j = usize::try_from(x).ok().filter(|&j| j <= r + 1)?;
            p[j] += 1;
        }
        Some(Composition(p))
    }

    pub fn allowed_in(&self, variant: Variant) -> bool {
        let r = self.r();
        match variant {
            Variant::JJ => true,
            Variant::JI => self.0[r + 1] == 0,
            Variant::IJ => self.0[0] == 0,
            Variant::II => self.0[0] == 0 && self.0[r + 1] == 0,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse {
                input: text.to_string(),
                pos: 0,
                message: "expected a composition such as (0,1,1,0,0)".into(),
            })?;
        if parts.len() < 3 {
            return Err(Error::InvalidParameters("a composition needs r+2 >= 3 parts".into()));
        }
        Ok(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `d` into `r+2` parts allowed by the variant, in
/// lexicographically decreasing order.
pub fn compositions(r: usize, d: usize, variant: Variant) -> Result<Vec<Composition>> {
    if r < d {
        return Err(Error::InvalidParameters(format!("need r >= d, got r={r}, d={d}")));
    }
    fn go(slots: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if cur.len() + 1 == slots {
            cur.push(left);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            go(slots, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r + 2, d, &mut Vec::new(), &mut out);
    out.retain(|c| c.allowed_in(variant));
    Ok(out)
}

/// `ω = (0, 1^d, 0^{r-d}, 0)`.
pub fn omega(r: usize, d: usize) -> Result<Composition> {
    if r < d {
        return Err(Error::InvalidParameters(format!("omega needs r >= d, got r={r}, d={d}")));
    }
    let mut p = vec![0; r + 2];
    for x in p.iter_mut().skip(1).take(d) {
        *x = 1;
    }
    Ok(Composition(p))
}

/// A formal sum `Σ_λ x_λ h_λ` in `⊕ x_λ H`, keyed by composition index.
pub type TElt = BTreeMap<usize, HeckeElt>;

/// `(λ, μ, g)` labelling `φ^g_{λ,μ}`.
pub type PhiKey = (usize, usize, WeylElt);

/// An `H`-endomorphism given by its images `M_μ ↦ image`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurElt {
    images: BTreeMap<usize, TensorVec>,
}

impl SchurElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, mu: usize) -> TensorVec {
        self.images.get(&mu).cloned().unwrap_or_default()
    }

    pub fn images(&self) -> impl Iterator<Item = (&usize, &TensorVec)> {
        self.images.iter()
    }

    pub fn set_image(&mut self, mu: usize, v: TensorVec) {
        if v.is_zero() {
            self.images.remove(&mu);
        } else {
            self.images.insert(mu, v);
        }
    }

    pub fn add_scaled(&mut self, other: &SchurElt, c: &Scalar) {
        for (mu, v) in &other.images {
            let mut cur = self.image(*mu);
            cur.add_scaled(v, c);
            self.set_image(*mu, cur);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = SchurElt::zero();
        out.add_scaled(self, c);
        out
    }
}

impl fmt::Debug for SchurElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.images.iter().map(|(k, v)| (k, v.to_string()))).finish()
    }
}

/// The Schur algebra of one variant, with `κ` and its inverse.
pub struct SchurAlgebra {
    module: TensorModule,
    comps: Vec<Composition>,
    index: HashMap<Composition, usize>,
    gens: Vec<Vec<usize>>,
    omega: Option<usize>,
    tw_cache: Mutex<HashMap<(usize, WeylElt), TensorVec>>,
    psi_cache: Mutex<HashMap<CoidealGen, SchurElt>>,
}

impl SchurAlgebra {
    pub fn new(r: usize, d: usize, variant: Variant, params: Params) -> Result<Self> {
        let module = TensorModule::new(r, d, variant, params)?;
        let comps = compositions(r, d, variant)?;
        let index = comps.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect::<HashMap<_, _>>();
        let gens = comps.iter().map(|c| c.parabolic_gens()).collect();
        let omega = index.get(&omega(r, d)?).copied();
        Ok(SchurAlgebra {
            module,
            comps,
            index,
            gens,
            omega,
            tw_cache: Mutex::new(HashMap::new()),
            psi_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn module(&self) -> &TensorModule {
        &self.module
    }

    pub fn hecke(&self) -> &HeckeAlgebra {
        self.module.hecke()
    }

    pub fn params(&self) -> &Params {
        self.module.params()
    }

    pub fn r(&self) -> usize {
        self.module.r()
    }

    pub fn d(&self) -> usize {
        self.module.d()
    }

    pub fn variant(&self) -> Variant {
        self.module.variant()
    }

    pub fn layout(&self) -> Layout {
        Layout::new(self.r(), self.variant())
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.comps
    }

    pub fn composition(&self, i: usize) -> &Composition {
        &self.comps[i]
    }

    pub fn index_of(&self, c: &Composition) -> Result<usize> {
        self.index.get(c).copied().ok_or_else(|| {
            Error::InvalidParameters(format!("{c} is not a composition for r={}, d={}, variant {}", self.r(), self.d(), self.variant()))
        })
    }

    pub fn omega(&self) -> Result<usize> {
        self.omega
            .ok_or_else(|| Error::InvalidParameters("omega is not available for these parameters".into()))
    }

    pub fn gens(&self, lam: usize) -> &[usize] {
        &self.gens[lam]
    }

    /// Name of `φ^g_{λ,μ}`, e.g. `phi[(1,0,1,0,0);(0,1,1,0,0);s0]`.
    pub fn phi_name(&self, key: &PhiKey) -> String {
        let g = if key.2.is_identity() { "e".to_string() } else { key.2.word_string() };
        format!("phi[{};{};{}]", self.comps[key.0], self.comps[key.1], g)
    }

    /// `M_λ T_w`, cached.
    pub fn m_times_t(&self, lam: usize, w: &WeylElt) -> Result<TensorVec> {
        if let Some(v) = self.tw_cache.lock().expect("cache lock").get(&(lam, w.clone())) {
            return Ok(v.clone());
        }
        let v = match w.right_descents().last() {
            None => self.module.basis(&self.comps[lam].m_index())?,
            Some(&i) => {
                let shorter = w.mul_gen(i)?;
                self.module.act_t(&self.m_times_t(lam, &shorter)?, i)?
            }
        };
        self.tw_cache.lock().expect("cache lock").insert((lam, w.clone()), v.clone());
        Ok(v)
    }

    /// `κ(Σ x_λ h_λ) = Σ M_λ h_λ`.
    pub fn kappa(&self, t: &TElt) -> Result<TensorVec> {
        let mut out = TensorVec::zero();
        for (&lam, h) in t {
            for (w, c) in h.iter() {
                out.add_scaled(&self.m_times_t(lam, w)?, c);
            }
        }
        Ok(out)
    }

    /// Rewrites `x_λ h` so that every basis element lies in `D_λ`, using
    /// `x_λ T_u = p_u x_λ` for `u ∈ W_λ`.
    pub fn normal_form(&self, lam: usize, h: &HeckeElt) -> Result<HeckeElt> {
        let gens = &self.gens[lam];
        let mut out = HeckeElt::zero();
        for (w, c) in h.iter() {
            let mut x = w.clone();
            let mut coef = c.clone();
            while let Some(&i) = gens.iter().find(|&&i| x.gen_mul(i).map(|y| y.length() < x.length()).unwrap_or(false)) {
                coef = &coef * &self.hecke().gen_data(i).eigen;
                x = x.gen_mul(i)?;
            }
            out.add_term(&x, &coef);
        }
        Ok(out)
    }

    /// `κ^{-1}` by triangular elimination. Each step removes the term of
    /// largest `ℓ(w(f))` and must only introduce strictly shorter terms.
    pub fn kappa_inv(&self, v: &TensorVec) -> Result<TElt> {
        let mut rest = v.clone();
        let mut out = TElt::new();
        while !rest.is_zero() {
            let mut best: Option<(usize, Vec<i64>, Vec<i64>, WeylElt)> = None;
            for f in rest.support() {
                let (g, w) = self.module.reduce_to_dominant(f);
                let len = w.length();
                if best.as_ref().is_none_or(|b| len > b.0) {
                    best = Some((len, f.clone(), g, w));
                }
            }
            let (len, f, g, w) = best.expect("nonzero vector has a term");
            let comp = Composition::from_dominant(&g, self.r())
                .ok_or_else(|| Error::NotInSpan(format!("index {g:?} is not dominant")))?;
            let lam = self.index_of(&comp).map_err(|_| Error::NotInSpan(format!("{comp} is not an allowed composition")))?;
            if !weyl::is_min_right_coset_rep(&w, &self.gens[lam]) {
                return Err(Error::NotInSpan(format!("{} is not a minimal coset representative for {comp}", w)));
            }
            let u = self.m_times_t(lam, &w)?;
            let lead = u.coeff(&f);
            if lead.is_zero() {
                return Err(Error::NotInSpan(format!("triangularity violated: M_{comp} T_{w} misses M{f:?}")));
            }
            for f2 in u.support() {
                if f2 != &f && self.module.reduce_to_dominant(f2).1.length() >= len {
                    return Err(Error::NotInSpan(format!(
                        "triangularity violated: M_{comp} T_{w} contains M{f2:?} of length >= {len}"
                    )));
                }
            }
            let coef = rest.coeff(&f).checked_div(&lead)?;
            rest.add_scaled(&u, &-&coef);
            out.entry(lam).or_default().add_term(&w, &coef);
        }
        out.retain(|_, h| !h.is_zero());
        Ok(out)
    }

    /// Identity endomorphism.
    pub fn identity(&self) -> Result<SchurElt> {
        let mut out = SchurElt::zero();
        for (i, c) in self.comps.iter().enumerate() {
            out.set_image(i, self.module.basis(&c.m_index())?);
        }
        Ok(out)
    }

    /// `φ^g_{λ,μ}` from its definition `x_μ ↦ T_{W_λ g W_μ}`.
    pub fn phi(&self, lam: usize, mu: usize, g: &WeylElt) -> Result<SchurElt> {
        let (gl, gm) = (&self.gens[lam], &self.gens[mu]);
        if !(weyl::is_min_right_coset_rep(g, gl) && weyl::is_min_left_coset_rep(g, gm)) {
            return Err(Error::InvalidParameters(format!(
                "{} is not a minimal double coset representative for ({}, {})",
                g, self.comps[lam], self.comps[mu]
            )));
        }
        let mut img = TensorVec::zero();
        for x in weyl::double_coset(self.d(), gl, g, gm)? {
            if weyl::is_min_right_coset_rep(&x, gl) {
                img.add_scaled(&self.m_times_t(lam, &x)?, &self.hecke().q_weight(&x).inv()?);
            }
        }
        let mut out = SchurElt::zero();
        out.set_image(mu, img);
        Ok(out)
    }

    /// `Ψ(gen)`: the coideal action on each `M_μ`.
    pub fn psi(&self, gen: CoidealGen) -> Result<SchurElt> {
        if let Some(s) = self.psi_cache.lock().expect("cache lock").get(&gen) {
            return Ok(s.clone());
        }
        let action = CoidealAction::new(&self.module);
        let mut out = SchurElt::zero();
        for (i, c) in self.comps.iter().enumerate() {
            out.set_image(i, action.act(gen, &self.module.basis(&c.m_index())?)?);
        }
        self.psi_cache.lock().expect("cache lock").insert(gen, out.clone());
        Ok(out)
    }

    /// `a ∘ b`.
    pub fn compose(&self, a: &SchurElt, b: &SchurElt) -> Result<SchurElt> {
        let mut out = SchurElt::zero();
        for (&nu, v) in b.images() {
            let mut img = TensorVec::zero();
            for (lam, h) in self.kappa_inv(v)? {
                let base = a.image(lam);
                if !base.is_zero() {
                    img = &img + &self.module.act_hecke(&base, &h)?;
                }
            }
            out.set_image(nu, img);
        }
        Ok(out)
    }

    pub fn compose_all(&self, factors: &[SchurElt]) -> Result<SchurElt> {
        let mut it = factors.iter().rev();
        let mut acc = match it.next() {
            Some(x) => x.clone(),
            None => return self.identity(),
        };
        for a in it {
            acc = self.compose(a, &acc)?;
        }
        Ok(acc)
    }

    /// Smallest element of `W_λ x W_μ`.
    pub fn double_coset_min(&self, lam: usize, x: &WeylElt, mu: usize) -> Result<WeylElt> {
        let mut x = x.clone();
        loop {
            let len = x.length();
            if let Some(&i) = self.gens[lam].iter().find(|&&i| x.gen_mul(i).map(|y| y.length() < len).unwrap_or(false)) {
                x = x.gen_mul(i)?;
            } else if let Some(&j) = self.gens[mu].iter().find(|&&j| x.mul_gen(j).map(|y| y.length() < len).unwrap_or(false)) {
                x = x.mul_gen(j)?;
            } else {
                return Ok(x);
            }
        }
    }

    /// φ-basis expansion. Fails unless every image is of the form
    /// `Σ_λ x_λ h_λ` with `h_λ` constant along double cosets, i.e. unless
    /// the element lies in the span of the φ-basis.
    pub fn expand(&self, a: &SchurElt) -> Result<BTreeMap<PhiKey, Scalar>> {
        let mut out = BTreeMap::new();
        for (&mu, v) in a.images() {
            for (lam, h) in self.kappa_inv(v)? {
                let mut groups: BTreeMap<WeylElt, Vec<(WeylElt, Scalar)>> = BTreeMap::new();
                for (x, c) in h.iter() {
                    groups.entry(self.double_coset_min(lam, x, mu)?).or_default().push((x.clone(), c.clone()));
                }
                for (g, members) in groups {
                    let cg = members
                        .iter()
                        .find(|(x, _)| *x == g)
                        .map(|(_, c)| c.clone())
                        .ok_or_else(|| Error::NotInSpan(format!("double coset of {g} lacks its minimal term")))?;
                    let coef = &cg * &self.hecke().q_weight(&g);
                    let expected: usize = weyl::double_coset(self.d(), &self.gens[lam], &g, &self.gens[mu])?
                        .iter()
                        .filter(|x| weyl::is_min_right_coset_rep(x, &self.gens[lam]))
                        .count();
                    if members.len() != expected {
                        return Err(Error::NotInSpan(format!("incomplete double coset for {g}")));
                    }
                    for (x, c) in &members {
                        if *c != &coef * &self.hecke().q_weight(x).inv()? {
                            return Err(Error::NotInSpan(format!("coefficient of T_{x} breaks the double coset sum")));
                        }
                    }
                    out.insert((lam, mu, g), coef);
                }
            }
        }
        Ok(out)
    }

    pub fn from_expansion(&self, e: &BTreeMap<PhiKey, Scalar>) -> Result<SchurElt> {
        let mut out = SchurElt::zero();
        for ((lam, mu, g), c) in e {
            out.add_scaled(&self.phi(*lam, *mu, g)?, c);
        }
        Ok(out)
    }

    /// Text form of a φ-expansion.
    pub fn expansion_string(&self, e: &BTreeMap<PhiKey, Scalar>) -> String {
        write_combination(e.iter().map(|(k, c)| (self.phi_name(k), c)))
    }

    /// Weight operators used for the idempotents: `h_a` for `jj`, `k_i`
    /// for the other variants.
    pub fn weight_generators(&self) -> Vec<CoidealGen> {
        let gens = self.layout().generators();
        let h: Vec<CoidealGen> = gens.iter().copied().filter(|g| matches!(g, CoidealGen::H(_, 1))).collect();
        if !h.is_empty() {
            return h;
        }
        gens.into_iter().filter(|g| matches!(g, CoidealGen::K(_, 1))).collect()
    }

    /// Eigenvalues of the weight operators on `M_μ`.
    pub fn eigen_tuple(&self, mu: usize) -> Result<Vec<Scalar>> {
        let m = self.module.basis(&self.comps[mu].m_index())?;
        let f = self.comps[mu].m_index();
        let mut out = Vec::new();
        for g in self.weight_generators() {
            let img = self.psi(g)?.image(mu);
            let c = img.coeff(&f);
            if img != m.scale(&c) {
                return Err(Error::EigenvalueCollision(format!("{} does not act diagonally on M_{}", g.name(self.r()), self.comps[mu])));
            }
            out.push(c);
        }
        Ok(out)
    }

    /// Interpolation data for `φ^e_{λ,λ}`: one factor
    /// `(Ψ(g) - c_μ)/(c_λ - c_μ)` per other composition `μ`.
    pub fn idempotent_factors(&self, lam: usize) -> Result<Vec<(CoidealGen, Scalar, Scalar)>> {
        let gens = self.weight_generators();
        let tl = self.eigen_tuple(lam)?;
        let mut out = Vec::new();
        for mu in 0..self.comps.len() {
            if mu == lam {
                continue;
            }
            let tm = self.eigen_tuple(mu)?;
            let a = (0..gens.len()).find(|&a| tl[a] != tm[a]).ok_or_else(|| {
                Error::EigenvalueCollision(format!("{} and {} have equal weights", self.comps[lam], self.comps[mu]))
            })?;
            let factor = (gens[a], tm[a].clone(), tl[a].clone());
            if !out.contains(&factor) {
                out.push(factor);
            }
        }
        Ok(out)
    }

    /// `φ^e_{λ,λ}` as a product of interpolation factors in `Ψ(h_a)`.
    pub fn idempotent(&self, lam: usize) -> Result<SchurElt> {
        let id = self.identity()?;
        let mut factors = Vec::new();
        for (g, cm, cl) in self.idempotent_factors(lam)? {
            let denom = (&cl - &cm).inv()?;
            let mut f = self.psi(g)?.scale(&denom);
            f.add_scaled(&id, &-(&cm * &denom));
            factors.push(f);
        }
        self.compose_all(&factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2, 1, Variant::JJ).unwrap().len(), 4);
        assert_eq!(compositions(2, 1, Variant::JI).unwrap().len(), 3);
        assert_eq!(compositions(3, 2, Variant::JJ).unwrap().len(), 15);
        assert!(compositions(1, 2, Variant::JJ).is_err());
    }

    #[test]
    fn cuts_and_parabolics() {
        let w = omega(3, 2).unwrap();
        assert_eq!(w, Composition(vec![0, 1, 1, 0, 0]));
        assert!(w.parabolic_gens().is_empty());
        let l = Composition(vec![0, 0, 0, 0, 2]);
        assert_eq!(l.parabolic_gens(), vec![0, 1, 2].into_iter().filter(|&i| i != 0).collect::<Vec<_>>());
        assert_eq!(Composition(vec![1, 0, 1, 0, 0]).parabolic_gens(), vec![0]);
        assert_eq!(w.tilde_e(0), Some(Composition(vec![1, 0, 1, 0, 0])));
        assert_eq!(w.tilde_e(2), None);
    }

    #[test]
    fn kappa_inverse_of_generators() {
        let s = SchurAlgebra::new(2, 1, Variant::JJ, Params::generic()).unwrap();
        for lam in 0..s.compositions().len() {
            let v = s.m_times_t(lam, &WeylElt::identity(1)).unwrap();
            let t = s.kappa_inv(&v).unwrap();
            assert_eq!(t.len(), 1);
            assert!(t[&lam] == s.hecke().one());
        }
    }

    #[test]
    fn phi_identity_is_idempotent() {
        let s = SchurAlgebra::new(2, 1, Variant::JJ, Params::generic()).unwrap();
        let e = WeylElt::identity(1);
        for lam in 0..s.compositions().len() {
            let p = s.phi(lam, lam, &e).unwrap();
            assert_eq!(s.compose(&p, &p).unwrap(), p);
            assert_eq!(s.idempotent(lam).unwrap(), p);
        }
    }
}
