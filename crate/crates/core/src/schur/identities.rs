//! Identities relating `Ψ`, the φ-basis and `κ`.

use super::{PhiKey, SchurAlgebra, SchurElt, TElt};
use crate::check::{compare, Check, Counterexample};
use crate::coideal::{CoidealGen, Variant};
use crate::error::{Error, Result};
use crate::hecke::HeckeElt;
use crate::scalar::Scalar;
use crate::weyl::{self, WeylElt};
use std::collections::BTreeMap;

impl SchurAlgebra {
    /// Text form: the φ-expansion when it exists, else the raw images.
    pub fn describe(&self, a: &SchurElt) -> String {
        match self.expand(a) {
            Ok(e) => self.expansion_string(&e),
            Err(_) => {
                let parts: Vec<String> = a.images().map(|(mu, v)| format!("M{} -> {}", self.composition(*mu), v)).collect();
                if parts.is_empty() { "0".into() } else { parts.join("; ") }
            }
        }
    }

    pub fn compare(&self, input: impl Into<String>, lhs: &SchurElt, rhs: &SchurElt) -> Option<Counterexample> {
        (lhs != rhs).then(|| Counterexample {
            input: input.into(),
            lhs: self.describe(lhs),
            rhs: self.describe(rhs),
        })
    }

    /// `Σ_λ c(λ) φ^e_{x(λ),λ}` over the compositions where the move applies.
    fn move_sum(&self, mv: impl Fn(&super::Composition) -> Option<super::Composition>, c: impl Fn(&[usize]) -> Scalar) -> Result<SchurElt> {
        let e = WeylElt::identity(self.d());
        let mut out = SchurElt::zero();
        for (lam, comp) in self.compositions().iter().enumerate() {
            if let Some(target) = mv(comp).and_then(|t| self.index_of(&t).ok()) {
                out.add_scaled(&self.phi(target, lam, &e)?, &c(comp.parts()));
            }
        }
        Ok(out)
    }

    /// The closed forms of `Ψ(e_i)` and `Ψ(f_i)` in the φ-basis.
    pub fn psi_closed_form(&self, g: CoidealGen) -> Result<SchurElt> {
        if self.variant() != Variant::JJ {
            return Err(Error::Unsupported("closed forms of Psi(e_i), Psi(f_i) are stated for jj".into()));
        }
        let p = self.params().clone();
        let r = self.r();
        let qp = move |k: i64| p.mono(k as i32, 0, 0);
        let p2 = self.params().clone();
        match g {
            CoidealGen::E(i) if i < r => self.move_sum(|c| c.tilde_e(i), |l| qp(l[i + 1] as i64 - 1)),
            CoidealGen::E(_) => self.move_sum(|c| c.tilde_e(r), |l| p2.mono(3 * (l[r + 1] as i32 - 1), 1, -1)),
            CoidealGen::F(0) => self.move_sum(|c| c.tilde_f(0), |l| p2.mono(2 * (l[0] as i32 - 1), 0, 1)),
            CoidealGen::F(i) if i < r => self.move_sum(|c| c.tilde_f(i), |l| qp(l[i] as i64 - 1)),
            CoidealGen::F(_) => self.move_sum(|c| c.tilde_f(r), |l| p2.mono(l[r] as i32 - l[r + 1] as i32 - 1, 1, -1)),
            _ => Err(Error::Unsupported(format!("no closed form for {}", g.name(r)))),
        }
    }

    /// One check per `Ψ(e_i)`, `Ψ(f_i)` against its closed form.
    pub fn psi_formula_checks(&self) -> Vec<Check> {
        let r = self.r();
        let mut out = Vec::new();
        for i in 0..=r {
            for g in [CoidealGen::E(i), CoidealGen::F(i)] {
                let which = match g {
                    CoidealGen::E(i) if i < r => "Psi(e_i), i != r",
                    CoidealGen::E(_) => "Psi(e_r)",
                    CoidealGen::F(0) => "Psi(f_0)",
                    CoidealGen::F(i) if i < r => "Psi(f_i), i != 0,r",
                    _ => "Psi(f_r)",
                };
                let id = format!("psi-closed-form {} (r={}, d={})", g.name(r), r, self.d());
                out.push(Check::run(id.clone(), which, || {
                    Ok(self.compare(id.clone(), &self.psi(g)?, &self.psi_closed_form(g)?))
                }));
            }
        }
        out
    }

    /// `φ^e_{ω,ν} ∘ φ^e_{ν,ω}` for `ν = ẽ_i(ω)`, `0 ≤ i < d`, against
    /// `φ^e_{ω,ω} + q_{s_i}^{-1} φ^{s_i}_{ω,ω}`, and for `ν` the
    /// composition obtained by moving the last unit of `ω` to slot `r+1`
    /// against `φ^e_{ω,ω} + φ^{s_d}_{ω,ω}`.
    pub fn generator_product_checks(&self) -> Vec<Check> {
        let mut out = Vec::new();
        let d = self.d();
        for i in 0..=d {
            let id = if i < d {
                format!("product e~_{i}: phi(w,e_{i}w) phi(e_{i}w,w) = 1_w + q_s{i}^-1 phi^s{i}")
            } else {
                "product f~_r: phi(w,f_rw) phi(f_rw,w) = 1_w + phi^sd".to_string()
            };
            out.push(Check::run(id.clone(), "generator products at omega", || {
                let omega = self.omega()?;
                let w = self.composition(omega).clone();
                let e = WeylElt::identity(d);
                let si = WeylElt::generator(d, i)?;
                let (nu, coef) = if i < d {
                    let nu = w.tilde_e(i).ok_or_else(|| Error::InvalidParameters("e~_i(omega) is null".into()))?;
                    (nu, self.hecke().q_weight(&si).inv()?)
                } else {
                    // f~_r is null at ω when r > d; the chain f~_r ... f~_d
                    // moves the last unit from slot d to slot r+1.
                    let mut nu = w.clone();
                    for j in d..=self.r() {
                        nu = nu.tilde_f(j).ok_or_else(|| Error::InvalidParameters("f~ chain is null".into()))?;
                    }
                    (nu, Scalar::one())
                };
                let nu = self.index_of(&nu)?;
                let lhs = self.compose(&self.phi(omega, nu, &e)?, &self.phi(nu, omega, &e)?)?;
                let mut rhs = self.phi(omega, omega, &e)?;
                rhs.add_scaled(&self.phi(omega, omega, &si)?, &coef);
                Ok(self.compare(id.clone(), &lhs, &rhs))
            }));
        }
        out
    }

    /// Interpolated idempotents against `φ^e_{λ,λ}`.
    pub fn idempotent_checks(&self) -> Vec<Check> {
        let e = WeylElt::identity(self.d());
        (0..self.compositions().len())
            .map(|lam| {
                let id = format!("idempotent {}", self.composition(lam));
                Check::run(id.clone(), "weight idempotents", || {
                    Ok(self.compare(id.clone(), &self.idempotent(lam)?, &self.phi(lam, lam, &e)?))
                })
            })
            .collect()
    }

    /// `x_λ T_i = p_{s_i} x_λ` for every `s_i ∈ W_λ`.
    pub fn xlm_checks(&self) -> Vec<Check> {
        let mut out = Vec::new();
        for lam in 0..self.compositions().len() {
            for &i in self.gens(lam) {
                let id = format!("x_lambda T_{i} = p_s{i} x_lambda, lambda={}", self.composition(lam));
                out.push(Check::run(id.clone(), "x_lambda T_i", || {
                    let h = self.hecke();
                    let x = h.x_parabolic(self.gens(lam))?;
                    let lhs = h.mul(&x, &h.generator(i)?)?;
                    let rhs = x.scale(&h.gen_data(i).eigen);
                    Ok(compare(id.clone(), &lhs, &rhs))
                }));
            }
        }
        out
    }

    /// `κ^{-1}(κ(x_λ T_w))` equals the normal form of `x_λ T_w`.
    pub fn kappa_roundtrip_checks(&self, max_len: usize) -> Vec<Check> {
        let mut out = Vec::new();
        let ws = weyl::elements_upto(self.d(), max_len);
        for lam in 0..self.compositions().len() {
            let id = format!("kappa round trip lambda={} (l(w) <= {max_len})", self.composition(lam));
            out.push(Check::run(id.clone(), "kappa isomorphism", || {
                for w in &ws {
                    let h = HeckeElt::basis(w.clone());
                    let t: TElt = BTreeMap::from([(lam, h.clone())]);
                    let back = self.kappa_inv(&self.kappa(&t)?)?;
                    let want = self.normal_form(lam, &h)?;
                    let got = back.get(&lam).cloned().unwrap_or_default();
                    if back.len() > 1 || got != want {
                        return Ok(Some(Counterexample {
                            input: format!("x_{} T_{}", self.composition(lam), w),
                            lhs: format!("{back:?}"),
                            rhs: format!("{want}"),
                        }));
                    }
                }
                Ok(None)
            }));
        }
        out
    }

    /// Re-evaluating the φ-expansion of `Ψ(g)` reproduces its images.
    pub fn expansion_consistency_checks(&self) -> Vec<Check> {
        self.layout()
            .generators()
            .into_iter()
            .map(|g| {
                let id = format!("phi expansion of Psi({}) re-evaluates", g.name(self.r()));
                Check::run(id.clone(), "Psi in the Schur algebra", || {
                    let a = self.psi(g)?;
                    Ok(self.compare(id.clone(), &self.from_expansion(&self.expand(&a)?)?, &a))
                })
            })
            .collect()
    }

    /// `Ψ(t) ∈ Σ_λ F φ^{s}_{λ,λ}` as stated, and the weaker diagonal form
    /// that also allows `φ^e_{λ,λ}`.
    pub fn t_generator_checks(&self) -> Vec<Check> {
        let mut out = Vec::new();
        let d = self.d();
        for (t, i) in [(CoidealGen::T0, 0), (CoidealGen::Tr, d)] {
            if !self.layout().has(t) {
                continue;
            }
            for with_identity in [false, true] {
                let span = if with_identity { "phi^e, phi^s" } else { "phi^s" };
                let id = format!("Psi({}) in span of diagonal {span}{i}", t.name(self.r()));
                out.push(Check::run(id.clone(), "t-generator diagonal form", || {
                    let si = WeylElt::generator(d, i)?;
                    let a = self.psi(t)?;
                    let kept: BTreeMap<PhiKey, Scalar> = self
                        .expand(&a)?
                        .into_iter()
                        .filter(|((l, m, g), _)| l == m && (*g == si || (with_identity && g.is_identity())))
                        .collect();
                    Ok(self.compare(id.clone(), &a, &self.from_expansion(&kept)?))
                }));
            }
        }
        out
    }
}
