//! Constructive generation of the φ-basis from `Ψ` and weight idempotents.
//!
//! The certificate is a straight-line program: each record names a target
//! and gives a word in `Psi[..]`, idempotents `id[..]` and earlier records.

use super::{PhiKey, SchurAlgebra, SchurElt};
use crate::coideal::CoidealGen;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weyl::{self, WeylElt};
use serde_json::json;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

/// One move `(from, to, forward, back)` on a chain starting at `ω`.
type Step = (usize, usize, CoidealGen, CoidealGen);

/// A word in the generators of the Schur algebra.
#[derive(Clone, Debug, PartialEq)]
pub enum Word {
    One,
    Psi(CoidealGen, usize),
    Ref(String),
    Scale(Scalar, Box<Word>),
    Compose(Vec<Word>),
    Sum(Vec<Word>),
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::One => write!(f, "1"),
            Word::Psi(g, r) => write!(f, "Psi[{}]", g.name(*r)),
            Word::Ref(n) => write!(f, "{n}"),
            Word::Scale(c, w) => write!(f, "({c})*{w}"),
            Word::Compose(ws) => {
                let parts: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
                write!(f, "{}", parts.join("*"))
            }
            Word::Sum(ws) => {
                let parts: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
                write!(f, "({})", parts.join(" + "))
            }
        }
    }
}

/// One certified target.
#[derive(Clone, Debug)]
pub struct CertRecord {
    pub name: String,
    pub target: PhiKey,
    pub word: Word,
}

/// Outcome of re-evaluating one record.
#[derive(Clone, Debug)]
pub struct RecordCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Certificate {
    pub records: Vec<CertRecord>,
}

fn idem_name(s: &SchurAlgebra, lam: usize) -> String {
    format!("id[{}]", s.composition(lam))
}

/// Evaluates a word, resolving references through `memo`.
pub(crate) fn eval_word(s: &SchurAlgebra, w: &Word, memo: &HashMap<String, SchurElt>) -> Result<SchurElt> {
    match w {
        Word::One => s.identity(),
        Word::Psi(g, _) => s.psi(*g),
        Word::Ref(n) => memo
            .get(n)
            .cloned()
            .ok_or_else(|| Error::NotInSpan(format!("certificate refers to {n} before defining it"))),
        Word::Scale(c, x) => Ok(eval_word(s, x, memo)?.scale(c)),
        Word::Compose(xs) => {
            let vals = xs.iter().map(|x| eval_word(s, x, memo)).collect::<Result<Vec<_>>>()?;
            s.compose_all(&vals)
        }
        Word::Sum(xs) => {
            let mut out = SchurElt::zero();
            for x in xs {
                out.add_scaled(&eval_word(s, x, memo)?, &Scalar::one());
            }
            Ok(out)
        }
    }
}

struct Builder<'a> {
    s: &'a SchurAlgebra,
    cert: Certificate,
    memo: HashMap<String, SchurElt>,
    names: HashMap<PhiKey, String>,
}

impl<'a> Builder<'a> {
    fn e(&self) -> WeylElt {
        WeylElt::identity(self.s.d())
    }

    fn push(&mut self, target: PhiKey, name: String, word: Word) -> Result<()> {
        let value = eval_word(self.s, &word, &self.memo)?;
        self.memo.insert(name.clone(), value);
        self.names.insert(target.clone(), name.clone());
        self.cert.records.push(CertRecord { name, target, word });
        Ok(())
    }

    fn name(&self, key: &PhiKey) -> Result<String> {
        self.names
            .get(key)
            .cloned()
            .ok_or_else(|| Error::NotInSpan(format!("{} has not been certified yet", self.s.phi_name(key))))
    }

    /// Records `target` as `(Y - Σ c' φ') / β`, where `word` evaluates to
    /// `Y = β·target + Σ c' φ'` with every `φ'` already certified.
    fn solve(&mut self, target: PhiKey, word: Word) -> Result<()> {
        let y = eval_word(self.s, &word, &self.memo)?;
        let exp = self.s.expand(&y)?;
        let beta = exp.get(&target).cloned().ok_or_else(|| {
            Error::NotInSpan(format!("{} does not reach {}", word, self.s.phi_name(&target)))
        })?;
        let mut parts = vec![word];
        for (k, c) in &exp {
            if *k != target {
                if k.2.length() >= target.2.length() && !self.names.contains_key(k) {
                    return Err(Error::NotInSpan(format!(
                        "triangular solve for {} meets uncertified {}",
                        self.s.phi_name(&target),
                        self.s.phi_name(k)
                    )));
                }
                parts.push(Word::Scale(-c, Box::new(Word::Ref(self.name(k)?))));
            }
        }
        let body = if parts.len() == 1 { parts.pop().expect("one part") } else { Word::Sum(parts) };
        let word = if beta.is_one() { body } else { Word::Scale(beta.inv()?, Box::new(body)) };
        let name = self.s.phi_name(&target);
        self.push(target, name, word)
    }

    fn idempotents(&mut self) -> Result<()> {
        let r = self.s.r();
        for lam in 0..self.s.compositions().len() {
            let mut factors = Vec::new();
            for (g, cm, cl) in self.s.idempotent_factors(lam)? {
                let denom = (&cl - &cm).inv()?;
                factors.push(Word::Sum(vec![
                    Word::Scale(denom.clone(), Box::new(Word::Psi(g, r))),
                    Word::Scale(-(&cm * &denom), Box::new(Word::One)),
                ]));
            }
            let word = if factors.is_empty() { Word::One } else { Word::Compose(factors) };
            self.push((lam, lam, self.e()), idem_name(self.s, lam), word)?;
        }
        Ok(())
    }

    /// `φ^e_{ν,μ}` from `Ψ(gen)∘id[μ]`.
    fn edge(&mut self, nu: usize, mu: usize, gen: CoidealGen) -> Result<()> {
        let key = (nu, mu, self.e());
        if self.names.contains_key(&key) {
            return Ok(());
        }
        let word = Word::Compose(vec![Word::Psi(gen, self.s.r()), Word::Ref(idem_name(self.s, mu))]);
        self.solve(key, word)
    }

    /// Breadth-first ẽ/f̃ chains from ω keeping `W_{λ_k} ⊂ W_{λ_{k+1}}`.
    fn chains(&mut self, omega: usize) -> Result<BTreeMap<usize, Vec<Step>>> {
        let s = self.s;
        let layout = s.layout();
        let mut paths: BTreeMap<usize, Vec<Step>> = BTreeMap::new();
        paths.insert(omega, Vec::new());
        let mut queue = VecDeque::from([omega]);
        while let Some(mu) = queue.pop_front() {
            let comp = s.composition(mu).clone();
            for i in 0..=s.r() {
                let moves = [
                    (comp.tilde_e(i), CoidealGen::E(i), CoidealGen::F(i)),
                    (comp.tilde_f(i), CoidealGen::F(i), CoidealGen::E(i)),
                ];
                for (next, fwd, back) in moves {
                    let Some(next) = next else { continue };
                    let Ok(nu) = s.index_of(&next) else { continue };
                    if paths.contains_key(&nu) || !layout.has(fwd) || !layout.has(back) {
                        continue;
                    }
                    if !s.gens(mu).iter().all(|g| s.gens(nu).contains(g)) {
                        continue;
                    }
                    let mut p = paths[&mu].clone();
                    p.push((mu, nu, fwd, back));
                    paths.insert(nu, p);
                    queue.push_back(nu);
                }
            }
        }
        for lam in 0..s.compositions().len() {
            if !paths.contains_key(&lam) {
                return Err(Error::NotInSpan(format!("no nested ẽ/f̃ chain from omega to {}", s.composition(lam))));
            }
        }
        Ok(paths)
    }

    /// `φ^{s_i}_{ω,ω}` for `i ∈ {0, d}` from `id[λ] Ψ(t) id[λ]` at the
    /// first `λ` with trivial `W_λ` where `t` reaches `φ^{s_i}_{λ,λ}`,
    /// transported to `ω` by `φ^e_{ω,λ} φ^{s_i}_{λ,λ} φ^e_{λ,ω}`.
    fn simple_from_t(&mut self, omega: usize, i: usize) -> Result<()> {
        let s = self.s;
        let e = self.e();
        let si = WeylElt::generator(s.d(), i)?;
        let t = match i {
            0 => CoidealGen::T0,
            i if i == s.d() => CoidealGen::Tr,
            _ => return Err(Error::NotInSpan(format!("no route to phi^s{i} at omega"))),
        };
        if !s.layout().has(t) {
            return Err(Error::NotInSpan(format!("no route to phi^s{i} at omega")));
        }
        let candidates = std::iter::once(omega).chain((0..s.compositions().len()).filter(|&l| l != omega && s.gens(l).is_empty()));
        for lam in candidates {
            let id = Word::Ref(idem_name(s, lam));
            let word = Word::Compose(vec![id.clone(), Word::Psi(t, s.r()), id]);
            let exp = s.expand(&eval_word(s, &word, &self.memo)?)?;
            if !exp.contains_key(&(lam, lam, si.clone())) {
                continue;
            }
            self.solve((lam, lam, si.clone()), word)?;
            if lam != omega {
                let word = Word::Compose(vec![
                    Word::Ref(self.name(&(omega, lam, e.clone()))?),
                    Word::Ref(self.name(&(lam, lam, si.clone()))?),
                    Word::Ref(self.name(&(lam, omega, e.clone()))?),
                ]);
                self.solve((omega, omega, si), word)?;
            }
            return Ok(());
        }
        Err(Error::NotInSpan(format!("{} reaches no phi^s{i}", t.name(s.r()))))
    }

    fn build(&mut self, max_len: usize) -> Result<()> {
        let s = self.s;
        let omega = s.omega()?;
        let e = self.e();
        self.idempotents()?;

        let paths = self.chains(omega)?;
        for (&lam, path) in &paths {
            if lam == omega {
                continue;
            }
            let mut fwd = Vec::new();
            let mut back = Vec::new();
            for &(mu, nu, g, h) in path {
                self.edge(nu, mu, g)?;
                self.edge(mu, nu, h)?;
                fwd.push(Word::Ref(self.name(&(nu, mu, e.clone()))?));
                back.push(Word::Ref(self.name(&(mu, nu, e.clone()))?));
            }
            fwd.reverse();
            if path.len() > 1 {
                self.solve((lam, omega, e.clone()), Word::Compose(fwd))?;
                self.solve((omega, lam, e.clone()), Word::Compose(back))?;
            }
        }

        // φ^{s_i}_{ω,ω} from a round trip through ν with W_ν = <s_i>, or
        // from a t-generator sandwiched between idempotents.
        for i in 0..=s.d() {
            let si = WeylElt::generator(s.d(), i)?;
            let via = (0..s.compositions().len()).find(|&nu| s.gens(nu) == [i]);
            match via {
                Some(nu) => {
                    let word = Word::Compose(vec![
                        Word::Ref(self.name(&(omega, nu, e.clone()))?),
                        Word::Ref(self.name(&(nu, omega, e.clone()))?),
                    ]);
                    self.solve((omega, omega, si), word)?;
                }
                None => self.simple_from_t(omega, i)?,
            }
        }

        // Longer φ^w_{ω,ω} as products along reduced words.
        let mut ws = weyl::elements_upto(s.d(), max_len);
        ws.sort_by_key(|w| w.length());
        for w in ws.into_iter().filter(|w| w.length() >= 2) {
            let factors = w
                .reduced_word()
                .iter()
                .map(|&i| Ok(Word::Ref(self.name(&(omega, omega, WeylElt::generator(s.d(), i)?))?)))
                .collect::<Result<Vec<_>>>()?;
            self.solve((omega, omega, w), Word::Compose(factors))?;
        }

        // Every other φ^g_{λ,μ} by sandwiching φ^g_{ω,ω}.
        let n = s.compositions().len();
        for lam in 0..n {
            for mu in 0..n {
                let mut reps = weyl::double_coset_reps_upto(s.d(), s.gens(lam), s.gens(mu), max_len)?;
                reps.sort_by_key(|g| g.length());
                for g in reps {
                    let key = (lam, mu, g.clone());
                    if self.names.contains_key(&key) {
                        continue;
                    }
                    let word = Word::Compose(vec![
                        Word::Ref(self.name(&(lam, omega, e.clone()))?),
                        Word::Ref(self.name(&(omega, omega, g))?),
                        Word::Ref(self.name(&(omega, mu, e.clone()))?),
                    ]);
                    self.solve(key, word)?;
                }
            }
        }
        Ok(())
    }
}

impl Certificate {
    /// Runs the construction for all `φ^g_{λ,μ}` with `ℓ(g) ≤ max_len`.
    pub fn build(s: &SchurAlgebra, max_len: usize) -> Result<Self> {
        let mut b = Builder {
            s,
            cert: Certificate::default(),
            memo: HashMap::new(),
            names: HashMap::new(),
        };
        b.build(max_len)?;
        Ok(b.cert)
    }

    /// Re-evaluates every word from scratch and compares it with the
    /// target computed from its definition.
    pub fn verify(&self, s: &SchurAlgebra) -> Result<Vec<RecordCheck>> {
        let mut memo = HashMap::new();
        let mut out = Vec::new();
        for rec in &self.records {
            let value = eval_word(s, &rec.word, &memo)?;
            let (lam, mu, g) = &rec.target;
            let ok = value == s.phi(*lam, *mu, g)?;
            memo.insert(rec.name.clone(), value);
            out.push(RecordCheck { name: rec.name.clone(), ok });
        }
        Ok(out)
    }

    /// Targets `φ^g_{λ,μ}` with `ℓ(g) ≤ max_len` that have no record.
    pub fn missing(&self, s: &SchurAlgebra, max_len: usize) -> Result<Vec<String>> {
        let have: std::collections::HashSet<&PhiKey> = self.records.iter().map(|r| &r.target).collect();
        let n = s.compositions().len();
        let mut out = Vec::new();
        for lam in 0..n {
            for mu in 0..n {
                for g in weyl::double_coset_reps_upto(s.d(), s.gens(lam), s.gens(mu), max_len)? {
                    let key = (lam, mu, g);
                    if !have.contains(&key) {
                        out.push(s.phi_name(&key));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self, s: &SchurAlgebra) -> serde_json::Value {
        json!({
            "r": s.r(),
            "d": s.d(),
            "variant": s.variant().name(),
            "records": self.records.iter().map(|r| json!({
                "name": r.name,
                "target": s.phi_name(&r.target),
                "word": r.word.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coideal::Variant;
    use crate::scalar::Params;

    #[test]
    fn small_certificate_verifies() {
        let s = SchurAlgebra::new(2, 1, Variant::JJ, Params::generic()).unwrap();
        let cert = Certificate::build(&s, 3).unwrap();
        assert!(cert.missing(&s, 3).unwrap().is_empty());
        assert!(cert.verify(&s).unwrap().iter().all(|c| c.ok));
    }
}
