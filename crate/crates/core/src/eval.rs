//! Evaluation of parsed expressions into Hecke elements, tensor vectors and
//! coideal operators, and of Schur-algebra expressions.

use crate::coideal::{CoidealAction, CoidealGen, OpSum};
use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::scalar::{eval_scalar_expr, Scalar};
use crate::schur::{Composition, SchurAlgebra, SchurElt};
use crate::tensor::{TensorModule, TensorVec};
use crate::weyl::WeylElt;

fn parse_err(input: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        pos: 0,
        message: message.into(),
    }
}

/// Tries to read a subtree as a pure scalar.
fn as_scalar(e: &Expr) -> Option<Scalar> {
    eval_scalar_expr(e).ok()
}

/// Evaluates `coef*T[s0.s1] + X[1]^-1*T[s0] + ...` in `alg`.
pub fn eval_hecke(alg: &HeckeAlgebra, text: &str) -> Result<HeckeElt> {
    let e = expr::parse(text)?;
    hecke_expr(alg, &e, text)
}

fn hecke_expr(alg: &HeckeAlgebra, e: &Expr, text: &str) -> Result<HeckeElt> {
    if let Some(c) = as_scalar(e) {
        return Ok(alg.scalar(alg.params().specialize(&c)?));
    }
    match e {
        Expr::Indexed(name, raw) => match name.as_str() {
            "T" => alg.basis(&WeylElt::parse(alg.rank(), raw)?),
            "X" => {
                let a = expr::eval_index(raw, &[("d", alg.rank() as i64)])?;
                let a = usize::try_from(a).map_err(|_| parse_err(text, "X index must be positive"))?;
                alg.x(a, 1)
            }
            _ => Err(parse_err(text, format!("unknown Hecke symbol {name}[..]"))),
        },
        Expr::Neg(a) => Ok(-&hecke_expr(alg, a, text)?),
        Expr::Add(a, b) => Ok(&hecke_expr(alg, a, text)? + &hecke_expr(alg, b, text)?),
        Expr::Sub(a, b) => Ok(&hecke_expr(alg, a, text)? - &hecke_expr(alg, b, text)?),
        Expr::Mul(a, b) => alg.mul(&hecke_expr(alg, a, text)?, &hecke_expr(alg, b, text)?),
        Expr::Div(a, b) => {
            let c = as_scalar(b).ok_or_else(|| parse_err(text, "can only divide by a scalar"))?;
            let c = alg.params().specialize(&c)?;
            Ok(hecke_expr(alg, a, text)?.scale(&c.inv()?))
        }
        Expr::Pow(a, k) => hecke_pow(alg, a, *k, text),
        _ => Err(parse_err(text, "unsupported Hecke expression")),
    }
}

fn hecke_pow(alg: &HeckeAlgebra, base: &Expr, k: i64, text: &str) -> Result<HeckeElt> {
    let k32 = i32::try_from(k).map_err(|_| parse_err(text, "exponent too large"))?;
    if k >= 0 {
        return alg.pow(&hecke_expr(alg, base, text)?, k as u32);
    }
    // Negative powers only for invertible atoms: X[a] and simple T[s_i].
    let inv = match base {
        Expr::Indexed(name, raw) if name == "X" => {
            let a = expr::eval_index(raw, &[("d", alg.rank() as i64)])?;
            let a = usize::try_from(a).map_err(|_| parse_err(text, "X index must be positive"))?;
            return alg.x(a, k32);
        }
        Expr::Indexed(name, raw) if name == "T" => {
            let w = WeylElt::parse(alg.rank(), raw)?;
            let word = w.reduced_word();
            let mut h = alg.one();
            for &i in word.iter().rev() {
                h = alg.mul(&h, &alg.generator_inverse(i)?)?;
            }
            h
        }
        _ => return Err(parse_err(text, "negative powers need X[a] or T[word]")),
    };
    alg.pow(&inv, (-k) as u32)
}

/// Value produced while evaluating tensor-module expressions.
enum Val {
    Scalar(Scalar),
    Vec(TensorVec),
    Op(OpSum<CoidealGen>),
    Hecke(HeckeElt),
}

/// Evaluates expressions such as `e_r . v[r+1]`, `M[1,2]*T[s1]` or
/// `(e_0*f_0 - f_0*e_0) . M[0,1]` on `module`. The symbol `r` may appear
/// inside brackets and generator indices.
pub fn eval_tensor(module: &TensorModule, text: &str) -> Result<TensorVec> {
    let e = expr::parse(text)?;
    let action = CoidealAction::new(module);
    match tensor_expr(&action, &e, text)? {
        Val::Vec(v) => Ok(v),
        Val::Scalar(c) if c.is_zero() => Ok(TensorVec::zero()),
        _ => Err(parse_err(text, "expression does not evaluate to a vector")),
    }
}

fn vars(module: &TensorModule) -> [(&'static str, i64); 3] {
    [("r", module.r() as i64), ("n", module.n()), ("d", module.d() as i64)]
}

fn tensor_expr(a: &CoidealAction, e: &Expr, text: &str) -> Result<Val> {
    let m = a.module();
    if let Some(c) = as_scalar(e) {
        return Ok(Val::Scalar(m.params().specialize(&c)?));
    }
    let one = Scalar::one();
    Ok(match e {
        Expr::Sym(s) => {
            let g = CoidealGen::parse(s, m.r())?;
            if !a.layout().has(g) {
                return Err(parse_err(text, format!("{s} is not a generator of variant {}", m.variant())));
            }
            Val::Op(vec![(one, vec![g])])
        }
        Expr::Indexed(name, raw) => match name.as_str() {
            "v" | "M" => {
                let f = expr::split_top(raw, ',')
                    .into_iter()
                    .map(|x| expr::eval_index(x, &vars(m)))
                    .collect::<Result<Vec<_>>>()?;
                Val::Vec(m.basis(&f)?)
            }
            "T" | "X" => Val::Hecke(hecke_expr(m.hecke(), e, text)?),
            _ => return Err(parse_err(text, format!("unknown symbol {name}[..]"))),
        },
        Expr::Neg(x) => scale(tensor_expr(a, x, text)?, &-&one),
        Expr::Add(x, y) => add(tensor_expr(a, x, text)?, tensor_expr(a, y, text)?, &one, text)?,
        Expr::Sub(x, y) => add(tensor_expr(a, x, text)?, tensor_expr(a, y, text)?, &-&one, text)?,
        Expr::Div(x, y) => {
            let c = as_scalar(y).ok_or_else(|| parse_err(text, "can only divide by a scalar"))?;
            scale(tensor_expr(a, x, text)?, &m.params().specialize(&c)?.inv()?)
        }
        Expr::Mul(x, y) => {
            let (x, y) = (tensor_expr(a, x, text)?, tensor_expr(a, y, text)?);
            match (x, y) {
                (Val::Scalar(c), v) | (v, Val::Scalar(c)) => scale(v, &c),
                (Val::Op(p), Val::Op(q)) => {
                    let mut out = Vec::new();
                    for (c1, w1) in &p {
                        for (c2, w2) in &q {
                            out.push((c1 * c2, [w1.as_slice(), w2.as_slice()].concat()));
                        }
                    }
                    Val::Op(out)
                }
                (Val::Vec(v), Val::Hecke(h)) => Val::Vec(m.act_hecke(&v, &h)?),
                (Val::Hecke(g), Val::Hecke(h)) => Val::Hecke(m.hecke().mul(&g, &h)?),
                _ => return Err(parse_err(text, "unsupported product")),
            }
        }
        Expr::Pow(x, k) => match tensor_expr(a, x, text)? {
            Val::Op(p) if *k >= 0 => {
                let mut acc: OpSum<CoidealGen> = vec![(one, vec![])];
                for _ in 0..*k {
                    acc = acc
                        .iter()
                        .flat_map(|(c1, w1)| p.iter().map(move |(c2, w2)| (c1 * c2, [w1.as_slice(), w2.as_slice()].concat())))
                        .collect();
                }
                Val::Op(acc)
            }
            Val::Op(p) if p.len() == 1 && p[0].1.len() == 1 => {
                let g = p[0].1[0].inverse().ok_or_else(|| parse_err(text, "generator is not invertible"))?;
                Val::Op(vec![(p[0].0.inv()?, vec![g; (-k) as usize])])
            }
            Val::Hecke(_) => Val::Hecke(hecke_pow(m.hecke(), x, *k, text)?),
            _ => return Err(parse_err(text, "unsupported power")),
        },
        Expr::Act(x, y) => {
            let op = tensor_expr(a, x, text)?;
            let v = match tensor_expr(a, y, text)? {
                Val::Vec(v) => v,
                _ => return Err(parse_err(text, "right side of '.' must be a vector")),
            };
            match op {
                Val::Op(s) => Val::Vec(a.act_sum(&s, &v)?),
                Val::Scalar(c) => Val::Vec(v.scale(&c)),
                _ => return Err(parse_err(text, "left side of '.' must be a coideal operator")),
            }
        }
        _ => return Err(parse_err(text, "unsupported expression")),
    })
}

fn scale(v: Val, c: &Scalar) -> Val {
    match v {
        Val::Scalar(s) => Val::Scalar(&s * c),
        Val::Vec(v) => Val::Vec(v.scale(c)),
        Val::Op(p) => Val::Op(p.into_iter().map(|(s, w)| (&s * c, w)).collect()),
        Val::Hecke(h) => Val::Hecke(h.scale(c)),
    }
}

fn add(x: Val, y: Val, sign: &Scalar, text: &str) -> Result<Val> {
    Ok(match (x, y) {
        (Val::Vec(u), Val::Vec(v)) => Val::Vec({
            let mut u = u;
            u.add_scaled(&v, sign);
            u
        }),
        (Val::Op(p), Val::Op(q)) => Val::Op(p.into_iter().chain(q.into_iter().map(|(c, w)| (&c * sign, w))).collect()),
        (Val::Op(p), Val::Scalar(c)) => Val::Op(p.into_iter().chain([(&c * sign, vec![])]).collect()),
        (Val::Scalar(c), Val::Op(q)) => Val::Op([(c, vec![])].into_iter().chain(q.into_iter().map(|(c, w)| (&c * sign, w))).collect()),
        (Val::Hecke(g), Val::Hecke(h)) => Val::Hecke(&g + &h.scale(sign)),
        _ => return Err(parse_err(text, "cannot add values of different kinds")),
    })
}

/// Value produced while evaluating Schur-algebra expressions.
enum SVal {
    Scalar(Scalar),
    Elt(SchurElt),
}

impl SVal {
    fn into_elt(self, s: &SchurAlgebra) -> Result<SchurElt> {
        match self {
            SVal::Elt(x) => Ok(x),
            SVal::Scalar(c) => Ok(s.identity()?.scale(&c)),
        }
    }
}

/// Evaluates expressions such as `Psi[e_0]*id[(0,1,1,0,0)]`,
/// `phi[(1,0,1,0,0);(0,1,1,0,0);e] - q*Psi[h_1]` or `f_r*e_r` in the Schur
/// algebra. `*` is composition and bare generator names mean `Psi[..]`.
pub fn eval_schur(s: &SchurAlgebra, text: &str) -> Result<SchurElt> {
    let e = expr::parse(text)?;
    schur_expr(s, &e, text)?.into_elt(s)
}

fn schur_gen(s: &SchurAlgebra, name: &str, text: &str) -> Result<SchurElt> {
    let g = CoidealGen::parse(name, s.r())?;
    if !s.layout().has(g) {
        return Err(parse_err(text, format!("{name} is not a generator of variant {}", s.variant())));
    }
    s.psi(g)
}

fn schur_expr(s: &SchurAlgebra, e: &Expr, text: &str) -> Result<SVal> {
    if let Some(c) = as_scalar(e) {
        return Ok(SVal::Scalar(s.params().specialize(&c)?));
    }
    Ok(match e {
        Expr::Sym(name) => SVal::Elt(schur_gen(s, name, text)?),
        Expr::Indexed(name, raw) => SVal::Elt(match name.as_str() {
            "Psi" => schur_gen(s, raw.trim(), text)?,
            "id" => {
                let lam = s.index_of(&Composition::parse(raw)?)?;
                s.phi(lam, lam, &WeylElt::identity(s.d()))?
            }
            "phi" => {
                let parts = expr::split_top(raw, ';');
                if parts.len() != 3 {
                    return Err(parse_err(text, "phi needs [lambda;mu;g]"));
                }
                let lam = s.index_of(&Composition::parse(parts[0])?)?;
                let mu = s.index_of(&Composition::parse(parts[1])?)?;
                s.phi(lam, mu, &WeylElt::parse(s.d(), parts[2])?)?
            }
            _ => return Err(parse_err(text, format!("unknown symbol {name}[..]"))),
        }),
        Expr::Neg(x) => match schur_expr(s, x, text)? {
            SVal::Scalar(c) => SVal::Scalar(-&c),
            SVal::Elt(a) => SVal::Elt(a.scale(&-&Scalar::one())),
        },
        Expr::Add(x, y) | Expr::Sub(x, y) => {
            let sign = if matches!(e, Expr::Add(..)) { Scalar::one() } else { -&Scalar::one() };
            let mut a = schur_expr(s, x, text)?.into_elt(s)?;
            a.add_scaled(&schur_expr(s, y, text)?.into_elt(s)?, &sign);
            SVal::Elt(a)
        }
        Expr::Mul(x, y) => match (schur_expr(s, x, text)?, schur_expr(s, y, text)?) {
            (SVal::Scalar(c), SVal::Scalar(d)) => SVal::Scalar(&c * &d),
            (SVal::Scalar(c), SVal::Elt(a)) | (SVal::Elt(a), SVal::Scalar(c)) => SVal::Elt(a.scale(&c)),
            (SVal::Elt(a), SVal::Elt(b)) => SVal::Elt(s.compose(&a, &b)?),
        },
        Expr::Div(x, y) => {
            let c = as_scalar(y).ok_or_else(|| parse_err(text, "can only divide by a scalar"))?;
            let c = s.params().specialize(&c)?.inv()?;
            SVal::Elt(schur_expr(s, x, text)?.into_elt(s)?.scale(&c))
        }
        Expr::Pow(x, k) => {
            let base = match (x.as_ref(), *k < 0) {
                (Expr::Sym(name), true) => {
                    let g = CoidealGen::parse(name, s.r())?;
                    let inv = g.inverse().ok_or_else(|| parse_err(text, "generator is not invertible"))?;
                    schur_gen(s, &inv.name(s.r()), text)?
                }
                (_, true) => return Err(parse_err(text, "negative powers need an invertible generator")),
                _ => schur_expr(s, x, text)?.into_elt(s)?,
            };
            let mut acc = s.identity()?;
            for _ in 0..k.unsigned_abs() {
                acc = s.compose(&base, &acc)?;
            }
            SVal::Elt(acc)
        }
        _ => return Err(parse_err(text, "unsupported Schur expression")),
    })
}
