//! Quantum affine `gl_n` acting on `V^{⊗d}` and the coideal subalgebras
//! embedded in it, for the four involution types `jj`, `ji`, `ij`, `ii`.
//!
//! The variants other than `jj` work on a subspace of `V` that omits the
//! residue `r+1` (`ji`), the residue `0` (`ij`) or both (`ii`). Generators
//! of quantum `gl` are then relabelled so that `E_i`/`F_i` step between
//! consecutive allowed residues.

use crate::error::{Error, Result};
use crate::expr;
use crate::scalar::{Params, Scalar};
use crate::tensor::{TensorModule, TensorVec};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub enum Variant {
    #[default]
    JJ,
    JI,
    IJ,
    II,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::JJ, Variant::JI, Variant::IJ, Variant::II];

    pub fn name(self) -> &'static str {
        match self {
            Variant::JJ => "jj",
            Variant::JI => "ji",
            Variant::IJ => "ij",
            Variant::II => "ii",
        }
    }

    fn drops_top(self) -> bool {
        matches!(self, Variant::JI | Variant::II)
    }

    fn drops_zero(self) -> bool {
        matches!(self, Variant::IJ | Variant::II)
    }

    /// Whether residue `res` (in `0..n`) spans the variant's subspace.
    pub fn allows_residue(self, res: i64, r: usize) -> bool {
        !(self.drops_top() && res == r as i64 + 1) && !(self.drops_zero() && res == 0)
    }

    /// Parameter preconditions of the duality statements.
    pub fn check_rd(self, r: usize, d: usize) -> Result<()> {
        if d == 0 || r < d {
            return Err(Error::InvalidParameters(format!("need r >= d >= 1, got r={r}, d={d}")));
        }
        if self == Variant::II && (r < 2 || d < 2) {
            return Err(Error::InvalidParameters(format!(
                "variant ii needs r >= d >= 2, got r={r}, d={d}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jj" => Ok(Variant::JJ),
            "ji" => Ok(Variant::JI),
            "ij" => Ok(Variant::IJ),
            "ii" => Ok(Variant::II),
            _ => Err(Error::InvalidParameters(format!("unknown variant {s:?}"))),
        }
    }
}

/// Generators of quantum affine `gl_n`; labels are residues mod `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlGen {
    E(usize),
    F(usize),
    /// `D_a^e`.
    D(usize, i32),
    /// `K_i^e`.
    K(usize, i32),
}

/// Generators of the coideal algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoidealGen {
    E(usize),
    F(usize),
    /// `h_a^e`, `jj` only.
    H(usize, i32),
    /// `k_i^e`.
    K(usize, i32),
    T0,
    Tr,
}

impl CoidealGen {
    pub fn name(&self, r: usize) -> String {
        let idx = |i: usize| if i == r && r > 0 { "r".to_string() } else { i.to_string() };
        let pw = |e: i32| if e == 1 { String::new() } else { format!("^{e}") };
        match *self {
            CoidealGen::E(i) => format!("e_{}", idx(i)),
            CoidealGen::F(i) => format!("f_{}", idx(i)),
            CoidealGen::H(a, e) => format!("h_{a}{}", pw(e)),
            CoidealGen::K(i, e) => format!("k_{}{}", idx(i), pw(e)),
            CoidealGen::T0 => "t_0".into(),
            CoidealGen::Tr => "t_r".into(),
        }
    }

    /// Parses `e_0`, `f_r`, `h_2`, `k_1`, `t_0`, `t_r`; indices may use `r`.
    pub fn parse(text: &str, r: usize) -> Result<Self> {
        let bad = || Error::Parse {
            input: text.to_string(),
            pos: 0,
            message: "expected a coideal generator such as e_0, f_r, k_1, h_2, t_0".into(),
        };
        let (head, idx) = text.split_once('_').ok_or_else(bad)?;
        let i = expr::eval_index(idx, &[("r", r as i64)])?;
        let i = usize::try_from(i).map_err(|_| bad())?;
        Ok(match head {
            "e" => CoidealGen::E(i),
            "f" => CoidealGen::F(i),
            "h" => CoidealGen::H(i, 1),
            "k" => CoidealGen::K(i, 1),
            "t" if i == 0 => CoidealGen::T0,
            "t" if i == r => CoidealGen::Tr,
            _ => return Err(bad()),
        })
    }

    pub fn inverse(&self) -> Option<Self> {
        match *self {
            CoidealGen::H(a, e) => Some(CoidealGen::H(a, -e)),
            CoidealGen::K(i, e) => Some(CoidealGen::K(i, -e)),
            _ => None,
        }
    }
}

/// Linear combination of words; a word lists operators as written, so the
/// rightmost one acts first.
pub type OpSum<G> = Vec<(Scalar, Vec<G>)>;

/// Residue bookkeeping for a variant.
#[derive(Clone, Debug)]
pub struct Layout {
    pub r: usize,
    pub n: i64,
    pub variant: Variant,
}

impl Layout {
    pub fn new(r: usize, variant: Variant) -> Self {
        Layout {
            r,
            n: 2 * r as i64 + 2,
            variant,
        }
    }

    fn allowed(&self, m: i64) -> bool {
        self.variant.allows_residue(m.rem_euclid(self.n), self.r)
    }

    /// Smallest allowed integer above `m`.
    pub fn next(&self, m: i64) -> i64 {
        let mut x = m + 1;
        while !self.allowed(x) {
            x += 1;
        }
        x
    }

    /// Largest allowed integer below `m`.
    pub fn prev(&self, m: i64) -> i64 {
        let mut x = m - 1;
        while !self.allowed(x) {
            x -= 1;
        }
        x
    }

    /// Residue that `F_i` raises from; `E_i` lowers back onto it.
    pub fn lower(&self, i: usize) -> i64 {
        if i == 0 && self.variant.drops_zero() {
            self.n - 1
        } else {
            i as i64
        }
    }

    fn res(&self, x: i64) -> i64 {
        x.rem_euclid(self.n)
    }

    /// Label `-i-1` reduced mod `n`.
    pub fn neg_label(&self, i: usize) -> usize {
        (-(i as i64) - 1).rem_euclid(self.n) as usize
    }

    /// Single-factor action of a quantum `gl` generator on `v_m`.
    pub fn act_single(&self, g: GlGen, m: i64, p: &Params) -> Option<(i64, Scalar)> {
        let dpow = |a: i64, e: i32| {
            if self.res(m) == self.res(a) {
                p.mono(e, 0, 0)
            } else {
                Scalar::one()
            }
        };
        match g {
            GlGen::E(i) => {
                let lo = self.lower(i);
                let hi = self.res(self.next(lo));
                (self.res(m) == hi).then(|| (self.prev(m), Scalar::one()))
            }
            GlGen::F(i) => {
                let lo = self.lower(i);
                (self.res(m) == self.res(lo)).then(|| (self.next(m), Scalar::one()))
            }
            GlGen::D(a, e) => Some((m, dpow(a as i64, e))),
            GlGen::K(i, e) => {
                let lo = self.lower(i);
                let hi = self.next(lo);
                Some((m, &dpow(lo, e) * &dpow(hi, -e)))
            }
        }
    }

    /// Grouplike eigenvalue of `K_i^e` on a basis tensor.
    fn k_on(&self, i: usize, e: i32, f: &[i64], p: &Params) -> Scalar {
        let mut c = Scalar::one();
        for &m in f {
            c *= &self.act_single(GlGen::K(i, e), m, p).expect("diagonal").1;
        }
        c
    }

    /// Action on `V^{⊗d}` through the iterated coproduct
    /// `Δ(E) = Σ 1..1 ⊗ E ⊗ K^{-1}..K^{-1}`, `Δ(F) = Σ K..K ⊗ F ⊗ 1..1`.
    pub fn act_tensor_basis(&self, g: GlGen, f: &[i64], p: &Params) -> TensorVec {
        let mut out = TensorVec::zero();
        match g {
            GlGen::D(..) | GlGen::K(..) => {
                let mut c = Scalar::one();
                for &m in f {
                    c *= &self.act_single(g, m, p).expect("diagonal").1;
                }
                out.add_term(f, &c);
            }
            GlGen::E(i) => {
                for k in 0..f.len() {
                    if let Some((m, c)) = self.act_single(g, f[k], p) {
                        let mut h = f.to_vec();
                        h[k] = m;
                        let c = &c * &self.k_on(i, -1, &f[k + 1..], p);
                        out.add_term(&h, &c);
                    }
                }
            }
            GlGen::F(i) => {
                for k in 0..f.len() {
                    if let Some((m, c)) = self.act_single(g, f[k], p) {
                        let mut h = f.to_vec();
                        h[k] = m;
                        let c = &c * &self.k_on(i, 1, &f[..k], p);
                        out.add_term(&h, &c);
                    }
                }
            }
        }
        out
    }

    /// Whether a coideal generator exists for this variant.
    pub fn has(&self, g: CoidealGen) -> bool {
        let r = self.r;
        let (lo, hi) = match self.variant {
            Variant::JJ => (0, r),
            Variant::JI => (0, r - 1),
            Variant::IJ => (1, r),
            Variant::II => (1, r - 1),
        };
        match g {
            CoidealGen::E(i) | CoidealGen::F(i) | CoidealGen::K(i, _) => lo <= i && i <= hi,
            CoidealGen::H(a, _) => self.variant == Variant::JJ && a <= r + 1,
            CoidealGen::T0 => self.variant.drops_zero(),
            CoidealGen::Tr => self.variant.drops_top(),
        }
    }

    /// Generators of the variant's coideal algebra (without inverses).
    pub fn generators(&self) -> Vec<CoidealGen> {
        let mut out = Vec::new();
        for i in 0..=self.r {
            for g in [CoidealGen::E(i), CoidealGen::F(i), CoidealGen::K(i, 1)] {
                if self.has(g) {
                    out.push(g);
                }
            }
        }
        if self.variant == Variant::JJ {
            for a in 0..=self.r + 1 {
                out.push(CoidealGen::H(a, 1));
            }
        }
        for g in [CoidealGen::T0, CoidealGen::Tr] {
            if self.has(g) {
                out.push(g);
            }
        }
        out
    }

    /// Image of a coideal generator in quantum affine `gl_n`.
    pub fn embedding(&self, g: CoidealGen, p: &Params) -> Result<OpSum<GlGen>> {
        if !self.has(g) {
            return Err(Error::InvalidParameters(format!(
                "generator {} does not exist for variant {} with r={}",
                g.name(self.r),
                self.variant,
                self.r
            )));
        }
        let r = self.r;
        let one = Scalar::one();
        let neg = |i: usize| self.neg_label(i);
        let qmq = p.q_minus_qinv();
        use GlGen::*;
        Ok(match g {
            CoidealGen::H(a, e) => {
                vec![(one, vec![D(a, e), D((-(a as i64)).rem_euclid(self.n) as usize, e)])]
            }
            CoidealGen::K(i, e) => vec![(one, vec![K(i, e), K(neg(i), -e)])],
            CoidealGen::E(i) => {
                let c = if i == 0 {
                    p.mono(0, -1, 0)
                } else if i == r {
                    p.mono(-1, 0, 0)
                } else {
                    one.clone()
                };
                vec![(one, vec![E(i)]), (c, vec![F(neg(i)), K(i, -1)])]
            }
            CoidealGen::F(i) => {
                let c = if i == 0 {
                    p.mono(-1, 0, 1)
                } else if i == r {
                    p.mono(0, 1, -1)
                } else {
                    one.clone()
                };
                vec![(one, vec![E(neg(i))]), (c, vec![F(i), K(neg(i), -1)])]
            }
            CoidealGen::Tr => vec![
                (one.clone(), vec![E(r)]),
                (p.mono(1, 1, -1), vec![F(r), K(r, -1)]),
                ((&one - &p.mono(0, 1, -1)).checked_div(&qmq)?, vec![K(r, -1)]),
            ],
            CoidealGen::T0 => vec![
                (one, vec![E(0)]),
                (p.mono(1, -1, 1), vec![F(0), K(0, -1)]),
                ((&p.q1 - &p.mono(0, -1, 0)).checked_div(&qmq)?, vec![K(0, -1)]),
            ],
        })
    }
}

impl Layout {
    /// Closed-form action of `h_a`, `e_i`, `f_i` on a single `v_j` for the
    /// `jj` algebra, written case by case.
    pub fn jj_closed_form(&self, g: CoidealGen, j: i64, p: &Params) -> Result<TensorVec> {
        let (r, n) = (self.r as i64, self.n);
        let m = |x: i64| x.rem_euclid(n);
        let v = |k: i64| TensorVec::basis(vec![k]);
        let zero = TensorVec::zero();
        Ok(match g {
            CoidealGen::H(a, 1) => {
                let a = a as i64;
                if (a == 0 || a == r + 1) && m(a) == m(j) {
                    v(j).scale(&p.mono(2, 0, 0))
                } else if a != 0 && a != r + 1 && (m(a) == m(j) || m(-a) == m(j)) {
                    v(j).scale(&p.q)
                } else {
                    v(j)
                }
            }
            CoidealGen::E(0) => match m(j) {
                1 => v(j - 1),
                x if x == n - 1 => v(j + 1).scale(&p.mono(0, -1, 0)),
                _ => zero,
            },
            CoidealGen::F(0) => {
                if m(j) == 0 { &v(j + 1).scale(&p.q1) + &v(j - 1) } else { zero }
            }
            CoidealGen::E(i) if i as i64 == r => {
                if m(j) == r + 1 { &v(j - 1) + &v(j + 1) } else { zero }
            }
            CoidealGen::F(i) if i as i64 == r => match m(j) {
                x if x == r => v(j + 1).scale(&p.mono(0, 1, -1)),
                x if x == m(r + 2) => v(j - 1),
                _ => zero,
            },
            CoidealGen::E(i) => {
                let i = i as i64;
                if m(j) == m(i + 1) {
                    v(j - 1)
                } else if m(-j) == m(i + 1) {
                    v(j + 1)
                } else {
                    zero
                }
            }
            CoidealGen::F(i) => {
                let i = i as i64;
                if m(j) == m(i) {
                    v(j + 1)
                } else if m(-j) == m(i) {
                    v(j - 1)
                } else {
                    zero
                }
            }
            _ => return Err(Error::Unsupported(format!("no closed form for {}", g.name(self.r)))),
        })
    }

    /// Closed-form single-factor action of `t_r` or `t_0` on `v_f`, as
    /// displayed for the `ji` and `ij` variants.
    pub fn t_closed_form(&self, t: CoidealGen, f: i64, p: &Params) -> Result<TensorVec> {
        let (r, n) = (self.r as i64, self.n);
        let qmq = p.q_minus_qinv();
        let one = Scalar::one();
        let v = |g: i64| TensorVec::basis(vec![g]);
        Ok(match t {
            CoidealGen::Tr => {
                let c = (&one - &p.mono(0, 1, -1)).checked_div(&qmq)?;
                let k = (f + r).rem_euclid(n) - r;
                let j = (f - k) / n;
                if k == r {
                    &v(-r + (j + 1) * n).scale(&p.mono(0, 1, -1)) + &v(f).scale(&(&c * &p.mono(-1, 0, 0)))
                } else if k == -r {
                    &v(r + (j - 1) * n) + &v(f).scale(&(&c * &p.q))
                } else {
                    v(f).scale(&c)
                }
            }
            CoidealGen::T0 => {
                let c = (&p.q1 - &p.mono(0, -1, 0)).checked_div(&qmq)?;
                match f.rem_euclid(n) {
                    1 => &v(f - 2) + &v(f).scale(&(&c * &p.q)),
                    m if m == n - 1 => &v(f + 2).scale(&p.mono(0, -1, 1)) + &v(f).scale(&(&c * &p.mono(-1, 0, 0))),
                    _ => v(f).scale(&c),
                }
            }
            _ => return Err(Error::Unsupported(format!("no closed form for {}", t.name(self.r)))),
        })
    }
}

/// Left action of a coideal algebra on the tensor module.
pub struct CoidealAction<'a> {
    module: &'a TensorModule,
    layout: Layout,
}

impl<'a> CoidealAction<'a> {
    pub fn new(module: &'a TensorModule) -> Self {
        CoidealAction {
            layout: Layout::new(module.r(), module.variant()),
            module,
        }
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn module(&self) -> &TensorModule {
        self.module
    }

    pub fn act_gl(&self, g: GlGen, v: &TensorVec) -> Result<TensorVec> {
        let p = self.module.params();
        v.map_linear(|f| Ok(self.layout.act_tensor_basis(g, f, p)))
    }

    pub fn act(&self, g: CoidealGen, v: &TensorVec) -> Result<TensorVec> {
        let p = self.module.params();
        let emb = self.layout.embedding(g, p)?;
        let mut out = TensorVec::zero();
        for (c, word) in &emb {
            let mut w = v.clone();
            for &x in word.iter().rev() {
                w = self.act_gl(x, &w)?;
            }
            out.add_scaled(&w, c);
        }
        Ok(out)
    }

    /// Applies a word as written (rightmost generator first).
    pub fn act_word(&self, word: &[CoidealGen], v: &TensorVec) -> Result<TensorVec> {
        let mut w = v.clone();
        for &g in word.iter().rev() {
            w = self.act(g, &w)?;
        }
        Ok(w)
    }

    pub fn act_sum(&self, s: &OpSum<CoidealGen>, v: &TensorVec) -> Result<TensorVec> {
        let mut out = TensorVec::zero();
        for (c, word) in s {
            out.add_scaled(&self.act_word(word, v)?, c);
        }
        Ok(out)
    }
}

/// A relation `lhs = rhs` between noncommutative polynomials in the
/// coideal generators.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: OpSum<CoidealGen>,
    pub rhs: OpSum<CoidealGen>,
}

fn rel(name: impl Into<String>, lhs: OpSum<CoidealGen>, rhs: OpSum<CoidealGen>) -> Relation {
    Relation {
        name: name.into(),
        lhs,
        rhs,
    }
}

fn w1(c: Scalar, w: &[CoidealGen]) -> (Scalar, Vec<CoidealGen>) {
    (c, w.to_vec())
}

fn cartan(i: usize, j: usize) -> i32 {
    if i == j {
        2
    } else if i + 1 == j || j + 1 == i {
        -1
    } else {
        0
    }
}

/// `x^2 y + y x^2 = (q + q^{-1}) x y x + extra`.
fn serre(name: String, x: CoidealGen, y: CoidealGen, p: &Params, extra: OpSum<CoidealGen>) -> Relation {
    let one = Scalar::one();
    let qq = &p.q + &p.mono(-1, 0, 0);
    let mut rhs = vec![w1(qq, &[x, y, x])];
    rhs.extend(extra);
    rel(name, vec![w1(one.clone(), &[x, x, y]), w1(one, &[y, x, x])], rhs)
}

fn commutator(name: String, x: CoidealGen, y: CoidealGen) -> Relation {
    let one = Scalar::one();
    rel(name, vec![w1(one.clone(), &[x, y])], vec![w1(one, &[y, x])])
}

/// `e_i f_j - f_j e_i = δ_ij (K - K^{-1}) / (q - q^{-1})` with `K` a word.
fn ef_relation(p: &Params, i: usize, j: usize, k: &[CoidealGen], kinv: &[CoidealGen], r: usize) -> Result<Relation> {
    let one = Scalar::one();
    let (ei, fj) = (CoidealGen::E(i), CoidealGen::F(j));
    let lhs = vec![w1(one.clone(), &[ei, fj]), w1(-&one, &[fj, ei])];
    let rhs = if i == j {
        let c = one.checked_div(&p.q_minus_qinv())?;
        vec![w1(c.clone(), k), w1(-c, kinv)]
    } else {
        Vec::new()
    };
    Ok(rel(format!("{} {} commutator", ei.name(r), fj.name(r)), lhs, rhs))
}

/// Deformed Serre pair for a node `x` with partner `y`:
/// `x^2 y + y x^2 = (q+q^{-1})(x y x - a x K - b x K^{-1})` and the mirror
/// `y^2 x + x y^2 = (q+q^{-1})(y x y - a K y - b K^{-1} y)`.
#[allow(clippy::too_many_arguments)]
fn deformed_pair(
    tag: &str,
    x: CoidealGen,
    y: CoidealGen,
    k: &[CoidealGen],
    kinv: &[CoidealGen],
    a: &Scalar,
    b: &Scalar,
    p: &Params,
    r: usize,
) -> Vec<Relation> {
    let qq = &p.q + &p.mono(-1, 0, 0);
    let one = Scalar::one();
    let mk = |first: CoidealGen, second: CoidealGen, left: bool| {
        let cat = |u: &[CoidealGen], v: &[CoidealGen]| [u, v].concat();
        let (t1, t2) = if left {
            (cat(&[first], k), cat(&[first], kinv))
        } else {
            (cat(k, &[first]), cat(kinv, &[first]))
        };
        rel(
            format!("{tag} deformed Serre {}^2 {}", first.name(r), second.name(r)),
            vec![w1(one.clone(), &[first, first, second]), w1(one.clone(), &[second, first, first])],
            vec![
                w1(qq.clone(), &[first, second, first]),
                (-(&qq * a), t1),
                (-(&qq * b), t2),
            ],
        )
    };
    vec![mk(x, y, true), mk(y, x, false)]
}

/// Defining relations of the coideal algebra for a variant, as stated for
/// the abstract algebra. `ij` relations are transported from `ji` through
/// the isomorphism that swaps `q0` and `q1`, `t_0` and `t_r`, and sends
/// index `i` to `r - i`.
pub fn defining_relations(layout: &Layout, p: &Params) -> Result<Vec<Relation>> {
    match layout.variant {
        Variant::JJ => jj_relations(layout.r, p),
        Variant::JI => ji_relations(layout.r, p, &|i| i, false),
        Variant::IJ => ji_relations(layout.r, p, &|i| layout.r - i, true),
        Variant::II => ii_relations(layout.r, p),
    }
}

/// Extra relations checked alongside the defining ones. For `ij` these are
/// the deformed Serre relations at node `r` in the form the `jj` algebra
/// uses, which is what the module action satisfies.
pub fn supplementary_relations(layout: &Layout, p: &Params) -> Vec<Relation> {
    use CoidealGen::*;
    if layout.variant != Variant::IJ {
        return Vec::new();
    }
    let r = layout.r;
    deformed_pair(
        "ij (jj form)",
        E(r),
        F(r),
        &[K(r, 1)],
        &[K(r, -1)],
        &p.mono(2, 1, -1),
        &p.mono(-2, 0, 0),
        p,
        r,
    )
}

fn jj_relations(r: usize, p: &Params) -> Result<Vec<Relation>> {
    use CoidealGen::*;
    let one = Scalar::one();
    let mut out = Vec::new();
    let kw = |i: usize| vec![H(i, 1), H(i + 1, -1)];
    let kwi = |i: usize| vec![H(i, -1), H(i + 1, 1)];
    for a in 0..=r + 1 {
        out.push(rel(
            format!("h_{a} h_{a}^-1"),
            vec![w1(one.clone(), &[H(a, 1), H(a, -1)])],
            vec![w1(one.clone(), &[])],
        ));
        for b in a + 1..=r + 1 {
            out.push(commutator(format!("h_{a} h_{b} commute"), H(a, 1), H(b, 1)));
        }
        for j in 0..=r {
            // h_a acts on the weight of e_j through D_a D_{-a}.
            let ex = weight_exponent_h(a, j, r);
            out.push(rel(
                format!("h_{a} {} h_{a}^-1", E(j).name(r)),
                vec![w1(one.clone(), &[H(a, 1), E(j), H(a, -1)])],
                vec![w1(p.mono(ex, 0, 0), &[E(j)])],
            ));
            out.push(rel(
                format!("h_{a} {} h_{a}^-1", F(j).name(r)),
                vec![w1(one.clone(), &[H(a, 1), F(j), H(a, -1)])],
                vec![w1(p.mono(-ex, 0, 0), &[F(j)])],
            ));
        }
    }
    for i in 0..=r {
        for j in 0..=r {
            if i == j && (i == 0 || i == r) {
                continue;
            }
            out.push(ef_relation(p, i, j, &kw(i), &kwi(i), r)?);
            if i < j {
                if j == i + 1 {
                    for (x, y) in [(E(i), E(j)), (E(j), E(i)), (F(i), F(j)), (F(j), F(i))] {
                        out.push(serre(format!("Serre {}^2 {}", x.name(r), y.name(r)), x, y, p, vec![]));
                    }
                } else {
                    out.push(commutator(format!("{} {} commute", E(i).name(r), E(j).name(r)), E(i), E(j)));
                    out.push(commutator(format!("{} {} commute", F(i).name(r), F(j).name(r)), F(i), F(j)));
                }
            }
        }
    }
    out.extend(deformed_pair("jj", E(r), F(r), &kw(r), &kwi(r), &p.mono(2, 1, -1), &p.mono(-2, 0, 0), p, r));
    out.extend(deformed_pair("jj", E(0), F(0), &kw(0), &kwi(0), &p.mono(1, 0, 1), &p.mono(-1, -1, 0), p, r));
    Ok(out)
}

/// Exponent of `q` in `h_a e_j h_a^{-1} = q^x e_j`.
fn weight_exponent_h(a: usize, j: usize, r: usize) -> i32 {
    // e_j lowers weight j+1 to j on one side and -j-1 to -j on the other;
    // in terms of the symmetric weights 0..=r+1, e_j moves one unit from
    // position j+1 to position j.
    let mut x = 0;
    if a == j {
        x += 1;
    }
    if a == j + 1 {
        x -= 1;
    }
    if a == 0 || a == r + 1 {
        x *= 2;
    }
    x
}

/// The `ji` relation list. `m` maps a `ji` index to the actual generator
/// index and `swap` exchanges `q0` and `q1` (used for `ij`).
fn ji_relations(r: usize, p: &Params, m: &dyn Fn(usize) -> usize, swap: bool) -> Result<Vec<Relation>> {
    use CoidealGen::*;
    let one = Scalar::one();
    let (a0, a1) = if swap {
        (p.q1.clone(), p.q0.clone())
    } else {
        (p.q0.clone(), p.q1.clone())
    };
    let t = if swap { T0 } else { Tr };
    let e = |i: usize| E(m(i));
    let f = |i: usize| F(m(i));
    let k = |i: usize| K(m(i), 1);
    let ki = |i: usize| K(m(i), -1);
    let mut out = Vec::new();
    // k_0 (k_1 ... k_{r-1})^2 = q^{-1}
    let mut word = vec![k(0)];
    for i in 1..r {
        word.push(k(i));
        word.push(k(i));
    }
    out.push(rel("k-product".to_string(), vec![w1(one.clone(), &word)], vec![w1(p.mono(-1, 0, 0), &[])]));
    for i in 0..r {
        out.push(rel(
            format!("{} {} = 1", k(i).name(r), ki(i).name(r)),
            vec![w1(one.clone(), &[k(i), ki(i)])],
            vec![w1(one.clone(), &[])],
        ));
        out.push(commutator(format!("{} {} commute", k(i).name(r), t.name(r)), k(i), t));
        for j in 0..r {
            if i < j {
                out.push(commutator(format!("{} {} commute", k(i).name(r), k(j).name(r)), k(i), k(j)));
            }
            let ex = cartan(i, j) + i32::from(i == 0 && j == 0);
            out.push(rel(
                format!("{} {} {}", k(i).name(r), e(j).name(r), ki(i).name(r)),
                vec![w1(one.clone(), &[k(i), e(j), ki(i)])],
                vec![w1(p.mono(ex, 0, 0), &[e(j)])],
            ));
            out.push(rel(
                format!("{} {} {}", k(i).name(r), f(j).name(r), ki(i).name(r)),
                vec![w1(one.clone(), &[k(i), f(j), ki(i)])],
                vec![w1(p.mono(-ex, 0, 0), &[f(j)])],
            ));
            if (i, j) != (0, 0) {
                let mut rl = ef_relation(p, m(i), m(j), &[k(i)], &[ki(i)], r)?;
                rl.name = format!("{} {} commutator", e(i).name(r), f(j).name(r));
                out.push(rl);
            }
            if i < j && j > i + 1 {
                out.push(commutator(format!("{} {} commute", e(i).name(r), e(j).name(r)), e(i), e(j)));
                out.push(commutator(format!("{} {} commute", f(i).name(r), f(j).name(r)), f(i), f(j)));
            }
            if i + 1 == j {
                for (x, y) in [(e(i), e(j)), (e(j), e(i)), (f(i), f(j)), (f(j), f(i))] {
                    out.push(serre(format!("Serre {}^2 {}", x.name(r), y.name(r)), x, y, p, vec![]));
                }
            }
        }
        if i + 2 <= r {
            out.push(commutator(format!("{} {} commute", e(i).name(r), t.name(r)), e(i), t));
            out.push(commutator(format!("{} {} commute", f(i).name(r), t.name(r)), f(i), t));
        }
    }
    for x in [e(r - 1), f(r - 1)] {
        out.push(serre(format!("Serre {}^2 {}", x.name(r), t.name(r)), x, t, p, vec![]));
        out.push(serre(
            format!("Serre {}^2 {}", t.name(r), x.name(r)),
            t,
            x,
            p,
            vec![w1(a0.checked_div(&a1)?, &[x])],
        ));
    }
    let qa1 = &p.q * &a1;
    let qa0 = (&p.q * &a0).inv()?;
    out.extend(deformed_pair("ji", e(0), f(0), &[k(0)], &[ki(0)], &qa1, &qa0, p, r));
    Ok(out)
}

/// The `ii` relation list: the `jj`-type relations among `e_i, f_i, k_i`
/// (`1 <= i <= r-1`), the `t_0` relations with node 1, the `t_r` relations
/// with node `r-1`, and `t_0 t_r = t_r t_0`.
fn ii_relations(r: usize, p: &Params) -> Result<Vec<Relation>> {
    use CoidealGen::*;
    let one = Scalar::one();
    let mut out = Vec::new();
    for i in 1..r {
        out.push(rel(
            format!("k_{i} k_{i}^-1 = 1"),
            vec![w1(one.clone(), &[K(i, 1), K(i, -1)])],
            vec![w1(one.clone(), &[])],
        ));
        for t in [T0, Tr] {
            out.push(commutator(format!("k_{i} {} commute", t.name(r)), K(i, 1), t));
        }
        for j in 1..r {
            if i < j {
                out.push(commutator(format!("k_{i} k_{j} commute"), K(i, 1), K(j, 1)));
            }
            let ex = cartan(i, j);
            out.push(rel(
                format!("k_{i} {} k_{i}^-1", E(j).name(r)),
                vec![w1(one.clone(), &[K(i, 1), E(j), K(i, -1)])],
                vec![w1(p.mono(ex, 0, 0), &[E(j)])],
            ));
            out.push(rel(
                format!("k_{i} {} k_{i}^-1", F(j).name(r)),
                vec![w1(one.clone(), &[K(i, 1), F(j), K(i, -1)])],
                vec![w1(p.mono(-ex, 0, 0), &[F(j)])],
            ));
            out.push(ef_relation(p, i, j, &[K(i, 1)], &[K(i, -1)], r)?);
            if i + 1 == j {
                for (x, y) in [(E(i), E(j)), (E(j), E(i)), (F(i), F(j)), (F(j), F(i))] {
                    out.push(serre(format!("Serre {}^2 {}", x.name(r), y.name(r)), x, y, p, vec![]));
                }
            } else if i < j {
                out.push(commutator(format!("e_{i} e_{j} commute"), E(i), E(j)));
                out.push(commutator(format!("f_{i} f_{j} commute"), F(i), F(j)));
            }
        }
    }
    let q0q1 = p.mono(0, 1, -1);
    let q1q0 = p.mono(0, -1, 1);
    for (t, node, c) in [(T0, 1usize, q1q0), (Tr, r - 1, q0q1)] {
        for x in [E(node), F(node)] {
            out.push(serre(format!("Serre {}^2 {}", x.name(r), t.name(r)), x, t, p, vec![]));
            out.push(serre(
                format!("Serre {}^2 {}", t.name(r), x.name(r)),
                t,
                x,
                p,
                vec![w1(c.clone(), &[x])],
            ));
        }
        for i in 1..r {
            if i != node {
                out.push(commutator(format!("e_{i} {} commute", t.name(r)), E(i), t));
                out.push(commutator(format!("f_{i} {} commute", t.name(r)), F(i), t));
            }
        }
    }
    out.push(commutator("t_0 t_r commute".into(), T0, Tr));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn action_on(r: usize, variant: Variant, g: CoidealGen, j: i64) -> TensorVec {
        let m = TensorModule::new(r, 1, variant, Params::generic()).unwrap();
        let a = CoidealAction::new(&m);
        a.act(g, &m.basis(&[j]).unwrap()).unwrap()
    }

    #[test]
    fn single_factor_matches_closed_form() {
        let r = 3;
        let p = Params::generic();
        let v = |j: i64| TensorVec::basis(vec![j]);
        // f_0 v_0 = q1 v_1 + v_{-1}
        let want = &v(1).scale(&p.q1) + &v(-1);
        assert_eq!(action_on(r, Variant::JJ, CoidealGen::F(0), 0), want);
        // e_r v_{r+1} = v_r + v_{r+2}
        assert_eq!(action_on(r, Variant::JJ, CoidealGen::E(r), 4), &v(3) + &v(5));
        // e_0 v_{-1} = q0^{-1} v_0
        assert_eq!(action_on(r, Variant::JJ, CoidealGen::E(0), -1), v(0).scale(&p.mono(0, -1, 0)));
    }

    #[test]
    fn variant_generators_stay_in_subspace() {
        let r = 3;
        for variant in [Variant::JI, Variant::IJ, Variant::II] {
            let m = TensorModule::new(r, 1, variant, Params::generic()).unwrap();
            let a = CoidealAction::new(&m);
            for g in a.layout().generators() {
                for f in m.window(1) {
                    let out = a.act(g, &m.basis(&f).unwrap()).unwrap();
                    assert!(out.support().all(|x| m.allows(x)), "{variant} {g:?} {f:?}");
                }
            }
        }
    }

    #[test]
    fn jj_action_matches_case_table() {
        let r = 3;
        let p = Params::generic();
        let layout = Layout::new(r, Variant::JJ);
        for g in layout.generators().into_iter().filter(|g| !matches!(g, CoidealGen::K(..))) {
            for j in -16..=16 {
                assert_eq!(action_on(r, Variant::JJ, g, j), layout.jj_closed_form(g, j, &p).unwrap(), "{g:?} v_{j}");
            }
        }
    }

    #[test]
    fn t_generators_match_closed_forms() {
        let r = 3;
        let p = Params::generic();
        for (variant, t) in [(Variant::JI, CoidealGen::Tr), (Variant::IJ, CoidealGen::T0), (Variant::II, CoidealGen::Tr), (Variant::II, CoidealGen::T0)] {
            let m = TensorModule::new(r, 1, variant, p.clone()).unwrap();
            let layout = Layout::new(r, variant);
            for f in m.window(2) {
                let want = layout.t_closed_form(t, f[0], &p).unwrap();
                assert_eq!(action_on(r, variant, t, f[0]), want, "{variant} {t:?} v_{}", f[0]);
            }
        }
    }

    #[test]
    fn generator_names_parse_back() {
        let r = 3;
        for g in [CoidealGen::E(0), CoidealGen::F(3), CoidealGen::K(1, 1), CoidealGen::H(2, 1), CoidealGen::T0, CoidealGen::Tr] {
            assert_eq!(CoidealGen::parse(&g.name(r), r).unwrap(), g);
        }
        assert_eq!(CoidealGen::parse("e_r-1", 3).unwrap(), CoidealGen::E(2));
    }
}
