//! Named verification suites and their reports.

use crate::check::{compare, par_map, sort_by_id, Check, Counterexample};
use crate::coideal::{defining_relations, supplementary_relations, CoidealAction, CoidealGen, Layout, Variant};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeIdentity};
use crate::scalar::{Params, Scalar, Specialization};
use crate::schur::{Certificate, SchurAlgebra};
use crate::tensor::{TensorModule, TensorVec};
use crate::weyl;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

/// Version of the report layout.
pub const REPORT_VERSION: u32 = 1;

/// Longest `g` covered by generation certificates.
pub const CERTIFICATE_MAX_LEN: usize = 3;

/// Longest `w` in the `κ` round trip.
pub const KAPPA_MAX_LEN: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    HeckeRelations,
    BraidTd,
    ModuleRelations,
    Commute,
    CoidealSerre,
    SchurXlm,
    SchurPsi,
    SchurGenerate,
    Variants,
    SpecializeConsistency,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::HeckeRelations,
        Suite::BraidTd,
        Suite::ModuleRelations,
        Suite::Commute,
        Suite::CoidealSerre,
        Suite::SchurXlm,
        Suite::SchurPsi,
        Suite::SchurGenerate,
        Suite::Variants,
        Suite::SpecializeConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HeckeRelations => "hecke-relations",
            Suite::BraidTd => "braid-td",
            Suite::ModuleRelations => "module-relations",
            Suite::Commute => "commute",
            Suite::CoidealSerre => "coideal-serre",
            Suite::SchurXlm => "schur-xlm",
            Suite::SchurPsi => "schur-psi",
            Suite::SchurGenerate => "schur-generate",
            Suite::Variants => "variants",
            Suite::SpecializeConsistency => "specialize-consistency",
        }
    }

    /// Suites that only involve the Hecke algebra.
    fn hecke_only(self) -> bool {
        matches!(self, Suite::HeckeRelations | Suite::BraidTd)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown suite {s:?}; expected one of {}", Suite::ALL.map(|x| x.name()).join(", "))))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub r: usize,
    pub d: usize,
    pub variant: Variant,
    pub spec: Specialization,
    /// Coordinates range over `[-window*n, window*n]`.
    pub window: i64,
    /// Longest word in Weyl and Hecke sweeps.
    pub max_len: usize,
    pub cache_dir: Option<PathBuf>,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            r: 3,
            d: 2,
            variant: Variant::JJ,
            spec: Specialization::Generic,
            window: 2,
            max_len: 6,
            cache_dir: None,
        }
    }

    pub fn with_rd(mut self, r: usize, d: usize) -> Self {
        self.r = r;
        self.d = d;
        self
    }

    pub fn with_variant(mut self, v: Variant) -> Self {
        self.variant = v;
        self
    }

    pub fn with_spec(mut self, s: Specialization) -> Self {
        self.spec = s;
        self
    }

    pub fn with_window(mut self, w: i64) -> Self {
        self.window = w;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidParameters("need d >= 1".into()));
        }
        if self.window < 0 {
            return Err(Error::InvalidParameters("need window >= 0".into()));
        }
        if !self.suite.hecke_only() {
            self.variant.check_rd(self.r, self.d)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub r: usize,
    pub d: usize,
    pub variant: String,
    pub specialization: String,
    pub window: i64,
    pub max_len: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub version: u32,
    pub suite: String,
    pub config: ConfigEcho,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "# Suite `{}`\n\nr = {}, d = {}, variant {}, specialization {}, window {}, max length {}\n\n{} passed, {} failed\n\n| status | check | anchor | ms |\n|---|---|---|---|\n",
            self.suite, c.r, c.d, c.variant, c.specialization, c.window, c.max_len, self.passed, self.failed
        );
        for ch in &self.checks {
            let status = if ch.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("| {status} | {} | {} | {} |\n", ch.id.replace('|', "\\|"), ch.anchor, ch.millis));
        }
        let failures: Vec<&Check> = self.checks.iter().filter(|c| !c.passed).collect();
        if !failures.is_empty() {
            out.push_str("\n## Counterexamples\n");
            for ch in failures {
                if let Some(x) = &ch.counterexample {
                    out.push_str(&format!("\n### {}\n\n- input: `{}`\n- lhs: `{}`\n- rhs: `{}`\n", ch.id, x.input, x.lhs, x.rhs));
                }
            }
        }
        out
    }
}

/// Executes the configured suite. Failing checks are reported, not raised;
/// errors are reserved for invalid configurations.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let p = Params::new(cfg.spec);
    let (r, d, v, w) = (cfg.r, cfg.d, cfg.variant, cfg.window);
    let checks = match cfg.suite {
        Suite::HeckeRelations => {
            let mut out = hecke_checks(d, &p);
            out.extend(sweep_checks(d, &p, cfg.max_len, cfg.cache_dir.as_deref()));
            out
        }
        Suite::BraidTd => braid_checks(d, &p),
        Suite::ModuleRelations => module_checks(r, d, v, &p, w),
        Suite::Commute => commute_checks(r, d, v, &p, w),
        Suite::CoidealSerre => {
            let mut out = coideal_relation_checks(r, d, v, &p, w);
            out.extend(closed_form_checks(r, v, &p, w));
            out
        }
        Suite::SchurXlm => with_schur(r, d, v, &p, |s| {
            let mut out = s.xlm_checks();
            out.extend(s.kappa_roundtrip_checks(KAPPA_MAX_LEN));
            out
        }),
        Suite::SchurPsi => with_schur(r, d, v, &p, |s| {
            let mut out = Vec::new();
            if v == Variant::JJ {
                out.extend(s.psi_formula_checks());
            }
            out.extend(s.expansion_consistency_checks());
            out.extend(s.idempotent_checks());
            out
        }),
        Suite::SchurGenerate => with_schur(r, d, v, &p, |s| {
            let mut out = Vec::new();
            if v == Variant::JJ {
                out.extend(s.generator_product_checks());
            }
            out.extend(certificate_checks(s, cfg));
            out
        }),
        Suite::Variants => {
            let variants = if v == Variant::JJ { vec![Variant::JI, Variant::IJ, Variant::II] } else { vec![v] };
            par_map(&variants, |&var| match var.check_rd(r, d) {
                Err(e) => vec![Check::run(format!("[{var}] preconditions"), "variant parameters", || Err(e))],
                Ok(()) => prefixed(var.name(), variant_checks(r, d, var, &p, w)),
            })
            .concat()
        }
        Suite::SpecializeConsistency => {
            par_map(&[Specialization::B2, Specialization::B1, Specialization::D1], |&spec| {
                prefixed(spec.name(), specialization_checks(r, d, v, spec, w))
            })
            .concat()
        }
    };
    let mut checks = checks;
    sort_by_id(&mut checks);
    let failed = checks.iter().filter(|c| !c.passed).count();
    Ok(SuiteReport {
        version: REPORT_VERSION,
        suite: cfg.suite.name().to_string(),
        config: ConfigEcho {
            r,
            d,
            variant: v.name().to_string(),
            specialization: cfg.spec.name().to_string(),
            window: w,
            max_len: cfg.max_len,
        },
        passed: checks.len() - failed,
        failed,
        checks,
    })
}

fn prefixed(tag: &str, checks: Vec<Check>) -> Vec<Check> {
    checks
        .into_iter()
        .map(|mut c| {
            c.id = format!("[{tag}] {}", c.id);
            c
        })
        .collect()
}

fn failed_setup(id: &str, e: Error) -> Vec<Check> {
    vec![Check::run(id, "setup", || Err(e))]
}

fn identity_checks(ids: Result<Vec<HeckeIdentity>>, anchor: &str, suffix: &str, start: Instant) -> Vec<Check> {
    let ids = match ids {
        Ok(x) => x,
        Err(e) => return failed_setup(anchor, e),
    };
    let millis = start.elapsed().as_millis() as u64 / ids.len().max(1) as u64;
    ids.into_iter()
        .map(|h| {
            let id = format!("{}{suffix}", h.name);
            let mut c = Check::run(id.clone(), anchor, || Ok(compare(id.clone(), &h.lhs, &h.rhs)));
            c.millis += millis;
            c
        })
        .collect()
}

/// Bernstein presentation of the Hecke algebra of rank `d`.
pub fn hecke_checks(d: usize, p: &Params) -> Vec<Check> {
    let start = Instant::now();
    let ids = HeckeAlgebra::new(d, p.clone()).and_then(|h| h.defining_relations());
    identity_checks(ids, "Hecke presentation", &format!(" (d={d})"), start)
}

#[derive(Serialize, serde::Deserialize)]
struct TableRow {
    word: String,
    length: usize,
}

/// Elements with `ℓ ≤ max_len` and their breadth-first distance from the
/// identity. Stored as `weyl-d{d}-l{max_len}.json` under `cache_dir` and
/// read back from there when present.
pub fn weyl_table(d: usize, max_len: usize, cache_dir: Option<&Path>) -> Result<Vec<(weyl::WeylElt, usize)>> {
    let path = cache_dir.map(|dir| dir.join(format!("weyl-d{d}-l{max_len}.json")));
    if let Some(text) = path.as_ref().and_then(|p| std::fs::read_to_string(p).ok()) {
        let rows: Vec<TableRow> = serde_json::from_str(&text).map_err(|e| Error::InvalidParameters(format!("corrupt Weyl table: {e}")))?;
        return rows.into_iter().map(|r| Ok((weyl::WeylElt::parse(d, &r.word)?, r.length))).collect();
    }
    let mut seen = std::collections::HashSet::from([weyl::WeylElt::identity(d)]);
    let mut table = vec![(weyl::WeylElt::identity(d), 0)];
    let mut start = 0;
    for k in 1..=max_len {
        let end = table.len();
        for idx in start..end {
            for i in 0..=d {
                let next = table[idx].0.mul_gen(i)?;
                if seen.insert(next.clone()) {
                    table.push((next, k));
                }
            }
        }
        start = end;
    }
    if let (Some(path), Some(dir)) = (path, cache_dir) {
        let rows: Vec<TableRow> = table.iter().map(|(w, k)| TableRow { word: w.word_string(), length: *k }).collect();
        std::fs::create_dir_all(dir)
            .and_then(|_| std::fs::write(&path, serde_json::to_string(&rows).expect("json")))
            .map_err(|e| Error::InvalidParameters(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(table)
}

/// Sweeps over the Weyl table: lengths against search distance, and
/// `T_w T_s` against `T_{ws}` or the quadratic rule.
pub fn sweep_checks(d: usize, p: &Params, max_len: usize, cache_dir: Option<&Path>) -> Vec<Check> {
    let table = match weyl_table(d, max_len, cache_dir) {
        Ok(t) => t,
        Err(e) => return failed_setup("Weyl table", e),
    };
    let mut out = vec![Check::run(format!("length equals search distance, l <= {max_len} (d={d})"), "Weyl length", || {
        Ok(table.iter().find(|(w, k)| w.length() != *k).map(|(w, k)| Counterexample {
            input: w.to_string(),
            lhs: w.length().to_string(),
            rhs: k.to_string(),
        }))
    })];
    out.push(Check::run(format!("T_w T_s multiplication rule, l <= {max_len} (d={d})"), "Hecke basis", || {
        let h = HeckeAlgebra::new(d, p.clone())?;
        for (w, _) in &table {
            let tw = h.basis(w)?;
            for i in 0..=d {
                let ws = w.mul_gen(i)?;
                let lhs = h.mul(&tw, &h.generator(i)?)?;
                let rhs = if ws.length() > w.length() {
                    h.basis(&ws)?
                } else {
                    // T_w T_s = T_{ws} T_s^2 with T_s^2 = (a + b) T_s - ab.
                    let (a, b) = &h.gen_data(i).roots;
                    let sq = &h.generator(i)?.scale(&(a + b)) - &h.one().scale(&(a * b));
                    h.mul(&h.basis(&ws)?, &sq)?
                };
                if let Some(c) = compare(format!("T[{w}] T{i}"), &lhs, &rhs) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }));
    out
}

/// Relations of `T_d` and its rearrangement through `X_1`.
pub fn braid_checks(d: usize, p: &Params) -> Vec<Check> {
    let start = Instant::now();
    let ids = HeckeAlgebra::new(d, p.clone()).and_then(|h| {
        let mut ids = h.td_relations()?;
        ids.push(HeckeIdentity {
            name: "T_d via X_1 rearrangement".into(),
            lhs: h.td_via_x1()?,
            rhs: h.generator(d)?,
        });
        Ok(ids)
    });
    identity_checks(ids, "T_d relations", &format!(" (d={d})"), start)
}

/// Pointwise check over `inputs`; reports the first failure.
fn pointwise(
    id: String,
    anchor: &str,
    inputs: &[Vec<i64>],
    f: impl Fn(&[i64]) -> Result<Option<(TensorVec, TensorVec)>>,
) -> Check {
    Check::run(id, anchor, || {
        for x in inputs {
            if let Some((lhs, rhs)) = f(x)? {
                return Ok(Some(Counterexample {
                    input: format!("M{x:?}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }));
            }
        }
        Ok(None)
    })
}

fn differ(lhs: TensorVec, rhs: TensorVec) -> Option<(TensorVec, TensorVec)> {
    (lhs != rhs).then_some((lhs, rhs))
}

/// Hecke relations as operators on every `M_f` of the window.
pub fn module_checks(r: usize, d: usize, v: Variant, p: &Params, window: i64) -> Vec<Check> {
    let start = Instant::now();
    let m = match TensorModule::new(r, d, v, p.clone()) {
        Ok(m) => m,
        Err(e) => return failed_setup("module", e),
    };
    let mut groups: Vec<(String, Option<Counterexample>)> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut error = None;
    for f in m.window(window) {
        match m.relation_checks(&f) {
            Ok(list) => {
                for c in list {
                    let k = *index.entry(c.name.clone()).or_insert_with(|| {
                        groups.push((c.name.clone(), None));
                        groups.len() - 1
                    });
                    if groups[k].1.is_none() && !c.holds() {
                        groups[k].1 = Some(Counterexample {
                            input: format!("M{:?}", c.input),
                            lhs: c.lhs.to_string(),
                            rhs: c.rhs.to_string(),
                        });
                    }
                }
            }
            Err(e) => {
                error = Some(e);
                break;
            }
        }
    }
    if let Some(e) = error {
        return failed_setup("module relations", e);
    }
    let millis = start.elapsed().as_millis() as u64 / groups.len().max(1) as u64;
    groups
        .into_iter()
        .map(|(name, cx)| {
            let mut c = Check::run(format!("{name} on window (r={r}, d={d})"), "module relations", || Ok(cx));
            c.millis += millis;
            c
        })
        .collect()
}

/// Every coideal generator against every `T_i` on the window.
pub fn commute_checks(r: usize, d: usize, v: Variant, p: &Params, window: i64) -> Vec<Check> {
    let m = match TensorModule::new(r, d, v, p.clone()) {
        Ok(m) => m,
        Err(e) => return failed_setup("module", e),
    };
    let a = CoidealAction::new(&m);
    let inputs = m.window(window);
    let pairs: Vec<(CoidealGen, usize)> = a.layout().generators().into_iter().flat_map(|g| (0..=d).map(move |i| (g, i))).collect();
    par_map(&pairs, |&(g, i)| {
        let id = format!("{} commutes with T{i} (r={r}, d={d})", g.name(r));
        pointwise(id, "commuting actions", &inputs, |f| {
            let x = m.basis(f)?;
            Ok(differ(a.act(g, &m.act_t(&x, i)?)?, m.act_t(&a.act(g, &x)?, i)?))
        })
    })
}

/// Defining relations of the coideal algebra as operator identities.
pub fn coideal_relation_checks(r: usize, d: usize, v: Variant, p: &Params, window: i64) -> Vec<Check> {
    let m = match TensorModule::new(r, d, v, p.clone()) {
        Ok(m) => m,
        Err(e) => return failed_setup("module", e),
    };
    let a = CoidealAction::new(&m);
    let rels = match defining_relations(a.layout(), p) {
        Ok(mut x) => {
            x.extend(supplementary_relations(a.layout(), p));
            x
        }
        Err(e) => return failed_setup("coideal relations", e),
    };
    let inputs = m.window(window);
    par_map(&rels, |rel| {
        pointwise(format!("{} (r={r}, d={d})", rel.name), "coideal relations", &inputs, |f| {
            let x = m.basis(f)?;
            Ok(differ(a.act_sum(&rel.lhs, &x)?, a.act_sum(&rel.rhs, &x)?))
        })
    })
}

/// Single-factor actions against their case tables (`d = 1`).
pub fn closed_form_checks(r: usize, v: Variant, p: &Params, window: i64) -> Vec<Check> {
    let m = match TensorModule::new(r, 1, v, p.clone()) {
        Ok(m) => m,
        Err(e) => return failed_setup("module", e),
    };
    let a = CoidealAction::new(&m);
    let layout = Layout::new(r, v);
    let inputs = m.window(window);
    let gens: Vec<CoidealGen> = layout
        .generators()
        .into_iter()
        .filter(|g| match v {
            Variant::JJ => matches!(g, CoidealGen::E(_) | CoidealGen::F(_) | CoidealGen::H(..)),
            _ => matches!(g, CoidealGen::T0 | CoidealGen::Tr),
        })
        .collect();
    gens.into_iter()
        .map(|g| {
            let id = format!("{} on single factors (r={r})", g.name(r));
            pointwise(id, "single-factor action", &inputs, |f| {
                let want = match v {
                    Variant::JJ => layout.jj_closed_form(g, f[0], p)?,
                    _ => layout.t_closed_form(g, f[0], p)?,
                };
                Ok(differ(a.act(g, &m.basis(f)?)?, want))
            })
        })
        .collect()
}

fn with_schur(r: usize, d: usize, v: Variant, p: &Params, f: impl FnOnce(&SchurAlgebra) -> Vec<Check>) -> Vec<Check> {
    match SchurAlgebra::new(r, d, v, p.clone()) {
        Ok(s) => f(&s),
        Err(e) => failed_setup("schur algebra", e),
    }
}

/// Builds the generation certificate, checks coverage and re-evaluates it.
pub fn certificate_checks(s: &SchurAlgebra, cfg: &SuiteConfig) -> Vec<Check> {
    let tag = format!("(r={}, d={}, {})", s.r(), s.d(), s.variant());
    let mut cert = None;
    let mut out = vec![Check::run(format!("certificate builds {tag}"), "generation from Psi", || {
        cert = Some(Certificate::build(s, CERTIFICATE_MAX_LEN)?);
        Ok(None)
    })];
    let Some(cert) = cert else { return out };
    out.push(Check::run(
        format!("certificate covers every phi^g with l(g) <= {CERTIFICATE_MAX_LEN} {tag}"),
        "generation from Psi",
        || {
            let missing = cert.missing(s, CERTIFICATE_MAX_LEN)?;
            Ok((!missing.is_empty()).then(|| Counterexample {
                input: tag.clone(),
                lhs: format!("{} records", cert.records.len()),
                rhs: format!("missing {}", missing.join(", ")),
            }))
        },
    ));
    out.push(Check::run(
        format!("all {} certificate words re-evaluate to their targets {tag}", cert.records.len()),
        "generation from Psi",
        || {
            let bad: Vec<String> = cert.verify(s)?.into_iter().filter(|c| !c.ok).map(|c| c.name).collect();
            Ok((!bad.is_empty()).then(|| Counterexample {
                input: tag.clone(),
                lhs: format!("failing records {}", bad.join(", ")),
                rhs: "every word equals its target".into(),
            }))
        },
    ));
    if let Some(dir) = &cfg.cache_dir {
        let path = dir.join(format!("certificate-{}-r{}-d{}-{}.json", s.variant(), s.r(), s.d(), cfg.spec.name()));
        out.push(Check::run(format!("certificate written to {}", path.display()), "cache", || {
            std::fs::create_dir_all(dir).and_then(|_| {
                std::fs::write(&path, serde_json::to_string_pretty(&cert.to_json(s)).expect("json"))
            })
            .map_err(|e| Error::InvalidParameters(format!("cannot write {}: {e}", path.display())))?;
            Ok(None)
        }));
    }
    out
}

/// Module, commutation, relation, closed-form and Schur checks for one
/// variant.
pub fn variant_checks(r: usize, d: usize, v: Variant, p: &Params, window: i64) -> Vec<Check> {
    let mut out = module_checks(r, d, v, p, window);
    out.extend(commute_checks(r, d, v, p, window));
    out.extend(coideal_relation_checks(r, d, v, p, window));
    out.extend(closed_form_checks(r, v, p, window));
    out.extend(with_schur(r, d, v, p, |s| {
        let mut c = s.idempotent_checks();
        c.extend(s.expansion_consistency_checks());
        c.extend(s.t_generator_checks());
        c
    }));
    out
}

/// Expected roots of the `T_0` quadratic in each specialized type.
fn t0_roots(spec: Specialization) -> (Scalar, Scalar) {
    let q = Scalar::q();
    let q1 = Scalar::q1();
    let inv = |x: &Scalar| x.inv().expect("nonzero");
    match spec {
        Specialization::Generic => (inv(&Scalar::q0()), -&q1),
        Specialization::B2 => (inv(&q1), -&q1),
        Specialization::B1 => (inv(&q), -&q),
        Specialization::D1 => (Scalar::one(), -&Scalar::one()),
    }
}

/// Hecke, module and commutation checks in a specialized regime, plus the
/// `T_0` quadratic type and compatibility of specialization with products
/// and the module action.
pub fn specialization_checks(r: usize, d: usize, v: Variant, spec: Specialization, window: i64) -> Vec<Check> {
    let p = Params::new(spec);
    let mut out = hecke_checks(d, &p);
    out.push(Check::run(format!("T0 quadratic type (d={d})"), "specialized types", || {
        let h = HeckeAlgebra::new(d, p.clone())?;
        let (a, b) = t0_roots(spec);
        let t = h.generator(0)?;
        let one = h.one();
        let lhs = h.mul(&(&t - &one.scale(&a)), &(&t - &one.scale(&b)))?;
        Ok(compare("(T0 - a)(T0 - b)", &lhs, &crate::hecke::HeckeElt::zero()))
    }));
    out.push(Check::run(format!("specialization is multiplicative (d={d})"), "specialization", || {
        let generic = HeckeAlgebra::new(d, Params::generic())?;
        let special = HeckeAlgebra::new(d, p.clone())?;
        let ws = weyl::elements_upto(d, 2);
        for x in &ws {
            for y in &ws {
                let prod = generic.mul(&generic.basis(x)?, &generic.basis(y)?)?;
                let lhs = generic.specialize(&prod, &p)?;
                let rhs = special.mul(&special.basis(x)?, &special.basis(y)?)?;
                if let Some(c) = compare(format!("T[{x}] * T[{y}]"), &lhs, &rhs) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }));
    out.push(Check::run(format!("specialization commutes with the module action (r={r}, d={d})"), "specialization", || {
        let generic = TensorModule::new(r, d, v, Params::generic())?;
        let special = TensorModule::new(r, d, v, p.clone())?;
        let (ga, sa) = (CoidealAction::new(&generic), CoidealAction::new(&special));
        for f in generic.window(1) {
            let (x, y) = (generic.basis(&f)?, special.basis(&f)?);
            for i in 0..=d {
                let lhs = generic.specialize(&generic.act_t(&x, i)?, &p)?;
                let rhs = special.act_t(&y, i)?;
                if let Some(c) = compare(format!("M{f:?} T{i}"), &lhs, &rhs) {
                    return Ok(Some(c));
                }
            }
            for g in ga.layout().generators() {
                let lhs = generic.specialize(&ga.act(g, &x)?, &p)?;
                let rhs = sa.act(g, &y)?;
                if let Some(c) = compare(format!("{} M{f:?}", g.name(r)), &lhs, &rhs) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }));
    out.extend(module_checks(r, d, v, &p, window));
    out.extend(commute_checks(r, d, v, &p, window));
    out
}
