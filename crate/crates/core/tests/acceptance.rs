//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use affine_schur::check::{Check, Counterexample};
use affine_schur::schur::SchurAlgebra;
use affine_schur::suite::{
    braid_checks, certificate_checks, closed_form_checks, coideal_relation_checks, commute_checks, hecke_checks, module_checks,
    specialization_checks, Suite, SuiteConfig, KAPPA_MAX_LEN,
};
use affine_schur::{Params, Specialization, Variant, WeylElt};
use std::collections::{HashMap, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Criterion {
    number: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Vec<Check>,
}

fn generic() -> Params {
    Params::generic()
}

fn schur(r: usize, d: usize, v: Variant) -> SchurAlgebra {
    SchurAlgebra::new(r, d, v, generic()).expect("valid Schur parameters")
}

fn c1() -> Vec<Check> {
    let mut out = hecke_checks(2, &generic());
    out.extend(hecke_checks(3, &generic()));
    out
}

fn c2() -> Vec<Check> {
    let mut out = braid_checks(2, &generic());
    out.extend(braid_checks(3, &generic()));
    out
}

fn c3() -> Vec<Check> {
    module_checks(3, 2, Variant::JJ, &generic(), 2)
}

fn c4() -> Vec<Check> {
    commute_checks(3, 2, Variant::JJ, &generic(), 2)
}

fn c5() -> Vec<Check> {
    let mut out = coideal_relation_checks(3, 1, Variant::JJ, &generic(), 2);
    out.extend(coideal_relation_checks(3, 2, Variant::JJ, &generic(), 2));
    out
}

fn c6() -> Vec<Check> {
    closed_form_checks(3, Variant::JJ, &generic(), 2)
}

fn c7() -> Vec<Check> {
    let s = schur(3, 2, Variant::JJ);
    let mut out = vec![Check::run("15 compositions for r=3, d=2", "compositions", || {
        let n = s.compositions().len();
        Ok((n != 15).then(|| Counterexample {
            input: "r=3, d=2".into(),
            lhs: n.to_string(),
            rhs: "15".into(),
        }))
    })];
    out.extend(s.xlm_checks());
    out
}

fn c8() -> Vec<Check> {
    let mut out = schur(3, 2, Variant::JJ).psi_formula_checks();
    out.extend(schur(2, 1, Variant::JJ).psi_formula_checks());
    out
}

fn c9() -> Vec<Check> {
    schur(3, 2, Variant::JJ).generator_product_checks()
}

fn c10() -> Vec<Check> {
    let mut out = Vec::new();
    for (r, d) in [(2, 1), (3, 2)] {
        let cfg = SuiteConfig::new(Suite::SchurGenerate).with_rd(r, d);
        out.extend(certificate_checks(&schur(r, d, Variant::JJ), &cfg));
    }
    out
}

fn c11() -> Vec<Check> {
    schur(3, 2, Variant::JJ).idempotent_checks()
}

fn c12() -> Vec<Check> {
    let mut out = Vec::new();
    for (v, r, d) in [(Variant::JI, 3, 2), (Variant::IJ, 3, 2), (Variant::II, 2, 2)] {
        let p = generic();
        let mut checks = module_checks(r, d, v, &p, 2);
        checks.extend(commute_checks(r, d, v, &p, 2));
        checks.extend(coideal_relation_checks(r, d, v, &p, 2));
        checks.extend(closed_form_checks(r, v, &p, 2));
        out.extend(checks.into_iter().map(|mut c| {
            c.id = format!("[{v}] {}", c.id);
            c
        }));
    }
    out
}

fn c13() -> Vec<Check> {
    let mut out = Vec::new();
    for spec in [Specialization::B2, Specialization::B1, Specialization::D1] {
        let mut checks = specialization_checks(3, 2, Variant::JJ, spec, 2);
        checks.extend(hecke_checks(3, &Params::new(spec)));
        out.extend(checks.into_iter().map(|mut c| {
            c.id = format!("[{}] {}", spec.name(), c.id);
            c
        }));
    }
    out
}

/// Breadth-first search on the Cayley graph, independent of the length
/// function under test.
fn c14() -> Vec<Check> {
    [2usize, 3]
        .into_iter()
        .map(|d| {
            Check::run(format!("length equals BFS distance up to 8 (d={d})"), "Weyl length", move || {
                let mut dist: HashMap<WeylElt, usize> = HashMap::new();
                let e = WeylElt::identity(d);
                dist.insert(e.clone(), 0);
                let mut queue = VecDeque::from([e]);
                while let Some(w) = queue.pop_front() {
                    let k = dist[&w];
                    if k == 8 {
                        continue;
                    }
                    for i in 0..=d {
                        let next = w.mul_gen(i)?;
                        if !dist.contains_key(&next) {
                            dist.insert(next.clone(), k + 1);
                            queue.push_back(next);
                        }
                    }
                }
                for (w, k) in &dist {
                    if w.length() != *k {
                        return Ok(Some(Counterexample {
                            input: w.to_string(),
                            lhs: format!("length {}", w.length()),
                            rhs: format!("distance {k}"),
                        }));
                    }
                }
                let listed = affine_schur::weyl::elements_upto(d, 8).len();
                Ok((listed != dist.len()).then(|| Counterexample {
                    input: format!("elements of length <= 8, d={d}"),
                    lhs: listed.to_string(),
                    rhs: dist.len().to_string(),
                }))
            })
        })
        .collect()
}

fn c15() -> Vec<Check> {
    schur(3, 2, Variant::JJ).kappa_roundtrip_checks(KAPPA_MAX_LEN)
}

fn main() -> ExitCode {
    let min = |m: u64| Duration::from_secs(60 * m);
    let criteria = [
        Criterion { number: 1, title: "Hecke presentation, d = 2, 3", budget: min(2), run: c1 },
        Criterion { number: 2, title: "T_d relations, d = 2, 3", budget: min(1), run: c2 },
        Criterion { number: 3, title: "module relations on the window, r = 3, d = 2", budget: min(5), run: c3 },
        Criterion { number: 4, title: "coideal and Hecke actions commute, r = 3, d = 2", budget: min(5), run: c4 },
        Criterion { number: 5, title: "coideal relations on the window, d = 1, 2", budget: min(5), run: c5 },
        Criterion { number: 6, title: "single-factor case table, r = 3", budget: Duration::from_secs(10), run: c6 },
        Criterion { number: 7, title: "x_lambda T_i = p_si x_lambda, r = 3, d = 2", budget: min(1), run: c7 },
        Criterion { number: 8, title: "closed forms of Psi(e_i), Psi(f_i)", budget: min(5), run: c8 },
        Criterion { number: 9, title: "generator-product identities at omega", budget: min(1), run: c9 },
        Criterion { number: 10, title: "generation certificates, (2,1) and (3,2)", budget: min(10), run: c10 },
        Criterion { number: 11, title: "interpolated weight idempotents, r = 3, d = 2", budget: min(2), run: c11 },
        Criterion { number: 12, title: "variant suites ji, ij, ii", budget: min(15), run: c12 },
        Criterion { number: 13, title: "specialization consistency", budget: min(10), run: c13 },
        Criterion { number: 14, title: "Weyl length against BFS distance", budget: min(2), run: c14 },
        Criterion { number: 15, title: "kappa round trip, l(w) <= 4", budget: min(3), run: c15 },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let failed: Vec<&Check> = checks.iter().filter(|x| !x.passed).collect();
        let over = elapsed > c.budget;
        let ok = failed.is_empty() && !over && !checks.is_empty();
        if !ok {
            failures += 1;
        }
        println!(
            "{} criterion {:>2}: {} ({} checks, {} failed, {:.1}s of {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.number,
            c.title,
            checks.len(),
            failed.len(),
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for f in failed {
            println!("     failed: {}", f.id);
            if let Some(x) = &f.counterexample {
                println!("       input: {}", x.input);
                println!("       lhs:   {}", x.lhs);
                println!("       rhs:   {}", x.rhs);
            }
        }
        if over {
            println!("     over the time budget");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
