//! Seeded law checking for braided monoidal categories and for the two
//! tensor products of the clique construction.
//!
//! Every case draws its inputs from its own stream, derived from the suite
//! seed, the law name and the case index, so a failing case replays alone.

mod sample;

use std::fmt::Write as _;

use rand::SeedableRng;
use serde::Serialize;

pub use sample::{random_braid, random_configuration, random_word, LawRng, Sample};

use crate::bmc::Bmc;
use crate::config::Configuration;
use crate::equiv;
use crate::error::Result;
use crate::sigma::{SigmaB, SigmaObj};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: usize,
    pub seed: u64,
    pub counterexample: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instance: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} [{}] {}/{} cases",
            if self.passed() { "PASS" } else { "FAIL" },
            self.law,
            self.instance,
            self.cases - self.failures.len(),
            self.cases
        );
        for f in &self.failures {
            let _ = write!(
                out,
                "\n  case {} (seed {}): {}",
                f.case, f.seed, f.counterexample
            );
        }
        out
    }
}

/// Sorted, line-oriented rendering of a set of reports.
pub fn reports_text(reports: &[LawReport]) -> String {
    let mut sorted = reports.to_vec();
    sorted.sort_by(|a, b| (&a.instance, &a.law).cmp(&(&b.instance, &b.law)));
    sorted
        .iter()
        .map(LawReport::to_text)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn reports_json(reports: &[LawReport]) -> serde_json::Value {
    let mut sorted = reports.to_vec();
    sorted.sort_by(|a, b| (&a.instance, &a.law).cmp(&(&b.instance, &b.law)));
    serde_json::to_value(sorted).expect("reports serialize")
}

fn law_stream(law: &str) -> u64 {
    // FNV-1a: stable across platforms and releases
    law.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// The generator for one case of one law.
pub fn case_rng(seed: u64, law: &str, case: usize) -> LawRng {
    let mut rng = LawRng::seed_from_u64(seed);
    rng.set_stream(law_stream(law).wrapping_add(case as u64));
    rng
}

/// A law: draws its inputs and returns `None` on success or a description of
/// the inputs on failure.
pub type Check<'a> = Box<dyn Fn(&mut LawRng) -> Result<Option<String>> + 'a>;

pub fn run_law(law: &str, instance: &str, seed: u64, cases: usize, check: &Check<'_>) -> LawReport {
    let failures = (0..cases)
        .filter_map(|case| {
            let mut rng = case_rng(seed, law, case);
            let counterexample = match check(&mut rng) {
                Ok(None) => return None,
                Ok(Some(c)) => c,
                Err(e) => format!("error: {e}"),
            };
            Some(Failure {
                case,
                seed,
                counterexample,
            })
        })
        .collect();
    LawReport {
        law: law.to_string(),
        instance: instance.to_string(),
        cases,
        failures,
    }
}

/// Re-runs a single case.
pub fn replay(check: &Check<'_>, seed: u64, law: &str, case: usize) -> Result<Option<String>> {
    check(&mut case_rng(seed, law, case))
}

fn verdict(ok: bool, inputs: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(inputs)
}

// --- braided monoidal axioms ---------------------------------------------

/// `α(a⊗b,c,d) ; α(a,b,c⊗d) = α(a,b,c)⊗1 ; α(a,b⊗c,d) ; 1⊗α(b,c,d)`
pub fn check_pentagon<B: Bmc>(
    cat: &B,
    a: &B::Obj,
    b: &B::Obj,
    c: &B::Obj,
    d: &B::Obj,
) -> Result<bool> {
    let t = |x: &B::Obj, y: &B::Obj| cat.tensor_obj(x, y);
    let lhs = cat.compose(&cat.assoc(&t(a, b), c, d), &cat.assoc(a, b, &t(c, d)))?;
    let rhs = cat.compose_all(&[
        cat.tensor(&cat.assoc(a, b, c), &cat.id(d)),
        cat.assoc(a, &t(b, c), d),
        cat.tensor(&cat.id(a), &cat.assoc(b, c, d)),
    ])?;
    Ok(cat.mor_eq(&lhs, &rhs))
}

/// `α(a,I,b) ; 1⊗λ(b) = ρ(a)⊗1`
pub fn check_triangle<B: Bmc>(cat: &B, a: &B::Obj, b: &B::Obj) -> Result<bool> {
    let lhs = cat.compose(
        &cat.assoc(a, &cat.unit(), b),
        &cat.tensor(&cat.id(a), &cat.lunit(b)),
    )?;
    let rhs = cat.tensor(&cat.runit(a), &cat.id(b));
    Ok(cat.mor_eq(&lhs, &rhs))
}

/// `σ(a, b⊗c) = α⁻¹ ; σ(a,b)⊗1 ; α ; 1⊗σ(a,c) ; α⁻¹`
pub fn check_hexagon1<B: Bmc>(cat: &B, a: &B::Obj, b: &B::Obj, c: &B::Obj) -> Result<bool> {
    let lhs = cat.braid(a, &cat.tensor_obj(b, c));
    let rhs = cat.compose_all(&[
        cat.assoc_inv(a, b, c),
        cat.tensor(&cat.braid(a, b), &cat.id(c)),
        cat.assoc(b, a, c),
        cat.tensor(&cat.id(b), &cat.braid(a, c)),
        cat.assoc_inv(b, c, a),
    ])?;
    Ok(cat.mor_eq(&lhs, &rhs))
}

/// `σ(a⊗b, c) = α ; 1⊗σ(b,c) ; α⁻¹ ; σ(a,c)⊗1 ; α`
pub fn check_hexagon2<B: Bmc>(cat: &B, a: &B::Obj, b: &B::Obj, c: &B::Obj) -> Result<bool> {
    let lhs = cat.braid(&cat.tensor_obj(a, b), c);
    let rhs = cat.compose_all(&[
        cat.assoc(a, b, c),
        cat.tensor(&cat.id(a), &cat.braid(b, c)),
        cat.assoc_inv(a, c, b),
        cat.tensor(&cat.braid(a, c), &cat.id(b)),
        cat.assoc(c, a, b),
    ])?;
    Ok(cat.mor_eq(&lhs, &rhs))
}

pub fn check_assoc_natural<B: Bmc>(cat: &B, f: &B::Mor, g: &B::Mor, h: &B::Mor) -> Result<bool> {
    let (s, t) = (|m: &B::Mor| cat.source(m), |m: &B::Mor| cat.target(m));
    let lhs = cat.compose(
        &cat.tensor(&cat.tensor(f, g), h),
        &cat.assoc(&t(f), &t(g), &t(h)),
    )?;
    let rhs = cat.compose(
        &cat.assoc(&s(f), &s(g), &s(h)),
        &cat.tensor(f, &cat.tensor(g, h)),
    )?;
    Ok(cat.mor_eq(&lhs, &rhs))
}

pub fn check_unitors_natural<B: Bmc>(cat: &B, f: &B::Mor) -> Result<bool> {
    let (a, b) = (cat.source(f), cat.target(f));
    let id_i = cat.id(&cat.unit());
    let left = cat.mor_eq(
        &cat.compose(&cat.tensor(&id_i, f), &cat.lunit(&b))?,
        &cat.compose(&cat.lunit(&a), f)?,
    );
    let right = cat.mor_eq(
        &cat.compose(&cat.tensor(f, &id_i), &cat.runit(&b))?,
        &cat.compose(&cat.runit(&a), f)?,
    );
    Ok(left && right)
}

pub fn check_braid_natural<B: Bmc>(cat: &B, f: &B::Mor, g: &B::Mor) -> Result<bool> {
    let lhs = cat.compose(
        &cat.tensor(f, g),
        &cat.braid(&cat.target(f), &cat.target(g)),
    )?;
    let rhs = cat.compose(
        &cat.braid(&cat.source(f), &cat.source(g)),
        &cat.tensor(g, f),
    )?;
    Ok(cat.mor_eq(&lhs, &rhs))
}

/// Structural maps and `f` compose with their inverses to identities.
pub fn check_inverses<B: Bmc>(
    cat: &B,
    a: &B::Obj,
    b: &B::Obj,
    c: &B::Obj,
    f: &B::Mor,
) -> Result<bool> {
    let t = |x: &B::Obj, y: &B::Obj| cat.tensor_obj(x, y);
    let round = |m: &B::Mor, inv: &B::Mor, obj: &B::Obj| -> Result<bool> {
        Ok(cat.mor_eq(&cat.compose(m, inv)?, &cat.id(obj)))
    };
    Ok(round(
        &cat.assoc(a, b, c),
        &cat.assoc_inv(a, b, c),
        &t(&t(a, b), c),
    )? && round(&cat.lunit(a), &cat.lunit_inv(a), &t(&cat.unit(), a))?
        && round(&cat.runit(a), &cat.runit_inv(a), &t(a, &cat.unit()))?
        && round(&cat.braid(a, b), &cat.braid_inv(a, b), &t(a, b))?
        && round(f, &cat.inverse(f)?, &cat.source(f))?)
}

fn objs<B: Bmc>(objects: &[&B::Obj]) -> String {
    objects
        .iter()
        .enumerate()
        .map(|(i, o)| format!("x{}={o}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn mors<B: Bmc>(cat: &B, ms: &[&B::Mor]) -> String {
    ms.iter()
        .enumerate()
        .map(|(i, m)| format!("f{}={}", i + 1, cat.show_mor(m)))
        .collect::<Vec<_>>()
        .join(" ; ")
}

/// The braided monoidal laws as named, seeded checks.
pub fn bmc_laws<B: Sample>(cat: &B) -> Vec<(&'static str, Check<'_>)> {
    vec![
        (
            "pentagon",
            Box::new(move |rng: &mut LawRng| {
                let [a, b, c, d] = [(); 4].map(|_| cat.random_obj(rng));
                Ok(verdict(check_pentagon(cat, &a, &b, &c, &d)?, || {
                    objs::<B>(&[&a, &b, &c, &d])
                }))
            }) as Check<'_>,
        ),
        (
            "triangle",
            Box::new(move |rng: &mut LawRng| {
                let [a, b] = [(); 2].map(|_| cat.random_obj(rng));
                Ok(verdict(check_triangle(cat, &a, &b)?, || {
                    objs::<B>(&[&a, &b])
                }))
            }),
        ),
        (
            "hexagon1",
            Box::new(move |rng: &mut LawRng| {
                let [a, b, c] = [(); 3].map(|_| cat.random_obj(rng));
                Ok(verdict(check_hexagon1(cat, &a, &b, &c)?, || {
                    objs::<B>(&[&a, &b, &c])
                }))
            }),
        ),
        (
            "hexagon2",
            Box::new(move |rng: &mut LawRng| {
                let [a, b, c] = [(); 3].map(|_| cat.random_obj(rng));
                Ok(verdict(check_hexagon2(cat, &a, &b, &c)?, || {
                    objs::<B>(&[&a, &b, &c])
                }))
            }),
        ),
        (
            "naturality-assoc",
            Box::new(move |rng: &mut LawRng| {
                let [f, g, h] = [(); 3].map(|_| {
                    let a = cat.random_obj(rng);
                    cat.random_mor_from(rng, &a)
                });
                Ok(verdict(check_assoc_natural(cat, &f, &g, &h)?, || {
                    mors(cat, &[&f, &g, &h])
                }))
            }),
        ),
        (
            "naturality-unitors",
            Box::new(move |rng: &mut LawRng| {
                let a = cat.random_obj(rng);
                let f = cat.random_mor_from(rng, &a);
                Ok(verdict(check_unitors_natural(cat, &f)?, || {
                    mors(cat, &[&f])
                }))
            }),
        ),
        (
            "naturality-braiding",
            Box::new(move |rng: &mut LawRng| {
                let [f, g] = [(); 2].map(|_| {
                    let a = cat.random_obj(rng);
                    cat.random_mor_from(rng, &a)
                });
                Ok(verdict(check_braid_natural(cat, &f, &g)?, || {
                    mors(cat, &[&f, &g])
                }))
            }),
        ),
        (
            "inverses",
            Box::new(move |rng: &mut LawRng| {
                let [a, b, c] = [(); 3].map(|_| cat.random_obj(rng));
                let f = cat.random_mor_from(rng, &a);
                Ok(verdict(check_inverses(cat, &a, &b, &c, &f)?, || {
                    format!("{} ; {}", objs::<B>(&[&a, &b, &c]), mors(cat, &[&f]))
                }))
            }),
        ),
    ]
}

fn run_all(instance: &str, seed: u64, cases: usize, laws: &[(&str, Check<'_>)]) -> Vec<LawReport> {
    laws.iter()
        .map(|(law, check)| run_law(law, instance, seed, cases, check))
        .collect()
}

pub fn check_bmc<B: Sample>(cat: &B, seed: u64, cases: usize) -> Vec<LawReport> {
    run_all(&cat.name(), seed, cases, &bmc_laws(cat))
}

// --- the two tensor products of ΣB -----------------------------------------

/// Horizontal strictness, vertical coherence, interchange, functoriality of
/// both tensors, and the Eckmann-Hilton braiding agreeing with `W(σ)`.
pub fn two_monoidal_laws<B: Sample>(s: &SigmaB<B>) -> Vec<(&'static str, Check<'_>)> {
    vec![
        (
            "horizontal-assoc",
            Box::new(move |rng: &mut LawRng| {
                let [x, y, z] = [(); 3].map(|_| s.random_obj(rng));
                let left = s.htensor_obj(&s.htensor_obj(&x, &y), &z);
                let right = s.htensor_obj(&x, &s.htensor_obj(&y, &z));
                let h = s.hassoc(&x, &y, &z);
                let ok = left.key() == right.key() && s.sigma_equal(&h, &s.sigma_id(&left));
                Ok(verdict(ok, || objs::<SigmaB<B>>(&[&x, &y, &z])))
            }) as Check<'_>,
        ),
        (
            "horizontal-units",
            Box::new(move |rng: &mut LawRng| {
                let x = s.random_obj(rng);
                let e = SigmaObj::new(Configuration::empty());
                let ok = s.htensor_obj(&x, &e).key() == x.key()
                    && s.htensor_obj(&e, &x).key() == x.key()
                    && s.sigma_equal(&s.hlunit(&x), &s.sigma_id(&x))
                    && s.sigma_equal(&s.hrunit(&x), &s.sigma_id(&x));
                Ok(verdict(ok, || objs::<SigmaB<B>>(&[&x])))
            }),
        ),
        (
            "horizontal-assoc-morphisms",
            Box::new(move |rng: &mut LawRng| {
                let [f, g, h] = [(); 3].map(|_| {
                    let x = s.random_obj(rng);
                    s.random_clique_map(rng, &x)
                });
                let lhs = s.htensor(&s.htensor(&f, &g)?, &h)?;
                let rhs = s.htensor(&f, &s.htensor(&g, &h)?)?;
                let e = s.sigma_id(&SigmaObj::new(Configuration::empty()));
                let ok = s.sigma_equal(&lhs, &rhs)
                    && s.sigma_equal(&s.htensor(&f, &e)?, &f)
                    && s.sigma_equal(&s.htensor(&e, &f)?, &f);
                Ok(verdict(ok, || mors(s, &[&f, &g, &h])))
            }),
        ),
        (
            "vertical-pentagon",
            Box::new(move |rng: &mut LawRng| {
                let [a, b, c, d] = [(); 4].map(|_| s.random_obj(rng));
                Ok(verdict(check_pentagon(s, &a, &b, &c, &d)?, || {
                    objs::<SigmaB<B>>(&[&a, &b, &c, &d])
                }))
            }),
        ),
        (
            "vertical-triangle",
            Box::new(move |rng: &mut LawRng| {
                let [a, b] = [(); 2].map(|_| s.random_obj(rng));
                Ok(verdict(check_triangle(s, &a, &b)?, || {
                    objs::<SigmaB<B>>(&[&a, &b])
                }))
            }),
        ),
        (
            "interchange",
            Box::new(move |rng: &mut LawRng| {
                let [f, g, h, j] = [(); 4].map(|_| {
                    let x = s.random_obj(rng);
                    s.random_clique_map(rng, &x)
                });
                Ok(verdict(s.interchange_holds(&f, &g, &h, &j)?, || {
                    mors(s, &[&f, &g, &h, &j])
                }))
            }),
        ),
        (
            "tensor-functoriality",
            Box::new(move |rng: &mut LawRng| {
                let [(f1, f2), (g1, g2)] = [(); 2].map(|_| {
                    let x = s.random_obj(rng);
                    let f = s.random_clique_map(rng, &x);
                    let g = s.random_clique_map(rng, f.target());
                    (f, g)
                });
                let (f12, g12) = (s.sigma_compose(&f1, &f2)?, s.sigma_compose(&g1, &g2)?);
                let v_ok = s.sigma_equal(
                    &s.vtensor(&f12, &g12)?,
                    &s.sigma_compose(&s.vtensor(&f1, &g1)?, &s.vtensor(&f2, &g2)?)?,
                );
                let h_ok = s.sigma_equal(
                    &s.htensor(&f12, &g12)?,
                    &s.sigma_compose(&s.htensor(&f1, &g1)?, &s.htensor(&f2, &g2)?)?,
                );
                Ok(verdict(v_ok && h_ok, || mors(s, &[&f1, &f2, &g1, &g2])))
            }),
        ),
        (
            "eckmann-hilton",
            Box::new(move |rng: &mut LawRng| {
                let cat = s.base();
                let (a, b) = (cat.random_label(rng), cat.random_label(rng));
                let eh = s.eh_braiding(&equiv::w_obj::<B>(&a), &equiv::w_obj::<B>(&b));
                let sigma = equiv::braiding_image(s, &a, &b)?;
                Ok(verdict(s.sigma_equal(&eh, &sigma), || {
                    format!("a={a} b={b}")
                }))
            }),
        ),
    ]
}

pub fn check_two_monoidal<B: Sample>(s: &SigmaB<B>, seed: u64, cases: usize) -> Vec<LawReport> {
    run_all(&s.name(), seed, cases, &two_monoidal_laws(s))
}

// --- the comparison functor ------------------------------------------------

/// Functoriality of `W`, naturality of its monoidal constraint, the monoidal
/// and braided squares, and two-sided essential-surjectivity witnesses.
pub fn equivalence_laws<B: Sample>(s: &SigmaB<B>) -> Vec<(&'static str, Check<'_>)> {
    let cat = s.base();
    vec![
        (
            "w-functorial",
            Box::new(move |rng: &mut LawRng| {
                let a = cat.random_obj(rng);
                let f = cat.random_mor_from(rng, &a);
                let g = cat.random_mor_from(rng, &cat.target(&f));
                Ok(verdict(equiv::check_functorial(s, &f, &g)?, || {
                    mors(cat, &[&f, &g])
                }))
            }) as Check<'_>,
        ),
        (
            "phi-natural",
            Box::new(move |rng: &mut LawRng| {
                let [f, g] = [(); 2].map(|_| {
                    let a = cat.random_obj(rng);
                    cat.random_mor_from(rng, &a)
                });
                Ok(verdict(equiv::check_phi_natural(s, &f, &g)?, || {
                    mors(cat, &[&f, &g])
                }))
            }),
        ),
        (
            "monoidal-assoc",
            Box::new(move |rng: &mut LawRng| {
                let [a, b, c] = [(); 3].map(|_| cat.random_obj(rng));
                Ok(verdict(equiv::check_monoidal_assoc(s, &a, &b, &c)?, || {
                    objs::<B>(&[&a, &b, &c])
                }))
            }),
        ),
        (
            "monoidal-unit",
            Box::new(move |rng: &mut LawRng| {
                let a = cat.random_obj(rng);
                Ok(verdict(equiv::check_monoidal_unit(s, &a)?, || {
                    objs::<B>(&[&a])
                }))
            }),
        ),
        (
            "braided-square",
            Box::new(move |rng: &mut LawRng| {
                let [a, b] = [(); 2].map(|_| cat.random_obj(rng));
                Ok(verdict(equiv::check_braided(s, &a, &b)?, || {
                    objs::<B>(&[&a, &b])
                }))
            }),
        ),
        (
            "essential-surjectivity",
            Box::new(move |rng: &mut LawRng| {
                let x = SigmaObj::new(s.random_config(rng, 5));
                let w = equiv::ess_surj_witness(s, &x)?;
                Ok(verdict(equiv::witness_is_iso(s, &w)?, || {
                    objs::<SigmaB<B>>(&[&x])
                }))
            }),
        ),
    ]
}

pub fn check_equivalence<B: Sample>(s: &SigmaB<B>, seed: u64, cases: usize) -> Vec<LawReport> {
    run_all(&s.name(), seed, cases, &equivalence_laws(s))
}
