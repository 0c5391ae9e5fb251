//! The comparison functor `W: B → U ΣB` and executable checks that it is a
//! braided monoidal equivalence.

use crate::bmc::{eval_word, Bmc};
use crate::config::Configuration;
use crate::error::Result;
use crate::sigma::{Mor, Obj, SigmaB, SigmaObj};
use crate::words::Word;

/// An object `b` of `B` with an isomorphism `X → W b`.
#[derive(Clone, Debug)]
pub struct Witness<B: Bmc> {
    pub object: B::Obj,
    pub iso: Mor<B>,
    pub inverse: Mor<B>,
}

/// The singleton clique of `b`.
pub fn w_obj<B: Bmc>(b: &B::Obj) -> Obj<B> {
    SigmaObj::new(Configuration::singleton(b.clone()))
}

/// The clique map of singletons represented by `f`.
pub fn w_mor<B: Bmc>(s: &SigmaB<B>, f: &B::Mor) -> Mor<B> {
    let cat = s.base();
    let (a, b) = (cat.source(f), cat.target(f));
    let (src, tgt) = (Configuration::singleton(a), Configuration::singleton(b));
    s.represented(&src, &tgt, &src.canonical_rep(), &tgt.canonical_rep(), f)
        .expect("singleton linearisations fit")
}

/// The monoidal constraint `W a / W b → W (a ⊗ b)`, represented by `1_{a⊗b}`.
pub fn phi<B: Bmc>(s: &SigmaB<B>, a: &B::Obj, b: &B::Obj) -> Mor<B> {
    let cat = s.base();
    let src = Configuration::singleton(a.clone()).vstack(&Configuration::singleton(b.clone()));
    let tgt = Configuration::singleton(cat.tensor_obj(a, b));
    let id = cat.id(&cat.tensor_obj(a, b));
    s.represented(&src, &tgt, &src.canonical_rep(), &tgt.canonical_rep(), &id)
        .expect("pair linearisation fits")
}

/// The unit constraint `∅ → W I`, represented by `1_I`.
pub fn phi_unit<B: Bmc>(s: &SigmaB<B>) -> Mor<B> {
    let cat = s.base();
    let src = Configuration::empty();
    let tgt = Configuration::singleton(cat.unit());
    s.represented(
        &src,
        &tgt,
        &src.canonical_rep(),
        &tgt.canonical_rep(),
        &cat.id(&cat.unit()),
    )
    .expect("unit linearisation fits")
}

/// `b` is the evaluation of the canonical word of `X`; the isomorphism is
/// represented by `1_b`.
pub fn ess_surj_witness<B: Bmc>(s: &SigmaB<B>, x: &Obj<B>) -> Result<Witness<B>> {
    let cat = s.base();
    let rep = x.witness().canonical_rep();
    let object = eval_word(cat, &rep.word);
    let tgt = Configuration::singleton(object.clone());
    let iso = s.represented(
        x.witness(),
        &tgt,
        &rep,
        &tgt.canonical_rep(),
        &cat.id(&object),
    )?;
    let inverse = s.sigma_inverse(&iso)?;
    Ok(Witness {
        object,
        iso,
        inverse,
    })
}

/// Whether the witness is a two-sided inverse pair.
pub fn witness_is_iso<B: Bmc>(s: &SigmaB<B>, w: &Witness<B>) -> Result<bool> {
    let there = s.sigma_compose(&w.iso, &w.inverse)?;
    let back = s.sigma_compose(&w.inverse, &w.iso)?;
    Ok(s.sigma_equal(&there, &s.sigma_id(w.iso.source()))
        && s.sigma_equal(&back, &s.sigma_id(w.iso.target())))
}

pub fn check_functorial<B: Bmc>(s: &SigmaB<B>, f: &B::Mor, g: &B::Mor) -> Result<bool> {
    let cat = s.base();
    let gf = cat.compose(f, g)?;
    let composite = s.sigma_compose(&w_mor(s, f), &w_mor(s, g))?;
    let id_a = cat.id(&cat.source(f));
    Ok(s.sigma_equal(&w_mor(s, &gf), &composite)
        && s.sigma_equal(&w_mor(s, &id_a), &s.sigma_id(&w_obj::<B>(&cat.source(f)))))
}

/// `Wf / Wg ; phi(a', b') = phi(a, b) ; W(f ⊗ g)`.
pub fn check_phi_natural<B: Bmc>(s: &SigmaB<B>, f: &B::Mor, g: &B::Mor) -> Result<bool> {
    let cat = s.base();
    let (a, a2) = (cat.source(f), cat.target(f));
    let (b, b2) = (cat.source(g), cat.target(g));
    let lhs = s.sigma_compose(&s.vtensor(&w_mor(s, f), &w_mor(s, g))?, &phi(s, &a2, &b2))?;
    let rhs = s.sigma_compose(&phi(s, &a, &b), &w_mor(s, &cat.tensor(f, g)))?;
    Ok(s.sigma_equal(&lhs, &rhs))
}

/// The associativity hexagon relating `phi`, the vertical associator and
/// `W(α)`.
pub fn check_monoidal_assoc<B: Bmc>(
    s: &SigmaB<B>,
    a: &B::Obj,
    b: &B::Obj,
    c: &B::Obj,
) -> Result<bool> {
    let cat = s.base();
    let (wa, wb, wc) = (w_obj::<B>(a), w_obj::<B>(b), w_obj::<B>(c));
    let lhs = s.sigma_compose_all(&[
        s.vassoc(&wa, &wb, &wc),
        s.vtensor(&s.sigma_id(&wa), &phi(s, b, c))?,
        phi(s, a, &cat.tensor_obj(b, c)),
    ])?;
    let rhs = s.sigma_compose_all(&[
        s.vtensor(&phi(s, a, b), &s.sigma_id(&wc))?,
        phi(s, &cat.tensor_obj(a, b), c),
        w_mor(s, &cat.assoc(a, b, c)),
    ])?;
    Ok(s.sigma_equal(&lhs, &rhs))
}

/// Both unit squares relating `phi`, the unit constraint and `W(λ)`, `W(ρ)`.
pub fn check_monoidal_unit<B: Bmc>(s: &SigmaB<B>, a: &B::Obj) -> Result<bool> {
    let cat = s.base();
    let wa = w_obj::<B>(a);
    let unit = phi_unit(s);
    let left = s.sigma_compose_all(&[
        s.vtensor(&unit, &s.sigma_id(&wa))?,
        phi(s, &cat.unit(), a),
        w_mor(s, &cat.lunit(a)),
    ])?;
    let right = s.sigma_compose_all(&[
        s.vtensor(&s.sigma_id(&wa), &unit)?,
        phi(s, a, &cat.unit()),
        w_mor(s, &cat.runit(a)),
    ])?;
    Ok(s.sigma_equal(&left, &s.vlunit(&wa)) && s.sigma_equal(&right, &s.vrunit(&wa)))
}

/// `W(σ(a, b))` moved onto the vertical tensor of singletons, the
/// comparison target for the Eckmann-Hilton braiding.
pub fn braiding_image<B: Bmc>(s: &SigmaB<B>, a: &B::Obj, b: &B::Obj) -> Result<Mor<B>> {
    s.sigma_compose_all(&[
        phi(s, a, b),
        w_mor(s, &s.base().braid(a, b)),
        s.sigma_inverse(&phi(s, b, a))?,
    ])
}

/// The braided-functor square: `EH(Wa, Wb) ; phi(b, a) = phi(a, b) ; W(σ)`.
pub fn check_braided<B: Bmc>(s: &SigmaB<B>, a: &B::Obj, b: &B::Obj) -> Result<bool> {
    let cat = s.base();
    let (wa, wb) = (w_obj::<B>(a), w_obj::<B>(b));
    let lhs = s.sigma_compose(&s.eh_braiding(&wa, &wb), &phi(s, b, a))?;
    let rhs = s.sigma_compose(&phi(s, a, b), &w_mor(s, &cat.braid(a, b)))?;
    Ok(s.sigma_equal(&lhs, &rhs))
}

/// Outcome of the faithfulness and fullness checks on a sample of
/// morphisms `a → b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaithfulFullReport {
    pub pairs: usize,
    /// Pairs where equality in `B` and in `U ΣB` disagree.
    pub faithful_failures: Vec<(usize, usize)>,
    /// Sample indices whose crossed-representative map fails to round-trip.
    pub full_failures: Vec<usize>,
}

impl FaithfulFullReport {
    pub fn passed(&self) -> bool {
        self.faithful_failures.is_empty() && self.full_failures.is_empty()
    }
}

/// Faithfulness: `f = g` in `B` iff `Wf = Wg`, over all pairs of the sample.
/// Fullness: a clique map between `W a` and `W b` given on a non-canonical
/// linearisation normalizes to a morphism `f'` of `B` with `W f'` equal to it.
pub fn check_faithful_full<B: Bmc>(s: &SigmaB<B>, sample: &[B::Mor]) -> FaithfulFullReport {
    let cat = s.base();
    let images: Vec<_> = sample.iter().map(|f| w_mor(s, f)).collect();
    let mut report = FaithfulFullReport::default();
    for i in 0..sample.len() {
        for j in i + 1..sample.len() {
            report.pairs += 1;
            if cat.mor_eq(&sample[i], &sample[j]) != s.sigma_equal(&images[i], &images[j]) {
                report.faithful_failures.push((i, j));
            }
        }
    }
    for (i, f) in sample.iter().enumerate() {
        if !round_trips(s, f).unwrap_or(false) {
            report.full_failures.push(i);
        }
    }
    report
}

/// Represents `f: a → b` on the linearisations `I ⊗ a` and `b ⊗ I` of the
/// singletons, then reads the normalized representative back through `W`.
fn round_trips<B: Bmc>(s: &SigmaB<B>, f: &B::Mor) -> Result<bool> {
    let cat = s.base();
    let (a, b) = (cat.source(f), cat.target(f));
    let (src, tgt) = (
        Configuration::singleton(a.clone()),
        Configuration::singleton(b.clone()),
    );
    let padded = |o: &B::Obj, left: bool| {
        let leaf = Word::leaf(o.clone());
        let word = if left {
            Word::tensor(Word::Unit, leaf)
        } else {
            Word::tensor(leaf, Word::Unit)
        };
        crate::config::LinearRep::new(word, crate::braid::LabelledBraid::identity(vec![o.clone()]))
    };
    let rep = cat.compose_all(&[cat.lunit(&a), f.clone(), cat.runit_inv(&b)])?;
    let m = s.represented(&src, &tgt, &padded(&a, true)?, &padded(&b, false)?, &rep)?;
    let back = w_mor(s, m.representative());
    Ok(s.sigma_equal(&back, &m) && s.sigma_equal(&back, &w_mor(s, f)))
}
