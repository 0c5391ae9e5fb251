//! Slide cliques of configurations labelled by objects of a braided monoidal
//! category `B`, with clique maps between them.
//!
//! A clique map is stored by one representative: a linearisation of each end
//! and a morphism of `B` between the evaluated words. Every map is normalized
//! on construction so both linearisations are canonical; two maps are equal
//! iff their endpoints have equal slide keys and their normalized
//! representatives agree in `B`.

use std::fmt;

use serde_json::json;

use crate::bmc::{eval_braid, eval_word, Bmc};
use crate::braid::{LabelledBraid, Permutation};
use crate::config::{Configuration, CrossingConvention, LinearRep, SlideKey};
use crate::error::{Error, Result};
use crate::words::Word;

/// A slide clique, held by its key and any member.
#[derive(Clone, Debug)]
pub struct SigmaObj<L> {
    key: SlideKey<L>,
    witness: Configuration<L>,
}

impl<L: Clone> SigmaObj<L> {
    pub fn new(witness: Configuration<L>) -> Self {
        Self {
            key: witness.slide_key(),
            witness,
        }
    }

    pub fn key(&self) -> &SlideKey<L> {
        &self.key
    }

    pub fn witness(&self) -> &Configuration<L> {
        &self.witness
    }
}

impl<L: PartialEq> PartialEq for SigmaObj<L> {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl<L: fmt::Display> fmt::Display for SigmaObj<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key)
    }
}

/// A clique map in normalized form: `src_rep` and `tgt_rep` are the
/// canonical linearisations of the endpoint witnesses.
#[derive(Clone, Debug)]
pub struct SigmaMor<L, M> {
    source: SigmaObj<L>,
    target: SigmaObj<L>,
    src_rep: LinearRep<L>,
    tgt_rep: LinearRep<L>,
    f: M,
}

impl<L, M> SigmaMor<L, M> {
    pub fn source(&self) -> &SigmaObj<L> {
        &self.source
    }

    pub fn target(&self) -> &SigmaObj<L> {
        &self.target
    }

    pub fn src_rep(&self) -> &LinearRep<L> {
        &self.src_rep
    }

    pub fn tgt_rep(&self) -> &LinearRep<L> {
        &self.tgt_rep
    }

    /// The representative morphism of `B` between the canonical words.
    pub fn representative(&self) -> &M {
        &self.f
    }
}

/// The braid comparing two linearisations of one clique: `γ0⁻¹ · γ1`.
pub fn mediating_braid<L: Clone + PartialEq + fmt::Debug>(
    rep0: &LinearRep<L>,
    rep1: &LinearRep<L>,
) -> Result<LabelledBraid<L>> {
    if rep0.gamma.source() != rep1.gamma.source() {
        return Err(Error::NotSlideEquivalent);
    }
    rep0.gamma.invert().compose(&rep1.gamma)
}

/// The clique construction over a base category.
#[derive(Clone, Debug)]
pub struct SigmaB<B> {
    base: B,
    convention: CrossingConvention,
}

pub type Obj<B> = SigmaObj<<B as Bmc>::Obj>;
pub type Mor<B> = SigmaMor<<B as Bmc>::Obj, <B as Bmc>::Mor>;

impl<B: Bmc> SigmaB<B> {
    pub fn new(base: B) -> Self {
        Self::with_convention(base, CrossingConvention::Positive)
    }

    pub fn with_convention(base: B, convention: CrossingConvention) -> Self {
        Self { base, convention }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn convention(&self) -> CrossingConvention {
        self.convention
    }

    pub fn obj(&self, witness: Configuration<B::Obj>) -> Obj<B> {
        SigmaObj::new(witness)
    }

    fn eval(&self, word: &Word<B::Obj>) -> B::Obj {
        eval_word(&self.base, word)
    }

    /// The connecting isomorphism of `B` between two linearisations.
    pub fn connecting_iso(
        &self,
        rep0: &LinearRep<B::Obj>,
        rep1: &LinearRep<B::Obj>,
    ) -> Result<B::Mor> {
        let braid = mediating_braid(rep0, rep1)?;
        eval_braid(&self.base, &rep0.word, &rep1.word, &braid)
    }

    /// The clique map `source → target` represented by `f` between the given
    /// linearisations, normalized.
    pub fn represented(
        &self,
        source: &Configuration<B::Obj>,
        target: &Configuration<B::Obj>,
        src_rep: &LinearRep<B::Obj>,
        tgt_rep: &LinearRep<B::Obj>,
        f: &B::Mor,
    ) -> Result<Mor<B>> {
        if !src_rep.fits(&source.labels()) || !tgt_rep.fits(&target.labels()) {
            return Err(Error::LabelMismatch(
                "linearisation does not start at the canonical strand order".into(),
            ));
        }
        let (fs, ft) = (self.base.source(f), self.base.target(f));
        if fs != self.eval(&src_rep.word) || ft != self.eval(&tgt_rep.word) {
            return Err(Error::LabelMismatch(format!(
                "representative {fs} -> {ft} does not match {} -> {}",
                src_rep.word, tgt_rep.word
            )));
        }
        let canon_src = source.canonical_rep();
        let canon_tgt = target.canonical_rep();
        let f = self.base.compose_all(&[
            self.connecting_iso(&canon_src, src_rep)?,
            f.clone(),
            self.connecting_iso(tgt_rep, &canon_tgt)?,
        ])?;
        Ok(SigmaMor {
            source: SigmaObj::new(source.clone()),
            target: SigmaObj::new(target.clone()),
            src_rep: canon_src,
            tgt_rep: canon_tgt,
            f,
        })
    }

    /// Recomputes the normal form; stored maps are already normal, so this
    /// is the identity on them.
    pub fn normalize(&self, m: &Mor<B>) -> Result<Mor<B>> {
        self.represented(
            &m.source.witness,
            &m.target.witness,
            &m.src_rep,
            &m.tgt_rep,
            &m.f,
        )
    }

    pub fn sigma_id(&self, x: &Obj<B>) -> Mor<B> {
        self.clique_identity(&x.witness, &x.witness)
            .expect("a configuration is slide-equivalent to itself")
    }

    /// The identity clique map between two members of one clique.
    pub fn clique_identity(
        &self,
        source: &Configuration<B::Obj>,
        target: &Configuration<B::Obj>,
    ) -> Result<Mor<B>> {
        if !source.slide_equal(target) {
            return Err(Error::NotSlideEquivalent);
        }
        let rep = source.canonical_rep();
        let id = self.base.id(&self.eval(&rep.word));
        self.represented(source, target, &rep, &rep, &id)
    }

    pub fn sigma_equal(&self, m1: &Mor<B>, m2: &Mor<B>) -> bool {
        m1.source == m2.source && m1.target == m2.target && self.base.mor_eq(&m1.f, &m2.f)
    }

    /// `m1` then `m2`.
    pub fn sigma_compose(&self, m1: &Mor<B>, m2: &Mor<B>) -> Result<Mor<B>> {
        if m1.target != m2.source {
            return Err(Error::NotComposable(format!(
                "{} then {}",
                m1.target, m2.source
            )));
        }
        // equal keys give identical canonical words, so the middle matches
        Ok(SigmaMor {
            source: m1.source.clone(),
            target: m2.target.clone(),
            src_rep: m1.src_rep.clone(),
            tgt_rep: m2.tgt_rep.clone(),
            f: self.base.compose(&m1.f, &m2.f)?,
        })
    }

    pub fn sigma_compose_all(&self, path: &[Mor<B>]) -> Result<Mor<B>> {
        let (first, rest) = path
            .split_first()
            .ok_or_else(|| Error::NotComposable("empty path".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, m| self.sigma_compose(&acc, m))
    }

    pub fn sigma_inverse(&self, m: &Mor<B>) -> Result<Mor<B>> {
        Ok(SigmaMor {
            source: m.target.clone(),
            target: m.source.clone(),
            src_rep: m.tgt_rep.clone(),
            tgt_rep: m.src_rep.clone(),
            f: self.base.inverse(&m.f)?,
        })
    }

    pub fn vtensor_obj(&self, x: &Obj<B>, y: &Obj<B>) -> Obj<B> {
        SigmaObj::new(x.witness.vstack(&y.witness))
    }

    pub fn htensor_obj(&self, x: &Obj<B>, y: &Obj<B>) -> Obj<B> {
        SigmaObj::new(x.witness.hstack(&y.witness))
    }

    /// `m1` stacked above `m2`, represented by `f1 ⊗ f2`.
    pub fn vtensor(&self, m1: &Mor<B>, m2: &Mor<B>) -> Result<Mor<B>> {
        let stack_rep = |r1: &LinearRep<B::Obj>, r2: &LinearRep<B::Obj>| LinearRep {
            word: Word::tensor(r1.word.clone(), r2.word.clone()),
            gamma: r1.gamma.juxtapose(&r2.gamma),
        };
        self.represented(
            &m1.source.witness.vstack(&m2.source.witness),
            &m1.target.witness.vstack(&m2.target.witness),
            &stack_rep(&m1.src_rep, &m2.src_rep),
            &stack_rep(&m1.tgt_rep, &m2.tgt_rep),
            &self.base.tensor(&m1.f, &m2.f),
        )
    }

    /// The column-major linearisation of `left | right`: the order change
    /// from canonical to column-major order, then both linearisations side
    /// by side.
    fn column_rep(
        &self,
        joined: &Configuration<B::Obj>,
        perm: &Permutation,
        word: Word<B::Obj>,
        columns: LabelledBraid<B::Obj>,
    ) -> Result<LinearRep<B::Obj>> {
        let change = self.convention.order_change(joined.labels(), perm)?;
        LinearRep::new(word, change.compose(&columns)?)
    }

    /// `m1` beside `m2`, represented by `f1 ⊗ f2` on column-major
    /// linearisations.
    pub fn htensor(&self, m1: &Mor<B>, m2: &Mor<B>) -> Result<Mor<B>> {
        let (src, src_perm) = m1.source.witness.hstack_with_order(&m2.source.witness);
        let (tgt, tgt_perm) = m1.target.witness.hstack_with_order(&m2.target.witness);
        let src_rep = self.column_rep(
            &src,
            &src_perm,
            Word::tensor(m1.src_rep.word.clone(), m2.src_rep.word.clone()),
            m1.src_rep.gamma.juxtapose(&m2.src_rep.gamma),
        )?;
        let tgt_rep = self.column_rep(
            &tgt,
            &tgt_perm,
            Word::tensor(m1.tgt_rep.word.clone(), m2.tgt_rep.word.clone()),
            m1.tgt_rep.gamma.juxtapose(&m2.tgt_rep.gamma),
        )?;
        self.represented(
            &src,
            &tgt,
            &src_rep,
            &tgt_rep,
            &self.base.tensor(&m1.f, &m2.f),
        )
    }

    fn rn(&self, x: &Obj<B>) -> Word<B::Obj> {
        Word::right_nest(&x.witness.labels())
    }

    /// A linearisation with the empty braid.
    fn straight(&self, word: Word<B::Obj>) -> LinearRep<B::Obj> {
        let labels = word.flatten();
        LinearRep {
            word,
            gamma: LabelledBraid::identity(labels),
        }
    }

    /// `(X/Y)/Z → X/(Y/Z)`, represented by the associator of `B`.
    pub fn vassoc(&self, x: &Obj<B>, y: &Obj<B>, z: &Obj<B>) -> Mor<B> {
        let (wx, wy, wz) = (&x.witness, &y.witness, &z.witness);
        let (rx, ry, rz) = (self.rn(x), self.rn(y), self.rn(z));
        let f = self
            .base
            .assoc(&self.eval(&rx), &self.eval(&ry), &self.eval(&rz));
        self.represented(
            &wx.vstack(wy).vstack(wz),
            &wx.vstack(&wy.vstack(wz)),
            &self.straight(Word::tensor(
                Word::tensor(rx.clone(), ry.clone()),
                rz.clone(),
            )),
            &self.straight(Word::tensor(rx, Word::tensor(ry, rz))),
            &f,
        )
        .expect("associator representative is well formed")
    }

    pub fn vassoc_inv(&self, x: &Obj<B>, y: &Obj<B>, z: &Obj<B>) -> Mor<B> {
        self.sigma_inverse(&self.vassoc(x, y, z))
            .expect("structural maps are invertible")
    }

    /// `∅/X → X`, represented by the left unitor of `B`.
    pub fn vlunit(&self, x: &Obj<B>) -> Mor<B> {
        let rx = self.rn(x);
        let empty = Configuration::empty();
        self.represented(
            &empty.vstack(&x.witness),
            &x.witness,
            &self.straight(Word::tensor(Word::Unit, rx.clone())),
            &self.straight(rx.clone()),
            &self.base.lunit(&self.eval(&rx)),
        )
        .expect("unitor representative is well formed")
    }

    pub fn vlunit_inv(&self, x: &Obj<B>) -> Mor<B> {
        self.sigma_inverse(&self.vlunit(x))
            .expect("structural maps are invertible")
    }

    /// `X/∅ → X`, represented by the right unitor of `B`.
    pub fn vrunit(&self, x: &Obj<B>) -> Mor<B> {
        let rx = self.rn(x);
        let empty = Configuration::empty();
        self.represented(
            &x.witness.vstack(&empty),
            &x.witness,
            &self.straight(Word::tensor(rx.clone(), Word::Unit)),
            &self.straight(rx.clone()),
            &self.base.runit(&self.eval(&rx)),
        )
        .expect("unitor representative is well formed")
    }

    pub fn vrunit_inv(&self, x: &Obj<B>) -> Mor<B> {
        self.sigma_inverse(&self.vrunit(x))
            .expect("structural maps are invertible")
    }

    /// `(X|Y)|Z → X|(Y|Z)`, represented by the associator of `B` on
    /// column-major linearisations.
    pub fn hassoc(&self, x: &Obj<B>, y: &Obj<B>, z: &Obj<B>) -> Mor<B> {
        let (wx, wy, wz) = (&x.witness, &y.witness, &z.witness);
        let (rx, ry, rz) = (self.rn(x), self.rn(y), self.rn(z));
        let id_z = Permutation::identity(wz.len());
        let id_x = Permutation::identity(wx.len());
        let (xy, p_xy) = wx.hstack_with_order(wy);
        let (left, p_left) = xy.hstack_with_order(wz);
        let (yz, p_yz) = wy.hstack_with_order(wz);
        let (right, p_right) = wx.hstack_with_order(&yz);
        let straight_labels = |w: &Word<B::Obj>| LabelledBraid::identity(w.flatten());
        let src_word = Word::tensor(Word::tensor(rx.clone(), ry.clone()), rz.clone());
        let tgt_word = Word::tensor(rx.clone(), Word::tensor(ry.clone(), rz.clone()));
        let src_rep = self
            .column_rep(
                &left,
                &p_left.then(&p_xy.juxtapose(&id_z)),
                src_word.clone(),
                straight_labels(&src_word),
            )
            .expect("column-major linearisation");
        let tgt_rep = self
            .column_rep(
                &right,
                &p_right.then(&id_x.juxtapose(&p_yz)),
                tgt_word.clone(),
                straight_labels(&tgt_word),
            )
            .expect("column-major linearisation");
        let f = self
            .base
            .assoc(&self.eval(&rx), &self.eval(&ry), &self.eval(&rz));
        self.represented(&left, &right, &src_rep, &tgt_rep, &f)
            .expect("associator representative is well formed")
    }

    /// `∅|X → X`.
    pub fn hlunit(&self, x: &Obj<B>) -> Mor<B> {
        let rx = self.rn(x);
        let (src, perm) = Configuration::empty().hstack_with_order(&x.witness);
        let word = Word::tensor(Word::Unit, rx.clone());
        let src_rep = self
            .column_rep(&src, &perm, word, LabelledBraid::identity(rx.flatten()))
            .expect("column-major linearisation");
        self.represented(
            &src,
            &x.witness,
            &src_rep,
            &self.straight(rx.clone()),
            &self.base.lunit(&self.eval(&rx)),
        )
        .expect("unitor representative is well formed")
    }

    pub fn hlunit_inv(&self, x: &Obj<B>) -> Mor<B> {
        self.sigma_inverse(&self.hlunit(x))
            .expect("structural maps are invertible")
    }

    /// `X|∅ → X`.
    pub fn hrunit(&self, x: &Obj<B>) -> Mor<B> {
        let rx = self.rn(x);
        let (src, perm) = x.witness.hstack_with_order(&Configuration::empty());
        let word = Word::tensor(rx.clone(), Word::Unit);
        let src_rep = self
            .column_rep(&src, &perm, word, LabelledBraid::identity(rx.flatten()))
            .expect("column-major linearisation");
        self.represented(
            &src,
            &x.witness,
            &src_rep,
            &self.straight(rx.clone()),
            &self.base.runit(&self.eval(&rx)),
        )
        .expect("unitor representative is well formed")
    }

    pub fn hrunit_inv(&self, x: &Obj<B>) -> Mor<B> {
        self.sigma_inverse(&self.hrunit(x))
            .expect("structural maps are invertible")
    }

    /// Whether `(f|g)/(h|j)` and `(f/h)|(g/j)` are the same clique map.
    pub fn interchange_holds(
        &self,
        f: &Mor<B>,
        g: &Mor<B>,
        h: &Mor<B>,
        j: &Mor<B>,
    ) -> Result<bool> {
        let lhs = self.vtensor(&self.htensor(f, g)?, &self.htensor(h, j)?)?;
        let rhs = self.htensor(&self.vtensor(f, h)?, &self.vtensor(g, j)?)?;
        Ok(self.sigma_equal(&lhs, &rhs))
    }

    /// The six clique maps whose composite is the braiding `A/B → B/A`:
    /// horizontal units, interchange, vertical units, vertical units,
    /// interchange, horizontal units.
    pub fn eh_steps(&self, a: &Obj<B>, b: &Obj<B>) -> [Mor<B>; 6] {
        let fail = "Eckmann-Hilton step is well formed";
        let s1 = self
            .vtensor(&self.hlunit_inv(a), &self.hrunit_inv(b))
            .expect(fail);
        let s3 = self.htensor(&self.vlunit(b), &self.vrunit(a)).expect(fail);
        let s2 = self
            .clique_identity(&s1.target.witness, &s3.source.witness)
            .expect(fail);
        let s4 = self
            .htensor(&self.vrunit_inv(b), &self.vlunit_inv(a))
            .expect(fail);
        let s6 = self.vtensor(&self.hrunit(b), &self.hlunit(a)).expect(fail);
        let s5 = self
            .clique_identity(&s4.target.witness, &s6.source.witness)
            .expect(fail);
        [s1, s2, s3, s4, s5, s6]
    }

    pub fn eh_braiding(&self, a: &Obj<B>, b: &Obj<B>) -> Mor<B> {
        self.sigma_compose_all(&self.eh_steps(a, b))
            .expect("Eckmann-Hilton steps compose")
    }

    pub fn show(&self, m: &Mor<B>) -> String {
        format!(
            "{} -> {} : {}",
            m.source,
            m.target,
            self.base.show_mor(&m.f)
        )
    }

    /// Debug dump: keys, canonical words, linearising braids and the
    /// representative in the base category's encoding.
    pub fn mor_json(&self, m: &Mor<B>) -> serde_json::Value {
        json!({
            "source_key": m.source.key.to_string(),
            "target_key": m.target.key.to_string(),
            "source_word": m.src_rep.word.to_string(),
            "target_word": m.tgt_rep.word.to_string(),
            "source_gamma": m.src_rep.gamma.braid().to_string(),
            "target_gamma": m.tgt_rep.gamma.braid().to_string(),
            "representative": self.base.mor_json(&m.f),
        })
    }
}

/// The underlying braided monoidal category: vertical tensor, its weak
/// constraints, and the Eckmann-Hilton braiding.
impl<B: Bmc> Bmc for SigmaB<B> {
    type Obj = Obj<B>;
    type Mor = Mor<B>;

    fn name(&self) -> String {
        match self.convention {
            CrossingConvention::Positive => format!("sigma({})", self.base.name()),
            CrossingConvention::Mirrored => format!("sigma-mirrored({})", self.base.name()),
        }
    }

    fn unit(&self) -> Obj<B> {
        SigmaObj::new(Configuration::empty())
    }

    fn tensor_obj(&self, a: &Obj<B>, b: &Obj<B>) -> Obj<B> {
        self.vtensor_obj(a, b)
    }

    fn source(&self, f: &Mor<B>) -> Obj<B> {
        f.source.clone()
    }

    fn target(&self, f: &Mor<B>) -> Obj<B> {
        f.target.clone()
    }

    fn id(&self, a: &Obj<B>) -> Mor<B> {
        self.sigma_id(a)
    }

    fn compose(&self, f: &Mor<B>, g: &Mor<B>) -> Result<Mor<B>> {
        self.sigma_compose(f, g)
    }

    fn tensor(&self, f: &Mor<B>, g: &Mor<B>) -> Mor<B> {
        self.vtensor(f, g).expect("vertical tensor is total")
    }

    fn inverse(&self, f: &Mor<B>) -> Result<Mor<B>> {
        self.sigma_inverse(f)
    }

    fn mor_eq(&self, f: &Mor<B>, g: &Mor<B>) -> bool {
        self.sigma_equal(f, g)
    }

    fn assoc(&self, a: &Obj<B>, b: &Obj<B>, c: &Obj<B>) -> Mor<B> {
        self.vassoc(a, b, c)
    }

    fn assoc_inv(&self, a: &Obj<B>, b: &Obj<B>, c: &Obj<B>) -> Mor<B> {
        self.vassoc_inv(a, b, c)
    }

    fn lunit(&self, a: &Obj<B>) -> Mor<B> {
        self.vlunit(a)
    }

    fn lunit_inv(&self, a: &Obj<B>) -> Mor<B> {
        self.vlunit_inv(a)
    }

    fn runit(&self, a: &Obj<B>) -> Mor<B> {
        self.vrunit(a)
    }

    fn runit_inv(&self, a: &Obj<B>) -> Mor<B> {
        self.vrunit_inv(a)
    }

    fn braid(&self, a: &Obj<B>, b: &Obj<B>) -> Mor<B> {
        self.eh_braiding(a, b)
    }

    fn braid_inv(&self, a: &Obj<B>, b: &Obj<B>) -> Mor<B> {
        self.sigma_inverse(&self.eh_braiding(a, b))
            .expect("the braiding is invertible")
    }

    /// A configuration in JSON form, or an object of `B` as a singleton.
    fn parse_obj(&self, text: &str) -> Result<Obj<B>> {
        let witness = if text.trim_start().starts_with('{') {
            Configuration::<String>::from_json(text)?
                .try_map_labels(&mut |l: &String| self.base.parse_obj(l))?
        } else {
            Configuration::singleton(self.base.parse_obj(text)?)
        };
        Ok(SigmaObj::new(witness))
    }

    fn show_mor(&self, f: &Mor<B>) -> String {
        self.show(f)
    }

    fn mor_json(&self, f: &Mor<B>) -> serde_json::Value {
        SigmaB::mor_json(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bmc::{BicharBmc, FreeBmc};
    use crate::braid::BraidWord;
    use crate::words::parse_word;

    type W = Word<String>;

    fn w(s: &str) -> W {
        parse_word(s).unwrap()
    }

    fn single(l: &str) -> Configuration<W> {
        Configuration::singleton(w(l))
    }

    fn free() -> SigmaB<FreeBmc> {
        SigmaB::new(FreeBmc::standard())
    }

    #[test]
    fn mediating_braid_examples() {
        let canon = single("a").vstack(&single("b")).canonical_rep();
        assert!(mediating_braid(&canon, &canon).unwrap().braid().is_empty());

        let crossed = LinearRep::new(
            Word::tensor(Word::leaf(w("b")), Word::leaf(w("a"))),
            LabelledBraid::new("n=2 s1".parse().unwrap(), vec![w("a"), w("b")]).unwrap(),
        )
        .unwrap();
        let m = mediating_braid(&canon, &crossed).unwrap();
        assert_eq!(m.braid(), &"n=2 s1".parse().unwrap());
    }

    #[test]
    fn crossed_rep_of_identity_normalizes_to_identity() {
        // σ between a crossed and a canonical linearisation represents 1
        let s = free();
        let cat = s.base();
        let pair = single("a").vstack(&single("b"));
        let crossed = LinearRep::new(
            Word::tensor(Word::leaf(w("b")), Word::leaf(w("a"))),
            LabelledBraid::new("n=2 s1".parse().unwrap(), vec![w("a"), w("b")]).unwrap(),
        )
        .unwrap();
        let sigma = cat.braid(&w("a"), &w("b"));
        let m = s
            .represented(&pair, &pair, &pair.canonical_rep(), &crossed, &sigma)
            .unwrap();
        let id = s.sigma_id(&SigmaObj::new(pair.clone()));
        assert!(s.sigma_equal(&m, &id));
        let again = s.normalize(&m).unwrap();
        assert!(cat.mor_eq(again.representative(), m.representative()));
    }

    #[test]
    fn composite_picks_up_connecting_iso() {
        // identity components meeting at linearisations that differ by a crossing
        let s = free();
        let pair = single("a").vstack(&single("a"));
        let canon = pair.canonical_rep();
        let crossed = LinearRep::new(
            canon.word.clone(),
            LabelledBraid::new("n=2 s1".parse().unwrap(), vec![w("a"), w("a")]).unwrap(),
        )
        .unwrap();
        let id = s.base().id(&w("(a * a)"));
        let m1 = s.represented(&pair, &pair, &canon, &crossed, &id).unwrap();
        let m2 = s.represented(&pair, &pair, &canon, &canon, &id).unwrap();
        let composite = s.sigma_compose(&m1, &m2).unwrap();
        assert_eq!(
            composite.representative().braid.braid(),
            &"n=2 s1^-1".parse().unwrap()
        );
        assert!(!s.sigma_equal(&composite, &m2));
        let mismatched = s.represented(&pair, &pair, &canon, &canon, &s.base().id(&w("a")));
        assert!(mismatched.is_err());
    }

    #[test]
    fn different_heights_are_not_parallel() {
        let s = free();
        let low = Configuration::new(vec![
            crate::config::LPoint::new("1/4".parse().unwrap(), "3/4".parse().unwrap(), w("b")),
            crate::config::LPoint::new("3/4".parse().unwrap(), "1/4".parse().unwrap(), w("a")),
        ])
        .unwrap();
        let high = Configuration::new(vec![
            crate::config::LPoint::new("1/4".parse().unwrap(), "3/4".parse().unwrap(), w("b")),
            crate::config::LPoint::new("3/4".parse().unwrap(), "1/2".parse().unwrap(), w("a")),
        ])
        .unwrap();
        let m_low = s.sigma_id(&SigmaObj::new(low.clone()));
        let m_high = s.sigma_id(&SigmaObj::new(high.clone()));
        assert!(!s.sigma_equal(&m_low, &m_high));
        assert!(s.clique_identity(&low, &high).is_err());
    }

    #[test]
    fn interchange_square_uses_braiding() {
        let s = free();
        let ids: Vec<_> = ["a", "b", "c", "a"]
            .iter()
            .map(|l| s.sigma_id(&SigmaObj::new(single(l))))
            .collect();
        assert!(s
            .interchange_holds(&ids[0], &ids[1], &ids[2], &ids[3])
            .unwrap());
        let (fg, _) = (s.htensor(&ids[0], &ids[1]).unwrap(), ());
        assert!(fg.representative().braid.braid().is_empty());
    }

    #[test]
    fn horizontal_structure_normalizes_to_identity() {
        let s = free();
        let x = SigmaObj::new(single("a").vstack(&single("b")));
        let y = SigmaObj::new(single("c"));
        let z = SigmaObj::new(single("a").hstack(&single("c")));
        let h = s.hassoc(&x, &y, &z);
        assert_eq!(h.source().key(), h.target().key());
        assert!(s.sigma_equal(&h, &s.sigma_id(h.source())));
        assert!(s.sigma_equal(&s.hlunit(&x), &s.sigma_id(&x)));
        assert!(s.sigma_equal(&s.hrunit(&z), &s.sigma_id(&z)));
    }

    #[test]
    fn vertical_associator_is_weak() {
        let s = free();
        let [x, y, z] = ["a", "b", "c"].map(|l| SigmaObj::new(single(l)));
        let v = s.vassoc(&x, &y, &z);
        assert_ne!(v.source().key(), v.target().key());
        let e = SigmaObj::new(Configuration::empty());
        let u = s.vassoc(&e, &e, &e);
        assert!(s
            .base()
            .mor_eq(u.representative(), &s.base().id(&Word::Unit)));
    }

    #[test]
    fn eh_is_sigma_in_free() {
        let s = free();
        let (a, b) = (SigmaObj::new(single("a")), SigmaObj::new(single("b")));
        let eh = s.eh_braiding(&a, &b);
        assert_eq!(
            eh.representative().braid.braid(),
            &BraidWord::generator(2, 1, false).unwrap()
        );
        let e = SigmaObj::new(Configuration::empty());
        let trivial = s.eh_braiding(&e, &e);
        assert!(s.sigma_equal(&trivial, &s.sigma_id(&s.vtensor_obj(&e, &e))));
    }

    #[test]
    fn eh_scalar_in_bichar() {
        let cat = BicharBmc::new(4);
        let one = cat.parse_obj("1").unwrap();
        let s = SigmaB::new(cat.clone());
        let a = SigmaObj::new(Configuration::singleton(one.clone()));
        assert_eq!(s.eh_braiding(&a, &a).representative().exponent, 1);
        let mirrored = SigmaB::with_convention(cat, CrossingConvention::Mirrored);
        assert_eq!(mirrored.eh_braiding(&a, &a).representative().exponent, 3);
    }
}
