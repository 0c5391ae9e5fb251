//! The free weak braided monoidal category on a set of generators: objects are
//! parenthesised words, a morphism is a labelled braid between the leaf
//! sequences of its endpoint words.

use serde_json::json;

use super::Bmc;
use crate::braid::{BraidWord, LabelledBraid};
use crate::error::{Error, Result};
use crate::words::{parse_word, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBmc {
    generators: Vec<String>,
}

impl FreeBmc {
    pub fn new<S: Into<String>>(generators: impl IntoIterator<Item = S>) -> Self {
        Self {
            generators: generators.into_iter().map(Into::into).collect(),
        }
    }

    /// The instance used by the law suites: generators `a`, `b`, `c`.
    pub fn standard() -> Self {
        Self::new(["a", "b", "c"])
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Word<String> {
        Word::leaf(name.to_string())
    }

    /// A morphism from a braid word whose strands start at the leaves of
    /// `source`; the braid must deliver the leaves of `target`.
    pub fn mor(
        &self,
        source: Word<String>,
        target: Word<String>,
        braid: BraidWord,
    ) -> Result<FreeMor> {
        let braid = LabelledBraid::new(braid, source.flatten())?;
        if braid.target() != target.flatten() {
            return Err(Error::LabelMismatch(format!(
                "braid delivers {:?}, target {target} has {:?}",
                braid.target(),
                target.flatten()
            )));
        }
        Ok(FreeMor {
            source,
            target,
            braid,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMor {
    pub source: Word<String>,
    pub target: Word<String>,
    pub braid: LabelledBraid<String>,
}

impl FreeMor {
    fn structural(source: Word<String>, target: Word<String>, braid: BraidWord) -> Self {
        let braid = LabelledBraid::new(braid, source.flatten()).expect("strand count matches");
        debug_assert_eq!(braid.target(), target.flatten());
        Self {
            source,
            target,
            braid,
        }
    }
}

impl Bmc for FreeBmc {
    type Obj = Word<String>;
    type Mor = FreeMor;

    fn name(&self) -> String {
        "free".into()
    }

    fn unit(&self) -> Word<String> {
        Word::Unit
    }

    fn tensor_obj(&self, a: &Word<String>, b: &Word<String>) -> Word<String> {
        Word::tensor(a.clone(), b.clone())
    }

    fn source(&self, f: &FreeMor) -> Word<String> {
        f.source.clone()
    }

    fn target(&self, f: &FreeMor) -> Word<String> {
        f.target.clone()
    }

    fn id(&self, a: &Word<String>) -> FreeMor {
        FreeMor::structural(a.clone(), a.clone(), BraidWord::identity(a.arity()))
    }

    fn compose(&self, f: &FreeMor, g: &FreeMor) -> Result<FreeMor> {
        if f.target != g.source {
            return Err(Error::NotComposable(format!(
                "{} then {}",
                f.target, g.source
            )));
        }
        Ok(FreeMor {
            source: f.source.clone(),
            target: g.target.clone(),
            braid: f.braid.compose(&g.braid)?,
        })
    }

    fn tensor(&self, f: &FreeMor, g: &FreeMor) -> FreeMor {
        FreeMor {
            source: Word::tensor(f.source.clone(), g.source.clone()),
            target: Word::tensor(f.target.clone(), g.target.clone()),
            braid: f.braid.juxtapose(&g.braid),
        }
    }

    fn inverse(&self, f: &FreeMor) -> Result<FreeMor> {
        Ok(FreeMor {
            source: f.target.clone(),
            target: f.source.clone(),
            braid: f.braid.invert(),
        })
    }

    fn mor_eq(&self, f: &FreeMor, g: &FreeMor) -> bool {
        f.source == g.source && f.target == g.target && f.braid.braid_eq(&g.braid)
    }

    fn assoc(&self, a: &Word<String>, b: &Word<String>, c: &Word<String>) -> FreeMor {
        FreeMor::structural(
            Word::tensor(Word::tensor(a.clone(), b.clone()), c.clone()),
            Word::tensor(a.clone(), Word::tensor(b.clone(), c.clone())),
            BraidWord::identity(a.arity() + b.arity() + c.arity()),
        )
    }

    fn assoc_inv(&self, a: &Word<String>, b: &Word<String>, c: &Word<String>) -> FreeMor {
        let f = self.assoc(a, b, c);
        self.inverse(&f).expect("free morphisms are invertible")
    }

    fn lunit(&self, a: &Word<String>) -> FreeMor {
        FreeMor::structural(
            Word::tensor(Word::Unit, a.clone()),
            a.clone(),
            BraidWord::identity(a.arity()),
        )
    }

    fn lunit_inv(&self, a: &Word<String>) -> FreeMor {
        self.inverse(&self.lunit(a)).expect("invertible")
    }

    fn runit(&self, a: &Word<String>) -> FreeMor {
        FreeMor::structural(
            Word::tensor(a.clone(), Word::Unit),
            a.clone(),
            BraidWord::identity(a.arity()),
        )
    }

    fn runit_inv(&self, a: &Word<String>) -> FreeMor {
        self.inverse(&self.runit(a)).expect("invertible")
    }

    fn braid(&self, a: &Word<String>, b: &Word<String>) -> FreeMor {
        FreeMor::structural(
            Word::tensor(a.clone(), b.clone()),
            Word::tensor(b.clone(), a.clone()),
            BraidWord::block_braiding(a.arity(), b.arity()),
        )
    }

    fn braid_inv(&self, a: &Word<String>, b: &Word<String>) -> FreeMor {
        self.inverse(&self.braid(a, b)).expect("invertible")
    }

    fn parse_obj(&self, text: &str) -> Result<Word<String>> {
        parse_word(text)
    }

    fn show_mor(&self, f: &FreeMor) -> String {
        format!("{} -> {} : {}", f.source, f.target, f.braid.braid())
    }

    fn mor_json(&self, f: &FreeMor) -> serde_json::Value {
        json!({
            "source": f.source.to_string(),
            "target": f.target.to_string(),
            "braid": f.braid.braid().to_string(),
            "normal_form": f.braid.braid().normal_form().to_string(),
        })
    }
}
