//! The symmetric quotient of the free instance: morphisms remember only the
//! permutation of leaves, so the braiding squares to the identity.

use serde_json::json;

use super::Bmc;
use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::words::{parse_word, Word};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PermBmc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermMor {
    pub source: Word<String>,
    pub target: Word<String>,
    pub perm: Permutation,
}

impl PermBmc {
    /// A morphism from a permutation of the leaves of `source`; it must
    /// deliver the leaves of `target`.
    pub fn mor(
        &self,
        source: Word<String>,
        target: Word<String>,
        perm: Permutation,
    ) -> Result<PermMor> {
        let leaves = source.flatten();
        if perm.len() != leaves.len() || perm.permute(&leaves) != target.flatten() {
            return Err(Error::LabelMismatch(format!(
                "{perm} does not carry {source} to {target}"
            )));
        }
        Ok(PermMor {
            source,
            target,
            perm,
        })
    }

    fn structural(&self, source: Word<String>, target: Word<String>, perm: Permutation) -> PermMor {
        debug_assert_eq!(perm.permute(&source.flatten()), target.flatten());
        PermMor {
            source,
            target,
            perm,
        }
    }
}

impl Bmc for PermBmc {
    type Obj = Word<String>;
    type Mor = PermMor;

    fn name(&self) -> String {
        "perm".into()
    }

    fn unit(&self) -> Word<String> {
        Word::Unit
    }

    fn tensor_obj(&self, a: &Word<String>, b: &Word<String>) -> Word<String> {
        Word::tensor(a.clone(), b.clone())
    }

    fn source(&self, f: &PermMor) -> Word<String> {
        f.source.clone()
    }

    fn target(&self, f: &PermMor) -> Word<String> {
        f.target.clone()
    }

    fn id(&self, a: &Word<String>) -> PermMor {
        self.structural(a.clone(), a.clone(), Permutation::identity(a.arity()))
    }

    fn compose(&self, f: &PermMor, g: &PermMor) -> Result<PermMor> {
        if f.target != g.source {
            return Err(Error::NotComposable(format!(
                "{} then {}",
                f.target, g.source
            )));
        }
        Ok(PermMor {
            source: f.source.clone(),
            target: g.target.clone(),
            perm: f.perm.then(&g.perm),
        })
    }

    fn tensor(&self, f: &PermMor, g: &PermMor) -> PermMor {
        PermMor {
            source: Word::tensor(f.source.clone(), g.source.clone()),
            target: Word::tensor(f.target.clone(), g.target.clone()),
            perm: f.perm.juxtapose(&g.perm),
        }
    }

    fn inverse(&self, f: &PermMor) -> Result<PermMor> {
        Ok(PermMor {
            source: f.target.clone(),
            target: f.source.clone(),
            perm: f.perm.inverse(),
        })
    }

    fn mor_eq(&self, f: &PermMor, g: &PermMor) -> bool {
        f == g
    }

    fn assoc(&self, a: &Word<String>, b: &Word<String>, c: &Word<String>) -> PermMor {
        self.structural(
            Word::tensor(Word::tensor(a.clone(), b.clone()), c.clone()),
            Word::tensor(a.clone(), Word::tensor(b.clone(), c.clone())),
            Permutation::identity(a.arity() + b.arity() + c.arity()),
        )
    }

    fn assoc_inv(&self, a: &Word<String>, b: &Word<String>, c: &Word<String>) -> PermMor {
        self.inverse(&self.assoc(a, b, c)).expect("invertible")
    }

    fn lunit(&self, a: &Word<String>) -> PermMor {
        self.structural(
            Word::tensor(Word::Unit, a.clone()),
            a.clone(),
            Permutation::identity(a.arity()),
        )
    }

    fn lunit_inv(&self, a: &Word<String>) -> PermMor {
        self.inverse(&self.lunit(a)).expect("invertible")
    }

    fn runit(&self, a: &Word<String>) -> PermMor {
        self.structural(
            Word::tensor(a.clone(), Word::Unit),
            a.clone(),
            Permutation::identity(a.arity()),
        )
    }

    fn runit_inv(&self, a: &Word<String>) -> PermMor {
        self.inverse(&self.runit(a)).expect("invertible")
    }

    fn braid(&self, a: &Word<String>, b: &Word<String>) -> PermMor {
        self.structural(
            Word::tensor(a.clone(), b.clone()),
            Word::tensor(b.clone(), a.clone()),
            Permutation::block_swap(a.arity(), b.arity()),
        )
    }

    fn braid_inv(&self, a: &Word<String>, b: &Word<String>) -> PermMor {
        self.inverse(&self.braid(a, b)).expect("invertible")
    }

    fn parse_obj(&self, text: &str) -> Result<Word<String>> {
        parse_word(text)
    }

    fn show_mor(&self, f: &PermMor) -> String {
        format!("{} -> {} : perm {}", f.source, f.target, f.perm)
    }

    fn mor_json(&self, f: &PermMor) -> serde_json::Value {
        json!({
            "source": f.source.to_string(),
            "target": f.target.to_string(),
            "perm": f.perm.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
        })
    }
}
