//! Braided monoidal categories with decidable morphism equality, and the
//! evaluation of words and labelled braids into them.
//!
//! Composition is written in diagrammatic order throughout: `compose(f, g)`
//! is "`f` then `g`".

mod bichar;
mod free;
mod perm;

use std::fmt;

pub use bichar::{BicharBmc, BicharMor};
pub use free::{FreeBmc, FreeMor};
pub use perm::{PermBmc, PermMor};

use crate::braid::{BraidGen, LabelledBraid};
use crate::error::{Error, Result};
use crate::words::Word;

/// A braided monoidal category presented by its objects, morphisms and
/// structural isomorphisms. Laws are not assumed; see [`crate::laws`].
pub trait Bmc {
    type Obj: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Mor: Clone + fmt::Debug;

    fn name(&self) -> String;

    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;

    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;

    fn id(&self, a: &Self::Obj) -> Self::Mor;
    /// `f` then `g`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn inverse(&self, f: &Self::Mor) -> Result<Self::Mor>;
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool;

    /// `(a ⊗ b) ⊗ c → a ⊗ (b ⊗ c)`
    fn assoc(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;
    /// `a ⊗ (b ⊗ c) → (a ⊗ b) ⊗ c`
    fn assoc_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;
    /// `I ⊗ a → a`
    fn lunit(&self, a: &Self::Obj) -> Self::Mor;
    fn lunit_inv(&self, a: &Self::Obj) -> Self::Mor;
    /// `a ⊗ I → a`
    fn runit(&self, a: &Self::Obj) -> Self::Mor;
    fn runit_inv(&self, a: &Self::Obj) -> Self::Mor;
    /// `a ⊗ b → b ⊗ a`
    fn braid(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    /// `b ⊗ a → a ⊗ b`, the inverse of `braid(a, b)`.
    fn braid_inv(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;

    /// Reads an object from its textual form.
    fn parse_obj(&self, text: &str) -> Result<Self::Obj>;
    fn show_mor(&self, f: &Self::Mor) -> String;
    fn mor_json(&self, f: &Self::Mor) -> serde_json::Value;

    /// Composes a non-empty path of morphisms.
    fn compose_all(&self, path: &[Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = path
            .split_first()
            .ok_or_else(|| Error::NotComposable("empty path".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, f| self.compose(&acc, f))
    }
}

/// Interprets a word over objects by tensoring in `cat`.
pub fn eval_word<B: Bmc>(cat: &B, word: &Word<B::Obj>) -> B::Obj {
    match word {
        Word::Unit => cat.unit(),
        Word::Leaf(o) => o.clone(),
        Word::Tensor(l, r) => cat.tensor_obj(&eval_word(cat, l), &eval_word(cat, r)),
    }
}

fn rn_obj<B: Bmc>(cat: &B, labels: &[B::Obj]) -> B::Obj {
    eval_word(cat, &Word::right_nest(labels))
}

/// `eval(w) → eval(right_nest(flatten(w)))` built from associators and unitors.
fn to_right_nested<B: Bmc>(cat: &B, word: &Word<B::Obj>) -> B::Mor {
    match word {
        Word::Unit | Word::Leaf(_) => cat.id(&eval_word(cat, word)),
        Word::Tensor(l, r) => {
            let inner = cat.tensor(&to_right_nested(cat, l), &to_right_nested(cat, r));
            let merge = merge_right_nested(cat, &l.flatten(), &r.flatten());
            cat.compose(&inner, &merge)
                .expect("normalising a word composes")
        }
    }
}

/// `rn(u) ⊗ rn(v) → rn(u ++ v)`.
fn merge_right_nested<B: Bmc>(cat: &B, u: &[B::Obj], v: &[B::Obj]) -> B::Mor {
    match u {
        [] => cat.lunit(&rn_obj(cat, v)),
        _ if v.is_empty() => cat.runit(&rn_obj(cat, u)),
        [_] => cat.id(&cat.tensor_obj(&rn_obj(cat, u), &rn_obj(cat, v))),
        [head, rest @ ..] => {
            let alpha = cat.assoc(head, &rn_obj(cat, rest), &rn_obj(cat, v));
            let tail = cat.tensor(&cat.id(head), &merge_right_nested(cat, rest, v));
            cat.compose(&alpha, &tail).expect("merge composes")
        }
    }
}

/// Inverse of [`to_right_nested`], built from the inverse structural maps.
fn from_right_nested<B: Bmc>(cat: &B, word: &Word<B::Obj>) -> B::Mor {
    match word {
        Word::Unit | Word::Leaf(_) => cat.id(&eval_word(cat, word)),
        Word::Tensor(l, r) => {
            let split = split_right_nested(cat, &l.flatten(), &r.flatten());
            let inner = cat.tensor(&from_right_nested(cat, l), &from_right_nested(cat, r));
            cat.compose(&split, &inner)
                .expect("denormalising a word composes")
        }
    }
}

/// `rn(u ++ v) → rn(u) ⊗ rn(v)`.
fn split_right_nested<B: Bmc>(cat: &B, u: &[B::Obj], v: &[B::Obj]) -> B::Mor {
    match u {
        [] => cat.lunit_inv(&rn_obj(cat, v)),
        _ if v.is_empty() => cat.runit_inv(&rn_obj(cat, u)),
        [_] => cat.id(&cat.tensor_obj(&rn_obj(cat, u), &rn_obj(cat, v))),
        [head, rest @ ..] => {
            let tail = cat.tensor(&cat.id(head), &split_right_nested(cat, rest, v));
            let alpha = cat.assoc_inv(head, &rn_obj(cat, rest), &rn_obj(cat, v));
            cat.compose(&tail, &alpha).expect("split composes")
        }
    }
}

/// The coherence isomorphism `eval(from) → eval(to)` between two
/// parenthesisations of the same leaf sequence.
pub fn transport<B: Bmc>(cat: &B, from: &Word<B::Obj>, to: &Word<B::Obj>) -> Result<B::Mor> {
    let (lf, lt) = (from.flatten(), to.flatten());
    if lf != lt {
        return Err(Error::LabelMismatch(format!(
            "cannot transport {from} to {to}: leaves differ"
        )));
    }
    cat.compose(&to_right_nested(cat, from), &from_right_nested(cat, to))
}

/// One crossing acting on the right-nested tensor of `labels`.
fn eval_generator<B: Bmc>(cat: &B, labels: &[B::Obj], g: BraidGen) -> B::Mor {
    let i = g.index - 1;
    let (x, y) = (&labels[i], &labels[i + 1]);
    let swap = if g.inverse {
        cat.braid_inv(y, x)
    } else {
        cat.braid(x, y)
    };
    let rest = &labels[i + 2..];
    let mut core = if rest.is_empty() {
        swap
    } else {
        let r = rn_obj(cat, rest);
        cat.compose_all(&[
            cat.assoc_inv(x, y, &r),
            cat.tensor(&swap, &cat.id(&r)),
            cat.assoc(y, x, &r),
        ])
        .expect("crossing composes")
    };
    for head in labels[..i].iter().rev() {
        core = cat.tensor(&cat.id(head), &core);
    }
    core
}

/// Evaluates a labelled braid between two words: each crossing becomes a
/// braiding of adjacent factors in right-nested form, conjugated by
/// [`transport`]-style coherence maps at the ends.
pub fn eval_braid<B: Bmc>(
    cat: &B,
    source: &Word<B::Obj>,
    target: &Word<B::Obj>,
    braid: &LabelledBraid<B::Obj>,
) -> Result<B::Mor> {
    if source.flatten() != braid.source() {
        return Err(Error::LabelMismatch(format!(
            "source word {source} does not match braid labels"
        )));
    }
    if target.flatten() != braid.target() {
        return Err(Error::LabelMismatch(format!(
            "target word {target} does not match braid labels"
        )));
    }
    let mut labels = braid.source().to_vec();
    let mut acc = to_right_nested(cat, source);
    for &g in braid.braid().gens() {
        let step = eval_generator(cat, &labels, g);
        acc = cat.compose(&acc, &step)?;
        labels.swap(g.index - 1, g.index);
    }
    cat.compose(&acc, &from_right_nested(cat, target))
}

/// The shipped instances, selected by name: `free`, `perm` or `bichar:<n>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryChoice {
    Free,
    Perm,
    Bichar(u32),
}

impl std::str::FromStr for CategoryChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(CategoryChoice::Free),
            "perm" => Ok(CategoryChoice::Perm),
            _ => s
                .strip_prefix("bichar:")
                .and_then(|n| n.parse::<u32>().ok())
                .filter(|&n| n >= 1)
                .map(CategoryChoice::Bichar)
                .ok_or_else(|| Error::UnknownCategory(s.to_string())),
        }
    }
}

impl fmt::Display for CategoryChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryChoice::Free => write!(f, "free"),
            CategoryChoice::Perm => write!(f, "perm"),
            CategoryChoice::Bichar(n) => write!(f, "bichar:{n}"),
        }
    }
}
