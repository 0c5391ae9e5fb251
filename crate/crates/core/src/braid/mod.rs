//! Artin braid words, labelled braids and braid-word equality.
//!
//! Strand positions are numbered from the top, starting at 1 in the text
//! grammar. The generator `s_i` crosses the strands at positions `i` and
//! `i + 1`; in the positive generator the lower strand passes in front as it
//! rises. Words are freely reduced on construction and compared up to braid
//! equality through their [`GarsideNF`], which is computed once per value.

mod garside;
mod perm;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

pub use garside::GarsideNF;
pub use perm::Permutation;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidGen {
    /// 1-based: crosses positions `index` and `index + 1`.
    pub index: usize,
    pub inverse: bool,
}

impl BraidGen {
    pub fn positive(index: usize) -> Self {
        Self {
            index,
            inverse: false,
        }
    }

    pub fn inverse(index: usize) -> Self {
        Self {
            index,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Self {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for BraidGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

/// Removes adjacent inverse pairs until none remain.
pub fn free_reduce(gens: &[BraidGen]) -> Vec<BraidGen> {
    let mut out: Vec<BraidGen> = Vec::with_capacity(gens.len());
    for &g in gens {
        if out.last() == Some(&g.inverted()) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// A freely reduced word in the Artin generators on a fixed number of strands.
///
/// `PartialEq` is syntactic; use [`BraidWord::braid_eq`] for equality of braids.
#[derive(Clone, Debug)]
pub struct BraidWord {
    strands: usize,
    gens: Vec<BraidGen>,
    nf: OnceLock<GarsideNF>,
}

impl PartialEq for BraidWord {
    fn eq(&self, other: &Self) -> bool {
        self.strands == other.strands && self.gens == other.gens
    }
}

impl Eq for BraidWord {}

impl BraidWord {
    pub fn new(strands: usize, gens: Vec<BraidGen>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.index == 0 || g.index >= strands) {
            return Err(Error::GeneratorOutOfRange {
                index: g.index,
                strands,
            });
        }
        Ok(Self {
            strands,
            gens: free_reduce(&gens),
            nf: OnceLock::new(),
        })
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            gens: Vec::new(),
            nf: OnceLock::new(),
        }
    }

    /// Shorthand for a one-letter word.
    pub fn generator(strands: usize, index: usize, inverse: bool) -> Result<Self> {
        Self::new(strands, vec![BraidGen { index, inverse }])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn gens(&self) -> &[BraidGen] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &BraidWord) -> Result<BraidWord> {
        if self.strands != next.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: next.strands,
            });
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&next.gens);
        Ok(Self {
            strands: self.strands,
            gens: free_reduce(&gens),
            nf: OnceLock::new(),
        })
    }

    pub fn invert(&self) -> BraidWord {
        Self {
            strands: self.strands,
            gens: self.gens.iter().rev().map(|g| g.inverted()).collect(),
            nf: OnceLock::new(),
        }
    }

    /// The mirror image: every crossing changes sign.
    pub fn mirror(&self) -> BraidWord {
        Self {
            strands: self.strands,
            gens: self.gens.iter().map(|g| g.inverted()).collect(),
            nf: OnceLock::new(),
        }
    }

    /// Re-embeds the word on `new_strands` strands, moved down by `offset`.
    pub fn shift(&self, offset: usize, new_strands: usize) -> Result<BraidWord> {
        if new_strands < self.strands + offset {
            return Err(Error::ShiftOutOfBounds {
                strands: self.strands,
                offset,
                new_strands,
            });
        }
        Ok(Self {
            strands: new_strands,
            gens: self
                .gens
                .iter()
                .map(|g| BraidGen {
                    index: g.index + offset,
                    inverse: g.inverse,
                })
                .collect(),
            nf: OnceLock::new(),
        })
    }

    /// `self` on the top strands, `below` on the strands underneath.
    pub fn juxtapose(&self, below: &BraidWord) -> BraidWord {
        let n = self.strands + below.strands;
        let mut gens = self.gens.clone();
        gens.extend(below.gens.iter().map(|g| BraidGen {
            index: g.index + self.strands,
            inverse: g.inverse,
        }));
        Self {
            strands: n,
            gens,
            nf: OnceLock::new(),
        }
    }

    /// The unique braid with all crossings positive and each pair of strands
    /// crossing at most once that realizes `perm`.
    pub fn positive_permutation_braid(perm: &Permutation) -> BraidWord {
        Self {
            strands: perm.len(),
            gens: perm
                .reduced_word()
                .into_iter()
                .map(|j| BraidGen::positive(j + 1))
                .collect(),
            nf: OnceLock::new(),
        }
    }

    /// Moves the top block of `m` strands past the bottom block of `k`
    /// strands with positive crossings; `(1, 1)` is `s1`.
    pub fn block_braiding(m: usize, k: usize) -> BraidWord {
        Self::positive_permutation_braid(&Permutation::block_swap(m, k))
    }

    pub fn permutation(&self) -> Permutation {
        let mut arrangement: Vec<usize> = (0..self.strands).collect();
        for g in &self.gens {
            arrangement.swap(g.index - 1, g.index);
        }
        Permutation::from_images(arrangement).expect("swaps preserve bijectivity")
    }

    pub fn normal_form(&self) -> &GarsideNF {
        self.nf.get_or_init(|| garside::normal_form(self))
    }

    pub fn braid_eq(&self, other: &BraidWord) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(self.gens == other.gens || self.normal_form() == other.normal_form())
    }

    /// Whether the word represents the identity braid.
    pub fn is_trivial(&self) -> bool {
        self.is_empty() || {
            let nf = self.normal_form();
            nf.delta_power() == 0 && nf.factors().is_empty()
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.strands)?;
        for g in &self.gens {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let header = tokens
            .next()
            .ok_or_else(|| Error::BraidSyntax("empty input, expected `n=<strands>`".into()))?;
        let strands = header
            .strip_prefix("n=")
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| Error::BraidSyntax(format!("bad header `{header}`")))?;
        let mut gens = Vec::new();
        for tok in tokens {
            let body = tok
                .strip_prefix('s')
                .ok_or_else(|| Error::BraidSyntax(format!("bad token `{tok}`")))?;
            let (digits, inverse) = match body.strip_suffix("^-1") {
                Some(d) => (d, true),
                None => (body, false),
            };
            let index = digits
                .parse::<usize>()
                .map_err(|_| Error::BraidSyntax(format!("bad token `{tok}`")))?;
            gens.push(BraidGen { index, inverse });
        }
        BraidWord::new(strands, gens)
    }
}

/// A braid whose strands carry labels, read top to bottom at each end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledBraid<L> {
    braid: BraidWord,
    source: Vec<L>,
    target: Vec<L>,
}

impl<L: Clone + PartialEq> LabelledBraid<L> {
    /// Labels the strands of `braid` by `source` at the top end.
    pub fn new(braid: BraidWord, source: Vec<L>) -> Result<Self> {
        if braid.strands() != source.len() {
            return Err(Error::StrandMismatch {
                left: braid.strands(),
                right: source.len(),
            });
        }
        let target = braid.permutation().permute(&source);
        Ok(Self {
            braid,
            source,
            target,
        })
    }

    pub fn identity(labels: Vec<L>) -> Self {
        Self {
            braid: BraidWord::identity(labels.len()),
            target: labels.clone(),
            source: labels,
        }
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn source(&self) -> &[L] {
        &self.source
    }

    pub fn target(&self) -> &[L] {
        &self.target
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }

    /// `self` followed by `next`; the labels must meet.
    pub fn compose(&self, next: &LabelledBraid<L>) -> Result<Self>
    where
        L: fmt::Debug,
    {
        if self.target != next.source {
            return Err(Error::LabelMismatch(format!(
                "{:?} does not meet {:?}",
                self.target, next.source
            )));
        }
        Ok(Self {
            braid: self.braid.compose(&next.braid)?,
            source: self.source.clone(),
            target: next.target.clone(),
        })
    }

    pub fn invert(&self) -> Self {
        Self {
            braid: self.braid.invert(),
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }

    pub fn juxtapose(&self, below: &LabelledBraid<L>) -> Self {
        let mut source = self.source.clone();
        source.extend(below.source.iter().cloned());
        let mut target = self.target.clone();
        target.extend(below.target.iter().cloned());
        Self {
            braid: self.braid.juxtapose(&below.braid),
            source,
            target,
        }
    }

    pub fn braid_eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.braid.braid_eq(&other.braid).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w("n=2").is_empty());
        assert!(w("n=2 s1 s1^-1").is_empty());
        assert_eq!(w("n=3 s1 s2 s2^-1 s1"), w("n=3 s1 s1"));
    }

    #[test]
    fn compose_examples() {
        let x = w("n=3 s1 s2^-1");
        assert_eq!(BraidWord::identity(3).compose(&x).unwrap(), x);
        assert!(w("n=2 s1").compose(&w("n=2 s1^-1")).unwrap().is_empty());
        assert_eq!(w("n=3 s1").compose(&w("n=3 s2")).unwrap(), w("n=3 s1 s2"));
        assert!(matches!(
            w("n=2 s1").compose(&w("n=3 s1")),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn invert_examples() {
        assert!(w("n=2").invert().is_empty());
        assert_eq!(w("n=2 s1").invert(), w("n=2 s1^-1"));
        assert_eq!(w("n=3 s1 s2^-1").invert(), w("n=3 s2 s1^-1"));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(w("n=2").shift(2, 5).unwrap(), BraidWord::identity(5));
        assert_eq!(w("n=2 s1").shift(1, 3).unwrap(), w("n=3 s2"));
        assert_eq!(w("n=3 s1 s2").shift(0, 4).unwrap(), w("n=4 s1 s2"));
        assert!(w("n=3 s1").shift(1, 3).is_err());
    }

    #[test]
    fn block_braiding_examples() {
        assert_eq!(BraidWord::block_braiding(1, 1), w("n=2 s1"));
        assert!(BraidWord::block_braiding(0, 3).is_empty());
        let b21 = BraidWord::block_braiding(2, 1);
        assert_eq!(b21.len(), 2);
        assert_eq!(b21.permutation().permute(&[1, 2, 3]), vec![3, 1, 2]);
        assert_eq!(b21, w("n=3 s2 s1"));
    }

    #[test]
    fn permutation_examples() {
        assert!(w("n=3").permutation().is_identity());
        assert_eq!(w("n=2 s1").permutation().images(), &[1, 0]);
        // cycle 1→2→3→1
        assert_eq!(w("n=3 s1 s2").permutation().images(), &[1, 2, 0]);
    }

    #[test]
    fn braid_eq_examples() {
        assert!(w("n=3 s1 s2 s1").braid_eq(&w("n=3 s2 s1 s2")).unwrap());
        assert!(!w("n=2 s1").braid_eq(&w("n=2 s1^-1")).unwrap());
        let x = w("n=4 s1 s3^-1 s2");
        assert!(x.braid_eq(&x).unwrap());
        assert!(x.braid_eq(&w("n=2")).is_err());
    }

    #[test]
    fn grammar_errors() {
        assert!("s1 s2".parse::<BraidWord>().is_err());
        assert!("n=3 t1".parse::<BraidWord>().is_err());
        assert!("n=3 s3".parse::<BraidWord>().is_err());
        assert!("n=3 s0".parse::<BraidWord>().is_err());
        assert!("n=3 s1^-2".parse::<BraidWord>().is_err());
        assert_eq!(w("n=3 s1 s2^-1").to_string(), "n=3 s1 s2^-1");
    }

    #[test]
    fn compose_labelled_examples() {
        let ab = vec!['a', 'b'];
        let id = LabelledBraid::identity(ab.clone());
        let both = id.compose(&id).unwrap();
        assert!(both.braid().is_empty());
        assert_eq!(both.source(), &ab[..]);

        let s = LabelledBraid::new(w("n=2 s1"), ab.clone()).unwrap();
        assert_eq!(s.target(), &['b', 'a']);
        let back = LabelledBraid::new(w("n=2 s1"), vec!['b', 'a']).unwrap();
        let sq = s.compose(&back).unwrap();
        assert_eq!(sq.braid(), &w("n=2 s1 s1"));
        assert_eq!(sq.target(), &ab[..]);

        assert!(matches!(s.compose(&s), Err(Error::LabelMismatch(_))));
    }
}
