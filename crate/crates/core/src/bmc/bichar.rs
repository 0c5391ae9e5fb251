//! Graded vector spaces over `Z/n` with the braiding twisted by the
//! bicharacter `q^(deg a · deg b)`, `q` a primitive `n`-th root of unity.
//!
//! Objects are words over degrees. A morphism between words is a permutation
//! of the leaves together with a scalar `q^e`, stored as `e mod n`.

use serde_json::json;

use super::Bmc;
use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::words::{parse_word, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicharBmc {
    modulus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicharMor {
    pub source: Word<u32>,
    pub target: Word<u32>,
    pub perm: Permutation,
    /// Exponent of `q`, in `0..modulus`.
    pub exponent: u32,
}

impl BicharBmc {
    /// # Panics
    /// If `modulus` is zero.
    pub fn new(modulus: u32) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Self { modulus }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Total degree of an object, reduced mod `n`.
    pub fn degree(&self, a: &Word<u32>) -> u32 {
        let n = u64::from(self.modulus);
        (a.flatten().iter().map(|&d| u64::from(d)).sum::<u64>() % n) as u32
    }

    fn reduce(&self, e: i64) -> u32 {
        e.rem_euclid(i64::from(self.modulus)) as u32
    }

    /// The exponent as a representative in `(-n/2, n/2]`.
    pub fn signed(&self, e: u32) -> i64 {
        let (e, n) = (i64::from(e), i64::from(self.modulus));
        if 2 * e > n {
            e - n
        } else {
            e
        }
    }

    pub fn mor(
        &self,
        source: Word<u32>,
        target: Word<u32>,
        perm: Permutation,
        exponent: i64,
    ) -> Result<BicharMor> {
        let leaves = source.flatten();
        if perm.len() != leaves.len() || perm.permute(&leaves) != target.flatten() {
            return Err(Error::LabelMismatch(format!(
                "{perm} does not carry {source} to {target}"
            )));
        }
        Ok(BicharMor {
            source,
            target,
            perm,
            exponent: self.reduce(exponent),
        })
    }

    fn plain(&self, source: Word<u32>, target: Word<u32>, perm: Permutation) -> BicharMor {
        BicharMor {
            source,
            target,
            perm,
            exponent: 0,
        }
    }
}

impl Bmc for BicharBmc {
    type Obj = Word<u32>;
    type Mor = BicharMor;

    fn name(&self) -> String {
        format!("bichar:{}", self.modulus)
    }

    fn unit(&self) -> Word<u32> {
        Word::Unit
    }

    fn tensor_obj(&self, a: &Word<u32>, b: &Word<u32>) -> Word<u32> {
        Word::tensor(a.clone(), b.clone())
    }

    fn source(&self, f: &BicharMor) -> Word<u32> {
        f.source.clone()
    }

    fn target(&self, f: &BicharMor) -> Word<u32> {
        f.target.clone()
    }

    fn id(&self, a: &Word<u32>) -> BicharMor {
        self.plain(a.clone(), a.clone(), Permutation::identity(a.arity()))
    }

    fn compose(&self, f: &BicharMor, g: &BicharMor) -> Result<BicharMor> {
        if f.target != g.source {
            return Err(Error::NotComposable(format!(
                "{} then {}",
                f.target, g.source
            )));
        }
        Ok(BicharMor {
            source: f.source.clone(),
            target: g.target.clone(),
            perm: f.perm.then(&g.perm),
            exponent: self.reduce(i64::from(f.exponent) + i64::from(g.exponent)),
        })
    }

    fn tensor(&self, f: &BicharMor, g: &BicharMor) -> BicharMor {
        BicharMor {
            source: Word::tensor(f.source.clone(), g.source.clone()),
            target: Word::tensor(f.target.clone(), g.target.clone()),
            perm: f.perm.juxtapose(&g.perm),
            exponent: self.reduce(i64::from(f.exponent) + i64::from(g.exponent)),
        }
    }

    fn inverse(&self, f: &BicharMor) -> Result<BicharMor> {
        Ok(BicharMor {
            source: f.target.clone(),
            target: f.source.clone(),
            perm: f.perm.inverse(),
            exponent: self.reduce(-i64::from(f.exponent)),
        })
    }

    fn mor_eq(&self, f: &BicharMor, g: &BicharMor) -> bool {
        f == g
    }

    fn assoc(&self, a: &Word<u32>, b: &Word<u32>, c: &Word<u32>) -> BicharMor {
        self.plain(
            Word::tensor(Word::tensor(a.clone(), b.clone()), c.clone()),
            Word::tensor(a.clone(), Word::tensor(b.clone(), c.clone())),
            Permutation::identity(a.arity() + b.arity() + c.arity()),
        )
    }

    fn assoc_inv(&self, a: &Word<u32>, b: &Word<u32>, c: &Word<u32>) -> BicharMor {
        self.inverse(&self.assoc(a, b, c)).expect("invertible")
    }

    fn lunit(&self, a: &Word<u32>) -> BicharMor {
        self.plain(
            Word::tensor(Word::Unit, a.clone()),
            a.clone(),
            Permutation::identity(a.arity()),
        )
    }

    fn lunit_inv(&self, a: &Word<u32>) -> BicharMor {
        self.inverse(&self.lunit(a)).expect("invertible")
    }

    fn runit(&self, a: &Word<u32>) -> BicharMor {
        self.plain(
            Word::tensor(a.clone(), Word::Unit),
            a.clone(),
            Permutation::identity(a.arity()),
        )
    }

    fn runit_inv(&self, a: &Word<u32>) -> BicharMor {
        self.inverse(&self.runit(a)).expect("invertible")
    }

    fn braid(&self, a: &Word<u32>, b: &Word<u32>) -> BicharMor {
        let e = i64::from(self.degree(a)) * i64::from(self.degree(b));
        BicharMor {
            source: Word::tensor(a.clone(), b.clone()),
            target: Word::tensor(b.clone(), a.clone()),
            perm: Permutation::block_swap(a.arity(), b.arity()),
            exponent: self.reduce(e),
        }
    }

    fn braid_inv(&self, a: &Word<u32>, b: &Word<u32>) -> BicharMor {
        self.inverse(&self.braid(a, b)).expect("invertible")
    }

    fn parse_obj(&self, text: &str) -> Result<Word<u32>> {
        parse_word(text)?.try_map(&mut |l: &String| {
            l.parse::<u32>()
                .ok()
                .filter(|&d| d < self.modulus)
                .ok_or_else(|| {
                    Error::WordSyntax(format!("`{l}` is not a degree below {}", self.modulus))
                })
        })
    }

    fn show_mor(&self, f: &BicharMor) -> String {
        format!(
            "{} -> {} : perm {} scalar {:+}",
            f.source,
            f.target,
            f.perm,
            self.signed(f.exponent)
        )
    }

    fn mor_json(&self, f: &BicharMor) -> serde_json::Value {
        json!({
            "source": f.source.to_string(),
            "target": f.target.to_string(),
            "perm": f.perm.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
            "exponent": self.signed(f.exponent),
            "modulus": self.modulus,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_braiding_is_twisted() {
        let cat = BicharBmc::new(4);
        let (a, b) = (cat.parse_obj("1").unwrap(), cat.parse_obj("1").unwrap());
        let twice = cat.compose(&cat.braid(&a, &b), &cat.braid(&b, &a)).unwrap();
        assert_eq!(twice.exponent, 2);
        assert!(twice.perm.is_identity());
        assert!(!cat.mor_eq(&twice, &cat.id(&cat.tensor_obj(&a, &b))));
    }

    #[test]
    fn signed_display() {
        let cat = BicharBmc::new(4);
        let (a, b) = (cat.parse_obj("1").unwrap(), cat.parse_obj("3").unwrap());
        let s = cat.braid(&a, &b);
        assert_eq!(s.exponent, 3);
        assert!(cat.show_mor(&s).ends_with("perm [2 1] scalar -1"));
    }

    #[test]
    fn parse_rejects_large_degrees() {
        let cat = BicharBmc::new(3);
        assert!(cat.parse_obj("(1 * 3)").is_err());
        assert!(cat.parse_obj("(x * 1)").is_err());
        assert_eq!(cat.degree(&cat.parse_obj("(2 * (2 * I))").unwrap()), 1);
    }
}
