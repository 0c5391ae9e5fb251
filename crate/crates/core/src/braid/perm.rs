use std::fmt;

use crate::error::{Error, Result};

/// A permutation of strand positions `0..n`.
///
/// `images[p]` is the starting position of the strand that ends at position
/// `p`. With this convention the permutation of a concatenated braid is
/// `perm(u).then(&perm(v))`, and a label sequence is carried along a braid by
/// [`Permutation::permute`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidConfiguration(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// The transposition of positions `i` and `i + 1` (0-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, i + 1);
        p
    }

    /// The half-twist permutation, reversing all positions.
    pub fn reversal(n: usize) -> Self {
        Self {
            images: (0..n).rev().collect(),
        }
    }

    /// Moves a top block of `m` positions below a block of `k`.
    pub fn block_swap(m: usize, k: usize) -> Self {
        Self {
            images: (0..k).map(|p| m + p).chain(0..m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &i)| p == i)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len(), "permutation degree mismatch");
        Permutation {
            images: next.images.iter().map(|&q| self.images[q]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (p, &i) in self.images.iter().enumerate() {
            inv[i] = p;
        }
        Permutation { images: inv }
    }

    /// Conjugation by the half twist.
    pub fn flip(&self) -> Permutation {
        let n = self.len();
        Permutation {
            images: (0..n).map(|p| n - 1 - self.images[n - 1 - p]).collect(),
        }
    }

    /// Number of strand pairs that cross, i.e. the Coxeter length.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for p in 0..n {
            for q in p + 1..n {
                if self.images[p] > self.images[q] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Reorders `items` as the strands carry them: `result[p] = items[images[p]]`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.len(), "permutation degree mismatch");
        self.images.iter().map(|&i| items[i].clone()).collect()
    }

    /// Direct sum: `self` on the first strands, `other` shifted below it.
    pub fn juxtapose(&self, other: &Permutation) -> Permutation {
        let k = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + k));
        Permutation { images }
    }

    /// A reduced word (0-based generator indices) for this permutation, built
    /// by moving each strand up into place.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.len();
        let mut arrangement: Vec<usize> = (0..n).collect();
        let mut word = Vec::with_capacity(self.inversions());
        for p in 0..n {
            let q = arrangement
                .iter()
                .position(|&s| s == self.images[p])
                .expect("images is a bijection");
            for j in (p..q).rev() {
                arrangement.swap(j, j + 1);
                word.push(j);
            }
        }
        word
    }

    /// Positions `i` at which the strands ending at `i` and `i + 1` have
    /// crossed (right descents).
    pub(crate) fn finishing_set(&self) -> Vec<usize> {
        (0..self.len().saturating_sub(1))
            .filter(|&i| self.images[i] > self.images[i + 1])
            .collect()
    }

    /// Positions `i` at which the strands starting at `i` and `i + 1` cross
    /// (left descents).
    pub(crate) fn starting_set(&self) -> Vec<usize> {
        let inv = self.inverse();
        (0..self.len().saturating_sub(1))
            .filter(|&i| inv.images[i] > inv.images[i + 1])
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "]")
    }
}
