//! Left-greedy normal form `Δ^k · s_1 ⋯ s_l` with permutation-braid factors.
//!
//! Every simple (positive permutation) braid is stored as its [`Permutation`].
//! A pair `(a, b)` is left-weighted when every generator that can start `b`
//! already finishes `a`; repeatedly sliding such generators leftwards yields
//! the unique normal form.

use std::fmt;

use super::{BraidGen, BraidWord, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNF {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl GarsideNF {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Rebuilds a braid word: the half-twist power followed by a reduced
    /// positive word for each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta: Vec<usize> = Permutation::reversal(n).reduced_word();
        let mut gens = Vec::new();
        let (reps, inverse) = if self.delta_power >= 0 {
            (self.delta_power as usize, false)
        } else {
            ((-self.delta_power) as usize, true)
        };
        for _ in 0..reps {
            if inverse {
                gens.extend(delta.iter().rev().map(|&j| BraidGen::inverse(j + 1)));
            } else {
                gens.extend(delta.iter().map(|&j| BraidGen::positive(j + 1)));
            }
        }
        for factor in &self.factors {
            gens.extend(
                factor
                    .reduced_word()
                    .into_iter()
                    .map(|j| BraidGen::positive(j + 1)),
            );
        }
        BraidWord::new(n, gens).expect("normal form generators are in range")
    }
}

impl fmt::Display for GarsideNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} Δ^{}", self.strands, self.delta_power)?;
        for factor in &self.factors {
            write!(f, " {factor}")?;
        }
        Ok(())
    }
}

pub(crate) fn normal_form(word: &BraidWord) -> GarsideNF {
    let n = word.strands();
    if n < 2 {
        return GarsideNF {
            strands: n,
            delta_power: 0,
            factors: Vec::new(),
        };
    }
    let delta = Permutation::reversal(n);

    // Δ^k · factors, with factors not yet left-weighted.
    let mut delta_power: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::with_capacity(word.len());
    for g in word.gens() {
        let s = Permutation::transposition(n, g.index - 1);
        if g.inverse {
            // x · σ⁻¹ = x · Δ⁻¹ · (Δσ⁻¹) = Δ⁻¹ · τ(x) · (Δσ⁻¹)
            delta_power -= 1;
            for factor in factors.iter_mut() {
                *factor = factor.flip();
            }
            factors.push(delta.then(&s));
        } else {
            factors.push(s);
        }
    }

    left_weight(&mut factors);

    // Leading half twists are absorbed into the power; identities can only
    // trail once the sequence is left-weighted.
    let leading = factors.iter().take_while(|f| **f == delta).count();
    factors.drain(..leading);
    delta_power += leading as i64;
    while factors.last().is_some_and(|f| f.is_identity()) {
        factors.pop();
    }
    debug_assert!(factors.iter().all(|f| !f.is_identity() && *f != delta));

    GarsideNF {
        strands: n,
        delta_power,
        factors,
    }
}

fn left_weight(factors: &mut [Permutation]) {
    let mut changed = true;
    while changed {
        changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(j + 1);
            if make_left_weighted(&mut left[j], &mut right[0]) {
                changed = true;
            }
        }
    }
}

/// Slides generators from the front of `b` onto the end of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let finishing = a.finishing_set();
        let Some(i) = b
            .starting_set()
            .into_iter()
            .find(|i| !finishing.contains(i))
        else {
            return moved;
        };
        let s = Permutation::transposition(n, i);
        *a = a.then(&s);
        *b = s.then(b);
        moved = true;
    }
}
