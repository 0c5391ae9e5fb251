//! Seeded random objects and morphisms for the shipped instances.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bmc::{eval_braid, BicharBmc, Bmc, FreeBmc, PermBmc};
use crate::braid::{BraidGen, BraidWord, LabelledBraid, Permutation};
use crate::config::{Configuration, Dyadic, LPoint};
use crate::sigma::{Mor, Obj, SigmaB, SigmaObj};
use crate::words::Word;

pub type LawRng = ChaCha8Rng;

/// Instances that can draw random test inputs.
pub trait Sample: Bmc {
    /// A generating object, used to label configuration points.
    fn random_label(&self, rng: &mut LawRng) -> Self::Obj;
    fn random_obj(&self, rng: &mut LawRng) -> Self::Obj;
    /// Some morphism with source `a`.
    fn random_mor_from(&self, rng: &mut LawRng, a: &Self::Obj) -> Self::Mor;
}

/// A random parenthesisation of `leaves`, occasionally padded with units.
pub fn random_word<L: Clone>(rng: &mut LawRng, leaves: &[L]) -> Word<L> {
    let core = match leaves {
        [] => Word::Unit,
        [l] => Word::leaf(l.clone()),
        _ => {
            let k = rng.gen_range(1..leaves.len());
            Word::tensor(
                random_word(rng, &leaves[..k]),
                random_word(rng, &leaves[k..]),
            )
        }
    };
    match rng.gen_range(0..10) {
        0 => Word::tensor(Word::Unit, core),
        1 => Word::tensor(core, Word::Unit),
        _ => core,
    }
}

/// A random braid word on `strands` strands with at most `max_len` letters.
pub fn random_braid(rng: &mut LawRng, strands: usize, max_len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands);
    }
    let len = rng.gen_range(0..=max_len);
    let gens = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands);
            if rng.gen_bool(0.5) {
                BraidGen::positive(i)
            } else {
                BraidGen::inverse(i)
            }
        })
        .collect();
    BraidWord::new(strands, gens).expect("indices in range")
}

fn random_perm(rng: &mut LawRng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("a shuffle is a permutation")
}

/// `n` points at distinct positions on a coarse grid, so levels are often
/// shared; labels drawn by `label`.
pub fn random_configuration<L: Clone>(
    rng: &mut LawRng,
    n: usize,
    mut label: impl FnMut(&mut LawRng) -> L,
) -> Configuration<L> {
    const YS: [u32; 5] = [2, 3, 4, 5, 6];
    let mut taken: Vec<(u32, u32)> = Vec::new();
    while taken.len() < n.min(35) {
        let cell = (rng.gen_range(1..8u32), YS[rng.gen_range(0..YS.len())]);
        if !taken.contains(&cell) {
            taken.push(cell);
        }
    }
    let points = taken
        .into_iter()
        .map(|(x, y)| LPoint::new(Dyadic::new(x, 3), Dyadic::new(y, 3), label(rng)))
        .collect();
    Configuration::new(points).expect("grid points are distinct and interior")
}

fn draw_generators(rng: &mut LawRng, gens: &[String]) -> Vec<String> {
    let n = rng.gen_range(0..=3);
    (0..n)
        .map(|_| gens.choose(rng).expect("generators are non-empty").clone())
        .collect()
}

impl Sample for FreeBmc {
    fn random_label(&self, rng: &mut LawRng) -> Word<String> {
        Word::leaf(self.generators().choose(rng).expect("generators").clone())
    }

    fn random_obj(&self, rng: &mut LawRng) -> Word<String> {
        let leaves = draw_generators(rng, self.generators());
        random_word(rng, &leaves)
    }

    fn random_mor_from(&self, rng: &mut LawRng, a: &Word<String>) -> Self::Mor {
        let braid = random_braid(rng, a.arity(), 5);
        let labels = braid.permutation().permute(&a.flatten());
        let target = random_word(rng, &labels);
        self.mor(a.clone(), target, braid)
            .expect("target leaves follow the braid")
    }
}

const PERM_GENERATORS: [&str; 3] = ["a", "b", "c"];

impl Sample for PermBmc {
    fn random_label(&self, rng: &mut LawRng) -> Word<String> {
        Word::leaf(PERM_GENERATORS.choose(rng).expect("generators").to_string())
    }

    fn random_obj(&self, rng: &mut LawRng) -> Word<String> {
        let gens: Vec<String> = PERM_GENERATORS.iter().map(|s| s.to_string()).collect();
        let leaves = draw_generators(rng, &gens);
        random_word(rng, &leaves)
    }

    fn random_mor_from(&self, rng: &mut LawRng, a: &Word<String>) -> Self::Mor {
        let perm = random_perm(rng, a.arity());
        let target = random_word(rng, &perm.permute(&a.flatten()));
        self.mor(a.clone(), target, perm)
            .expect("target leaves follow the permutation")
    }
}

impl Sample for BicharBmc {
    fn random_label(&self, rng: &mut LawRng) -> Word<u32> {
        Word::leaf(rng.gen_range(0..self.modulus()))
    }

    fn random_obj(&self, rng: &mut LawRng) -> Word<u32> {
        let n = rng.gen_range(0..=3);
        let leaves: Vec<u32> = (0..n).map(|_| rng.gen_range(0..self.modulus())).collect();
        random_word(rng, &leaves)
    }

    fn random_mor_from(&self, rng: &mut LawRng, a: &Word<u32>) -> Self::Mor {
        let perm = random_perm(rng, a.arity());
        let target = random_word(rng, &perm.permute(&a.flatten()));
        let exponent = rng.gen_range(0..i64::from(self.modulus()));
        self.mor(a.clone(), target, perm, exponent)
            .expect("target leaves follow the permutation")
    }
}

impl<B: Sample> SigmaB<B> {
    /// A random configuration of at most `max_points` points labelled by
    /// generating objects of the base.
    pub fn random_config(&self, rng: &mut LawRng, max_points: usize) -> Configuration<B::Obj> {
        let n = rng.gen_range(0..=max_points);
        random_configuration(rng, n, |r| self.base().random_label(r))
    }

    /// A clique map out of `x`: a random braid on its points, landing on a
    /// random configuration, optionally followed by base morphisms on each
    /// strand.
    pub fn random_clique_map(&self, rng: &mut LawRng, x: &Obj<B>) -> Mor<B> {
        let cat = self.base();
        let labels = x.witness().labels();
        let braid = LabelledBraid::new(random_braid(rng, labels.len(), 4), labels.clone())
            .expect("strand count matches");
        let moved = braid.target().to_vec();
        let src_word = Word::right_nest(&labels);
        let mid_word = Word::right_nest(&moved);
        let mut f = eval_braid(cat, &src_word, &mid_word, &braid).expect("labels match");
        let mut final_labels = moved.clone();
        if rng.gen_bool(0.5) {
            let pieces: Vec<B::Mor> = moved.iter().map(|l| cat.random_mor_from(rng, l)).collect();
            final_labels = pieces.iter().map(|g| cat.target(g)).collect();
            let strandwise = pieces
                .iter()
                .rev()
                .cloned()
                .reduce(|acc, g| cat.tensor(&g, &acc))
                .unwrap_or_else(|| cat.id(&cat.unit()));
            f = cat
                .compose(&f, &strandwise)
                .expect("strandwise map composes");
        }
        let shape = random_configuration(rng, final_labels.len(), |_| ());
        let mut next = final_labels.into_iter();
        let target = shape.map_labels(&mut |_| next.next().expect("one label per point"));
        self.represented(
            x.witness(),
            &target,
            &x.witness().canonical_rep(),
            &target.canonical_rep(),
            &f,
        )
        .expect("random clique map is well formed")
    }
}

impl<B: Sample> Sample for SigmaB<B> {
    fn random_label(&self, rng: &mut LawRng) -> Obj<B> {
        SigmaObj::new(Configuration::singleton(self.base().random_label(rng)))
    }

    fn random_obj(&self, rng: &mut LawRng) -> Obj<B> {
        SigmaObj::new(self.random_config(rng, 3))
    }

    fn random_mor_from(&self, rng: &mut LawRng, a: &Obj<B>) -> Mor<B> {
        self.random_clique_map(rng, a)
    }
}
