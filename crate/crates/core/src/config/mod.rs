//! Finite configurations of labelled points in the open unit square, with
//! exact dyadic coordinates.
//!
//! Points are kept in canonical order: `y` descending, then `x` ascending.
//! That order fixes the strand numbering of every linearising braid.

mod dyadic;

use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub use dyadic::Dyadic;

use crate::braid::{BraidWord, LabelledBraid, Permutation};
use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LPoint<L> {
    pub x: Dyadic,
    pub y: Dyadic,
    pub label: L,
}

impl<L> LPoint<L> {
    pub fn new(x: Dyadic, y: Dyadic, label: L) -> Self {
        Self { x, y, label }
    }

    fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.y.cmp(&self.y).then_with(|| self.x.cmp(&other.x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration<L> {
    points: Vec<LPoint<L>>,
}

#[derive(Serialize, Deserialize)]
struct RawConfiguration<L> {
    points: Vec<LPoint<L>>,
}

impl<L> Default for Configuration<L> {
    fn default() -> Self {
        Self { points: Vec::new() }
    }
}

impl<L: Clone> Configuration<L> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates bounds and distinctness, then sorts into canonical order.
    pub fn new(mut points: Vec<LPoint<L>>) -> Result<Self> {
        for p in &points {
            if !p.x.in_open_unit() || !p.y.in_open_unit() {
                return Err(Error::InvalidConfiguration(format!(
                    "point ({}, {}) is not inside the open unit square",
                    p.x, p.y
                )));
            }
        }
        points.sort_by(LPoint::canonical_cmp);
        if let Some(w) = points
            .windows(2)
            .find(|w| w[0].x == w[1].x && w[0].y == w[1].y)
        {
            return Err(Error::InvalidConfiguration(format!(
                "two points at ({}, {})",
                w[0].x, w[0].y
            )));
        }
        Ok(Self { points })
    }

    /// One point at the centre.
    pub fn singleton(label: L) -> Self {
        Self {
            points: vec![LPoint::new(Dyadic::half(), Dyadic::half(), label)],
        }
    }

    /// The points in canonical order.
    pub fn points(&self) -> &[LPoint<L>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Labels in canonical order.
    pub fn labels(&self) -> Vec<L> {
        self.points.iter().map(|p| p.label.clone()).collect()
    }

    pub fn map_labels<M>(&self, f: &mut impl FnMut(&L) -> M) -> Configuration<M> {
        Configuration {
            points: self
                .points
                .iter()
                .map(|p| LPoint::new(p.x.clone(), p.y.clone(), f(&p.label)))
                .collect(),
        }
    }

    pub fn try_map_labels<M, E>(
        &self,
        f: &mut impl FnMut(&L) -> Result<M, E>,
    ) -> Result<Configuration<M>, E> {
        let points = self
            .points
            .iter()
            .map(|p| Ok(LPoint::new(p.x.clone(), p.y.clone(), f(&p.label)?)))
            .collect::<Result<_, E>>()?;
        Ok(Configuration { points })
    }

    /// `self` squeezed into the top half, `below` into the bottom half.
    pub fn vstack(&self, below: &Self) -> Self {
        let top = self
            .points
            .iter()
            .map(|p| LPoint::new(p.x.clone(), p.y.halve_shifted(), p.label.clone()));
        let bottom = below
            .points
            .iter()
            .map(|p| LPoint::new(p.x.clone(), p.y.halve(), p.label.clone()));
        // top points all lie above bottom points, so order is preserved
        Self {
            points: top.chain(bottom).collect(),
        }
    }

    /// `self` squeezed into the left half, `right` into the right half.
    pub fn hstack(&self, right: &Self) -> Self {
        self.hstack_with_order(right).0
    }

    /// [`Configuration::hstack`] together with the permutation taking the
    /// canonical order of the result to column-major order (all of `self`,
    /// then all of `right`, each in its own canonical order).
    ///
    /// In the returned permutation `images[p]` is the canonical index of the
    /// `p`-th point in column-major order.
    pub fn hstack_with_order(&self, right: &Self) -> (Self, Permutation) {
        let k = self.len();
        let mut tagged: Vec<(usize, LPoint<L>)> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, LPoint::new(p.x.halve(), p.y.clone(), p.label.clone())))
            .chain(right.points.iter().enumerate().map(|(j, p)| {
                (
                    k + j,
                    LPoint::new(p.x.halve_shifted(), p.y.clone(), p.label.clone()),
                )
            }))
            .collect();
        tagged.sort_by(|a, b| a.1.canonical_cmp(&b.1));
        let mut images = vec![0; tagged.len()];
        for (canonical, (column_major, _)) in tagged.iter().enumerate() {
            images[*column_major] = canonical;
        }
        let perm = Permutation::from_images(images).expect("tags are a bijection");
        let points = tagged.into_iter().map(|(_, p)| p).collect();
        (Self { points }, perm)
    }

    /// Groups points by exact height; labels within a level read left to right.
    pub fn slide_key(&self) -> SlideKey<L> {
        let mut levels: Vec<SlideLevel<L>> = Vec::new();
        for p in &self.points {
            match levels.last_mut() {
                Some(level) if level.y == p.y => level.labels.push(p.label.clone()),
                _ => levels.push(SlideLevel {
                    y: p.y.clone(),
                    labels: vec![p.label.clone()],
                }),
            }
        }
        SlideKey { levels }
    }

    pub fn slide_equal(&self, other: &Self) -> bool
    where
        L: PartialEq,
    {
        self.slide_key() == other.slide_key()
    }

    /// The right-nested word on the canonical labels with the empty braid.
    pub fn canonical_rep(&self) -> LinearRep<L>
    where
        L: PartialEq,
    {
        let labels = self.labels();
        LinearRep {
            word: Word::right_nest(&labels),
            gamma: LabelledBraid::identity(labels),
        }
    }
}

impl<L: Clone + DeserializeOwned> Configuration<L> {
    /// Reads `{"points":[{"x":"3/8","y":"1/2","label":…}, …]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawConfiguration<L> =
            serde_json::from_str(text).map_err(|e| match e.classify() {
                serde_json::error::Category::Data => {
                    // surface dyadic failures with their own error
                    let msg = e.to_string();
                    match msg.strip_prefix("non-dyadic coordinate `") {
                        Some(rest) => {
                            Error::NonDyadic(rest.split('`').next().unwrap_or(rest).to_string())
                        }
                        None => Error::ConfigSyntax(msg),
                    }
                }
                _ => Error::ConfigSyntax(e.to_string()),
            })?;
        Self::new(raw.points)
    }
}

impl<L: Clone + Serialize> Configuration<L> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RawConfiguration {
            points: self.points.clone(),
        })
        .expect("configurations serialize")
    }
}

/// The embedding of words: a label is a centred point, a tensor stacks
/// vertically, the unit is empty.
pub fn embed_word<L: Clone>(word: &Word<L>) -> Configuration<L> {
    match word {
        Word::Unit => Configuration::empty(),
        Word::Leaf(l) => Configuration::singleton(l.clone()),
        Word::Tensor(a, b) => embed_word(a).vstack(&embed_word(b)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SlideLevel<L> {
    pub y: Dyadic,
    pub labels: Vec<L>,
}

/// Complete invariant of slide-equivalence: heights strictly decreasing,
/// each level non-empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SlideKey<L> {
    pub levels: Vec<SlideLevel<L>>,
}

impl<L: Clone> SlideKey<L> {
    pub fn labels(&self) -> Vec<L> {
        self.levels
            .iter()
            .flat_map(|l| l.labels.iter().cloned())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

impl<L: fmt::Display> fmt::Display for SlideKey<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.levels.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, level) in self.levels.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            write!(f, "y={}:", level.y)?;
            for l in &level.labels {
                write!(f, " {l}")?;
            }
        }
        Ok(())
    }
}

/// A linearisation of a configuration: a word and a braid from the canonical
/// strand order to the leaves of the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep<L> {
    pub word: Word<L>,
    pub gamma: LabelledBraid<L>,
}

impl<L: Clone + PartialEq + fmt::Debug> LinearRep<L> {
    pub fn new(word: Word<L>, gamma: LabelledBraid<L>) -> Result<Self> {
        if gamma.target() != word.flatten() {
            return Err(Error::LabelMismatch(format!(
                "linearising braid ends at {:?}, word has {:?}",
                gamma.target(),
                word.flatten()
            )));
        }
        Ok(Self { word, gamma })
    }

    /// Whether this linearises a configuration with the given canonical labels.
    pub fn fits(&self, canonical_labels: &[L]) -> bool {
        self.gamma.source() == canonical_labels
    }
}

/// Which of the two mirror-image sign rules order-change braids use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CrossingConvention {
    /// Every crossing of an order change is positive.
    #[default]
    Positive,
    /// Every crossing is negative; kept as a mutation fixture.
    Mirrored,
}

impl CrossingConvention {
    /// The braid carrying strands in order `labels` to the order `perm`
    /// selects, each pair crossing at most once.
    pub fn order_change<L: Clone + PartialEq>(
        self,
        labels: Vec<L>,
        perm: &Permutation,
    ) -> Result<LabelledBraid<L>> {
        let positive = BraidWord::positive_permutation_braid(perm);
        let braid = match self {
            CrossingConvention::Positive => positive,
            CrossingConvention::Mirrored => positive.mirror(),
        };
        LabelledBraid::new(braid, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn pt(x: &str, y: &str, l: &str) -> LPoint<String> {
        LPoint::new(x.parse().unwrap(), y.parse().unwrap(), l.to_string())
    }

    fn cfg(points: &[(&str, &str, &str)]) -> Configuration<String> {
        Configuration::new(points.iter().map(|(x, y, l)| pt(x, y, l)).collect()).unwrap()
    }

    /// Dyadic stand-ins for the four three-point pictures: X, Y slide
    /// equivalent; Z moves x3 vertically; K swaps x1 and x2.
    fn fixtures() -> [Configuration<String>; 4] {
        [
            cfg(&[
                ("3/16", "11/16", "x1"),
                ("1/2", "11/16", "x2"),
                ("13/16", "3/16", "x3"),
            ]),
            cfg(&[
                ("5/8", "11/16", "x1"),
                ("13/16", "11/16", "x2"),
                ("5/16", "3/16", "x3"),
            ]),
            cfg(&[
                ("3/16", "11/16", "x1"),
                ("1/2", "11/16", "x2"),
                ("13/16", "1/2", "x3"),
            ]),
            cfg(&[
                ("3/8", "11/16", "x2"),
                ("11/16", "11/16", "x1"),
                ("5/16", "3/16", "x3"),
            ]),
        ]
    }

    #[test]
    fn slide_key_examples() {
        let [x, y, z, k] = fixtures();
        assert!(x.slide_equal(&x));
        assert!(x.slide_equal(&y));
        assert!(!x.slide_equal(&z));
        assert!(!x.slide_equal(&k));
        assert_eq!(x.slide_key().to_string(), "y=11/16: x1 x2 / y=3/16: x3");
    }

    #[test]
    fn vstack_examples() {
        let a = Configuration::singleton("a".to_string());
        let b = Configuration::singleton("b".to_string());
        assert_eq!(
            a.vstack(&b),
            cfg(&[("1/2", "3/4", "a"), ("1/2", "1/4", "b")])
        );
        let e = Configuration::<String>::empty();
        assert_eq!(a.vstack(&e), cfg(&[("1/2", "3/4", "a")]));
        assert_ne!(a.vstack(&e).slide_key(), a.slide_key());
        assert!(e.vstack(&e).is_empty());
    }

    #[test]
    fn hstack_examples() {
        let a = Configuration::singleton("a".to_string());
        let b = Configuration::singleton("b".to_string());
        assert_eq!(
            a.hstack(&b),
            cfg(&[("1/4", "1/2", "a"), ("3/4", "1/2", "b")])
        );
        let e = Configuration::<String>::empty();
        assert_eq!(a.hstack(&e).slide_key(), a.slide_key());
        assert_eq!(e.hstack(&b).slide_key(), b.slide_key());
    }

    #[test]
    fn hstack_order_of_square() {
        // columns (a over c) and (b over d): canonical a b c d, column-major a c b d
        let left = cfg(&[("1/2", "3/4", "a"), ("1/2", "1/4", "c")]);
        let right = cfg(&[("1/2", "3/4", "b"), ("1/2", "1/4", "d")]);
        let (sq, perm) = left.hstack_with_order(&right);
        assert_eq!(sq.labels(), ["a", "b", "c", "d"]);
        assert_eq!(perm.permute(&sq.labels()), ["a", "c", "b", "d"]);
        let gamma = CrossingConvention::Positive
            .order_change(sq.labels(), &perm)
            .unwrap();
        assert_eq!(gamma.braid(), &"n=4 s2".parse().unwrap());
        let mirrored = CrossingConvention::Mirrored
            .order_change(sq.labels(), &perm)
            .unwrap();
        assert_eq!(mirrored.braid(), &"n=4 s2^-1".parse().unwrap());
    }

    #[test]
    fn embed_examples() {
        let w = |s: &str| parse_word(s).unwrap();
        assert_eq!(embed_word(&w("a")), cfg(&[("1/2", "1/2", "a")]));
        assert_eq!(
            embed_word(&w("(a * b)")),
            cfg(&[("1/2", "3/4", "a"), ("1/2", "1/4", "b")])
        );
        assert_eq!(
            embed_word(&w("(a * (b * c))")),
            cfg(&[
                ("1/2", "3/4", "a"),
                ("1/2", "3/8", "b"),
                ("1/2", "1/8", "c")
            ])
        );
        assert!(embed_word(&w("(I * I)")).is_empty());
    }

    #[test]
    fn canonical_order_and_rep() {
        let sq = cfg(&[
            ("3/4", "1/4", "d"),
            ("1/4", "3/4", "a"),
            ("1/4", "1/4", "c"),
            ("3/4", "3/4", "b"),
        ]);
        assert_eq!(sq.labels(), ["a", "b", "c", "d"]);
        let rep = sq.canonical_rep();
        assert_eq!(rep.word.to_string(), "(a * (b * (c * d)))");
        assert!(rep.gamma.braid().is_empty());
        let ab = Configuration::singleton("a".to_string())
            .hstack(&Configuration::singleton("b".to_string()));
        assert_eq!(ab.canonical_rep().word.to_string(), "(a * b)");
        assert!(Configuration::<String>::empty().canonical_rep().word == Word::Unit);
    }

    #[test]
    fn rejects_invalid() {
        assert!(Configuration::new(vec![pt("1", "1/2", "a")]).is_err());
        assert!(Configuration::new(vec![pt("0", "1/2", "a")]).is_err());
        assert!(Configuration::new(vec![pt("1/2", "1/2", "a"), pt("1/2", "1/2", "b")]).is_err());
    }

    #[test]
    fn json_roundtrip_and_errors() {
        let [x, ..] = fixtures();
        let text = x.to_json().to_string();
        assert_eq!(Configuration::<String>::from_json(&text).unwrap(), x);
        let bad = r#"{"points":[{"x":"1/3","y":"1/2","label":"a"}]}"#;
        assert!(matches!(
            Configuration::<String>::from_json(bad),
            Err(Error::NonDyadic(_))
        ));
        assert!(matches!(
            Configuration::<String>::from_json("{"),
            Err(Error::ConfigSyntax(_))
        ));
        let empty = Configuration::<String>::from_json(r#"{"points":[]}"#).unwrap();
        assert!(empty.is_empty());
    }
}
