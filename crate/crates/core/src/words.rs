//! Parenthesised tensor words over labels with a formal unit.
//!
//! Text grammar: `I` is the unit, an identifier (`[A-Za-z0-9_]+`) is a label,
//! and `(u * v)` is a tensor.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word<L> {
    Unit,
    Leaf(L),
    Tensor(Box<Word<L>>, Box<Word<L>>),
}

impl<L> Word<L> {
    pub fn leaf(label: L) -> Self {
        Word::Leaf(label)
    }

    pub fn tensor(left: Word<L>, right: Word<L>) -> Self {
        Word::Tensor(Box::new(left), Box::new(right))
    }

    /// Number of label leaves (units excluded).
    pub fn arity(&self) -> usize {
        match self {
            Word::Unit => 0,
            Word::Leaf(_) => 1,
            Word::Tensor(l, r) => l.arity() + r.arity(),
        }
    }

    pub fn map<M>(&self, f: &mut impl FnMut(&L) -> M) -> Word<M> {
        match self {
            Word::Unit => Word::Unit,
            Word::Leaf(l) => Word::Leaf(f(l)),
            Word::Tensor(l, r) => Word::tensor(l.map(f), r.map(f)),
        }
    }

    pub fn try_map<M, E>(&self, f: &mut impl FnMut(&L) -> Result<M, E>) -> Result<Word<M>, E> {
        Ok(match self {
            Word::Unit => Word::Unit,
            Word::Leaf(l) => Word::Leaf(f(l)?),
            Word::Tensor(l, r) => Word::tensor(l.try_map(f)?, r.try_map(f)?),
        })
    }
}

impl<L: Clone> Word<L> {
    /// In-order leaf sequence, unit leaves dropped.
    pub fn flatten(&self) -> Vec<L> {
        let mut out = Vec::with_capacity(self.arity());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<L>) {
        match self {
            Word::Unit => {}
            Word::Leaf(l) => out.push(l.clone()),
            Word::Tensor(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// The canonical parenthesisation: `[] ↦ I`, `[a] ↦ a`,
    /// `a :: rest ↦ (a * right_nest(rest))`.
    pub fn right_nest(labels: &[L]) -> Self {
        match labels {
            [] => Word::Unit,
            [a] => Word::Leaf(a.clone()),
            [a, rest @ ..] => Word::tensor(Word::Leaf(a.clone()), Word::right_nest(rest)),
        }
    }
}

impl<L: fmt::Display> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Unit => write!(f, "I"),
            Word::Leaf(l) => write!(f, "{l}"),
            Word::Tensor(l, r) => write!(f, "({l} * {r})"),
        }
    }
}

/// Parses the word grammar with identifier labels.
pub fn parse_word(input: &str) -> Result<Word<String>> {
    let mut parser = Parser {
        chars: input.char_indices().peekable(),
        input,
    };
    let word = parser.word()?;
    parser.skip_ws();
    if let Some((pos, c)) = parser.chars.next() {
        return Err(Error::WordSyntax(format!(
            "unexpected `{c}` at offset {pos} in `{input}`"
        )));
    }
    Ok(word)
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    input: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.chars.next() {
            Some((_, c)) if c == want => Ok(()),
            Some((pos, c)) => Err(Error::WordSyntax(format!(
                "expected `{want}`, found `{c}` at offset {pos} in `{}`",
                self.input
            ))),
            None => Err(Error::WordSyntax(format!(
                "expected `{want}`, found end of input in `{}`",
                self.input
            ))),
        }
    }

    fn word(&mut self) -> Result<Word<String>> {
        self.skip_ws();
        match self.chars.peek().copied() {
            Some((_, '(')) => {
                self.chars.next();
                let left = self.word()?;
                self.expect('*')?;
                let right = self.word()?;
                self.expect(')')?;
                Ok(Word::tensor(left, right))
            }
            Some((_, c)) if c.is_ascii_alphanumeric() || c == '_' => {
                let mut ident = String::new();
                while let Some(&(_, c)) = self.chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                Ok(if ident == "I" {
                    Word::Unit
                } else {
                    Word::Leaf(ident)
                })
            }
            Some((pos, c)) => Err(Error::WordSyntax(format!(
                "unexpected `{c}` at offset {pos} in `{}`",
                self.input
            ))),
            None => Err(Error::WordSyntax(format!(
                "unexpected end of input in `{}`",
                self.input
            ))),
        }
    }
}
