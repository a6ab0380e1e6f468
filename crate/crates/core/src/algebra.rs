//! Words and Z/2 sums of words in the free noncommutative algebra on the
//! generators, and the differential as a map from generators to such sums.

use std::collections::BTreeSet;
use std::fmt;

use crate::front::{Gen, GradedAlphabet};

/// A monomial; the empty word is the unit `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self, alphabet: &GradedAlphabet) -> i32 {
        self.0.iter().map(|&g| alphabet.degree(g)).sum()
    }

    pub fn display<'a>(&'a self, alphabet: &'a GradedAlphabet) -> impl fmt::Display + 'a {
        DisplayWord { word: self, alphabet }
    }
}

impl From<Vec<Gen>> for Word {
    fn from(v: Vec<Gen>) -> Self {
        Word(v)
    }
}

struct DisplayWord<'a> {
    word: &'a Word,
    alphabet: &'a GradedAlphabet,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_one() {
            return f.write_str("1");
        }
        for (i, g) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(self.alphabet.name(*g))?;
        }
        Ok(())
    }
}

/// A Z/2 linear combination of words, stored as its support.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Z2Sum(BTreeSet<Word>);

impl Z2Sum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut s = Self::zero();
        s.toggle(Word::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Adds one copy of `w`, cancelling it if already present.
    pub fn toggle(&mut self, w: Word) {
        if !self.0.remove(&w) {
            self.0.insert(w);
        }
    }

    pub fn add_assign(&mut self, other: &Z2Sum) {
        for w in &other.0 {
            self.toggle(w.clone());
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.contains(w)
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.0.iter()
    }

    pub fn display<'a>(&'a self, alphabet: &'a GradedAlphabet) -> impl fmt::Display + 'a {
        DisplaySum { sum: self, alphabet }
    }
}

impl FromIterator<Word> for Z2Sum {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        let mut s = Z2Sum::zero();
        for w in iter {
            s.toggle(w);
        }
        s
    }
}

struct DisplaySum<'a> {
    sum: &'a Z2Sum,
    alphabet: &'a GradedAlphabet,
}

impl fmt::Display for DisplaySum<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sum.is_zero() {
            return f.write_str("0");
        }
        for (i, w) in self.sum.words().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}", w.display(self.alphabet))?;
        }
        Ok(())
    }
}

/// `d` on each generator, indexed by generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Differential {
    terms: Vec<Z2Sum>,
}

impl Differential {
    pub fn from_terms(terms: Vec<Z2Sum>) -> Self {
        Differential { terms }
    }

    pub fn of(&self, g: Gen) -> &Z2Sum {
        &self.terms[g.index()]
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn set(&mut self, g: Gen, value: Z2Sum) {
        self.terms[g.index()] = value;
    }

    /// `d` of a word by the Leibniz rule; `d(1) = 0`.
    pub fn apply_word(&self, w: &Word) -> Z2Sum {
        let mut out = Z2Sum::zero();
        for (i, g) in w.0.iter().enumerate() {
            for term in self.terms[g.index()].words() {
                let mut v = Vec::with_capacity(w.len() + term.len());
                v.extend_from_slice(&w.0[..i]);
                v.extend_from_slice(&term.0);
                v.extend_from_slice(&w.0[i + 1..]);
                out.toggle(Word(v));
            }
        }
        out
    }

    pub fn apply(&self, s: &Z2Sum) -> Z2Sum {
        let mut out = Z2Sum::zero();
        for w in s.words() {
            out.add_assign(&self.apply_word(w));
        }
        out
    }

    /// Generators `c` with `d(d c) != 0`.
    pub fn d_squared_failures(&self) -> Vec<Gen> {
        (0..self.terms.len() as u32).map(Gen).filter(|&g| !self.apply(self.of(g)).is_zero()).collect()
    }

    pub fn verify_d_squared(&self) -> bool {
        self.d_squared_failures().is_empty()
    }
}
