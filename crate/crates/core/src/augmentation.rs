//! Augmentations: subsets of the degree-0 crossings on which the
//! differential evaluates to zero.
//!
//! Substituting `1` for augmented crossings and `0` for everything else is
//! commutative, so for the search each `d c` with `|c| = 1` is abelianized
//! into a multilinear polynomial over Z/2 in the degree-0 crossings. Only
//! degree-1 generators give nontrivial equations.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Differential, Word, Z2Sum};
use crate::constructions::SpecialForm;
use crate::error::{Error, Result};
use crate::front::{Gen, GenKind, GradedAlphabet};
use crate::linearized::linearized_complex;

pub const DEFAULT_SEARCH_CAP: usize = 30;

/// The set of augmented crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Augmentation(BTreeSet<Gen>);

impl Augmentation {
    pub fn new(gens: impl IntoIterator<Item = Gen>) -> Self {
        Augmentation(gens.into_iter().collect())
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.0.contains(&g)
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, g: Gen) {
        self.0.insert(g);
    }

    pub fn union(&self, other: &Augmentation) -> Augmentation {
        Augmentation(self.0.union(&other.0).copied().collect())
    }

    /// Relabels every generator through `map`.
    pub fn map(&self, map: impl Fn(Gen) -> Gen) -> Augmentation {
        Augmentation(self.0.iter().map(|&g| map(g)).collect())
    }

    pub fn eval_word(&self, w: &Word) -> bool {
        w.factors().iter().all(|&g| self.contains(g))
    }

    pub fn eval(&self, s: &Z2Sum) -> bool {
        s.words().filter(|w| self.eval_word(w)).count() % 2 == 1
    }

    pub fn names(&self, alphabet: &GradedAlphabet) -> Vec<String> {
        self.gens().map(|g| alphabet.name(g).to_string()).collect()
    }
}

/// Checks the augmentation equations by direct substitution into every
/// `d c`, without abelianizing or pruning.
pub fn is_augmentation(d: &Differential, alphabet: &GradedAlphabet, eps: &Augmentation) -> bool {
    eps.gens().all(|g| matches!(alphabet.kind(g), GenKind::Crossing(_)) && alphabet.degree(g) == 0)
        && alphabet.gens().all(|c| !eps.eval(d.of(c)))
}

/// A Z/2 multilinear polynomial; each monomial is a bitmask of variables.
#[derive(Debug, Clone, Default)]
struct Equation {
    monomials: BTreeSet<u64>,
    last_var: usize,
}

impl Equation {
    fn eval(&self, assignment: u64) -> bool {
        self.monomials.iter().filter(|&&m| m & assignment == m).count() % 2 == 1
    }
}

fn equations(d: &Differential, alphabet: &GradedAlphabet, vars: &[Gen]) -> Vec<Equation> {
    let mut index = vec![None; alphabet.len()];
    for (i, &g) in vars.iter().enumerate() {
        index[g.index()] = Some(i);
    }
    let mut out = Vec::new();
    for c in alphabet.gens().filter(|&c| alphabet.degree(c) == 1) {
        let mut eq = Equation::default();
        'words: for w in d.of(c).words() {
            let mut mask = 0u64;
            for &g in w.factors() {
                match index[g.index()] {
                    Some(i) => mask |= 1 << i,
                    None => continue 'words,
                }
            }
            if !eq.monomials.remove(&mask) {
                eq.monomials.insert(mask);
            }
        }
        if eq.monomials.is_empty() {
            continue;
        }
        eq.last_var = eq.monomials.iter().map(|&m| 64 - m.leading_zeros() as usize).max().unwrap_or(0);
        out.push(eq);
    }
    out
}

/// All augmentations, sorted by their crossing lists.
pub fn enumerate_augmentations(d: &Differential, alphabet: &GradedAlphabet, cap: usize) -> Result<Vec<Augmentation>> {
    let vars = alphabet.degree0();
    if vars.len() > cap.min(63) {
        return Err(Error::SearchTooLarge { size: vars.len(), cap });
    }
    let eqs = equations(d, alphabet, &vars);
    // checks[k]: equations whose variables all lie in the first k.
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); vars.len() + 1];
    for (i, eq) in eqs.iter().enumerate() {
        checks[eq.last_var].push(i);
    }

    let mut found = Vec::new();
    let mut stack = vec![(0usize, 0u64)];
    while let Some((k, assignment)) = stack.pop() {
        if checks[k].iter().any(|&i| eqs[i].eval(assignment)) {
            continue;
        }
        if k == vars.len() {
            found.push(assignment);
            continue;
        }
        stack.push((k + 1, assignment));
        stack.push((k + 1, assignment | 1 << k));
    }

    let mut out: Vec<Augmentation> =
        found.into_iter().map(|a| Augmentation::new((0..vars.len()).filter(|i| a >> i & 1 == 1).map(|i| vars[i]))).collect();
    out.sort_by(|a, b| a.gens().cmp(b.gens()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LevelClass {
    Ample,
    Sparse,
    Inadmissible,
}

/// Classifies `eps` restricted to the ordered triple `xyz`: admissible when
/// `x + xyz + z = 1`, and sparse when in addition `xy = 0`.
pub fn classify_level(triple: [Gen; 3], eps: &Augmentation) -> LevelClass {
    let [x, y, z] = triple.map(|g| eps.contains(g));
    let admissible = x ^ (x && y && z) ^ z;
    match (admissible, x && y) {
        (false, _) => LevelClass::Inadmissible,
        (true, true) => LevelClass::Ample,
        (true, false) => LevelClass::Sparse,
    }
}

/// Writes `d s = 1 + s1 e + s2`, where `s1 e` collects the words ending in
/// `e`.
pub fn split_at_e(d: &Differential, alphabet: &GradedAlphabet, s: Gen, e: Gen) -> Result<(Z2Sum, Z2Sum)> {
    if !matches!(alphabet.kind(s), GenKind::RightCusp(_)) {
        return Err(Error::NotSpecialForm(format!("{} is not a right cusp", alphabet.name(s))));
    }
    if !matches!(alphabet.kind(e), GenKind::Crossing(_)) {
        return Err(Error::NotSpecialForm(format!("{} is not a crossing", alphabet.name(e))));
    }
    let mut s1 = Z2Sum::zero();
    let mut s2 = Z2Sum::one();
    for w in d.of(s).words() {
        match w.factors().split_last() {
            Some((&last, head)) if last == e => s1.toggle(Word(head.to_vec())),
            _ => s2.toggle(w.clone()),
        }
    }
    Ok((s1, s2))
}

/// Fertility of an augmentation of a special front: either the Maslov
/// number exceeds one, or it equals one, `s1` vanishes under `eps`, and the
/// column of `e` in `d_0` lies in the span of the other degree-0 columns.
pub fn is_fertile(eps: &Augmentation, special: &SpecialForm, d: &Differential, alphabet: &GradedAlphabet) -> Result<bool> {
    match special.d {
        0 => return Err(Error::MaslovZero),
        d if d > 1 => return Ok(true),
        d if d < 0 => return Ok(false),
        _ => {}
    }
    let (s1, _) = split_at_e(d, alphabet, special.s, special.e)?;
    if eps.eval(&s1) {
        return Ok(false);
    }
    let complex = linearized_complex(d, alphabet, eps)?;
    let Some(d0) = complex.matrix(0) else {
        return Ok(true);
    };
    let basis = complex.basis(0);
    let e_col = basis.iter().position(|&g| g == special.e).expect("e has degree 0 when d = 1");
    let others: Vec<usize> = (0..basis.len()).filter(|&j| j != e_col).collect();
    let without = d0.select_columns(&others).rank();
    Ok(d0.rank() == without)
}
