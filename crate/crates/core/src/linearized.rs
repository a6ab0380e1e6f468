//! Linearized chain complexes and Chekanov polynomials.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Differential, Word};
use crate::augmentation::{enumerate_augmentations, Augmentation};
use crate::disk::{all_disks, differential_from_disks, Disk};
use crate::error::{Error, Result};
use crate::front::{ClassicalInvariants, FrontDiagram, Gen, GradedAlphabet};
use crate::gf2::BitMatrix;
use crate::poly::LaurentPoly;

/// Linear part of `w` after the change of variables `c -> c + eps(c)`.
///
/// A pure word (every factor augmented) maps to the sum of its factors, a
/// full word (exactly one factor not augmented) to that factor, anything
/// else to zero. Returned as the set of generators with odd coefficient.
pub fn project(eps: &Augmentation, w: &Word) -> Vec<Gen> {
    let mut missing = w.factors().iter().filter(|&&g| !eps.contains(g));
    let out: Vec<Gen> = match (missing.next(), missing.next()) {
        (None, _) => w.factors().to_vec(),
        (Some(&g), None) => vec![g],
        _ => Vec::new(),
    };
    odd_support(out)
}

fn odd_support(mut v: Vec<Gen>) -> Vec<Gen> {
    v.sort();
    let mut out: Vec<Gen> = Vec::with_capacity(v.len());
    for g in v {
        if out.last() == Some(&g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// The graded complex `C_k -> C_{k-1}`; `matrices[k]` has one column per
/// generator of degree `k` and one row per generator of degree `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizedComplex {
    basis: BTreeMap<i32, Vec<Gen>>,
    matrices: BTreeMap<i32, BitMatrix>,
    ranks: BTreeMap<i32, usize>,
}

impl LinearizedComplex {
    fn build(alphabet: &GradedAlphabet, columns: impl Fn(Gen) -> Vec<Gen>) -> Result<Self> {
        let mut basis: BTreeMap<i32, Vec<Gen>> = BTreeMap::new();
        for g in alphabet.gens() {
            basis.entry(alphabet.degree(g)).or_default().push(g);
        }
        let mut row_of = vec![usize::MAX; alphabet.len()];
        for gens in basis.values() {
            for (i, &g) in gens.iter().enumerate() {
                row_of[g.index()] = i;
            }
        }
        let mut matrices = BTreeMap::new();
        for (&k, gens) in &basis {
            let Some(targets) = basis.get(&(k - 1)) else {
                continue;
            };
            let mut m = BitMatrix::zeros(targets.len(), gens.len());
            for (j, &g) in gens.iter().enumerate() {
                for b in columns(g) {
                    if alphabet.degree(b) != k - 1 {
                        return Err(Error::InternalInconsistency(format!(
                            "linearized differential of {} hits {} in degree {}",
                            alphabet.name(g),
                            alphabet.name(b),
                            alphabet.degree(b)
                        )));
                    }
                    m.toggle(row_of[b.index()], j);
                }
            }
            matrices.insert(k, m);
        }
        for (&k, m) in &matrices {
            if let Some(below) = matrices.get(&(k - 1)) {
                if !below.mul(m).is_zero() {
                    return Err(Error::NotAnAugmentation(format!("d_{} d_{} != 0", k - 1, k)));
                }
            }
        }
        let ranks = matrices.iter().map(|(&k, m)| (k, m.rank())).collect();
        Ok(LinearizedComplex { basis, matrices, ranks })
    }

    pub fn basis(&self, k: i32) -> &[Gen] {
        self.basis.get(&k).map_or(&[], |v| v.as_slice())
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.basis.keys().copied()
    }

    /// `d_k : C_k -> C_{k-1}`, absent when either side is zero-dimensional.
    pub fn matrix(&self, k: i32) -> Option<&BitMatrix> {
        self.matrices.get(&k)
    }

    pub fn n(&self, k: i32) -> usize {
        self.basis(k).len()
    }

    pub fn rank(&self, k: i32) -> usize {
        self.ranks.get(&k).copied().unwrap_or(0)
    }

    pub fn homology_dim(&self, k: i32) -> usize {
        self.n(k) - self.rank(k) - self.rank(k + 1)
    }

    /// Image of a generator under the linearized differential.
    pub fn column(&self, k: i32, g: Gen) -> Vec<Gen> {
        let (Some(m), Some(j)) = (self.matrix(k), self.basis(k).iter().position(|&b| b == g)) else {
            return Vec::new();
        };
        let rows = self.basis(k - 1);
        (0..m.rows()).filter(|&i| m.get(i, j)).map(|i| rows[i]).collect()
    }

    /// `sum_k dim H_k t^k`.
    pub fn poincare_polynomial(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.degrees().map(|k| (k, self.homology_dim(k) as i64)))
    }
}

/// The complex with differential `pi_eps . d`.
pub fn linearized_complex(d: &Differential, alphabet: &GradedAlphabet, eps: &Augmentation) -> Result<LinearizedComplex> {
    LinearizedComplex::build(alphabet, |g| {
        let all: Vec<Gen> = d.of(g).words().flat_map(|w| project(eps, w)).collect();
        odd_support(all)
    })
}

/// The same complex counted straight from the disks: the coefficient of `b`
/// in the image of `c` is the number of corners at `b` of disks for `c`
/// whose other corners are all augmented.
pub fn geometric_linearized(front: &FrontDiagram, alphabet: &GradedAlphabet, eps: &Augmentation) -> Result<LinearizedComplex> {
    let disks = all_disks(front, alphabet);
    let differential = differential_from_disks(alphabet, &disks);
    if !crate::augmentation::is_augmentation(&differential, alphabet, eps) {
        return Err(Error::NotAnAugmentation(eps.names(alphabet).join(",")));
    }
    let mut by_target: Vec<Vec<&Disk>> = vec![Vec::new(); alphabet.len()];
    for disk in &disks {
        by_target[disk.target.index()].push(disk);
    }
    LinearizedComplex::build(alphabet, |c| {
        let mut hits = Vec::new();
        for disk in &by_target[c.index()] {
            let corners = disk.corners.factors();
            for (i, &b) in corners.iter().enumerate() {
                let rest_augmented = corners.iter().enumerate().all(|(j, &x)| j == i || eps.contains(x));
                if rest_augmented {
                    hits.push(b);
                }
            }
        }
        odd_support(hits)
    })
}

/// Remark-style shortcut for fronts with every degree at least `-1`: the
/// reduced polynomial is `a t + b` with `a = n_{-1} - r_0` and
/// `b = a + (tb + 1) / 2`.
pub fn linear_shortcut(complex: &LinearizedComplex, tb: i64) -> Option<LaurentPoly> {
    if complex.degrees().next().is_some_and(|k| k < -1) {
        return None;
    }
    let a = complex.n(-1) as i64 - complex.rank(0) as i64;
    let b = a + (tb + 1) / 2;
    Some(LaurentPoly::from_coeffs([(1, a), (0, b)]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyClass {
    pub poly: LaurentPoly,
    pub reduced: LaurentPoly,
    pub count: usize,
}

/// Everything the full pipeline learns about a front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChekanovSet {
    pub invariants: ClassicalInvariants,
    pub augmentations: Vec<Augmentation>,
    /// One entry per distinct polynomial, sorted by polynomial.
    pub classes: Vec<PolyClass>,
}

impl ChekanovSet {
    pub fn ch(&self) -> usize {
        self.classes.len()
    }

    pub fn reduced_set(&self) -> Vec<LaurentPoly> {
        self.classes.iter().map(|c| c.reduced.clone()).collect()
    }

    /// Reduced polynomial to its number of augmentations.
    pub fn multiplicities(&self) -> BTreeMap<LaurentPoly, usize> {
        self.classes.iter().map(|c| (c.reduced.clone(), c.count)).collect()
    }
}

pub struct Pipeline {
    pub alphabet: GradedAlphabet,
    pub differential: Differential,
}

impl Pipeline {
    pub fn new(front: &FrontDiagram) -> Result<Self> {
        let alphabet = front.grading()?;
        let differential = crate::disk::differential(front, &alphabet)?;
        Ok(Pipeline { alphabet, differential })
    }

    pub fn complex(&self, eps: &Augmentation) -> Result<LinearizedComplex> {
        linearized_complex(&self.differential, &self.alphabet, eps)
    }

    pub fn polynomial(&self, eps: &Augmentation) -> Result<LaurentPoly> {
        Ok(self.complex(eps)?.poincare_polynomial())
    }

    pub fn reduced(&self, eps: &Augmentation) -> Result<LaurentPoly> {
        self.polynomial(eps)?.reduce()
    }
}

/// Grading, differential, augmentations and the distinct Chekanov
/// polynomials. A nonzero rotation number short-circuits to the empty set.
pub fn chekanov_set(front: &FrontDiagram, cap: usize) -> Result<ChekanovSet> {
    let invariants = front.classical_invariants();
    if invariants.r != 0 {
        return Ok(ChekanovSet { invariants, augmentations: Vec::new(), classes: Vec::new() });
    }
    let pipe = Pipeline::new(front)?;
    let augmentations = enumerate_augmentations(&pipe.differential, &pipe.alphabet, cap)?;
    let mut tally: BTreeMap<LaurentPoly, usize> = BTreeMap::new();
    for eps in &augmentations {
        *tally.entry(pipe.polynomial(eps)?).or_insert(0) += 1;
    }
    let classes =
        tally.into_iter().map(|(poly, count)| Ok(PolyClass { reduced: poly.reduce()?, poly, count })).collect::<Result<Vec<_>>>()?;
    Ok(ChekanovSet { invariants, augmentations, classes })
}
