mod common;

use std::collections::BTreeSet;

use common::determinant::knot_determinant;
use legch::algebra::{Word, Z2Sum};
use legch::augmentation::{enumerate_augmentations, is_augmentation, is_fertile, split_at_e, DEFAULT_SEARCH_CAP};
use legch::constructions::{connected_sum, k_n, realize, tau, twist_knot, word_family, SpecialForm};
use legch::front::{parse_front, Gen};
use legch::linearized::{chekanov_set, Pipeline};
use legch::poly::LaurentPoly;
use legch::table::{FIGURE_EIGHT_SPECIAL, LEFT_TREFOIL};

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn w(v: &[Gen]) -> Word {
    Word(v.to_vec())
}

#[test]
fn tau_differentials_of_new_generators() {
    let k1 = SpecialForm::detect(&k_n(1).unwrap()).unwrap();
    let step = tau(&k1).unwrap();
    let pipe = Pipeline::new(step.front()).unwrap();
    let old = Pipeline::new(&k1.front).unwrap();
    let (s1, _) = split_at_e(&old.differential, &old.alphabet, k1.s, k1.e).unwrap();
    let s1: Vec<Word> = s1.words().map(|x| Word(x.factors().iter().map(|&g| step.map(g)).collect())).collect();
    let (a, b, c, pp, q, r) = (step.a, step.b, step.c, step.p, step.q, step.r);

    // d p = [ba] s1
    let dp: Z2Sum = s1.iter().flat_map(|x| [x.clone(), w(&[&[b, a][..], x.factors()].concat())]).collect();
    assert_eq!(*pipe.differential.of(pp), dp);
    // d c = a s1 q
    let dc: Z2Sum = s1.iter().map(|x| w(&[&[a][..], x.factors(), &[q]].concat())).collect();
    assert_eq!(*pipe.differential.of(c), dc);
    // d r = 1 + [abc] + a p q
    let dr: Z2Sum = [Word::one(), w(&[a]), w(&[a, b, c]), w(&[c]), w(&[a, pp, q])].into_iter().collect();
    assert_eq!(*pipe.differential.of(r), dr);
    assert_eq!(pipe.alphabet.degree(pp), 1);
    assert_eq!(pipe.alphabet.degree(q), -1);
}

#[test]
fn tau_of_trefoil_matches_k2_data() {
    let k1 = SpecialForm::detect(&k_n(1).unwrap()).unwrap();
    let a = chekanov_set(tau(&k1).unwrap().front(), DEFAULT_SEARCH_CAP).unwrap();
    let b = chekanov_set(&k_n(2).unwrap(), DEFAULT_SEARCH_CAP).unwrap();
    assert_eq!(a.multiplicities(), b.multiplicities());
    assert_eq!(a.invariants.tb, b.invariants.tb);
}

#[test]
fn maslov_number_fixes_degree_of_e() {
    let fig8 = SpecialForm::detect(&parse_front(FIGURE_EIGHT_SPECIAL).unwrap()).unwrap();
    let a = fig8.front.grading().unwrap();
    assert_eq!(a.degree(fig8.e), 1 - fig8.d);
    let step = tau(&fig8).unwrap();
    let b = step.front().grading().unwrap();
    assert_eq!((b.degree(step.p), b.degree(step.q)), (fig8.d, -fig8.d));
}

#[test]
fn twist_knot_family() {
    for d in 1..=5usize {
        let f = twist_knot(d).unwrap();
        assert_eq!(f.crossing_count(), d + 3);
        assert_eq!(knot_determinant(&f), 2 * d as u64 + 3);
        let set = chekanov_set(&f, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(set.reduced_set(), vec![LaurentPoly::monomial(1, d as i32)]);
        let tb = if d % 2 == 0 { 1 } else { -3 };
        assert_eq!(set.invariants.tb, tb);
    }
    assert!(twist_knot(0).is_err());
}

#[test]
fn knot_types_by_determinant() {
    assert_eq!(knot_determinant(&parse_front("plat 2 :").unwrap()), 1);
    assert_eq!(knot_determinant(&k_n(1).unwrap()), 3);
    assert_eq!(knot_determinant(&parse_front(LEFT_TREFOIL).unwrap()), 3);
    assert_eq!(knot_determinant(&parse_front(FIGURE_EIGHT_SPECIAL).unwrap()), 5);
}

#[test]
fn left_trefoil_has_no_augmentations() {
    let f = parse_front(LEFT_TREFOIL).unwrap();
    let inv = f.classical_invariants();
    assert_eq!((inv.tb, inv.r, inv.writhe), (-6, 1, -3));
    assert_eq!(chekanov_set(&f, DEFAULT_SEARCH_CAP).unwrap().ch(), 0);
}

#[test]
fn additivity_with_second_twist_knot() {
    let pieces = [k_n(1).unwrap(), k_n(2).unwrap(), twist_knot(2).unwrap()];
    for f in &pieces {
        for g in &pieces {
            let a: BTreeSet<LaurentPoly> = chekanov_set(f, 40).unwrap().reduced_set().into_iter().collect();
            let b: BTreeSet<LaurentPoly> = chekanov_set(g, 40).unwrap().reduced_set().into_iter().collect();
            let want: BTreeSet<LaurentPoly> = a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();
            let got: BTreeSet<LaurentPoly> = chekanov_set(&connected_sum(f, g), 40).unwrap().reduced_set().into_iter().collect();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn realize_examples() {
    assert_eq!(chekanov_set(&realize(&p("1")).unwrap(), 40).unwrap().reduced_set(), vec![p("1")]);
    let f = realize(&p("2 + t^2")).unwrap();
    assert_eq!(chekanov_set(&f, 40).unwrap().reduced_set(), vec![p("2 + t^2")]);
    assert_eq!(realize(&LaurentPoly::zero()).unwrap().crossing_count(), 0);
}

/// Reduced polynomial shared by every member of a word family, after
/// checking that each member is an augmentation.
fn family_polynomial(base: &SpecialForm, eps: &legch::augmentation::Augmentation, word: &str) -> LaurentPoly {
    let fam = word_family(base, eps, word).unwrap();
    let pipe = Pipeline::new(&fam.special.front).unwrap();
    let polys: BTreeSet<LaurentPoly> = fam
        .augmentations
        .iter()
        .map(|m| {
            assert!(is_augmentation(&pipe.differential, &pipe.alphabet, m), "{word}");
            pipe.reduced(m).unwrap()
        })
        .collect();
    assert_eq!(polys.len(), 1, "{word}: {polys:?}");
    polys.into_iter().next().unwrap()
}

#[test]
fn word_families_separate_polynomials() {
    let k1 = SpecialForm::detect(&k_n(1).unwrap()).unwrap();
    let pipe = Pipeline::new(&k1.front).unwrap();
    let m = 2;
    for eps in enumerate_augmentations(&pipe.differential, &pipe.alphabet, 40).unwrap() {
        let base = family_polynomial(&k1, &eps, "aa");
        for k in 1..=m {
            let word = format!("{}{}", "aa".repeat(k), "sa".repeat(m - k + 1));
            let got = &family_polynomial(&k1, &eps, &word) - &base;
            let want = LaurentPoly::from_coeffs([(0, (m + k - 2) as i64), (1, (m + k - 2) as i64)]);
            assert_eq!(got, want, "{word}");
        }
    }
}

#[test]
fn fertility_follows_the_word() {
    let k1 = SpecialForm::detect(&k_n(1).unwrap()).unwrap();
    let pipe = Pipeline::new(&k1.front).unwrap();
    let eps = enumerate_augmentations(&pipe.differential, &pipe.alphabet, 40).unwrap().remove(0);
    for word in ["a", "aa", "as", "asa", "aas", "aaa"] {
        let fam = word_family(&k1, &eps, word).unwrap();
        let pipe = Pipeline::new(&fam.special.front).unwrap();
        let (s1, _) = split_at_e(&pipe.differential, &pipe.alphabet, fam.special.s, fam.special.e).unwrap();
        for m in &fam.augmentations {
            assert_eq!(m.eval(&s1), word.ends_with('s'), "{word}");
            let fertile = is_fertile(m, &fam.special, &pipe.differential, &pipe.alphabet).unwrap();
            assert_eq!(fertile, word.ends_with("aa"), "{word}");
        }
    }
}
