mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::oracle::{brute_force_augmentations, poincare};
use legch::augmentation::{enumerate_augmentations, Augmentation};
use legch::constructions::connected_sum;
use legch::front::{parse_front, FrontDiagram};
use legch::linearized::{chekanov_set, Pipeline};
use legch::poly::LaurentPoly;
use legch::table::report;

fn plat() -> impl Strategy<Value = FrontDiagram> {
    (1usize..=4)
        .prop_flat_map(|k| {
            let strands = 2 * k;
            let len = if k == 1 { 0..=0usize } else { 0..=8usize };
            (Just(strands), prop::collection::vec(1..strands, len))
        })
        .prop_filter_map("not a plat", |(s, w)| FrontDiagram::plat(s, &w).ok())
}

fn knot() -> impl Strategy<Value = FrontDiagram> {
    plat().prop_filter("link or nonzero rotation", |f| f.grading().is_ok())
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 0..6).prop_map(LaurentPoly::from_coeffs)
}

fn reduced_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((0i32..=5, 0i64..=5), 0..6).prop_map(LaurentPoly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn differential_squares_to_zero(f in knot()) {
        let pipe = Pipeline::new(&f).unwrap();
        prop_assert!(pipe.differential.verify_d_squared());
        for g in pipe.alphabet.gens() {
            for w in pipe.differential.of(g).words() {
                prop_assert_eq!(w.degree(&pipe.alphabet), pipe.alphabet.degree(g) - 1);
            }
        }
    }

    #[test]
    fn augmentations_agree_with_oracle(f in knot()) {
        let pipe = Pipeline::new(&f).unwrap();
        let ours: BTreeSet<BTreeSet<_>> = enumerate_augmentations(&pipe.differential, &pipe.alphabet, 24)
            .unwrap()
            .iter()
            .map(|e| e.gens().collect())
            .collect();
        let oracle: BTreeSet<BTreeSet<_>> = brute_force_augmentations(&pipe.differential, &pipe.alphabet).into_iter().collect();
        prop_assert_eq!(ours, oracle);
    }

    #[test]
    fn polynomials_agree_with_oracle_and_duality(f in knot()) {
        let pipe = Pipeline::new(&f).unwrap();
        let tb = f.classical_invariants().tb;
        for eps in brute_force_augmentations(&pipe.differential, &pipe.alphabet) {
            let p = pipe.polynomial(&Augmentation::new(eps.iter().copied())).unwrap();
            prop_assert_eq!(&p, &poincare(&pipe.differential, &pipe.alphabet, &eps));
            prop_assert!(p.is_nonnegative());
            prop_assert_eq!(p.at_minus_one(), tb);
            let q = p.reduce().unwrap();
            prop_assert_eq!(LaurentPoly::from_reduced(&q), p);
        }
    }

    #[test]
    fn front_text_round_trips(f in plat()) {
        let g = parse_front(&f.to_text()).unwrap();
        prop_assert_eq!(g.events(), f.events());
    }

    #[test]
    fn polynomial_text_and_json_round_trip(p in poly()) {
        let q: LaurentPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(&q, &p);
        let j = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&j).unwrap(), p);
    }

    #[test]
    fn reduce_inverts_from_reduced(p in reduced_poly()) {
        let full = LaurentPoly::from_reduced(&p);
        prop_assert_eq!(full.reduce().unwrap(), p);
    }

    #[test]
    fn report_json_is_stable(f in knot()) {
        let a = serde_json::to_value(report(&f, 24).unwrap()).unwrap();
        let b = serde_json::to_value(report(&parse_front(&f.to_text()).unwrap(), 24).unwrap()).unwrap();
        prop_assert_eq!(&a["augmentations"], &b["augmentations"]);
        prop_assert_eq!(&a["polynomials"], &b["polynomials"]);
        prop_assert_eq!(a["schema"].as_u64(), Some(1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn connected_sum_adds_invariants(f in knot(), g in knot()) {
        let h = connected_sum(&f, &g);
        let (a, b, c) = (f.classical_invariants(), g.classical_invariants(), h.classical_invariants());
        prop_assert_eq!(c.tb, a.tb + b.tb + 1);
        prop_assert_eq!(c.r, a.r + b.r);
        let sf = chekanov_set(&f, 24).unwrap().reduced_set();
        let sg = chekanov_set(&g, 24).unwrap().reduced_set();
        if let Ok(sh) = chekanov_set(&h, 24) {
            let want: BTreeSet<LaurentPoly> = sf.iter().flat_map(|x| sg.iter().map(move |y| x + y)).collect();
            let got: BTreeSet<LaurentPoly> = sh.reduced_set().into_iter().collect();
            prop_assert_eq!(got, want);
        }
    }
}
