//! Randomized properties beyond the exhaustive ranges.

use std::collections::BTreeSet;

use duflo_core::engine::{offsprings_dual, offsprings_recursive, project_word};
use duflo_core::rs::{cell, rs_inverse, rs_pair, rs_tableau};
use duflo_core::{Tableau, Word};
use proptest::prelude::*;

fn permutation(max: usize) -> impl Strategy<Value = Word> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Word::new(v).unwrap()))
}

/// A word with distinct entries drawn from `1..=40`.
fn alphabet_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::btree_set(1u32..=40, 0..=max)
        .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Word::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rs_roundtrip_and_symmetry(w in permutation(10)) {
        let pair = rs_pair(&w).unwrap();
        prop_assert_eq!(rs_inverse(&pair).unwrap(), w.clone());
        let inv = rs_pair(&w.inverse().unwrap()).unwrap();
        prop_assert_eq!(inv.insertion, pair.recording);
        prop_assert_eq!(rs_tableau(&w.reversal()), pair.insertion.transpose());
    }

    #[test]
    fn text_forms_roundtrip(w in alphabet_word(12)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w.clone());
        let t = rs_tableau(&w);
        prop_assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t.clone());
        prop_assert_eq!(t.shape().to_string().parse::<duflo_core::Diagram>().unwrap(), t.shape());
    }

    #[test]
    fn alphabet_insertion_roundtrips(w in alphabet_word(12), extra in 41u32..60) {
        let t = rs_tableau(&w);
        let ins = t.insert(extra).unwrap();
        let back = ins.tableau.delete_corner(ins.corner).unwrap();
        prop_assert_eq!(back.tableau, t.clone());
        prop_assert_eq!(back.expelled, extra);
        for c in t.corners() {
            let del = t.column_delete(c).unwrap();
            prop_assert_eq!(del.tableau.column_insert(del.expelled).unwrap().tableau, t.clone());
        }
    }

    #[test]
    fn alphabet_cells_relabel_standard_cells(w in alphabet_word(7)) {
        let t = rs_tableau(&w);
        let c = cell(&t);
        prop_assert!(c.members.contains(&w));
        prop_assert!(c.members.iter().all(|x| rs_tableau(x) == t));
    }

    #[test]
    fn recursions_agree_beyond_exhaustive_range(w in (8usize..=9).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle()
    })) {
        let t = rs_tableau(&Word::new(w).unwrap());
        prop_assert_eq!(offsprings_recursive(&t).offsprings, offsprings_dual(&t).offsprings);
    }

    #[test]
    fn projections_commute_with_insertion(w in permutation(9), a in 1u32..=9, b in 1u32..=9) {
        let n = w.len() as u32;
        let (i, j) = (a.min(b).min(n), a.max(b).min(n));
        let p = project_word(&w, i, j).unwrap();
        prop_assert_eq!(rs_tableau(&p), rs_tableau(&w).project(i, j));
    }

    #[test]
    fn offsprings_are_ascent_images(w in permutation(8)) {
        let t = rs_tableau(&w);
        let d = offsprings_recursive(&t).offsprings;
        for i in w.ascents() {
            prop_assert!(d.contains(&rs_tableau(&w.apply_right_s(i).unwrap())));
        }
        let dominated: BTreeSet<bool> = d.iter().map(|s| s.shape().dominance_geq(&t.shape()).unwrap()).collect();
        prop_assert_eq!(dominated, BTreeSet::from([true]));
    }
}
