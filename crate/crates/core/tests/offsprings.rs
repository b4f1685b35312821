//! Offspring sets: the two recursions against the brute-force definition.

use duflo_core::engine::{offsprings_dual, offsprings_recursive};
use duflo_core::oracle::offsprings_bruteforce_all;

fn three_way(n: usize) {
    let brute = offsprings_bruteforce_all(n);
    assert_eq!(brute.len(), duflo_core::Tableau::all_standard(n).len());
    for (t, expected) in &brute {
        assert_eq!(&offsprings_recursive(t).offsprings, expected, "row recursion at {t}");
        assert_eq!(&offsprings_dual(t).offsprings, expected, "column recursion at {t}");
    }
}

#[test]
fn three_way_equality_up_to_six() {
    for n in 1..=6 {
        three_way(n);
    }
}

#[test]
fn three_way_equality_seven() {
    three_way(7);
}
