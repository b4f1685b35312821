//! The property registry, the verify report and the poset exports.

use std::collections::BTreeSet;

use duflo_core::engine::induced_order;
use duflo_core::suite::{properties, verify, Scope, SuiteKind, CRITERIA};
use duflo_core::Tableau;

#[test]
fn property_names_are_unique_kebab_case() {
    let props = properties();
    let names: BTreeSet<&str> = props.iter().map(|p| p.name).collect();
    assert_eq!(names.len(), props.len());
    for name in names {
        assert!(name.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-'), "{name}");
    }
}

#[test]
fn every_criterion_has_properties() {
    let props = properties();
    for (id, _) in CRITERIA {
        assert!(props.iter().any(|p| p.criterion == id), "criterion {id}");
    }
    for p in &props {
        if let Scope::Sized { min, max } = p.scope {
            assert!(min <= max, "{}", p.name);
        }
    }
}

#[test]
fn fast_report_counts() {
    let report = verify(4, SuiteKind::Fast);
    assert_eq!((report.words, report.tableaux), (24, 10));
    assert!(report.passed(), "{:?}", report.results.iter().filter(|r| !r.passed).collect::<Vec<_>>());
    let sized: Vec<_> = report.results.iter().filter_map(|r| r.n).collect();
    assert!(sized.iter().all(|&n| n <= 4));
}

#[test]
fn trivial_report() {
    let report = verify(1, SuiteKind::Full);
    assert_eq!((report.words, report.tableaux), (1, 1));
    assert!(report.passed());
}

#[test]
fn json_export_schema() {
    let poset = induced_order(3);
    let v = poset.to_json(true);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["n"], 3);
    let nodes: Vec<&str> = v["nodes"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(nodes, ["1 2 3", "1 2/3", "1 3/2", "1/2/3"]);
    assert_eq!(v["covers"].as_array().unwrap().len(), 4);
    // reflexive pairs, four covers, and row < column
    assert_eq!(v["reach"].as_array().unwrap().len(), 4 + 4 + 1);
    assert!(poset.to_json(false).get("reach").is_none());
}

#[test]
fn dot_export_has_cover_edges_only() {
    let poset = induced_order(4);
    let dot = poset.to_dot();
    assert_eq!(dot.matches(" -> ").count(), poset.covers().len());
    let row = Tableau::row_tableau(4);
    let col = Tableau::column_tableau(4);
    let (r, c) = (poset.index_of(&row).unwrap(), poset.index_of(&col).unwrap());
    assert!(!dot.contains(&format!("n{r} -> n{c};")));
}
