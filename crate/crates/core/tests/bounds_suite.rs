//! Integration coverage for the bounds engine: the worked examples for the
//! choice and Hall numbers, inference, certificate re-verification, and the
//! serialized certificate format.

mod common;

use common::*;
use hallnum::graph::Graph;
use hallnum::params::facts::{apply_facts, FactBase, FactEntry};
use hallnum::params::scan::{conjecture_scan, ScanStatus};
use hallnum::params::{
    self, choice_number_bounds, hall_number_bounds, parameter_bundle, reverify_bounds,
    BoundsOptions, Budget, Certificate, Parameter,
};
use hallnum::solver;
use hallnum::textio;

fn no_oracle() -> BoundsOptions {
    BoundsOptions {
        use_oracle: false,
        ..BoundsOptions::default()
    }
}

#[test]
fn choice_numbers_by_pure_enumeration() {
    // ch(K(2,2)) = 2 and ch(K(3,2)) = 2 without the table.
    for parts in [vec![2usize, 2], vec![3, 2]] {
        let g = Graph::complete_multipartite(&parts).unwrap();
        let mut budget = Budget::new(5_000_000);
        let b = choice_number_bounds(&g, 3, &no_oracle(), &mut budget).unwrap();
        assert_eq!(b.value(), Some(2), "parts {parts:?}");
        assert!(matches!(b.upper_cert, Certificate::Enumeration { .. }));
    }
}

#[test]
fn k42_lower_bound_certificate_reverifies() {
    let g = Graph::complete_multipartite(&[4, 2]).unwrap();
    let mut budget = Budget::new(5_000_000);
    let b = choice_number_bounds(&g, 2, &no_oracle(), &mut budget).unwrap();
    assert_eq!(b.lower, 3);
    let cert = b.lower_cert.assignment().expect("bad assignment cert");
    assert!(cert.assignment.lists().iter().all(|l| l.len() == 2));
    assert!(!solver::find_coloring(&cert.assignment).colorable);
    assert!(!brute_list_colorable(&cert.assignment));
    reverify_bounds(&g, &b).unwrap();
}

#[test]
fn hall_number_examples() {
    let opts = BoundsOptions::default();

    // K(2,2): the witness has a singleton list, so h > 1; ch = 2 caps it.
    let g = Graph::complete_multipartite(&[2, 2]).unwrap();
    let mut budget = Budget::new(100_000);
    let bundle = parameter_bundle(&g, &opts, &mut budget).unwrap();
    assert_eq!(bundle.hall.value(), Some(2));
    match &bundle.hall.lower_cert {
        Certificate::HallWitness { cert, floor } => {
            assert_eq!(*floor, 1);
            assert_eq!(cert.assignment.min_list_size(), 1);
        }
        other => panic!("expected a Hall witness, got {}", other.summary()),
    }

    // Complete graphs: h = 1.
    for n in 1..=5 {
        let g = Graph::complete_multipartite(&vec![1; n]).unwrap();
        let mut budget = Budget::new(10_000);
        let b = hall_number_bounds(&g, &opts, &mut budget).unwrap();
        assert_eq!(b.value(), Some(1), "K_{n}");
    }

    // K(2,2,2): lower via the k=3 construction witness, upper via ch = 3.
    let g = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
    let mut budget = Budget::new(100_000);
    let bundle = parameter_bundle(&g, &opts, &mut budget).unwrap();
    assert_eq!(bundle.hall.value(), Some(3));
    match &bundle.hall.lower_cert {
        Certificate::HallWitness { floor, .. } => assert_eq!(*floor, 2),
        other => panic!("expected a Hall witness, got {}", other.summary()),
    }

    // K(4,2,2): h = 3 with the odd-k value of ch.
    let g = Graph::complete_multipartite(&[4, 2, 2]).unwrap();
    let mut budget = Budget::new(100_000);
    let bundle = parameter_bundle(&g, &opts, &mut budget).unwrap();
    assert_eq!(bundle.hall.value(), Some(3));

    // K(4,2): even k, so ch = 3 > 2 = chi forces h = ch.
    let g = Graph::complete_multipartite(&[4, 2]).unwrap();
    let mut budget = Budget::new(100_000);
    let bundle = parameter_bundle(&g, &opts, &mut budget).unwrap();
    assert_eq!(bundle.hall.value(), Some(3));
    assert!(bundle.h_equals_ch.is_some());
}

#[test]
fn hall_witness_certificates_reverify() {
    let opts = BoundsOptions::default();
    for parts in [vec![2usize, 2], vec![2, 2, 2], vec![3, 2], vec![4, 2, 2]] {
        let g = Graph::complete_multipartite(&parts).unwrap();
        let mut budget = Budget::new(100_000);
        let bounds = hall_number_bounds(&g, &opts, &mut budget).unwrap();
        let transcript = reverify_bounds(&g, &bounds).unwrap();
        assert!(!transcript.is_empty(), "parts {parts:?}");
        if let Some(cert) = bounds.lower_cert.assignment() {
            // The floor respected: the recorded minimum list size is honest.
            assert!(
                cert.assignment.min_list_size() >= bounds.lower - 1,
                "parts {parts:?}"
            );
        }
    }
}

#[test]
fn oracle_gating_changes_k222_route() {
    // With the table disabled, ch(K(2,2,2)) = 3 needs a level-3 sweep that
    // blows the budget, so h stays bounded rather than exact, and nothing
    // fails: the bounds stay sound.
    let g = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
    let mut budget = Budget::new(50_000);
    let bundle = parameter_bundle(&g, &no_oracle(), &mut budget).unwrap();
    assert!(bundle.hall.lower >= 3, "the witness still proves h >= 3");
    assert!(bundle.hall.upper >= bundle.hall.lower);
    assert!(!bundle.ch.exact());

    // With the table enabled the same call is exact.
    let mut budget = Budget::new(50_000);
    let bundle = parameter_bundle(&g, &BoundsOptions::default(), &mut budget).unwrap();
    assert_eq!(bundle.hall.value(), Some(3));
}

#[test]
fn apply_facts_examples() {
    // {chi=2, ch=3} forces h = 3 (the even-k family shape).
    let trivial = Certificate::Trivial("test".into());
    let exact = |p, v| params::CertifiedBounds::new(p, v, trivial.clone(), v, trivial.clone());
    let interval =
        |p, lo, hi| params::CertifiedBounds::new(p, lo, trivial.clone(), hi, trivial.clone());

    let base = FactBase {
        entries: vec![FactEntry {
            key: "K(4,2)".into(),
            chi: exact(Parameter::Chi, 2),
            ch: exact(Parameter::Ch, 3),
            hall: interval(Parameter::Hall, 1, 4),
            h_equals_ch: None,
        }],
        induced_pairs: vec![],
    };
    let (out, trace) = apply_facts(&base).unwrap();
    assert_eq!(out.entries[0].hall.value(), Some(3));
    assert!(trace.iter().any(|t| t.contains("fact3")));

    // Lower-bound propagation into K(3,2,2) from the induced K(2,2,2).
    let base = FactBase {
        entries: vec![
            FactEntry {
                key: "K(2,2,2)".into(),
                chi: exact(Parameter::Chi, 3),
                ch: exact(Parameter::Ch, 3),
                hall: exact(Parameter::Hall, 3),
                h_equals_ch: None,
            },
            FactEntry {
                key: "K(3,2,2)".into(),
                chi: exact(Parameter::Chi, 3),
                ch: interval(Parameter::Ch, 3, 6),
                hall: interval(Parameter::Hall, 1, 6),
                h_equals_ch: None,
            },
        ],
        induced_pairs: vec![(0, 1)],
    };
    let (out, _) = apply_facts(&base).unwrap();
    assert!(out.entries[1].hall.lower >= 3);

    // Empty in, empty out.
    let (out, trace) = apply_facts(&FactBase::default()).unwrap();
    assert!(out.entries.is_empty() && trace.is_empty());
}

#[test]
fn fact1_holds_on_random_instances() {
    // Lists at least as large as the chromatic number always satisfy Hall's
    // condition (spot check; the full-rate suite lives in the acceptance run).
    let mut rng = rng(0xFAC7_0001);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let g = random_graph(&mut rng, n);
        let chi = g.chromatic_number().unwrap();
        let l = random_assignment(&mut rng, g, chi + 2, chi.max(1), chi + 2);
        assert!(
            hallnum::hall::check_hall_exhaustive(&l).unwrap().satisfied,
            "chi-sized lists must satisfy Hall"
        );
    }
}

#[test]
fn scan_n6_rows_and_statuses() {
    let report = conjecture_scan(6, &BoundsOptions::default(), 200_000).unwrap();
    let names: Vec<String> = report.rows.iter().map(|r| r.graph_name()).collect();
    assert_eq!(
        names,
        vec!["K(2,2)", "K(3,2)", "K(4,2)", "K(3,3)", "K(2,2,2)"]
    );
    for row in &report.rows {
        assert_eq!(row.status, ScanStatus::Confirmed, "{}", row.graph_name());
        assert!(row.hall.exact() || row.h_equals_ch.is_some());
    }
    // The spot values behind the CONFIRMED statuses.
    let by_name = |n: &str| report.rows.iter().find(|r| r.graph_name() == n).unwrap();
    assert_eq!(by_name("K(2,2)").hall.value(), Some(2));
    assert_eq!(by_name("K(3,2)").hall.value(), Some(2));
    assert_eq!(by_name("K(4,2)").hall.value(), Some(3));
    assert_eq!(by_name("K(3,3)").hall.value(), Some(3));
    assert_eq!(by_name("K(2,2,2)").hall.value(), Some(3));
    assert_eq!(report.refuted_count(), 0);
}

#[test]
fn certificate_rendering_round_trips_the_witness() {
    let g = Graph::complete_multipartite(&[2, 2]).unwrap();
    let mut budget = Budget::new(100_000);
    let bounds = hall_number_bounds(&g, &BoundsOptions::default(), &mut budget).unwrap();
    let text = textio::format_certificate(&bounds, "lower");
    assert!(text.starts_with("certificate: h lower-bound 2\n"));
    assert!(text.contains("exhaustion: min list size 1"));
    // The embedded graph and lists parse back to the exact witness.
    let graph_part: String = text
        .lines()
        .filter(|l| l.starts_with("parts:"))
        .map(|l| format!("{l}\n"))
        .collect();
    let lists_part: String = text
        .lines()
        .filter(|l| l.starts_with("list "))
        .map(|l| format!("{l}\n"))
        .collect();
    let parsed_g = textio::parse_graph(&graph_part).unwrap();
    let parsed_l = textio::parse_lists(&lists_part, &parsed_g).unwrap();
    let cert = bounds.lower_cert.assignment().unwrap();
    assert_eq!(&parsed_l, &cert.assignment);
}
