//! Randomized and property-based invariants tying the modules together, each
//! checked against an independent brute-force oracle where one exists.

mod common;

use common::*;
use hallnum::graph::{Graph, VertexSet};
use hallnum::hall::{self, ShortcutCheck};
use hallnum::list::ColorSet;
use hallnum::params::enumerate::{count_level, Level};
use hallnum::params::{self, Budget};
use hallnum::solver;
use proptest::prelude::*;
use rand::Rng;
use std::collections::HashSet;

#[test]
fn alpha_matches_brute_force_on_random_graphs() {
    let mut rng = rng(0x5eed_0001);
    for _ in 0..60 {
        let n = rng.gen_range(0..=10);
        let g = random_graph(&mut rng, n);
        assert_eq!(g.independence_number(), brute_alpha(&g), "graph {g:?}");
    }
}

#[test]
fn alpha_is_monotone_under_vertex_deletion() {
    let mut rng = rng(0x5eed_0002);
    for _ in 0..60 {
        let n = rng.gen_range(1..=9);
        let g = random_graph(&mut rng, n);
        let alpha = g.independence_number();
        for v in 0..n {
            let deleted = g.delete_vertex(v).unwrap().independence_number();
            assert!(
                deleted == alpha || deleted + 1 == alpha,
                "alpha {alpha} -> {deleted} deleting {v} from {g:?}"
            );
        }
    }
}

#[test]
fn multipartite_closed_forms_match_generic_algorithms() {
    // Every ordered part-size list with total at most 10.
    fn build(total: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let used: usize = acc.iter().sum();
        if !acc.is_empty() {
            out.push(acc.clone());
        }
        for next in 1..=(total - used) {
            acc.push(next);
            build(total, acc, out);
            acc.pop();
        }
    }
    let mut lists = Vec::new();
    build(10, &mut Vec::new(), &mut lists);

    for sizes in lists {
        let g = Graph::complete_multipartite(&sizes).unwrap();
        // Strip the part structure to force the generic routes.
        let mut edges = Vec::new();
        let n = g.vertex_count();
        for u in 0..n {
            for v in (u + 1)..n {
                if g.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        let plain = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(
            g.independence_number(),
            plain.independence_number(),
            "alpha closed form vs branch and bound on {sizes:?}"
        );
        assert_eq!(
            g.chromatic_number().unwrap(),
            plain.chromatic_number().unwrap(),
            "chi closed form vs search on {sizes:?}"
        );
    }
}

#[test]
fn shortcut_satisfied_implies_exhaustive_satisfied() {
    // Agreement between the two checkers over random instances, and the
    // necessity direction: a colorable instance always satisfies Hall.
    let mut rng = rng(0x5eed_0003);
    let mut shortcut_hits = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n);
        let palette = rng.gen_range(1..=6);
        let l = random_assignment(&mut rng, g, palette, 0, 3);

        match hall::check_hall_shortcut(&l, solver::find_coloring_within).unwrap() {
            ShortcutCheck::Satisfied(report) => {
                shortcut_hits += 1;
                assert!(report.satisfied);
                let exhaustive = hall::check_hall_exhaustive(&l).unwrap();
                assert!(
                    exhaustive.satisfied,
                    "shortcut satisfied but exhaustive found margin {} at {:?}",
                    exhaustive.worst_margin, exhaustive.witness
                );
            }
            ShortcutCheck::TopLevelViolated(report) => {
                assert!(!report.satisfied);
                assert!(!hall::check_hall_exhaustive(&l).unwrap().satisfied);
            }
            ShortcutCheck::Inconclusive { .. } => {}
        }

        let outcome = solver::find_coloring(&l);
        if outcome.colorable {
            assert!(
                hall::check_hall_exhaustive(&l).unwrap().satisfied,
                "colorable instance must satisfy Hall's condition"
            );
        }
    }
    assert!(
        shortcut_hits > 100,
        "only {shortcut_hits} satisfied shortcuts sampled"
    );
}

#[test]
fn removing_edges_never_decreases_margins() {
    let mut rng = rng(0x5eed_0004);
    for _ in 0..40 {
        let n = rng.gen_range(2..=6);
        let g = random_graph(&mut rng, n);
        if g.edge_count() == 0 {
            continue;
        }
        let l = random_assignment(&mut rng, g.clone(), 4, 0, 3);
        // Pick one edge to remove.
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| g.has_edge(u, v))
            .collect();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let g2 = g.remove_edge(u, v).unwrap();
        let lists: Vec<Vec<String>> = (0..n)
            .map(|w| l.list_names(w).into_iter().map(String::from).collect())
            .collect();
        let l2 = hallnum::list::ListAssignment::new(g2, &lists).unwrap();

        for mask in 0..(1u64 << n) {
            let h = VertexSet::from_bits(mask);
            let before = hall::hall_inequality(&l, h).unwrap().1;
            let after = hall::hall_inequality(&l2, h).unwrap().1;
            assert!(
                after >= before,
                "margin dropped from {before} to {after} on {h:?} after removing ({u},{v})"
            );
        }
    }
}

#[test]
fn singleton_margin_iff_nonempty_list() {
    let mut rng = rng(0x5eed_0005);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n);
        let l = random_assignment(&mut rng, g, 5, 0, 3);
        for v in 0..n {
            let (holds, margin) = hall::hall_inequality(&l, VertexSet::singleton(v)).unwrap();
            assert_eq!(holds, !l.list(v).is_empty());
            assert_eq!(margin, l.list_size(v) as i64 - 1);
        }
    }
}

#[test]
fn exhaustive_audit_matches_brute_force_margins() {
    let mut rng = rng(0x5eed_0006);
    for _ in 0..40 {
        let n = rng.gen_range(0..=6);
        let g = random_graph(&mut rng, n);
        let l = random_assignment(&mut rng, g, 4, 0, 3);
        let report = hall::check_hall_exhaustive(&l).unwrap();
        assert_eq!(report.worst_margin, brute_worst_margin(&l));
        assert_eq!(report.satisfied, brute_hall_satisfied(&l));
        assert_eq!(report.worst_margin, brute_margin(&l, report.witness));
    }
}

#[test]
fn restriction_of_proper_coloring_stays_proper() {
    let mut rng = rng(0x5eed_0007);
    let mut restrictions = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n);
        let l = random_assignment(&mut rng, g, 6, 1, 3);
        let outcome = solver::find_coloring(&l);
        if let Some(coloring) = outcome.coloring {
            let mask = rng.gen_range(0..(1u64 << n));
            let h = VertexSet::from_bits(mask);
            assert!(
                solver::coloring_is_proper_within(&l, h, &coloring),
                "restriction to {h:?} broke properness"
            );
            restrictions += 1;
        }
    }
    assert!(restrictions > 50);
}

#[test]
fn sdr_agrees_with_permutation_search() {
    let mut rng = rng(0x5eed_0008);
    for _ in 0..300 {
        let count = rng.gen_range(0..=8);
        let sets: Vec<ColorSet> = (0..count)
            .map(|_| {
                let size = rng.gen_range(0..=4usize);
                let mut set = ColorSet::EMPTY;
                for _ in 0..size {
                    set = set.with(hallnum::list::ColorId(rng.gen_range(0..10)));
                }
                set
            })
            .collect();
        let found = solver::find_sdr(&sets);
        assert_eq!(found.is_some(), brute_sdr_exists(&sets), "sets {sets:?}");
        if let Some(reps) = found {
            let mut seen = HashSet::new();
            for (i, &rep) in reps.iter().enumerate() {
                assert!(sets[i].contains(rep));
                assert!(seen.insert(rep), "representatives must be distinct");
            }
        }
    }
}

#[test]
fn solver_agrees_with_brute_force_on_tiny_instances() {
    let mut rng = rng(0x5eed_0009);
    for _ in 0..200 {
        let n = rng.gen_range(0..=5);
        let g = random_graph(&mut rng, n);
        let l = random_assignment(&mut rng, g, 4, 0, 3);
        let outcome = solver::find_coloring(&l);
        assert_eq!(outcome.colorable, brute_list_colorable(&l));
        if let Some(c) = &outcome.coloring {
            assert!(solver::verify_coloring(&l, c).unwrap());
        }
    }
}

#[test]
fn canonical_count_matches_brute_force_reduction() {
    // Distinct list assignments to K(2,2) with all lists of size 2, counted
    // up to color renaming: enumerate explicit assignments over a palette of
    // 8 colors (8 = 4 vertices x list size 2 colors are always enough) and
    // reduce by the class-multiset signature.
    let pairs: Vec<(usize, usize)> = (0..8)
        .flat_map(|a| ((a + 1)..8).map(move |b| (a, b)))
        .collect();
    assert_eq!(pairs.len(), 28);
    let mut signatures = HashSet::new();
    let mut idx = [0usize; 4];
    loop {
        // Signature: sorted multiset of nonempty color classes.
        let mut classes = vec![0u8; 8];
        for (v, &p) in idx.iter().enumerate() {
            let (a, b) = pairs[p];
            classes[a] |= 1 << v;
            classes[b] |= 1 << v;
        }
        let mut sig: Vec<u8> = classes.into_iter().filter(|&c| c != 0).collect();
        sig.sort_unstable();
        signatures.insert(sig);

        let mut i = 0;
        loop {
            if i == 4 {
                break;
            }
            idx[i] += 1;
            if idx[i] < pairs.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == 4 {
            break;
        }
    }

    let mut budget = Budget::new(10_000_000);
    let canonical = count_level(4, Level::Exact { size: 2 }, &mut budget).unwrap();
    assert_eq!(canonical, signatures.len() as u64);
    assert_eq!(canonical, 139);
}

#[test]
fn hall_upper_never_exceeds_ch_upper() {
    let opts = params::BoundsOptions::default();
    for parts in [
        vec![2, 2],
        vec![3, 2],
        vec![4, 2],
        vec![2, 2, 2],
        vec![4, 3],
    ] {
        let g = Graph::complete_multipartite(&parts).unwrap();
        let mut budget = Budget::new(20_000);
        let bundle = params::parameter_bundle(&g, &opts, &mut budget).unwrap();
        assert!(
            bundle.hall.upper <= bundle.ch.upper,
            "fact 2 broken on {parts:?}"
        );
        assert!(bundle.hall.lower <= bundle.hall.upper);
        assert!(bundle.ch.lower <= bundle.ch.upper);
    }
}

proptest! {
    #[test]
    fn induced_subgraph_of_full_set_is_identity(
        n in 0usize..9,
        edge_bits in any::<u64>(),
    ) {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if edge_bits & (1 << (bit % 64)) != 0 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(g.induced_subgraph(g.full_set()).unwrap(), g);
    }

    #[test]
    fn induced_alpha_never_exceeds_alpha_plus_removed(
        n in 1usize..8,
        edge_bits in any::<u64>(),
        subset_bits in any::<u64>(),
    ) {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if edge_bits & (1 << (bit % 64)) != 0 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let s = VertexSet::from_bits(subset_bits & g.full_set().bits());
        let sub = g.induced_subgraph(s).unwrap();
        // Deleting one vertex changes alpha by at most one, so induced
        // subgraphs obey the telescoped bounds.
        let removed = n - s.len();
        let alpha = g.independence_number();
        let sub_alpha = sub.independence_number();
        prop_assert!(sub_alpha <= alpha);
        prop_assert!(sub_alpha + removed >= alpha);
    }
}

#[test]
fn chi_matches_brute_force_on_small_graphs() {
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    assert_eq!(brute_chromatic(&c5), 3);
    assert_eq!(c5.chromatic_number().unwrap(), 3);

    let mut rng = rng(0x5eed_000a);
    for _ in 0..40 {
        let n = rng.gen_range(0..=6);
        let g = random_graph(&mut rng, n);
        assert_eq!(g.chromatic_number().unwrap(), brute_chromatic(&g), "{g:?}");
    }
}

#[test]
fn matching_fast_path_agrees_with_backtracking_on_cliques() {
    let mut rng = rng(0x5eed_000b);
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let g = Graph::complete_multipartite(&vec![1; n]).unwrap();
        let l = random_assignment(&mut rng, g, 8, 0, 4);
        assert_eq!(
            solver::colorable_complete(&l).unwrap(),
            solver::find_coloring(&l).colorable
        );
    }
}
