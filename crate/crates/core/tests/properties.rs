use proptest::prelude::*;

use schubitope::combinatorics::{criterion_check, rothe_diagram, skyline_diagram, CriterionMode};
use schubitope::polytope::{lattice_free_check, Schubitope};
use schubitope::{Composition, Diagram, Permutation, Subset};

fn diagram(n: usize) -> impl Strategy<Value = Diagram> {
    prop::collection::vec(0u32..(1 << n), n).prop_map(move |cols| {
        Diagram::new(n, cols.into_iter().map(Subset::from_bits).collect()).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn composition() -> impl Strategy<Value = Composition> {
    (1usize..6).prop_flat_map(|len| prop::collection::vec(0..=len, len).prop_map(Composition::new))
}

/// Rows from the first empty row to the last box, by direct scan.
fn movable_rows(column: Subset, n: usize) -> Vec<usize> {
    let first_gap = (1..=n).find(|&r| !column.contains(r));
    let last_box = (1..=n).rev().find(|&r| column.contains(r));
    match (first_gap, last_box) {
        (Some(lo), Some(hi)) if lo < hi => (lo..=hi).collect(),
        _ => Vec::new(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn diagram_strings_round_trip(d in (1usize..6).prop_flat_map(diagram)) {
        let again = Diagram::parse(&d.to_string(), d.n()).unwrap();
        prop_assert_eq!(again, d);
    }

    #[test]
    fn permutation_strings_round_trip(w in (1usize..12).prop_flat_map(permutation)) {
        let again: Permutation = w.to_string().parse().unwrap();
        prop_assert_eq!(&again, &w);
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn composition_strings_round_trip(a in composition()) {
        let again: Composition = a.to_string().parse().unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn movable_intervals_match_scan(d in (1usize..7).prop_flat_map(diagram)) {
        for (j, m) in d.movable_intervals().iter().enumerate() {
            prop_assert_eq!(m.as_subset().to_vec(), movable_rows(d.column(j + 1), d.n()));
        }
    }

    #[test]
    fn rothe_diagram_has_inversion_many_boxes(w in (1usize..8).prop_flat_map(permutation)) {
        prop_assert_eq!(rothe_diagram(&w).box_count(), w.inversions());
    }

    #[test]
    fn skyline_rows_hold_the_parts(a in composition()) {
        let d = skyline_diagram(&a).unwrap();
        for (i, &part) in a.parts().iter().enumerate() {
            let row: usize = (1..=d.n()).filter(|&j| d.contains_box(i + 1, j)).count();
            prop_assert_eq!(row, part);
        }
    }

    #[test]
    fn schubitope_points_lie_on_the_degree_hyperplane(d in diagram(4), t in 0u64..3) {
        let pts = Schubitope::new(&d).points(t);
        let degree = t as i64 * d.box_count() as i64;
        prop_assert!(!pts.is_empty());
        for p in pts.points() {
            prop_assert_eq!(p.iter().sum::<i64>(), degree);
            prop_assert!(p.iter().all(|&c| c >= 0));
        }
    }

    #[test]
    fn criterion_matches_lattice_freeness(d in diagram(4)) {
        let crit = criterion_check(&d, CriterionMode::AtMostOne).ok;
        let lf = lattice_free_check(&Schubitope::new(&d).points(1)).ok;
        prop_assert_eq!(crit, lf);
    }
}
