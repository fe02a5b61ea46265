//! Exact search against brute force, and the maximality checks.

mod common;

use loose_ramsey::coloring::{random_coloring, Color};
use loose_ramsey::hypergraph::{loose_path_template, Vertex};
use loose_ramsey::oracle::{
    check_maximal, enumerate_monochromatic_cycles, extend_to_maximal,
    find_monochromatic_loose_cycle, find_monochromatic_loose_path, is_monochromatic_cycle,
    is_monochromatic_path,
};
use loose_ramsey::proof::R_MAX;
use proptest::prelude::*;

#[test]
fn sparse_colorings_agree_with_brute_force() {
    let mut negatives = 0;
    for seed in 0..60u64 {
        let p = [0.01, 0.03, 0.06][seed as usize % 3];
        let c = random_coloring(4, 9, p, seed).unwrap();
        for color in [Color::Red, Color::Blue] {
            let fast = find_monochromatic_loose_cycle(&c, color, 3);
            assert_eq!(
                fast.is_some(),
                common::naive_has_cycle(&c, color, 3),
                "seed {seed} {color}"
            );
            negatives += usize::from(fast.is_none());
        }
    }
    assert!(
        negatives > 10,
        "the sample should contain colorings without a cycle"
    );
}

#[test]
fn enumeration_finds_distinct_valid_cycles() {
    let c = random_coloring(4, 12, 0.7, 5).unwrap();
    let all = enumerate_monochromatic_cycles(&c, Color::Red, 3, 50);
    assert!(!all.is_empty() && all.len() <= 50);
    let mut canon: Vec<_> = all.iter().map(|cy| cy.canonical()).collect();
    canon.sort_by(|a, b| a.embedding().cmp(b.embedding()));
    canon.dedup();
    assert_eq!(canon.len(), all.len());
    assert!(all
        .iter()
        .all(|cy| is_monochromatic_cycle(&c, Color::Red, cy)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn found_structures_are_monochromatic(seed: u64, p in 0.05f64..0.95, len in 3usize..=4) {
        let c = random_coloring(4, 13, p, seed).unwrap();
        for color in [Color::Red, Color::Blue] {
            if let Some(cy) = find_monochromatic_loose_cycle(&c, color, len) {
                prop_assert_eq!(cy.len(), len);
                prop_assert!(is_monochromatic_cycle(&c, color, &cy));
                // a cycle contains a path one edge shorter
                prop_assert!(find_monochromatic_loose_path(&c, color, len - 1).is_some());
            }
            if let Some(path) = find_monochromatic_loose_path(&c, color, len) {
                prop_assert!(is_monochromatic_path(&c, color, &path));
            }
        }
    }

    #[test]
    fn grown_paths_are_maximal(seed: u64, p in 0.1f64..0.6) {
        let mut c = random_coloring(4, 16, p, seed).unwrap();
        let start = loose_path_template(4, 2).unwrap();
        for e in start.edges() {
            c.set(e, Color::Red).unwrap();
        }
        let w: Vec<Vertex> = (7..16).collect();
        let (path, left) = extend_to_maximal(&c, Color::Red, &start, &w, R_MAX).unwrap();
        prop_assert!(path.len() >= start.len());
        prop_assert!(is_monochromatic_path(&c, Color::Red, &path));
        prop_assert_eq!(path.start(), start.start());
        prop_assert_eq!(path.end(), start.end());
        prop_assert!(left.iter().all(|&v| !path.contains_vertex(v)));
        let report = check_maximal(&c, Color::Red, &path, &left, R_MAX).unwrap();
        prop_assert!(report.is_maximal);
    }
}
