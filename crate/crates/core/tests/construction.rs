//! The step construction and the extraction driver on generated instances.

mod common;

use loose_ramsey::coloring::{random_coloring, Color};
use loose_ramsey::error::Error;
use loose_ramsey::oracle::is_monochromatic_cycle;
use loose_ramsey::proof::{extract, step_lemma, TraceEvent};
use loose_ramsey::witness::extremal_coloring;

#[test]
fn pivot_instances_close_constructively() {
    let mut with_pivot = 0;
    for n in 5..=7 {
        for m in 3..=n {
            for seed in 0..12 {
                let Some((c, cycle, params)) = common::pivot_instance(n, m, seed) else {
                    continue;
                };
                let out = step_lemma(&c, &cycle, &params).unwrap();
                assert_eq!(out.cycle.len(), m);
                assert!(is_monochromatic_cycle(&c, Color::Blue, &out.cycle));
                assert!(out.constructive, "n={n} m={m} seed={seed}\n{}", out.trace);
                out.trace.check_colors(&c).unwrap();
                with_pivot += usize::from(
                    out.trace
                        .events()
                        .iter()
                        .any(|e| matches!(e, TraceEvent::Pivot { .. })),
                );
            }
        }
    }
    assert!(with_pivot > 20);
}

#[test]
fn traces_end_with_the_cycle() {
    let (c, cycle, params) = common::planted_instance(6, 6);
    let out = step_lemma(&c, &cycle, &params).unwrap();
    match out.trace.events().last() {
        Some(TraceEvent::Found { color, cycle }) => {
            assert_eq!(*color, Color::Blue);
            assert_eq!(cycle, &out.cycle);
        }
        other => panic!("unexpected last event {other:?}"),
    }
    let text = out.trace.to_string();
    assert!(text.lines().any(|l| l.starts_with("case ")));
    let swapped = out.trace.swapped();
    swapped.check_colors(&c.swap_colors()).unwrap();
}

#[test]
fn step_rejects_a_red_target() {
    let (mut c, cycle, params) = common::planted_instance(5, 4);
    for e in extremal_coloring(4, 5, 4).unwrap().red_edges() {
        c.set(&e, Color::Red).unwrap();
    }
    c = c.with_added_vertex(|_| Color::Red).unwrap();
    assert!(matches!(
        step_lemma(&c, &cycle, &params),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn extraction_on_sparse_and_dense_colorings() {
    for (n, m, nv) in [(5, 3, 16), (5, 4, 16), (5, 5, 17), (6, 4, 19)] {
        for seed in 0..6u64 {
            let p = [0.0005, 0.003, 0.5][seed as usize % 3];
            let c = random_coloring(4, nv, p, seed).unwrap();
            let out = extract(&c, n, m).unwrap();
            let len = if out.color == Color::Red { n } else { m };
            assert_eq!(out.cycle.len(), len);
            assert!(is_monochromatic_cycle(&c, out.color, &out.cycle));
            out.trace.check_colors(&c).unwrap();
        }
    }
}

#[test]
fn extraction_on_pivot_instances() {
    for (n, m) in [(6, 5), (6, 6), (7, 5)] {
        for seed in 0..6 {
            let Some((c, _, params)) = common::pivot_instance(n, m, seed) else {
                continue;
            };
            let c = if c.n_vertices() < params.bound {
                c.with_added_vertex(|_| Color::Blue).unwrap()
            } else {
                c
            };
            let out = extract(&c, n, m).unwrap();
            assert_eq!(out.color, Color::Blue);
            assert!(is_monochromatic_cycle(&c, Color::Blue, &out.cycle));
        }
    }
}
