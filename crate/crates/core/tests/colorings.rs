//! Text format and bookkeeping of colorings.

use loose_ramsey::coloring::{binomial, random_coloring, Color, Coloring};
use loose_ramsey::error::Error;
use proptest::prelude::*;

proptest! {
    #[test]
    fn text_round_trip(k in 2usize..=5, nv in 5usize..=14, p in 0.0f64..=1.0, seed: u64) {
        prop_assume!(k <= nv);
        let c = random_coloring(k, nv, p, seed).unwrap();
        let text = c.serialize();
        let back = Coloring::parse(&text).unwrap();
        prop_assert!(back == c);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn swapping_colors_is_an_involution(nv in 4usize..=12, p in 0.0f64..=1.0, seed: u64) {
        let c = random_coloring(4, nv, p, seed).unwrap();
        let s = c.swap_colors();
        prop_assert_eq!(s.count_red(), c.count(Color::Blue));
        prop_assert!(s.swap_colors() == c);
        prop_assert_eq!(c.count_red() + c.count(Color::Blue), binomial(nv, 4));
    }

    #[test]
    fn added_vertex_keeps_old_edges(nv in 4usize..=12, seed: u64) {
        let c = random_coloring(4, nv, 0.5, seed).unwrap();
        let grown = c.with_added_vertex(|_| Color::Red).unwrap();
        prop_assert_eq!(grown.n_vertices(), nv + 1);
        for e in c.red_edges() {
            prop_assert_eq!(grown.color_of(&e).unwrap(), Color::Red);
        }
        prop_assert_eq!(grown.count_red(), c.count_red() + binomial(nv, 3));
    }
}

#[test]
fn seeded_colorings_are_reproducible() {
    let a = random_coloring(4, 12, 0.3, 99).unwrap();
    let b = random_coloring(4, 12, 0.3, 99).unwrap();
    assert!(a == b);
    assert!(a != random_coloring(4, 12, 0.3, 100).unwrap());
}

#[test]
fn malformed_text_is_rejected() {
    let good = Coloring::all_blue(4, 6).unwrap().serialize();
    assert!(Coloring::parse(&good).is_ok());
    assert!(matches!(Coloring::parse(""), Err(Error::Parse { .. })));
    assert!(matches!(
        Coloring::parse("not a coloring"),
        Err(Error::Parse { .. })
    ));
    for bad in [
        "HRC 1\nk 4 n 6\nred\n0 1 2 9\nend\n",
        "HRC 1\nk 4 n 6\nred\n0 2 1 3\nend\n",
        "HRC 1\nk 4 n 6\nred\n0 1 2\nend\n",
        "HRC 1\nk 4 n 6\nred\n0 1 2 3\n0 1 2 3\nend\n",
        "HRC 1\nk 4 n 6\nred\n0 1 2 3\n",
        "HRC 2\nk 4 n 6\nred\nend\n",
    ] {
        assert!(
            matches!(Coloring::parse(bad), Err(Error::Parse { .. })),
            "{bad}"
        );
    }
}
