//! Exact search for monochromatic loose cycles and paths in random
//! colorings.

use loose_ramsey::coloring::{random_coloring, Color};
use loose_ramsey::oracle::{find_monochromatic_loose_cycle, find_monochromatic_loose_path};

fn main() {
    for seed in 0..4 {
        let c = random_coloring(4, 12, 0.3, seed).expect("valid parameters");
        for color in [Color::Red, Color::Blue] {
            let cycle = find_monochromatic_loose_cycle(&c, color, 3);
            let path = find_monochromatic_loose_path(&c, color, 3);
            println!(
                "seed={seed} {color:<4} C3: {:<32} P3: {:?}",
                cycle.map_or("none".to_string(), |cy| format!("{:?}", cy.embedding())),
                path.map(|p| p.embedding().to_vec())
            );
        }
    }
}
