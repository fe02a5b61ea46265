//! Finds a red C_5 or blue C_4 in random colorings on 16 vertices.

use loose_ramsey::coloring::random_coloring;
use loose_ramsey::proof::extract;

fn main() {
    for seed in 0..6 {
        let c = random_coloring(4, 16, [0.5, 0.005, 0.0005][seed as usize % 3], seed)
            .expect("valid parameters");
        let out = extract(&c, 5, 4).expect("16 vertices suffice");
        println!(
            "seed={seed} {} {:?} constructive={} trace lines={}",
            out.color,
            out.cycle.embedding(),
            out.constructive,
            out.trace.events().len()
        );
    }
}
