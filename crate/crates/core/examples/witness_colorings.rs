//! Builds the standard lower-bound colorings and checks them with the exact
//! search.

use std::time::Instant;

use loose_ramsey::witness::{extremal_coloring, verify_witness};

fn main() {
    for n in 3..=6 {
        for m in 3..=n {
            let c = extremal_coloring(4, n, m).expect("valid parameters");
            let t = Instant::now();
            let ok = verify_witness(&c, n, m);
            println!(
                "n={n} m={m} N={:>2} red edges={:>4} witness={ok} ({:.1?})",
                c.n_vertices(),
                c.count_red(),
                t.elapsed()
            );
        }
    }
}
