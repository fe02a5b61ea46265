//! Seeded local search for witness colorings.

use loose_ramsey::witness::{search_witness, SearchConfig};

fn main() {
    for (n, m, vertices) in [(4, 3, 12), (5, 4, 15), (4, 3, 13)] {
        let out = search_witness(4, n, m, vertices, 7, SearchConfig::with_budget(200))
            .expect("valid parameters");
        let last = out
            .transcript
            .last()
            .map(|l| l.to_string())
            .unwrap_or_default();
        match out.witness {
            Some(c) => println!(
                "n={n} m={m} N={vertices}: witness with {} red edges ({last})",
                c.count_red()
            ),
            None => println!("n={n} m={m} N={vertices}: exhausted ({last})"),
        }
    }
}
