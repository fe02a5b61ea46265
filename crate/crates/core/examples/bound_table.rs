//! Prints the known Ramsey values for loose cycles and paths.

use loose_ramsey::proof::{ramsey_bound, BoundKind};

fn main() {
    for kind in [
        BoundKind::CycleCycle,
        BoundKind::PathCycle,
        BoundKind::PathPath,
    ] {
        println!("{}:", kind.code());
        for n in 3..=8 {
            let row: Vec<String> = (3..=n)
                .map(|m| match ramsey_bound(kind, n, m) {
                    Ok(b) => format!("{:<16}", b.to_string()),
                    Err(_) => format!("{:<16}", "?"),
                })
                .collect();
            println!("  n={n} {}", row.join(""));
        }
    }
}
