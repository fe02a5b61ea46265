//! Grows a red path by local replacements until no replacement of up to two
//! edges with reservoir vertices makes it longer.

use loose_ramsey::coloring::{random_coloring, Color};
use loose_ramsey::hypergraph::{loose_path_template, Vertex};
use loose_ramsey::oracle::{check_maximal, extend_to_maximal};
use loose_ramsey::proof::R_MAX;

fn main() {
    let mut c = random_coloring(4, 16, 0.25, 3).expect("valid parameters");
    let start = loose_path_template(4, 2).expect("valid path");
    for e in start.edges() {
        c.set(e, Color::Red).expect("edge in range");
    }
    let reservoir: Vec<Vertex> = (7..16).collect();
    let before = check_maximal(&c, Color::Red, &start, &reservoir, R_MAX).expect("valid input");
    println!(
        "start {:?} maximal={}",
        start.embedding(),
        before.is_maximal
    );
    if let Some(ext) = before.counterexample {
        println!(
            "  first extension: edge {} r={} via {:?}",
            ext.index, ext.r, ext.reservoir_used
        );
    }
    let (path, left) =
        extend_to_maximal(&c, Color::Red, &start, &reservoir, R_MAX).expect("valid input");
    println!(
        "grown {:?} ({} edges), reservoir left {left:?}",
        path.embedding(),
        path.len()
    );
    let after = check_maximal(&c, Color::Red, &path, &left, R_MAX).expect("valid input");
    println!("maximal={}", after.is_maximal);
}
