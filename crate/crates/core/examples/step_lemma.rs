//! Turns a red C_{n-1} into a blue C_m and prints the construction trace.

use loose_ramsey::coloring::Coloring;
use loose_ramsey::hypergraph::{loose_cycle_template, Edge};
use loose_ramsey::proof::{step_lemma, RamseyParams};

fn main() {
    let (n, m) = (6, 5);
    let params = RamseyParams::new(n, m).expect("n >= m >= 3");
    let red = loose_cycle_template(4, n - 1).expect("valid cycle");
    let mut edges: Vec<Edge> = red.edges().to_vec();
    // a red pivot edge forces the first branch of the construction
    let e = &red.edges()[0];
    let pivot = Edge::new(e.vertices()[1..].iter().copied().chain([19])).expect("distinct");
    edges.push(pivot);
    let c = Coloring::from_red_edges(4, params.bound, edges.iter()).expect("valid coloring");
    let out = step_lemma(&c, &red, &params).expect("preconditions hold");
    print!("{}", out.trace);
    println!("constructive={}", out.constructive);
}
