//! Grows blue paths along a maximal red path, one configuration per pair of
//! red edges.

use loose_ramsey::coloring::Coloring;
use loose_ramsey::hypergraph::{loose_path_template, Vertex};
use loose_ramsey::proof::{build_blue_paths, validate_blue_paths};

fn main() {
    let p = loose_path_template(4, 4).expect("valid path");
    let c = Coloring::from_red_edges(4, 20, p.edges()).expect("valid coloring");
    let w: Vec<Vertex> = (13..18).collect();
    let res = build_blue_paths(&c, &p, &w).expect("maximal red path");
    validate_blue_paths(&c, &p, &w, &res).expect("valid output");
    for step in &res.trace {
        println!(
            "step {} join={} skipped={}",
            step.step, step.join, step.skipped
        );
    }
    println!("Q  {:?}", res.q.embedding());
    if let Some(q2) = &res.q_prime {
        println!("Q' {:?}", q2.embedding());
    }
    println!("W'={:?} r={} x={}", res.w_prime, res.r, res.x);
}
