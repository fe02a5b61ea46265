//! Finds a good configuration on the first two edges of a red path whose
//! reservoir edges are all blue.

use loose_ramsey::coloring::Coloring;
use loose_ramsey::hypergraph::{loose_path_template, Vertex};
use loose_ramsey::proof::{find_good_configuration, validate_configuration};

fn main() {
    let p = loose_path_template(4, 3).expect("valid path");
    let c = Coloring::from_red_edges(4, 16, p.edges()).expect("valid coloring");
    let w: Vec<Vertex> = (10..16).collect();
    for i in 1..p.len() {
        let cfg = find_good_configuration(&c, &p, &w, i, None).expect("configuration exists");
        validate_configuration(&c, &p, &w, &cfg).expect("valid configuration");
        let (f, g) = cfg.with_ends(cfg.x, cfg.y);
        println!(
            "i={i} f={f} g={g} |W1|={} |W2|={}",
            cfg.w1.len(),
            cfg.w2.len()
        );
    }
}
