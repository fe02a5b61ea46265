//! Instance generators shared by the integration suites.
#![allow(dead_code)]

use loose_ramsey::coloring::{all_edges, random_coloring, Color, Coloring};
use loose_ramsey::hypergraph::{loose_cycle_template, Edge, LooseCycle, LoosePath, Vertex};
use loose_ramsey::oracle::{
    extend_to_maximal, find_monochromatic_loose_cycle, find_monochromatic_loose_path,
};
use loose_ramsey::proof::{RamseyParams, R_MAX};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A red path that is maximal with respect to its reservoir, and the
/// reservoir.
pub struct PathInstance {
    pub coloring: Coloring,
    pub path: LoosePath,
    pub reservoir: Vec<Vertex>,
}

/// Dense red block `0..17`, sparse red edges meeting `17..24`. A red path
/// inside the block is grown to maximality with the sparse vertices as the
/// reservoir. `None` when fewer than four reservoir vertices survive.
pub fn block_instance(seed: u64) -> Option<PathInstance> {
    let nv = 24;
    let block = 17;
    let q = [0.005, 0.01, 0.03][seed as usize % 3];
    let inner = random_coloring(4, nv, 0.6, seed).ok()?;
    let outer = random_coloring(4, nv, q, seed + 1000).ok()?;
    let red: Vec<Edge> = all_edges(4, nv)
        .filter(|e| {
            let src = if e.vertices().iter().all(|&v| v < block) {
                &inner
            } else {
                &outer
            };
            src.color_of(e).ok() == Some(Color::Red)
        })
        .collect();
    let c = Coloring::from_red_edges(4, nv, red.iter()).ok()?;
    let start_len = 2 + (seed as usize / 3) % 3;
    let p0 = find_monochromatic_loose_path(&c, Color::Red, start_len)?;
    let w: Vec<Vertex> = (block..nv as Vertex)
        .filter(|&v| !p0.contains_vertex(v))
        .collect();
    let (path, reservoir) = extend_to_maximal(&c, Color::Red, &p0, &w, R_MAX).ok()?;
    (reservoir.len() >= 4).then_some(PathInstance {
        coloring: c,
        path,
        reservoir,
    })
}

/// A red `C_{n-1}` on the first vertices with some red edges of the form
/// (three consecutive cycle vertices, one outside vertex) and sparse red
/// noise near the cycle. `None` if a red `C_n` appeared.
pub fn pivot_instance(
    n: usize,
    m: usize,
    seed: u64,
) -> Option<(Coloring, LooseCycle, RamseyParams)> {
    let params = RamseyParams::new(n, m).ok()?;
    let nv = 3 * n + params.t;
    let cycle = loose_cycle_template(4, n - 1).ok()?;
    let len = cycle.embedding().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q_pivot = [0.05, 0.2, 0.5][seed as usize % 3];
    let q_near = [0.0, 0.02, 0.08][(seed as usize / 3) % 3];
    let mut c = Coloring::from_red_edges(4, nv, cycle.edges()).ok()?;
    let on_cycle = cycle.vertex_mask();
    let position = |v: Vertex| cycle.embedding().iter().position(|&x| x == v);
    for e in all_edges(4, nv) {
        let inside: Vec<usize> = e.vertices().iter().filter_map(|&v| position(v)).collect();
        let consecutive = inside.len() == 3
            && (0..len).any(|s| (0..3).all(|d| inside.contains(&((s + d) % len))));
        let near = (e.mask() & on_cycle).count_ones() >= 2;
        if (consecutive && rng.gen_bool(q_pivot)) || (near && rng.gen_bool(q_near)) {
            c.set(&e, Color::Red).ok()?;
        }
    }
    find_monochromatic_loose_cycle(&c, Color::Red, n)
        .is_none()
        .then_some((c, cycle, params))
}

/// Red `C_{n-1}` template, everything else blue.
pub fn planted_instance(n: usize, m: usize) -> (Coloring, LooseCycle, RamseyParams) {
    let params = RamseyParams::new(n, m).unwrap();
    let cycle = loose_cycle_template(4, n - 1).unwrap();
    let c = Coloring::from_red_edges(4, 3 * n + params.t, cycle.edges()).unwrap();
    (c, cycle, params)
}

/// Tries every ordering of the vertex set as a cycle embedding. Only
/// usable when the cycle spans almost all vertices.
pub fn naive_has_cycle(c: &Coloring, color: Color, len: usize) -> bool {
    let k = c.k();
    let span = len * (k - 1);
    let nv = c.n_vertices();
    if span > nv {
        return false;
    }
    let mut chosen = Vec::with_capacity(span);
    let mut used = vec![false; nv];
    arrange(c, color, len, span, &mut chosen, &mut used)
}

fn arrange(
    c: &Coloring,
    color: Color,
    len: usize,
    span: usize,
    chosen: &mut Vec<Vertex>,
    used: &mut [bool],
) -> bool {
    let k = c.k();
    if chosen.len() == span {
        return (0..len).all(|i| {
            let e = Edge::new((0..k).map(|j| chosen[(i * (k - 1) + j) % span])).unwrap();
            c.color_of(&e).unwrap() == color
        });
    }
    for v in 0..used.len() {
        if used[v] {
            continue;
        }
        used[v] = true;
        chosen.push(v as Vertex);
        let hit = arrange(c, color, len, span, chosen, used);
        chosen.pop();
        used[v] = false;
        if hit {
            return true;
        }
    }
    false
}
