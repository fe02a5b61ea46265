//! Exact search for monochromatic loose paths and cycles, and maximality of
//! monochromatic paths with respect to a vertex reservoir.
//!
//! The cycle search roots every candidate at a vertex `r` taken in order of
//! increasing color-degree: it first enumerates cycles through `r`, then
//! deletes `r` from the usable set. A cycle through `r` is anchored at one
//! edge `e_1 ∋ r` with connectors `f < l`, which removes the reflection.
//! Branches die as soon as the usable vertices left cannot hold the rest of
//! the cycle, or when a greedy hitting set `T` of the usable edges is too
//! small: every vertex lies on at most two cycle edges, so the edges still
//! to place number at most twice the free vertices of `T`.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::coloring::{all_edges, Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::{
    validate_loose_cycle, validate_loose_path, Edge, LooseCycle, LoosePath, Vertex,
};

#[inline]
fn bit(v: Vertex) -> u64 {
    1u64 << v
}

fn vertices_of(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros();
            mask &= mask - 1;
            v
        })
    })
}

/// Per-color adjacency: every colored edge listed under each of its vertices.
pub(crate) struct ColorIndex {
    by_vertex: Vec<Vec<u64>>,
    edges: Vec<u64>,
    support: u64,
}

impl ColorIndex {
    pub(crate) fn new(c: &Coloring, color: Color) -> Self {
        let mut by_vertex = vec![Vec::new(); c.n_vertices()];
        let mut edges = Vec::new();
        let mut support = 0;
        for e in all_edges(c.k(), c.n_vertices()) {
            let m = e.mask();
            if c.has_color_mask(m, color) {
                edges.push(m);
                support |= m;
                for v in vertices_of(m) {
                    by_vertex[v as usize].push(m);
                }
            }
        }
        ColorIndex {
            by_vertex,
            edges,
            support,
        }
    }

    /// Greedy hitting set of the edges inside `allowed`.
    fn transversal(&self, allowed: u64) -> u64 {
        let mut open: Vec<u64> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e & !allowed == 0)
            .collect();
        let mut hit = 0u64;
        let mut degree = [0usize; 64];
        while !open.is_empty() {
            degree.fill(0);
            for &e in &open {
                for v in vertices_of(e) {
                    degree[v as usize] += 1;
                }
            }
            let best = (0..64)
                .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
                .unwrap_or(0);
            hit |= bit(best as Vertex);
            open.retain(|&e| e & hit == 0);
        }
        hit
    }
}

struct CycleSearch<'a, F> {
    index: &'a ColorIndex,
    k: usize,
    n: usize,
    allowed: u64,
    hitting: u64,
    first: Vertex,
    embedding: Vec<Vertex>,
    on_found: F,
}

impl<F: FnMut(&[Vertex]) -> ControlFlow<()>> CycleSearch<'_, F> {
    fn extend(&mut self, cur: Vertex, used: u64, done: usize) -> ControlFlow<()> {
        let remaining = self.n - done;
        let free = self.allowed & !used;
        if remaining == 1 {
            let ends = bit(cur) | bit(self.first);
            for &em in &self.index.by_vertex[cur as usize] {
                if em & !self.allowed == 0 && em & used == ends {
                    let len = self.embedding.len();
                    self.embedding.extend(vertices_of(em & !ends));
                    let flow = (self.on_found)(&self.embedding);
                    self.embedding.truncate(len);
                    flow?;
                }
            }
            return ControlFlow::Continue(());
        }
        if (free.count_ones() as usize) < remaining * (self.k - 1) - 1 {
            return ControlFlow::Continue(());
        }
        let ends = (bit(cur) | bit(self.first)) & self.hitting;
        if remaining > 2 * (free & self.hitting).count_ones() as usize + ends.count_ones() as usize
        {
            return ControlFlow::Continue(());
        }
        // the closing edge needs a usable edge at the first vertex
        let first_bit = bit(self.first);
        if !self.index.by_vertex[self.first as usize]
            .iter()
            .any(|&em| em & used == first_bit && em & !self.allowed == 0)
        {
            return ControlFlow::Continue(());
        }
        for &em in &self.index.by_vertex[cur as usize] {
            if em & !self.allowed != 0 || em & used != bit(cur) {
                continue;
            }
            let others = em & !bit(cur);
            for next in vertices_of(others) {
                let len = self.embedding.len();
                self.embedding.extend(vertices_of(others & !bit(next)));
                self.embedding.push(next);
                let flow = self.extend(next, used | em, done + 1);
                self.embedding.truncate(len);
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Visits monochromatic loose cycles of length `n` until `on_found` breaks.
/// Each visit passes a cycle embedding; a cycle may be visited more than once.
fn visit_cycles(
    c: &Coloring,
    color: Color,
    n: usize,
    mut on_found: impl FnMut(&[Vertex]) -> ControlFlow<()>,
) {
    let k = c.k();
    let need = n * (k - 1);
    if n < 3 || need > c.n_vertices() {
        return;
    }
    let index = ColorIndex::new(c, color);
    let mut roots: Vec<Vertex> = vertices_of(index.support).collect();
    roots.sort_by_key(|&v| (index.by_vertex[v as usize].len(), v));
    let mut allowed = index.support;
    for root in roots {
        if (allowed.count_ones() as usize) < need {
            break;
        }
        let hitting = index.transversal(allowed);
        if 2 * (hitting.count_ones() as usize) < n {
            break;
        }
        for &e1 in &index.by_vertex[root as usize] {
            if e1 & !allowed != 0 {
                continue;
            }
            for f in vertices_of(e1) {
                for l in vertices_of(e1 & !(bit(f) | (bit(f) - 1))) {
                    let mut search = CycleSearch {
                        index: &index,
                        k,
                        n,
                        allowed,
                        hitting,
                        first: f,
                        embedding: Vec::with_capacity(need),
                        on_found: &mut on_found,
                    };
                    search.embedding.push(f);
                    search.embedding.extend(vertices_of(e1 & !bit(f) & !bit(l)));
                    search.embedding.push(l);
                    if search.extend(l, e1, 1).is_break() {
                        return;
                    }
                }
            }
        }
        allowed &= !bit(root);
    }
}

/// Some monochromatic loose cycle of length `n`, or `None` when none exists.
pub fn find_monochromatic_loose_cycle(c: &Coloring, color: Color, n: usize) -> Option<LooseCycle> {
    let mut found = None;
    visit_cycles(c, color, n, |emb| {
        found = Some(emb.to_vec());
        ControlFlow::Break(())
    });
    let cycle = LooseCycle::from_embedding(c.k(), found?).expect("search emits valid embeddings");
    let cycle = cycle.canonical();
    assert!(
        is_monochromatic_cycle(c, color, &cycle),
        "cycle search returned an invalid witness"
    );
    Some(cycle)
}

/// Up to `cap` distinct monochromatic loose cycles of length `n`, in
/// canonical form.
pub fn enumerate_monochromatic_cycles(
    c: &Coloring,
    color: Color,
    n: usize,
    cap: usize,
) -> Vec<LooseCycle> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if cap == 0 {
        return out;
    }
    visit_cycles(c, color, n, |emb| {
        let cycle = LooseCycle::from_embedding(c.k(), emb.to_vec())
            .expect("search emits valid embeddings")
            .canonical();
        if seen.insert(cycle.embedding().to_vec()) {
            out.push(cycle);
        }
        if out.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

#[allow(clippy::too_many_arguments)]
fn path_dfs(
    index: &ColorIndex,
    k: usize,
    n: usize,
    start: Vertex,
    cur: Vertex,
    used: u64,
    done: usize,
    embedding: &mut Vec<Vertex>,
) -> bool {
    if done == n {
        return cur > start || n == 0;
    }
    let remaining = n - done;
    if ((index.support & !used).count_ones() as usize) < remaining * (k - 1) {
        return false;
    }
    for &em in &index.by_vertex[cur as usize] {
        if em & used != bit(cur) {
            continue;
        }
        let others = em & !bit(cur);
        for next in vertices_of(others) {
            let len = embedding.len();
            embedding.extend(vertices_of(others & !bit(next)));
            embedding.push(next);
            if path_dfs(index, k, n, start, next, used | em, done + 1, embedding) {
                return true;
            }
            embedding.truncate(len);
        }
    }
    false
}

/// Some monochromatic loose path with `n` edges, or `None` when none exists.
pub fn find_monochromatic_loose_path(c: &Coloring, color: Color, n: usize) -> Option<LoosePath> {
    let k = c.k();
    if n == 0 || n * (k - 1) + 1 > c.n_vertices() {
        return None;
    }
    let index = ColorIndex::new(c, color);
    for start in vertices_of(index.support) {
        let mut embedding = vec![start];
        if path_dfs(&index, k, n, start, start, bit(start), 0, &mut embedding) {
            let path =
                LoosePath::from_embedding(k, embedding).expect("search emits valid embeddings");
            let path = validate_loose_path(path.edges(), k).expect("valid path");
            assert!(
                is_monochromatic_path(c, color, &path),
                "path search returned an invalid witness"
            );
            return Some(path);
        }
    }
    None
}

/// Structure and color check for a cycle against a coloring.
pub fn is_monochromatic_cycle(c: &Coloring, color: Color, cycle: &LooseCycle) -> bool {
    cycle.k() == c.k()
        && validate_loose_cycle(cycle.edges(), c.k()).is_some()
        && cycle
            .edges()
            .iter()
            .all(|e| c.color_of(e).ok() == Some(color))
}

/// Structure and color check for a path against a coloring.
pub fn is_monochromatic_path(c: &Coloring, color: Color, path: &LoosePath) -> bool {
    path.k() == c.k()
        && validate_loose_path(path.edges(), c.k()).is_some()
        && path
            .edges()
            .iter()
            .all(|e| c.color_of(e).ok() == Some(color))
}

/// A replacement of `r` consecutive path edges by `r + 1` edges through
/// `k - 1` reservoir vertices, keeping the path's end vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    /// 1-based index of the first replaced edge.
    pub index: usize,
    pub r: usize,
    pub reservoir_used: Vec<Vertex>,
    pub new_edges: Vec<Edge>,
    pub path: LoosePath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalityReport {
    pub is_maximal: bool,
    pub counterexample: Option<Extension>,
}

fn check_inputs(c: &Coloring, color: Color, p: &LoosePath, w: &[Vertex]) -> Result<()> {
    if p.k() != c.k() {
        return Err(Error::WrongArity {
            expected: c.k(),
            found: p.k(),
        });
    }
    for (i, e) in p.edges().iter().enumerate() {
        if c.color_of(e)? != color {
            return Err(Error::NotMonochromatic(i + 1));
        }
    }
    for &v in w {
        if v as usize >= c.n_vertices() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n_vertices: c.n_vertices(),
            });
        }
        if p.contains_vertex(v) {
            return Err(Error::ReservoirOverlap(v));
        }
    }
    Ok(())
}

fn subsets(
    items: &[Vertex],
    size: usize,
    out: &mut Vec<Vec<Vertex>>,
    acc: &mut Vec<Vertex>,
    from: usize,
) {
    if acc.len() == size {
        out.push(acc.clone());
        return;
    }
    for i in from..items.len() {
        if items.len() - i < size - acc.len() {
            break;
        }
        acc.push(items[i]);
        subsets(items, size, out, acc, i + 1);
        acc.pop();
    }
}

/// All `size`-subsets of `items` in lexicographic order of positions.
pub(crate) fn combinations(items: &[Vertex], size: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    subsets(items, size, &mut out, &mut Vec::with_capacity(size), 0);
    out
}

/// Loose path of `edges_left` colored edges from `a` to `b` whose other
/// vertices are exactly `rest`. Returns the embedding after `a`.
fn reroute(
    c: &Coloring,
    color: Color,
    a: Vertex,
    b: Vertex,
    rest: u64,
    edges_left: usize,
) -> Option<Vec<Vertex>> {
    let k = c.k();
    if edges_left == 1 {
        let em = bit(a) | bit(b) | rest;
        if rest.count_ones() as usize == k - 2 && c.has_color_mask(em, color) {
            let mut emb: Vec<Vertex> = vertices_of(rest).collect();
            emb.push(b);
            return Some(emb);
        }
        return None;
    }
    let pool: Vec<Vertex> = vertices_of(rest).collect();
    for interior in combinations(&pool, k - 2) {
        let imask = interior.iter().fold(0, |m, &v| m | bit(v));
        for next in vertices_of(rest & !imask) {
            let em = bit(a) | imask | bit(next);
            if !c.has_color_mask(em, color) {
                continue;
            }
            if let Some(tail) = reroute(
                c,
                color,
                next,
                b,
                rest & !imask & !bit(next),
                edges_left - 1,
            ) {
                let mut emb = interior.clone();
                emb.push(next);
                emb.extend(tail);
                return Some(emb);
            }
        }
    }
    None
}

/// Decides whether `p` admits an extension with `r <= r_max` replaced edges
/// using reservoir vertices from `w`. The enumeration is complete for the
/// bounded `r`; the first counterexample in (index, r, reservoir subset)
/// order is reported.
pub fn check_maximal(
    c: &Coloring,
    color: Color,
    p: &LoosePath,
    w: &[Vertex],
    r_max: usize,
) -> Result<MaximalityReport> {
    check_inputs(c, color, p, w)?;
    let k = c.k();
    let step = k - 1;
    let n = p.len();
    let mut reservoir = w.to_vec();
    reservoir.sort_unstable();
    reservoir.dedup();
    let picks = combinations(&reservoir, step);
    let emb = p.embedding();
    for i in 1..=n {
        for r in 1..=r_max.min(n - i + 1) {
            let lo = (i - 1) * step;
            let hi = (i - 1 + r) * step;
            let (a, b) = (emb[lo], emb[hi]);
            let seg_inner = emb[lo + 1..hi].iter().fold(0, |m, &v| m | bit(v));
            for pick in &picks {
                let rest = pick.iter().fold(seg_inner, |m, &v| m | bit(v));
                if let Some(middle) = reroute(c, color, a, b, rest, r + 1) {
                    let mut new_emb = emb[..=lo].to_vec();
                    new_emb.extend(&middle);
                    new_emb.extend(&emb[hi + 1..]);
                    let path =
                        LoosePath::from_embedding(k, new_emb).expect("reroute keeps a loose path");
                    let new_edges = path.edges()[i - 1..i + r].to_vec();
                    debug_assert!(is_monochromatic_path(c, color, &path));
                    return Ok(MaximalityReport {
                        is_maximal: false,
                        counterexample: Some(Extension {
                            index: i,
                            r,
                            reservoir_used: pick.clone(),
                            new_edges,
                            path,
                        }),
                    });
                }
            }
        }
    }
    Ok(MaximalityReport {
        is_maximal: true,
        counterexample: None,
    })
}

/// Applies extensions with `r <= r_max` until none is left. Returns the
/// extended path and the unused part of the reservoir.
pub fn extend_to_maximal(
    c: &Coloring,
    color: Color,
    p: &LoosePath,
    w: &[Vertex],
    r_max: usize,
) -> Result<(LoosePath, Vec<Vertex>)> {
    check_inputs(c, color, p, w)?;
    let mut path = p.clone();
    let mut reservoir: Vec<Vertex> = w.to_vec();
    reservoir.sort_unstable();
    reservoir.dedup();
    loop {
        let report = check_maximal(c, color, &path, &reservoir, r_max)?;
        match report.counterexample {
            None => return Ok((path, reservoir)),
            Some(ext) => {
                reservoir.retain(|v| !ext.reservoir_used.contains(v));
                path = ext.path;
            }
        }
    }
}
