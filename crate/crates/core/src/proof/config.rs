//! Good two-edge blue configurations hanging off consecutive edges of a
//! maximal red path.
//!
//! A configuration is a blue loose path `f g` with `f = {x, a1, a2, a3}` and
//! `g = {a3, a4, a5, y}`, where `x, y` come from the reservoir `W` and
//! `S = {a1, .., a5}` lies in a small window of the red path. It is good when
//! `S` misses a vertex of `e_{i+1} \ e_i`. Besides one configuration, the
//! search reports the sets `W1`, `W2` of reservoir vertices that can replace
//! `x` and `y` while keeping both edges blue.

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::{attachment_set, Edge, LoosePath, Vertex};
use crate::oracle::{check_maximal, combinations, is_monochromatic_path};

/// Maximality depth used whenever a path is required to be maximal.
pub const R_MAX: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationResult {
    /// 1-based index of the first of the two path edges.
    pub index: usize,
    /// Carried vertex, when the window is shifted by one vertex.
    pub u: Option<Vertex>,
    pub f: Edge,
    pub g: Edge,
    pub x: Vertex,
    pub y: Vertex,
    /// `a1..a5` in configuration order; `a3` is the shared vertex.
    pub s: [Vertex; 5],
    pub good: bool,
    pub w1: Vec<Vertex>,
    pub w2: Vec<Vertex>,
}

impl ConfigurationResult {
    pub fn connector(&self) -> Vertex {
        self.s[2]
    }

    /// Edges obtained by substituting the end vertices.
    pub fn with_ends(&self, x: Vertex, y: Vertex) -> (Edge, Edge) {
        let [a1, a2, a3, a4, a5] = self.s;
        (
            Edge::new([x, a1, a2, a3]).expect("distinct by construction"),
            Edge::new([a3, a4, a5, y]).expect("distinct by construction"),
        )
    }

    /// Embedding of the configuration read from `x` to `y`.
    pub fn embedding(&self, x: Vertex, y: Vertex) -> Vec<Vertex> {
        let [a1, a2, a3, a4, a5] = self.s;
        vec![x, a1, a2, a3, a4, a5, y]
    }

    pub fn s_mask(&self) -> u64 {
        self.s.iter().fold(0, |m, &v| m | (1u64 << v))
    }
}

fn mask_of(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |m, &v| m | (1u64 << v))
}

fn check_path_inputs(c: &Coloring, p: &LoosePath, w: &[Vertex]) -> Result<()> {
    if c.k() != 4 || p.k() != 4 {
        return Err(Error::InvalidUniformity(p.k().max(c.k())));
    }
    if w.len() < 4 {
        return Err(Error::Precondition(format!(
            "reservoir has {} vertices, need at least 4",
            w.len()
        )));
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
    if let Some(i) = p
        .edges()
        .iter()
        .position(|e| c.color_of(e).ok() != Some(Color::Red))
    {
        return Err(Error::NotMonochromatic(i + 1));
    }
    Ok(())
}

/// Vertices a configuration on `e_i e_{i+1}` may use.
fn region(p: &LoosePath, i: usize, u: Option<Vertex>) -> Vec<Vertex> {
    let ei = &p.edges()[i - 1];
    let next = &p.edges()[i];
    let first = p.first_of(i - 1);
    let mut out: Vec<Vertex> = match u {
        None => ei.vertices().to_vec(),
        Some(u) => ei
            .vertices()
            .iter()
            .copied()
            .filter(|&v| v != first)
            .chain([u])
            .collect(),
    };
    out.extend(next.vertices());
    out.sort_unstable();
    out.dedup();
    out
}

fn reservoir_hits(c: &Coloring, triple: u64, w: &[Vertex]) -> Vec<Vertex> {
    w.iter()
        .copied()
        .filter(|&v| c.has_color_mask(triple | (1u64 << v), Color::Blue))
        .collect()
}

/// Searches a good configuration on the edges `e_i e_{i+1}` of `p` (1-based
/// `i`), with ends in `w`.
///
/// Without `u` the window is `e_i ∪ e_{i+1}`. With `u` from the attachment
/// set `A_i`, the first vertex of `e_i` is traded for `u`. The search runs
/// over all skeletons `(a3, {a1,a2}, {a4,a5})` in lexicographic order and
/// keeps the first one maximizing `(|W1|, |W2|)` among those with
/// `|W1| >= |W| - 2` and `|W2| >= |W| - 3`.
///
/// `p` is expected to be red and maximal w.r.t. `w` (replacements of up to
/// [`R_MAX`] edges). Only the cheap parts of that precondition are checked
/// up front; when no configuration exists the error carries the red
/// extension that shows `p` was not maximal, if one is found.
pub fn find_good_configuration(
    c: &Coloring,
    p: &LoosePath,
    w: &[Vertex],
    i: usize,
    u: Option<Vertex>,
) -> Result<ConfigurationResult> {
    check_path_inputs(c, p, w)?;
    if i == 0 || i + 1 > p.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: p.len().saturating_sub(1),
        });
    }
    if let Some(u) = u {
        if !attachment_set(p, i)?.contains(&u) {
            return Err(Error::Precondition(format!("vertex {u} is not in A_{i}")));
        }
    }
    let mut w: Vec<Vertex> = w.to_vec();
    w.sort_unstable();
    w.dedup();
    let need1 = w.len() - 2;
    let need2 = w.len() - 3;
    let region = region(p, i, u);
    let fresh = mask_of(p.edges()[i].vertices()) & !mask_of(p.edges()[i - 1].vertices());

    let mut best: Option<(usize, usize, ConfigurationResult)> = None;
    for &a3 in &region {
        let rest: Vec<Vertex> = region.iter().copied().filter(|&v| v != a3).collect();
        for pair1 in combinations(&rest, 2) {
            let t1 = mask_of(&pair1) | (1u64 << a3);
            let w1 = reservoir_hits(c, t1, &w);
            if w1.len() < need1 || best.as_ref().is_some_and(|b| w1.len() < b.0) {
                continue;
            }
            let rest2: Vec<Vertex> = rest
                .iter()
                .copied()
                .filter(|v| !pair1.contains(v))
                .collect();
            for pair2 in combinations(&rest2, 2) {
                let s = t1 | mask_of(&pair2);
                if fresh & !s == 0 {
                    continue;
                }
                let t2 = mask_of(&pair2) | (1u64 << a3);
                let w2 = reservoir_hits(c, t2, &w);
                if w2.len() < need2 {
                    continue;
                }
                if best
                    .as_ref()
                    .is_some_and(|b| (w1.len(), w2.len()) <= (b.0, b.1))
                {
                    continue;
                }
                let (x, y) = pick_ends(&w1, &w2).expect("|W1| >= 2 and |W2| >= 1");
                let s = [pair1[0], pair1[1], a3, pair2[0], pair2[1]];
                let f = Edge::new([x, s[0], s[1], s[2]])?;
                let g = Edge::new([s[2], s[3], s[4], y])?;
                let result = ConfigurationResult {
                    index: i,
                    u,
                    f,
                    g,
                    x,
                    y,
                    s,
                    good: true,
                    w1: w1.clone(),
                    w2,
                };
                best = Some((w1.len(), result.w2.len(), result));
            }
        }
    }
    match best {
        Some((_, _, result)) => Ok(result),
        None => Err(Error::ConfigurationNotFound {
            index: i,
            next: i + 1,
            diagnostic: maximality_diagnostic(c, p, &w),
        }),
    }
}

fn pick_ends(w1: &[Vertex], w2: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let &y = w2.first()?;
    let &x = w1.iter().find(|&&x| x != y)?;
    Some((x, y))
}

fn maximality_diagnostic(c: &Coloring, p: &LoosePath, w: &[Vertex]) -> String {
    match check_maximal(c, Color::Red, p, w, R_MAX) {
        Ok(report) => match report.counterexample {
            Some(ext) => {
                let edges: Vec<String> = ext.new_edges.iter().map(|e| e.to_string()).collect();
                format!(
                    "path is not maximal: edges {}..{} can be replaced by red {}",
                    ext.index,
                    ext.index + ext.r - 1,
                    edges.join(" ")
                )
            }
            None => format!("path is maximal for replacements of up to {R_MAX} edges"),
        },
        Err(e) => e.to_string(),
    }
}

/// Checks every stated property of `r` against `c`, `p` and `w`, including
/// the full `W1 x W2` substitution check.
pub fn validate_configuration(
    c: &Coloring,
    p: &LoosePath,
    w: &[Vertex],
    r: &ConfigurationResult,
) -> std::result::Result<(), String> {
    let i = r.index;
    if i == 0 || i + 1 > p.len() {
        return Err(format!("index {i} out of range"));
    }
    if !is_monochromatic_path(c, Color::Red, p) {
        return Err("path is not red".into());
    }
    let s_mask = r.s_mask();
    if s_mask.count_ones() != 5 {
        return Err("S does not have 5 distinct vertices".into());
    }
    let allowed = mask_of(&region(p, i, r.u));
    if s_mask & !allowed != 0 {
        return Err("S leaves the permitted window".into());
    }
    if i >= 2 {
        let prev = &p.edges()[i - 2];
        let prev_tail = mask_of(prev.vertices()) & !(1u64 << p.first_of(i - 2));
        let wide =
            prev_tail | mask_of(p.edges()[i - 1].vertices()) | mask_of(p.edges()[i].vertices());
        if s_mask & !wide != 0
            || (s_mask & prev_tail & !mask_of(p.edges()[i - 1].vertices())).count_ones() > 1
        {
            return Err("S breaks the three-edge window rule".into());
        }
    }
    let fresh = mask_of(p.edges()[i].vertices()) & !mask_of(p.edges()[i - 1].vertices());
    let good = fresh & !s_mask != 0;
    if good != r.good || !good {
        return Err("configuration is not good".into());
    }
    let wm = mask_of(w);
    if !w.iter().all(|v| !p.contains_vertex(*v)) {
        return Err("reservoir meets the path".into());
    }
    if mask_of(&r.w1) & !wm != 0 || mask_of(&r.w2) & !wm != 0 {
        return Err("W1 or W2 leaves the reservoir".into());
    }
    if r.w1.len() + 2 < w.len() || r.w2.len() + 3 < w.len() {
        return Err(format!(
            "|W1|={} |W2|={} too small for |W|={}",
            r.w1.len(),
            r.w2.len(),
            w.len()
        ));
    }
    if r.x == r.y || !r.w1.contains(&r.x) || !r.w2.contains(&r.y) {
        return Err("end vertices are not drawn from W1 and W2".into());
    }
    if (r.f.clone(), r.g.clone()) != r.with_ends(r.x, r.y) {
        return Err("f and g do not match S and the end vertices".into());
    }
    for &x in &r.w1 {
        for &y in &r.w2 {
            if x == y {
                continue;
            }
            let (f, g) = r.with_ends(x, y);
            if c.color_of(&f).ok() != Some(Color::Blue) || c.color_of(&g).ok() != Some(Color::Blue)
            {
                return Err(format!("substituting ends {x},{y} loses a blue edge"));
            }
            if f.intersection(&g) != vec![r.connector()] {
                return Err(format!(
                    "substituting ends {x},{y} breaks the loose structure"
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::loose_path_template;

    fn template_only(n_vertices: usize, edges: usize) -> (Coloring, LoosePath) {
        let p = loose_path_template(4, edges).unwrap();
        (
            Coloring::from_red_edges(4, n_vertices, p.edges()).unwrap(),
            p,
        )
    }

    #[test]
    fn template_path_has_configuration() {
        let (c, p) = template_only(13, 2);
        let w = [7, 8, 9, 10];
        let r = find_good_configuration(&c, &p, &w, 1, None).unwrap();
        assert!(r.good && r.w1.len() >= 2 && !r.w2.is_empty());
        validate_configuration(&c, &p, &w, &r).unwrap();
    }

    #[test]
    fn shifted_window() {
        let (c, p) = template_only(16, 3);
        let w = [10, 11, 12, 13];
        for u in attachment_set(&p, 2).unwrap() {
            let r = find_good_configuration(&c, &p, &w, 2, Some(u)).unwrap();
            validate_configuration(&c, &p, &w, &r).unwrap();
        }
        assert!(find_good_configuration(&c, &p, &w, 2, Some(0)).is_err());
    }

    #[test]
    fn all_red_is_not_found() {
        let c = Coloring::all_red(4, 13).unwrap();
        let p = loose_path_template(4, 2).unwrap();
        match find_good_configuration(&c, &p, &[7, 8, 9, 10], 1, None) {
            Err(Error::ConfigurationNotFound { diagnostic, .. }) => {
                assert!(diagnostic.contains("not maximal"), "{diagnostic}")
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn small_reservoir() {
        let (c, p) = template_only(13, 2);
        assert!(matches!(
            find_good_configuration(&c, &p, &[7, 8, 9], 1, None),
            Err(Error::Precondition(_))
        ));
    }
}
