//! Disjoint blue paths grown along a maximal red path.
//!
//! Step `l` places a good configuration on `e_{2l-1} e_{2l}` (the first one
//! plain, later ones shifted by the vertex `u_{l-1}` skipped in the previous
//! step) and joins it to the blue paths built so far through a shared
//! reservoir end vertex. The loop stops once the reservoir `W_l` (unused
//! vertices plus current path ends) has at most 4 vertices or at most one
//! red edge is left. Join choices are explored exhaustively; the result
//! maximizes the number of blue edges, then the length of the longer path.

use std::fmt;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::{LoosePath, Vertex};
use crate::oracle::{check_maximal, is_monochromatic_path};

use super::config::{find_good_configuration, ConfigurationResult, R_MAX};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Join {
    /// The first configuration.
    Start,
    /// Attached to one end of an existing path.
    Extend,
    /// Started a second path.
    NewPath,
    /// Joined the two existing paths into one.
    Merge,
}

impl fmt::Display for Join {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Join::Start => "start",
            Join::Extend => "extend",
            Join::NewPath => "new-path",
            Join::Merge => "merge",
        })
    }
}

/// One step of the builder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlueStep {
    pub step: usize,
    /// Reservoir `W_l` the configuration was drawn from.
    pub reservoir: Vec<Vertex>,
    pub config: ConfigurationResult,
    /// End vertices actually used, read along the joined path.
    pub x: Vertex,
    pub y: Vertex,
    pub join: Join,
    /// `u_l`: a vertex of `e_{2l} \ e_{2l-1}` the configuration avoids.
    pub skipped: Vertex,
}

/// The blue paths after some step; `q` is the longer one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPair {
    pub q: LoosePath,
    pub q_prime: Option<LoosePath>,
}

impl PathPair {
    fn from_paths(paths: &[Vec<Vertex>]) -> Self {
        let mut built: Vec<LoosePath> = paths
            .iter()
            .map(|e| {
                LoosePath::from_embedding(4, e.clone()).expect("joined configurations stay loose")
            })
            .collect();
        if built.len() == 2 && built[1].len() > built[0].len() {
            built.swap(0, 1);
        }
        let q_prime = (built.len() == 2).then(|| built.pop().expect("two paths"));
        PathPair {
            q: built.pop().expect("at least one path"),
            q_prime,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.q.len() + self.q_prime.as_ref().map_or(0, |p| p.len())
    }

    pub fn vertex_mask(&self) -> u64 {
        self.q.vertex_mask() | self.q_prime.as_ref().map_or(0, |p| p.vertex_mask())
    }

    pub fn paths(&self) -> impl Iterator<Item = &LoosePath> {
        std::iter::once(&self.q).chain(self.q_prime.as_ref())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BluePathsResult {
    pub q: LoosePath,
    pub q_prime: Option<LoosePath>,
    /// Reservoir vertices on the blue paths.
    pub w_prime: Vec<Vertex>,
    /// Trailing red edges left untouched.
    pub r: usize,
    /// `|W \ W'|`.
    pub x: usize,
    pub trace: Vec<BlueStep>,
    /// Path state after every step; the last entry is `(q, q_prime)`.
    pub history: Vec<PathPair>,
}

impl BluePathsResult {
    /// `l' = ||Q ∪ Q'||`.
    pub fn edge_count(&self) -> usize {
        self.q.len() + self.q_prime.as_ref().map_or(0, |p| p.len())
    }

    /// The paths with the configuration of the last step removed.
    pub fn before_last(&self) -> Option<&PathPair> {
        self.history.len().checked_sub(2).map(|i| &self.history[i])
    }
}

struct Builder<'a> {
    c: &'a Coloring,
    p: &'a LoosePath,
    w: Vec<Vertex>,
    best: Option<(usize, usize, BluePathsResult)>,
    first_error: Option<Error>,
}

#[derive(Clone)]
struct State {
    /// Embeddings in creation order.
    paths: Vec<Vec<Vertex>>,
    used: u64,
    carried: Option<Vertex>,
    trace: Vec<BlueStep>,
    history: Vec<PathPair>,
}

fn bit(v: Vertex) -> u64 {
    1u64 << v
}

impl State {
    fn ends(&self) -> Vec<(usize, Vertex)> {
        self.paths
            .iter()
            .enumerate()
            .flat_map(|(i, e)| [(i, e[0]), (i, *e.last().expect("nonempty"))])
            .collect()
    }

    fn end_owner(&self, v: Vertex) -> Option<usize> {
        self.ends()
            .into_iter()
            .find(|&(_, e)| e == v)
            .map(|(i, _)| i)
    }

    fn reservoir(&self, w: &[Vertex]) -> Vec<Vertex> {
        let ends: u64 = self.ends().iter().fold(0, |m, &(_, v)| m | bit(v));
        w.iter()
            .copied()
            .filter(|&v| self.used & bit(v) == 0 || ends & bit(v) != 0)
            .collect()
    }
}

/// Path embedding oriented so that it ends at `v`.
fn ending_at(emb: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut e = emb.to_vec();
    if e[0] == v {
        e.reverse();
    }
    e
}

impl Builder<'_> {
    fn options(&self, state: &State, cfg: &ConfigurationResult) -> Vec<(Join, Vertex, Vertex)> {
        let mut out = Vec::new();
        let fresh = |v: Vertex| state.used & bit(v) == 0;
        if state.paths.is_empty() {
            out.push((Join::Start, cfg.x, cfg.y));
            return out;
        }
        for (_, end) in state.ends() {
            if cfg.w1.contains(&end) {
                if let Some(&y) = cfg.w2.iter().find(|&&y| y != end && fresh(y)) {
                    out.push((Join::Extend, end, y));
                }
            }
            if cfg.w2.contains(&end) {
                if let Some(&x) = cfg.w1.iter().find(|&&x| x != end && fresh(x)) {
                    out.push((Join::Extend, x, end));
                }
            }
        }
        if state.paths.len() == 2 {
            for &x in &cfg.w1 {
                for &y in &cfg.w2 {
                    match (state.end_owner(x), state.end_owner(y)) {
                        (Some(a), Some(b)) if a != b => out.push((Join::Merge, x, y)),
                        _ => {}
                    }
                }
            }
        } else if let Some((x, y)) = cfg
            .w1
            .iter()
            .filter(|&&x| fresh(x))
            .flat_map(|&x| {
                cfg.w2
                    .iter()
                    .filter(move |&&y| y != x && fresh(y))
                    .map(move |&y| (x, y))
            })
            .next()
        {
            out.push((Join::NewPath, x, y));
        }
        out
    }

    fn apply(
        &self,
        state: &State,
        cfg: &ConfigurationResult,
        join: Join,
        x: Vertex,
        y: Vertex,
    ) -> State {
        let mut next = state.clone();
        let piece = cfg.embedding(x, y);
        next.used |= bit(x) | bit(y);
        match join {
            Join::Start | Join::NewPath => next.paths.push(piece),
            Join::Extend => {
                let (anchor, tail) = if state.end_owner(x).is_some() {
                    (x, piece)
                } else {
                    (y, piece.into_iter().rev().collect())
                };
                let owner = state.end_owner(anchor).expect("anchor is an end");
                let mut emb = ending_at(&state.paths[owner], anchor);
                emb.extend(&tail[1..]);
                next.paths[owner] = emb;
            }
            Join::Merge => {
                let a = state.end_owner(x).expect("merge end");
                let b = state.end_owner(y).expect("merge end");
                let mut emb = ending_at(&state.paths[a], x);
                emb.extend(&piece[1..]);
                let mut other = ending_at(&state.paths[b], y);
                other.reverse();
                emb.extend(&other[1..]);
                next.paths = vec![emb];
            }
        }
        next
    }

    fn run(&mut self, state: State, step: usize) {
        let n = self.p.len();
        let index = 2 * step - 1;
        let reservoir = state.reservoir(&self.w);
        let cfg = match find_good_configuration(self.c, self.p, &reservoir, index, state.carried) {
            Ok(cfg) => cfg,
            Err(e) => {
                self.first_error.get_or_insert(e);
                return;
            }
        };
        let fresh_edge = &self.p.edges()[index];
        let skipped = fresh_edge
            .vertices()
            .iter()
            .copied()
            .filter(|v| !self.p.edges()[index - 1].contains(*v))
            .find(|&v| cfg.s_mask() & bit(v) == 0)
            .expect("good configurations skip a new vertex");
        for (join, x, y) in self.options(&state, &cfg) {
            let mut next = self.apply(&state, &cfg, join, x, y);
            next.carried = Some(skipped);
            next.trace.push(BlueStep {
                step,
                reservoir: reservoir.clone(),
                config: cfg.clone(),
                x,
                y,
                join,
                skipped,
            });
            next.history.push(PathPair::from_paths(&next.paths));
            let remaining = n - 2 * step;
            if next.reservoir(&self.w).len() <= 4 || remaining <= 1 {
                self.finish(next, remaining);
            } else {
                self.run(next, step + 1);
            }
        }
    }

    fn finish(&mut self, state: State, r: usize) {
        let pair = state.history.last().expect("at least one step").clone();
        let key = (pair.edge_count(), pair.q.len());
        if self.best.as_ref().is_some_and(|b| key <= (b.0, b.1)) {
            return;
        }
        let w_prime: Vec<Vertex> = self
            .w
            .iter()
            .copied()
            .filter(|&v| state.used & bit(v) != 0)
            .collect();
        let x = self.w.len() - w_prime.len();
        let result = BluePathsResult {
            q: pair.q,
            q_prime: pair.q_prime,
            w_prime,
            r,
            x,
            trace: state.trace,
            history: state.history,
        };
        self.best = Some((key.0, key.1, result));
    }
}

/// Grows disjoint blue paths between the reservoir `w` and a prefix of the
/// red path `p`.
///
/// Requires `||p|| >= 2`, `|w| >= 4`, `p` red and maximal w.r.t. `w` for
/// replacements of up to [`R_MAX`] edges; each is checked.
pub fn build_blue_paths(c: &Coloring, p: &LoosePath, w: &[Vertex]) -> Result<BluePathsResult> {
    if p.len() < 2 {
        return Err(Error::Precondition(format!(
            "path has {} edges, need at least 2",
            p.len()
        )));
    }
    if w.len() < 4 {
        return Err(Error::Precondition(format!(
            "reservoir has {} vertices, need at least 4",
            w.len()
        )));
    }
    let report = check_maximal(c, Color::Red, p, w, R_MAX)?;
    if let Some(ext) = report.counterexample {
        return Err(Error::Precondition(format!(
            "path is not maximal: edges {}..{} admit a red replacement",
            ext.index,
            ext.index + ext.r - 1
        )));
    }
    let mut w: Vec<Vertex> = w.to_vec();
    w.sort_unstable();
    w.dedup();
    let mut builder = Builder {
        c,
        p,
        w,
        best: None,
        first_error: None,
    };
    let start = State {
        paths: Vec::new(),
        used: 0,
        carried: None,
        trace: Vec::new(),
        history: Vec::new(),
    };
    builder.run(start, 1);
    match builder.best {
        Some((_, _, result)) => Ok(result),
        None => Err(builder
            .first_error
            .unwrap_or_else(|| Error::Defect("no legal join".into()))),
    }
}

/// Checks the size equation, the placement properties and the `x`/`r`
/// dichotomies of a builder result.
pub fn validate_blue_paths(
    c: &Coloring,
    p: &LoosePath,
    w: &[Vertex],
    res: &BluePathsResult,
) -> std::result::Result<(), String> {
    let n = p.len();
    let paths: Vec<&LoosePath> = std::iter::once(&res.q)
        .chain(res.q_prime.as_ref())
        .collect();
    for q in &paths {
        if !is_monochromatic_path(c, Color::Blue, q) {
            return Err("a path is not blue".into());
        }
    }
    if let Some(q2) = &res.q_prime {
        if q2.vertex_mask() & res.q.vertex_mask() != 0 {
            return Err("Q and Q' intersect".into());
        }
        if q2.len() > res.q.len() {
            return Err("Q' is longer than Q".into());
        }
    }
    if res.q.len() < 2 {
        return Err("Q has fewer than 2 edges".into());
    }
    let ell = res.edge_count();
    if res.r > n || ell != n - res.r {
        return Err(format!(
            "||Q ∪ Q'|| = {ell} but n - r = {}",
            n as isize - res.r as isize
        ));
    }
    let wp = res.w_prime.len();
    let expected = if res.q_prime.is_some() {
        2 * (wp as isize - 2)
    } else {
        2 * (wp as isize - 1)
    };
    if ell as isize != expected {
        return Err(format!("size equation fails: {ell} != {expected}"));
    }
    let w_mask = w.iter().fold(0u64, |m, &v| m | bit(v));
    let wp_mask = res.w_prime.iter().fold(0u64, |m, &v| m | bit(v));
    if wp_mask & !w_mask != 0 {
        return Err("W' leaves W".into());
    }
    let prefix = if ell == 0 {
        0
    } else {
        p.sub_path(0, n - res.r).vertex_mask()
    };
    for q in &paths {
        if q.vertex_mask() & !(prefix | wp_mask) != 0 {
            return Err("a blue path leaves the red prefix and W'".into());
        }
        for (j, e) in q.edges().iter().enumerate() {
            let hit = e.mask() & w_mask;
            if hit.count_ones() != 1 {
                return Err(format!("edge {e} meets W in {} vertices", hit.count_ones()));
            }
            let v = hit.trailing_zeros();
            if q.first_of(j) != v && q.last_of(j) != v {
                return Err(format!("edge {e} meets W away from its end vertices"));
            }
        }
    }
    let used = res.q.vertex_mask() | res.q_prime.as_ref().map_or(0, |q| q.vertex_mask());
    if wp_mask != used & w_mask {
        return Err("W' is not the set of reservoir vertices on the paths".into());
    }
    let last = n - res.r;
    if last < 2 {
        return Err("fewer than two red edges covered".into());
    }
    let tail = p.edges()[last - 1].mask() & !p.edges()[last - 2].mask();
    if tail & !used == 0 {
        return Err(format!(
            "every vertex of e_{last} \\ e_{} is covered",
            last - 1
        ));
    }
    let x = res.x;
    if x != w.len() - wp {
        return Err("x != |W \\ W'|".into());
    }
    let ok = if res.q_prime.is_none() {
        (1..=2).contains(&x) || (x >= 3 && res.r <= 1)
    } else {
        x == 0 || res.r <= 1
    };
    if !ok {
        return Err(format!("dichotomy fails: x={x}, r={}", res.r));
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
    fn two_edges_single_step() {
        let (c, p) = template_only(11, 2);
        let w = [7, 8, 9, 10];
        let res = build_blue_paths(&c, &p, &w).unwrap();
        validate_blue_paths(&c, &p, &w, &res).unwrap();
        assert_eq!(res.trace.len(), 1);
        assert_eq!((res.q.len(), res.r, res.w_prime.len()), (2, 0, 2));
        assert!(res.q_prime.is_none());
    }

    #[test]
    fn four_edges() {
        let (c, p) = template_only(20, 4);
        let w = [13, 14, 15, 16, 17];
        let res = build_blue_paths(&c, &p, &w).unwrap();
        validate_blue_paths(&c, &p, &w, &res).unwrap();
        assert!(res.trace.len() <= 2);
        assert_eq!(res.edge_count(), 4 - res.r);
    }

    #[test]
    fn rejects_bad_input() {
        let (c, p) = template_only(11, 2);
        assert!(matches!(
            build_blue_paths(&c, &p, &[7, 8, 9]),
            Err(Error::Precondition(_))
        ));
        let all = Coloring::all_red(4, 11).unwrap();
        assert!(matches!(
            build_blue_paths(&all, &p, &[7, 8, 9, 10]),
            Err(Error::Precondition(_))
        ));
    }
}
