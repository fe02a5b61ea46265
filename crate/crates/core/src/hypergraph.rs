//! Edges, loose paths and loose cycles of a complete `k`-uniform hypergraph.
//!
//! Vertices are 0-based. A loose path of length `n` lives on the embedding
//! `v_0 .. v_{n(k-1)}`; edge `i` (0-based) is the window
//! `v_{i(k-1)} ..= v_{(i+1)(k-1)}`. A loose cycle uses the same windows with
//! positions taken modulo `n(k-1)`, so its last edge wraps through `v_0`.

use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A strictly ascending set of vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<Vertex>);

impl Edge {
    /// Builds an edge from any vertex order, rejecting repeats.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(w[0]));
        }
        Ok(Edge(v))
    }

    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Edge(v)
    }

    /// Builds an edge from a bitmask over vertices `0..64`.
    pub fn from_mask(mut mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            v.push(mask.trailing_zeros());
            mask &= mask - 1;
        }
        Edge(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Bitmask of the vertex set. All vertices must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1u64 << v))
    }

    pub fn intersection(&self, other: &Edge) -> Vec<Vertex> {
        self.0
            .iter()
            .copied()
            .filter(|&v| other.contains(v))
            .collect()
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

fn check_uniformity(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidUniformity(k));
    }
    Ok(())
}

fn check_distinct(embedding: &[Vertex]) -> Result<()> {
    let mut sorted = embedding.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedVertex(w[0]));
    }
    Ok(())
}

/// A loose path together with the vertex order that realises it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoosePath {
    k: usize,
    edges: Vec<Edge>,
    embedding: Vec<Vertex>,
}

impl LoosePath {
    /// Builds the path whose edges are the consecutive windows of `embedding`.
    pub fn from_embedding(k: usize, embedding: Vec<Vertex>) -> Result<Self> {
        check_uniformity(k)?;
        let step = k - 1;
        if embedding.len() < k || !(embedding.len() - 1).is_multiple_of(step) {
            return Err(Error::InvalidStructure(format!(
                "{} vertices cannot carry a {k}-uniform loose path",
                embedding.len()
            )));
        }
        check_distinct(&embedding)?;
        let n = (embedding.len() - 1) / step;
        let edges = (0..n)
            .map(|i| {
                let mut e = embedding[i * step..=(i + 1) * step].to_vec();
                e.sort_unstable();
                Edge::from_sorted(e)
            })
            .collect();
        Ok(LoosePath {
            k,
            edges,
            embedding,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn embedding(&self) -> &[Vertex] {
        &self.embedding
    }

    /// First vertex of edge `i` (0-based).
    pub fn first_of(&self, i: usize) -> Vertex {
        self.embedding[i * (self.k - 1)]
    }

    /// Last vertex of edge `i` (0-based).
    pub fn last_of(&self, i: usize) -> Vertex {
        self.embedding[(i + 1) * (self.k - 1)]
    }

    pub fn start(&self) -> Vertex {
        self.embedding[0]
    }

    pub fn end(&self) -> Vertex {
        *self.embedding.last().expect("paths are never empty")
    }

    pub fn vertex_mask(&self) -> u64 {
        self.embedding.iter().fold(0, |m, &v| m | (1u64 << v))
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.embedding.contains(&v)
    }

    pub fn reversed(&self) -> LoosePath {
        let mut emb = self.embedding.clone();
        emb.reverse();
        LoosePath::from_embedding(self.k, emb).expect("reversal keeps validity")
    }

    /// The sub-path made of edges `from..to` (0-based, exclusive end).
    pub fn sub_path(&self, from: usize, to: usize) -> LoosePath {
        assert!(from < to && to <= self.len());
        let step = self.k - 1;
        LoosePath::from_embedding(self.k, self.embedding[from * step..=to * step].to_vec())
            .expect("sub-paths stay valid")
    }
}

/// A loose cycle together with the cyclic vertex order that realises it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LooseCycle {
    k: usize,
    edges: Vec<Edge>,
    embedding: Vec<Vertex>,
}

impl LooseCycle {
    /// Builds the cycle whose edges are the windows of `embedding` taken
    /// modulo its length.
    pub fn from_embedding(k: usize, embedding: Vec<Vertex>) -> Result<Self> {
        check_uniformity(k)?;
        let step = k - 1;
        if !embedding.len().is_multiple_of(step) || embedding.len() / step < 3 {
            return Err(Error::InvalidStructure(format!(
                "{} vertices cannot carry a {k}-uniform loose cycle of length >= 3",
                embedding.len()
            )));
        }
        check_distinct(&embedding)?;
        let n = embedding.len() / step;
        let len = embedding.len();
        let edges = (0..n)
            .map(|i| {
                let mut e: Vec<Vertex> = (0..k).map(|j| embedding[(i * step + j) % len]).collect();
                e.sort_unstable();
                Edge::from_sorted(e)
            })
            .collect();
        Ok(LooseCycle {
            k,
            edges,
            embedding,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn embedding(&self) -> &[Vertex] {
        &self.embedding
    }

    pub fn vertex_mask(&self) -> u64 {
        self.embedding.iter().fold(0, |m, &v| m | (1u64 << v))
    }

    /// Canonical representative: least embedding over all rotations and
    /// both orientations.
    pub fn canonical(&self) -> LooseCycle {
        validate_loose_cycle(&self.edges, self.k).expect("a built cycle always validates")
    }
}

/// `P^k_n` on vertices `0..=n(k-1)` in natural order.
pub fn loose_path_template(k: usize, n: usize) -> Result<LoosePath> {
    check_uniformity(k)?;
    if n == 0 {
        return Err(Error::InvalidLength {
            len: n,
            reason: "a loose path needs at least one edge",
        });
    }
    LoosePath::from_embedding(k, (0..=(n * (k - 1)) as Vertex).collect())
}

/// `C^k_n` on vertices `0..n(k-1)`; the last edge wraps through vertex 0.
pub fn loose_cycle_template(k: usize, n: usize) -> Result<LooseCycle> {
    check_uniformity(k)?;
    if n < 3 {
        return Err(Error::InvalidLength {
            len: n,
            reason: "a loose cycle needs at least three edges",
        });
    }
    LooseCycle::from_embedding(k, (0..(n * (k - 1)) as Vertex).collect())
}

fn single_shared(a: &Edge, b: &Edge) -> Option<Vertex> {
    match a.intersection(b).as_slice() {
        [v] => Some(*v),
        _ => None,
    }
}

fn push_sorted_except(out: &mut Vec<Vertex>, e: &Edge, skip: &[Vertex]) {
    out.extend(e.vertices().iter().copied().filter(|v| !skip.contains(v)));
}

/// Checks that `edges`, in the given cyclic order, form a loose cycle and
/// returns its canonical form.
pub fn validate_loose_cycle(edges: &[Edge], k: usize) -> Option<LooseCycle> {
    let n = edges.len();
    if k < 2 || n < 3 || edges.iter().any(|e| e.len() != k) {
        return None;
    }
    // connector[i] = e_{i-1} ∩ e_i
    let mut connector = Vec::with_capacity(n);
    for i in 0..n {
        connector.push(single_shared(&edges[(i + n - 1) % n], &edges[i])?);
    }
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if !adjacent && !edges[i].is_disjoint(&edges[j]) {
                return None;
            }
        }
        if connector[i] == connector[(i + 1) % n] {
            return None;
        }
    }
    let mut best: Option<Vec<Vertex>> = None;
    for reverse in [false, true] {
        for start in 0..n {
            let mut emb = Vec::with_capacity(n * (k - 1));
            for step in 0..n {
                let (idx, head, tail) = if reverse {
                    let idx = (start + n - step) % n;
                    (idx, connector[(idx + 1) % n], connector[idx])
                } else {
                    let idx = (start + step) % n;
                    (idx, connector[idx], connector[(idx + 1) % n])
                };
                emb.push(head);
                push_sorted_except(&mut emb, &edges[idx], &[head, tail]);
            }
            if best.as_ref().is_none_or(|b| emb < *b) {
                best = Some(emb);
            }
        }
    }
    let emb = best?;
    let cycle = LooseCycle::from_embedding(k, emb).ok()?;
    (cycle.embedding.len() == n * (k - 1)).then_some(cycle)
}

fn path_embedding(edges: &[Edge], connector: &[Vertex]) -> Vec<Vertex> {
    let n = edges.len();
    if n == 1 {
        return edges[0].vertices().to_vec();
    }
    let mut emb = Vec::new();
    push_sorted_except(&mut emb, &edges[0], &[connector[0]]);
    emb.push(connector[0]);
    for i in 1..n - 1 {
        push_sorted_except(&mut emb, &edges[i], &[connector[i - 1], connector[i]]);
        emb.push(connector[i]);
    }
    push_sorted_except(&mut emb, &edges[n - 1], &[connector[n - 2]]);
    emb
}

/// Checks that `edges`, in the given order, form a loose path and returns
/// the canonical (lexicographically smaller) orientation.
pub fn validate_loose_path(edges: &[Edge], k: usize) -> Option<LoosePath> {
    let n = edges.len();
    if k < 2 || n == 0 || edges.iter().any(|e| e.len() != k) {
        return None;
    }
    let mut connector = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        connector.push(single_shared(&edges[i], &edges[i + 1])?);
    }
    for i in 0..n {
        for j in i + 2..n {
            if !edges[i].is_disjoint(&edges[j]) {
                return None;
            }
        }
    }
    if connector.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let forward = path_embedding(edges, &connector);
    let rev_edges: Vec<Edge> = edges.iter().rev().cloned().collect();
    let rev_conn: Vec<Vertex> = connector.iter().rev().copied().collect();
    let backward = path_embedding(&rev_edges, &rev_conn);
    let emb = forward.min(backward);
    let path = LoosePath::from_embedding(k, emb).ok()?;
    (path.embedding.len() == n * (k - 1) + 1).then_some(path)
}

/// `A_1 = {f(e_1)}` and `A_i = e_{i-1} \ {f(e_{i-1})}` for `i > 1` (1-based).
pub fn attachment_set(path: &LoosePath, i: usize) -> Result<Vec<Vertex>> {
    let n = path.len();
    if i == 0 || i > n + 1 {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n + 1,
        });
    }
    if i == 1 {
        return Ok(vec![path.start()]);
    }
    let first = path.first_of(i - 2);
    Ok(path.edges()[i - 2]
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != first)
        .collect())
}
