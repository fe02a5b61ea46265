//! Total red/blue colorings of the complete `k`-uniform hypergraph on
//! `N <= 64` vertices, stored as a bitmap over colex edge ranks.
//!
//! Text format (`HRC 1`): a header line, a `k <k> n <N>` line, `red`, one
//! red edge per line (ascending vertex ids), then `end`. Unlisted edges are
//! blue. `#` starts a comment.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Vertex};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "red" => Ok(Color::Red),
            "blue" => Ok(Color::Blue),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown color `{other}`"),
            }),
        }
    }
}

fn binomial_table() -> BinomTable {
    let mut t = [[0u64; MAX_VERTICES + 1]; MAX_VERTICES + 1];
    for n in 0..=MAX_VERTICES {
        t[n][0] = 1;
        for r in 1..=n {
            t[n][r] = t[n - 1][r - 1].saturating_add(if r < n { t[n - 1][r] } else { 0 });
        }
    }
    t
}

/// `C(n, r)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..r.min(n - r) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(u64::MAX as u128) as u64
}

#[derive(Clone, PartialEq, Eq)]
pub struct Coloring {
    k: usize,
    n_vertices: usize,
    red: Vec<u64>,
}

type BinomTable = [[u64; MAX_VERTICES + 1]; MAX_VERTICES + 1];

// binom()[v][j] = C(v, j), used for colex ranks
fn binom() -> &'static BinomTable {
    static TABLE: OnceLock<BinomTable> = OnceLock::new();
    TABLE.get_or_init(binomial_table)
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Coloring")
            .field("k", &self.k)
            .field("n_vertices", &self.n_vertices)
            .field("red", &self.count_red())
            .finish()
    }
}

impl Coloring {
    /// The coloring in which every edge has `color`.
    pub fn uniform(k: usize, n_vertices: usize, color: Color) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidUniformity(k));
        }
        if n_vertices > MAX_VERTICES {
            return Err(Error::TooManyVertices(n_vertices));
        }
        let total = binomial(n_vertices, k) as usize;
        let mut red = vec![0u64; total.div_ceil(64)];
        if color == Color::Red {
            for i in 0..total {
                red[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(Coloring { k, n_vertices, red })
    }

    pub fn all_blue(k: usize, n_vertices: usize) -> Result<Self> {
        Self::uniform(k, n_vertices, Color::Blue)
    }

    pub fn all_red(k: usize, n_vertices: usize) -> Result<Self> {
        Self::uniform(k, n_vertices, Color::Red)
    }

    /// All edges blue except those listed.
    pub fn from_red_edges<'a>(
        k: usize,
        n_vertices: usize,
        red: impl IntoIterator<Item = &'a Edge>,
    ) -> Result<Self> {
        let mut c = Self::all_blue(k, n_vertices)?;
        for e in red {
            c.set(e, Color::Red)?;
        }
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn total_edges(&self) -> u64 {
        binomial(self.n_vertices, self.k)
    }

    fn check_edge(&self, e: &Edge) -> Result<()> {
        if e.len() != self.k {
            return Err(Error::WrongArity {
                expected: self.k,
                found: e.len(),
            });
        }
        if let Some(&v) = e
            .vertices()
            .iter()
            .find(|&&v| v as usize >= self.n_vertices)
        {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n_vertices: self.n_vertices,
            });
        }
        Ok(())
    }

    #[inline]
    fn rank_mask(&self, mut mask: u64) -> usize {
        let table = binom();
        let mut rank = 0u64;
        let mut j = 1;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            rank += table[v][j];
            j += 1;
            mask &= mask - 1;
        }
        rank as usize
    }

    /// Color of the edge with vertex bitmask `mask`. The mask must hold
    /// exactly `k` in-range vertices.
    #[inline]
    pub fn color_of_mask(&self, mask: u64) -> Color {
        debug_assert_eq!(mask.count_ones() as usize, self.k);
        debug_assert!(self.n_vertices == 64 || mask >> self.n_vertices == 0);
        let r = self.rank_mask(mask);
        if self.red[r / 64] >> (r % 64) & 1 == 1 {
            Color::Red
        } else {
            Color::Blue
        }
    }

    #[inline]
    pub fn has_color_mask(&self, mask: u64, color: Color) -> bool {
        self.color_of_mask(mask) == color
    }

    pub fn color_of(&self, e: &Edge) -> Result<Color> {
        self.check_edge(e)?;
        Ok(self.color_of_mask(e.mask()))
    }

    pub fn set(&mut self, e: &Edge, color: Color) -> Result<()> {
        self.check_edge(e)?;
        self.set_mask(e.mask(), color);
        Ok(())
    }

    pub(crate) fn set_mask(&mut self, mask: u64, color: Color) {
        let r = self.rank_mask(mask);
        match color {
            Color::Red => self.red[r / 64] |= 1 << (r % 64),
            Color::Blue => self.red[r / 64] &= !(1 << (r % 64)),
        }
    }

    pub(crate) fn flip_mask(&mut self, mask: u64) {
        let r = self.rank_mask(mask);
        self.red[r / 64] ^= 1 << (r % 64);
    }

    /// Exchanges the two color classes.
    pub fn swap_colors(&self) -> Coloring {
        let mut out = self.clone();
        let total = self.total_edges() as usize;
        for (i, w) in out.red.iter_mut().enumerate() {
            *w = !*w;
            let lo = i * 64;
            if lo + 64 > total {
                let keep = total - lo;
                *w &= if keep == 0 {
                    0
                } else {
                    u64::MAX >> (64 - keep)
                };
            }
        }
        out
    }

    pub fn count_red(&self) -> u64 {
        self.red.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn count(&self, color: Color) -> u64 {
        match color {
            Color::Red => self.count_red(),
            Color::Blue => self.total_edges() - self.count_red(),
        }
    }

    /// Red edges in lexicographic order.
    pub fn red_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges_of(Color::Red)
    }

    pub fn edges_of(&self, color: Color) -> impl Iterator<Item = Edge> + '_ {
        all_edges(self.k, self.n_vertices).filter(move |e| self.color_of_mask(e.mask()) == color)
    }

    /// Copy of the coloring restricted to `0..n_vertices` with one extra
    /// vertex, whose incident edges get colors from `color_of`.
    pub fn with_added_vertex(&self, mut color_of: impl FnMut(&Edge) -> Color) -> Result<Coloring> {
        let mut out = Coloring::all_blue(self.k, self.n_vertices + 1)?;
        let new = self.n_vertices as Vertex;
        for e in all_edges(self.k, self.n_vertices + 1) {
            let color = if e.contains(new) {
                color_of(&e)
            } else {
                self.color_of_mask(e.mask())
            };
            if color == Color::Red {
                out.set_mask(e.mask(), Color::Red);
            }
        }
        Ok(out)
    }

    /// Canonical `HRC 1` text.
    pub fn serialize(&self) -> String {
        let mut s = format!("HRC 1\nk {} n {}\nred\n", self.k, self.n_vertices);
        for e in self.red_edges() {
            let line: Vec<String> = e.vertices().iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s.push_str("end\n");
        s
    }

    pub fn parse(text: &str) -> Result<Coloring> {
        let err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (ln, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
        if header.split_whitespace().collect::<Vec<_>>() != ["HRC", "1"] {
            return Err(err(ln, format!("expected `HRC 1`, found `{header}`")));
        }
        let (ln, dims) = lines
            .next()
            .ok_or_else(|| err(ln + 1, "missing `k <k> n <N>`".into()))?;
        let toks: Vec<&str> = dims.split_whitespace().collect();
        let (k, n) = match toks.as_slice() {
            ["k", k, "n", n] => (
                k.parse::<usize>()
                    .map_err(|e| err(ln, format!("bad k: {e}")))?,
                n.parse::<usize>()
                    .map_err(|e| err(ln, format!("bad n: {e}")))?,
            ),
            _ => return Err(err(ln, format!("expected `k <k> n <N>`, found `{dims}`"))),
        };
        let mut coloring = Coloring::all_blue(k, n).map_err(|e| err(ln, e.to_string()))?;
        let (ln, red) = lines
            .next()
            .ok_or_else(|| err(ln + 1, "missing `red`".into()))?;
        if red != "red" {
            return Err(err(ln, format!("expected `red`, found `{red}`")));
        }
        let mut last = ln;
        for (ln, line) in lines.by_ref() {
            last = ln;
            if line == "end" {
                if let Some((ln, extra)) = lines.next() {
                    return Err(err(ln, format!("content after `end`: `{extra}`")));
                }
                return Ok(coloring);
            }
            let vs = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<Vertex>()
                        .map_err(|e| err(ln, format!("bad vertex `{t}`: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if vs.len() != k {
                return Err(err(
                    ln,
                    format!("edge has {} vertices, expected {k}", vs.len()),
                ));
            }
            if vs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(err(ln, "edge vertices must be strictly ascending".into()));
            }
            if let Some(&v) = vs.iter().find(|&&v| v as usize >= n) {
                return Err(err(ln, format!("vertex {v} out of range for {n} vertices")));
            }
            let e = Edge::from_sorted(vs);
            if coloring.color_of_mask(e.mask()) == Color::Red {
                return Err(err(ln, format!("duplicate edge {e}")));
            }
            coloring.set_mask(e.mask(), Color::Red);
        }
        Err(err(last + 1, "missing `end`".into()))
    }
}

/// Each `k`-subset of `0..n_vertices` is red independently with probability
/// `p_red`.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`. Edges are
/// visited in lexicographic order; each consumes one `next_u64` draw `x`
/// and is red iff `(x >> 11) * 2^-53 < p_red`.
pub fn random_coloring(k: usize, n_vertices: usize, p_red: f64, seed: u64) -> Result<Coloring> {
    if !(0.0..=1.0).contains(&p_red) {
        return Err(Error::InvalidProbability(p_red));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Coloring::all_blue(k, n_vertices)?;
    for e in all_edges(k, n_vertices) {
        let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        if x < p_red {
            c.set_mask(e.mask(), Color::Red);
        }
    }
    Ok(c)
}

/// Iterator over all `k`-subsets of `0..n` in lexicographic order.
pub fn all_edges(k: usize, n: usize) -> AllEdges {
    AllEdges {
        n,
        current: if k <= n {
            Some((0..k as Vertex).collect())
        } else {
            None
        },
    }
}

pub struct AllEdges {
    n: usize,
    current: Option<Vec<Vertex>>,
}

impl Iterator for AllEdges {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        let cur = self.current.take()?;
        let out = Edge::from_sorted(cur.clone());
        let k = cur.len();
        let mut next = cur;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if (next[i] as usize) < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
