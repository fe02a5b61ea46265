//! Lower-bound witness colorings and a seeded local search for new ones.
//!
//! The standard witness on `N = (k-1)n + floor((m-1)/2) - 1` vertices splits
//! the vertex set into `A = 0..(k-1)n-1` and the remaining block `B`. Edges
//! inside `A` are red, every edge meeting `B` is blue. `A` is one vertex too
//! small for a red `C^k_n`; a blue `C^k_m` would need every edge to meet
//! `B`, and each `B`-vertex lies on at most two cycle edges.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{all_edges, Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::LooseCycle;
use crate::oracle::{enumerate_monochromatic_cycles, find_monochromatic_loose_cycle};

/// Parameters of a witness: forbids a red `C^k_n` and a blue `C^k_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessSpec {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub n_vertices: usize,
}

impl WitnessSpec {
    /// Standard construction size `(k-1)n + floor((m-1)/2) - 1`.
    pub fn standard(k: usize, n: usize, m: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidUniformity(k));
        }
        if m < 3 || n < m {
            return Err(Error::Precondition(format!(
                "need n >= m >= 3, got n={n}, m={m}"
            )));
        }
        Ok(WitnessSpec {
            k,
            n,
            m,
            n_vertices: (k - 1) * n + (m - 1) / 2 - 1,
        })
    }

    /// Size of the red block `A`.
    pub fn red_block(&self) -> usize {
        (self.k - 1) * self.n - 1
    }
}

/// The standard witness coloring for `(k, n, m)`.
pub fn extremal_coloring(k: usize, n: usize, m: usize) -> Result<Coloring> {
    let spec = WitnessSpec::standard(k, n, m)?;
    block_coloring(k, spec.n_vertices, spec.red_block())
}

/// Edges inside `0..red_block` red, all others blue.
fn block_coloring(k: usize, n_vertices: usize, red_block: usize) -> Result<Coloring> {
    let mut c = Coloring::all_blue(k, n_vertices)?;
    let block = red_block.min(n_vertices);
    for e in all_edges(k, block) {
        c.set(&e, Color::Red)?;
    }
    Ok(c)
}

/// The forbidden structure a coloring contains, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Red(LooseCycle),
    Blue(LooseCycle),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (color, cycle) = match self {
            Violation::Red(c) => ("red", c),
            Violation::Blue(c) => ("blue", c),
        };
        write!(f, "{color} cycle")?;
        for v in cycle.embedding() {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// First forbidden cycle found: a red `C_n`, else a blue `C_m`.
pub fn find_violation(c: &Coloring, n: usize, m: usize) -> Option<Violation> {
    if let Some(cyc) = find_monochromatic_loose_cycle(c, Color::Red, n) {
        return Some(Violation::Red(cyc));
    }
    find_monochromatic_loose_cycle(c, Color::Blue, m).map(Violation::Blue)
}

/// True iff `c` has neither a red `C_n` nor a blue `C_m`.
pub fn verify_witness(c: &Coloring, n: usize, m: usize) -> bool {
    find_violation(c, n, m).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of evaluated flips.
    pub budget: usize,
    /// Forbidden cycles counted per color and probe.
    pub probe_cap: usize,
    /// Non-improving flips in a row before a seeded restart.
    pub restart_after: usize,
}

impl SearchConfig {
    pub fn with_budget(budget: usize) -> Self {
        SearchConfig {
            budget,
            probe_cap: 16,
            restart_after: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptLine {
    pub iteration: usize,
    pub objective: usize,
    pub action: String,
}

impl fmt::Display for TranscriptLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.iteration, self.objective, self.action)
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub witness: Option<Coloring>,
    pub transcript: Vec<TranscriptLine>,
}

impl SearchOutcome {
    pub fn transcript_text(&self) -> String {
        self.transcript.iter().map(|l| format!("{l}\n")).collect()
    }
}

fn objective(c: &Coloring, n: usize, m: usize, cap: usize) -> (usize, Vec<LooseCycle>) {
    let mut found = enumerate_monochromatic_cycles(c, Color::Red, n, cap);
    found.extend(enumerate_monochromatic_cycles(c, Color::Blue, m, cap));
    (found.len(), found)
}

/// Seeded single-flip local search for a coloring of `K^k_N` with no red
/// `C_n` and no blue `C_m`.
///
/// Starts from the block coloring closest to the standard witness, then
/// flips single edges taken from the forbidden cycles found by capped
/// probes, keeping strictly improving flips only. After `restart_after`
/// rejected flips in a row it restarts from the block coloring with a
/// seeded fraction of random flips. A returned coloring has passed
/// [`verify_witness`]; `None` proves nothing.
pub fn search_witness(
    k: usize,
    n: usize,
    m: usize,
    n_vertices: usize,
    seed: u64,
    config: SearchConfig,
) -> Result<SearchOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let red_block = ((k - 1) * n - 1).min(n_vertices);
    let start = block_coloring(k, n_vertices, red_block)?;
    let mut transcript = Vec::new();
    let record = |t: &mut Vec<TranscriptLine>, iteration, objective, action: String| {
        t.push(TranscriptLine {
            iteration,
            objective,
            action,
        })
    };
    record(
        &mut transcript,
        0,
        0,
        format!("start block={red_block} cap={}", config.probe_cap),
    );

    let mut current = start.clone();
    let (mut score, mut cycles) = objective(&current, n, m, config.probe_cap);
    let mut stale = 0;
    for iteration in 1..=config.budget {
        if score == 0 {
            if verify_witness(&current, n, m) {
                record(&mut transcript, iteration, 0, "verified".into());
                return Ok(SearchOutcome {
                    witness: Some(current),
                    transcript,
                });
            }
            // capped probes missed nothing, so this cannot happen; keep going
            record(&mut transcript, iteration, 0, "verify-failed".into());
        }
        if stale >= config.restart_after || cycles.is_empty() {
            current = start.clone();
            let flips = rng.gen_range(1..=n_vertices);
            for _ in 0..flips {
                let e = random_edge(&mut rng, k, n_vertices);
                current.flip_mask(e);
            }
            (score, cycles) = objective(&current, n, m, config.probe_cap);
            stale = 0;
            record(
                &mut transcript,
                iteration,
                score,
                format!("restart flips={flips}"),
            );
            continue;
        }
        let cycle = &cycles[rng.gen_range(0..cycles.len())];
        let edge = &cycle.edges()[rng.gen_range(0..cycle.len())];
        current.flip_mask(edge.mask());
        let (new_score, new_cycles) = objective(&current, n, m, config.probe_cap);
        if new_score < score {
            record(
                &mut transcript,
                iteration,
                new_score,
                format!("flip {edge} accept"),
            );
            score = new_score;
            cycles = new_cycles;
            stale = 0;
        } else {
            current.flip_mask(edge.mask());
            record(
                &mut transcript,
                iteration,
                score,
                format!("flip {edge} reject"),
            );
            stale += 1;
        }
    }
    if score == 0 && verify_witness(&current, n, m) {
        record(&mut transcript, config.budget + 1, 0, "verified".into());
        return Ok(SearchOutcome {
            witness: Some(current),
            transcript,
        });
    }
    record(
        &mut transcript,
        config.budget + 1,
        score,
        "exhausted".into(),
    );
    Ok(SearchOutcome {
        witness: None,
        transcript,
    })
}

fn random_edge(rng: &mut ChaCha8Rng, k: usize, n_vertices: usize) -> u64 {
    let mut mask = 0u64;
    while (mask.count_ones() as usize) < k {
        mask |= 1 << rng.gen_range(0..n_vertices);
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::binomial;

    #[test]
    fn standard_sizes() {
        assert_eq!(WitnessSpec::standard(4, 4, 3).unwrap().n_vertices, 12);
        assert_eq!(WitnessSpec::standard(4, 5, 4).unwrap().n_vertices, 15);
        assert_eq!(WitnessSpec::standard(4, 3, 3).unwrap().n_vertices, 9);
        assert!(WitnessSpec::standard(4, 3, 4).is_err());
        assert!(WitnessSpec::standard(2, 3, 3).is_err());
    }

    #[test]
    fn red_count_matches_block() {
        for (n, m) in [(3, 3), (4, 3), (5, 4), (6, 6)] {
            let c = extremal_coloring(4, n, m).unwrap();
            assert_eq!(c.count_red(), binomial(3 * n - 1, 4));
        }
    }

    #[test]
    fn small_witnesses_verify() {
        assert!(verify_witness(&extremal_coloring(4, 4, 3).unwrap(), 4, 3));
        assert!(verify_witness(&extremal_coloring(4, 5, 4).unwrap(), 5, 4));
        assert!(!verify_witness(&Coloring::all_red(4, 15).unwrap(), 5, 4));
    }

    #[test]
    fn search_returns_feasible_start() {
        let out = search_witness(4, 5, 4, 15, 0, SearchConfig::with_budget(5)).unwrap();
        let w = out.witness.expect("block start is already a witness");
        assert!(verify_witness(&w, 5, 4));
    }

    #[test]
    fn search_is_deterministic() {
        let a = search_witness(4, 3, 3, 10, 3, SearchConfig::with_budget(12)).unwrap();
        let b = search_witness(4, 3, 3, 10, 3, SearchConfig::with_budget(12)).unwrap();
        assert_eq!(a.transcript, b.transcript);
        assert!(a.witness.is_none());
    }
}
