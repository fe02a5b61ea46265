//! Finds a red `C^4_n` or a blue `C^4_m` in a coloring on at least the
//! upper Ramsey bound of vertices, following the induction on `n`.

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::hypergraph::LooseCycle;
use crate::oracle::find_monochromatic_loose_cycle;

use super::bound::{ramsey_bound, BoundKind};
use super::step::{step_lemma, RamseyParams};
use super::trace::{Trace, TraceEvent};

#[derive(Debug, Clone)]
pub struct ExtractOutcome {
    /// Red for a `C_n`, blue for a `C_m`.
    pub color: Color,
    pub cycle: LooseCycle,
    pub trace: Trace,
    /// False if any step fell back to the oracle.
    pub constructive: bool,
}

fn query(c: &Coloring, color: Color, length: usize, trace: &mut Trace) -> Option<LooseCycle> {
    let found = find_monochromatic_loose_cycle(c, color, length);
    trace.push(TraceEvent::Query {
        color,
        length,
        found: found.is_some(),
    });
    found
}

fn done(color: Color, cycle: LooseCycle, mut trace: Trace) -> ExtractOutcome {
    trace.push(TraceEvent::Found {
        color,
        cycle: cycle.clone(),
    });
    let constructive = !trace.used_fallback();
    ExtractOutcome {
        color,
        cycle,
        trace,
        constructive,
    }
}

/// Returns a red loose cycle of length `n` or a blue one of length `m`.
///
/// Needs `k = 4`, `n >= m >= 3` and at least as many vertices as the upper
/// end of the known bound for the pair. A coloring without either cycle on
/// that many vertices would contradict the bound and is reported as a
/// defect.
pub fn extract(c: &Coloring, n: usize, m: usize) -> Result<ExtractOutcome> {
    if c.k() != 4 {
        return Err(Error::InvalidUniformity(c.k()));
    }
    if m < 3 || n < m {
        return Err(Error::Precondition(format!(
            "need n >= m >= 3, got n={n}, m={m}"
        )));
    }
    let bound = ramsey_bound(BoundKind::CycleCycle, n, m)?;
    if c.n_vertices() < bound.value.upper() {
        return Err(Error::Precondition(format!(
            "{} vertices, the bound for ({n}, {m}) needs {}",
            c.n_vertices(),
            bound.value.upper()
        )));
    }
    descend(c, n, m)
}

fn descend(c: &Coloring, n: usize, m: usize) -> Result<ExtractOutcome> {
    let mut trace = Trace::new();
    trace.case(format!("extract n={n} m={m}"));
    if let Some(red) = query(c, Color::Red, n, &mut trace) {
        return Ok(done(Color::Red, red, trace));
    }
    if m == 3 || n <= 4 {
        trace.note("small case, answered by search");
        return match query(c, Color::Blue, m, &mut trace) {
            Some(blue) => Ok(done(Color::Blue, blue, trace)),
            None => Err(Error::Defect(format!(
                "no red C{n} and no blue C{m} on {} vertices",
                c.n_vertices()
            ))),
        };
    }
    let params = RamseyParams::new(n, m)?;
    if let Some(red) = query(c, Color::Red, n - 1, &mut trace) {
        let out = step_lemma(c, &red, &params)?;
        trace.extend(out.trace);
        return Ok(done(Color::Blue, out.cycle, trace));
    }
    if n > m {
        let inner = descend(c, n - 1, m)?;
        if inner.color != Color::Blue {
            return Err(Error::Defect(format!(
                "search reported no red C{} but recursion found one",
                n - 1
            )));
        }
        trace.extend(inner.trace);
        return Ok(done(Color::Blue, inner.cycle, trace));
    }
    // Diagonal without a red C_{n-1}: a blue C_n settles it, otherwise the
    // color-swapped step produces a red C_n, which the first query excluded.
    if let Some(blue) = query(c, Color::Blue, n, &mut trace) {
        return Ok(done(Color::Blue, blue, trace));
    }
    let inner = descend(c, n - 1, n - 1)?;
    trace.extend(inner.trace);
    if inner.color != Color::Blue {
        return Err(Error::Defect(format!(
            "search reported no red C{} but recursion found one",
            n - 1
        )));
    }
    let swapped = c.swap_colors();
    let out = step_lemma(&swapped, &inner.cycle, &params)?;
    trace.extend(out.trace.swapped());
    Err(Error::Defect(format!(
        "the swapped step produced a red C{n} the search had missed: {:?}",
        out.cycle.embedding()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::random_coloring;
    use crate::hypergraph::loose_cycle_template;
    use crate::oracle::is_monochromatic_cycle;

    #[test]
    fn planted_red_path_goes_through_the_step() {
        let cyc = loose_cycle_template(4, 4).unwrap();
        let c = Coloring::from_red_edges(4, 16, cyc.edges()).unwrap();
        let out = extract(&c, 5, 4).unwrap();
        assert_eq!(out.color, Color::Blue);
        assert_eq!(out.cycle.len(), 4);
        assert!(out.constructive);
        assert!(out
            .trace
            .events()
            .iter()
            .any(|e| matches!(e, TraceEvent::Pivot { .. } | TraceEvent::Case(_))));
    }

    #[test]
    fn random_colorings_give_a_valid_cycle() {
        for seed in 0..5 {
            let c = random_coloring(4, 16, 0.5, seed).unwrap();
            let out = extract(&c, 5, 4).unwrap();
            let len = if out.color == Color::Red { 5 } else { 4 };
            assert_eq!(out.cycle.len(), len);
            assert!(is_monochromatic_cycle(&c, out.color, &out.cycle));
        }
    }

    #[test]
    fn rejects_small_colorings() {
        let c = Coloring::all_blue(4, 15).unwrap();
        assert!(matches!(extract(&c, 5, 4), Err(Error::Precondition(_))));
        let c = Coloring::all_blue(3, 16).unwrap();
        assert!(matches!(
            extract(&c, 5, 4),
            Err(Error::InvalidUniformity(3))
        ));
    }
}
