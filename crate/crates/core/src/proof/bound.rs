//! Known values of `R(C^4_n, C^4_m)`, `R(P^4_n, C^4_m)` and `R(P^4_n, P^4_m)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    CycleCycle,
    PathCycle,
    PathPath,
}

impl BoundKind {
    pub fn code(self) -> &'static str {
        match self {
            BoundKind::CycleCycle => "cc",
            BoundKind::PathCycle => "pc",
            BoundKind::PathPath => "pp",
        }
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cc" | "cycle-cycle" => Ok(BoundKind::CycleCycle),
            "pc" | "path-cycle" => Ok(BoundKind::PathCycle),
            "pp" | "path-path" => Ok(BoundKind::PathPath),
            _ => Err(Error::UnknownBound(format!("kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundValue {
    Exact(usize),
    /// The value is one of `lo` and `lo + 1`.
    Interval {
        lo: usize,
        hi: usize,
    },
}

impl BoundValue {
    pub fn lower(self) -> usize {
        match self {
            BoundValue::Exact(v) => v,
            BoundValue::Interval { lo, .. } => lo,
        }
    }

    pub fn upper(self) -> usize {
        match self {
            BoundValue::Exact(v) => v,
            BoundValue::Interval { hi, .. } => hi,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(v) => write!(f, "{v}"),
            BoundValue::Interval { lo, hi } => write!(f, "[{lo},{hi}]"),
        }
    }
}

/// A Ramsey value together with the label of the result that fixes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub value: BoundValue,
    pub source: &'static str,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value, self.source)
    }
}

fn exact(value: usize, source: &'static str) -> Result<Bound> {
    Ok(Bound {
        value: BoundValue::Exact(value),
        source,
    })
}

/// Ramsey value for 4-uniform loose cycles and paths.
///
/// Cycle-cycle values are symmetric and accept either order of `n, m`.
/// Path values need `n >= m`, the first argument being the path. Parameter
/// regions no known result covers yield [`Error::UnknownBound`].
pub fn ramsey_bound(kind: BoundKind, n: usize, m: usize) -> Result<Bound> {
    let unknown = || Err(Error::UnknownBound(format!("{} n={n} m={m}", kind.code())));
    match kind {
        BoundKind::CycleCycle => {
            let (n, m) = if n >= m { (n, m) } else { (m, n) };
            if m < 3 {
                return unknown();
            }
            match (n, m) {
                (3, 3) => exact(10, "Thm2.1a"),
                (4, 4) => exact(13, "Thm2.1b"),
                (_, 3) => exact(3 * n + 1, "Thm2.2"),
                _ if n > m => exact(3 * n + (m - 1) / 2, "Thm3.2"),
                _ if n % 2 == 1 => exact(3 * n + (n - 1) / 2, "Cor3.4"),
                _ => {
                    let lo = 3 * n + (n - 1) / 2;
                    Ok(Bound {
                        value: BoundValue::Interval { lo, hi: lo + 1 },
                        source: "Cor3.4",
                    })
                }
            }
        }
        BoundKind::PathCycle => {
            if m < 3 || n < m {
                return unknown();
            }
            match (n, m) {
                (3, 3) => exact(11, "Thm2.1a"),
                (4, 4) => exact(14, "Thm2.1b"),
                _ if n > m || n % 2 == 1 => exact(3 * n + m.div_ceil(2), "Thm3.5"),
                _ => unknown(),
            }
        }
        BoundKind::PathPath => {
            if m < 3 || n < m {
                return unknown();
            }
            match (n, m) {
                (3, 3) => exact(11, "Thm2.1a"),
                (4, 4) => exact(14, "Thm2.1b"),
                _ if n >= m + 2 || n % 2 == 1 => exact(3 * n + m.div_ceil(2), "Thm3.6"),
                // R(C4,C4) = 13 and the cycle-path connection give R(P4,P3) = 14
                (4, 3) => exact(14, "Thm1.2"),
                _ => unknown(),
            }
        }
    }
}
