//! Line-oriented audit trail of the constructive steps.

use std::fmt;

use crate::coloring::{Color, Coloring};
use crate::hypergraph::{Edge, LooseCycle, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// An oracle query and its answer.
    Query {
        color: Color,
        length: usize,
        found: bool,
    },
    /// Which branch of the case analysis is taken.
    Case(String),
    /// Pivot edge `e_i` of the red cycle and the reservoir vertex `z`.
    Pivot {
        index: usize,
        edge: Edge,
        z: Vertex,
    },
    /// A named vertex set such as `W0` or `T`.
    Vertices {
        name: String,
        vertices: Vec<Vertex>,
    },
    /// An edge the argument relies on, with the color it must have.
    Edge {
        role: String,
        color: Color,
        edge: Edge,
    },
    Note(String),
    /// The construction did not complete; the result comes from the oracle.
    Fallback(String),
    Found {
        color: Color,
        cycle: LooseCycle,
    },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Query {
                color,
                length,
                found,
            } => {
                write!(
                    f,
                    "query {color} C{length} {}",
                    if *found { "found" } else { "none" }
                )
            }
            TraceEvent::Case(label) => write!(f, "case {label}"),
            TraceEvent::Pivot { index, edge, z } => write!(f, "pivot e{index} {edge} z={z}"),
            TraceEvent::Vertices { name, vertices } => {
                write!(f, "set {name}")?;
                for v in vertices {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            TraceEvent::Edge { role, color, edge } => write!(f, "{color} {role} {edge}"),
            TraceEvent::Note(text) => write!(f, "note {text}"),
            TraceEvent::Fallback(reason) => write!(f, "fallback {reason}"),
            TraceEvent::Found { color, cycle } => {
                write!(f, "found {color}")?;
                for v in cycle.embedding() {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    events: Vec<TraceEvent>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, event: TraceEvent) {
        self.events.push(event);
    }

    pub fn case(&mut self, label: impl Into<String>) {
        self.push(TraceEvent::Case(label.into()));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.push(TraceEvent::Note(text.into()));
    }

    pub fn edge(&mut self, role: impl Into<String>, color: Color, edge: &Edge) {
        self.push(TraceEvent::Edge {
            role: role.into(),
            color,
            edge: edge.clone(),
        });
    }

    pub fn vertices(&mut self, name: impl Into<String>, vertices: &[Vertex]) {
        self.push(TraceEvent::Vertices {
            name: name.into(),
            vertices: vertices.to_vec(),
        });
    }

    pub fn extend(&mut self, other: Trace) {
        self.events.extend(other.events);
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn used_fallback(&self) -> bool {
        self.events
            .iter()
            .any(|e| matches!(e, TraceEvent::Fallback(_)))
    }

    /// The same trace for the color-swapped coloring.
    pub fn swapped(&self) -> Trace {
        let events = self
            .events
            .iter()
            .cloned()
            .map(|e| match e {
                TraceEvent::Query {
                    color,
                    length,
                    found,
                } => TraceEvent::Query {
                    color: color.opposite(),
                    length,
                    found,
                },
                TraceEvent::Edge { role, color, edge } => TraceEvent::Edge {
                    role,
                    color: color.opposite(),
                    edge,
                },
                TraceEvent::Found { color, cycle } => TraceEvent::Found {
                    color: color.opposite(),
                    cycle,
                },
                other => other,
            })
            .collect();
        Trace { events }
    }

    /// Checks that every recorded edge has its recorded color in `c`.
    pub fn check_colors(&self, c: &Coloring) -> Result<(), String> {
        for e in &self.events {
            if let TraceEvent::Edge { role, color, edge } = e {
                if c.color_of(edge).ok() != Some(*color) {
                    return Err(format!(
                        "recorded {color} edge {role} {edge} has the other color"
                    ));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}
