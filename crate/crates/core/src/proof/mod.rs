//! Constructive machinery for 4-uniform loose cycles: configurations on
//! maximal red paths, the blue path builder, the red `C_{n-1}` to blue `C_m`
//! step, the extraction driver and the table of known Ramsey values.

pub mod blue_paths;
pub mod bound;
pub mod config;
pub mod extract;
pub mod step;
pub mod trace;

pub use blue_paths::{
    build_blue_paths, validate_blue_paths, BluePathsResult, BlueStep, Join, PathPair,
};
pub use bound::{ramsey_bound, Bound, BoundKind, BoundValue};
pub use config::{find_good_configuration, validate_configuration, ConfigurationResult, R_MAX};
pub use extract::{extract, ExtractOutcome};
pub use step::{step_lemma, RamseyParams, StepOutcome};
pub use trace::{Trace, TraceEvent};
