//! Randomized checks of the inequalities and identities satisfied by
//! disk-polygons, an extremal local search, and the perimeter probe.

mod checks;
mod generator;
mod probe;
mod search;
mod suite;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::geometry::Point;

pub use checks::{
    check_identities, check_involution, check_lemma1, check_lemma1_for, check_lemma2,
    check_lemma2_for, check_theorem1, check_theorem1_for, check_theorem2, check_theorem2_for,
    is_congruent_to_regular_triangle, CONGRUENCE_TOLERANCE, IDENTITY_DIRECTIONS,
};
pub use generator::{
    derive_seed, random_center_set, rescale_to_parameter, GeneratorConfig, SpreadMode,
};
pub use probe::{
    perimeter_probe, probe_candidates, reference_perimeter, Counterexample, ProbeReport,
    ReferenceKind, PROBE_STATUS,
};
pub use search::{
    local_search, local_search_min_area, Objective, RestartResult, SearchConfig, SearchOutcome,
    TracePoint,
};
pub use suite::{run_involution_suite, run_suite, SuiteConfig, SuiteReport, SummaryEntry};

/// How a check's slack is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// `|lhs - rhs| <= eps`.
    Identity,
    /// `lhs - rhs >= -eps`.
    Inequality,
    /// `lhs - rhs > 0`, no slack.
    StrictInequality,
}

/// Outcome of one check on one instance. `slack = lhs - rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub kind: CheckKind,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub pass: bool,
    pub instance_digest: String,
    /// Set by the area check when the slack is within tolerance of zero:
    /// whether the instance is congruent to the regular disk-triangle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
}

impl CheckResult {
    pub fn new(name: &str, kind: CheckKind, lhs: f64, rhs: f64, eps: f64, digest: &str) -> Self {
        let slack = lhs - rhs;
        let pass = match kind {
            CheckKind::Identity => slack.abs() <= eps,
            CheckKind::Inequality => slack >= -eps,
            CheckKind::StrictInequality => slack > 0.0,
        };
        Self {
            name: name.to_owned(),
            kind,
            lhs,
            rhs,
            slack,
            pass,
            instance_digest: digest.to_owned(),
            equality: None,
        }
    }
}

/// Short stable identifier of a center set: the first 16 hex digits of the
/// SHA-256 of its JSON encoding.
pub fn instance_digest(centers: &[Point]) -> String {
    let json = serde_json::to_vec(centers).expect("points always serialize");
    let hash = Sha256::digest(&json);
    hex::encode(&hash[..8])
}
