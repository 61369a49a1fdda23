//! Empirical probe of the perimeter analogues of the area bounds. Both
//! perimeter statements are open problems: a clean report is evidence, not
//! proof, and a flagged instance is a candidate to be examined.

use serde::{Deserialize, Serialize};

use crate::closed_forms::{delta_perimeter, delta_ring_measures};
use crate::error::{Error, Result};
use crate::geometry::{regular_triangle_centers, DiskPolygon, Point, Tolerance};
use crate::measures::perimeter;

use super::instance_digest;
use super::search::{local_search, Objective, SearchConfig};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Label attached to every probe report.
pub const PROBE_STATUS: &str = "open problem; empirical evidence only";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceKind {
    /// Perimeter of the regular disk-triangle, for `d` in `[1, sqrt(3))`.
    RegularTriangle,
    /// Perimeter `pi (2 - d)` of the Reuleaux outer parallel domain, for
    /// `d` in `(0, 1)`.
    ReuleauxParallel,
    /// A reference supplied by the caller.
    Custom,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub centers: Vec<Point>,
    pub perimeter: f64,
    pub reference: f64,
    pub digest: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub d: f64,
    pub reference_kind: ReferenceKind,
    pub reference: f64,
    pub min_perimeter_found: f64,
    pub ratio: f64,
    pub instances_examined: usize,
    pub counterexamples: Vec<Counterexample>,
    pub status: String,
}

/// Reference perimeter for parameter `d`.
pub fn reference_perimeter(d: f64) -> Result<(ReferenceKind, f64)> {
    if (1.0..SQRT_3).contains(&d) {
        Ok((ReferenceKind::RegularTriangle, delta_perimeter(d)?))
    } else if d > 0.0 && d < 1.0 {
        Ok((ReferenceKind::ReuleauxParallel, delta_ring_measures(d)?.1))
    } else {
        Err(Error::DOutOfRange {
            d,
            range: "(0, sqrt(3))",
        })
    }
}

/// Minimizes perimeter at parameter `d` with the search driver and compares
/// every restart's final instance (and, for `d >= 1`, the regular
/// disk-triangle itself) against the reference.
pub fn perimeter_probe(d: f64, cfg: &SearchConfig, tol: &Tolerance) -> Result<ProbeReport> {
    let (kind, reference) = reference_perimeter(d)?;
    let cfg = SearchConfig { d, ..*cfg };
    let outcome = local_search(&cfg, Objective::Perimeter, tol)?;

    let mut candidates: Vec<Vec<Point>> =
        outcome.restarts.iter().map(|r| r.centers.clone()).collect();
    if kind == ReferenceKind::RegularTriangle {
        candidates.push(regular_triangle_centers(d));
    }
    let mut report = probe_candidates(&candidates, reference, kind, d, tol)?;
    report.instances_examined =
        cfg.restarts * (cfg.steps + 1) + usize::from(kind == ReferenceKind::RegularTriangle);
    Ok(report)
}

/// Measures each candidate center set and flags those whose perimeter falls
/// below `reference - eps_check`.
pub fn probe_candidates(
    candidates: &[Vec<Point>],
    reference: f64,
    kind: ReferenceKind,
    d: f64,
    tol: &Tolerance,
) -> Result<ProbeReport> {
    let mut min_perimeter = f64::INFINITY;
    let mut counterexamples = Vec::new();
    for centers in candidates {
        let p = perimeter(&DiskPolygon::build(centers, tol)?);
        min_perimeter = min_perimeter.min(p);
        if p < reference - tol.eps_check {
            counterexamples.push(Counterexample {
                centers: centers.clone(),
                perimeter: p,
                reference,
                digest: instance_digest(centers),
            });
        }
    }
    Ok(ProbeReport {
        d,
        reference_kind: kind,
        reference,
        min_perimeter_found: min_perimeter,
        ratio: min_perimeter / reference,
        instances_examined: candidates.len(),
        counterexamples,
        status: PROBE_STATUS.to_owned(),
    })
}
