use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{DiskPolygon, Tolerance};

use super::checks::{
    check_identities, check_involution, check_lemma1_for, check_lemma2_for, check_theorem1_for,
    check_theorem2,
};
use super::generator::{derive_seed, random_center_set, GeneratorConfig, SpreadMode};
use super::CheckResult;

/// Random-instance suite at one nominal `d`. Instance `i` has
/// `2 + i % (max_centers - 1)` centers, stretched to a parameter near `d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub d: f64,
    pub instances: usize,
    pub seed: u64,
    pub max_centers: usize,
}

impl SuiteConfig {
    fn validate(&self) -> Result<()> {
        if self.max_centers < 2 {
            return Err(Error::InvalidConfig(
                "max_centers must be at least 2".into(),
            ));
        }
        if self.instances == 0 {
            return Err(Error::InvalidConfig("instances must be positive".into()));
        }
        Ok(())
    }

    fn centers_for(&self, i: usize) -> usize {
        2 + i % (self.max_centers - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryEntry {
    pub count: usize,
    pub pass_count: usize,
    pub min_slack: f64,
    pub max_abs_slack: f64,
    pub argmin_digest: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    /// Sorted by instance digest, then check name.
    pub results: Vec<CheckResult>,
    pub summary: BTreeMap<String, SummaryEntry>,
}

impl SuiteReport {
    pub fn from_results(mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| {
            a.instance_digest
                .cmp(&b.instance_digest)
                .then_with(|| a.name.cmp(&b.name))
        });
        let mut summary: BTreeMap<String, SummaryEntry> = BTreeMap::new();
        for r in &results {
            let e = summary
                .entry(r.name.clone())
                .or_insert_with(|| SummaryEntry {
                    count: 0,
                    pass_count: 0,
                    min_slack: f64::INFINITY,
                    max_abs_slack: 0.0,
                    argmin_digest: String::new(),
                });
            e.count += 1;
            e.pass_count += usize::from(r.pass);
            e.max_abs_slack = e.max_abs_slack.max(r.slack.abs());
            if r.slack < e.min_slack {
                e.min_slack = r.slack;
                e.argmin_digest = r.instance_digest.clone();
            }
        }
        Self { results, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    /// One JSON object per line, one line per result.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&serde_json::to_string(r).expect("results always serialize"));
            out.push('\n');
        }
        out
    }

    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.summary).expect("summary always serializes")
    }
}

/// Runs every applicable check on `cfg.instances` random instances.
///
/// All instances get the duality identities. For nominal `d >= 1` they also
/// get the inradius, width and area bounds against the family parameter
/// `max(1, realized d)`; for nominal `d < 1` they get the strict area bound
/// against the realized parameter.
pub fn run_suite(cfg: &SuiteConfig, tol: &Tolerance) -> Result<SuiteReport> {
    cfg.validate()?;
    let per_instance = (0..cfg.instances)
        .into_par_iter()
        .map(|i| {
            let centers = random_center_set(&GeneratorConfig {
                d: cfg.d,
                n_centers: cfg.centers_for(i),
                seed: derive_seed(cfg.seed, i as u64),
                spread_mode: SpreadMode::Stretched,
            })?;
            let poly = DiskPolygon::build(&centers, tol)?;
            let mut out = check_identities(&poly, tol)?;
            if cfg.d >= 1.0 {
                let family = poly.surviving_parameter().max(1.0);
                out.push(check_lemma1_for(&poly, family, tol)?);
                out.push(check_lemma2_for(&poly, family, tol)?);
                out.push(check_theorem1_for(&poly, family, tol)?);
            } else {
                out.push(check_theorem2(&poly, tol)?);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::from_results(
        per_instance.into_iter().flatten().collect(),
    ))
}

/// Double-dual check on `instances` random instances whose nominal `d` is
/// drawn uniformly from `d_range`.
pub fn run_involution_suite(
    instances: usize,
    seed: u64,
    d_range: (f64, f64),
    max_centers: usize,
    tol: &Tolerance,
) -> Result<SuiteReport> {
    SuiteConfig {
        d: d_range.0,
        instances,
        seed,
        max_centers,
    }
    .validate()?;
    let results = (0..instances)
        .into_par_iter()
        .map(|i| {
            let s = derive_seed(seed, i as u64);
            let d = ChaCha8Rng::seed_from_u64(s).random_range(d_range.0..d_range.1);
            let centers = random_center_set(&GeneratorConfig {
                d,
                n_centers: 2 + i % (max_centers - 1),
                seed: s,
                spread_mode: SpreadMode::Stretched,
            })?;
            check_involution(&DiskPolygon::build(&centers, tol)?, tol)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::from_results(results))
}
