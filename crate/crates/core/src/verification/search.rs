use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{DiskPolygon, Point, Tolerance};
use crate::measures::{area, perimeter};

use super::generator::{derive_seed, rescale_to_parameter, sample_ball};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Consecutive rejections after which the step size is cooled.
const REJECTION_STREAK: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Area,
    Perimeter,
}

impl Objective {
    pub fn evaluate(self, poly: &DiskPolygon) -> f64 {
        match self {
            Objective::Area => area(poly),
            Objective::Perimeter => perimeter(poly),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub d: f64,
    pub n_centers: usize,
    pub restarts: usize,
    pub steps: usize,
    pub initial_step: f64,
    pub cooling: f64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            d: 1.0,
            n_centers: 3,
            restarts: 50,
            steps: 2000,
            initial_step: 0.1,
            cooling: 0.5,
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.d > 0.0 && self.d < SQRT_3) {
            return Err(Error::DOutOfRange {
                d: self.d,
                range: "(0, sqrt(3))",
            });
        }
        if self.n_centers < 2 || self.restarts == 0 || self.steps == 0 {
            return Err(Error::InvalidConfig(
                "n_centers must be at least 2; restarts and steps must be positive".into(),
            ));
        }
        if !(self.initial_step > 0.0 && self.initial_step.is_finite()) {
            return Err(Error::InvalidConfig("initial_step must be positive".into()));
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return Err(Error::InvalidConfig("cooling must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

/// An accepted state: the objective value after `step` steps of `restart`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub restart: usize,
    pub step: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RestartResult {
    pub restart: usize,
    pub value: f64,
    pub centers: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub objective: Objective,
    pub best: DiskPolygon,
    pub best_value: f64,
    pub best_centers: Vec<Point>,
    pub restarts: Vec<RestartResult>,
    /// Accepted states only, so values are non-increasing within a restart.
    pub trace: Vec<TracePoint>,
}

/// Multi-start descent on center sets of parameter exactly `cfg.d`.
///
/// Each step moves one center by a Gaussian offset, rescales the set about
/// its centroid back to parameter `d`, and keeps the move only if the
/// objective strictly decreases. Restarts are independent and run in
/// parallel; each draws from its own seed-derived stream.
pub fn local_search(
    cfg: &SearchConfig,
    objective: Objective,
    tol: &Tolerance,
) -> Result<SearchOutcome> {
    cfg.validate()?;
    let runs = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| run_restart(cfg, objective, r, tol))
        .collect::<Result<Vec<_>>>()?;

    let mut restarts = Vec::with_capacity(runs.len());
    let mut trace = Vec::new();
    for (result, points) in runs {
        restarts.push(result);
        trace.extend(points);
    }
    let best_idx = restarts
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.value.total_cmp(&b.1.value))
        .map(|(i, _)| i)
        .expect("at least one restart");
    let best_centers = restarts[best_idx].centers.clone();
    let best = DiskPolygon::build(&best_centers, tol)?;
    Ok(SearchOutcome {
        objective,
        best,
        best_value: restarts[best_idx].value,
        best_centers,
        restarts,
        trace,
    })
}

/// Area minimization over the family `[1, sqrt(3))`, where the regular
/// disk-triangle is the known minimizer.
pub fn local_search_min_area(cfg: &SearchConfig, tol: &Tolerance) -> Result<SearchOutcome> {
    if !(1.0..SQRT_3).contains(&cfg.d) {
        return Err(Error::DOutOfRange {
            d: cfg.d,
            range: "[1, sqrt(3))",
        });
    }
    local_search(cfg, Objective::Area, tol)
}

fn run_restart(
    cfg: &SearchConfig,
    objective: Objective,
    restart: usize,
    tol: &Tolerance,
) -> Result<(RestartResult, Vec<TracePoint>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, restart as u64));
    let mut centers = sample_ball(&mut rng, cfg.n_centers, 0.5 * cfg.d);
    rescale_to_parameter(&mut centers, cfg.d);
    let mut value = objective.evaluate(&DiskPolygon::build(&centers, tol)?);
    let mut trace = vec![TracePoint {
        restart,
        step: 0,
        value,
    }];

    let mut sigma = cfg.initial_step;
    let mut streak = 0;
    for step in 1..=cfg.steps {
        let mut candidate = centers.clone();
        let i = rng.random_range(0..candidate.len());
        let normal = Normal::new(0.0, sigma).expect("sigma is positive and finite");
        candidate[i] = candidate[i] + Point::new(normal.sample(&mut rng), normal.sample(&mut rng));
        rescale_to_parameter(&mut candidate, cfg.d);

        let improved = match DiskPolygon::build(&candidate, tol) {
            Ok(poly) => {
                let v = objective.evaluate(&poly);
                (v < value).then_some(v)
            }
            Err(_) => None,
        };
        match improved {
            Some(v) => {
                value = v;
                centers = candidate;
                streak = 0;
                trace.push(TracePoint {
                    restart,
                    step,
                    value,
                });
            }
            None => {
                streak += 1;
                if streak >= REJECTION_STREAK {
                    sigma = (sigma * cfg.cooling).max(f64::MIN_POSITIVE);
                    streak = 0;
                }
            }
        }
    }
    Ok((
        RestartResult {
            restart,
            value,
            centers,
        },
        trace,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::delta_area;

    fn cfg(d: f64, n: usize, restarts: usize, steps: usize) -> SearchConfig {
        SearchConfig {
            d,
            n_centers: n,
            restarts,
            steps,
            seed: 3,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn trace_is_non_increasing_per_restart() {
        let out =
            local_search(&cfg(1.2, 4, 4, 300), Objective::Area, &Tolerance::default()).unwrap();
        for w in out.trace.windows(2) {
            if w[0].restart == w[1].restart {
                assert!(w[1].value < w[0].value);
                assert!(w[1].step > w[0].step);
            }
        }
        assert_eq!(out.restarts.len(), 4);
    }

    #[test]
    fn respects_floor_and_approaches_minimizer() {
        let tol = Tolerance::default();
        let out = local_search_min_area(&cfg(1.0, 3, 4, 1500), &tol).unwrap();
        let floor = delta_area(1.0).unwrap();
        assert!(out.trace.iter().all(|t| t.value >= floor - 1e-7));
        assert!(out.best_value - floor < 1e-3, "{}", out.best_value);
    }

    #[test]
    fn deterministic() {
        let tol = Tolerance::default();
        let a = local_search(&cfg(0.7, 3, 3, 200), Objective::Perimeter, &tol).unwrap();
        let b = local_search(&cfg(0.7, 3, 3, 200), Objective::Perimeter, &tol).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.best_centers, b.best_centers);
    }

    #[test]
    fn rejects_bad_config() {
        let tol = Tolerance::default();
        assert!(local_search_min_area(&cfg(0.9, 3, 1, 1), &tol).is_err());
        assert!(local_search(&cfg(1.2, 1, 1, 1), Objective::Area, &tol).is_err());
        let mut c = cfg(1.2, 3, 1, 1);
        c.cooling = 1.0;
        assert!(local_search(&c, Objective::Area, &tol).is_err());
    }
}
