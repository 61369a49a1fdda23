use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{farthest_pair, Point};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpreadMode {
    /// Uniform in a disk of radius `d / 2`.
    Ball,
    /// As `Ball`, then rescaled about the centroid so the largest pairwise
    /// distance lands in `[0.98 d, d]`.
    Stretched,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub d: f64,
    pub n_centers: usize,
    pub seed: u64,
    pub spread_mode: SpreadMode,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.d > 0.0 && self.d < SQRT_3) {
            return Err(Error::DOutOfRange {
                d: self.d,
                range: "(0, sqrt(3))",
            });
        }
        if self.n_centers == 0 {
            return Err(Error::InvalidConfig("n_centers must be positive".into()));
        }
        Ok(())
    }
}

/// Deterministic random center set whose pairwise distances are at most `d`.
pub fn random_center_set(cfg: &GeneratorConfig) -> Result<Vec<Point>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut points = sample_ball(&mut rng, cfg.n_centers, 0.5 * cfg.d);
    if cfg.spread_mode == SpreadMode::Stretched {
        let target = cfg.d * rng.random_range(0.98..=1.0);
        rescale_to_parameter(&mut points, target);
    }
    Ok(points)
}

pub(crate) fn sample_ball(rng: &mut impl Rng, n: usize, radius: f64) -> Vec<Point> {
    (0..n)
        .map(|_| {
            let r = radius * rng.random::<f64>().sqrt();
            let t = rng.random_range(0.0..std::f64::consts::TAU);
            Point::unit(t) * r
        })
        .collect()
}

/// Scales `points` about their centroid so the largest pairwise distance is
/// `target`. Sets with a single distinct point are left alone.
pub fn rescale_to_parameter(points: &mut [Point], target: f64) {
    let (current, _, _) = farthest_pair(points);
    if current <= 0.0 {
        return;
    }
    let n = points.len() as f64;
    let centroid = points.iter().fold(Point::ORIGIN, |acc, p| acc + *p) * (1.0 / n);
    let k = target / current;
    for p in points.iter_mut() {
        *p = centroid + (*p - centroid) * k;
    }
}

/// Independent per-index seed derived from a base seed (splitmix64).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{center_parameter, DiskPolygon, Tolerance};

    fn cfg(d: f64, n: usize, seed: u64, spread_mode: SpreadMode) -> GeneratorConfig {
        GeneratorConfig {
            d,
            n_centers: n,
            seed,
            spread_mode,
        }
    }

    #[test]
    fn single_center() {
        let pts = random_center_set(&cfg(1.2, 1, 4, SpreadMode::Stretched)).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(center_parameter(&pts).unwrap(), 0.0);
    }

    #[test]
    fn stretched_lands_near_d() {
        for seed in 0..200 {
            let pts = random_center_set(&cfg(1.2, 3, seed, SpreadMode::Stretched)).unwrap();
            let d = center_parameter(&pts).unwrap();
            assert!((1.176 - 1e-12..=1.2 + 1e-12).contains(&d), "{d}");
        }
    }

    #[test]
    fn ball_stays_within_d_and_builds() {
        for seed in 0..200 {
            let n = 1 + (seed as usize % 10);
            let pts = random_center_set(&cfg(1.7, n, seed, SpreadMode::Ball)).unwrap();
            assert!(center_parameter(&pts).unwrap() <= 1.7);
            let poly = DiskPolygon::build(&pts, &Tolerance::default()).unwrap();
            assert!(!poly.centers().is_empty());
        }
    }

    #[test]
    fn deterministic_for_seed() {
        let c = cfg(0.8, 7, 99, SpreadMode::Stretched);
        let a = serde_json::to_string(&random_center_set(&c).unwrap()).unwrap();
        let b = serde_json::to_string(&random_center_set(&c).unwrap()).unwrap();
        assert_eq!(a, b);
        let other = cfg(0.8, 7, 100, SpreadMode::Stretched);
        assert_ne!(
            a,
            serde_json::to_string(&random_center_set(&other).unwrap()).unwrap()
        );
    }

    #[test]
    fn rejects_bad_config() {
        assert!(random_center_set(&cfg(1.8, 3, 0, SpreadMode::Ball)).is_err());
        assert!(random_center_set(&cfg(0.0, 3, 0, SpreadMode::Ball)).is_err());
        assert!(random_center_set(&cfg(1.0, 0, 0, SpreadMode::Ball)).is_err());
    }

    #[test]
    fn derived_seeds_differ() {
        let seeds: std::collections::HashSet<u64> = (0..1000).map(|i| derive_seed(7, i)).collect();
        assert_eq!(seeds.len(), 1000);
    }
}
