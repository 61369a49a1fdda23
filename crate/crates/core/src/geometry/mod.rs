//! Planar primitives and the boundary construction for intersections of
//! unit disks.
//!
//! All lengths are measured in units of the generating-disk radius.

mod arc;
mod polygon;

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use arc::Arc;
pub use polygon::{center_parameter, regular_triangle_centers, DiskPolygon, Membership};

/// A point (or vector) in the Euclidean plane.
///
/// Serializes as a two-element array `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at angle `theta`.
    #[inline]
    pub fn unit(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { x: c, y: s }
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Polar angle in `(-pi, pi]`.
    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotate(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point::new(x, y)
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Thresholds shared by construction, classification and checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Coincidence and incidence threshold for lengths.
    pub eps_geom: f64,
    /// Arcs with a smaller sweep are treated as tangencies and pruned.
    pub eps_angle: f64,
    /// Allowed slack in identity and inequality checks.
    pub eps_check: f64,
}

impl Tolerance {
    pub fn new(eps_geom: f64, eps_angle: f64, eps_check: f64) -> Result<Self> {
        let all_positive = [eps_geom, eps_angle, eps_check]
            .iter()
            .all(|e| e.is_finite() && *e > 0.0);
        if !all_positive {
            return Err(Error::InvalidTolerance(
                "all thresholds must be strictly positive".into(),
            ));
        }
        if eps_geom > 1e-6 {
            return Err(Error::InvalidTolerance(format!(
                "eps_geom = {eps_geom} exceeds 1e-6"
            )));
        }
        Ok(Self {
            eps_geom,
            eps_angle,
            eps_check,
        })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_geom: 1e-9,
            eps_angle: 1e-9,
            eps_check: 1e-7,
        }
    }
}

/// A circle, used for incircles and circumcircles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Self {
        Self { center, radius }
    }

    /// True when `p` lies in the closed disk enlarged by `slack`.
    #[inline]
    pub fn contains(&self, p: Point, slack: f64) -> bool {
        self.center.distance(p) <= self.radius + slack
    }
}

/// Reduces an angle to `[0, 2pi)`.
#[inline]
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Reduces an angle to `[-pi, pi)`.
#[inline]
pub(crate) fn wrap_signed(theta: f64) -> f64 {
    let t = normalize_angle(theta);
    if t >= std::f64::consts::PI {
        t - TAU
    } else {
        t
    }
}

/// Largest pairwise distance, with the realizing pair of indices.
pub(crate) fn farthest_pair(points: &[Point]) -> (f64, usize, usize) {
    let mut best = (0.0, 0, 0);
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let dist = points[i].distance(points[j]);
            if dist > best.0 {
                best = (dist, i, j);
            }
        }
    }
    best
}
