use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::{normalize_angle, Point};

/// One side of a disk-polygon: a counterclockwise arc of the unit circle
/// about `center`, from `start_angle` to `end_angle`.
///
/// `start_angle` is kept in `[0, 2pi)` and `end_angle = start_angle + sweep`
/// is not reduced, so the sweep is always `end_angle - start_angle`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub center: Point,
    pub start_angle: f64,
    pub end_angle: f64,
}

impl Arc {
    pub fn new(center: Point, start_angle: f64, sweep: f64) -> Self {
        let start_angle = normalize_angle(start_angle);
        Self {
            center,
            start_angle,
            end_angle: start_angle + sweep,
        }
    }

    pub fn full_circle(center: Point) -> Self {
        Self::new(center, 0.0, TAU)
    }

    #[inline]
    pub fn sweep(&self) -> f64 {
        self.end_angle - self.start_angle
    }

    #[inline]
    pub fn is_full_circle(&self) -> bool {
        self.sweep() >= TAU
    }

    /// Whether the outward normal direction `theta` belongs to this arc.
    ///
    /// On a unit circle the outward normal at angle `theta` is the direction
    /// `theta` itself, so this is also a test for a point at that angle.
    pub fn contains_angle(&self, theta: f64, eps: f64) -> bool {
        if self.is_full_circle() {
            return true;
        }
        let offset = normalize_angle(theta - self.start_angle);
        offset <= self.sweep() + eps || offset >= TAU - eps
    }

    #[inline]
    pub fn point_at(&self, theta: f64) -> Point {
        self.center + Point::unit(theta)
    }

    pub fn start_point(&self) -> Point {
        self.point_at(self.start_angle)
    }

    pub fn end_point(&self) -> Point {
        self.point_at(self.end_angle)
    }

    pub fn mid_angle(&self) -> f64 {
        self.start_angle + 0.5 * self.sweep()
    }

    /// Arc length, equal to the sweep for a unit radius.
    #[inline]
    pub fn length(&self) -> f64 {
        self.sweep()
    }

    /// Area between the arc and its chord.
    #[inline]
    pub fn segment_area(&self) -> f64 {
        let s = self.sweep();
        0.5 * (s - s.sin())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn containment_wraps_around_zero() {
        let arc = Arc::new(Point::ORIGIN, -0.5, 1.0);
        assert!((arc.start_angle - (TAU - 0.5)).abs() < 1e-15);
        assert!(arc.contains_angle(0.0, 0.0));
        assert!(arc.contains_angle(0.49, 0.0));
        assert!(!arc.contains_angle(0.6, 0.0));
        assert!(!arc.contains_angle(PI, 0.0));
    }

    #[test]
    fn half_circle_segment_is_half_disk() {
        let arc = Arc::new(Point::new(3.0, 1.0), FRAC_PI_2, PI);
        assert!((arc.segment_area() - FRAC_PI_2).abs() < 1e-15);
        assert!((arc.start_point().distance(Point::new(3.0, 2.0))) < 1e-15);
        assert!((arc.end_point().distance(Point::new(3.0, 0.0))) < 1e-15);
    }

    #[test]
    fn full_circle_contains_everything() {
        let arc = Arc::full_circle(Point::ORIGIN);
        assert!(arc.is_full_circle());
        assert!(arc.contains_angle(4.0, 0.0));
        assert!((arc.segment_area() - PI).abs() < 1e-15);
    }
}
