//! Metric quantities of a disk-polygon.

mod enclosing;

use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::duality::dual;
use crate::error::Result;
use crate::geometry::{DiskPolygon, Point, Tolerance};

pub use enclosing::{
    exhaustive as enclosing_circle_exhaustive, incremental as enclosing_circle_incremental,
    minimal_enclosing_circle,
};

/// Number of initial directions for the support-function width search.
pub const WIDTH_SAMPLES: usize = 2048;
const WIDTH_REFINE_TOL: f64 = 1e-12;
const WIDTH_REFINE_CANDIDATES: usize = 8;

/// Every metric quantity of one disk-polygon.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    pub area: f64,
    pub perimeter: f64,
    pub inradius: f64,
    pub circumradius: f64,
    pub minimal_width: f64,
    pub width_direction: f64,
    pub diameter: f64,
    pub diameter_endpoints: [Point; 2],
    /// Set for disks and lenses (at most two generators).
    pub degenerate: bool,
}

impl MeasureReport {
    pub fn of(poly: &DiskPolygon, tol: &Tolerance) -> Result<Self> {
        let (minimal_width, width_direction) = minimal_width(poly, tol)?;
        let (diameter, (a, b)) = diameter(poly);
        Ok(Self {
            area: area(poly),
            perimeter: perimeter(poly),
            inradius: inradius(poly).0,
            circumradius: circumradius(poly).0,
            minimal_width,
            width_direction,
            diameter,
            diameter_endpoints: [a, b],
            degenerate: poly.is_degenerate(),
        })
    }
}

/// Area of the vertex polygon plus one circular segment per side.
pub fn area(poly: &DiskPolygon) -> f64 {
    let v = poly.vertices();
    let polygon: f64 = (0..v.len())
        .map(|k| v[k].cross(v[(k + 1) % v.len()]))
        .sum::<f64>()
        * 0.5;
    polygon + poly.sides().iter().map(|s| s.segment_area()).sum::<f64>()
}

pub fn perimeter(poly: &DiskPolygon) -> f64 {
    poly.sides().iter().map(|s| s.length()).sum()
}

/// Support function `h(theta) = max over the region of <p, u(theta)>`.
pub fn support(poly: &DiskPolygon, theta: f64) -> f64 {
    let u = Point::unit(theta);
    let from_vertices = poly
        .vertices()
        .iter()
        .map(|v| v.dot(u))
        .fold(f64::NEG_INFINITY, f64::max);
    poly.sides()
        .iter()
        .filter(|s| s.contains_angle(theta, 0.0))
        .map(|s| s.center.dot(u) + 1.0)
        .fold(from_vertices, f64::max)
}

/// Distance between the two supporting lines orthogonal to `theta`.
#[inline]
pub fn width_in_direction(poly: &DiskPolygon, theta: f64) -> f64 {
    support(poly, theta) + support(poly, theta + PI)
}

/// Minimal width and its direction in `[0, pi)`.
///
/// Uses `w(D) = 2 - diam(D*)`: the width is attained in the direction of
/// the dual's diameter. A single disk has width 2.
pub fn minimal_width(poly: &DiskPolygon, tol: &Tolerance) -> Result<(f64, f64)> {
    if poly.vertices().is_empty() {
        return Ok((2.0, 0.0));
    }
    let dual = dual(poly, tol)?;
    let (diam, (a, b)) = diameter(&dual);
    let direction = (b - a).angle().rem_euclid(PI);
    Ok((2.0 - diam, direction))
}

/// Minimal width from the support function alone: dense sampling over
/// `[0, pi)` followed by golden-section refinement of the lowest local minima.
pub fn width_by_support(poly: &DiskPolygon) -> (f64, f64) {
    if poly.vertices().is_empty() {
        return (2.0, 0.0);
    }
    let n = WIDTH_SAMPLES;
    let step = PI / n as f64;
    let samples: Vec<f64> = (0..n)
        .map(|i| width_in_direction(poly, i as f64 * step))
        .collect();
    let mut minima: Vec<usize> = (0..n)
        .filter(|&i| {
            let prev = samples[(i + n - 1) % n];
            let next = samples[(i + 1) % n];
            samples[i] <= prev && samples[i] <= next
        })
        .collect();
    minima.sort_by(|&a, &b| samples[a].total_cmp(&samples[b]));
    minima.truncate(WIDTH_REFINE_CANDIDATES);

    let mut best = (samples[minima[0]], minima[0] as f64 * step);
    for &i in &minima {
        let centre = i as f64 * step;
        let (theta, w) = golden_section(
            |t| width_in_direction(poly, t),
            centre - step,
            centre + step,
            WIDTH_REFINE_TOL,
        );
        if w < best.0 {
            best = (w, theta);
        }
    }
    (best.0, best.1.rem_euclid(PI))
}

fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    (t, f(t))
}

/// Diameter and a pair of boundary points realizing it.
///
/// Candidates: vertex pairs, a vertex against the far point of an arc on the
/// line through that arc's center, and two arc points on the line through
/// both arc centers. Any other pair can be lengthened.
pub fn diameter(poly: &DiskPolygon) -> (f64, (Point, Point)) {
    let sides = poly.sides();
    if sides.len() == 1 {
        let c = sides[0].center;
        return (2.0, (c - Point::new(1.0, 0.0), c + Point::new(1.0, 0.0)));
    }
    let v = poly.vertices();
    let mut best = (0.0, (v[0], v[0]));
    let mut offer = |len: f64, a: Point, b: Point| {
        if len > best.0 {
            best = (len, (a, b));
        }
    };
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            offer(v[i].distance(v[j]), v[i], v[j]);
        }
    }
    for &p in v {
        for s in sides {
            let dir = s.center - p;
            let len = dir.norm();
            if len < 1e-15 {
                continue;
            }
            let theta = dir.angle();
            if s.contains_angle(theta, 0.0) {
                offer(1.0 + len, p, s.point_at(theta));
            }
        }
    }
    for j in 0..sides.len() {
        for k in (j + 1)..sides.len() {
            let dir = sides[j].center - sides[k].center;
            let len = dir.norm();
            if len < 1e-15 {
                continue;
            }
            let theta = dir.angle();
            if sides[j].contains_angle(theta, 0.0) && sides[k].contains_angle(theta + PI, 0.0) {
                offer(
                    2.0 + len,
                    sides[j].point_at(theta),
                    sides[k].point_at(theta + PI),
                );
            }
        }
    }
    best
}

/// Inradius and incircle center.
///
/// A disk of radius `r` about `o` fits in every generating disk exactly when
/// `|o - c| <= 1 - r` for every center, so the incircle is concentric with
/// the smallest circle enclosing the centers.
pub fn inradius(poly: &DiskPolygon) -> (f64, Point) {
    let mec = enclosing::exhaustive_or_incremental(poly.centers());
    (1.0 - mec.radius, mec.center)
}

/// Circumradius and circumcenter.
pub fn circumradius(poly: &DiskPolygon) -> (f64, Point) {
    let sides = poly.sides();
    if sides.len() == 1 {
        return (1.0, sides[0].center);
    }
    let mut candidates = poly.vertices().to_vec();
    loop {
        let mec = enclosing::exhaustive_or_incremental(&candidates);
        // An arc can only poke out of a circle of radius < 1 through its
        // interior if its far point from the center is on the arc.
        let mut grew = false;
        for s in sides {
            let dir = s.center - mec.center;
            if dir.norm() < 1e-15 {
                continue;
            }
            let theta = dir.angle();
            let far = s.point_at(theta);
            if s.contains_angle(theta, 0.0) && !mec.contains(far, 1e-12) {
                candidates.push(far);
                grew = true;
            }
        }
        if !grew {
            return (mec.radius, mec.center);
        }
    }
}

/// Rejection-sampling area estimate with its standard error.
pub fn monte_carlo_area(poly: &DiskPolygon, sample_count: usize, seed: u64) -> (f64, f64) {
    let xmax = support(poly, 0.0);
    let ymax = support(poly, FRAC_PI_2);
    let xmin = -support(poly, PI);
    let ymin = -support(poly, 3.0 * FRAC_PI_2);
    let box_area = (xmax - xmin) * (ymax - ymin);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let centers = poly.centers();
    let hits = (0..sample_count)
        .filter(|_| {
            let p = Point::new(rng.random_range(xmin..xmax), rng.random_range(ymin..ymax));
            centers.iter().all(|c| {
                let q = p - *c;
                q.dot(q) <= 1.0
            })
        })
        .count();
    let n = sample_count.max(1) as f64;
    let frac = hits as f64 / n;
    (box_area * frac, box_area * (frac * (1.0 - frac) / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn lens(d: f64) -> DiskPolygon {
        DiskPolygon::build(
            &[Point::new(-0.5 * d, 0.0), Point::new(0.5 * d, 0.0)],
            &tol(),
        )
        .unwrap()
    }

    fn disk() -> DiskPolygon {
        DiskPolygon::build(&[Point::new(0.3, 0.1)], &tol()).unwrap()
    }

    fn reuleaux() -> DiskPolygon {
        DiskPolygon::regular_triangle(1.0, &tol()).unwrap()
    }

    #[test]
    fn areas() {
        assert!((area(&reuleaux()) - 0.5 * (PI - 3f64.sqrt())).abs() < 1e-14);
        assert!((area(&disk()) - PI).abs() < 1e-15);
        // lens: two segments of sweep 2*acos(d/2)
        let expected = 2.0 * 0.5f64.acos() - 0.5 * 3f64.sqrt();
        assert!((area(&lens(1.0)) - expected).abs() < 1e-14);
    }

    #[test]
    fn perimeters() {
        assert!((perimeter(&reuleaux()) - PI).abs() < 1e-14);
        assert!((perimeter(&disk()) - 2.0 * PI).abs() < 1e-15);
        let p = perimeter(&DiskPolygon::regular_triangle(1.2, &tol()).unwrap());
        assert!((p - (2.0 * PI - 6.0 * 0.6f64.asin())).abs() < 1e-13);
    }

    #[test]
    fn support_examples() {
        for k in 0..16 {
            let t = k as f64 * 0.4;
            let expected = 1.0 + Point::new(0.3, 0.1).dot(Point::unit(t));
            assert!((support(&disk(), t) - expected).abs() < 1e-15);
        }
        assert!((support(&lens(1.0), FRAC_PI_2) - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((support(&lens(1.0), 0.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn widths() {
        let (w, _) = minimal_width(&reuleaux(), &tol()).unwrap();
        assert!((w - 1.0).abs() < 1e-12);
        let (w, _) = minimal_width(&lens(1.0), &tol()).unwrap();
        assert!((w - 1.0).abs() < 1e-12);
        let (w, dir) = minimal_width(&lens(0.6), &tol()).unwrap();
        assert!((w - 1.4).abs() < 1e-12);
        assert!(dir.abs() < 1e-12 || (dir - PI).abs() < 1e-12);
        let (w, _) =
            minimal_width(&DiskPolygon::regular_triangle(1.2, &tol()).unwrap(), &tol()).unwrap();
        assert!((w - 0.760_769_515_458_673_8).abs() < 1e-12);
        assert_eq!(minimal_width(&disk(), &tol()).unwrap().0, 2.0);
    }

    #[test]
    fn support_width_matches_dual_route() {
        for poly in [
            reuleaux(),
            lens(1.0),
            lens(0.4),
            DiskPolygon::regular_triangle(1.5, &tol()).unwrap(),
        ] {
            let (a, _) = minimal_width(&poly, &tol()).unwrap();
            let (b, _) = width_by_support(&poly);
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&disk()).0, 2.0);
        let (d, (a, b)) = diameter(&lens(1.0));
        assert!((d - 3f64.sqrt()).abs() < 1e-14);
        assert!((a.distance(b) - d).abs() < 1e-14);
        assert!((diameter(&reuleaux()).0 - 1.0).abs() < 1e-14);
        // thin lens across the axis: vertex pair beats the axis chord 2 - d
        assert!((diameter(&lens(0.2)).0 - 2.0 * (1.0 - 0.01f64).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn in_and_circumradius() {
        let (r, o) = inradius(&DiskPolygon::regular_triangle(1.2, &tol()).unwrap());
        assert!((r - (1.0 - 1.2 / 3f64.sqrt())).abs() < 1e-14);
        assert!(o.norm() < 1e-14);
        assert_eq!(inradius(&disk()), (1.0, Point::new(0.3, 0.1)));
        let (r, o) = inradius(&lens(1.0));
        assert!((r - 0.5).abs() < 1e-15);
        assert!(o.norm() < 1e-15);

        assert_eq!(circumradius(&disk()).0, 1.0);
        assert!((circumradius(&reuleaux()).0 - 1.0 / 3f64.sqrt()).abs() < 1e-14);
        assert!((circumradius(&lens(1.0)).0 - 3f64.sqrt() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn report_serializes_stable_keys() {
        let report = MeasureReport::of(&reuleaux(), &tol()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        for key in [
            "area",
            "perimeter",
            "inradius",
            "circumradius",
            "minimal_width",
            "width_direction",
            "diameter",
            "degenerate",
        ] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json["degenerate"], false);
    }

    #[test]
    fn monte_carlo_disk() {
        let (est, se) = monte_carlo_area(&disk(), 200_000, 3);
        assert!((est - PI).abs() < 4.0 * se);
        let (a, _) = monte_carlo_area(&disk(), 1000, 9);
        let (b, _) = monte_carlo_area(&disk(), 1000, 9);
        assert_eq!(a, b);
    }
}
