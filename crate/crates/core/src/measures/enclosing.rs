//! Smallest enclosing circle of a finite point set.

use crate::error::{Error, Result};
use crate::geometry::{Circle, Point};

/// Sets up to this size are solved by exhaustive support-set search.
const EXHAUSTIVE_LIMIT: usize = 12;

/// Smallest circle containing every point.
pub fn minimal_enclosing_circle(points: &[Point]) -> Result<Circle> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(exhaustive_or_incremental(points))
}

pub(crate) fn exhaustive_or_incremental(points: &[Point]) -> Circle {
    if points.len() <= EXHAUSTIVE_LIMIT {
        exhaustive(points)
    } else {
        incremental(points)
    }
}

fn containment_slack(points: &[Point]) -> f64 {
    let scale = points
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(1.0, f64::max);
    1e-12 * scale
}

fn encloses(circle: &Circle, points: &[Point], slack: f64) -> bool {
    points.iter().all(|&p| circle.contains(p, slack))
}

/// Tries every circle determined by one, two or three of the points and keeps
/// the smallest one enclosing all of them. Ties go to the earliest support set.
pub fn exhaustive(points: &[Point]) -> Circle {
    assert!(!points.is_empty(), "enclosing circle of an empty set");
    let slack = containment_slack(points);
    let n = points.len();
    if n == 1 {
        return Circle::new(points[0], 0.0);
    }
    let mut best: Option<Circle> = None;
    let mut consider = |c: Circle| {
        if best.is_none_or(|b| c.radius < b.radius) && encloses(&c, points, slack) {
            best = Some(c);
        }
    };
    for i in 0..n {
        for j in (i + 1)..n {
            consider(diametral(points[i], points[j]));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if let Some(c) = circumcircle(points[i], points[j], points[k]) {
                    consider(c);
                }
            }
        }
    }
    // Every point coincident: no pair or triple produced a better circle.
    best.unwrap_or_else(|| Circle::new(points[0], 0.0))
}

/// Welzl-style incremental construction in input order.
pub fn incremental(points: &[Point]) -> Circle {
    assert!(!points.is_empty(), "enclosing circle of an empty set");
    let slack = containment_slack(points);
    let mut c = Circle::new(points[0], 0.0);
    for i in 1..points.len() {
        if c.contains(points[i], slack) {
            continue;
        }
        c = Circle::new(points[i], 0.0);
        for j in 0..i {
            if c.contains(points[j], slack) {
                continue;
            }
            c = diametral(points[i], points[j]);
            for k in 0..j {
                if c.contains(points[k], slack) {
                    continue;
                }
                c = circumcircle(points[i], points[j], points[k])
                    .unwrap_or_else(|| widest_pair(points[i], points[j], points[k]));
            }
        }
    }
    c
}

fn diametral(a: Point, b: Point) -> Circle {
    Circle::new(a.midpoint(b), 0.5 * a.distance(b))
}

fn widest_pair(a: Point, b: Point, c: Point) -> Circle {
    [diametral(a, b), diametral(b, c), diametral(a, c)]
        .into_iter()
        .max_by(|x, y| x.radius.total_cmp(&y.radius))
        .unwrap()
}

fn circumcircle(a: Point, b: Point, c: Point) -> Option<Circle> {
    let ab = b - a;
    let ac = c - a;
    let det = 2.0 * ab.cross(ac);
    let scale = ab.dot(ab).max(ac.dot(ac));
    if det.abs() <= 1e-14 * scale {
        return None;
    }
    let ab2 = ab.dot(ab);
    let ac2 = ac.dot(ac);
    let offset = Point::new(ac.y * ab2 - ab.y * ac2, ab.x * ac2 - ac.x * ab2) * (1.0 / det);
    let center = a + offset;
    Some(Circle::new(center, offset.norm()))
}
