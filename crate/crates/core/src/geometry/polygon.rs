use std::f64::consts::TAU;

use serde::Serialize;

use super::{farthest_pair, normalize_angle, wrap_signed, Arc, Point, Tolerance};
use crate::error::{Error, Result};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Largest pairwise distance among `centers` (0 for a single point).
pub fn center_parameter(centers: &[Point]) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(farthest_pair(centers).0)
}

/// Classification of a point against a disk-polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

/// Intersection of finitely many closed unit disks.
///
/// Only generators that contribute a side are kept. `centers[k]` generates
/// `sides[k]`; sides run counterclockwise and `vertices[k]` joins `sides[k]`
/// to `sides[k + 1]`. A single disk has one full-circle side and no vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiskPolygon {
    centers: Vec<Point>,
    vertices: Vec<Point>,
    sides: Vec<Arc>,
    center_parameter: f64,
}

impl DiskPolygon {
    /// Builds the disk-polygon generated by unit disks about `centers`.
    ///
    /// All pairwise center distances must be below `sqrt(3)`. Disks that do
    /// not contribute a side (or only touch the region within `eps_angle`)
    /// are dropped; `center_parameter` still reports the input set.
    pub fn build(centers: &[Point], tol: &Tolerance) -> Result<Self> {
        let param = validated_parameter(centers)?;
        if param >= 2.0 {
            return Err(Error::DegenerateIntersection(format!(
                "centers {param} apart: disks meet in at most a point"
            )));
        }
        if param >= SQRT_3 {
            return Err(Error::CenterParameterOutOfRange(param));
        }
        Self::from_generators(centers, tol, param)
    }

    /// Same as [`DiskPolygon::build`] without the `sqrt(3)` bound; only a
    /// non-empty interior is required. Duals of thin disk-polygons need this.
    pub(crate) fn build_unrestricted(centers: &[Point], tol: &Tolerance) -> Result<Self> {
        let param = validated_parameter(centers)?;
        if param >= 2.0 {
            return Err(Error::DegenerateIntersection(format!(
                "centers {param} apart: disks meet in at most a point"
            )));
        }
        Self::from_generators(centers, tol, param)
    }

    fn from_generators(centers: &[Point], tol: &Tolerance, param: f64) -> Result<Self> {
        let mut active: Vec<Point> = Vec::with_capacity(centers.len());
        for &c in centers {
            if active.iter().all(|a| a.distance(c) > tol.eps_geom) {
                active.push(c);
            }
        }
        if active.len() == 1 {
            return Ok(Self {
                centers: active.clone(),
                vertices: Vec::new(),
                sides: vec![Arc::full_circle(active[0])],
                center_parameter: param,
            });
        }

        // Dropping a disk only lengthens the remaining arcs, so the second
        // pass never prunes anything new.
        let arcs = loop {
            let arcs: Vec<Option<Arc>> =
                (0..active.len()).map(|i| clipped_arc(&active, i)).collect();
            let keep: Vec<bool> = arcs
                .iter()
                .map(|a| a.is_some_and(|a| a.sweep() > tol.eps_angle))
                .collect();
            if keep.iter().all(|&k| k) {
                break arcs.into_iter().flatten().collect::<Vec<_>>();
            }
            let survivors: Vec<Point> = active
                .iter()
                .zip(&keep)
                .filter_map(|(c, &k)| k.then_some(*c))
                .collect();
            if survivors.len() < 2 {
                return Err(Error::DegenerateIntersection(
                    "no two disks contribute a side".into(),
                ));
            }
            active = survivors;
        };

        let mut sides = arcs;
        sides.sort_by(|a, b| a.start_angle.total_cmp(&b.start_angle));
        let n = sides.len();
        let mut vertices = Vec::with_capacity(n);
        for k in 0..n {
            let end = sides[k].end_point();
            let start = sides[(k + 1) % n].start_point();
            if end.distance(start) > 1e-6 {
                return Err(Error::DegenerateIntersection(format!(
                    "sides {k} and {} do not meet",
                    (k + 1) % n
                )));
            }
            vertices.push(end.midpoint(start));
        }
        Ok(Self {
            centers: sides.iter().map(|s| s.center).collect(),
            vertices,
            sides,
            center_parameter: param,
        })
    }

    /// Contributing generators, counterclockwise.
    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn sides(&self) -> &[Arc] {
        &self.sides
    }

    /// Max pairwise distance over the centers the polygon was built from,
    /// including any that were pruned.
    pub fn center_parameter(&self) -> f64 {
        self.center_parameter
    }

    /// Max pairwise distance over the contributing generators.
    pub fn surviving_parameter(&self) -> f64 {
        farthest_pair(&self.centers).0
    }

    /// Fewer than three sides: a disk or a lens.
    pub fn is_degenerate(&self) -> bool {
        self.sides.len() <= 2
    }

    pub fn contains_point(&self, p: Point, tol: &Tolerance) -> Membership {
        let excess = self
            .centers
            .iter()
            .map(|c| c.distance(p) - 1.0)
            .fold(f64::NEG_INFINITY, f64::max);
        if excess > tol.eps_geom {
            Membership::Outside
        } else if excess >= -tol.eps_geom {
            Membership::Boundary
        } else {
            Membership::Inside
        }
    }

    /// Regular disk-triangle: three unit disks about an equilateral triangle
    /// of side `d`, centered at the origin.
    pub fn regular_triangle(d: f64, tol: &Tolerance) -> Result<Self> {
        Self::build(&regular_triangle_centers(d), tol)
    }
}

/// Vertices of an equilateral triangle of side `d` centered at the origin,
/// counterclockwise, first vertex on the positive y-axis.
pub fn regular_triangle_centers(d: f64) -> Vec<Point> {
    let radius = d / SQRT_3;
    (0..3)
        .map(|k| Point::unit(std::f64::consts::FRAC_PI_2 + k as f64 * TAU / 3.0) * radius)
        .collect()
}

fn validated_parameter(centers: &[Point]) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::EmptyInput);
    }
    if centers.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFiniteCoordinate);
    }
    center_parameter(centers)
}

/// The part of the unit circle about `centers[i]` lying in every other
/// disk, as a single angular interval.
///
/// Each other disk admits an interval of half-width `acos(dist / 2) < pi/2`,
/// so every partial intersection is shorter than `pi` and the circular
/// intersection reduces to an interval intersection after one shift.
fn clipped_arc(centers: &[Point], i: usize) -> Option<Arc> {
    let c = centers[i];
    let mut start = 0.0;
    let mut sweep = TAU;
    for (j, &other) in centers.iter().enumerate() {
        if j == i {
            continue;
        }
        let v = other - c;
        let dist = v.norm();
        if dist >= 2.0 {
            return None;
        }
        let half = (0.5 * dist).acos();
        let s2 = v.angle() - half;
        let w2 = 2.0 * half;
        if sweep >= TAU {
            start = s2;
            sweep = w2;
            continue;
        }
        let offset = wrap_signed(s2 - start);
        let lo = offset.max(0.0);
        let hi = sweep.min(offset + w2);
        if hi <= lo {
            return None;
        }
        start += lo;
        sweep = hi - lo;
    }
    Some(Arc::new(c, normalize_angle(start), sweep))
}
