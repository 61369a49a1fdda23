//! Dual disk-polygons and spindle convex hulls.
//!
//! The dual of a disk-polygon is generated by unit disks centered at its
//! vertices. Vertices of the dual are then exactly the original generators,
//! so dualizing twice returns the starting region.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geometry::{center_parameter, DiskPolygon, Point, Tolerance};
use crate::measures::width_in_direction;

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// The disk-polygon generated by unit disks about the vertices of `poly`.
///
/// The dual of a thin polygon can have a center parameter of `sqrt(3)` or
/// more, so only a non-empty interior is required here.
pub fn dual(poly: &DiskPolygon, tol: &Tolerance) -> Result<DiskPolygon> {
    if poly.vertices().is_empty() {
        return Err(Error::NoVertices);
    }
    DiskPolygon::build_unrestricted(poly.vertices(), tol)
}

/// Symmetric Hausdorff distance between the generators of `poly` and those of
/// its double dual.
pub fn involution_defect(poly: &DiskPolygon, tol: &Tolerance) -> Result<f64> {
    let back = dual(&dual(poly, tol)?, tol)?;
    Ok(hausdorff(poly.centers(), back.centers()))
}

fn hausdorff(a: &[Point], b: &[Point]) -> f64 {
    let directed = |from: &[Point], to: &[Point]| {
        from.iter()
            .map(|p| {
                to.iter()
                    .map(|q| p.distance(*q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// Intersection of all unit disks containing `points`, computed as the dual
/// of the disk-polygon the points generate.
pub fn spindle_hull(points: &[Point], tol: &Tolerance) -> Result<DiskPolygon> {
    let diam = center_parameter(points)?;
    if diam >= SQRT_3 {
        return Err(Error::DiameterTooLarge(diam));
    }
    dual(&DiskPolygon::build(points, tol)?, tol)
}

/// Largest deviation from 2 of the width of `poly + dual(poly)` over
/// `samples` equally spaced directions in `[0, 2pi)`.
///
/// Widths of a Minkowski sum add, so this is
/// `max |w_D(theta) + w_D*(theta) - 2|`.
pub fn constant_width_defect(poly: &DiskPolygon, samples: usize, tol: &Tolerance) -> Result<f64> {
    let other = dual(poly, tol)?;
    let samples = samples.max(1);
    Ok((0..samples)
        .map(|k| {
            let theta = k as f64 * TAU / samples as f64;
            (width_in_direction(poly, theta) + width_in_direction(&other, theta) - 2.0).abs()
        })
        .fold(0.0, f64::max))
}
