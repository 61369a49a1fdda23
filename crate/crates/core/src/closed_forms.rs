//! Closed-form measures of the regular disk-triangle and of the outer
//! parallel domain of a Reuleaux triangle, plus the auxiliary functions used
//! to bound areas from below.
//!
//! Notation: `delta_*` functions describe the regular disk-triangle with
//! center parameter `d` (three unit disks about an equilateral triangle of
//! side `d`, `1 <= d < sqrt(3)`); `delta_ring_*` describe the outer parallel
//! domain of radius `1 - d` of a Reuleaux triangle of width `d`, `0 < d < 1`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI};

use serde::Serialize;

use crate::error::{Error, Result};

const SQRT_3: f64 = 1.732_050_807_568_877_2;
const ARCCOS_CLAMP: f64 = 1e-9;
const INTERVAL_SLACK: f64 = 1e-12;

fn check_triangle_range(d: f64) -> Result<()> {
    if (1.0..SQRT_3).contains(&d) {
        Ok(())
    } else {
        Err(Error::DOutOfRange {
            d,
            range: "[1, sqrt(3))",
        })
    }
}

fn check_ring_range(d: f64) -> Result<()> {
    if d > 0.0 && d < 1.0 {
        Ok(())
    } else {
        Err(Error::DOutOfRange { d, range: "(0, 1)" })
    }
}

/// `(sqrt(3)/2) d - sqrt(1 - d^2/4)`, the half square root of
/// `4 + 2d^2 - 2 sqrt(3) d sqrt(4 - d^2)`.
///
/// That radicand is the square of `sqrt(3) d - sqrt(4 - d^2)`, which is
/// non-negative for `d >= 1`. Expanding it cancels catastrophically near
/// `d = 1` (an error of order 1e-8), so the factored form is used everywhere.
pub fn width_deficit(d: f64) -> Result<f64> {
    check_triangle_range(d)?;
    Ok(0.5 * SQRT_3 * d - (1.0 - 0.25 * d * d).sqrt())
}

/// Inradius `1 - d / sqrt(3)`.
pub fn delta_inradius(d: f64) -> Result<f64> {
    check_triangle_range(d)?;
    Ok(1.0 - d / SQRT_3)
}

/// Minimal width `1 - (1/2) sqrt(4 + 2d^2 - 2 sqrt(3) d sqrt(4 - d^2))`.
pub fn delta_width(d: f64) -> Result<f64> {
    Ok(1.0 - width_deficit(d)?)
}

/// The width formula with the radicand expanded, kept to quantify the
/// cancellation `width_deficit` avoids.
pub fn delta_width_expanded(d: f64) -> Result<f64> {
    check_triangle_range(d)?;
    let radicand = 4.0 + 2.0 * d * d - 2.0 * SQRT_3 * d * (4.0 - d * d).sqrt();
    Ok(1.0 - 0.5 * radicand.max(0.0).sqrt())
}

/// Area `3 arccos(d/2) + (sqrt(3)/4) d^2 - (3/4) d sqrt(4 - d^2) - pi/2`.
pub fn delta_area(d: f64) -> Result<f64> {
    check_triangle_range(d)?;
    Ok(
        3.0 * (0.5 * d).acos() + 0.25 * SQRT_3 * d * d
            - 0.75 * d * (4.0 - d * d).sqrt()
            - FRAC_PI_2,
    )
}

/// The area expression with `(3/2) arccos d` in place of `3 arccos(d/2)`.
///
/// This variant is only defined at `d = 1` within the triangle range, where
/// it evaluates to `-(sqrt(3) + pi)/2` instead of `(pi - sqrt(3))/2`.
pub fn delta_area_misprint(d: f64) -> Result<f64> {
    check_triangle_range(d)?;
    if d > 1.0 {
        return Err(Error::NumericalDomainViolation {
            what: "arccos(d)",
            value: d,
        });
    }
    Ok(1.5 * d.acos() + 0.25 * SQRT_3 * d * d - 0.75 * d * (4.0 - d * d).sqrt() - FRAC_PI_2)
}

/// Perimeter `2 pi - 6 arcsin(d/2)`.
pub fn delta_perimeter(d: f64) -> Result<f64> {
    check_triangle_range(d)?;
    Ok(2.0 * PI - 6.0 * (0.5 * d).asin())
}

/// Diameter of the dual `1 + (1/2) sqrt(4 + 2d^2 - 2 sqrt(3) d sqrt(4 - d^2))`.
pub fn delta_dual_diameter(d: f64) -> Result<f64> {
    Ok(1.0 + width_deficit(d)?)
}

/// Length `d cos(alpha) - sqrt(1 - d^2 sin^2(alpha)) + 1` of the segment from
/// an apex to the midpoint of the opposite side arc, for an isosceles
/// configuration with half apex angle `alpha`.
pub fn f_alpha(d: f64, alpha: f64) -> Result<f64> {
    check_triangle_range(d)?;
    if !(0.0..=FRAC_PI_6 + 1e-15).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let s = d * alpha.sin();
    Ok(d * alpha.cos() - (1.0 - s * s).sqrt() + 1.0)
}

/// Admissible incircle radii `[delta_inradius(d), delta_width(d) / 2]`.
pub fn f_bound_interval(d: f64) -> Result<(f64, f64)> {
    Ok((delta_inradius(d)?, 0.5 * delta_width(d)?))
}

fn clamped_acos(arg: f64, what: &'static str) -> Result<f64> {
    if !arg.is_finite() || arg.abs() > 1.0 + ARCCOS_CLAMP {
        return Err(Error::NumericalDomainViolation { what, value: arg });
    }
    Ok(arg.clamp(-1.0, 1.0).acos())
}

/// Lower bound `F(d, x)` on the area of a disk-polygon whose incircle has
/// radius `x` and touches the boundary at three points surrounding its
/// center: the incircle plus three caps reaching distance `w(d) - x`.
pub fn f_bound(d: f64, x: f64) -> Result<f64> {
    let (lo, hi) = f_bound_interval(d)?;
    if !(x >= lo - INTERVAL_SLACK && x <= hi + INTERVAL_SLACK) {
        return Err(Error::XOutOfInterval { x, lo, hi });
    }
    let y = width_deficit(d)?;
    let u = 1.0 - x;
    let v = 1.0 - x - y;
    let first = clamped_acos(
        (1.0 + 2.0 * u * y - y * y) / (2.0 * u),
        "F_bound first arccos",
    )?;
    let second = clamped_acos(
        (1.0 - u * u - v * v) / (2.0 * u * v),
        "F_bound second arccos",
    )?;
    let radicand = (3.0 - 2.0 * x - y) * (1.0 - 2.0 * x - y) * (1.0 - y * y);
    if radicand < -ARCCOS_CLAMP {
        return Err(Error::NumericalDomainViolation {
            what: "F_bound radicand",
            value: radicand,
        });
    }
    Ok(PI * x * x + 3.0 * first - 3.0 * x * x * second - 1.5 * radicand.max(0.0).sqrt())
}

/// Case I lower bound `(pi/4) w(d)^2`: the area of a disk of diameter
/// `delta_width(d)`.
pub fn case1_lower_bound(d: f64) -> Result<f64> {
    let w = delta_width(d)?;
    Ok(0.25 * PI * w * w)
}

/// Area of the spindle convex hull of a disk of radius `x` and a point at
/// distance `reach` from its center, minus the disk itself.
///
/// The hull is bounded by an arc of the small circle and two unit-circle
/// flanks through the point, each internally tangent to the small circle.
pub fn cap_area(x: f64, reach: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::XOutOfInterval {
            x,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let (lo, hi) = (x, 2.0 - x);
    if !(reach >= lo && reach <= hi) {
        return Err(Error::ReachOutOfRange { reach, lo, hi });
    }
    let u = 1.0 - x;
    // Center of the lower flank circle: at distance u from the disk center
    // and distance 1 from the apex (reach, 0).
    let qx = (reach * reach - 1.0 + u * u) / (2.0 * reach);
    let qy = (u * u - qx * qx).max(0.0).sqrt();
    // The flank touches the small circle opposite its own center.
    let (cos_b, sin_b) = (-qx / u, qy / u);
    let beta = sin_b.atan2(cos_b);
    let chord = (reach - x * cos_b).hypot(x * sin_b);
    let sweep = 2.0 * (0.5 * chord).min(1.0).asin();
    Ok(reach * x * sin_b - x * x * beta + (sweep - sweep.sin()))
}

/// Area and perimeter of a Reuleaux triangle of width `w`.
pub fn reuleaux_measures(w: f64) -> Result<(f64, f64)> {
    if !(w >= 0.0 && w.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "width {w} must be non-negative"
        )));
    }
    Ok((0.5 * (PI - SQRT_3) * w * w, PI * w))
}

/// Steiner formula `a + p rho + pi rho^2` for the outer parallel domain.
pub fn outer_parallel_area(area: f64, perimeter: f64, rho: f64) -> f64 {
    area + perimeter * rho + PI * rho * rho
}

/// Area `(1/2)(pi - sqrt(3)) d^2 - pi d + pi` and perimeter `pi (2 - d)` of
/// the outer parallel domain of radius `1 - d` of a Reuleaux triangle of
/// width `d`.
pub fn delta_ring_measures(d: f64) -> Result<(f64, f64)> {
    check_ring_range(d)?;
    Ok((0.5 * (PI - SQRT_3) * d * d - PI * d + PI, PI * (2.0 - d)))
}

/// Every closed-form measure of the regular disk-triangle at one `d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaProfile {
    pub d: f64,
    pub inradius: f64,
    pub minimal_width: f64,
    pub area: f64,
    pub perimeter: f64,
    pub dual_diameter: f64,
    pub case1_bound: f64,
}

impl DeltaProfile {
    pub fn at(d: f64) -> Result<Self> {
        Ok(Self {
            d,
            inradius: delta_inradius(d)?,
            minimal_width: delta_width(d)?,
            area: delta_area(d)?,
            perimeter: delta_perimeter(d)?,
            dual_diameter: delta_dual_diameter(d)?,
            case1_bound: case1_lower_bound(d)?,
        })
    }

    pub const CSV_HEADER: &'static str =
        "d,inradius,width,area,perimeter,dual_diameter,case1_bound";

    pub fn csv_row(&self) -> String {
        format!(
            "{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12}",
            self.d,
            self.inradius,
            self.minimal_width,
            self.area,
            self.perimeter,
            self.dual_diameter,
            self.case1_bound
        )
    }
}

/// Closed-form area and perimeter of the Reuleaux outer parallel domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RingProfile {
    pub d: f64,
    pub area: f64,
    pub perimeter: f64,
}

impl RingProfile {
    pub fn at(d: f64) -> Result<Self> {
        let (area, perimeter) = delta_ring_measures(d)?;
        Ok(Self { d, area, perimeter })
    }

    pub const CSV_HEADER: &'static str = "d,area,perimeter";

    pub fn csv_row(&self) -> String {
        format!("{:.12},{:.12},{:.12}", self.d, self.area, self.perimeter)
    }
}
