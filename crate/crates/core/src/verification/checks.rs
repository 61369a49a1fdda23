use crate::closed_forms::{delta_area, delta_inradius, delta_ring_measures, delta_width};
use crate::duality::{constant_width_defect, dual, involution_defect};
use crate::error::{Error, Result};
use crate::geometry::{DiskPolygon, Tolerance};
use crate::measures::{area, circumradius, diameter, inradius, width_by_support};

use super::{instance_digest, CheckKind, CheckResult};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Directions sampled when checking that `D + D*` has constant width 2.
pub const IDENTITY_DIRECTIONS: usize = 360;

/// Vertex-distance tolerance for the congruence test that backs the
/// equality case of the area inequality. Area grows linearly away from the
/// minimizer, so an area within `eps_check` of the bound pins the vertices
/// only to a comparable order, not to `eps_geom`.
pub const CONGRUENCE_TOLERANCE: f64 = 1e-4;

/// Family parameter for the `[1, sqrt(3))` statements: the realized center
/// parameter, lifted to 1 when it falls short (a polygon with parameter
/// below 1 also belongs to the family with parameter 1).
fn triangle_family(poly: &DiskPolygon, d: Option<f64>, tol: &Tolerance) -> Result<f64> {
    let realized = poly.surviving_parameter();
    let d = match d {
        Some(d) => {
            if d < realized - tol.eps_geom {
                return Err(Error::InvalidConfig(format!(
                    "center parameter {realized} exceeds the family parameter {d}"
                )));
            }
            d.max(realized)
        }
        None if realized >= 1.0 - tol.eps_geom => realized.max(1.0),
        None => {
            return Err(Error::DOutOfRange {
                d: realized,
                range: "[1, sqrt(3))",
            })
        }
    };
    if !(1.0..SQRT_3).contains(&d) {
        return Err(Error::DOutOfRange {
            d,
            range: "[1, sqrt(3))",
        });
    }
    Ok(d)
}

/// Inradius is at least that of the regular disk-triangle.
pub fn check_lemma1(poly: &DiskPolygon, tol: &Tolerance) -> Result<CheckResult> {
    lemma1(poly, triangle_family(poly, None, tol)?, tol)
}

/// As [`check_lemma1`] against an explicit family parameter `d`.
pub fn check_lemma1_for(poly: &DiskPolygon, d: f64, tol: &Tolerance) -> Result<CheckResult> {
    lemma1(poly, triangle_family(poly, Some(d), tol)?, tol)
}

fn lemma1(poly: &DiskPolygon, d: f64, tol: &Tolerance) -> Result<CheckResult> {
    Ok(CheckResult::new(
        "lemma1_inradius",
        CheckKind::Inequality,
        inradius(poly).0,
        delta_inradius(d)?,
        tol.eps_check,
        &instance_digest(poly.centers()),
    ))
}

/// Minimal width is at least that of the regular disk-triangle.
pub fn check_lemma2(poly: &DiskPolygon, tol: &Tolerance) -> Result<CheckResult> {
    lemma2(poly, triangle_family(poly, None, tol)?, tol)
}

pub fn check_lemma2_for(poly: &DiskPolygon, d: f64, tol: &Tolerance) -> Result<CheckResult> {
    lemma2(poly, triangle_family(poly, Some(d), tol)?, tol)
}

fn lemma2(poly: &DiskPolygon, d: f64, tol: &Tolerance) -> Result<CheckResult> {
    let (width, _) = crate::measures::minimal_width(poly, tol)?;
    Ok(CheckResult::new(
        "lemma2_width",
        CheckKind::Inequality,
        width,
        delta_width(d)?,
        tol.eps_check,
        &instance_digest(poly.centers()),
    ))
}

/// Area is at least that of the regular disk-triangle, with equality only
/// for that triangle.
pub fn check_theorem1(poly: &DiskPolygon, tol: &Tolerance) -> Result<CheckResult> {
    theorem1(poly, triangle_family(poly, None, tol)?, tol)
}

pub fn check_theorem1_for(poly: &DiskPolygon, d: f64, tol: &Tolerance) -> Result<CheckResult> {
    theorem1(poly, triangle_family(poly, Some(d), tol)?, tol)
}

fn theorem1(poly: &DiskPolygon, d: f64, tol: &Tolerance) -> Result<CheckResult> {
    let mut result = CheckResult::new(
        "theorem1_area",
        CheckKind::Inequality,
        area(poly),
        delta_area(d)?,
        tol.eps_check,
        &instance_digest(poly.centers()),
    );
    if result.slack.abs() <= tol.eps_check {
        let congruent = is_congruent_to_regular_triangle(poly, d, CONGRUENCE_TOLERANCE);
        result.equality = Some(congruent);
        result.pass &= congruent;
    }
    Ok(result)
}

/// Whether `poly` has three vertices at the pairwise distances of the
/// regular disk-triangle with parameter `d`.
pub fn is_congruent_to_regular_triangle(poly: &DiskPolygon, d: f64, eps: f64) -> bool {
    let v = poly.vertices();
    if v.len() != 3 {
        return false;
    }
    let side = SQRT_3 * (1.0 - 0.25 * d * d).sqrt() - 0.5 * d;
    [(0, 1), (1, 2), (0, 2)]
        .iter()
        .all(|&(i, j)| (v[i].distance(v[j]) - side).abs() <= eps)
}

/// Area strictly exceeds that of the Reuleaux outer parallel domain, for
/// center parameters in `(0, 1)`.
pub fn check_theorem2(poly: &DiskPolygon, tol: &Tolerance) -> Result<CheckResult> {
    theorem2(poly, poly.surviving_parameter(), tol)
}

pub fn check_theorem2_for(poly: &DiskPolygon, d: f64, tol: &Tolerance) -> Result<CheckResult> {
    let realized = poly.surviving_parameter();
    if d < realized - tol.eps_geom {
        return Err(Error::InvalidConfig(format!(
            "center parameter {realized} exceeds the family parameter {d}"
        )));
    }
    theorem2(poly, d, tol)
}

fn theorem2(poly: &DiskPolygon, d: f64, tol: &Tolerance) -> Result<CheckResult> {
    let (ring_area, _) = delta_ring_measures(d)?;
    Ok(CheckResult::new(
        "theorem2_area",
        CheckKind::StrictInequality,
        area(poly),
        ring_area,
        tol.eps_check,
        &instance_digest(poly.centers()),
    ))
}

/// Duality identities for one instance:
/// `r(D) + R(D*) = 1`, `w(D) + diam(D*) = 2`, `w(D*) + diam(D) = 2`,
/// constant width 2 of `D + D*`, and the circumradius bound
/// `R(D*) <= d / sqrt(3)`.
///
/// Widths here come from the support function, independent of the diameter
/// computation they are compared with.
pub fn check_identities(poly: &DiskPolygon, tol: &Tolerance) -> Result<Vec<CheckResult>> {
    let star = dual(poly, tol)?;
    let digest = instance_digest(poly.centers());
    let eps = tol.eps_check;
    let star_radius = circumradius(&star).0;
    let d = poly.surviving_parameter();
    Ok(vec![
        CheckResult::new(
            "sublemma1_in_circum",
            CheckKind::Identity,
            inradius(poly).0 + star_radius,
            1.0,
            eps,
            &digest,
        ),
        CheckResult::new(
            "corollary_width_dual_diameter",
            CheckKind::Identity,
            width_by_support(poly).0 + diameter(&star).0,
            2.0,
            eps,
            &digest,
        ),
        CheckResult::new(
            "corollary_dual_width_diameter",
            CheckKind::Identity,
            width_by_support(&star).0 + diameter(poly).0,
            2.0,
            eps,
            &digest,
        ),
        CheckResult::new(
            "sublemma2_constant_width",
            CheckKind::Identity,
            constant_width_defect(poly, IDENTITY_DIRECTIONS, tol)?,
            0.0,
            eps,
            &digest,
        ),
        CheckResult::new(
            "jung_bound",
            CheckKind::Inequality,
            d / SQRT_3,
            star_radius,
            eps,
            &digest,
        ),
    ])
}

/// Generators of the double dual coincide with the original generators.
pub fn check_involution(poly: &DiskPolygon, tol: &Tolerance) -> Result<CheckResult> {
    Ok(CheckResult::new(
        "involution",
        CheckKind::Identity,
        involution_defect(poly, tol)?,
        0.0,
        tol.eps_geom,
        &instance_digest(poly.centers()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use std::f64::consts::PI;

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

    #[test]
    fn regular_triangle_is_tight() {
        for d in [1.0, 1.2, 1.45, 1.7] {
            let poly = DiskPolygon::regular_triangle(d, &tol()).unwrap();
            let l1 = check_lemma1(&poly, &tol()).unwrap();
            let l2 = check_lemma2(&poly, &tol()).unwrap();
            let t1 = check_theorem1(&poly, &tol()).unwrap();
            for c in [&l1, &l2, &t1] {
                assert!(c.pass && c.slack.abs() < 1e-9, "{c:?}");
            }
            assert_eq!(t1.equality, Some(true));
        }
    }

    #[test]
    fn lens_examples() {
        let l1 = check_lemma1(&lens(1.0), &tol()).unwrap();
        assert!((l1.slack - (0.5 - (1.0 - 1.0 / SQRT_3))).abs() < 1e-12);
        assert!(l1.pass);
        let l2 = check_lemma2(&lens(1.0), &tol()).unwrap();
        assert!(l2.slack.abs() < 1e-12 && l2.pass);
        let t2 = check_theorem2(&lens(0.5), &tol()).unwrap();
        assert!((t2.lhs - 2.152_109_225_029_709).abs() < 1e-12);
        assert!((t2.slack - 0.405_120_167_482_198).abs() < 1e-9);
        assert!(t2.pass);
    }

    #[test]
    fn disk_against_family_one() {
        let disk = DiskPolygon::build(&[Point::ORIGIN], &tol()).unwrap();
        assert!(matches!(
            check_theorem1(&disk, &tol()),
            Err(Error::DOutOfRange { .. })
        ));
        let t1 = check_theorem1_for(&disk, 1.0, &tol()).unwrap();
        assert!((t1.slack - (PI - 0.5 * (PI - SQRT_3))).abs() < 1e-12);
        assert!(t1.pass && t1.equality.is_none());
        assert!(matches!(
            check_theorem2(&disk, &tol()),
            Err(Error::DOutOfRange { .. })
        ));
    }

    #[test]
    fn family_parameter_must_cover_instance() {
        let poly = DiskPolygon::regular_triangle(1.4, &tol()).unwrap();
        assert!(matches!(
            check_lemma1_for(&poly, 1.2, &tol()),
            Err(Error::InvalidConfig(_))
        ));
        assert!(check_lemma1_for(&poly, 1.5, &tol()).unwrap().slack > 0.0);
        assert!(matches!(
            check_theorem2(&poly, &tol()),
            Err(Error::DOutOfRange { .. })
        ));
    }

    #[test]
    fn non_congruent_near_equality_fails() {
        // a lens is never congruent to a disk-triangle
        assert!(!is_congruent_to_regular_triangle(&lens(1.0), 1.0, 1e-4));
        let poly = DiskPolygon::regular_triangle(1.3, &tol()).unwrap();
        assert!(is_congruent_to_regular_triangle(&poly, 1.3, 1e-12));
        assert!(!is_congruent_to_regular_triangle(&poly, 1.31, 1e-4));
    }

    #[test]
    fn identities_hold_on_examples() {
        for poly in [
            DiskPolygon::regular_triangle(1.2, &tol()).unwrap(),
            DiskPolygon::regular_triangle(1.0, &tol()).unwrap(),
            lens(1.0),
            lens(0.3),
        ] {
            for c in check_identities(&poly, &tol()).unwrap() {
                assert!(c.pass, "{c:?}");
            }
            assert!(check_involution(&poly, &tol()).unwrap().pass);
        }
        let ids =
            check_identities(&DiskPolygon::regular_triangle(1.2, &tol()).unwrap(), &tol()).unwrap();
        assert!(ids[0].slack.abs() < 1e-9);
        let ids = check_identities(&lens(1.0), &tol()).unwrap();
        assert!((ids[1].lhs - 2.0).abs() < 1e-9);
    }
}
