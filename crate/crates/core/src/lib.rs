//! Disk-polygons: intersections of finitely many closed unit disks.
//!
//! The crate builds the boundary of such an intersection, measures it
//! (area, perimeter, inradius, circumradius, minimal width, diameter),
//! forms duals and spindle convex hulls, evaluates the closed-form measures
//! of the regular disk-triangle, and runs randomized checks and extremal
//! searches over families with a bounded center parameter.

pub mod closed_forms;
pub mod duality;
pub mod error;
pub mod geometry;
pub mod measures;
pub mod verification;

pub use error::{Error, Result};
pub use geometry::{Arc, Circle, DiskPolygon, Membership, Point, Tolerance};
pub use measures::MeasureReport;
