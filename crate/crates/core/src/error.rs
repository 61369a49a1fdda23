use thiserror::Error;

/// Errors raised while constructing or measuring disk-polygons.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no centers given")]
    EmptyInput,
    #[error("coordinate is not a finite number")]
    NonFiniteCoordinate,
    #[error("intersection has empty interior: {0}")]
    DegenerateIntersection(String),
    #[error("center parameter {0} is not below sqrt(3)")]
    CenterParameterOutOfRange(f64),
    #[error("point set diameter {0} is not below sqrt(3)")]
    DiameterTooLarge(f64),
    #[error("disk-polygon has no vertices, its dual is undefined")]
    NoVertices,
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("d = {d} outside the admissible range {range}")]
    DOutOfRange { d: f64, range: &'static str },
    #[error("alpha = {0} outside [0, pi/6]")]
    AlphaOutOfRange(f64),
    #[error("x = {x} outside [{lo}, {hi}]")]
    XOutOfInterval { x: f64, lo: f64, hi: f64 },
    #[error("reach = {reach} outside [{lo}, {hi}]")]
    ReachOutOfRange { reach: f64, lo: f64, hi: f64 },
    #[error("numerical domain violation in {what}: {value}")]
    NumericalDomainViolation { what: &'static str, value: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI error object.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyInput => "empty_input",
            Error::NonFiniteCoordinate => "non_finite_coordinate",
            Error::DegenerateIntersection(_) => "degenerate_intersection",
            Error::CenterParameterOutOfRange(_) => "center_parameter_out_of_range",
            Error::DiameterTooLarge(_) => "diameter_too_large",
            Error::NoVertices => "no_vertices",
            Error::InvalidTolerance(_) => "invalid_tolerance",
            Error::DOutOfRange { .. } => "d_out_of_range",
            Error::AlphaOutOfRange(_) => "alpha_out_of_range",
            Error::XOutOfInterval { .. } => "x_out_of_interval",
            Error::ReachOutOfRange { .. } => "reach_out_of_range",
            Error::NumericalDomainViolation { .. } => "numerical_domain_violation",
            Error::InvalidConfig(_) => "invalid_config",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
