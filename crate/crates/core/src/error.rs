use std::fmt;

/// Errors produced by space construction, evaluation, and the geometric
/// decision procedures.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Vector dimension does not match the space dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// A coordinate or parameter is NaN or infinite where finiteness is required.
    NonFinite,
    /// A vector with no coordinates was supplied.
    EmptyVector,
    /// An operation requiring a nonzero vector received (numerically) zero.
    ZeroVector,
    /// A parameter is outside its admissible range.
    InvalidParameter(String),
    /// `builtin_space` was asked for a name it does not know.
    UnknownBuiltin(String),
    /// A gauge boundary failed closure, star-shapedness, or piece checks.
    MalformedBoundary(String),
    /// Polyhedral functionals do not span the dual space (seminorm, not norm).
    DegenerateFunctionals,
    /// An operation requiring unit vectors received one of a different norm.
    NotAUnitVector { norm: f64 },
    /// A bound operation was called on a pair that is not B-orthogonal.
    NotBirkhoffOrthogonal { deficit: f64 },
    /// The segment endpoints handed to the flat-segment construction do not
    /// lie on a common sphere segment.
    SegmentNotOnSphere { midpoint_norm: f64 },
    /// The line-restricted objective violated convexity; the space is not a norm.
    NonConvexObjective { at: f64 },
    /// A probed value dropped below an analytic floor; signals a defect in
    /// the inputs or the implementation.
    EnvelopeViolation { at: f64, value: f64, floor: f64 },
    /// A sign change could not be bracketed (malformed space).
    BracketingFailed,
    /// Basis vectors are (numerically) linearly dependent.
    DependentBasis { sigma_min: f64 },
    /// A basis index is out of range.
    IndexOutOfRange { index: usize, len: usize },
    /// The conjugate-diameter search came back empty, contradicting the
    /// planar Auerbach guarantee; signals a defect in the space or search.
    NoConjugateDiameters,
    /// A space-definition file could not be read or parsed.
    BadSpaceFile(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NonFinite => write!(f, "non-finite value"),
            Error::EmptyVector => write!(f, "vector must have at least one coordinate"),
            Error::ZeroVector => write!(f, "vector must be nonzero"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::UnknownBuiltin(name) => write!(f, "unknown builtin space: {name:?}"),
            Error::MalformedBoundary(msg) => write!(f, "malformed gauge boundary: {msg}"),
            Error::DegenerateFunctionals => {
                write!(f, "polyhedral functionals do not span; seminorm only")
            }
            Error::NotAUnitVector { norm } => {
                write!(f, "expected a unit vector, got norm {norm}")
            }
            Error::NotBirkhoffOrthogonal { deficit } => write!(
                f,
                "pair is not Birkhoff-orthogonal (min deficit {deficit:.3e})"
            ),
            Error::SegmentNotOnSphere { midpoint_norm } => write!(
                f,
                "segment is not on the unit sphere (midpoint norm {midpoint_norm})"
            ),
            Error::NonConvexObjective { at } => write!(
                f,
                "line-restricted norm is not convex near {at}; not a norm"
            ),
            Error::EnvelopeViolation { at, value, floor } => write!(
                f,
                "value {value} at {at} fell below analytic floor {floor}"
            ),
            Error::BracketingFailed => write!(f, "failed to bracket a sign change"),
            Error::DependentBasis { sigma_min } => write!(
                f,
                "basis vectors are linearly dependent (sigma_min {sigma_min:.3e})"
            ),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for {len} basis vectors")
            }
            Error::NoConjugateDiameters => {
                write!(f, "no conjugate diameters found; space or search defect")
            }
            Error::BadSpaceFile(msg) => write!(f, "bad space definition: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
