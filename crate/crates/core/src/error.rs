//! Crate-wide error type.

use core::fmt;

/// Errors raised while constructing or evaluating expressions over ℚ(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Inversion of zero or division by the zero element.
    DivisionByZero,
    /// Substitution of a constant that is a pole of the target function.
    CompositionUndefined,
    /// A form was applied to the wrong number of arguments.
    ArityMismatch { expected: usize, got: usize },
    /// `sub(r)` requires a nonconstant substitution target.
    ConstantSubstitution,
    /// `comp(...)` requires at least one part.
    EmptyComposition,
    /// Summands of a form must all share one arity.
    MixedArity { expected: usize, got: usize },
    /// A form needs a positive arity.
    EmptyForm,
    /// Block exponents must have a positive total.
    EmptyBlocks,
    /// Block exponent count must match the arity of the base form.
    BlockCountMismatch { expected: usize, got: usize },
    /// Multiplicative increments must be nonzero.
    ZeroIncrement,
    /// A sample list was empty where at least one point is required.
    EmptySamples,
    /// Not enough sample points for the requested check.
    InsufficientSamples { needed: usize, got: usize },
    /// Interpolation nodes must be pairwise distinct.
    DuplicateNodes,
    /// Interpolation nodes must be nonzero.
    ZeroNode,
    /// Node count must be one more than the degree bound.
    NodeCountMismatch { expected: usize, got: usize },
    /// Independence certification needs at least as many points as maps.
    GridTooSmall { maps: usize, points: usize },
    /// A linear system had no unique solution.
    SingularSystem,
    /// Polarization needs at least one probe point.
    EmptyProbes,
    /// Recovered form values differ across probe base points.
    PolarizationInconsistent,
    /// A scenario runner was handed an empty scenario list.
    EmptyScenarioSet,
    /// The supplied maps failed the independence precondition.
    DependentMaps { rank: usize, required: usize },
    /// The polynomial must have rational coefficients.
    RationalCoefficientsRequired,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::CompositionUndefined => {
                write!(f, "composition undefined: constant substitution hits a pole")
            }
            Error::ArityMismatch { expected, got } => {
                write!(f, "arity mismatch: expected {expected} arguments, got {got}")
            }
            Error::ConstantSubstitution => {
                write!(f, "substitution target must be nonconstant")
            }
            Error::EmptyComposition => write!(f, "composition needs at least one map"),
            Error::EmptyForm => write!(f, "a form needs a positive arity"),
            Error::MixedArity { expected, got } => {
                write!(f, "mixed arities in sum: expected {expected}, got {got}")
            }
            Error::EmptyBlocks => write!(f, "block exponents must have a positive total"),
            Error::BlockCountMismatch { expected, got } => {
                write!(f, "expected {expected} block exponents, got {got}")
            }
            Error::ZeroIncrement => write!(f, "multiplicative increments must be nonzero"),
            Error::EmptySamples => write!(f, "at least one sample point is required"),
            Error::InsufficientSamples { needed, got } => {
                write!(f, "need at least {needed} sample points, got {got}")
            }
            Error::DuplicateNodes => write!(f, "interpolation nodes must be distinct"),
            Error::ZeroNode => write!(f, "interpolation nodes must be nonzero"),
            Error::NodeCountMismatch { expected, got } => {
                write!(f, "expected {expected} interpolation nodes, got {got}")
            }
            Error::GridTooSmall { maps, points } => {
                write!(f, "independence check needs >= {maps} points, got {points}")
            }
            Error::SingularSystem => write!(f, "linear system is singular"),
            Error::EmptyProbes => write!(f, "polarization needs at least one probe"),
            Error::PolarizationInconsistent => {
                write!(f, "recovered values differ across probe base points")
            }
            Error::EmptyScenarioSet => write!(f, "scenario list is empty"),
            Error::DependentMaps { rank, required } => {
                write!(f, "maps are linearly dependent: rank {rank} < {required}")
            }
            Error::RationalCoefficientsRequired => {
                write!(f, "polynomial must have rational coefficients")
            }
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
