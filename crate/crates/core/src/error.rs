use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("objects live over different fields: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("invalid scalar `{0}`")]
    InvalidScalar(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("arrow `{arrow}` refers to unknown vertex `{vertex}`")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("quiver has a directed cycle and no path length bound was given")]
    CyclicWithoutBound,
    #[error("operation requires an acyclic quiver")]
    CyclicQuiver,
    #[error("characteristic {characteristic} is too small for an algebra of dimension {dim}")]
    UnsupportedCharacteristic { characteristic: u64, dim: usize },
    #[error("algebra is not split over the ground field: {0}")]
    NonSplit(String),
    #[error("modules act from different sides")]
    SideMismatch,
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("algebra is not right non-singular (Z(A_A) has dimension {0})")]
    NotNonSingular(usize),
    #[error("bicommutant has dimension {bicommutant} but the reject subspace has dimension {reject}")]
    BicommutantMismatch { bicommutant: usize, reject: usize },
    #[error("transposed embedding is not a coalgebra morphism: {0}")]
    CoalgebraMorphismFailure(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Mathematical preconditions that a well-formed input may still fail.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedCharacteristic { .. }
                | Error::NonSplit(_)
                | Error::NotNonSingular(_)
                | Error::CyclicQuiver
                | Error::CyclicWithoutBound
                | Error::NotSurjective
                | Error::TooLarge(_)
        )
    }

    /// Failures of a self-check that should never fire on valid input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::BicommutantMismatch { .. } | Error::CoalgebraMorphismFailure(_) | Error::Internal(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
