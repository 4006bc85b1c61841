//! Error type shared by all computational modules.

use thiserror::Error;

/// Everything that can go wrong while building or analyzing an algebra.
///
/// Variants are grouped by exit-code class used by the CLI:
/// parse errors (1), violated preconditions (2), capacity (3), and
/// internal consistency failures (4).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("ambient dimension {dim} exceeds the configured cap of {cap} columns")]
    CapacityExceeded { dim: usize, cap: usize },

    #[error("operation requires relation degree {expected}, found {found}")]
    WrongN { expected: usize, found: usize },

    #[error("relations are not a valid graded deformation: {0}")]
    NotPBW(String),

    #[error("graded algebra is not Frobenius: pairing degenerate in degree {degree}")]
    NotFrobenius { degree: usize },

    #[error("Koszul dual is not Frobenius of length {length}: {reason}")]
    NotFrobeniusDual { length: usize, reason: String },

    #[error("base algebra is not Calabi-Yau: {0}")]
    BaseNotCY(String),

    #[error("not a Gorenstein candidate: {0}")]
    NotGorensteinCandidate(String),

    #[error("contractions of the potential have dependent leading terms")]
    DegenerateRelations,

    #[error("deformation is incompatible with the top coalgebra component: {0}")]
    DeformationIncompatible(String),

    #[error("compatibility condition fails in tail degree {tail_degree}")]
    NotCompatible { tail_degree: usize },

    #[error("constructed element is not a potential, or does not regenerate the relations")]
    PotentialCheckFailed,

    #[error("candidate map does not preserve the span of the defining relations")]
    AutomorphismCheckFailed,

    #[error("structure constants do not define a graded algebra: {0}")]
    InvalidAlgebra(String),

    #[error("missing required option: {0}")]
    MissingOption(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl AlgebraError {
    /// Process exit code class for the CLI and the C ABI.
    pub fn exit_code(&self) -> i32 {
        use AlgebraError::*;
        match self {
            Parse(_) => 1,
            DimensionMismatch(_)
            | SingularMatrix
            | WrongN { .. }
            | NotPBW(_)
            | NotFrobenius { .. }
            | NotFrobeniusDual { .. }
            | BaseNotCY(_)
            | NotGorensteinCandidate(_)
            | DegenerateRelations
            | DeformationIncompatible(_)
            | NotCompatible { .. }
            | InvalidAlgebra(_)
            | MissingOption(_) => 2,
            CapacityExceeded { .. } => 3,
            PotentialCheckFailed | AutomorphismCheckFailed | Internal(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
