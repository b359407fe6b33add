//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the given point")]
    Pole,
    #[error("element has odd powers of v and cannot be specialized at rational q")]
    OddPowersOfV,
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum DiagramError {
    #[error("type mismatch at layer {layer}: {reason}")]
    TypeMismatch { layer: usize, reason: String },
    #[error("categories differ: {0:?} vs {1:?}")]
    CategoryMismatch(crate::diagram::Category, crate::diagram::Category),
    #[error("domain/codomain mismatch in composition")]
    ComposeMismatch,
    #[error("label {0:?} is not legal for category {1:?}")]
    IllegalLabel(crate::diagram::StrandLabel, crate::diagram::Category),
    #[error("no valid phantom placement for this boundary word")]
    NoValidPhantomPlacement,
}

#[derive(Debug, Clone, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Error)]
pub enum FiberError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("so3 data undefined at q with q^2 + q^-2 = 0")]
    UndefinedAtQ,
    #[error("space dimension {0} exceeds the evaluation cap {1}")]
    DimensionCap(usize, usize),
    #[error("trace condition tr(M^T M^-1) does not equal the category target")]
    TraceConditionFailed,
    #[error("generator {0} is not part of category {1:?}")]
    WrongCategory(String, crate::diagram::Category),
    #[error("spec is missing required data: {0}")]
    MissingData(String),
}

impl From<ScalarError> for FiberError {
    fn from(e: ScalarError) -> Self {
        FiberError::Linalg(LinalgError::Scalar(e))
    }
}

#[derive(Debug, Clone, Error)]
pub enum CongruenceError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("eigenvalue pairing failed: {0} (try smaller eps or exact mode)")]
    UnpairedEigenvalues(String),
    #[error("exact canonical form unsupported for this matrix: {0}")]
    ExactUnsupported(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Error)]
pub enum SolutionsError {
    #[error("no solution exists for this category and dimension")]
    NoSolution,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum TrilinearError {
    #[error("tensor must be 3x3x3")]
    BadDims,
    #[error("equivalence inconclusive: matched type-9 cubics with equal j-invariant")]
    Inconclusive,
    #[error("singular point needs an irrational extension not supported exactly")]
    IrrationalSingularPoint,
    #[error("polynomial elimination failed to isolate the solution points")]
    EliminationFailed,
}
