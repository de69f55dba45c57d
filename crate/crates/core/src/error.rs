use thiserror::Error;

/// Errors raised by the toolkit. Mathematical outcomes that are expected
/// for some inputs (a functional equation that does not hold, an
/// inadmissible covector) are reported through result types instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent overflow: {0}")]
    Capacity(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("generators are linearly dependent")]
    DependentGenerators,

    #[error("bracket [A{i}, A{j}] lies outside the span of the generators")]
    NotClosed { i: usize, j: usize },

    #[error("generator A{0} does not scale the discriminant (not a relative invariant)")]
    NotRelativeInvariant(usize),

    #[error("infinitesimal character vanishes identically")]
    DegenerateCharacter,

    #[error("dual discriminant vanishes: the dual is not a prehomogeneous determinant")]
    DualDegenerate,

    #[error("invalid quiver: {0}")]
    Quiver(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
