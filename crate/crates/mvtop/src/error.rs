//! Engine-wide error type.

use thiserror::Error;

/// Errors raised by the verification engine.
///
/// Mathematical checks that merely come out negative return `false` (or a
/// report with a negative verdict); an `Error` means the instance could not
/// be decided at all, or the input violates a structural precondition.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("variable `{0}` does not occur in the polynomial")]
    VariableAbsent(String),
    #[error("variable names do not match: ({0}, {1}) vs ({2}, {3})")]
    VariableMismatch(String, String, String, String),
    #[error("degree {0} exceeds the factorization cap {1}")]
    DegreeCapExceeded(usize, usize),
    #[error("Newton-Puiseux process failed to separate branches within order {0}")]
    PrecisionExhausted(usize),
    #[error("constant map sends a component into the divisor support")]
    ConstantMapOverSupport,
    #[error("rational map is constant on a component that requires a finite map")]
    ConstantComponent,
    #[error("no rational parametrization in the supported curve classes: {0}")]
    UnsupportedCurve(String),
    #[error("interior of the source meets the target boundary: {0}")]
    InteriorViolation(String),
    #[error("graph projection fails properness at a non-deleted place: {0}")]
    NonProperSource(String),
    #[error("connecting morphism is not an interior open immersion")]
    NotOpenImmersion,
    #[error("cover data does not define an elementary Nisnevich square: {0}")]
    NotNisnevich(String),
    #[error("gluing produced an inadmissible morphism: {0}")]
    GlueInadmissible(String),
    #[error("presheaf table is malformed: {0}")]
    MalformedTable(String),
    #[error("boundary branch requires unimplemented residue-field reasoning: {0}")]
    UnsupportedBoundary(String),
    #[error("no lift exists for the given correspondence pair: {0}")]
    NoLift(String),
    #[error("inputs violate a stated precondition: {0}")]
    InconsistentInput(String),
    #[error("enumeration budget exceeded: {0} candidates")]
    BudgetExceeded(usize),
    #[error("malformed scenario input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
