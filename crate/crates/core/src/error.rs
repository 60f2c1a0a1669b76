use thiserror::Error;

/// Errors surfaced by the exact kernels and verification suites.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid substitution: scale factor must be nonzero")]
    InvalidSubstitution,

    /// Division of polynomials left a nonzero remainder where an exact
    /// result was required.
    #[error("non-polynomial result: remainder {remainder} after division by {divisor}")]
    NonPolynomialResult { remainder: String, divisor: String },

    #[error("singular parameter: {0}")]
    SingularParameter(String),

    #[error("divergent limit: numerator degree {num_degree} exceeds denominator degree {den_degree}")]
    DivergentLimit { num_degree: usize, den_degree: usize },

    #[error("evaluation at a pole of the denominator (x = {0})")]
    PoleEvaluation(String),

    #[error("kernel transform degenerate at n = {n}: B_n(rho1) = 0")]
    KernelDegenerate { n: u32 },

    #[error("parameters are not truncated at N = {n}: tau_{{N+1}} = {value}")]
    NotTruncated { n: u32, value: String },

    #[error("inadmissible truncation: {0}")]
    InadmissibleTruncation(String),

    #[error("operator coefficient has a pole on the grid at k = {k} (x_k = {x})")]
    GridPole { k: i64, x: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("casimir element is not scalar; residual terms: {0}")]
    CasimirNotScalar(String),

    #[error("positivity violated: {0}")]
    Positivity(String),

    #[error("near-singular denominator in floating-point evaluation: {0}")]
    Conditioning(String),

    #[error("verification failure: {0}")]
    VerificationFailure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
