use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not a usable prime modulus (need a prime p with 2 <= p < 2^31)")]
    NonPrimeModulus(u64),
    #[error("monomial {0} is not present in the monomial index")]
    MonomialNotIndexed(String),
    #[error("combinatorial dimension {delta} is too small: a basis needs more than {delta} elements")]
    DeltaTooSmall { delta: usize },
    #[error("ground set of size {m} exceeds the exhaustive cap of {cap}")]
    GroundSetTooLarge { m: usize, cap: usize },
    #[error("polynomial {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParameters(String),
    #[error("coloring instances need an even n >= 4, got {0}")]
    OddN(usize),
    #[error("coloring instances are degenerate in characteristic 2")]
    CharTwo,
    #[error("parse error at line {line}, column {column}: expected {expected}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("conflicting field directive at line {line}")]
    FieldDirectiveConflict { line: usize },
    #[error("sampling did not converge within {0} rounds")]
    RoundLimit(usize),
    #[error("the leading-term estimate is only an upper bound when the input contains a Groebner basis")]
    GbHypothesisRequired,
    #[error("index {index} is out of range for a system of {len} polynomials")]
    IndexOutOfRange { index: usize, len: usize },
}
