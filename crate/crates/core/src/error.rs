//! Crate-wide error type.
//!
//! Structural invariant violations (impossible states that indicate a bug,
//! like negative series powers failing to cancel in a combination known to be
//! a power series) abort via panic; everything a caller can plausibly trigger
//! with unusual but well-formed input is reported through [`Error`].

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Brute-force enumeration is capped to keep memory and time bounded.
    #[error("enumeration limit exceeded: n = {n} but brute-force enumeration is capped at n <= {max}")]
    EnumerationLimit { n: u64, max: u64 },

    #[error("division by zero in {context}")]
    DivisionByZero { context: &'static str },

    /// A square root was requested of an element that has none in-domain.
    #[error("not a perfect square in the coefficient domain: {context}")]
    NotASquare { context: String },

    /// Series square root needs an invertible (nonzero) constant term.
    #[error("series square root: constant term is zero")]
    ZeroConstantTerm,

    /// Specialization produced a denominator pole outside the expected set.
    #[error("unexpected pole locations: {context}")]
    UnexpectedPoles { context: String },

    /// A value had to lie in Q(sqrt 5) but does not.
    #[error("value is not representable in Q(sqrt 5): {context}")]
    OutsideField { context: String },

    /// Two singularity candidates could not be strictly separated in modulus.
    #[error("dominant singularity tie: {context}")]
    SingularityTie { context: String },

    /// The expansion anchor must be a simple root of the square-free radicand.
    #[error("expansion point is not a simple branch point: {context}")]
    NotSimpleBranchPoint { context: String },

    /// Recurrence leading coefficient vanished inside the unroll range.
    #[error("recurrence leading coefficient vanishes at n = {n}")]
    LeadingCoefficientZero { n: i64 },

    /// The power ansatz does not apply (repeated characteristic root, or an
    /// exponent that is not a half-integer).
    #[error("asymptotic ansatz failure: {context}")]
    AnsatzFailure { context: String },

    /// Expansion arithmetic was asked to combine incompatible heads.
    #[error("incompatible asymptotic expansions: {context}")]
    IncompatibleExpansions { context: String },

    /// Degenerate variance (n <= 4): correlation is undefined at this size.
    #[error("correlation undefined: variance is zero at n = {n}")]
    DegenerateVariance { n: u64 },

    /// Not enough data points / initial values for the requested operation.
    #[error("insufficient data: {context}")]
    InsufficientData { context: String },

    /// Malformed input to a parser (cache file, rational string, ...).
    #[error("parse error: {context}")]
    Parse { context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
