//! Exact combinatorics and asymptotics of RNA secondary structures, counted
//! jointly by number of hairpins and number of base pairs.
//!
//! The crate is organized in layers:
//!
//! * [`exactnum`] — exact arithmetic: big rationals, the real quadratic field
//!   Q(sqrt 5), dense univariate polynomials, rational functions, truncated
//!   power/Laurent series, sparse trivariate polynomials, and a fixed-scale
//!   decimal type for high-precision numeric output.
//! * [`structures`] — the combinatorial ground truth: brute-force enumeration
//!   of secondary structures, the joint-count dynamic program, power moments,
//!   and exact finite-n moment tables.
//! * [`closedform`] — the algebraic closed form of the joint generating
//!   function, Euler-operator derivatives, and specialization to univariate
//!   radical expressions u1 + v1*sqrt(R0).
//! * [`asymptotics`] — singularity analysis: square-free splits, certified
//!   dominant singularities, local Puiseux expansions, transfer to asymptotic
//!   expansions of coefficients, and the assembled moment asymptotics.
//! * [`prec`] — the recurrence route: minimal polynomials, first-order ODEs,
//!   P-recurrences, exact unrolling, asymptotic basis elements via the power
//!   ansatz, and numeric constant fitting.
//! * [`gaussian`] / [`conjecture`] — bivariate Gaussian mixed moments and the
//!   normality-convergence report comparing exact scaled moments against
//!   their Gaussian targets.

pub mod error;
pub mod exactnum;
pub mod structures;
pub mod closedform;
pub mod asymptotics;
pub mod prec;
pub mod gaussian;
pub mod conjecture;

pub use error::Error;
