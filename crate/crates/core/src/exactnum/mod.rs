//! Exact arithmetic building blocks.
//!
//! * [`rat`] — helpers around arbitrary-precision rationals (`num`'s
//!   `BigRational`), always stored reduced with positive denominator.
//! * [`quad`] — [`QuadNum`], elements a + b*sqrt(5) of the real quadratic
//!   field Q(sqrt 5).
//! * [`poly`] — dense univariate polynomials over a generic coefficient
//!   field, with gcd over the rationals via a primitive pseudo-remainder
//!   sequence.
//! * [`ratfun`] — univariate rational functions; reduced and normalized over
//!   the rationals, compared by cross-multiplication.
//! * [`series`] — truncated power series and Laurent series, including the
//!   principal branch square root.
//! * [`mpoly`] — sparse trivariate polynomials and rational functions in the
//!   size variable X and the two counting marks, with partial derivatives and
//!   known-factor cancellation (no general multivariate gcd).
//! * [`dec`] — fixed-scale decimal arithmetic on big integers: sqrt, exp and
//!   pi to a chosen number of digits, used for all decimal output.

pub mod rat;
pub mod quad;
pub mod poly;
pub mod ratfun;
pub mod series;
pub mod mpoly;
pub mod dec;
pub mod roots;

pub use dec::Dec;
pub use mpoly::{MPoly3, MRatFun3, Var3};
pub use poly::Poly;
pub use quad::QuadNum;
pub use rat::Rat;
pub use ratfun::RatFun;
pub use series::{Laurent, Series};

use std::fmt;
use std::ops::{Div, Neg, Sub};

/// Coefficient field for generic polynomial / series arithmetic.
///
/// Implemented by [`Rat`] and [`QuadNum`]. `zero`, `one` and `is_zero` come
/// from the `num` traits. Operations are on owned values; coefficients at
/// this crate's scale are cheap to clone relative to the arithmetic performed
/// on them.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + num::Zero
    + num::One
    + Sub<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;
    /// Exact in-domain square root, if one exists.
    fn sqrt_exact(&self) -> Option<Self>;
}
