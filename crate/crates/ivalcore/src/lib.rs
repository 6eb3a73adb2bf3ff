//! Outward-rounded interval arithmetic: real intervals and complex rectangles.
//!
//! Every operation returns an *enclosure*: for inputs `X`, `Y` and any points
//! `x ∈ X`, `y ∈ Y`, the exact value `op(x, y)` lies inside `op(X, Y)`. Outward
//! rounding is realized without touching the floating-point environment: each
//! core operation is evaluated in the default round-to-nearest mode and the
//! result is then widened by enough representable steps to cover the core's
//! worst-case rounding error (see [`real::widen`] for the per-function budget).
//!
//! Endpoints are IEEE-754 binary64 and serialize as C99-style hexadecimal
//! float literals for bit-exact round trips (see [`hexfmt`]).

mod complex;
mod err;
pub mod hexfmt;
mod parse;
mod real;

pub use complex::CInterval;
pub use err::Error;
pub use real::Interval;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
