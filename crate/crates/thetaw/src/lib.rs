//! Jacobi θ₁ series with certified truncation, and the Weierstrass function
//! family built on theta quotients.
//!
//! The θ₁ routines come in two parameterizations that the rest of the
//! pipeline consumes:
//!
//! * [`theta_grid_x`] evaluates `f(x) = θ₁(π(x+ñ)/2 − i·log(q)(1+ψ)/2; q)`
//!   and its first `m` x-derivatives on a grid of (x, ψ) intervals, carrying
//!   the `(iπ/2)^j` chain-rule factor.
//! * [`theta_grid_z`] evaluates `θ₁^{(j)}(z; q)` as true z-derivatives on a
//!   grid of (z, q) intervals.
//!
//! [`theta1_sup_bounds`] produces certified sup-norm bounds of |θ₁^{(j)}| on
//! complex strips |Im z| ≤ abz, used to size interpolation degrees and error
//! terms elsewhere.
//!
//! The Weierstrass half of the crate ([`w_eta1`], [`w_family`],
//! [`w_invariants`]) works on rectangular lattices with a real half period
//! ω₁ > 0 and a purely imaginary half period ω₂.  ℘ and ℘′ are computed from
//! quotients of the base theta function [`base_theta`], σ and ζ from their
//! classical trigonometric series, with argument reduction into the
//! fundamental cell and the matching quasi-periodicity corrections.
//!
//! Every series is truncated only after a geometric tail bound certifies the
//! remainder; the tail is then added to the result as a symmetric error box,
//! so all returned enclosures are mathematically rigorous.

mod base;
mod bounds;
mod grid;
mod series;
mod weier;

pub use base::base_theta;
pub use bounds::theta1_sup_bounds;
pub use grid::ThetaGridResult;
pub use series::{theta_grid_x, theta_grid_z};
pub use weier::{w_eta1, w_family, w_invariants, WKind, WOpts};

/// Errors from theta/Weierstrass evaluations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Nome magnitude bound reaches 1; no series bound is possible.
    #[error("nome bound is not below 1")]
    QTooLarge,
    /// The tail of the derivative-bound series could not be certified
    /// decreasing within the iteration cap.
    #[error("sup-bound tail could not be certified monotone")]
    NonmonotoneTail,
    /// A truncation-selection loop exceeded its iteration cap.
    #[error("maximum iterations exceeded")]
    MaxIterationsExceeded,
    /// Period ratio ω₂/ω₁ does not lie in the upper half plane.
    #[error("omega_2/omega_1 must lie in the upper half of the complex plane")]
    TauNotUpperHalf,
    /// Period ratio ω₂/ω₁ is not purely imaginary.
    #[error("tau must be purely imaginary")]
    TauNotImaginary,
    /// Nome q = exp(πiω₂/ω₁) is not certified positive.
    #[error("q not positive")]
    QNotPositive,
    /// Nome is not certified below 1.
    #[error("q not less than 1")]
    QNotLessThanOne,
    /// Nome has a nonzero imaginary part.
    #[error("q not real")]
    QNotReal,
    /// Failure to find a convergent error bound for a series tail.
    #[error("failure to find error bound")]
    TailBoundFailure,
    /// Argument reduction into the fundamental cell did not converge.
    #[error("argument reduction exceeded iteration limit")]
    ReductionFailure,
    /// Error propagated from interval arithmetic.
    #[error(transparent)]
    Core(#[from] ivalcore::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
