//! The Floquet exponent ξ along the two period rays, with certified
//! sup-bounds for interpolation.
//!
//! Everything here lives on α = ñω + iψω′ with ñ ∈ {0, 1} and ψ ∈ [0, 1]:
//! [`xi_omega`] and [`xi_omega_dpsi`] evaluate ωξ(α) and its ψ-derivative by
//! Lambert-type trigonometric series in the nome, while the `*_sup_bound`
//! functions produce uniform upper bounds of the same quantities over
//! Bernstein stadium neighbourhoods of the (ψ, q) parameter rectangles —
//! the ingredient that turns pointwise interpolation into certified
//! approximation.  [`lambda_xi_pack`] bundles ξ, its derivatives and the
//! companion λ₀ quotient built from θ₁ grids into the six-vector consumed
//! by the spectral simplicity argument.

mod bounds;
mod pack;
mod series;

pub use bounds::{
    xi_dpsi_sup_bound, xi_dpsi_sup_bound_with_grid, xi_n1_closed_bound, xi_sup_bound,
    xi_sup_bound_with_grid,
};
pub use pack::{lambda_xi_pack, LambdaXi};
pub use series::{xi_omega, xi_omega_dpsi, XiArgs};

/// Errors surfaced by the ξ layer.
#[derive(thiserror::Error, Debug)]
pub enum Error {
    /// Series tail refused to shrink below tolerance within the iteration cap.
    #[error("maximum iterations exceeded")]
    MaxIterationsExceeded,
    /// A trig sample over the stadium grid hit a pole (the reference check
    /// for non-finite grid values).
    #[error("NaN present in stadium grid")]
    NaNDetected,
    /// The decay exponent 2 − Re ψ is not certainly positive, so the
    /// geometric tail bounds do not apply.
    #[error("psi range too large: decay exponent not positive")]
    GammaNonpositive,
    /// The ψ-stadium radius reaches 3 + 2√2, where the closed-form bound's
    /// exponent loses its sign.
    #[error("stadium radius too large for the closed-form bound")]
    RhoTooLarge,
    /// The closed-form tail factor e^Q is not certainly below one.
    #[error("closed-form tail factor not below one")]
    ExpQNotLessThanOne,
    /// A θ₁ quotient denominator could not be bounded away from zero.
    #[error("theta quotient denominator contains zero")]
    DenominatorContainsZero,
    #[error(transparent)]
    Core(#[from] ivalcore::Error),
    #[error(transparent)]
    Theta(#[from] thetaw::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
