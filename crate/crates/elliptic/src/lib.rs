//! Interval enclosures for the elliptic-function layer: the
//! arithmetic–geometric mean, complete elliptic integrals K and E, the nome
//! q(k), the wavenumber κ(k), and the monotonicity/distinctness certificates
//! over the modulus k.
//!
//! Everything operates on outward-rounded intervals from [`ivalcore`], so a
//! returned interval encloses the exact value for every point of the input
//! interval.  K comes from the AGM; E from Carlson's duplication algorithm
//! for the symmetric integral R_D with an explicit remainder enclosure.

mod agm;
mod dk;
mod integral;
mod lemmas;
mod params;

pub use agm::agm;
pub use dk::{dk_chain, DkChain};
pub use integral::{ellint, EllKind};
pub use lemmas::{
    alpha_distinct_check, kappa_sq_monotone_check, monotonicity_grid, q_monotone_check,
};
pub use params::{wave_params, WaveParams};

/// Errors for the elliptic layer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// AGM requires nonnegative inputs.
    #[error("input must be nonnegative")]
    NegativeInput,
    /// Modulus outside the supported range [0, 1).
    #[error("modulus must lie in [0, 1)")]
    DomainError,
    /// The radicand of the wavenumber formula touches zero.
    #[error("wavenumber radicand is not strictly positive")]
    NonPositiveRadicand,
    /// A grid cell produced NaN endpoints.
    #[error("NaN present")]
    NaNDetected,
    /// A monotonicity check needs at least one cell.
    #[error("grid is empty")]
    EmptyGrid,
    #[error(transparent)]
    Core(#[from] ivalcore::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
