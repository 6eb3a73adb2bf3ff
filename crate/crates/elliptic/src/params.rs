use ivalcore::Interval;

use crate::{ellint, EllKind, Error, Result};

/// Derived wave constants for a modulus interval k.
///
/// Every field encloses the exact value for every point of `k`.
#[derive(Clone, Copy, Debug)]
pub struct WaveParams {
    /// Elliptic modulus.
    pub k: Interval,
    /// K(k), complete elliptic integral of the first kind.
    pub ell_k: Interval,
    /// E(k), second kind.
    pub ell_e: Interval,
    /// K(√(1−k²)), first kind at the complementary modulus.
    pub ell_kc: Interval,
    /// Nome q = exp(−π·Kc/K).
    pub q: Interval,
    /// Wavenumber κ.
    pub kappa: Interval,
    /// Half period ω = π/κ.
    pub omega: Interval,
    /// Conjugate half period ω′ = Kc·π/(K·κ).
    pub omega_prime: Interval,
    /// Spatial period X = 2π/κ.
    pub x_period: Interval,
}

/// Wavenumber from the modulus: κ = (π/K)·√((7/20)·c₁/c₂) with
/// c₁ = 2(k⁴−k²+1)E − (1−k²)(2−k²)K and
/// c₂ = (−2+3k²+3k⁴−2k⁶)E + (k⁶+k⁴−4k²+2)K.
pub(crate) fn kappa_of_k(k: Interval, ell_k: Interval, ell_e: Interval) -> Result<Interval> {
    let one = Interval::ONE;
    let k2 = k.pow_int(2);
    let k4 = k2.pow_int(2);
    let k6 = k2 * k4;
    let c1 = 2 * (k4 - k2 + one) * ell_e - (one - k2) * (2 * one - k2) * ell_k;
    let c2 = (3 * k2 + 3 * k4 - 2 * k6 - 2 * one) * ell_e + (k6 + k4 - 4 * k2 + 2 * one) * ell_k;
    let radicand = (7 * c1).checked_div(20 * c2)?;
    if radicand.inf() <= 0.0 {
        return Err(Error::NonPositiveRadicand);
    }
    Ok(Interval::pi() * radicand.sqrt()? / ell_k)
}

/// Populate all derived constants for k ⊂ (0, 1).
pub fn wave_params(k: Interval) -> Result<WaveParams> {
    if k.inf() <= 0.0 || k.sup() >= 1.0 {
        return Err(Error::DomainError);
    }
    let one = Interval::ONE;
    let ell_k = ellint(k, EllKind::K)?;
    let ell_e = ellint(k, EllKind::E)?;
    let kc_mod = (one - k.pow_int(2)).sqrt()?;
    let ell_kc = ellint(kc_mod, EllKind::K)?;
    let q = (-(Interval::pi() * ell_kc.checked_div(ell_k)?)).exp();
    let kappa = kappa_of_k(k, ell_k, ell_e)?;
    let omega = Interval::pi().checked_div(kappa)?;
    let omega_prime = ell_kc * Interval::pi() / (ell_k * kappa);
    let x_period = Interval::two_pi().checked_div(kappa)?;
    Ok(WaveParams {
        k,
        ell_k,
        ell_e,
        ell_kc,
        q,
        kappa,
        omega,
        omega_prime,
        x_period,
    })
}
