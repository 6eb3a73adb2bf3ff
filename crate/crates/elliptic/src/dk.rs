use ivalcore::Interval;

use crate::params::kappa_of_k;
use crate::{ellint, EllKind, Error, Result};

/// k-derivatives of the wave constants, plus the affine chain factor for a
/// dataset parameterized by a nome window.
#[derive(Clone, Copy, Debug)]
pub struct DkChain {
    /// dq/dk.
    pub q_k: Interval,
    /// dκ/dk.
    pub kappa_k: Interval,
    /// dω/dk = −π·κ′/κ².
    pub omega_k: Interval,
    /// dK/dk.
    pub ell_k_k: Interval,
    /// dKc/dk (Kc = first-kind integral at the complementary modulus).
    pub ell_kc_k: Interval,
    /// d q̃/dq = 2/(b_q − a_q): rescaling onto the dataset's unit window.
    pub qtilde_q: Interval,
}

/// Derivatives with respect to k of q, κ and ω at modulus k ⊂ (0, 1).
///
/// dK/dk and dKc/dk come from the classical closed forms; dκ/dk is the
/// symbolic derivative of κ = π√((7/20)·P/Q)/K expanded over the polynomial
/// coefficient pairs of P and Q (kept in the expanded form to match the
/// certified constant pipeline term by term).
pub fn dk_chain(k: Interval, dataset_q_range: (Interval, Interval)) -> Result<DkChain> {
    if k.inf() <= 0.0 || k.sup() >= 1.0 {
        return Err(Error::DomainError);
    }
    let one = Interval::ONE;
    let pi = Interval::pi();

    let big_k = ellint(k, EllKind::K)?;
    let e = ellint(k, EllKind::E)?;
    let sqk = (one - k.pow_int(2)).sqrt()?;
    let r = ellint(sqk, EllKind::K)?;
    let t = ellint(sqk, EllKind::E)?;

    let ell_k_k = -(big_k.checked_div(k)?) + e.checked_div(k * (one - k.pow_int(2)))?;
    let ell_kc_k = -k
        * (-(r.checked_div(sqk)?) + t.checked_div(k.pow_int(2) * sqk)?).checked_div(sqk)?;
    let q_k = (-(pi * ell_kc_k.checked_div(big_k)?)
        + pi * ell_k_k * r.checked_div(big_k.pow_int(2))?)
        * (-(pi * r.checked_div(big_k)?)).exp();

    let kappa = kappa_of_k(k, big_k, e)?;

    let k2 = k.pow_int(2);
    let k3 = k * k2;
    let k4 = k2.pow_int(2);
    let k5 = k * k4;
    let k6 = k2 * k4;

    let p = e * (2 * k4 - 2 * k2 + 2 * one) + big_k * (2 * one - k2) * (k2 - one);
    let q = e * (3 * k4 + 3 * k2 - 2 * k6 - 2 * one) + big_k * (k6 + k4 - 4 * k2 + 2 * one);
    let radicand = p.checked_div(q)?;
    if radicand.inf() <= 0.0 {
        return Err(Error::NonPositiveRadicand);
    }
    let s = radicand.sqrt()?;
    let kp = e.checked_div(k * (one - k2))? - big_k.checked_div(k)?;

    let t1 = -(e * (12 * k3 + 6 * k - 12 * k5)) - big_k * (6 * k5 + 4 * k3 - 8 * k)
        - kp * (k6 + k4 - 4 * k2 + 2 * one)
        - (e - big_k) * (3 * k4 + 3 * k2 - 2 * k6 - 2 * one).checked_div(k)?;
    let t2 = e * (8 * k3 - 4 * k) + 2 * big_k * k * (2 * one - k2) - 2 * big_k * k * (k2 - one)
        + (2 * one - k2) * (k2 - one) * kp
        + (e - big_k) * (2 * k4 - 2 * k2 + 2 * one).checked_div(k)?;

    let kap_k = pi * s * q
        * (p * t1.checked_div(2 * q.pow_int(2))? + t2.checked_div(2 * q)?)
            .checked_div(big_k * p)?
        - pi * s * kp.checked_div(big_k.pow_int(2))?;
    let kappa_k = (Interval::point(7.0) / 20).sqrt()? * kap_k;
    let omega_k = -(pi * kappa_k.checked_div(kappa.pow_int(2))?);

    let (a_q, b_q) = dataset_q_range;
    let qtilde_q = Interval::point(2.0).checked_div(b_q - a_q)?;

    Ok(DkChain {
        q_k,
        kappa_k,
        omega_k,
        ell_k_k,
        ell_kc_k,
        qtilde_q,
    })
}
