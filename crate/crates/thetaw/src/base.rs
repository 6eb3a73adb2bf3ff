//! Base theta function θ(z|τ) = Σ_{n∈ℤ} exp(iπτn² + 2πinz) on purely
//! imaginary τ, with certified truncation.
//!
//! This is the classical θ₃(πz, q) with nome q = e^{iπτ}; the convention is
//! chosen so the Weierstrass quotient formulas in [`crate::w_family`] and
//! [`crate::w_invariants`] read exactly like the textbook identities they
//! come from.

use ivalcore::{CInterval, Interval};

use crate::{Error, Result};

const MAXIT: usize = 1000;
const ABSTOL: f64 = 1e-16;

/// Validated purely imaginary τ = i·t, t > 0.  The real part must be the
/// exact zero interval: a fattened real part would make the nome complex,
/// which the lattice routines downstream do not support.
pub(crate) fn imag_part_of_tau(tau: CInterval) -> Result<Interval> {
    if tau.re.inf() != 0.0 || tau.re.sup() != 0.0 {
        return Err(Error::TauNotImaginary);
    }
    if tau.im.inf() <= 0.0 {
        return Err(Error::TauNotUpperHalf);
    }
    Ok(tau.im)
}

/// Enclosure of θ(z|τ) = 1 + 2 Σ_{n≥1} q^{n²} cos(2πnz) with q = e^{−πt},
/// τ = i·t, or of its z-derivative −4π Σ_{n≥1} n q^{n²} sin(2πnz).
///
/// The truncation index N is certified by the term-ratio test
/// `r = q^{2N+3} e^{2π·sup|Im z|} < 1` (with an extra factor 2 covering the
/// n-growth in the derivative case); the tail is then dominated by
/// `term(N+1)/(1−r)` and added as a symmetric complex box.
pub fn base_theta(z: CInterval, tau: CInterval, want_derivative: bool) -> Result<CInterval> {
    let t = imag_part_of_tau(tau)?;
    let q = (-(Interval::pi() * t)).exp();
    if q.sup() >= 1.0 {
        return Err(Error::QTooLarge);
    }

    let lnq = if q.inf() > 0.0 {
        q.ln()?
    } else {
        // Underflowed nome: series is 1 (or 0) to within one term.
        Interval::new(f64::NEG_INFINITY, q.sup().ln())
    };
    let a = (Interval::two_pi() * z.im.abs_val()).sup();
    let a_iv = Interval::point(a);

    // Term magnitude bound: value case 2 q^{n²} e^{2πn|Im z|}; derivative
    // case gains a factor 4πn/2 handled by the caller-side constant and the
    // ratio factor (n+1)/n ≤ 2.
    let n_terms;
    let tail;
    let mut n = 0usize;
    loop {
        n += 1;
        if n > MAXIT {
            return Err(Error::TailBoundFailure);
        }
        let ratio_expo = Interval::point(2.0 * n as f64 + 3.0) * lnq + a_iv;
        let mut ratio = ratio_expo.exp();
        if want_derivative {
            ratio = ratio * 2;
        }
        if ratio.sup() >= 1.0 {
            continue;
        }
        let np = (n + 1) as f64;
        let mut lead = (Interval::point(np * np) * lnq + Interval::point(np) * a_iv).exp() * 2;
        if want_derivative {
            // with the leading 2 this is the 4πn factor of the term bound
            lead = lead * (Interval::two_pi() * np);
        }
        let t_sup = (lead / (Interval::ONE - ratio)).sup();
        if t_sup <= ABSTOL {
            n_terms = n;
            tail = t_sup;
            break;
        }
    }

    let w = Interval::two_pi() * z; // cos/sin argument step
    let q_sq = q.pow_int(2);
    let mut q_fac = q; // q^(n²) at n = 1
    let mut q_odd = q * q_sq; // q^(2n+1) at n = 1
    let mut acc = if want_derivative {
        CInterval::ZERO
    } else {
        CInterval::ONE
    };
    let mut wn = CInterval::ZERO;
    for n in 1..=n_terms {
        if n > 1 {
            q_fac = q_fac * q_odd;
            q_odd = q_odd * q_sq;
        }
        wn = wn + w;
        if want_derivative {
            let c = -2 * Interval::two_pi() * n as i32 * q_fac;
            acc = acc + wn.sin()? * c;
        } else {
            acc = acc + wn.cos()? * (2 * q_fac);
        }
    }

    let err = Interval::new(-tail, tail);
    Ok(acc + CInterval::new(err, err))
}
