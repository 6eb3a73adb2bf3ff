//! Certified sup-norm bounds for θ₁ and its derivatives on complex strips.

use ivalcore::Interval;

use crate::{Error, Result};

const MAXIT: usize = 1000;

/// Upper bounds `M_j ≥ sup |θ₁^{(j)}(z; q)|`, `j = 0..=m`, valid for every
/// z in the strip `|Im z| ≤ abz` and every nome of magnitude at most
/// `max_abs_q`, where
///
/// `abz = sup(π·max_imag_x + |log max_abs_q|·(1+max_real_psi)) / 2`
///
/// is the largest |Im z| reachable from the x/ψ regions through the
/// substitution `z = π(x+ñ)/2 − i·log(q)(1+ψ)/2`.
///
/// Each series term is bounded by `2(2n+1)^j q^{(n+1/2)²} e^{(2n+1)abz}`; the
/// partial sum runs to N−1 and the tail is dominated by the geometric sum
/// `2 q^{1/4} e^{abz} q^{N²} e^{2N·abz} (2N+1)^j q^N/(1−q)`.  N starts from
/// the closed-form index and is then advanced until the term-ratio test
/// certifies the tail decreasing at the required geometric rate.
pub fn theta1_sup_bounds(
    max_imag_x: Interval,
    max_real_psi: Interval,
    max_abs_q: Interval,
    m: usize,
) -> Result<Vec<f64>> {
    if max_abs_q.sup() >= 1.0 {
        return Err(Error::QTooLarge);
    }
    let q = max_abs_q;
    let qlog = q.ln()?;

    let abz = ((Interval::pi() * max_imag_x + qlog.abs_val() * (1 + max_real_psi)) / 2).sup();
    let abz_iv = Interval::point(abz);

    // Closed-form starting index: m = 0 uses the simple crossover of the
    // exponent; m > 0 the quadratic-discriminant form.
    let mut n = if m == 0 {
        ((-abz_iv / qlog).sup().ceil()).max(0.0) as usize
    } else {
        let c1 = 2 * abz_iv + qlog;
        let disc = c1.pow_int(2) - 8 * qlog * (abz_iv + m as i32);
        (((-c1 - disc) / (4 * qlog)).sup().ceil()).max(0.0) as usize
    };

    // Certify the geometric tail: the term ratio
    // q^{2n+1} e^{2abz} ((2n+3)/(2n+1))^m must be ≤ 1 from N on; it is
    // decreasing in n, so checking at N suffices.
    let e2abz = (2 * abz_iv).exp();
    loop {
        let ratio = q.pow_int(2 * n as u32 + 1)
            * e2abz
            * (Interval::point(2.0 * n as f64 + 3.0) / Interval::point(2.0 * n as f64 + 1.0))
                .pow_int(m as u32);
        if ratio.sup() <= 1.0 {
            break;
        }
        n += 1;
        if n > MAXIT {
            return Err(Error::NonmonotoneTail);
        }
    }
    let n_min = n;

    // Term bound at index k, exponents combined before exponentiation so
    // intermediate magnitudes stay representable.
    let term = |k: usize| -> Interval {
        (Interval::point(k as f64 + 0.5).pow_int(2) * qlog
            + Interval::point(2.0 * k as f64 + 1.0) * abz_iv)
            .exp()
    };

    // Partial sum of the term bounds.  Past the certified index, extra terms
    // only tighten the result (the tail bound stays valid for any larger N),
    // so keep summing until the remaining tail is relatively negligible.
    let one_minus_q = Interval::ONE - q;
    let mut out = vec![Interval::ZERO; m + 1];
    let mut k = 0usize;
    loop {
        let gen = term(k);
        let odd = Interval::point(2.0 * k as f64 + 1.0);
        let mut fac = Interval::ONE;
        for o in out.iter_mut() {
            *o = *o + gen * fac;
            fac = fac * odd;
        }
        k += 1;
        if k >= n_min {
            let tail0 = (term(k) / one_minus_q).sup();
            if tail0 <= 5e-3 * out[0].inf() || k >= MAXIT {
                break;
            }
        }
    }

    // Tail: 2 q^{(N+1/2)²} e^{(2N+1)abz} (2N+1)^j / (1−q)
    let tail_gen = term(k) / one_minus_q;
    let odd_n = Interval::point(2.0 * k as f64 + 1.0);
    let mut fac = Interval::ONE;
    for o in out.iter_mut() {
        *o = (*o + tail_gen * fac) * 2;
        fac = fac * odd_n;
    }

    Ok(out.into_iter().map(|o| o.sup()).collect())
}
