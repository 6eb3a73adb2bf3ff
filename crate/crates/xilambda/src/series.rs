use ivalcore::{CInterval, Interval};

use crate::{Error, Result};

/// How far the tail bound must drop before the series is cut off.
const TAIL_TOL: f64 = 1e-17;
/// Cap on the number of tail-shrinking rounds.
const MAX_TERMS: usize = 1000;

/// Evaluation request for ξ on the ray α = ñω + iψω′.
///
/// `psi` is a batch: every entry is evaluated against the same nome, sharing
/// the series length and tail bound.
#[derive(Clone, Debug)]
pub struct XiArgs {
    /// Nome q ∈ (0, 1).
    pub q: Interval,
    /// Offsets along the imaginary period, each inside [0, 1].  For ñ = 0
    /// the entries must exclude 0 (ξ has a pole at the lattice point).
    pub psi: Vec<Interval>,
    /// Ray selector: 0 for α on the imaginary axis, 1 for α through ω.
    pub ntilde: u8,
}

impl XiArgs {
    fn validate(&self) {
        assert!(self.ntilde <= 1, "ntilde must be 0 or 1");
        assert!(
            self.q.inf() > 0.0 && self.q.sup() < 1.0,
            "nome must lie strictly inside (0,1)"
        );
    }
}

/// Series length so that the tail of Σ q^{2k}/(1−q^{2k})·sin(k(πñ − iψ log q))
/// is below `TAIL_TOL`: the k-th term is dominated by q₀^k/(1−q^{2k}) with
/// q₀ = q^{2−ψ₀}, giving tail ≤ q₀^{N+1}/((1−q^{2(N+1)})(1−q₀)).
fn xi_terms(q: Interval, q0: Interval) -> Result<(usize, f64)> {
    let one = Interval::ONE;
    let mut n = 0usize;
    loop {
        n += 1;
        if n > MAX_TERMS {
            return Err(Error::MaxIterationsExceeded);
        }
        let np1 = (n + 1) as u32;
        let den = (one - q.pow_int(2 * np1)) * (one - q0);
        let err = q0.pow_int(np1).checked_div(den)?.sup();
        if err <= TAIL_TOL {
            return Ok((n, err));
        }
    }
}

/// ωξ(ñω + iψω′) for every ψ entry.
///
/// Cotangent of the half-argument plus a Lambert-type sine series in the
/// nome; the truncation error enters as a complex box before the final
/// scaling, so the returned enclosures are genuine.
pub fn xi_omega(args: &XiArgs) -> Result<Vec<CInterval>> {
    args.validate();
    let q = args.q;
    let psi0 = args.psi.iter().map(|p| p.sup()).fold(f64::NEG_INFINITY, f64::max);
    let q0 = q.pow(Interval::point(2.0 - psi0))?.abs_val();
    let (n_terms, err) = xi_terms(q, q0)?;

    let logq = q.ln()?;
    let q2 = q * q;
    let pi = Interval::pi();
    let mut out = vec![CInterval::ZERO; args.psi.len()];
    for k in 1..=n_terms as i32 {
        let q2k = q2.pow_int(k as u32);
        let coef = q2k.checked_div(Interval::ONE - q2k)?;
        for (o, &p) in out.iter_mut().zip(&args.psi) {
            // sin(k(πñ − iψ log q))
            let arg = CInterval::new(pi * (k * args.ntilde as i32), -(p * logq) * k);
            *o = *o + arg.sin()? * coef;
        }
    }

    let ebox = CInterval::new(Interval::new(-err, err), Interval::new(-err, err));
    let two_pi = 2 * pi;
    let half_cot_arg_re = pi * args.ntilde as i32 / 2;
    for (o, &p) in out.iter_mut().zip(&args.psi) {
        let cot = CInterval::new(half_cot_arg_re, -(p * logq) / 2).cot()?;
        let with_tail = (*o + ebox) * two_pi + cot * (pi / 2);
        *o = with_tail.mul_i() * Interval::point(2.0);
    }
    Ok(out)
}

/// ∂ψ(ωξ)(ñω + iψω′) for every ψ entry.
///
/// A squared secant (ñ = 1) or cosecant (ñ = 0) of the half-argument plus a
/// Lambert-type series over q^{±kψ}; the tail uses the geometric bounds in
/// the decay exponent 2 − ψ₀:
/// 2(N+1)q₀^{N+1}/((1−q^{2(N+1)})(1−q₀)) + 2q₀^{N+1}/((1−q^{2(N+1)})(1−q₀)²).
pub fn xi_omega_dpsi(args: &XiArgs) -> Result<Vec<CInterval>> {
    args.validate();
    let q = args.q;
    let one = Interval::ONE;
    let psi0 = args.psi.iter().map(|p| p.sup()).fold(f64::NEG_INFINITY, f64::max);
    let q0 = q.pow(Interval::point(2.0 - psi0))?.abs_val();

    let mut n_terms = 0usize;
    let mut err = TAIL_TOL + 1.0;
    while err > TAIL_TOL {
        n_terms += 1;
        if n_terms > MAX_TERMS {
            return Err(Error::MaxIterationsExceeded);
        }
        let np1 = (n_terms + 1) as u32;
        let common = (one - q.pow_int(2 * np1)) * (one - q0);
        let head = (2 * np1 as i32 * q0.pow_int(np1)).checked_div(common)?;
        let tail = (2 * q0.pow_int(np1)).checked_div(common * (one - q0))?;
        err = (head + tail).sup();
    }

    let logq = q.ln()?;
    let q2 = q * q;
    let pi = Interval::pi();
    let mut out = Vec::with_capacity(args.psi.len());
    for &p in &args.psi {
        let mut sum = Interval::ZERO;
        for k in 1..=n_terms as i32 {
            let q2k = q2.pow_int(k as u32);
            let coef = (k * q2k).checked_div(one - q2k)?;
            let powers = q.pow(p * k)? + q.pow(-(p * k))?;
            let term = coef * powers;
            // alternating only on the ñ = 1 ray
            if args.ntilde == 1 && k % 2 == 1 {
                sum = sum - term;
            } else {
                sum = sum + term;
            }
        }
        let ebox = CInterval::new(Interval::new(-err, err), Interval::new(-err, err));
        let series = (CInterval::from_real(sum) + ebox) * (2 * pi * logq);

        // sec²/csc² of iψ log q/2 reduce to hyperbolic squares
        let y = logq * p / 2;
        let lead = -(pi * logq) / 2;
        let trig = if args.ntilde == 0 {
            // 1/sin²(iy) = −1/sinh²(y)
            let s2 = y.sinh().pow_int(2);
            lead.checked_div(-s2).map_err(|_| ivalcore::Error::PoleError)?
        } else {
            // 1/cos²(iy) = 1/cosh²(y)
            lead.checked_div(y.cosh().pow_int(2))?
        };
        out.push(series + CInterval::from_real(trig));
    }
    Ok(out)
}
