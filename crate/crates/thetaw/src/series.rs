//! θ₁ series with certified truncation in the two parameterizations used by
//! the verification pipeline.
//!
//! Both routines follow the same scheme: select the truncation index N from
//! an a-priori decreasing-tail condition, sum the first N terms in interval
//! arithmetic, then add the certified geometric tail as a symmetric complex
//! error box.

use ivalcore::{CInterval, Interval};

use crate::{Error, Result, ThetaGridResult};

const TOL: f64 = 1e-17;
const MAXIT: usize = 1000;

/// Multiply by i^p exactly (coordinate swaps, no widening).
#[inline]
pub(crate) fn rot_i(z: CInterval, p: i32) -> CInterval {
    match p.rem_euclid(4) {
        0 => z,
        1 => z.mul_i(),
        2 => -z,
        _ => z.mul_neg_i(),
    }
}

/// Enclosures of `f(x) = θ₁(π(x+ñ)/2 − i·log(q)(1+ψ)/2; q)` and its first
/// `m` x-derivatives on the (x, ψ) grid.
///
/// Writing `v̂ = e^{iπ(x+ñ)/2} q^{(1+ψ)/2}`, the series is
/// `f^{(k)}(x) = −i (iπ/2)^k Σ_{n≥1} (−1)^{n+1} q^{(n−1/2)²} (2n−1)^k
/// (v̂^{2n−1} − (−1)^k v̂^{−(2n−1)})`, truncated after N terms with tail
/// `≤ 2 q^{1/4} (π/2)^m q^{(N+1)²/2} / (1−q)`, valid once the general term
/// is certified below 1 and decreasing.
///
/// `values[i][j][k]` holds order `k` at x-node `i`, ψ-node `j`; the result
/// carries the `(π/2)^k` chain-rule factor of the x parameterization.
pub fn theta_grid_x(
    q: Interval,
    psi: &[Interval],
    x: &[Interval],
    m: usize,
    ntilde: u8,
) -> Result<ThetaGridResult> {
    assert!(ntilde <= 1, "ntilde selects the real half-period shift: 0 or 1");
    assert!(
        q.inf() > 0.0 && q.sup() < 1.0,
        "nome must lie strictly inside (0,1)"
    );

    let logq = q.ln()?;
    let psi0 = psi.iter().map(|p| p.sup()).fold(f64::NEG_INFINITY, f64::max);

    let req1 = (Interval::point(-2.0 * m as f64) / logq).sup();
    let c1 = 2.0 + psi0;
    let q_quarter = q.sqrt()?.sqrt()?;
    let half_pi = Interval::half_pi();
    let c2 = 2 * q_quarter * half_pi.pow_int(m as u32) / (Interval::ONE - q);
    let q_sqrt = q.sqrt()?;

    // Truncation index: grow N until the term at N is certified below 1 and
    // decreasing (the two guards), then until the geometric tail bound meets
    // the tolerance.
    let mut n = 0usize;
    let mut err = f64::INFINITY;
    while err > TOL {
        n += 1;
        if n > MAXIT {
            return Err(Error::MaxIterationsExceeded);
        }
        let nf = n as f64;
        let decreasing =
            (Interval::point(nf) - Interval::point(c1)) * Interval::point(2.0 * nf - 1.0);
        if decreasing.inf() <= req1 {
            continue;
        }
        let expo = Interval::point(nf * nf / 2.0 - nf)
            - Interval::point(2.0 * nf - 1.0) * Interval::point(1.0 + psi0) / 2;
        let g = q.pow(expo)? * Interval::point(2.0 * nf - 1.0).pow_int(m as u32);
        if g.sup() > 1.0 {
            continue;
        }
        err = (c2 * q_sqrt.pow_int(((n + 1) * (n + 1)) as u32)).sup();
    }
    let n_terms = n;

    // Factor v̂ = circ · rad with circ = e^{iπ(x+ñ)/2} on the unit circle and
    // rad = q^{(1+ψ)/2} > 0, so inverse powers of circ are conjugates and
    // inverse powers of rad stay real.
    let circ: Vec<CInterval> = x
        .iter()
        .map(|&xi| {
            let ang = half_pi * (xi + ntilde as i32);
            Ok(CInterval::new(ang.cos()?, ang.sin()?))
        })
        .collect::<Result<_>>()?;
    let rad: Vec<Interval> = psi
        .iter()
        .map(|&p| q.pow((p + 1) / 2))
        .collect::<ivalcore::Result<_>>()?;
    let rad_inv: Vec<Interval> = rad
        .iter()
        .map(|r| r.checked_recip())
        .collect::<ivalcore::Result<_>>()?;

    let nx = x.len();
    let npsi = psi.len();
    let mut out = vec![vec![vec![CInterval::ZERO; m + 1]; npsi]; nx];

    let circ_sq: Vec<CInterval> = circ.iter().map(|c| c.powi(2)).collect();
    let rad_sq: Vec<Interval> = rad.iter().map(|r| r.pow_int(2)).collect();
    let rad_inv_sq: Vec<Interval> = rad_inv.iter().map(|r| r.pow_int(2)).collect();
    let mut circ_p = circ;
    let mut rad_p = rad;
    let mut rad_m = rad_inv;

    let q2 = q.pow_int(2);
    let mut q_fac = q_quarter; // q^((n−1/2)²) at n = 1
    let mut q_step = Interval::ONE; // q^(2(n−1)) at n = 1

    for n in 1..=n_terms {
        if n > 1 {
            q_step = q_step * q2;
            q_fac = q_fac * q_step;
            for (c, s) in circ_p.iter_mut().zip(&circ_sq) {
                *c = *c * *s;
            }
            for (r, s) in rad_p.iter_mut().zip(&rad_sq) {
                *r = *r * *s;
            }
            for (r, s) in rad_m.iter_mut().zip(&rad_inv_sq) {
                *r = *r * *s;
            }
        }
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let odd = Interval::point(2.0 * n as f64 - 1.0);
        // (−1)^{n+1} q^{(n−1/2)²} (2n−1)^k, shared across the grid
        let mut ck = Vec::with_capacity(m + 1);
        let mut acc = q_fac * sign;
        for _ in 0..=m {
            ck.push(acc);
            acc = acc * odd;
        }
        for (i, cp) in circ_p.iter().enumerate() {
            let cm = cp.conj();
            for j in 0..npsi {
                let v_plus = *cp * rad_p[j];
                let v_minus = cm * rad_m[j];
                let even_part = v_plus - v_minus;
                let odd_part = v_plus + v_minus;
                for (k, c) in ck.iter().enumerate() {
                    let t = if k % 2 == 0 { even_part } else { odd_part };
                    out[i][j][k] = out[i][j][k] + t * *c;
                }
            }
        }
    }

    // Apply −i (iπ/2)^k and attach the truncation box; the rotation by
    // i^(k−1) is exact.
    let err_box = CInterval::new(Interval::new(-err, err), Interval::new(-err, err));
    let mut hp_pow = Vec::with_capacity(m + 1);
    let mut acc = Interval::ONE;
    for _ in 0..=m {
        hp_pow.push(acc);
        acc = acc * half_pi;
    }
    for row in &mut out {
        for cell in row.iter_mut() {
            for (k, entry) in cell.iter_mut().enumerate() {
                *entry = rot_i(*entry * hp_pow[k], k as i32 - 1) + err_box;
            }
        }
    }

    Ok(ThetaGridResult {
        values: out,
        n_terms,
        trunc_err: err,
    })
}

/// Enclosures of `θ₁^{(j)}(z; q)` (true z-derivatives) on the (z, q) grid,
/// `j = 0..=m`.
///
/// With `V = e^{iz}` the series is `θ₁^{(j)}(z) = i^{j−1} Σ_{n≥0}
/// (−1)^n q^{(n+1/2)²} (2n+1)^j (V^{2n+1} − (−1)^j V^{−(2n+1)})`.  The
/// truncation index starts at the larger root of the decreasing condition
/// for `f(x) = q₀^{x²+1/4+(2x+1)σ} (2x+1)^m` (σ = −max|Im z| / min|log q|)
/// and grows until the geometric tail bound meets the tolerance.
pub fn theta_grid_z(q: &[Interval], z: &[CInterval], m: usize) -> Result<ThetaGridResult> {
    for qi in q {
        assert!(
            qi.inf() > 0.0 && qi.sup() < 1.0,
            "nome must lie strictly inside (0,1)"
        );
    }

    let max_im = z
        .iter()
        .map(|zi| zi.im.abs_val().sup())
        .fold(0.0, f64::max);
    let mut min_logq = f64::INFINITY;
    for qi in q {
        min_logq = min_logq.min(qi.ln()?.abs_val().inf());
    }
    let sig = -(Interval::point(max_im) / Interval::point(min_logq));
    let q0 = q.iter().map(|qi| qi.sup()).fold(0.0, f64::max);
    let q0_iv = Interval::point(q0);
    let c = Interval::point(m as f64) / q0_iv.ln()?;

    let two_sig_1 = 2 * sig + 1;
    let radicand = two_sig_1.pow_int(2) - 8 * (sig + c);
    let mut n = if radicand.sup() >= 0.0 {
        let rt = Interval::new(radicand.inf().max(0.0), radicand.sup()).sqrt()?;
        ((-two_sig_1 + rt) / 4).sup().ceil().max(0.0) as usize
    } else {
        0
    };
    let mut err = f64::INFINITY;
    while err > TOL {
        n += 1;
        if n > MAXIT {
            return Err(Error::MaxIterationsExceeded);
        }
        let np = (n + 1) as f64;
        let expo = Interval::point(np * np + 0.25) + Interval::point(2.0 * np + 1.0) * sig;
        let err1 = q0_iv.pow(expo)? * Interval::point(2.0 * np + 1.0).pow_int(m as u32);
        let err2 = q0_iv.pow_int((n + 1) as u32) / (Interval::ONE - q0_iv);
        err = (err1 * err2).sup();
    }
    let n_terms = n;

    let nz = z.len();
    let nq = q.len();
    let mut out = vec![vec![vec![CInterval::ZERO; m + 1]; nq]; nz];

    let v: Vec<CInterval> = z
        .iter()
        .map(|zi| zi.mul_i().exp())
        .collect::<ivalcore::Result<_>>()?;
    let v_inv: Vec<CInterval> = v
        .iter()
        .map(|vi| vi.checked_recip())
        .collect::<ivalcore::Result<_>>()?;
    let v_sq: Vec<CInterval> = v.iter().map(|vi| vi.powi(2)).collect();
    let v_inv_sq: Vec<CInterval> = v_inv.iter().map(|vi| vi.powi(2)).collect();
    let mut v_p = v;
    let mut v_m = v_inv;

    // q^((n+1/2)²) per q-node, advanced by q^(2n) between terms
    let mut q_fac: Vec<Interval> = q
        .iter()
        .map(|qi| qi.sqrt().and_then(|s| s.sqrt()))
        .collect::<ivalcore::Result<_>>()?;
    let q_sq: Vec<Interval> = q.iter().map(|qi| qi.pow_int(2)).collect();
    let mut q_step = q_sq.clone();

    for n in 0..=n_terms {
        if n > 0 {
            for ((f, s), q2) in q_fac.iter_mut().zip(q_step.iter_mut()).zip(&q_sq) {
                *f = *f * *s;
                *s = *s * *q2;
            }
            for (p, s) in v_p.iter_mut().zip(&v_sq) {
                *p = *p * *s;
            }
            for (p, s) in v_m.iter_mut().zip(&v_inv_sq) {
                *p = *p * *s;
            }
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let odd = Interval::point(2.0 * n as f64 + 1.0);
        let mut oddp = Vec::with_capacity(m + 1);
        let mut acc = Interval::ONE;
        for _ in 0..=m {
            oddp.push(acc);
            acc = acc * odd;
        }
        for (i, vp) in v_p.iter().enumerate() {
            let vm = v_m[i];
            let even_part = *vp - vm;
            let odd_part = *vp + vm;
            for k in 0..nq {
                let qt = q_fac[k] * sign;
                for (j, op) in oddp.iter().enumerate() {
                    let t = if j % 2 == 0 { even_part } else { odd_part };
                    out[i][k][j] = out[i][k][j] + t * (*op * qt);
                }
            }
        }
    }

    let err_box = CInterval::new(Interval::new(-err, err), Interval::new(-err, err));
    for row in &mut out {
        for cell in row.iter_mut() {
            for (j, entry) in cell.iter_mut().enumerate() {
                *entry = rot_i(*entry, j as i32 - 1) + err_box;
            }
        }
    }

    Ok(ThetaGridResult {
        values: out,
        n_terms,
        trunc_err: err,
    })
}
