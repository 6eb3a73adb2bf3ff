//! Weierstrass elliptic family (℘, ℘′, σ, ζ, η₁, invariants) on rectangular
//! lattices with real ω₁ > 0 and purely imaginary ω₂.
//!
//! ℘ and ℘′ are evaluated through quotients of [`base_theta`]; σ and ζ use
//! their classical trigonometric series with certified tails.  Arguments are
//! first reduced into the fundamental cell by full-period shifts, and the
//! quasi-periodicity corrections (σ: sign and exponential factor; ζ: lattice
//! translation by 2mη₁ + 2nη₂) restore the value at the original point.

use ivalcore::{CInterval, Interval};

use crate::base::base_theta;
use crate::{Error, Result};

const MAXIT: usize = 1000;
const REDUCE_CAP: usize = 10_000;

/// Member selector for [`w_family`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WKind {
    /// Weierstrass ℘.
    P,
    /// Derivative ℘′.
    PDer,
    /// Weierstrass σ.
    Sigma,
    /// Weierstrass ζ.
    Zeta,
}

/// Options for [`w_family`].
#[derive(Clone, Copy, Debug)]
pub struct WOpts {
    /// Absolute tolerance for the σ/ζ series tails.
    pub abstol: f64,
    /// Precomputed η₁ = ζ(ω₁), to avoid recomputation in hot loops.
    pub eta1: Option<Interval>,
}

impl Default for WOpts {
    fn default() -> Self {
        WOpts {
            abstol: 1e-16,
            eta1: None,
        }
    }
}

/// Validated lattice: ω₁ real positive, ω₂ = i·b with b > 0.  Returns b.
fn lattice_imag(omega1: Interval, omega2: CInterval) -> Result<Interval> {
    assert!(omega1.inf() > 0.0, "real half period must be positive");
    if omega2.re.inf() != 0.0 || omega2.re.sup() != 0.0 {
        return Err(Error::TauNotImaginary);
    }
    if omega2.im.inf() <= 0.0 {
        return Err(Error::TauNotUpperHalf);
    }
    Ok(omega2.im)
}

/// η₁ = ζ(ω₁) = π²/(12ω₁) − (2π²/ω₁) Σ_{k≥1} k q^{2k}/(1−q^{2k}) with the
/// real nome q = exp(πiω₂/ω₁); the tail is bounded by
/// |q^k/(1−q^{2k})|/(1−q) once k q^k < 1 and q(1+q^k) < 1.
pub fn w_eta1(omega1: Interval, omega2: CInterval) -> Result<Interval> {
    assert!(omega1.inf() > 0.0, "real half period must be positive");
    if omega2.re.inf() != 0.0 || omega2.re.sup() != 0.0 {
        // a real component in ω₂ would rotate the nome off the real axis
        return Err(Error::QNotReal);
    }
    let q = (-(Interval::pi() * omega2.im / omega1)).exp();
    if q.inf() <= 0.0 {
        return Err(Error::QNotPositive);
    }
    if q.sup() >= 1.0 {
        return Err(Error::QNotLessThanOne);
    }

    // First find k with k·q^k < 1 and q(1+q^k) < 1, then push k until the
    // tail bound is below tolerance.
    let mut k = 1usize;
    loop {
        k += 1;
        if k > MAXIT {
            return Err(Error::TailBoundFailure);
        }
        let qk = q.pow_int(k as u32);
        if (k as i32 * qk - 1).sup() < 0.0 && (q * (1 + qk) - 1).sup() < 0.0 {
            break;
        }
    }
    let tail = |k: usize| -> Interval {
        ((q.pow_int(k as u32) / (1 - q.pow_int(2 * k as u32))) / (1 - q)).abs_val()
    };
    let mut eb = tail(k);
    while eb.sup() > 1e-16 {
        k += 1;
        if k > MAXIT {
            return Err(Error::TailBoundFailure);
        }
        eb = tail(k);
    }

    let q2 = q.pow_int(2);
    let mut q2j = Interval::ONE;
    let mut sum = Interval::ZERO;
    for j in 1..k {
        q2j = q2j * q2;
        sum = sum + j as i32 * q2j / (1 - q2j);
    }
    let ebs = eb.sup();
    sum = sum + Interval::new(-ebs, ebs);

    let pi2 = Interval::pi().pow_int(2);
    Ok(pi2 / (12 * omega1) - 2 * pi2 * sum / omega1)
}

/// Invariants (g₂, g₃) from the θ₂/θ₃ null values:
/// g₂ = π⁴/(12ω₁⁴)(θ₂⁸ − θ₃⁴θ₂⁴ + θ₃⁸),
/// g₃ = π⁶/(2ω₁)⁶ [(8/27)(θ₂¹² + θ₃¹²) − (4/9)(θ₂⁴ + θ₃⁴)θ₂⁴θ₃⁴].
pub fn w_invariants(omega1: Interval, omega2: CInterval) -> Result<(CInterval, CInterval)> {
    let b = lattice_imag(omega1, omega2)?;
    let t = b / omega1;
    let tau = CInterval::new(Interval::ZERO, t);

    let th3 = base_theta(CInterval::ZERO, tau, false)?;
    let pref = (-(Interval::pi() * t) / 4).exp();
    let th2 = base_theta(CInterval::new(Interval::ZERO, t / 2), tau, false)? * pref;

    let pi4 = Interval::pi().pow_int(4);
    let g2 = (th2.powi(8) - th3.powi(4) * th2.powi(4) + th3.powi(8))
        * (pi4 / (12 * omega1.pow_int(4)));
    let pi6 = Interval::pi().pow_int(6);
    let g3 = ((th2.powi(12) + th3.powi(12)) * (Interval::point(8.0) / 27)
        - (th2.powi(4) + th3.powi(4)) * th2.powi(4) * th3.powi(4) * (Interval::point(4.0) / 9))
        * (pi6 / (2 * omega1).pow_int(6));
    Ok((g2, g3))
}

/// Weierstrass family member at `z`; see [`WKind`].
pub fn w_family(
    z: CInterval,
    omega1: Interval,
    omega2: CInterval,
    which: WKind,
    opts: WOpts,
) -> Result<CInterval> {
    let b = lattice_imag(omega1, omega2)?;
    match which {
        WKind::P => wp(z, omega1, b),
        WKind::PDer => wp_der(z, omega1, b),
        WKind::Sigma => sigma(z, omega1, b, opts),
        WKind::Zeta => zeta(z, omega1, b, opts),
    }
}

/// Shift z by full periods into the cell around the origin, counting shifts.
fn reduce_to_cell(mut z: CInterval, omega1: Interval, b: Interval) -> Result<(CInterval, i32, i32)> {
    let two_w1 = 2 * omega1;
    let two_b = 2 * b;
    let mut m1 = 0i32;
    let mut m2 = 0i32;
    let mut guard = 0usize;
    let step = |g: &mut usize| -> Result<()> {
        *g += 1;
        if *g > REDUCE_CAP {
            return Err(Error::ReductionFailure);
        }
        Ok(())
    };
    while z.re.sup() > omega1.sup() {
        step(&mut guard)?;
        z.re = z.re - two_w1;
        m1 += 1;
    }
    while z.re.inf() < -omega1.inf() {
        step(&mut guard)?;
        z.re = z.re + two_w1;
        m1 -= 1;
    }
    while z.im.sup() > b.sup() {
        step(&mut guard)?;
        z.im = z.im - two_b;
        m2 += 1;
    }
    while z.im.inf() < -b.inf() {
        step(&mut guard)?;
        z.im = z.im + two_b;
        m2 -= 1;
    }
    Ok((z, m1, m2))
}

/// Theta data shared by ℘ and ℘′ at the scaled argument zs = z/(2ω₁).
struct PQuartet {
    v01: CInterval,
    v11: CInterval,
    v00: CInterval,
    v10: CInterval,
    rot: CInterval,
    pref: Interval,
    tau: CInterval,
    t: Interval,
    zs: CInterval,
}

fn p_quartet(zr: CInterval, omega1: Interval, b: Interval) -> Result<PQuartet> {
    let t = b / omega1;
    let tau = CInterval::new(Interval::ZERO, t);
    let inv2w = (2 * omega1).checked_recip()?;
    let zs = zr * inv2w;
    let half = Interval::point(0.5);

    let v01 = base_theta(zs + half, tau, false)?;
    let pref = (-(Interval::pi() * t) / 4).exp();
    let rot = ((zs + half) * Interval::pi()).mul_i().exp()?;
    let shifted = zs + half + CInterval::new(Interval::ZERO, t / 2);
    let v11 = rot * base_theta(shifted, tau, false)? * pref;
    let v00 = base_theta(CInterval::ZERO, tau, false)?;
    let v10 = base_theta(CInterval::new(Interval::ZERO, t / 2), tau, false)? * pref;
    Ok(PQuartet {
        v01,
        v11,
        v00,
        v10,
        rot,
        pref,
        tau,
        t,
        zs,
    })
}

/// ℘(z) = [π²θ₃(0)²θ₂(0)² v01(zs)²/v11(zs)² − (π²/3)(θ₃(0)⁴+θ₂(0)⁴)]/(2ω₁)².
fn wp(z: CInterval, omega1: Interval, b: Interval) -> Result<CInterval> {
    let (zr, _, _) = reduce_to_cell(z, omega1, b)?;
    let q = p_quartet(zr, omega1, b)?;
    let pi2 = Interval::pi().pow_int(2);
    let quot = q.v01.powi(2).checked_div(q.v11.powi(2))?;
    let p = q.v00.powi(2) * q.v10.powi(2) * quot * pi2
        - (q.v00.powi(4) + q.v10.powi(4)) * (pi2 / 3);
    let inv = (2 * omega1).pow_int(2).checked_recip()?;
    Ok(p * inv)
}

/// ℘′(z) = 2π²θ₃(0)²θ₂(0)² (v01·v01′/v11² − v01²·v11′/v11³)/(2ω₁)³.
fn wp_der(z: CInterval, omega1: Interval, b: Interval) -> Result<CInterval> {
    let (zr, _, _) = reduce_to_cell(z, omega1, b)?;
    let q = p_quartet(zr, omega1, b)?;
    let half = Interval::point(0.5);

    let v01d = base_theta(q.zs + half, q.tau, true)?;
    let shifted = q.zs + half + CInterval::new(Interval::ZERO, q.t / 2);
    let v11d = q.v11.mul_i() * Interval::pi() + q.rot * base_theta(shifted, q.tau, true)? * q.pref;

    let a = q.v00.powi(2) * q.v10.powi(2) * Interval::pi().pow_int(2);
    let pz = (q.v01 * v01d).checked_div(q.v11.powi(2))?
        - (q.v01.powi(2) * v11d).checked_div(q.v11.powi(3))?;
    let inv = (2 * omega1).pow_int(3).checked_recip()?;
    Ok(pz * a * (2 * inv))
}

/// ζ(z) = η₁z/ω₁ + (π/2ω₁)cot(πz/2ω₁) + (2π/ω₁) Σ q^{2j}/(1−q^{2j}) sin(jπz/ω₁),
/// with the a± tail bound and quasi-periodicity ζ(z+2mω₁+2nω₂) = ζ(z)+2mη₁+2nη₂.
fn zeta(z: CInterval, omega1: Interval, b: Interval, opts: WOpts) -> Result<CInterval> {
    let (zr, m1, m2) = reduce_to_cell(z, omega1, b)?;
    let t = b / omega1;
    let q = (-(Interval::pi() * t)).exp();
    if q.sup() >= 1.0 {
        return Err(Error::QTooLarge);
    }
    let eta1 = match opts.eta1 {
        Some(e) => e,
        None => w_eta1(omega1, CInterval::new(Interval::ZERO, b))?,
    };

    let pi_ = Interval::pi();
    let abs_im = zr.im.abs_val();
    let a_plus = (pi_ / omega1) * (abs_im - 2 * b);
    let a_minus = (pi_ / omega1) * (-abs_im - 2 * b);
    let ep = a_plus.exp();
    let em = a_minus.exp();
    let con_p = 1 - ep;
    let con_m = 1 - em;
    if con_p.inf() <= 0.0 || con_m.inf() <= 0.0 {
        return Err(Error::TailBoundFailure);
    }

    let mut k = 1usize;
    let mut eb;
    loop {
        k += 1;
        if k > MAXIT {
            return Err(Error::TailBoundFailure);
        }
        let c = Interval::point(0.5) / (1 - q.pow_int(2 * k as u32));
        eb = (c * (ep.pow_int(k as u32) / con_p + em.pow_int(k as u32) / con_m)).abs_val();
        if eb.sup() <= opts.abstol {
            break;
        }
    }

    let ebs = eb.sup();
    let err = Interval::new(-ebs, ebs);
    let mut sum = CInterval::new(err, err);
    let q2 = q.pow_int(2);
    let mut q2j = Interval::ONE;
    let arg = zr * (pi_ / omega1);
    for j in 1..k {
        q2j = q2j * q2;
        sum = sum + (arg * Interval::point(j as f64)).sin()? * (q2j / (1 - q2j));
    }

    let half_arg = zr * (pi_ / (2 * omega1));
    let out = zr * (eta1 / omega1) + half_arg.cot()? * (pi_ / (2 * omega1))
        + sum * (2 * pi_ / omega1);
    if m1 == 0 && m2 == 0 {
        return Ok(out);
    }
    let carry = WOpts {
        abstol: opts.abstol,
        eta1: Some(eta1),
    };
    let eta2 = if m2 != 0 {
        zeta(CInterval::new(Interval::ZERO, b), omega1, b, carry)?
    } else {
        CInterval::ZERO
    };
    Ok(out + CInterval::from_real(eta1 * (2 * m1)) + eta2 * Interval::point(2.0 * m2 as f64))
}

/// σ(z) = (2ω₁/π) sin(πz/2ω₁) exp(η₁z²/2ω₁ + 4Σ (q^{2n}/n(1−q^{2n})) sin²(nπz/2ω₁)),
/// with quasi-periodicity sign (−1)^{m₁m₂+m₁+m₂} and exponential correction.
fn sigma(z: CInterval, omega1: Interval, b: Interval, opts: WOpts) -> Result<CInterval> {
    let (zr, m1, m2) = reduce_to_cell(z, omega1, b)?;
    let t = b / omega1;
    let q = (-(Interval::pi() * t)).exp();
    if q.sup() >= 1.0 {
        return Err(Error::QTooLarge);
    }

    let pi_ = Interval::pi();
    let e_im = pi_ * zr.im / omega1;
    let base = -2 * pi_ * t;
    let c2 = (base - e_im).exp();
    let c3 = (base + e_im).exp();
    let c4 = q.pow_int(2);
    if c2.sup() >= 1.0 || c3.sup() >= 1.0 || c4.sup() >= 1.0 {
        return Err(Error::TailBoundFailure);
    }

    let mut k = 1usize;
    let mut eb;
    loop {
        let c1 = (4 * k as i32 * (1 - q.pow_int(2 * k as u32))).checked_recip()?;
        eb = c1
            * (c2.pow_int(k as u32) / (1 - c2) + 2 * q.pow_int(2 * k as u32) / (1 - c4)
                + c3.pow_int(k as u32) / (1 - c3));
        if eb.sup() <= opts.abstol {
            break;
        }
        k += 1;
        if k > MAXIT {
            return Err(Error::TailBoundFailure);
        }
    }

    let ebs = eb.sup();
    let err = Interval::new(-ebs, ebs);
    let mut sum = CInterval::new(err, err);
    let q2 = q.pow_int(2);
    let mut q2n = Interval::ONE;
    let half_arg = zr * (pi_ / (2 * omega1));
    for n in 1..k {
        q2n = q2n * q2;
        let s = (half_arg * Interval::point(n as f64)).sin()?;
        sum = sum + s.powi(2) * (q2n / (n as i32 * (1 - q2n)));
    }

    let eta1 = match opts.eta1 {
        Some(e) => e,
        None => w_eta1(omega1, CInterval::new(Interval::ZERO, b))?,
    };
    let lg = zr.powi(2) * (eta1 / (2 * omega1)) + sum * Interval::point(4.0);
    let out = half_arg.sin()? * lg.exp()? * (2 * omega1 / pi_);
    if m1 == 0 && m2 == 0 {
        return Ok(out);
    }

    let carry = WOpts {
        abstol: opts.abstol,
        eta1: Some(eta1),
    };
    let eta2 = zeta(CInterval::new(Interval::ZERO, b), omega1, b, carry)?;
    let z_mid = zr + CInterval::new(omega1 * m1, b * m2);
    let lin = CInterval::from_real(eta1 * (2 * m1)) + eta2 * Interval::point(2.0 * m2 as f64);
    let fac = (lin * z_mid).exp()?;
    let sign = if (m1 * m2 + m1 + m2).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    };
    Ok(out * fac * Interval::point(sign))
}
