use ivalcore::Interval;

use crate::{agm, Error, Result};

/// Which complete elliptic integral [`ellint`] returns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EllKind {
    /// First kind, K(k).
    K,
    /// Second kind, E(k).
    E,
    /// The difference K(k) − E(k), computed directly (no cancellation).
    KMinusE,
}

/// Complete elliptic integral of modulus k ∈ [0, 1).
///
/// K is π/(2·agm(1, √(1−k²))).  E and K−E go through the symmetric Carlson
/// integral: K − E = (k²/3)·R_D(0, 1−k², 1), where R_D is evaluated by
/// duplication with a fifth-order tail polynomial in the deviations X, Y, Z
/// plus the remainder enclosure r = |3ε⁶/(1−ε)^{3/2}|, ε = hull of the
/// deviations.  The duplication loop, like the AGM, runs until the enclosure
/// width stops decreasing.
pub fn ellint(k: Interval, kind: EllKind) -> Result<Interval> {
    if k.inf() < 0.0 || k.sup() >= 1.0 {
        return Err(Error::DomainError);
    }
    let one = Interval::ONE;
    let y0 = one - k.pow_int(2);
    let m = agm(one, clip_nonneg(y0).sqrt()?)?;
    let big_k = Interval::pi().checked_div(2 * m)?;
    if kind == EllKind::K {
        return Ok(big_k);
    }

    // R_D(0, 1−k², 1) by duplication.  First stage: x = 0, z = 1.
    let mut x = Interval::ZERO;
    let mut y = y0;
    let mut z = one;
    let mut lambda = sqrt_prod(x, y)? + sqrt_prod(x, z)? + sqrt_prod(y, z)?;
    let mut sum = (z.sqrt()? * (z + lambda)).checked_recip()?;

    let quarter = Interval::point(0.25);
    let mut scale = quarter; // 4^{-m} for the current stage
    let stage = |x: &mut Interval,
                     y: &mut Interval,
                     z: &mut Interval,
                     lambda: &mut Interval,
                     sum: &mut Interval,
                     scale: Interval|
     -> Result<Interval> {
        *x = (*x + *lambda) / 4;
        *y = (*y + *lambda) / 4;
        *z = (*z + *lambda) / 4;
        *lambda = sqrt_prod(*x, *y)? + sqrt_prod(*x, *z)? + sqrt_prod(*y, *z)?;
        let mu = (*x + *y + 3 * *z) / 5;
        let dx = one - x.checked_div(mu)?;
        let dy = one - y.checked_div(mu)?;
        let dz = one - z.checked_div(mu)?;

        let eps = Interval::ZERO
            .hull(dx.abs_val())
            .hull(dy.abs_val())
            .hull(dz.abs_val());
        let rem_den = pow_3_2(one - eps)?;
        let r = (3 * eps.pow_int(6)).checked_div(rem_den)?.abs_val();

        let s2 = (dx.pow_int(2) + dy.pow_int(2) + 3 * dz.pow_int(2)) / 4;
        let s3 = (dx.pow_int(3) + dy.pow_int(3) + 3 * dz.pow_int(3)) / 6;
        let s4 = (dx.pow_int(4) + dy.pow_int(4) + 3 * dz.pow_int(4)) / 8;
        let s5 = (dx.pow_int(5) + dy.pow_int(5) + 3 * dz.pow_int(5)) / 10;

        let poly = one
            + (Interval::point(3.0) / 7) * s2
            + (Interval::point(1.0) / 3) * s3
            + (Interval::point(3.0) / 22) * s2.pow_int(2)
            + (Interval::point(3.0) / 11) * s4
            + (Interval::point(3.0) / 13) * s2 * s3
            + (Interval::point(3.0) / 13) * s5
            + r;
        let factor = scale * pow_3_2(mu)?.checked_recip()? * poly;
        let rd = 3 * *sum + factor;
        *sum = *sum + scale * (z.sqrt()? * (*z + *lambda)).checked_recip()?;
        Ok(rd)
    };

    let mut rd_new = stage(&mut x, &mut y, &mut z, &mut lambda, &mut sum, scale)?;
    let mut rd_old = Interval::new(rd_new.inf() - 1.0, rd_new.sup() + 1.0);
    while rd_old.width() - rd_new.width() > 0.0 {
        rd_old = rd_new;
        scale = scale * quarter;
        rd_new = stage(&mut x, &mut y, &mut z, &mut lambda, &mut sum, scale)?;
    }

    let k_minus_e = (k.pow_int(2) / 3) * rd_new;
    Ok(match kind {
        EllKind::E => big_k - k_minus_e,
        EllKind::KMinusE => k_minus_e,
        EllKind::K => unreachable!(),
    })
}

/// √(a·b) for intervals that are nonnegative up to outward rounding.
fn sqrt_prod(a: Interval, b: Interval) -> Result<Interval> {
    Ok(clip_nonneg(a * b).sqrt()?)
}

fn clip_nonneg(v: Interval) -> Interval {
    Interval::new(v.inf().max(0.0), v.sup().max(0.0))
}

/// v^{3/2} = v·√v for v ≥ 0.
fn pow_3_2(v: Interval) -> Result<Interval> {
    Ok(v * clip_nonneg(v).sqrt()?)
}
