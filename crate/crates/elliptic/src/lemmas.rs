use ivalcore::Interval;

use crate::{ellint, EllKind, Error, Result};

/// Certify the strict ordering b₁ < b₂ < b₃ of the three branch constants
/// at modulus k: b₁ = k²K/(E−K), b₂ = k²(1−k²)K/((1−k²)K−E), b₃ = (1−k²)K/E.
///
/// Returns false (without error) when the enclosures merely overlap — a wide
/// k weakens the certificate but does not invalidate it.
pub fn alpha_distinct_check(k: Interval) -> Result<bool> {
    let big_k = ellint(k, EllKind::K)?;
    let e = ellint(k, EllKind::E)?;
    let k2 = k.pow_int(2);
    let c1 = Interval::ONE - k2;
    let b1 = (k2 * big_k).checked_div(e - big_k)?;
    let b2 = (k2 * c1 * big_k).checked_div(c1 * big_k - e)?;
    let b3 = (c1 * big_k).checked_div(e)?;
    if b1.sup() >= b2.inf() {
        return Ok(false);
    }
    if b2.sup() >= b3.inf() {
        return Ok(false);
    }
    Ok(true)
}

/// The reference partition of [0.9, 0.9999999]: seven geometric refinement
/// segments, `points` linearly spaced endpoints each, consecutive endpoints
/// paired into cells (segment junctions appear as degenerate cells).
pub fn monotonicity_grid(points: usize) -> Vec<Interval> {
    const EDGES: [f64; 8] = [
        0.9, 0.93, 0.99, 0.999, 0.9999, 0.99999, 0.999999, 0.9999999,
    ];
    let mut nodes = Vec::with_capacity(7 * points);
    for w in EDGES.windows(2) {
        let (a, b) = (w[0], w[1]);
        for i in 0..points {
            nodes.push(a + (b - a) * i as f64 / (points - 1) as f64);
        }
    }
    nodes
        .windows(2)
        .map(|p| Interval::new(p[0].min(p[1]), p[0].max(p[1])))
        .collect()
}

/// Max-of-sup hull of d(κ²)/dk over the grid cells; a result with negative
/// upper end certifies that κ² is strictly decreasing across the grid.
///
/// The derivative uses κ² = (π²/K²)(7/20)(A−B)/(C+D) with
/// A = 2(k⁴−k²+1)E, B = (1−k²)(2−k²)K, C = (−2+3k²+3k⁴−2k⁶)E,
/// D = (k⁶+k⁴−4k²+2)K and K′ = E/(k(1−k²)) − K/k, E′ = (E−K)/k.
pub fn kappa_sq_monotone_check(k_grid: &[Interval]) -> Result<Interval> {
    if k_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let one = Interval::ONE;
    let pi2 = Interval::pi().pow_int(2);
    let c7_20 = Interval::point(7.0) / 20;
    let mut out: Option<Interval> = None;
    for &k in k_grid {
        let big_k = ellint(k, EllKind::K)?;
        let e = ellint(k, EllKind::E)?;
        let k2 = k.pow_int(2);
        let k3 = k * k2;
        let k4 = k2.pow_int(2);
        let k5 = k * k4;
        let k6 = k2 * k4;

        let kp = e.checked_div(k * (one - k2))? - big_k.checked_div(k)?;
        let ep = (e - big_k).checked_div(k)?;

        let a = 2 * (k4 - k2 + one) * e;
        let b = (one - k2) * (2 * one - k2) * big_k;
        let c = (3 * k2 + 3 * k4 - 2 * k6 - 2 * one) * e;
        let d = (k6 + k4 - 4 * k2 + 2 * one) * big_k;

        let ap = 2 * (4 * k3 - 2 * k) * e + 2 * (k4 - k2 + one) * ep;
        let bp = -(2 * k * (2 * one - k2) * big_k) - 2 * k * (one - k2) * big_k
            + (one - k2) * (2 * one - k2) * kp;
        let cp = (6 * k + 12 * k3 - 12 * k5) * e + (3 * k2 + 3 * k4 - 2 * k6 - 2 * one) * ep;
        let dp = (6 * k5 + 4 * k3 - 8 * k) * big_k + (k6 + k4 - 4 * k2 + 2 * one) * kp;

        let cd = c + d;
        let slope = (-(2 * pi2 * kp)).checked_div(big_k.pow_int(3))? * c7_20
            * (a - b).checked_div(cd)?
            + pi2.checked_div(big_k.pow_int(2))? * c7_20
                * (cd * (ap - bp) - (a - b) * (cp + dp)).checked_div(cd.pow_int(2))?;
        if !slope.is_finite() {
            return Err(Error::NaNDetected);
        }
        out = Some(match out {
            Some(acc) => acc.hull(slope),
            None => slope,
        });
    }
    Ok(out.unwrap())
}

/// Max-of-sup hull of the sign quantity T = −2k·K·K₂′ − K₂·K′ over the grid,
/// where K₂, E₂ are the first/second-kind integrals at modulus 1−k² and
/// K₂′, K′ their k-derivatives.  A negative upper end certifies that the
/// nome q(k) is strictly increasing across the grid.
pub fn q_monotone_check(k_grid: &[Interval]) -> Result<Interval> {
    if k_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let one = Interval::ONE;
    let mut out: Option<Interval> = None;
    for &k in k_grid {
        let big_k = ellint(k, EllKind::K)?;
        let e = ellint(k, EllKind::E)?;
        let m2 = one - k.pow_int(2);
        let k2c = ellint(m2, EllKind::K)?;
        let e2c = ellint(m2, EllKind::E)?;

        let kp = e.checked_div(k * (one - k.pow_int(2)))? - big_k.checked_div(k)?;
        let k2p = -(2 * k)
            * (e2c.checked_div(m2 * (one - m2.pow_int(2)))? - k2c.checked_div(m2)?);
        let t = -(2 * k * big_k * k2p) - k2c * kp;
        if !t.is_finite() {
            return Err(Error::NaNDetected);
        }
        out = Some(match out {
            Some(acc) => acc.hull(t),
            None => t,
        });
    }
    Ok(out.unwrap())
}
