use ivalcore::{CInterval, Interval};

use crate::{Error, Result};

/// Boundary samples along each curve for the ξ sup-bound.
const XI_GRID_PTS: usize = 300;
/// Boundary samples for the ∂ψξ sup-bound (tighter near its poles).
const XI_DPSI_GRID_PTS: usize = 500;

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(move |i| if i == n - 1 { hi } else { lo + step * i as f64 })
}

/// Thin samples of the real segment [inf a, sup b], hulled pairwise so the
/// tiles connect.
fn segment_tiles(a: Interval, b: Interval, pts: usize) -> Vec<CInterval> {
    let samples: Vec<CInterval> = linspace(a.inf(), b.sup(), pts)
        .map(|t| CInterval::from_real(Interval::point(t)))
        .collect();
    hull_consecutive(&samples)
}

/// Samples of the Bernstein-stadium boundary c + w·(ρe^{iθ} + e^{−iθ}/ρ)/4,
/// θ over a full turn, hulled pairwise.  The hulls of consecutive samples
/// track the curve itself; the short arcs between samples can bulge outside
/// a hull by about (Δθ)²/8 of the semi-axis, which only loosens how well the
/// grid suprema below track the true boundary suprema — never the validity
/// of the closed-form tail they are combined with.
fn stadium_tiles(
    center: Interval,
    width: Interval,
    rho: Interval,
    pts: usize,
) -> Result<Vec<CInterval>> {
    let theta_hi = Interval::two_pi().sup();
    let mut samples = Vec::with_capacity(pts);
    for t in linspace(0.0, theta_hi, pts) {
        let e_pos = CInterval::new(Interval::ZERO, Interval::point(t)).exp()?;
        let e_neg = e_pos.conj();
        let ellipse = (e_pos * rho + e_neg.checked_div(CInterval::from_real(rho))?)
            * (width / 4);
        samples.push(ellipse + center);
    }
    Ok(hull_consecutive(&samples))
}

fn hull_consecutive(samples: &[CInterval]) -> Vec<CInterval> {
    samples
        .windows(2)
        .map(|w| w[0].hull(w[1]))
        .collect()
}

fn is_unit_point(rho: Interval) -> bool {
    rho.inf() == 1.0 && rho.sup() == 1.0
}

/// Supremum of |f(−i ψ log(q)/2)| over all tile pairs.  Any pole, log-domain
/// failure, or non-finite magnitude inside a tile means the grid cannot
/// certify a bound there.
fn boundary_sup<F>(psi_tiles: &[CInterval], q_tiles: &[CInterval], f: F) -> Result<f64>
where
    F: Fn(CInterval) -> std::result::Result<CInterval, ivalcore::Error>,
{
    let half = Interval::point(0.5);
    let mut best = f64::NEG_INFINITY;
    for &qt in q_tiles {
        let logq = qt.ln().map_err(|_| Error::NaNDetected)?;
        for &pt in psi_tiles {
            let arg = (pt * logq).mul_neg_i() * half;
            let val = f(arg).map_err(|_| Error::NaNDetected)?;
            let mag = val.abs_val().sup();
            if !mag.is_finite() {
                return Err(Error::NaNDetected);
            }
            best = best.max(mag);
        }
    }
    Ok(best)
}

/// Sup-bound for |ωξ| over the product of a ψ-stadium and a q-stadium,
/// sampled with the default grid.
///
/// The ψ-stadium is always the one for the unit reference segment — center
/// 1/2, width 1 — scaled only through ρψ; `a_psi`/`b_psi` are used for the
/// degenerate ρψ = 1 segment and for the decay exponent.  A ρ of exactly 1
/// collapses the corresponding stadium to its real segment.
pub fn xi_sup_bound(
    a_psi: Interval,
    b_psi: Interval,
    rho_psi: Interval,
    a_q: Interval,
    b_q: Interval,
    rho_q: Interval,
    ntilde: u8,
) -> Result<Interval> {
    xi_sup_bound_with_grid(a_psi, b_psi, rho_psi, a_q, b_q, rho_q, ntilde, XI_GRID_PTS)
}

/// [`xi_sup_bound`] with an explicit boundary sample count.
#[allow(clippy::too_many_arguments)]
pub fn xi_sup_bound_with_grid(
    a_psi: Interval,
    b_psi: Interval,
    rho_psi: Interval,
    a_q: Interval,
    b_q: Interval,
    rho_q: Interval,
    ntilde: u8,
    pts: usize,
) -> Result<Interval> {
    assert!(ntilde <= 1, "ntilde must be 0 or 1");
    let psi_tiles = if is_unit_point(rho_psi) {
        segment_tiles(a_psi, b_psi, pts)
    } else {
        stadium_tiles(Interval::point(0.5), Interval::ONE, rho_psi, pts)?
    };
    let q_tiles = if is_unit_point(rho_q) {
        segment_tiles(a_q, b_q, pts)
    } else {
        stadium_tiles((a_q + b_q) / 2, b_q - a_q, rho_q, pts)?
    };
    // cot(π/2 + x) = −tan x on the shifted ray; cot x on the imaginary ray
    let m = if ntilde == 1 {
        boundary_sup(&psi_tiles, &q_tiles, |z| z.tan())?
    } else {
        boundary_sup(&psi_tiles, &q_tiles, |z| z.cot())?
    };

    let reach_psi = (rho_psi + Interval::ONE.checked_div(rho_psi)?) / 4;
    let max_abs_real_psi = (a_psi + b_psi) / 2 + (b_psi - a_psi) * reach_psi;
    let reach_q = (rho_q + Interval::ONE.checked_div(rho_q)?) / 4;
    let max_abs_q = (a_q + b_q) / 2 + (b_q - a_q) * reach_q;

    let gamma = 2 - max_abs_real_psi;
    if gamma.inf() <= 0.0 {
        return Err(Error::GammaNonpositive);
    }
    let qg = max_abs_q.pow(gamma)?;
    let pi = Interval::pi();
    let tail_den = (Interval::ONE - max_abs_q.pow_int(2)) * (Interval::ONE - qg);
    let tail = (8 * pi * qg).checked_div(tail_den)?;
    Ok(pi * m + tail)
}

/// Sup-bound for |∂ψ(ωξ)| over the region, sampled with the default grid.
///
/// The grid supremum is taken as the larger of two boundary sweeps — the
/// q-segment against the ψ-stadium, and the ψ-segment against the q-stadium
/// — because ∂ψξ is analytic in each variable separately and its modulus
/// peaks on one of those boundary slices.
#[allow(clippy::too_many_arguments)]
pub fn xi_dpsi_sup_bound(
    abs_q: Interval,
    min_abs_q: Interval,
    a_q: Interval,
    b_q: Interval,
    max_real_psi: Interval,
    rho_q: Interval,
    rho_psi: Interval,
    a_psi: Interval,
    b_psi: Interval,
    ntilde: u8,
) -> Result<Interval> {
    xi_dpsi_sup_bound_with_grid(
        abs_q,
        min_abs_q,
        a_q,
        b_q,
        max_real_psi,
        rho_q,
        rho_psi,
        a_psi,
        b_psi,
        ntilde,
        XI_DPSI_GRID_PTS,
    )
}

/// [`xi_dpsi_sup_bound`] with an explicit boundary sample count.
#[allow(clippy::too_many_arguments)]
pub fn xi_dpsi_sup_bound_with_grid(
    abs_q: Interval,
    min_abs_q: Interval,
    a_q: Interval,
    b_q: Interval,
    max_real_psi: Interval,
    rho_q: Interval,
    rho_psi: Interval,
    a_psi: Interval,
    b_psi: Interval,
    ntilde: u8,
    pts: usize,
) -> Result<Interval> {
    assert!(ntilde <= 1, "ntilde must be 0 or 1");
    let gamma = 2 - max_real_psi;
    if gamma.inf() <= 0.0 {
        return Err(Error::GammaNonpositive);
    }
    let qg = abs_q.pow(gamma)?;

    let psi_stadium = stadium_tiles((a_psi + b_psi) / 2, b_psi - a_psi, rho_psi, pts)?;
    let q_segment = segment_tiles(a_q, b_q, pts);
    let psi_segment = segment_tiles(a_psi, b_psi, pts);
    let q_stadium = stadium_tiles((a_q + b_q) / 2, b_q - a_q, rho_q, pts)?;

    // sec(π/2 + x) = −csc x pairs with the tan branch above; csc with cot
    let sup_of = |psi_tiles: &[CInterval], q_tiles: &[CInterval]| {
        if ntilde == 1 {
            boundary_sup(psi_tiles, q_tiles, |z| z.sec())
        } else {
            boundary_sup(psi_tiles, q_tiles, |z| z.csc())
        }
    };
    let temp_bd = sup_of(&psi_stadium, &q_segment)?.max(sup_of(&psi_segment, &q_stadium)?);

    let one = Interval::ONE;
    let series = (2 * one.checked_div(one - abs_q.pow_int(2))?)
        * qg.checked_div((one - qg).pow_int(2))?;
    let sq = Interval::point(temp_bd).pow_int(2) / 4;
    let scale = 2 * min_abs_q.ln()?.abs_val() * Interval::pi();
    Ok(scale * (series + sq))
}

/// Closed-form sup-bound on the ñ = 1 ray for the cotangent-plus-series
/// bracket — the quantity that ξ doubles and rotates, so half of |ωξ| —
/// over the unit reference ψ-stadium.  Valid for stadium radii below
/// 3 + 2√2, where the decay exponent Q below stays negative.
///
/// `max_tan` must dominate |tan(−iψ log q/2)| over the region; the caller
/// supplies it because on this ray tan reduces to a hyperbolic tangent whose
/// supremum is available analytically.
pub fn xi_n1_closed_bound(
    q: Interval,
    rho_psi: Interval,
    max_tan: Interval,
) -> Result<Interval> {
    let rho_cap = 3 + 2 * Interval::point(2.0).sqrt()?;
    if rho_psi.sup() >= rho_cap.inf() {
        return Err(Error::RhoTooLarge);
    }
    let c1 = -(q.ln()?);
    let c2 = (rho_psi + Interval::ONE.checked_div(rho_psi)?) / 2;
    let q_exp = (c1 / 2) * (1 + c2) - 2 * c1;
    let eq = q_exp.exp();
    if eq.sup() >= 1.0 {
        return Err(Error::ExpQNotLessThanOne);
    }
    let pi = Interval::pi();
    let tail_den = (Interval::ONE - q.pow_int(2)) * (Interval::ONE - eq);
    let out = (pi / 2) * max_tan + (2 * pi * eq).checked_div(tail_den)?;
    Ok(Interval::point(out.sup()))
}
