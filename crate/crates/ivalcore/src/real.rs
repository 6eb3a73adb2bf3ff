use crate::{Error, Result};

/// A closed real interval `[lo, hi]` with binary64 endpoints.
///
/// Invariants: `lo <= hi` and neither endpoint is NaN. Infinite endpoints are
/// permitted (they mean "unbounded on that side") but never arise in the
/// verification pipeline, which checks its bounds for finiteness.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

/// Outward-widening step counts per core operation.
///
/// `+ - * / sqrt` are correctly rounded by IEEE-754, so the true result lies
/// within half an ulp of the computed one and a single `next_down`/`next_up`
/// step covers it. The libm transcendentals are *not* correctly rounded; the
/// glibc manual's known-maximum-error table lists ≤ 1 ulp on x86-64/aarch64
/// for exp, log, sin, cos, tan, asin, acos and ≤ 2 ulp for sinh/cosh. We
/// widen by (max ulp error + 1) steps, which strictly covers those budgets.
pub(crate) mod widen {
    pub const EXACT_OP: u32 = 1; // + - * / sqrt: correctly rounded
    pub const LIBM1: u32 = 2; // exp log sin cos tan acos: ≤ 1 ulp
    pub const LIBM2: u32 = 3; // sinh cosh: ≤ 2 ulp
}

#[inline]
pub(crate) fn step_down(mut x: f64, steps: u32) -> f64 {
    for _ in 0..steps {
        x = x.next_down();
    }
    x
}

#[inline]
pub(crate) fn step_up(mut x: f64, steps: u32) -> f64 {
    for _ in 0..steps {
        x = x.next_up();
    }
    x
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// New interval from ordered endpoints.
    ///
    /// # Panics
    /// Panics if an endpoint is NaN or `lo > hi`; use [`Interval::try_new`]
    /// for a fallible constructor.
    #[inline]
    pub fn new(lo: f64, hi: f64) -> Interval {
        match Interval::try_new(lo, hi) {
            Ok(v) => v,
            Err(e) => panic!("Interval::new({lo:e}, {hi:e}): {e}"),
        }
    }

    #[inline]
    pub fn try_new(lo: f64, hi: f64) -> Result<Interval> {
        if lo.is_nan() || hi.is_nan() {
            return Err(Error::NaNDetected);
        }
        if lo > hi {
            return Err(Error::ParseError(format!(
                "inverted endpoints [{lo:e}, {hi:e}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    /// Thin (degenerate) interval `[x, x]`.
    #[inline]
    pub fn point(x: f64) -> Interval {
        assert!(!x.is_nan(), "Interval::point(NaN)");
        Interval { lo: x, hi: x }
    }

    /// Interval from midpoint and radius: contains `[m−r, m+r]`.
    #[inline]
    pub fn midrad(m: f64, r: f64) -> Interval {
        assert!(r >= 0.0, "negative radius");
        Interval {
            lo: step_down(m - r, widen::EXACT_OP),
            hi: step_up(m + r, widen::EXACT_OP),
        }
    }

    /// Enclosure of π.
    #[inline]
    pub fn pi() -> Interval {
        // f64 π is below the true value; one step up is above it.
        Interval {
            lo: std::f64::consts::PI,
            hi: std::f64::consts::PI.next_up(),
        }
    }

    /// Enclosure of 2π (exact scaling of the π enclosure).
    #[inline]
    pub fn two_pi() -> Interval {
        let p = Interval::pi();
        Interval { lo: 2.0 * p.lo, hi: 2.0 * p.hi }
    }

    /// Enclosure of π/2 (exact scaling of the π enclosure).
    #[inline]
    pub fn half_pi() -> Interval {
        let p = Interval::pi();
        Interval { lo: 0.5 * p.lo, hi: 0.5 * p.hi }
    }

    #[inline]
    pub fn inf(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn sup(self) -> f64 {
        self.hi
    }

    /// Midpoint, rounded to nearest.
    #[inline]
    pub fn mid(self) -> f64 {
        let m = 0.5 * (self.lo + self.hi);
        if m.is_finite() {
            m
        } else {
            0.5 * self.lo + 0.5 * self.hi
        }
    }

    /// Radius r such that `[mid−r, mid+r] ⊇ self`.
    #[inline]
    pub fn rad(self) -> f64 {
        let m = self.mid();
        step_up((m - self.lo).max(self.hi - m), widen::EXACT_OP)
    }

    /// Upper bound on the diameter `hi − lo`.
    #[inline]
    pub fn width(self) -> f64 {
        step_up(self.hi - self.lo, widen::EXACT_OP)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    #[inline]
    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    #[inline]
    pub fn contains_zero(self) -> bool {
        self.lo <= 0.0 && 0.0 <= self.hi
    }

    #[inline]
    pub fn is_subset_of(self, other: Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Smallest interval containing both operands.
    #[inline]
    pub fn hull(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Intersection, if nonempty.
    #[inline]
    pub fn intersect(self, other: Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// Absolute-value image `{|x| : x ∈ self}`; endpoints are exact.
    #[inline]
    pub fn abs_val(self) -> Interval {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            Interval { lo: -self.hi, hi: -self.lo }
        } else {
            Interval { lo: 0.0, hi: (-self.lo).max(self.hi) }
        }
    }

    /// Largest absolute value attained (magnitude).
    #[inline]
    pub fn mag(self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value attained (mignitude).
    #[inline]
    pub fn mig(self) -> f64 {
        if self.contains_zero() {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    /// Fallible division; see the `Div` impl for the panicking operator.
    #[inline]
    pub fn checked_div(self, rhs: Interval) -> Result<Interval> {
        if rhs.contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for q in [
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ] {
            let q = if q.is_nan() { 0.0 } else { q };
            lo = lo.min(q);
            hi = hi.max(q);
        }
        Ok(Interval {
            lo: step_down(lo, widen::EXACT_OP),
            hi: step_up(hi, widen::EXACT_OP),
        })
    }

    /// Fallible reciprocal.
    #[inline]
    pub fn checked_recip(self) -> Result<Interval> {
        Interval::ONE.checked_div(self)
    }

    /// e^x. Total; overflow saturates to an infinite upper endpoint.
    #[inline]
    pub fn exp(self) -> Interval {
        // e^0 = 1 is exact; pin it only for the degenerate zero interval so
        // that shrinking an input interval can never grow the result
        // (a half-pinned [1, e^h+ulp] would poke out of the unpinned one).
        if self.lo == 0.0 && self.hi == 0.0 {
            return Interval::ONE;
        }
        Interval {
            lo: step_down(self.lo.exp(), widen::LIBM1).max(0.0),
            hi: step_up(self.hi.exp(), widen::LIBM1),
        }
    }

    /// Natural logarithm; requires `inf > 0`.
    pub fn ln(self) -> Result<Interval> {
        if self.lo <= 0.0 {
            return Err(Error::DomainError("log of interval touching (-inf, 0]"));
        }
        Ok(Interval {
            lo: step_down(self.lo.ln(), widen::LIBM1),
            hi: step_up(self.hi.ln(), widen::LIBM1),
        })
    }

    /// Arctangent. Total and monotone.
    #[inline]
    pub fn atan(self) -> Interval {
        Interval {
            lo: step_down(self.lo.atan(), widen::LIBM1),
            hi: step_up(self.hi.atan(), widen::LIBM1),
        }
    }

    /// Square root; requires `inf >= 0`.
    pub fn sqrt(self) -> Result<Interval> {
        if self.lo < 0.0 {
            return Err(Error::DomainError("sqrt of interval with negative part"));
        }
        // sqrt(0) = 0 is exact; elsewhere widen the correctly-rounded result
        Ok(Interval {
            lo: if self.lo == 0.0 {
                0.0
            } else {
                step_down(self.lo.sqrt(), widen::EXACT_OP).max(0.0)
            },
            hi: if self.hi == 0.0 {
                0.0
            } else {
                step_up(self.hi.sqrt(), widen::EXACT_OP)
            },
        })
    }

    /// Hyperbolic sine. Total.
    #[inline]
    pub fn sinh(self) -> Interval {
        Interval {
            lo: step_down(self.lo.sinh(), widen::LIBM2),
            hi: step_up(self.hi.sinh(), widen::LIBM2),
        }
    }

    /// Hyperbolic cosine. Total.
    #[inline]
    pub fn cosh(self) -> Interval {
        let a = self.abs_val();
        Interval {
            lo: step_down(a.lo.cosh(), widen::LIBM2).max(1.0),
            hi: step_up(a.hi.cosh(), widen::LIBM2),
        }
    }

    /// x^n for a nonnegative integer exponent, with even-power tightening.
    ///
    /// Implemented by exact interval binary exponentiation of the monotone
    /// endpoint representatives, so no assumption on `powi`'s accuracy is
    /// needed.
    pub fn pow_int(self, n: u32) -> Interval {
        match n {
            0 => Interval::ONE,
            1 => self,
            _ => {
                if n % 2 == 0 {
                    let a = self.abs_val();
                    let lo = pow_point(a.lo, n).lo;
                    let hi = pow_point(a.hi, n).hi;
                    Interval { lo: lo.max(0.0), hi }
                } else {
                    let lo = pow_point(self.lo, n).lo;
                    let hi = pow_point(self.hi, n).hi;
                    Interval { lo, hi }
                }
            }
        }
    }

    /// x^y = exp(y·log x); requires `inf(x) > 0`.
    pub fn pow(self, y: Interval) -> Result<Interval> {
        Ok((y * self.ln()?).exp())
    }

    /// Sine. Rejects |argument| ≥ 2^53 (quadrant reduction would be
    /// meaningless there; pipeline arguments are O(10²)).
    pub fn sin(self) -> Result<Interval> {
        self.check_trig_arg()?;
        if self.width() >= Interval::two_pi().hi {
            return Ok(Interval { lo: -1.0, hi: 1.0 });
        }
        let mut out = point_sin(self.lo).hull(point_sin(self.hi));
        for j in quadrant_candidates(self) {
            if j.rem_euclid(4) == 1 && quadrant_possibly_in(j, self) {
                out.hi = 1.0;
            }
            if j.rem_euclid(4) == 3 && quadrant_possibly_in(j, self) {
                out.lo = -1.0;
            }
        }
        Ok(clamp_unit(out))
    }

    /// Cosine; same argument restriction as [`Interval::sin`].
    pub fn cos(self) -> Result<Interval> {
        self.check_trig_arg()?;
        if self.width() >= Interval::two_pi().hi {
            return Ok(Interval { lo: -1.0, hi: 1.0 });
        }
        let mut out = point_cos(self.lo).hull(point_cos(self.hi));
        for j in quadrant_candidates(self) {
            if j.rem_euclid(4) == 0 && quadrant_possibly_in(j, self) {
                out.hi = 1.0;
            }
            if j.rem_euclid(4) == 2 && quadrant_possibly_in(j, self) {
                out.lo = -1.0;
            }
        }
        Ok(clamp_unit(out))
    }

    /// Tangent on a pole-free interval (poles at odd multiples of π/2).
    pub fn tan(self) -> Result<Interval> {
        self.check_trig_arg()?;
        if self.width() >= Interval::pi().hi {
            return Err(Error::PoleError);
        }
        for j in quadrant_candidates(self) {
            if j.rem_euclid(2) != 0 && quadrant_possibly_in(j, self) {
                return Err(Error::PoleError);
            }
        }
        Ok(Interval {
            lo: step_down(self.lo.tan(), widen::LIBM1),
            hi: step_up(self.hi.tan(), widen::LIBM1),
        })
    }

    /// Cotangent on a pole-free interval (poles at multiples of π).
    pub fn cot(self) -> Result<Interval> {
        self.check_trig_arg()?;
        if self.width() >= Interval::pi().hi {
            return Err(Error::PoleError);
        }
        for j in quadrant_candidates(self) {
            if j.rem_euclid(2) == 0 && quadrant_possibly_in(j, self) {
                return Err(Error::PoleError);
            }
        }
        // Decreasing between consecutive poles; endpoint values via cos/sin.
        let at = |x: f64| -> Result<Interval> {
            point_cos(x)
                .checked_div(point_sin(x))
                .map_err(|_| Error::PoleError)
        };
        let lo = at(self.hi)?;
        let hi = at(self.lo)?;
        Ok(Interval { lo: lo.lo, hi: hi.hi })
    }

    /// Secant = 1/cos on an interval where cos is separated from zero.
    pub fn sec(self) -> Result<Interval> {
        self.cos()?.checked_recip().map_err(|_| Error::PoleError)
    }

    /// Cosecant = 1/sin on an interval where sin is separated from zero.
    pub fn csc(self) -> Result<Interval> {
        self.sin()?.checked_recip().map_err(|_| Error::PoleError)
    }

    /// Arccosine; the argument must lie inside [−1, 1] (no clipping).
    pub fn acos(self) -> Result<Interval> {
        if self.lo < -1.0 || self.hi > 1.0 {
            return Err(Error::DomainError("acos argument leaves [-1, 1]"));
        }
        let lo = step_down(self.hi.acos(), widen::LIBM1).max(0.0);
        let hi = step_up(self.lo.acos(), widen::LIBM1).min(Interval::pi().hi);
        Ok(Interval { lo, hi })
    }

    #[inline]
    fn check_trig_arg(self) -> Result<()> {
        const LIMIT: f64 = 9007199254740992.0; // 2^53
        if self.lo.abs() > LIMIT || self.hi.abs() > LIMIT {
            return Err(Error::DomainError("trig argument beyond 2^53"));
        }
        Ok(())
    }
}

/// Enclosure of sin at a point, widened for libm error.
#[inline]
fn point_sin(x: f64) -> Interval {
    if x == 0.0 {
        // sin(±0) = ±0 exactly; keeping this thin preserves pure-real or
        // pure-imaginary structure in complex exponentials.
        return Interval::ZERO;
    }
    let s = x.sin();
    let mut v = Interval {
        lo: step_down(s, widen::LIBM1),
        hi: step_up(s, widen::LIBM1),
    };
    // The float π is below the real π, so sin is strictly positive on
    // (0, PI] and strictly negative on [-PI, 0); widening must not cross
    // zero there or a subinterval of [0, h] could map outside sin([0, h]).
    if x > 0.0 && x <= core::f64::consts::PI {
        v.lo = v.lo.max(0.0);
    } else if x < 0.0 && x >= -core::f64::consts::PI {
        v.hi = v.hi.min(0.0);
    }
    clamp_unit(v)
}

#[inline]
fn point_cos(x: f64) -> Interval {
    if x == 0.0 {
        return Interval::ONE;
    }
    let c = x.cos();
    clamp_unit(Interval {
        lo: step_down(c, widen::LIBM1),
        hi: step_up(c, widen::LIBM1),
    })
}

#[inline]
fn clamp_unit(v: Interval) -> Interval {
    Interval {
        lo: v.lo.max(-1.0),
        hi: v.hi.min(1.0),
    }
}

/// Integer candidates j for which j·π/2 might lie inside `x` (with slack).
fn quadrant_candidates(x: Interval) -> std::ops::RangeInclusive<i64> {
    let f = std::f64::consts::FRAC_PI_2;
    let a = (x.lo / f).floor() as i64 - 1;
    let b = (x.hi / f).ceil() as i64 + 1;
    a..=b
}

/// True unless j·π/2 is certainly outside `x`.
fn quadrant_possibly_in(j: i64, x: Interval) -> bool {
    let t = Interval::point(j as f64) * Interval::half_pi();
    !(t.hi < x.lo || t.lo > x.hi)
}

/// [x^n lower, x^n upper] for a point base via interval binary exponentiation.
fn pow_point(x: f64, n: u32) -> Interval {
    let mut result = Interval::ONE;
    let mut base = Interval::point(x);
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base;
        }
        base = base * base;
        e >>= 1;
    }
    result
}

impl std::ops::Add for Interval {
    type Output = Interval;
    #[inline]
    fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: step_down(self.lo + rhs.lo, widen::EXACT_OP),
            hi: step_up(self.hi + rhs.hi, widen::EXACT_OP),
        }
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;
    #[inline]
    fn sub(self, rhs: Interval) -> Interval {
        Interval {
            lo: step_down(self.lo - rhs.hi, widen::EXACT_OP),
            hi: step_up(self.hi - rhs.lo, widen::EXACT_OP),
        }
    }
}

impl std::ops::Neg for Interval {
    type Output = Interval;
    #[inline]
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;
    #[inline]
    fn mul(self, rhs: Interval) -> Interval {
        // x·0 = 0 exactly; keeping the zero interval thin lets collapses
        // (geometric means, vanished series terms) stay collapsed
        if (self.lo == 0.0 && self.hi == 0.0) || (rhs.lo == 0.0 && rhs.hi == 0.0) {
            return Interval::ZERO;
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ] {
            // NaN only arises from 0·∞; the exact contribution is then 0.
            let p = if p.is_nan() { 0.0 } else { p };
            lo = lo.min(p);
            hi = hi.max(p);
        }
        Interval {
            lo: step_down(lo, widen::EXACT_OP),
            hi: step_up(hi, widen::EXACT_OP),
        }
    }
}

/// Division operator.
///
/// # Panics
/// Panics when the divisor contains zero — structurally-nonzero denominators
/// are a precondition throughout the pipeline; use [`Interval::checked_div`]
/// where zero exclusion must be reported as an error.
impl std::ops::Div for Interval {
    type Output = Interval;
    #[inline]
    fn div(self, rhs: Interval) -> Interval {
        match self.checked_div(rhs) {
            Ok(v) => v,
            Err(_) => panic!(
                "interval division by zero-containing [{:e}, {:e}]",
                rhs.lo, rhs.hi
            ),
        }
    }
}

macro_rules! scalar_ops {
    ($($t:ty),*) => {$(
        impl std::ops::Add<$t> for Interval {
            type Output = Interval;
            #[inline]
            fn add(self, rhs: $t) -> Interval { self + Interval::point(rhs as f64) }
        }
        impl std::ops::Add<Interval> for $t {
            type Output = Interval;
            #[inline]
            fn add(self, rhs: Interval) -> Interval { Interval::point(self as f64) + rhs }
        }
        impl std::ops::Sub<$t> for Interval {
            type Output = Interval;
            #[inline]
            fn sub(self, rhs: $t) -> Interval { self - Interval::point(rhs as f64) }
        }
        impl std::ops::Sub<Interval> for $t {
            type Output = Interval;
            #[inline]
            fn sub(self, rhs: Interval) -> Interval { Interval::point(self as f64) - rhs }
        }
        impl std::ops::Mul<$t> for Interval {
            type Output = Interval;
            #[inline]
            fn mul(self, rhs: $t) -> Interval { self * Interval::point(rhs as f64) }
        }
        impl std::ops::Mul<Interval> for $t {
            type Output = Interval;
            #[inline]
            fn mul(self, rhs: Interval) -> Interval { Interval::point(self as f64) * rhs }
        }
        impl std::ops::Div<$t> for Interval {
            type Output = Interval;
            #[inline]
            fn div(self, rhs: $t) -> Interval { self / Interval::point(rhs as f64) }
        }
        impl std::ops::Div<Interval> for $t {
            type Output = Interval;
            #[inline]
            fn div(self, rhs: Interval) -> Interval { Interval::point(self as f64) / rhs }
        }
    )*};
}
scalar_ops!(f64, i32);

impl std::fmt::Debug for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo, self.hi)
    }
}


impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:.6e}, {:.6e}]", self.lo, self.hi)
    }
}
