use crate::{Error, Interval, Result};

/// Axis-aligned complex rectangle `re + i·im`.
///
/// Every operation returns a rectangle containing the exact image of the
/// operand rectangles. Rectangles (rather than discs) match how the pipeline
/// consumes complex values: real and imaginary parts are repeatedly split off
/// and certified separately.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct CInterval {
    pub re: Interval,
    pub im: Interval,
}

impl CInterval {
    pub const ZERO: CInterval = CInterval {
        re: Interval::ZERO,
        im: Interval::ZERO,
    };
    pub const ONE: CInterval = CInterval {
        re: Interval::ONE,
        im: Interval::ZERO,
    };

    #[inline]
    pub fn new(re: Interval, im: Interval) -> CInterval {
        CInterval { re, im }
    }

    /// The imaginary unit.
    #[inline]
    pub fn i() -> CInterval {
        CInterval {
            re: Interval::ZERO,
            im: Interval::ONE,
        }
    }

    #[inline]
    pub fn from_real(re: Interval) -> CInterval {
        CInterval {
            re,
            im: Interval::ZERO,
        }
    }

    #[inline]
    pub fn point(re: f64, im: f64) -> CInterval {
        CInterval {
            re: Interval::point(re),
            im: Interval::point(im),
        }
    }

    #[inline]
    pub fn conj(self) -> CInterval {
        CInterval {
            re: self.re,
            im: -self.im,
        }
    }

    /// Multiplication by i, performed exactly (coordinate swap, no widening).
    #[inline]
    pub fn mul_i(self) -> CInterval {
        CInterval {
            re: -self.im,
            im: self.re,
        }
    }

    /// Multiplication by −i, performed exactly.
    #[inline]
    pub fn mul_neg_i(self) -> CInterval {
        CInterval {
            re: self.im,
            im: -self.re,
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    #[inline]
    pub fn hull(self, other: CInterval) -> CInterval {
        CInterval {
            re: self.re.hull(other.re),
            im: self.im.hull(other.im),
        }
    }

    #[inline]
    pub fn contains(self, re: f64, im: f64) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    /// Interval enclosure of the modulus via √(re² + im²).
    #[inline]
    pub fn abs_val(self) -> Interval {
        (self.re.pow_int(2) + self.im.pow_int(2))
            .sqrt()
            .expect("squares are nonnegative")
    }

    /// Squared modulus |z|² as an interval.
    #[inline]
    pub fn abs_sq(self) -> Interval {
        self.re.pow_int(2) + self.im.pow_int(2)
    }

    /// Fallible division: the divisor rectangle must exclude zero.
    #[inline]
    pub fn checked_div(self, rhs: CInterval) -> Result<CInterval> {
        let d = rhs.abs_sq();
        if d.contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let num = self * rhs.conj();
        Ok(CInterval {
            re: num.re / d,
            im: num.im / d,
        })
    }

    #[inline]
    pub fn checked_recip(self) -> Result<CInterval> {
        CInterval::ONE.checked_div(self)
    }

    /// e^z = e^re (cos im + i sin im).
    pub fn exp(self) -> Result<CInterval> {
        let r = self.re.exp();
        Ok(CInterval {
            re: r * self.im.cos()?,
            im: r * self.im.sin()?,
        })
    }

    /// Principal logarithm for rectangles in the open right half-plane,
    /// where arg z = atan(im/re) without branch ambiguity.
    pub fn ln(self) -> Result<CInterval> {
        if self.re.inf() <= 0.0 {
            return Err(Error::DomainError(
                "complex log restricted to rectangles with re > 0",
            ));
        }
        Ok(CInterval {
            re: self.abs_sq().ln()? / 2,
            im: self.im.checked_div(self.re)?.atan(),
        })
    }

    /// sin z = sin re · cosh im + i cos re · sinh im.
    pub fn sin(self) -> Result<CInterval> {
        Ok(CInterval {
            re: self.re.sin()? * self.im.cosh(),
            im: self.re.cos()? * self.im.sinh(),
        })
    }

    /// cos z = cos re · cosh im − i sin re · sinh im.
    pub fn cos(self) -> Result<CInterval> {
        Ok(CInterval {
            re: self.re.cos()? * self.im.cosh(),
            im: -(self.re.sin()? * self.im.sinh()),
        })
    }

    /// tan z = sin z / cos z; pole when the cos rectangle cannot exclude 0.
    pub fn tan(self) -> Result<CInterval> {
        self.sin()?
            .checked_div(self.cos()?)
            .map_err(|_| Error::PoleError)
    }

    /// cot z = cos z / sin z.
    pub fn cot(self) -> Result<CInterval> {
        self.cos()?
            .checked_div(self.sin()?)
            .map_err(|_| Error::PoleError)
    }

    /// sec z = 1 / cos z.
    pub fn sec(self) -> Result<CInterval> {
        self.cos()?.checked_recip().map_err(|_| Error::PoleError)
    }

    /// csc z = 1 / sin z.
    pub fn csc(self) -> Result<CInterval> {
        self.sin()?.checked_recip().map_err(|_| Error::PoleError)
    }

    /// z^n by binary exponentiation in rectangle arithmetic.
    pub fn powi(self, n: u32) -> CInterval {
        let mut result = CInterval::ONE;
        let mut base = self;
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
}

impl From<Interval> for CInterval {
    #[inline]
    fn from(re: Interval) -> CInterval {
        CInterval::from_real(re)
    }
}

impl std::ops::Add for CInterval {
    type Output = CInterval;
    #[inline]
    fn add(self, rhs: CInterval) -> CInterval {
        CInterval {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl std::ops::Sub for CInterval {
    type Output = CInterval;
    #[inline]
    fn sub(self, rhs: CInterval) -> CInterval {
        CInterval {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl std::ops::Neg for CInterval {
    type Output = CInterval;
    #[inline]
    fn neg(self) -> CInterval {
        CInterval {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl std::ops::Mul for CInterval {
    type Output = CInterval;
    #[inline]
    fn mul(self, rhs: CInterval) -> CInterval {
        CInterval {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

/// Division operator; panics when the divisor rectangle contains zero.
/// Use [`CInterval::checked_div`] where that must surface as an error.
impl std::ops::Div for CInterval {
    type Output = CInterval;
    #[inline]
    fn div(self, rhs: CInterval) -> CInterval {
        match self.checked_div(rhs) {
            Ok(v) => v,
            Err(_) => panic!("complex division by zero-containing {rhs:?}"),
        }
    }
}

impl std::ops::Add<Interval> for CInterval {
    type Output = CInterval;
    #[inline]
    fn add(self, rhs: Interval) -> CInterval {
        CInterval {
            re: self.re + rhs,
            im: self.im,
        }
    }
}

impl std::ops::Sub<Interval> for CInterval {
    type Output = CInterval;
    #[inline]
    fn sub(self, rhs: Interval) -> CInterval {
        CInterval {
            re: self.re - rhs,
            im: self.im,
        }
    }
}

impl std::ops::Mul<Interval> for CInterval {
    type Output = CInterval;
    #[inline]
    fn mul(self, rhs: Interval) -> CInterval {
        CInterval {
            re: self.re * rhs,
            im: self.im * rhs,
        }
    }
}

impl std::ops::Mul<CInterval> for Interval {
    type Output = CInterval;
    #[inline]
    fn mul(self, rhs: CInterval) -> CInterval {
        rhs * self
    }
}

impl std::ops::Div<Interval> for CInterval {
    type Output = CInterval;
    #[inline]
    fn div(self, rhs: Interval) -> CInterval {
        CInterval {
            re: self.re / rhs,
            im: self.im / rhs,
        }
    }
}

impl std::fmt::Display for CInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + i·{}", self.re, self.im)
    }
}
