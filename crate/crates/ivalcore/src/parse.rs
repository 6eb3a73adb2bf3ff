//! Exact decimal-literal parsing.
//!
//! Quoted decimal constants (`"0.93"`, `"1e-7"`, `"0.036927931316603"`) are
//! treated as exact rationals m·10^e and enclosed outward, so a stored
//! constant never silently inherits round-to-nearest semantics.

use crate::{Error, Interval, Result};

impl Interval {
    /// Tight outward enclosure of the exact value of a decimal literal.
    pub fn from_decimal_str(s: &str) -> Result<Interval> {
        decimal_enclosure(s.trim())
    }
}

impl std::str::FromStr for Interval {
    type Err = Error;
    fn from_str(s: &str) -> Result<Interval> {
        Interval::from_decimal_str(s)
    }
}

fn decimal_enclosure(s: &str) -> Result<Interval> {
    let bad = || Error::ParseError(format!("bad decimal literal {s:?}"));
    let mut chars = s.chars().peekable();
    let neg = match chars.peek() {
        Some('-') => {
            chars.next();
            true
        }
        Some('+') => {
            chars.next();
            false
        }
        _ => false,
    };

    let mut mantissa: u128 = 0;
    let mut digits = 0usize;
    let mut frac_len = 0i32;
    let mut seen_dot = false;
    let mut seen_digit = false;
    let mut exp: i32 = 0;
    while let Some(&c) = chars.peek() {
        match c {
            '0'..='9' => {
                chars.next();
                seen_digit = true;
                digits += 1;
                if digits > 34 {
                    return Err(bad());
                }
                mantissa = mantissa * 10 + (c as u128 - '0' as u128);
                if seen_dot {
                    frac_len += 1;
                }
            }
            '.' if !seen_dot => {
                chars.next();
                seen_dot = true;
            }
            'e' | 'E' => {
                chars.next();
                let rest: String = chars.collect();
                exp = rest.parse::<i32>().map_err(|_| bad())?;
                chars = "".chars().peekable();
                break;
            }
            _ => return Err(bad()),
        }
    }
    if !seen_digit || chars.next().is_some() {
        return Err(bad());
    }

    // Enclose mantissa: exact when it fits in 53 bits, else one-step outward
    // around the correctly rounded u128→f64 conversion.
    let m = if mantissa <= (1u128 << 53) {
        Interval::point(mantissa as f64)
    } else {
        let approx = mantissa as f64;
        Interval::new(approx.next_down(), approx.next_up())
    };

    let net = exp - frac_len;
    let scaled = if net == 0 {
        m
    } else if net > 0 {
        m * pow10(net as u32)
    } else {
        m / pow10(net.unsigned_abs())
    };
    Ok(if neg { -scaled } else { scaled })
}

/// Enclosure of 10^n; exact for n ≤ 22 (5^22 still fits the 53-bit mantissa).
fn pow10(n: u32) -> Interval {
    if n <= 22 {
        Interval::point(10f64.powi(n as i32))
    } else {
        pow10(22) * Interval::point(10.0).pow_int(n - 22)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_small_integers_stay_thin() {
        let v = Interval::from_decimal_str("42").unwrap();
        assert_eq!(v.inf(), 42.0);
        assert_eq!(v.sup(), 42.0);
    }

    #[test]
    fn tenth_is_enclosed_not_rounded() {
        let v = Interval::from_decimal_str("0.1").unwrap();
        // 0.1 is not representable; the nearest double is above the true
        // value, so a correct enclosure must have inf strictly below it.
        assert!(v.inf() < 0.1 && 0.1 <= v.sup());
        assert!(v.width() < 1e-16);
    }

    #[test]
    fn scientific_notation() {
        let v = Interval::from_decimal_str("1e-7").unwrap();
        assert!(v.contains(1e-7));
        assert!(v.width() < 1e-22);
        let w = Interval::from_decimal_str("-2.5e3").unwrap();
        assert!(w.contains(-2500.0));
        assert!(w.width() < 1e-11);
    }

    #[test]
    fn long_constant_is_tight() {
        let v = Interval::from_decimal_str("0.036927931316603").unwrap();
        assert!(v.contains(0.036927931316603));
        assert!(v.width() < 3e-17);
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "pi", "1.2.3", "0x10", "1e", "--1"] {
            assert!(Interval::from_decimal_str(s).is_err(), "accepted {s:?}");
        }
    }
}
