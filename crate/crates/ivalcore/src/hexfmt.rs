//! Bit-exact binary64 ↔ C99 hexadecimal-float-literal conversion.
//!
//! Interval endpoints must survive storage byte-for-byte — the certificates
//! produced downstream are only as good as the endpoints they were computed
//! from — so the text form carries the full 13-nibble mantissa.

use crate::{Error, Interval, Result};

/// Format a finite or infinite binary64 as a hex literal (`0x1.8p+1`,
/// `-0x1.5798ee2308c3ap-27`, `0x0p+0`, `inf`). NaN is rejected by interval
/// construction and has no text form.
pub fn f64_to_hex(x: f64) -> String {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { "-" } else { "" };
    let exp_field = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & 0x000f_ffff_ffff_ffff;
    match exp_field {
        0x7ff => {
            debug_assert_eq!(frac, 0, "NaN has no hex form");
            format!("{sign}inf")
        }
        0 if frac == 0 => format!("{sign}0x0p+0"),
        0 => format!("{sign}0x0.{frac:013x}p-1022"),
        _ => format!("{sign}0x1.{frac:013x}p{:+}", exp_field - 1023),
    }
}

/// Parse the canonical forms emitted by [`f64_to_hex`].
pub fn f64_from_hex(s: &str) -> Result<f64> {
    let bad = || Error::ParseError(format!("bad hex float {s:?}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let sign_bit = if neg { 1u64 << 63 } else { 0 };
    if body == "inf" {
        return Ok(f64::from_bits(sign_bit | (0x7ffu64 << 52)));
    }
    let body = body.strip_prefix("0x").ok_or_else(bad)?;
    let (mantissa, exp) = body.split_once('p').ok_or_else(bad)?;
    let exp: i64 = exp.parse().map_err(|_| bad())?;
    let (lead, frac_str) = match mantissa.split_once('.') {
        Some((l, f)) => (l, f),
        None => (mantissa, ""),
    };
    if frac_str.len() > 13 {
        return Err(bad());
    }
    let mut frac: u64 = 0;
    for c in frac_str.chars() {
        frac = (frac << 4) | c.to_digit(16).ok_or_else(bad)? as u64;
    }
    frac <<= 4 * (13 - frac_str.len());
    frac &= 0x000f_ffff_ffff_ffff;
    match lead {
        "0" => {
            if frac == 0 {
                if exp != 0 {
                    return Err(bad());
                }
                Ok(f64::from_bits(sign_bit))
            } else {
                if exp != -1022 {
                    return Err(bad());
                }
                Ok(f64::from_bits(sign_bit | frac))
            }
        }
        "1" => {
            let exp_field = exp + 1023;
            if !(1..=2046).contains(&exp_field) {
                return Err(bad());
            }
            Ok(f64::from_bits(sign_bit | ((exp_field as u64) << 52) | frac))
        }
        _ => Err(bad()),
    }
}

impl Interval {
    /// `"lo hi"` with both endpoints in hex-literal form.
    pub fn to_hex(self) -> String {
        format!("{} {}", f64_to_hex(self.inf()), f64_to_hex(self.sup()))
    }

    pub fn from_hex(s: &str) -> Result<Interval> {
        let mut it = s.split_whitespace();
        let lo = f64_from_hex(it.next().ok_or_else(|| {
            Error::ParseError("missing lower endpoint".into())
        })?)?;
        let hi = f64_from_hex(it.next().ok_or_else(|| {
            Error::ParseError("missing upper endpoint".into())
        })?)?;
        if it.next().is_some() {
            return Err(Error::ParseError(format!("trailing junk in {s:?}")));
        }
        Interval::try_new(lo, hi)
    }
}
