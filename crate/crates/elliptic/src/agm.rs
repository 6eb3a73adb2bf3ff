use ivalcore::Interval;

use crate::{Error, Result};

/// Arithmetic–geometric mean of two nonnegative intervals.
///
/// Starts from the hull of the inputs and iterates the (a+b)/2, √(ab) pair
/// until the hull width stops decreasing — with outward rounding the width
/// eventually stalls a few ulps above zero, which is the stopping signal.
pub fn agm(a: Interval, b: Interval) -> Result<Interval> {
    if a.inf() < 0.0 || b.inf() < 0.0 {
        return Err(Error::NegativeInput);
    }
    let mut a = a;
    let mut b = b;
    let mut cold = (a / 2).hull(b / 2).hull((2 * a).hull(2 * b));
    let mut cnew = a.hull(b);
    while cold.width() - cnew.width() > 0.0 {
        cold = cnew;
        let mean = (a + b) / 2;
        // both inputs are certified nonnegative, so the product is too;
        // clip the rounding dip below zero before the square root
        let prod = a * b;
        let geo = Interval::new(prod.inf().max(0.0), prod.sup().max(0.0)).sqrt()?;
        a = mean;
        b = geo;
        cnew = a.hull(b);
    }
    Ok(cnew)
}
