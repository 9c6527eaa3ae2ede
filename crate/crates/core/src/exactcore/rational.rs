use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `b` with `b^m = c`, if such a rational exists.
pub fn nth_power_in_q(c: &Rational, m: u32) -> Result<Option<Rational>> {
    if c.is_zero() {
        return Err(Error::domain("nth_power_in_q: c must be nonzero"));
    }
    if m == 0 {
        return Err(Error::domain("nth_power_in_q: exponent must be positive"));
    }
    if c.is_negative() && m.is_multiple_of(2) {
        return Ok(None);
    }
    let root = |x: &BigInt| -> Option<BigInt> {
        let r = x.abs().nth_root(m);
        (num_traits::pow(r.clone(), m as usize) == x.abs()).then_some(r)
    };
    let (Some(num), Some(den)) = (root(c.numer()), root(c.denom())) else {
        return Ok(None);
    };
    let b = Rational::new(num, den);
    Ok(Some(if c.is_negative() { -b } else { b }))
}

/// Serializes as `"p/q"`, always with an explicit denominator.
pub fn format_pq(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"p"` and `"p/q"` with optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse {
        position: 0,
        message: format!("invalid rational {s:?}"),
    };
    let int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("zero denominator in {s:?}"),
                });
            }
            Ok(Rational::new(int(n)?, d))
        }
    }
}
