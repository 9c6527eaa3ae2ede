use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactcore::{factor_integer, Rational};

/// `sign * prod p^e` with nonzero exponents, primes increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredRational {
    pub sign: i8,
    pub exponents: BTreeMap<BigUint, i64>,
}

impl FactoredRational {
    pub fn value(&self) -> Rational {
        let mut num = BigInt::from(self.sign);
        let mut den = BigInt::one();
        for (p, &e) in &self.exponents {
            let pe = BigInt::from(p.pow(e.unsigned_abs() as u32));
            if e > 0 {
                num *= pe;
            } else {
                den *= pe;
            }
        }
        Rational::new(num, den)
    }

    pub fn valuation(&self, p: &BigUint) -> i64 {
        self.exponents.get(p).copied().unwrap_or(0)
    }
}

pub fn factor_rational(x: &Rational) -> Result<FactoredRational> {
    if x.is_zero() {
        return Err(Error::domain("factor_rational: zero"));
    }
    let mut exponents = BTreeMap::new();
    for (part, sign) in [(x.numer(), 1i64), (x.denom(), -1i64)] {
        let mag = part.magnitude();
        if mag.is_one() {
            continue;
        }
        for (p, e) in factor_integer(mag) {
            exponents.insert(p, sign * e as i64);
        }
    }
    Ok(FactoredRational {
        sign: if x.is_negative() { -1 } else { 1 },
        exponents,
    })
}
