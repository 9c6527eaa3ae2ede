use std::fmt;

use num_traits::{One, Zero};

use super::mobius::Mobius;
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced quotient `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.lc().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        Self::reduced(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::reduced(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::domain("inverse of the zero function"));
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents need a nonzero function.
    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = u32::try_from(e.unsigned_abs()).map_err(|_| Error::domain("exponent too large"))?;
        // powers of coprime polynomials stay coprime
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// `f(mu(s))`, reduced.
    pub fn compose_mobius(&self, mu: &Mobius) -> RatFunc {
        let (a, b, c, d) = mu.coefficients();
        let lin_num = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let lin_den = Poly::from_coeffs(vec![d.clone(), c.clone()]);
        let homogenize = |p: &Poly| -> (Poly, usize) {
            let n = p.degree().unwrap_or(0);
            let mut acc = Poly::zero();
            for (k, coeff) in p.coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let term = &lin_num.pow(k as u32) * &lin_den.pow((n - k) as u32);
                acc = &acc + &term.scale(coeff);
            }
            (acc, n)
        };
        let (hn, dn) = homogenize(&self.num);
        let (hd, dd) = homogenize(&self.den);
        if self.num.is_zero() {
            return self.clone();
        }
        if dd >= dn {
            Self::reduced(&hn * &lin_den.pow((dd - dn) as u32), hd)
        } else {
            Self::reduced(hn, &hd * &lin_den.pow((dn - dd) as u32))
        }
    }

    /// `Some((c, m))` when the function is exactly `c * t^m`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        let is_mono = |p: &Poly| {
            let d = p.degree()?;
            p.coeffs()[..d].iter().all(Zero::is_zero).then_some(d)
        };
        let dn = is_mono(&self.num)?;
        let dd = is_mono(&self.den)?;
        Some((self.num.lc().unwrap().clone(), dn as i64 - dd as i64))
    }
}

/// `prod fs[i]^a[i]`, reduced.
pub fn monomial_product(fs: &[RatFunc], a: &[i64]) -> Result<RatFunc> {
    if fs.len() != a.len() {
        return Err(Error::domain(format!(
            "monomial_product: {} functions but {} exponents",
            fs.len(),
            a.len()
        )));
    }
    if fs.iter().any(RatFunc::is_zero) {
        return Err(Error::domain("monomial_product: zero coordinate function"));
    }
    // split positive and negative exponents so only one gcd is needed at the end
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (f, &e) in fs.iter().zip(a) {
        let k = u32::try_from(e.unsigned_abs()).map_err(|_| Error::domain("exponent too large"))?;
        if e > 0 {
            num = &num * &f.num.pow(k);
            den = &den * &f.den.pow(k);
        } else if e < 0 {
            num = &num * &f.den.pow(k);
            den = &den * &f.num.pow(k);
        }
    }
    RatFunc::new(num, den)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
