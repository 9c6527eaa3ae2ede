use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// `t -> (a t + b) / (c t + d)` with `ad - bc != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mobius {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl Mobius {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::domain("Möbius transformation with zero determinant"));
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn identity() -> Self {
        Mobius {
            a: Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    /// Sends `zero` to 0 and `pole` to infinity; `None` stands for the point
    /// at infinity.
    ///
    /// # Panics
    /// If `zero == pole`.
    pub fn sending_to_zero_and_infinity(zero: Option<&Rational>, pole: Option<&Rational>) -> Self {
        let one = Rational::one;
        let m = match (zero, pole) {
            (Some(p), Some(q)) => Mobius::new(one(), -p.clone(), one(), -q.clone()),
            (Some(p), None) => Mobius::new(one(), -p.clone(), Rational::zero(), one()),
            (None, Some(q)) => Mobius::new(Rational::zero(), one(), one(), -q.clone()),
            (None, None) => Err(Error::domain("both points at infinity")),
        };
        m.expect("zero and pole must be distinct points")
    }

    pub fn coefficients(&self) -> (&Rational, &Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn determinant(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `self ∘ inner`, i.e. `s -> self(inner(s))`.
    pub fn compose(&self, inner: &Mobius) -> Mobius {
        Mobius {
            a: &self.a * &inner.a + &self.b * &inner.c,
            b: &self.a * &inner.b + &self.b * &inner.d,
            c: &self.c * &inner.a + &self.d * &inner.c,
            d: &self.c * &inner.b + &self.d * &inner.d,
        }
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    /// Action on the projective line; `None` is the point at infinity.
    pub fn apply(&self, x: Option<&Rational>) -> Option<Rational> {
        let (num, den) = match x {
            Some(x) => (&self.a * x + &self.b, &self.c * x + &self.d),
            None => (self.a.clone(), self.c.clone()),
        };
        (!den.is_zero()).then(|| num / den)
    }
}
