use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactcore::{parse_rational, Rational};

/// A point of `G_m^n(Q)`, `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointQ {
    coords: Vec<Rational>,
}

impl PointQ {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::domain("a point needs at least two coordinates"));
        }
        if coords.iter().any(Zero::is_zero) {
            return Err(Error::domain("point coordinates must be nonzero"));
        }
        Ok(PointQ { coords })
    }

    pub fn from_i64(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&(n, d)| Rational::new(n.into(), d.into()))
                .collect(),
        )
    }

    /// Comma-separated rationals, e.g. `"2, -3/4"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.split(',').map(parse_rational).collect::<Result<_>>()?)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// `prod xi_i^{a_i}`.
    pub fn monomial(&self, a: &[i64]) -> Result<Rational> {
        if a.len() != self.dim() {
            return Err(Error::domain(
                "exponent vector length differs from point dimension",
            ));
        }
        let mut acc = Rational::from_integer(1.into());
        for (x, &e) in self.coords.iter().zip(a) {
            let e = i32::try_from(e).map_err(|_| Error::domain("exponent too large"))?;
            acc *= x.pow(e);
        }
        Ok(acc)
    }
}

impl fmt::Display for PointQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
