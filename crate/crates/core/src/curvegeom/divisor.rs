use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactcore::{factor_poly, format_pq, Poly, RatFunc, Rational};

/// A place of the projective line over `Q`: a Galois orbit of points,
/// encoded by its monic irreducible polynomial, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    pub fn rational(r: &Rational) -> Place {
        Place::Finite(Poly::linear_root(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    /// For a degree-one place, its coordinate (`None` at infinity).
    pub fn as_point(&self) -> Option<Option<Rational>> {
        match self {
            Place::Infinity => Some(None),
            Place::Finite(p) if p.degree() == Some(1) => Some(Some(-p.coeff(0) / p.coeff(1))),
            Place::Finite(_) => None,
        }
    }

    /// `"p/q"` for rational points, `"inf"` for infinity, the polynomial
    /// otherwise.
    pub fn label(&self) -> String {
        match self.as_point() {
            Some(Some(r)) => format_pq(&r),
            Some(None) => "inf".to_string(),
            None => self.to_string(),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Finite formal sum of places with nonzero integer multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    support: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, place: Place, mult: i64) {
        let e = self.support.entry(place.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.support.remove(&place);
        }
    }

    pub fn multiplicity(&self, place: &Place) -> i64 {
        self.support.get(place).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.support.iter().map(|(p, &m)| (p, m))
    }

    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// `sum mult * deg(place)`.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(p, m)| m * p.degree() as i64).sum()
    }

    pub fn scaled_sum<'a>(terms: impl IntoIterator<Item = (&'a Divisor, i64)>) -> Divisor {
        let mut out = Divisor::new();
        for (d, k) in terms {
            if k == 0 {
                continue;
            }
            for (p, m) in d.iter() {
                out.add(p.clone(), k * m);
            }
        }
        out
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(p, m)| format!("{m}*{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Zeros count positively, poles negatively; the multiplicity at infinity is
/// `deg(den) - deg(num)`.
pub fn divisor_of(f: &RatFunc) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::domain("divisor of the zero function"));
    }
    let mut d = Divisor::new();
    for (poly, sign) in [(f.num(), 1i64), (f.den(), -1i64)] {
        if poly.is_constant() {
            continue;
        }
        for (g, e) in factor_poly(poly)?.factors {
            d.add(Place::Finite(g), sign * e as i64);
        }
    }
    let at_inf = f.den().degree().unwrap() as i64 - f.num().degree().unwrap() as i64;
    d.add(Place::Infinity, at_inf);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn place(c: &[i64]) -> Place {
        Place::Finite(Poly::from_i64(c))
    }

    #[test]
    fn divisor_examples() {
        let d = divisor_of(&RatFunc::t()).unwrap();
        assert_eq!(d.multiplicity(&place(&[0, 1])), 1);
        assert_eq!(d.multiplicity(&Place::Infinity), -1);
        assert_eq!(d.support_size(), 2);

        let f = RatFunc::new(Poly::from_i64(&[-1, 1]).pow(3), Poly::t()).unwrap();
        let d = divisor_of(&f).unwrap();
        assert_eq!(d.multiplicity(&place(&[-1, 1])), 3);
        assert_eq!(d.multiplicity(&place(&[0, 1])), -1);
        assert_eq!(d.multiplicity(&Place::Infinity), -2);

        let d = divisor_of(&RatFunc::from_poly(Poly::from_i64(&[1, 0, 1]))).unwrap();
        assert_eq!(d.multiplicity(&place(&[1, 0, 1])), 1);
        assert_eq!(d.multiplicity(&Place::Infinity), -2);
        assert_eq!(d.degree(), 0);

        assert!(divisor_of(&RatFunc::constant(rat(0))).is_err());
        assert!(divisor_of(&RatFunc::constant(rat(5))).unwrap().is_zero());
    }

    #[test]
    fn place_labels() {
        assert_eq!(Place::rational(&rat(-2)).label(), "-2/1");
        assert_eq!(Place::Infinity.label(), "inf");
        assert_eq!(place(&[1, 0, 1]).label(), "(t^2 + 1)");
        assert_eq!(place(&[1, 0, 1]).degree(), 2);
        assert!(place(&[0, 1]) < Place::Infinity);
    }
}
