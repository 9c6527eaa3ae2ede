use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use super::divisor::Place;
use crate::error::{Error, Result};
use crate::exactcore::{Mobius, Rational};

/// Exponent vector `a` of the character `x -> x_1^{a_1} ... x_n^{a_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character(Vec<i64>);

impl Character {
    pub fn new(a: Vec<i64>) -> Result<Self> {
        if a.iter().all(|&x| x == 0) {
            return Err(Error::domain("trivial character (all exponents zero)"));
        }
        Ok(Character(a))
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |acc, x| acc.gcd(x))
    }

    /// Not a proper power of another character.
    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn inverse(&self) -> Character {
        Character(self.0.iter().map(|x| -x).collect())
    }

    /// First nonzero exponent is positive.
    pub fn is_canonical_sign(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
    }

    /// Representative of `{a, -a}` with positive first nonzero entry.
    pub fn canonical_sign(&self) -> Character {
        if self.is_canonical_sign() {
            self.clone()
        } else {
            self.inverse()
        }
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// Listing order: `±` pairs grouped by their canonical representative,
    /// the canonical member first.
    pub fn listing_cmp(&self, other: &Character) -> Ordering {
        self.canonical_sign()
            .0
            .cmp(&other.canonical_sign().0)
            .then_with(|| other.is_canonical_sign().cmp(&self.is_canonical_sign()))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A member of the finite character set together with its normal form:
/// `div(phi_X) = m (zero) - m (pole)` and `phi_X(mu^{-1}(s)) = c s^m` where
/// `mu` sends `zero` to 0 and `pole` to infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedCharacter {
    pub character: Character,
    pub zero: Place,
    pub pole: Place,
    pub m: u64,
    pub c: Rational,
    /// `c` becomes an `m`-th power over the maximal cyclotomic extension of
    /// `Q`, so the rescaled parameter is defined there.
    pub realizable_cyclotomic: bool,
}

impl NormalizedCharacter {
    /// The Möbius map `mu` of the normal form.
    pub fn mobius(&self) -> Mobius {
        let z = self.zero.as_point().expect("zero is a rational place");
        let p = self.pole.as_point().expect("pole is a rational place");
        Mobius::sending_to_zero_and_infinity(z.as_ref(), p.as_ref())
    }
}
