//! Polynomials in `t` with coefficients in `Q[s]`, just enough for the
//! degree of a gcd over `Q(s)[t]` via a primitive remainder sequence.

use crate::exactcore::{Poly, RatFunc};

/// Coefficients indexed by the degree in `t`.
type BiPoly = Vec<Poly>;

fn trim(mut a: BiPoly) -> BiPoly {
    while a.last().is_some_and(Poly::is_zero) {
        a.pop();
    }
    a
}

/// `num(t) den(s) - num(s) den(t)`: vanishes on the pairs `(t, s)` with
/// `f(t) = f(s)`.
pub(super) fn cross_numerator(f: &RatFunc) -> BiPoly {
    let n = f.num().coeffs().len().max(f.den().coeffs().len());
    trim(
        (0..n)
            .map(|k| &f.den().scale(&f.num().coeff(k)) - &f.num().scale(&f.den().coeff(k)))
            .collect(),
    )
}

fn content(a: &[Poly]) -> Poly {
    a.iter().fold(Poly::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(a: BiPoly) -> BiPoly {
    let c = content(&a);
    if c.is_zero() || c.is_one() {
        return a;
    }
    a.into_iter().map(|x| x.exact_div(&c).unwrap()).collect()
}

/// `lc(b)^k a mod b` for the smallest suitable `k`.
fn pseudo_remainder(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.clone();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        let mut next: BiPoly = r.iter().map(|c| c * lb).collect();
        for (i, c) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(c * &lr);
        }
        r = trim(next);
    }
    r
}

/// Primitive gcd in `Q[s][t]`, equal up to a unit of `Q(s)` to the gcd in
/// `Q(s)[t]`.
pub(super) fn gcd(a: &[Poly], b: &[Poly]) -> BiPoly {
    if a.is_empty() {
        return primitive_part(b.to_vec());
    }
    if b.is_empty() {
        return primitive_part(a.to_vec());
    }
    let (mut a, mut b) = if a.len() >= b.len() {
        (primitive_part(a.to_vec()), primitive_part(b.to_vec()))
    } else {
        (primitive_part(b.to_vec()), primitive_part(a.to_vec()))
    };
    while !b.is_empty() {
        let r = primitive_part(pseudo_remainder(&a, &b));
        a = b;
        b = r;
    }
    a
}

pub(super) fn degree_t(a: &[Poly]) -> usize {
    a.len().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cross(c: &[i64]) -> BiPoly {
        cross_numerator(&RatFunc::from_poly(Poly::from_i64(c)))
    }

    #[test]
    fn gcd_degrees() {
        // t^2 - s^2 and t^3 - s^3 share t - s
        let g = gcd(&cross(&[0, 0, 1]), &cross(&[0, 0, 0, 1]));
        assert_eq!(degree_t(&g), 1);
        // t^2 - s^2 divides t^4 - s^4
        let g = gcd(&cross(&[0, 0, 1]), &cross(&[0, 0, 0, 0, 1]));
        assert_eq!(degree_t(&g), 2);
        assert!(cross(&[7]).is_empty());
    }
}
