use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::decompose::Decomposition;
use super::point::PointQ;
use crate::error::{Error, Result};
use crate::exactcore::Rational;

fn ln_big(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    (n >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Absolute logarithmic Weil height, `log max(|p|, q)` for `x = p/q`.
pub fn weil_height(x: &Rational) -> Result<f64> {
    if x.is_zero() {
        return Err(Error::domain("weil_height: zero"));
    }
    let m = x.numer().abs().max(x.denom().clone());
    Ok(ln_big(&m))
}

/// Sum of the coordinate heights.
pub fn point_height(p: &PointQ) -> f64 {
    p.coords()
        .iter()
        .map(|x| weil_height(x).expect("point coordinates are nonzero"))
        .sum()
}

/// Order of `x` as a root of unity; over `Q` only `1` and `-1` qualify.
pub fn root_of_unity_order(x: &Rational) -> Option<u64> {
    if x.is_one() {
        Some(1)
    } else if (-x).is_one() {
        Some(2)
    } else {
        None
    }
}

/// Per coordinate, `sum_j |m_ij| h(g_j)`: the height budget spent by the
/// free part of the decomposition.
pub fn height_budget(d: &Decomposition) -> Vec<f64> {
    let hs: Vec<f64> = d
        .generators
        .iter()
        .map(|g| weil_height(g).unwrap())
        .collect();
    (0..d.signs.len())
        .map(|i| {
            hs.iter()
                .enumerate()
                .map(|(j, h)| d.exponents[(i, j)].abs().to_f64().unwrap() * h)
                .sum()
        })
        .collect()
}
