use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::factored::factor_rational;
use super::point::PointQ;
use crate::error::{Error, Result};
use crate::exactcore::Rational;
use crate::intlattice::{kernel_basis, min_content, primitive_witness, IntMatrix, LatticeBasis};
use crate::par::{self, Execution};

/// Prime-exponent matrix: one row per coordinate, one column per prime
/// occurring in any coordinate.
pub(super) fn exponent_matrix(p: &PointQ) -> Result<(Vec<BigUint>, IntMatrix)> {
    let factored = p
        .coords()
        .iter()
        .map(factor_rational)
        .collect::<Result<Vec<_>>>()?;
    let primes: Vec<BigUint> = factored
        .iter()
        .flat_map(|f| f.exponents.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows: Vec<Vec<i64>> = factored
        .iter()
        .map(|f| primes.iter().map(|q| f.valuation(q)).collect())
        .collect();
    Ok((primes.clone(), IntMatrix::from_rows(primes.len(), &rows)?))
}

/// Basis of `{a in Z^n : prod xi_i^{a_i} = 1}`.
///
/// The valuation conditions cut out the kernel of the transposed exponent
/// matrix; the sign condition is a parity functional on that kernel, and its
/// zero set is reached by doubling one odd basis vector and subtracting it
/// from the other odd ones.
pub fn relation_lattice(p: &PointQ) -> Result<LatticeBasis> {
    let (_, e) = exponent_matrix(p)?;
    let kernel = kernel_basis(&e.transpose());
    let negative: Vec<bool> = p.coords().iter().map(Signed::is_negative).collect();
    let parity = |v: &[BigInt]| -> bool {
        v.iter()
            .zip(&negative)
            .filter(|(_, &neg)| neg)
            .fold(BigInt::from(0), |acc, (x, _)| acc + x)
            .is_odd()
    };
    let mut vecs: Vec<Vec<BigInt>> = kernel.vectors().to_vec();
    if let Some(j) = vecs.iter().position(|v| parity(v)) {
        let odd = vecs[j].clone();
        for (l, v) in vecs.iter_mut().enumerate() {
            if l != j && parity(v) {
                for (x, y) in v.iter_mut().zip(&odd) {
                    *x -= y;
                }
            }
        }
        for x in vecs[j].iter_mut() {
            *x *= 2;
        }
    }
    LatticeBasis::spanned_by(p.dim(), vecs)
}

pub fn is_dependent(p: &PointQ) -> Result<bool> {
    Ok(!relation_lattice(p)?.is_empty())
}

/// A relation with coprime exponents, if one exists.
pub fn is_primitively_dependent(p: &PointQ) -> Result<Option<Vec<i64>>> {
    let lattice = relation_lattice(p)?;
    if !min_content(&lattice).is_one() {
        return Ok(None);
    }
    let w =
        primitive_witness(&lattice).ok_or_else(|| Error::invariant("content 1 without witness"))?;
    w.iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| Error::invariant("relation entry overflows i64"))
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Every nonzero `a` with `|a_i| <= bound` and `prod xi_i^{a_i} = 1`, by
/// direct exact evaluation.
pub fn dependence_oracle(p: &PointQ, bound: u32, exec: Execution) -> Vec<Vec<i64>> {
    let b = bound as i64;
    // powers[i][k + b] = xi_i^k
    let powers: Vec<Vec<Rational>> = p
        .coords()
        .iter()
        .map(|x| (-b..=b).map(|k| x.pow(k as i32)).collect())
        .collect();
    let candidates: Vec<Vec<i64>> = (0..p.dim())
        .map(|_| -b..=b)
        .multi_cartesian_product()
        .filter(|a| a.iter().any(|&x| x != 0))
        .collect();
    par::filter_map(exec, &candidates, |a| {
        let v = a.iter().enumerate().fold(Rational::one(), |acc, (i, &k)| {
            acc * &powers[i][(k + b) as usize]
        });
        v.is_one().then(|| a.clone())
    })
}
