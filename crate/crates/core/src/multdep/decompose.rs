use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::point::PointQ;
use super::relations::exponent_matrix;
use crate::error::{Error, Result};
use crate::exactcore::Rational;
use crate::intlattice::{express_in_basis, hnf, IntMatrix, LatticeBasis};

/// `xi_i = signs[i] * prod_j generators[j]^{exponents[i][j]}` with
/// multiplicatively independent positive generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub signs: Vec<i8>,
    pub generators: Vec<Rational>,
    /// `n x r`.
    pub exponents: IntMatrix,
}

impl Decomposition {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn reconstruct(&self) -> Vec<Rational> {
        (0..self.signs.len())
            .map(|i| {
                self.generators.iter().enumerate().fold(
                    Rational::from_integer(self.signs[i].into()),
                    |acc, (j, g)| {
                        let e = self.exponents[(i, j)]
                            .to_i32()
                            .expect("exponent fits in i32");
                        acc * g.pow(e)
                    },
                )
            })
            .collect()
    }
}

/// Generators come from the Hermite basis of the row lattice of the
/// prime-exponent matrix; each coordinate's exponents are its coordinates
/// in that basis.
pub fn decompose(p: &PointQ) -> Result<Decomposition> {
    let (primes, e) = exponent_matrix(p)?;
    let (h, _) = hnf(&e);
    let rows: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&i| !h.is_zero_row(i))
        .map(|i| h.row(i).to_vec())
        .collect();
    let generators: Vec<Rational> = rows
        .iter()
        .map(|r| {
            primes.iter().zip(r).fold(Rational::one(), |acc, (q, k)| {
                let k = k.to_i32().expect("valuation fits in i32");
                acc * Rational::from_integer(BigInt::from(q.clone())).pow(k)
            })
        })
        .collect();
    let basis = LatticeBasis::new(primes.len(), rows)?;
    let mut exps = Vec::with_capacity(p.dim());
    for i in 0..p.dim() {
        let x = express_in_basis(e.row(i), &basis)?
            .ok_or_else(|| Error::invariant("exponent row outside its own row lattice"))?;
        exps.push(x);
    }
    let exponents = IntMatrix::from_rows(generators.len(), &exps)?;
    let signs = p
        .coords()
        .iter()
        .map(|x| if x.is_negative() { -1 } else { 1 })
        .collect();
    let d = Decomposition {
        signs,
        generators,
        exponents,
    };
    if d.reconstruct() != p.coords() {
        return Err(Error::invariant(
            "decomposition does not reconstruct the point",
        ));
    }
    Ok(d)
}
