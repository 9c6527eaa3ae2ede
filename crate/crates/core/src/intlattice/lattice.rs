use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::hnf::{hnf, rank};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Linearly independent integer vectors spanning a sublattice of `Z^dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    dim: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn new(dim: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::domain(
                "basis vector length differs from ambient dimension",
            ));
        }
        let b = LatticeBasis { dim, vectors };
        if rank(&b.to_matrix()) != b.vectors.len() {
            return Err(Error::domain("basis vectors are linearly dependent"));
        }
        Ok(b)
    }

    pub fn from_i64(dim: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub(crate) fn from_independent(dim: usize, vectors: Vec<Vec<BigInt>>) -> Self {
        LatticeBasis { dim, vectors }
    }

    /// The lattice generated by arbitrary (possibly dependent) vectors.
    pub fn spanned_by(dim: usize, generators: Vec<Vec<BigInt>>) -> Result<Self> {
        if generators.iter().any(|v| v.len() != dim) {
            return Err(Error::domain(
                "generator length differs from ambient dimension",
            ));
        }
        Ok(LatticeBasis {
            dim,
            vectors: generators,
        }
        .canonical())
    }

    pub fn empty(dim: usize) -> Self {
        LatticeBasis {
            dim,
            vectors: Vec::new(),
        }
    }

    /// Same lattice, basis replaced by the nonzero rows of its Hermite
    /// normal form.
    pub fn canonical(&self) -> LatticeBasis {
        let (h, _) = hnf(&self.to_matrix());
        let vectors = (0..h.rows())
            .filter(|&i| !h.is_zero_row(i))
            .map(|i| h.row(i).to_vec())
            .collect();
        LatticeBasis {
            dim: self.dim,
            vectors,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    /// # Panics
    /// If an entry does not fit in `i64`.
    pub fn vectors_i64(&self) -> Vec<Vec<i64>> {
        self.vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| x.to_i64().expect("lattice entry overflows i64"))
                    .collect()
            })
            .collect()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.dim, &self.vectors).unwrap()
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(express_in_basis(v, self)?.is_some())
    }
}

/// gcd of the entries; 0 for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Minimum entry-gcd over the nonzero vectors of the lattice; 0 for the
/// zero lattice.
///
/// This is the first Smith elementary divisor of the basis matrix, i.e. the
/// gcd of all its entries: it divides every lattice vector, and it is
/// attained by the first row of the left Smith transform applied to the
/// basis.
pub fn min_content(b: &LatticeBasis) -> BigInt {
    b.vectors
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(&content(v)))
}

fn combine(x: i64, v: &[BigInt], y: i64, w: &[BigInt]) -> Vec<BigInt> {
    let (x, y) = (BigInt::from(x), BigInt::from(y));
    v.iter().zip(w).map(|(a, b)| &x * a + &y * b).collect()
}

/// Shortest-first search for `x v + y w` with entry-gcd equal to the gcd of
/// all entries of `v` and `w`. Such a combination always exists (Smith form
/// of the two-row matrix).
fn pair_witness(v: &[BigInt], w: &[BigInt]) -> Vec<BigInt> {
    let target = content(v).gcd(&content(w));
    if content(v) == target {
        return v.to_vec();
    }
    for radius in 1i64.. {
        for x in -radius..=radius {
            for y in -radius..=radius {
                if x.abs().max(y.abs()) != radius || x.gcd(&y) != 1 {
                    continue;
                }
                let c = combine(x, v, y, w);
                if content(&c) == target {
                    return c;
                }
            }
        }
    }
    unreachable!()
}

/// A lattice vector with coprime entries, if the lattice has one.
pub fn primitive_witness(b: &LatticeBasis) -> Option<Vec<BigInt>> {
    if !min_content(b).is_one() {
        return None;
    }
    let basis = b.canonical();
    if let Some(v) = basis.vectors.iter().find(|v| content(v).is_one()) {
        return Some(v.clone());
    }
    let mut acc = basis.vectors[0].clone();
    for w in &basis.vectors[1..] {
        acc = pair_witness(&acc, w);
        if content(&acc).is_one() {
            break;
        }
    }
    debug_assert!(content(&acc).is_one());
    Some(acc)
}

/// Integer coordinates `x` with `sum x_j b_j = v`, if `v` is in the lattice.
pub fn express_in_basis(v: &[BigInt], b: &LatticeBasis) -> Result<Option<Vec<BigInt>>> {
    if v.len() != b.dim {
        return Err(Error::domain(format!(
            "vector of length {} in a lattice of dimension {}",
            v.len(),
            b.dim
        )));
    }
    if b.is_empty() {
        return Ok(v.iter().all(Zero::is_zero).then(Vec::new));
    }
    let (h, u) = hnf(&b.to_matrix());
    let mut residual = v.to_vec();
    let mut coords_h = vec![BigInt::zero(); b.rank()];
    for (i, coord) in coords_h.iter_mut().enumerate() {
        let Some(pivot) = (0..b.dim).find(|&j| !h[(i, j)].is_zero()) else {
            return Err(Error::invariant(
                "basis of full rank has a zero Hermite row",
            ));
        };
        let (q, r) = residual[pivot].div_rem(&h[(i, pivot)]);
        if !r.is_zero() {
            return Ok(None);
        }
        for (j, res) in residual.iter_mut().enumerate() {
            *res -= &q * &h[(i, j)];
        }
        *coord = q;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    // H = U B, so x_H H = (x_H U) B
    let coords = (0..b.rank())
        .map(|j| {
            coords_h
                .iter()
                .enumerate()
                .map(|(i, c)| c * &u[(i, j)])
                .sum()
        })
        .collect();
    Ok(Some(coords))
}
