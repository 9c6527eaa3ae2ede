use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::lattice::LatticeBasis;
use super::matrix::IntMatrix;

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `H = U * M`. Nonzero rows of `H` come first; each has a positive pivot
/// strictly to the right of the previous pivot, and entries above a pivot
/// lie in `[0, pivot)`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut r = 0;
    for col in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        // pivot on the smallest nonzero magnitude in this column at or below r
        while let Some(best) = (r..m.rows())
            .filter(|&i| !h[(i, col)].is_zero())
            .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()))
        {
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            let mut done = true;
            for i in r + 1..m.rows() {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&h[(r, col)]);
                h.sub_row_multiple(i, r, &q);
                u.sub_row_multiple(i, r, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, col)].div_floor(&h[(r, col)]);
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Rank over `Q`.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hnf(m);
    (0..h.rows()).filter(|&i| !h.is_zero_row(i)).count()
}

/// Basis (in Hermite normal form) of `{a in Z^cols : M a = 0}`. The kernel
/// of an integer matrix is saturated, so each basis vector is primitive.
pub fn kernel_basis(m: &IntMatrix) -> LatticeBasis {
    let (h, u) = hnf(&m.transpose());
    let vecs: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&i| h.is_zero_row(i))
        .map(|i| u.row(i).to_vec())
        .collect();
    LatticeBasis::from_independent(m.cols(), vecs).canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn mat(cols: usize, rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(cols, rows).unwrap()
    }

    #[test]
    fn hnf_examples() {
        let m = mat(2, &[vec![2, 1], vec![1, 2]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, mat(2, &[vec![1, 2], vec![0, 3]]));
        assert_eq!(u.mul(&m).unwrap(), h);
        assert!(u.determinant().unwrap().abs().is_one());

        let id = IntMatrix::identity(3);
        assert_eq!(hnf(&id), (id.clone(), id.clone()));

        let z = mat(2, &[vec![0, 0]]);
        assert_eq!(hnf(&z).0, z);
    }

    #[test]
    fn kernel_examples() {
        let m = mat(2, &[vec![3, 0], vec![0, 1], vec![-3, -1]]);
        assert!(kernel_basis(&m).is_empty());
        let m = mat(2, &[vec![1, -1]]);
        assert_eq!(kernel_basis(&m).vectors_i64(), vec![vec![1, 1]]);
        assert_eq!(kernel_basis(&IntMatrix::zeros(1, 2)).rank(), 2);
        assert_eq!(kernel_basis(&IntMatrix::zeros(0, 3)).rank(), 3);
    }

    #[test]
    fn rank_counts_pivots() {
        assert_eq!(
            rank(&mat(3, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 1]])),
            2
        );
        assert_eq!(rank(&IntMatrix::zeros(2, 2)), 0);
    }
}
