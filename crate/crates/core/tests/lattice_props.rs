use cyclodep::intlattice::{
    content, express_in_basis, hnf, kernel_basis, min_content, primitive_witness, rank, IntMatrix,
    LatticeBasis,
};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize, entry: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-entry..=entry, c), r)
    })
}

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows[0].len(), rows).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hnf_is_unimodular_and_echelon(rows in matrix(5, 5, 9)) {
        let m = to_matrix(&rows);
        let (h, u) = hnf(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        prop_assert!(u.determinant().unwrap().abs().is_one());
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            if h.is_zero_row(i) {
                seen_zero = true;
                continue;
            }
            prop_assert!(!seen_zero, "nonzero row below a zero row");
            let p = (0..h.cols()).find(|&j| !h[(i, j)].is_zero()).unwrap();
            prop_assert!(last_pivot.is_none_or(|q| p > q));
            prop_assert!(h[(i, p)].is_positive());
            for k in 0..i {
                prop_assert!(!h[(k, p)].is_negative() && h[(k, p)] < h[(i, p)]);
            }
            last_pivot = Some(p);
        }
    }

    #[test]
    fn kernel_is_saturated(rows in matrix(3, 4, 4)) {
        let m = to_matrix(&rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(k.rank(), m.cols() - rank(&m));
        for v in k.vectors() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        // every small integer kernel vector lies in the returned lattice
        for v in (0..m.cols()).map(|_| -2i64..=2).multi_cartesian_product() {
            let v = big(&v);
            if m.mul_vec(&v).unwrap().iter().all(Zero::is_zero) {
                prop_assert!(k.contains(&v).unwrap());
            }
        }
    }

    #[test]
    fn min_content_matches_brute_force(rows in matrix(3, 4, 5)) {
        let b = LatticeBasis::spanned_by(rows[0].len(), rows.iter().map(|r| big(r)).collect()).unwrap();
        prop_assume!(!b.is_empty());
        let g = min_content(&b);
        let mut brute: Option<BigInt> = None;
        for coeffs in (0..b.rank()).map(|_| -10i64..=10).multi_cartesian_product() {
            let mut v = vec![BigInt::zero(); b.dim()];
            for (c, basis) in coeffs.iter().zip(b.vectors()) {
                for (x, y) in v.iter_mut().zip(basis) {
                    *x += y * c;
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                let c = content(&v);
                brute = Some(brute.map_or(c.clone(), |b: BigInt| b.min(c)));
            }
        }
        prop_assert_eq!(Some(g.clone()), brute);
        if g.is_one() {
            let w = primitive_witness(&b).unwrap();
            prop_assert!(content(&w).is_one());
            prop_assert!(b.contains(&w).unwrap());
        } else {
            prop_assert!(primitive_witness(&b).is_none());
        }
    }

    #[test]
    fn express_reconstructs(rows in matrix(3, 4, 6), coeffs in proptest::collection::vec(-5i64..=5, 3)) {
        let b = LatticeBasis::spanned_by(rows[0].len(), rows.iter().map(|r| big(r)).collect()).unwrap();
        prop_assume!(!b.is_empty());
        let mut v = vec![BigInt::zero(); b.dim()];
        for (c, basis) in coeffs.iter().zip(b.vectors()) {
            for (x, y) in v.iter_mut().zip(basis) {
                *x += y * c;
            }
        }
        let x = express_in_basis(&v, &b).unwrap().unwrap();
        let mut back = vec![BigInt::zero(); b.dim()];
        for (c, basis) in x.iter().zip(b.vectors()) {
            for (z, y) in back.iter_mut().zip(basis) {
                *z += y * c;
            }
        }
        prop_assert_eq!(back, v.clone());
        let mut off = v;
        off[0] += 1;
        if b.contains(&off).unwrap() {
            prop_assert!(express_in_basis(&off, &b).unwrap().is_some());
        } else {
            prop_assert!(express_in_basis(&off, &b).unwrap().is_none());
        }
    }
}
