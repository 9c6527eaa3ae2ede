use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::bivariate;
use super::character::Character;
use super::divisor::{divisor_of, Divisor, Place};
use crate::error::{Error, Result};
use crate::exactcore::{monomial_product, RatFunc};
use crate::intlattice::{kernel_basis, IntMatrix};

/// A rational curve in `G_m^n` given by `n >= 2` nonzero coordinate
/// functions of one parameter `t`, with the divisor matrix cached: row `k`
/// is the place `place_index[k]`, column `i` holds its multiplicity in
/// `div(f_i)`.
#[derive(Debug, Clone)]
pub struct CurveData {
    coords: Vec<RatFunc>,
    divisors: Vec<Divisor>,
    place_index: Vec<Place>,
    divisor_matrix: IntMatrix,
}

impl CurveData {
    pub fn new(coords: Vec<RatFunc>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::domain(format!(
                "a curve needs at least two coordinates, got {}",
                coords.len()
            )));
        }
        if let Some(i) = coords.iter().position(RatFunc::is_zero) {
            return Err(Error::domain(format!(
                "coordinate {} is identically zero",
                i + 1
            )));
        }
        let divisors = coords.iter().map(divisor_of).collect::<Result<Vec<_>>>()?;
        let mut place_index: Vec<Place> = divisors
            .iter()
            .flat_map(|d| d.iter().map(|(p, _)| p.clone()))
            .collect();
        place_index.sort();
        place_index.dedup();
        let rows: Vec<Vec<i64>> = place_index
            .iter()
            .map(|p| divisors.iter().map(|d| d.multiplicity(p)).collect())
            .collect();
        let divisor_matrix = IntMatrix::from_rows(coords.len(), &rows)?;
        Ok(CurveData {
            coords,
            divisors,
            place_index,
            divisor_matrix,
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[RatFunc] {
        &self.coords
    }

    pub fn coordinate_divisors(&self) -> &[Divisor] {
        &self.divisors
    }

    pub fn place_index(&self) -> &[Place] {
        &self.place_index
    }

    pub fn divisor_matrix(&self) -> &IntMatrix {
        &self.divisor_matrix
    }

    /// `div(phi_X)` computed linearly from the divisor matrix.
    pub fn character_divisor(&self, a: &Character) -> Result<Divisor> {
        self.check_len(a)?;
        let v: Vec<BigInt> = a.exponents().iter().map(|&x| BigInt::from(x)).collect();
        let col = self.divisor_matrix.mul_vec(&v)?;
        let mut d = Divisor::new();
        for (p, m) in self.place_index.iter().zip(col) {
            let m = m
                .to_i64()
                .ok_or_else(|| Error::invariant("divisor multiplicity overflows i64"))?;
            d.add(p.clone(), m);
        }
        Ok(d)
    }

    pub(crate) fn check_len(&self, a: &Character) -> Result<()> {
        if a.len() != self.dim() {
            return Err(Error::domain(format!(
                "character has {} exponents but the curve has {} coordinates",
                a.len(),
                self.dim()
            )));
        }
        Ok(())
    }
}

/// `phi_X = prod f_i^{a_i}`.
pub fn character_restrict(curve: &CurveData, a: &Character) -> Result<RatFunc> {
    curve.check_len(a)?;
    monomial_product(&curve.coords, a.exponents())
}

/// Degree of `t -> (f_1(t), ..., f_n(t))` onto its image: the `t`-degree of
/// the gcd over `Q(s)[t]` of the cross numerators of the nonconstant
/// coordinates. It is 1 exactly when the parametrization is proper.
pub fn map_degree(curve: &CurveData) -> Result<usize> {
    let mut acc: Option<Vec<_>> = None;
    for f in curve.coords.iter().filter(|f| !f.is_constant()) {
        let g = bivariate::cross_numerator(f);
        acc = Some(match acc {
            None => bivariate::gcd(&g, &[]),
            Some(prev) => bivariate::gcd(&prev, &g),
        });
    }
    acc.map(|g| bivariate::degree_t(&g))
        .ok_or_else(|| Error::domain("map_degree: every coordinate is constant"))
}

/// Outcome of the "no monomial in the coordinates is constant" check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assumption {
    Ok,
    /// A primitive `a` with `prod f_i^{a_i}` constant.
    Violation(Character),
}

impl Assumption {
    pub fn is_ok(&self) -> bool {
        matches!(self, Assumption::Ok)
    }

    pub fn violation(&self) -> Option<&Character> {
        match self {
            Assumption::Ok => None,
            Assumption::Violation(a) => Some(a),
        }
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            Assumption::Ok => Ok(()),
            Assumption::Violation(a) => Err(Error::AssumptionViolated(a.exponents().to_vec())),
        }
    }
}

/// A monomial is constant on `P^1` iff its divisor vanishes, so the
/// hypothesis holds iff the divisor matrix has trivial integer kernel.
pub fn check_assumption(curve: &CurveData) -> Assumption {
    let k = kernel_basis(&curve.divisor_matrix);
    match k.vectors_i64().into_iter().next() {
        None => Assumption::Ok,
        Some(v) => Assumption::Violation(Character::new(v).expect("kernel vectors are nonzero")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{rat, Poly};

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_i64(c))
    }

    fn example_curve(d: u32) -> CurveData {
        CurveData::new(vec![
            RatFunc::from_poly(Poly::from_i64(&[-1, 1]).pow(d)),
            RatFunc::t(),
        ])
        .unwrap()
    }

    #[test]
    fn construction_errors() {
        assert!(CurveData::new(vec![RatFunc::t()]).is_err());
        assert!(CurveData::new(vec![RatFunc::t(), RatFunc::constant(rat(0))]).is_err());
    }

    #[test]
    fn divisor_matrix_layout() {
        let c = example_curve(3);
        let m = c.divisor_matrix();
        assert_eq!(m.rows(), 3);
        // places: t - 1, t, inf
        assert_eq!(c.place_index()[0], Place::Finite(Poly::from_i64(&[-1, 1])));
        assert_eq!(c.place_index()[1], Place::Finite(Poly::from_i64(&[0, 1])));
        assert_eq!(c.place_index()[2], Place::Infinity);
        let expected = IntMatrix::from_rows(2, &[vec![3, 0], vec![0, 1], vec![-3, -1]]).unwrap();
        assert_eq!(m, &expected);
    }

    #[test]
    fn map_degree_examples() {
        let c = CurveData::new(vec![RatFunc::t(), poly(&[0, 0, 1])]).unwrap();
        assert_eq!(map_degree(&c).unwrap(), 1);
        let c = CurveData::new(vec![poly(&[0, 0, 1]), poly(&[0, 0, 0, 1])]).unwrap();
        assert_eq!(map_degree(&c).unwrap(), 1);
        let c = CurveData::new(vec![poly(&[0, 0, 1]), poly(&[0, 0, 0, 0, 1])]).unwrap();
        assert_eq!(map_degree(&c).unwrap(), 2);
        let c = CurveData::new(vec![poly(&[2]), poly(&[3])]).unwrap();
        assert!(map_degree(&c).is_err());
        // t + 1/t is two-to-one
        let f = RatFunc::new(Poly::from_i64(&[1, 0, 1]), Poly::t()).unwrap();
        let c = CurveData::new(vec![f.clone(), f]).unwrap();
        assert_eq!(map_degree(&c).unwrap(), 2);
    }

    #[test]
    fn assumption_examples() {
        assert_eq!(check_assumption(&example_curve(3)), Assumption::Ok);
        let c = CurveData::new(vec![poly(&[2]), RatFunc::t()]).unwrap();
        assert_eq!(
            check_assumption(&c),
            Assumption::Violation(Character::new(vec![1, 0]).unwrap())
        );
        let c = CurveData::new(vec![RatFunc::t(), poly(&[0, 2])]).unwrap();
        assert_eq!(
            check_assumption(&c),
            Assumption::Violation(Character::new(vec![1, -1]).unwrap())
        );
    }

    #[test]
    fn restriction_examples() {
        let c = example_curve(3);
        let ch = |v: Vec<i64>| Character::new(v).unwrap();
        assert_eq!(
            character_restrict(&c, &ch(vec![1, 0])).unwrap(),
            c.coords()[0]
        );
        assert_eq!(
            character_restrict(&c, &ch(vec![0, 1])).unwrap(),
            RatFunc::t()
        );
        let f = character_restrict(&c, &ch(vec![1, -3])).unwrap();
        assert_eq!(f.num(), &Poly::from_i64(&[-1, 1]).pow(3));
        assert_eq!(f.den(), &Poly::from_i64(&[0, 0, 0, 1]));
        assert!(character_restrict(&c, &ch(vec![1, 0, 1])).is_err());
        // divisor of the restriction agrees with the matrix route
        let d = c.character_divisor(&ch(vec![1, -3])).unwrap();
        assert_eq!(d, divisor_of(&f).unwrap());
    }
}
