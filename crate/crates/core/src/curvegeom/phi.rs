use itertools::Itertools;
use num_bigint::BigUint;

use super::character::{Character, NormalizedCharacter};
use super::curve::{character_restrict, check_assumption, map_degree, CurveData};
use super::divisor::divisor_of;
use crate::error::{Error, Result};
use crate::exactcore::{factor_integer, Rational};
use crate::intlattice::kernel_basis;
use crate::par::{self, Execution};

/// Whether `c` is an `m`-th power in the maximal cyclotomic extension of
/// `Q`: true iff `m` divides `2 v_p(c)` for every prime `p`, i.e. `c^2` is
/// an `m`-th power in `Q`.
pub fn cyclotomic_realizable(c: &Rational, m: u64) -> Result<bool> {
    if c.numer().sign() == num_bigint::Sign::NoSign {
        return Err(Error::domain("cyclotomic_realizable: c must be nonzero"));
    }
    if m == 0 {
        return Err(Error::domain("cyclotomic_realizable: m must be positive"));
    }
    let valuations = |n: &BigUint| -> Vec<u64> {
        if n == &BigUint::from(1u32) {
            return Vec::new();
        }
        factor_integer(n)
            .into_iter()
            .map(|(_, e)| e as u64)
            .collect()
    };
    let num = c.numer().magnitude();
    let den = c.denom().magnitude();
    Ok(valuations(num)
        .into_iter()
        .chain(valuations(den))
        .all(|v| (2 * v) % m == 0))
}

/// Normal form of a character whose restriction has divisor `m(P) - m(Q)`
/// with rational points `P` (the zero) and `Q` (the pole).
pub fn normalize_character(curve: &CurveData, a: &Character) -> Result<NormalizedCharacter> {
    let div = curve.character_divisor(a)?;
    let places: Vec<_> = div.iter().collect();
    let [(p0, m0), (p1, m1)] = places.as_slice() else {
        return Err(Error::domain(format!(
            "character {a} has divisor {div}, not supported on two points"
        )));
    };
    if p0.degree() != 1 || p1.degree() != 1 {
        return Err(Error::domain(format!(
            "character {a} has divisor {div} supported on non-rational places"
        )));
    }
    if m0 + m1 != 0 {
        return Err(Error::invariant(format!(
            "divisor {div} has nonzero degree"
        )));
    }
    let (zero, pole, m) = if *m0 > 0 {
        ((*p0).clone(), (*p1).clone(), *m0)
    } else {
        ((*p1).clone(), (*p0).clone(), *m1)
    };
    let mut nc = NormalizedCharacter {
        character: a.clone(),
        zero,
        pole,
        m: m as u64,
        c: Rational::default(),
        realizable_cyclotomic: false,
    };
    let phi = character_restrict(curve, a)?;
    let composed = phi.compose_mobius(&nc.mobius().inverse());
    match composed.as_monomial() {
        Some((c, e)) if e == m => nc.c = c,
        _ => {
            return Err(Error::invariant(format!(
                "character {a}: normalized restriction {composed} is not c*s^{m}"
            )))
        }
    }
    nc.realizable_cyclotomic = cyclotomic_realizable(&nc.c, nc.m)?;
    Ok(nc)
}

fn require_enumerable(curve: &CurveData) -> Result<()> {
    match map_degree(curve)? {
        1 => {}
        d => return Err(Error::ImproperParametrization(d)),
    }
    check_assumption(curve).into_result()
}

/// All primitive characters whose restriction to the curve has divisor
/// supported on two points, each with its normal form.
///
/// Candidate supports are pairs of rational places among the zeros and
/// poles of the coordinates: the divisor of a function defined over `Q` is
/// Galois-stable, so a two-point support `m(P) - m(Q)` forces `P` and `Q`
/// to be rational. For each pair, the characters whose divisor avoids all
/// other places form the kernel of the divisor matrix with those two rows
/// deleted; injectivity of `a -> div(phi_X)` makes that kernel of rank at
/// most one.
pub fn phi_enumerate(curve: &CurveData, exec: Execution) -> Result<Vec<NormalizedCharacter>> {
    require_enumerable(curve)?;
    let rational: Vec<usize> = (0..curve.place_index().len())
        .filter(|&i| curve.place_index()[i].degree() == 1)
        .collect();
    let pairs: Vec<(usize, usize)> = rational.iter().copied().tuple_combinations().collect();
    let per_pair = par::try_map(
        exec,
        &pairs,
        |&(i, j)| -> Result<Vec<NormalizedCharacter>> {
            let reduced = curve.divisor_matrix().without_rows(&[i, j]);
            let kernel = kernel_basis(&reduced);
            match kernel.rank() {
                0 => Ok(Vec::new()),
                1 => {
                    let a = Character::new(kernel.vectors_i64().remove(0))?;
                    let div = curve.character_divisor(&a)?;
                    let (p, q) = (&curve.place_index()[i], &curve.place_index()[j]);
                    if div.support_size() != 2
                        || div.multiplicity(p) == 0
                        || div.multiplicity(q) == 0
                    {
                        return Err(Error::invariant(format!(
                            "character {a} for the pair {p}, {q} has divisor {div}"
                        )));
                    }
                    Ok(vec![
                        normalize_character(curve, &a)?,
                        normalize_character(curve, &a.inverse())?,
                    ])
                }
                r => Err(Error::invariant(format!(
                    "rank {r} solution space for the place pair {}, {}",
                    curve.place_index()[i],
                    curve.place_index()[j]
                ))),
            }
        },
    )?;
    let mut out: Vec<NormalizedCharacter> = per_pair.into_iter().flatten().collect();
    out.sort_by(|x, y| x.character.listing_cmp(&y.character));
    out.dedup_by(|x, y| x.character == y.character);
    Ok(out)
}

/// Exhaustive reference: every primitive `a` with `|a_i| <= bound` whose
/// restriction, factored directly, has exactly two zeros/poles, both
/// rational. Shares no code path with the divisor matrix.
pub fn phi_oracle(curve: &CurveData, bound: u32, exec: Execution) -> Result<Vec<Character>> {
    check_assumption(curve).into_result()?;
    let b = bound as i64;
    let candidates: Vec<Vec<i64>> = (0..curve.dim())
        .map(|_| -b..=b)
        .multi_cartesian_product()
        .filter(|a| a.iter().any(|&x| x != 0))
        .collect();
    let hits = par::try_map(exec, &candidates, |a| -> Result<Option<Character>> {
        let ch = Character::new(a.clone())?;
        if !ch.is_primitive() {
            return Ok(None);
        }
        let div = divisor_of(&character_restrict(curve, &ch)?)?;
        let two_rational = div.support_size() == 2 && div.iter().all(|(p, _)| p.degree() == 1);
        Ok(two_rational.then_some(ch))
    })?;
    let mut out: Vec<Character> = hits.into_iter().flatten().collect();
    out.sort_by(Character::listing_cmp);
    Ok(out)
}
