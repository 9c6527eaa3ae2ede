use crate::curvegeom::{character_restrict, normalize_character, Character, CurveData};
use crate::error::{Error, Result};
use crate::exactcore::{factor_poly, Poly};

/// A Galois orbit of curve points at which `character` takes a value whose
/// order divides `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberPoint {
    pub minimal_polynomial: Poly,
    pub multiplicity: u32,
    pub character: Character,
    pub order: u64,
}

/// Irreducible factors of `num(phi^N - 1)`, split by whether their roots
/// are honest curve points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberSplit {
    pub equation: Poly,
    pub kept: Vec<(Poly, u32)>,
    pub discarded: Vec<(Poly, u32)>,
}

impl FiberSplit {
    pub fn factor_degree_total(&self) -> usize {
        self.kept
            .iter()
            .chain(&self.discarded)
            .map(|(f, e)| f.degree().unwrap_or(0) * *e as usize)
            .sum()
    }
}

fn validate(curve: &CurveData, a: &Character, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("torsion order must be positive"));
    }
    if a.len() != curve.dim() {
        return Err(Error::domain(format!(
            "character {a} has length {}, curve has {} coordinates",
            a.len(),
            curve.dim()
        )));
    }
    normalize_character(curve, a)
        .map(|_| ())
        .map_err(|e| match e {
            Error::InvariantViolation(_) => e,
            other => Error::domain(format!("character {a} has no normalization: {other}")),
        })
}

/// Factors `num(phi^N) - den(phi^N)`, the numerator of `phi^N - 1` for the
/// reduced restriction `phi`, and separates factors that divide a
/// coordinate numerator or denominator.
pub fn torsion_fiber_split(curve: &CurveData, a: &Character, n: u64) -> Result<FiberSplit> {
    validate(curve, a, n)?;
    let e = u32::try_from(n).map_err(|_| Error::domain("torsion order too large"))?;
    let phi = character_restrict(curve, a)?;
    let equation = &phi.num().pow(e) - &phi.den().pow(e);
    let fact = factor_poly(&equation)?;
    let bad = |f: &Poly| {
        curve
            .coords()
            .iter()
            .any(|x| f.divides(x.num()) || f.divides(x.den()))
    };
    let (discarded, kept) = fact.factors.into_iter().partition(|(f, _)| bad(f));
    Ok(FiberSplit {
        equation,
        kept,
        discarded,
    })
}

/// Curve points `P` with `phi_X(P)^N = 1`, as irreducible polynomials in `t`.
pub fn torsion_fiber(curve: &CurveData, a: &Character, n: u64) -> Result<Vec<FiberPoint>> {
    let split = torsion_fiber_split(curve, a, n)?;
    Ok(split
        .kept
        .into_iter()
        .map(|(f, m)| FiberPoint {
            minimal_polynomial: f,
            multiplicity: m,
            character: a.clone(),
            order: n,
        })
        .collect())
}

/// The part of [`torsion_fiber`] where `phi_X(P)` has order exactly `n`.
pub fn torsion_fiber_exact(curve: &CurveData, a: &Character, n: u64) -> Result<Vec<FiberPoint>> {
    let all = torsion_fiber(curve, a, n)?;
    let phi = character_restrict(curve, a)?;
    let proper: Vec<Poly> = (1..n)
        .filter(|j| n.is_multiple_of(*j))
        .map(|j| &phi.num().pow(j as u32) - &phi.den().pow(j as u32))
        .collect();
    Ok(all
        .into_iter()
        .filter(|p| !proper.iter().any(|g| p.minimal_polynomial.divides(g)))
        .collect())
}
