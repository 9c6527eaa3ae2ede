use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::AnalysisConfig;
use crate::curvegeom::{check_assumption, phi_enumerate, Character, CurveData};
use crate::error::{Error, Result};
use crate::exactcore::Rational;
use crate::intlattice::{min_content, primitive_witness};
use crate::multdep::{point_height, relation_lattice, root_of_unity_order, PointQ};
use crate::par::{self, Execution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Some listed character is `+-1` at the point.
    Fiber(Character),
    Exceptional,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Fiber(a) => write!(f, "FIBER({a})"),
            Classification::Exceptional => f.write_str("EXCEPTIONAL"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRecord {
    pub t: Rational,
    pub point: PointQ,
    pub dependent: bool,
    pub primitive: bool,
    /// A primitive relation when one exists, otherwise the first vector of
    /// the canonical relation basis.
    pub relation: Option<Vec<i64>>,
    pub height: f64,
    pub classification: Classification,
}

/// Parameters `p/q` in lowest terms with `q > 0` and `max(|p|, q) <= h`.
pub fn scan_parameters(h: u32) -> Vec<Rational> {
    let h = h as i64;
    let mut out = Vec::new();
    for q in 1..=h {
        for p in -h..=h {
            if p.gcd(&q) == 1 {
                out.push(Rational::new(BigInt::from(p), BigInt::from(q)));
            }
        }
    }
    out
}

fn evaluate(curve: &CurveData, t: &Rational) -> Option<PointQ> {
    let coords: Option<Vec<Rational>> = curve.coords().iter().map(|f| f.eval(t)).collect();
    PointQ::new(coords?).ok()
}

fn record(point: PointQ, t: Rational, chars: &[Character]) -> Result<Option<ScanRecord>> {
    let lattice = relation_lattice(&point)?;
    if lattice.is_empty() {
        return Ok(None);
    }
    let primitive = min_content(&lattice) == BigInt::from(1);
    let relation = if primitive {
        primitive_witness(&lattice)
    } else {
        lattice.canonical().vectors().first().cloned()
    };
    let relation = relation
        .map(|v| {
            let v: Vec<i64> = v
                .iter()
                .map(|x| i64::try_from(x).map_err(|_| Error::invariant("relation overflows i64")))
                .collect::<Result<_>>()?;
            Ok::<_, Error>(Character::new(v)?.canonical_sign().exponents().to_vec())
        })
        .transpose()?;
    let mut classification = Classification::Exceptional;
    for a in chars {
        if root_of_unity_order(&point.monomial(a.exponents())?).is_some() {
            classification = Classification::Fiber(a.clone());
            break;
        }
    }
    Ok(Some(ScanRecord {
        height: point_height(&point),
        t,
        point,
        dependent: true,
        primitive,
        relation,
        classification,
    }))
}

fn record_order(x: &ScanRecord, y: &ScanRecord) -> Ordering {
    x.height.total_cmp(&y.height).then_with(|| x.t.cmp(&y.t))
}

/// Dependent points among the scanned parameters, classified against the
/// canonical-sign members of `chars` in their given order.
pub fn scan_with_characters(
    curve: &CurveData,
    chars: &[Character],
    h: u32,
    exec: Execution,
) -> Result<Vec<ScanRecord>> {
    let canonical: Vec<Character> = chars
        .iter()
        .filter(|a| a.is_canonical_sign())
        .cloned()
        .collect();
    let params = scan_parameters(h);
    let found = par::try_map(exec, &params, |t| match evaluate(curve, t) {
        Some(p) => record(p, t.clone(), &canonical),
        None => Ok(None),
    })?;
    let mut records: Vec<ScanRecord> = found.into_iter().flatten().collect();
    records.sort_by(record_order);
    Ok(records)
}

/// Bounded-height scan for dependent points, sorted by `(height, t)`.
pub fn scan_dependent(curve: &CurveData, config: &AnalysisConfig) -> Result<Vec<ScanRecord>> {
    if let Some(a) = check_assumption(curve).violation() {
        return Err(Error::Precondition(format!(
            "character {a} is constant on the curve"
        )));
    }
    let chars: Vec<Character> = phi_enumerate(curve, config.execution)?
        .into_iter()
        .map(|nc| nc.character)
        .collect();
    scan_with_characters(curve, &chars, config.scan_height, config.execution)
}

impl ScanRecord {
    pub fn is_exceptional(&self) -> bool {
        self.classification == Classification::Exceptional
    }
}
