use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::fiber::torsion_fiber_exact;
use super::parse::parse_curve;
use super::scan::scan_with_characters;
use super::{AnalysisConfig, OutputFormat};
use crate::curvegeom::{
    check_assumption, map_degree, phi_enumerate, phi_oracle, Character, CurveData,
    NormalizedCharacter,
};
use crate::error::Error;
use crate::exactcore::format_pq;

/// Above this many candidate exponent vectors the brute-force check of the
/// character list is skipped.
const ORACLE_CANDIDATE_LIMIT: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Config,
    Parse,
    MapDegree,
    Assumption,
    Phi,
    OracleCheck,
    Fibers,
    Scan,
    Render,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Config => "config",
            Stage::Parse => "parse",
            Stage::MapDegree => "map_degree",
            Stage::Assumption => "check_assumption",
            Stage::Phi => "phi_enumerate",
            Stage::OracleCheck => "phi_oracle",
            Stage::Fibers => "torsion_fiber",
            Stage::Scan => "scan_dependent",
            Stage::Render => "render",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{stage}: {error}")]
pub struct AnalysisError {
    pub stage: Stage,
    pub error: Error,
}

impl AnalysisError {
    pub fn exit_code(&self) -> i32 {
        self.error.exit_code()
    }
}

fn at<T>(stage: Stage, r: crate::Result<T>) -> Result<T, AnalysisError> {
    r.map_err(|error| AnalysisError { stage, error })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssumptionReport {
    pub ok: bool,
    pub violation: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhiEntry {
    pub a: Vec<i64>,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q")]
    pub q: String,
    pub m: u64,
    pub c: String,
    pub realizable_cyclotomic: bool,
}

impl From<&NormalizedCharacter> for PhiEntry {
    fn from(nc: &NormalizedCharacter) -> Self {
        PhiEntry {
            a: nc.character.exponents().to_vec(),
            p: nc.zero.label(),
            q: nc.pole.label(),
            m: nc.m,
            c: format_pq(&nc.c),
            realizable_cyclotomic: nc.realizable_cyclotomic,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub char: Vec<i64>,
    /// Exact order of the character value on these points.
    #[serde(rename = "N")]
    pub n: u64,
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub t: String,
    pub point: Vec<String>,
    pub dependent: bool,
    pub primitive: bool,
    pub relation: Option<Vec<i64>>,
    pub height: f64,
    pub class: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub max_dependent_height: f64,
    pub exceptional_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigReport {
    pub torsion_order: u64,
    pub scan_height: u32,
    pub oracle_bound: u32,
    /// Whether the character list was cross-checked against the exhaustive
    /// search in the `oracle_bound` box.
    pub oracle_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub curve: Vec<String>,
    pub map_degree: usize,
    pub assumption: AssumptionReport,
    pub phi: Vec<PhiEntry>,
    pub fibers: Vec<FiberEntry>,
    pub scan: Vec<ScanEntry>,
    pub summary: Summary,
    pub config: ConfigReport,
}

impl Report {
    /// 0 for a completed analysis, 3 when the curve violates the hypothesis.
    pub fn exit_code(&self) -> i32 {
        if self.assumption.ok {
            0
        } else {
            3
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.curve.iter().enumerate() {
            writeln!(s, "x{} = {c}", i + 1).unwrap();
        }
        writeln!(s, "map degree: {}", self.map_degree).unwrap();
        match &self.assumption.violation {
            None => writeln!(s, "assumption: ok").unwrap(),
            Some(a) => writeln!(s, "assumption: violated by {}", fmt_vec(a)).unwrap(),
        }
        if !self.assumption.ok {
            return s;
        }
        writeln!(s, "characters ({}):", self.phi.len()).unwrap();
        for e in &self.phi {
            writeln!(
                s,
                "  {:<12} P={} Q={} m={} c={} {}",
                fmt_vec(&e.a),
                e.p,
                e.q,
                e.m,
                e.c,
                if e.realizable_cyclotomic {
                    "cyclotomic"
                } else {
                    "non-cyclotomic"
                }
            )
            .unwrap();
        }
        writeln!(
            s,
            "torsion fibers (orders 1..={}):",
            self.config.torsion_order
        )
        .unwrap();
        for e in &self.fibers {
            writeln!(
                s,
                "  {:<12} order {:>3}: {}",
                fmt_vec(&e.char),
                e.n,
                e.factors.join("; ")
            )
            .unwrap();
        }
        writeln!(
            s,
            "dependent points with max(|p|, q) <= {} ({}):",
            self.config.scan_height,
            self.scan.len()
        )
        .unwrap();
        for e in &self.scan {
            let rel = e
                .relation
                .as_deref()
                .map(fmt_vec)
                .unwrap_or_else(|| "-".into());
            writeln!(
                s,
                "  t={:<8} h={:.6} ({}) rel={}{} {}",
                e.t,
                e.height,
                e.point.join(", "),
                rel,
                if e.primitive { "" } else { " non-primitive" },
                e.class
            )
            .unwrap();
        }
        writeln!(
            s,
            "max dependent height: {:.6}\nexceptional: {}",
            self.summary.max_dependent_height, self.summary.exceptional_count
        )
        .unwrap();
        s
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Text => self.to_text(),
        }
    }
}

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Parses `text` and runs [`analyze_curve`].
pub fn analyze(text: &str, config: &AnalysisConfig) -> Result<Report, AnalysisError> {
    at(Stage::Config, config.validate())?;
    let curve = at(Stage::Parse, parse_curve(text))?;
    analyze_curve(&curve, config)
}

/// Full pipeline on a parsed curve. A hypothesis violation yields a report
/// with `assumption.ok == false` and nothing else filled in; an improper
/// parametrization is an error.
pub fn analyze_curve(curve: &CurveData, config: &AnalysisConfig) -> Result<Report, AnalysisError> {
    at(Stage::Config, config.validate())?;
    let exec = config.execution;
    let degree = at(Stage::MapDegree, map_degree(curve))?;
    if degree != 1 {
        return at(
            Stage::MapDegree,
            Err(Error::ImproperParametrization(degree)),
        );
    }
    let oracle_checked = (2 * config.oracle_bound as u64 + 1)
        .checked_pow(curve.dim() as u32)
        .is_some_and(|k| k <= ORACLE_CANDIDATE_LIMIT);
    let mut report = Report {
        curve: curve.coords().iter().map(ToString::to_string).collect(),
        map_degree: degree,
        assumption: AssumptionReport {
            ok: true,
            violation: None,
        },
        phi: Vec::new(),
        fibers: Vec::new(),
        scan: Vec::new(),
        summary: Summary {
            max_dependent_height: 0.0,
            exceptional_count: 0,
        },
        config: ConfigReport {
            torsion_order: config.torsion_order,
            scan_height: config.scan_height,
            oracle_bound: config.oracle_bound,
            oracle_checked,
        },
    };
    if let Some(a) = check_assumption(curve).violation() {
        report.assumption = AssumptionReport {
            ok: false,
            violation: Some(a.exponents().to_vec()),
        };
        report.config.oracle_checked = false;
        return Ok(report);
    }

    let phi = at(Stage::Phi, phi_enumerate(curve, exec))?;
    let chars: Vec<Character> = phi.iter().map(|nc| nc.character.clone()).collect();
    if oracle_checked {
        let oracle = at(
            Stage::OracleCheck,
            phi_oracle(curve, config.oracle_bound, exec),
        )?;
        let boxed: Vec<Character> = chars
            .iter()
            .filter(|a| a.max_abs() <= config.oracle_bound as i64)
            .cloned()
            .collect();
        if boxed != oracle {
            return at(
                Stage::OracleCheck,
                Err(Error::invariant(format!(
                    "character list {boxed:?} disagrees with exhaustive search {oracle:?}"
                ))),
            );
        }
    }
    report.phi = phi.iter().map(PhiEntry::from).collect();

    for a in chars.iter().filter(|a| a.is_canonical_sign()) {
        for k in 1..=config.torsion_order {
            let pts = at(Stage::Fibers, torsion_fiber_exact(curve, a, k))?;
            if !pts.is_empty() {
                report.fibers.push(FiberEntry {
                    char: a.exponents().to_vec(),
                    n: k,
                    factors: pts
                        .iter()
                        .map(|p| p.minimal_polynomial.to_string())
                        .collect(),
                });
            }
        }
    }

    let records = at(
        Stage::Scan,
        scan_with_characters(curve, &chars, config.scan_height, exec),
    )?;
    report.summary = Summary {
        max_dependent_height: records.iter().map(|r| r.height).fold(0.0, f64::max),
        exceptional_count: records.iter().filter(|r| r.is_exceptional()).count(),
    };
    report.scan = records
        .iter()
        .map(|r| ScanEntry {
            t: format_pq(&r.t),
            point: r.point.coords().iter().map(format_pq).collect(),
            dependent: r.dependent,
            primitive: r.primitive,
            relation: r.relation.clone(),
            height: r.height,
            class: r.classification.to_string(),
        })
        .collect();
    Ok(report)
}
