//! Front-end pipeline: curve parsing, torsion fibers, bounded-height scans
//! and reports.

mod fiber;
mod parse;
mod report;
mod scan;

pub use fiber::{torsion_fiber, torsion_fiber_exact, torsion_fiber_split, FiberPoint, FiberSplit};
pub use parse::{parse_curve, parse_ratfunc};
pub use report::{
    analyze, analyze_curve, AnalysisError, AssumptionReport, ConfigReport, FiberEntry, PhiEntry,
    Report, ScanEntry, Stage, Summary,
};
pub use scan::{scan_dependent, scan_parameters, scan_with_characters, Classification, ScanRecord};

use crate::error::{Error, Result};
use crate::par::Execution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Fibers are listed for every order `1..=torsion_order`.
    pub torsion_order: u64,
    /// Scanned parameters satisfy `max(|p|, q) <= scan_height`.
    pub scan_height: u32,
    /// Exponent box for the brute-force cross-check of the character list.
    pub oracle_bound: u32,
    pub format: OutputFormat,
    pub execution: Execution,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            torsion_order: 12,
            scan_height: 50,
            oracle_bound: 6,
            format: OutputFormat::Json,
            execution: Execution::default(),
        }
    }
}

impl AnalysisConfig {
    pub fn validate(&self) -> Result<()> {
        if self.torsion_order == 0 || self.scan_height == 0 || self.oracle_bound == 0 {
            return Err(Error::domain(
                "torsion order, scan height and oracle bound must be >= 1",
            ));
        }
        Ok(())
    }
}
