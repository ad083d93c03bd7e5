//! Machine-readable report types emitted by the command-line interface. The
//! JSON layout (field names and nesting) is a stable contract; all integer
//! fields round-trip exactly.

use serde::{Deserialize, Serialize};

use crate::ideal::Ideal;
use crate::invariants::{FamilyRow, InvariantReport, WhitneyReport};
use crate::poly::Ring;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TrialJson {
    pub seed: u64,
    pub m: u64,
    pub e_jac: u64,
    pub i0: u64,
}

/// Full invariant report for the `milnor` / `invariants` commands.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MilnorJson {
    pub schema_version: u32,
    pub input_digest: String,
    pub m: u64,
    pub e_jac: u64,
    pub i0: u64,
    pub mu: u64,
    pub polar_degree: u64,
    pub w0_generators: Vec<String>,
    pub trials: Vec<TrialJson>,
    pub agreement: bool,
    pub single_quotient_sufficed: bool,
    pub smoothability_assumed: bool,
    pub timings_ms: u128,
}

impl MilnorJson {
    pub fn from_report(report: &InvariantReport, digest: String, timings_ms: u128) -> Self {
        MilnorJson {
            schema_version: SCHEMA_VERSION,
            input_digest: digest,
            m: report.m,
            e_jac: report.e_jac,
            i0: report.i0,
            mu: report.mu,
            polar_degree: report.polar_degree,
            w0_generators: ideal_strings(&report.w0),
            trials: report
                .trials
                .iter()
                .map(|t| TrialJson {
                    seed: t.seed,
                    m: t.m,
                    e_jac: t.e_jac,
                    i0: t.i0,
                })
                .collect(),
            agreement: report.agreement,
            single_quotient_sufficed: report.single_quotient_sufficed,
            smoothability_assumed: report.smoothability_assumed,
            timings_ms,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyRowJson {
    pub t: String,
    pub global_colength: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversal: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyJson {
    pub schema_version: u32,
    pub input_digest: String,
    pub rows: Vec<FamilyRowJson>,
    pub timings_ms: u128,
}

impl FamilyJson {
    pub fn from_rows(rows: &[FamilyRow], digest: String, timings_ms: u128) -> Self {
        FamilyJson {
            schema_version: SCHEMA_VERSION,
            input_digest: digest,
            rows: rows
                .iter()
                .map(|r| FamilyRowJson {
                    t: r.t.to_string(),
                    global_colength: r.global_colength,
                    point_count: r.point_count,
                    transversal: r.transversal,
                })
                .collect(),
            timings_ms,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WhitneyRowJson {
    pub t: String,
    pub e_jac: u64,
    pub i0: u64,
    pub difference: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WhitneyJson {
    pub schema_version: u32,
    pub input_digest: String,
    pub rows: Vec<WhitneyRowJson>,
    pub verdict: String,
    pub timings_ms: u128,
}

impl WhitneyJson {
    pub fn from_report(report: &WhitneyReport, digest: String, timings_ms: u128) -> Self {
        WhitneyJson {
            schema_version: SCHEMA_VERSION,
            input_digest: digest,
            rows: report
                .rows
                .iter()
                .map(|r| WhitneyRowJson {
                    t: r.t.to_string(),
                    e_jac: r.e_jac,
                    i0: r.i0,
                    difference: r.difference(),
                })
                .collect(),
            verdict: if report.constant {
                "CONSTANT".into()
            } else {
                "NOT CONSTANT".into()
            },
            timings_ms,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleJson {
    pub schema_version: u32,
    pub input_digest: String,
    pub generators: Vec<u64>,
    pub delta: u64,
    pub gaps: Vec<u64>,
    pub branches: u64,
    pub mu: u64,
    pub timings_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColengthJson {
    pub schema_version: u32,
    pub input_digest: String,
    /// "INFINITE" or a number, kept as a string for the infinite case.
    pub at_origin: String,
    pub global: String,
    pub timings_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ErrorJson {
    pub schema_version: u32,
    pub error: String,
    pub exit_code: i32,
}

/// Canonical generator strings of an ideal, for display and JSON output.
pub fn ideal_strings(ideal: &Ideal) -> Vec<String> {
    ideal
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.display(&ideal.ring))
        .collect()
}

/// Helper for display of colength values.
pub fn colength_string(v: Option<u64>) -> String {
    match v {
        Some(v) => v.to_string(),
        None => "INFINITE".into(),
    }
}

/// Canonical generator strings with their ring, for text output convenience.
pub fn display_ideal(ideal: &Ideal, _ring: &Ring) -> String {
    ideal_strings(ideal).join(", ")
}
