//! Deterministic serialization of verification results.
//!
//! Three document families: the full verification report (one entry per
//! (p, r) pair, every check outcome included), the formula-only sweep table
//! (one row per odd prime, no group enumeration), and the class-number
//! cross-check summary.
//!
//! Schema rules, enforced by tests:
//! - every numeric value is a decimal string, never a native JSON number,
//!   so arbitrarily large multiplicities survive downstream tools intact;
//! - output is byte-deterministic for fixed inputs: fixed iteration orders
//!   and no timestamp unless one is supplied explicitly;
//! - parsing emitted JSON and re-serializing reproduces identical bytes.

use crate::arith::{check_nonresidue, fixed_nonresidue, odd_primes_up_to};
use crate::checks::{CheckOutcome, VerificationReport};
use crate::classnum::{class_number_dirichlet, class_number_forms};
use crate::cusp::mult_sum_closed_form;
use crate::error::Error;
use crate::verify::{gross_decomposition, n_diff_formula, solve_multiplicities};
use crate::{integer, rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Placeholder for a value that is not defined at this prime.
const ABSENT: &str = "-";

/// One check outcome as serialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: String,
    pub lhs: String,
    pub rhs: String,
}

impl From<&CheckOutcome> for CheckRecord {
    fn from(out: &CheckOutcome) -> Self {
        CheckRecord {
            name: out.name.to_string(),
            status: out.status.as_str().to_string(),
            lhs: out.lhs.clone(),
            rhs: out.rhs.clone(),
        }
    }
}

/// Headline numbers and check outcomes for one (p, r).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub p: String,
    pub r: String,
    pub h: String,
    pub n_diff: String,
    pub n_sum: String,
    pub n_plus: String,
    pub n_minus: String,
    pub checks: Vec<CheckRecord>,
}

/// One requested (p, r) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestedPair {
    pub p: String,
    pub r: String,
}

/// Check counts across all entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub total: String,
    pub passed: String,
    pub failed: String,
    pub skipped: String,
}

/// The top-level verification document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<String>,
    pub generated_for: Vec<RequestedPair>,
    pub entries: Vec<ReportEntry>,
    pub summary: ReportSummary,
}

fn opt_to_field<T: ToString>(value: &Option<T>) -> String {
    match value {
        Some(v) => v.to_string(),
        None => ABSENT.to_string(),
    }
}

impl ReportDocument {
    /// Assembles the document from finished verification runs.
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let entries: Vec<ReportEntry> = reports
            .iter()
            .map(|rep| ReportEntry {
                p: rep.p.to_string(),
                r: rep.r.to_string(),
                h: opt_to_field(&rep.h),
                n_diff: opt_to_field(&rep.n_diff),
                n_sum: opt_to_field(&rep.n_sum),
                n_plus: opt_to_field(&rep.n_plus),
                n_minus: opt_to_field(&rep.n_minus),
                checks: rep.checks.iter().map(CheckRecord::from).collect(),
            })
            .collect();
        let all: Vec<&CheckRecord> = entries.iter().flat_map(|e| &e.checks).collect();
        let count = |status: &str| all.iter().filter(|c| c.status == status).count();
        let summary = ReportSummary {
            total: all.len().to_string(),
            passed: count("pass").to_string(),
            failed: count("fail").to_string(),
            skipped: count("skipped").to_string(),
        };
        drop(all);
        ReportDocument {
            schema_version: "1".to_string(),
            generated_at: None,
            generated_for: reports
                .iter()
                .map(|rep| RequestedPair {
                    p: rep.p.to_string(),
                    r: rep.r.to_string(),
                })
                .collect(),
            entries,
            summary,
        }
    }

    /// Stamps a caller-supplied timestamp (output is otherwise timeless).
    pub fn with_timestamp(mut self, stamp: String) -> Self {
        self.generated_at = Some(stamp);
        self
    }

    /// True when no serialized check failed.
    pub fn passed(&self) -> bool {
        self.summary.failed == "0"
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            out.push_str(&format!(
                "verification for p = {}, r = {}\n",
                entry.p, entry.r
            ));
            out.push_str(&format!("  h       = {}\n", entry.h));
            out.push_str(&format!("  n_diff  = {}\n", entry.n_diff));
            out.push_str(&format!("  n_sum   = {}\n", entry.n_sum));
            out.push_str(&format!("  n_plus  = {}\n", entry.n_plus));
            out.push_str(&format!("  n_minus = {}\n", entry.n_minus));
            for check in &entry.checks {
                out.push_str(&format!(
                    "  {:<7} {:<24} {}",
                    check.status, check.name, check.lhs
                ));
                if check.rhs != ABSENT {
                    out.push_str(&format!("  vs  {}", check.rhs));
                }
                out.push('\n');
            }
        }
        out.push_str(&format!(
            "summary: {} checks, {} passed, {} failed, {} skipped\n",
            self.summary.total, self.summary.passed, self.summary.failed, self.summary.skipped
        ));
        out
    }
}

/// One formula-only sweep row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub p: u64,
    pub r: u32,
    /// None for p ≡ 1 (mod 4).
    pub h: Option<u64>,
    pub n_diff: BigInt,
    pub n_sum: BigInt,
    pub n_plus: BigInt,
    pub n_minus: BigInt,
    /// Whether n_sum is odd exactly when p ≡ 3 (mod 4).
    pub parity_ok: bool,
}

/// The sweep row as serialized (string numerics, native boolean).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowRecord {
    pub p: String,
    pub r: String,
    pub h: String,
    pub n_diff: String,
    pub n_sum: String,
    pub n_plus: String,
    pub n_minus: String,
    pub parity_ok: bool,
}

impl From<&TableRow> for TableRowRecord {
    fn from(row: &TableRow) -> Self {
        TableRowRecord {
            p: row.p.to_string(),
            r: row.r.to_string(),
            h: opt_to_field(&row.h),
            n_diff: row.n_diff.to_string(),
            n_sum: row.n_sum.to_string(),
            n_plus: row.n_plus.to_string(),
            n_minus: row.n_minus.to_string(),
            parity_ok: row.parity_ok,
        }
    }
}

/// Builds the sweep: one row per odd prime p ≤ p_max, all values from the
/// closed formulas (no group enumeration, so large p_max stays fast).
pub fn table_rows(p_max: u64, r: u32, nonresidue: Option<u64>) -> Result<Vec<TableRow>, Error> {
    if p_max < 3 {
        return Err(Error::InvalidInput(format!(
            "p_max = {p_max} must be at least 3"
        )));
    }
    if p_max >= 10_000 {
        return Err(Error::InvalidInput(format!(
            "p_max = {p_max} is outside the supported range (p_max < 10000)"
        )));
    }
    if !(2..=32).contains(&r) {
        return Err(Error::InvalidInput(format!(
            "level r = {r} must be between 2 and 32"
        )));
    }
    let mut rows = Vec::new();
    for p in odd_primes_up_to(p_max) {
        let nr = match nonresidue {
            Some(n) => check_nonresidue(n, p)?,
            None => fixed_nonresidue(p),
        };
        let h = if p % 4 == 3 {
            Some(class_number_forms(p)?)
        } else {
            None
        };
        let n_diff = n_diff_formula(p, r, nr)?;
        let n_sum = mult_sum_closed_form(p, r)?;
        let (n_plus, n_minus) = solve_multiplicities(p, r, nr)?;
        let sum_odd = &n_sum % BigInt::from(2) != BigInt::zero();
        rows.push(TableRow {
            p,
            r,
            h,
            n_diff,
            n_sum,
            n_plus,
            n_minus,
            parity_ok: sum_odd == (p % 4 == 3),
        });
    }
    Ok(rows)
}

/// CSV with a header row; no quoting is ever needed (numeric/boolean/dash
/// fields only).
pub fn table_to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("p,r,h,n_diff,n_sum,n_plus,n_minus,parity_ok\n");
    for row in rows {
        let rec = TableRowRecord::from(row);
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            rec.p, rec.r, rec.h, rec.n_diff, rec.n_sum, rec.n_plus, rec.n_minus, rec.parity_ok
        ));
    }
    out
}

pub fn table_to_json(rows: &[TableRow]) -> String {
    let records: Vec<TableRowRecord> = rows.iter().map(TableRowRecord::from).collect();
    let mut out = serde_json::to_string_pretty(&records).expect("table serializes");
    out.push('\n');
    out
}

pub fn table_to_text(rows: &[TableRow]) -> String {
    let records: Vec<TableRowRecord> = rows.iter().map(TableRowRecord::from).collect();
    let headers = [
        "p", "r", "h", "n_diff", "n_sum", "n_plus", "n_minus", "parity_ok",
    ];
    let cells = |rec: &TableRowRecord| -> [String; 8] {
        [
            rec.p.clone(),
            rec.r.clone(),
            rec.h.clone(),
            rec.n_diff.clone(),
            rec.n_sum.clone(),
            rec.n_plus.clone(),
            rec.n_minus.clone(),
            rec.parity_ok.to_string(),
        ]
    };
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for rec in &records {
        for (w, cell) in widths.iter_mut().zip(cells(rec)) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = String::new();
    for (w, h) in widths.iter().zip(headers) {
        line.push_str(&format!("{h:>w$}  "));
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for rec in &records {
        let mut line = String::new();
        for (w, cell) in widths.iter().zip(cells(rec)) {
            line.push_str(&format!("{cell:>w$}  "));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Class-number cross-check for one prime p ≡ 3 (mod 4): h from the
/// reduced-forms oracle plus agreement flags for the independent routes.
/// The flag strings are "true"/"false", or "-" where the route is not
/// stated (p = 3, whose field has extra units).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassNumberRecord {
    pub p: String,
    pub h: String,
    pub dirichlet_agrees: String,
    pub gross_agrees: String,
}

pub fn classnum_record(p: u64, nonresidue: Option<u64>) -> Result<ClassNumberRecord, Error> {
    let h = class_number_forms(p)?; // rejects p ≢ 3 (mod 4) and non-primes
    let (dirichlet, gross);
    if p == 3 {
        dirichlet = ABSENT.to_string();
        gross = ABSENT.to_string();
    } else {
        let nr = match nonresidue {
            Some(n) => check_nonresidue(n, p)?,
            None => fixed_nonresidue(p),
        };
        dirichlet = (class_number_dirichlet(p)? == h).to_string();
        let (rat, root) = gross_decomposition(p, nr)?;
        let agree = rat == rational((p as i64 - 1) / 2, 1) && root == integer(h as i64);
        gross = agree.to_string();
    }
    Ok(ClassNumberRecord {
        p: p.to_string(),
        h: h.to_string(),
        dirichlet_agrees: dirichlet,
        gross_agrees: gross,
    })
}

pub fn classnum_to_json(record: &ClassNumberRecord) -> String {
    let mut out = serde_json::to_string_pretty(record).expect("record serializes");
    out.push('\n');
    out
}

pub fn classnum_to_text(record: &ClassNumberRecord) -> String {
    let describe = |flag: &str| match flag {
        "true" => "agree".to_string(),
        "false" => "DISAGREE".to_string(),
        _ => "not applicable".to_string(),
    };
    format!(
        "p = {}\nh = {} (reduced forms)\ndirichlet: {}\ngross: {}\n",
        record.p,
        record.h,
        describe(&record.dirichlet_agrees),
        describe(&record.gross_agrees)
    )
}
