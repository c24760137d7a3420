//! Class-table rows for ranges of odd n, with deterministic CSV and JSON
//! emission.
//!
//! CSV columns, in order: `n,phi,period_t,n_max,m_max,omega,kinds,theorem_source`.
//! The kinds column is always double-quoted; m_max is empty (CSV) or null
//! (JSON) when the minus class is empty. Lines end with LF.

use std::io::{self, Write};

use serde::Serialize;

use crate::arith::factorize;
use crate::classes::class_record;
use crate::error::{Error, Result};
use crate::theorems::{classify_by_theorems, residue_profile};

/// One row of the class table. `theorem_source` names the rule that decides
/// the verdict at k = omega(n), where the rule table is always conclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub phi: u64,
    pub period_t: u64,
    pub n_max: u64,
    pub m_max: Option<u64>,
    pub omega: u32,
    pub kinds: String,
    pub theorem_source: String,
}

/// Build the row for a single odd n >= 3.
pub fn table_row(n: u64) -> Result<TableRow> {
    let record = class_record(n)?;
    let f = factorize(n)?;
    let profile = residue_profile(&f)?;
    let omega = profile.omega() as u32;
    let verdict = classify_by_theorems(&f, omega)?;
    let source = verdict
        .source
        .expect("classification at k = omega is always decided");
    Ok(TableRow {
        n,
        phi: record.phi,
        period_t: record.period_t,
        n_max: record.n_max,
        m_max: record.m_max,
        omega,
        kinds: profile.kinds_string(),
        theorem_source: source.to_string(),
    })
}

/// Rows for every odd n with 1 < n < max_n, ascending.
pub fn build_table(max_n: u64) -> Result<Vec<TableRow>> {
    if max_n < 3 {
        return Err(Error::BelowMinimum(max_n));
    }
    (3..max_n).step_by(2).map(table_row).collect()
}

pub const CSV_HEADER: &str = "n,phi,period_t,n_max,m_max,omega,kinds,theorem_source";

/// Write the rows as CSV with the fixed header and LF line endings.
pub fn write_csv<W: Write>(rows: &[TableRow], out: &mut W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        let m_max = row.m_max.map(|m| m.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},\"{}\",{}",
            row.n, row.phi, row.period_t, row.n_max, m_max, row.omega, row.kinds,
            row.theorem_source
        )?;
    }
    Ok(())
}

/// Write the rows as a JSON array of flat objects, one per row, with the
/// same keys as the CSV columns.
pub fn write_json<W: Write>(rows: &[TableRow], out: &mut W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, rows)?;
    writeln!(out)?;
    Ok(())
}
