//! OEIS b-file reading, writing and comparison.
//!
//! A b-file is plain text with one `index value` pair per line. Lines whose
//! first non-blank character is `#` are comments. Indices must be contiguous.

use std::io::{BufRead, Write};

use num_bigint::BigInt;

use crate::diagnostics::CheckReport;
use crate::error::{Error, Result};
use crate::seqcore::{GenState, SeqId, Triple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileRecord {
    pub index: u64,
    pub value: BigInt,
}

impl BFileRecord {
    pub fn new(index: u64, value: impl Into<BigInt>) -> Self {
        BFileRecord {
            index,
            value: value.into(),
        }
    }
}

/// Records for one sequence column of a run of triples.
pub fn records_from_triples(seq: SeqId, rows: &[Triple]) -> Vec<BFileRecord> {
    rows.iter()
        .map(|t| BFileRecord::new(t.n, t.get(seq)))
        .collect()
}

pub fn parse_bfile<R: BufRead>(reader: R) -> Result<Vec<BFileRecord>> {
    let mut records: Vec<BFileRecord> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `index value`, got `{line}`"),
            });
        };
        let index: u64 = index.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad index `{index}`"),
        })?;
        let value: BigInt = value.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad value `{value}`"),
        })?;
        if let Some(prev) = records.last() {
            let expected = prev.index + 1;
            if index != expected {
                return Err(Error::Gap {
                    line: line_no,
                    expected,
                    found: index,
                });
            }
        }
        records.push(BFileRecord { index, value });
    }
    Ok(records)
}

/// Parses a b-file held in memory.
pub fn parse_bfile_str(text: &str) -> Result<Vec<BFileRecord>> {
    parse_bfile(text.as_bytes())
}

pub fn write_bfile<W: Write>(records: &[BFileRecord], mut out: W) -> Result<()> {
    if let Some(w) = records.windows(2).find(|w| w[1].index != w[0].index + 1) {
        return Err(Error::domain(format!(
            "records not contiguous: index {} follows {}",
            w[1].index, w[0].index
        )));
    }
    for r in records {
        writeln!(out, "{} {}", r.index, r.value)?;
    }
    Ok(())
}

/// Streams `seq` and compares it against `records` value by value.
pub fn compare_reference(records: &[BFileRecord], seq: SeqId) -> Result<CheckReport> {
    let (Some(first), Some(last)) = (records.first(), records.last()) else {
        return Err(Error::domain("reference has no records"));
    };
    if first.index == 0 {
        return Err(Error::domain(
            "reference starts at index 0; sequences have offset 1",
        ));
    }
    let mut report = CheckReport {
        name: format!("compare {} ({})", seq, seq.oeis_id()),
        lo: first.index,
        hi: last.index,
        first_failure: None,
    };
    let mut stream = GenState::new().skip_while(|t| t.n < first.index);
    for (rec, t) in records.iter().zip(&mut stream) {
        let got = BigInt::from(t.get(seq));
        if got != rec.value {
            report.first_failure = Some(crate::diagnostics::Failure {
                n: rec.index,
                detail: format!("reference has {}, expected {}", rec.value, got),
            });
            break;
        }
    }
    Ok(report)
}
