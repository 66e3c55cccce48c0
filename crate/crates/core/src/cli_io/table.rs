//! CSV and JSONL emission. Every field is numeric, so nothing is quoted.

use std::io::{self, Write};

/// Formats a real with 15 significant digits, `%.15g` style.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".to_owned()
        } else if x > 0.0 {
            "inf".to_owned()
        } else {
            "-inf".to_owned()
        };
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..15).contains(&exp) {
        let fixed = format!("{:.*}", (14 - exp) as usize, x);
        trim_zeros(&fixed).to_owned()
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowFormat {
    Csv,
    Jsonl,
}

/// Writes a header (CSV only) followed by one line per row.
pub struct TableWriter<W: Write> {
    out: W,
    format: RowFormat,
    columns: Vec<&'static str>,
}

impl<W: Write> TableWriter<W> {
    pub fn new(out: W, format: RowFormat, columns: &[&'static str]) -> io::Result<Self> {
        let mut w = TableWriter {
            out,
            format,
            columns: columns.to_vec(),
        };
        if format == RowFormat::Csv {
            writeln!(w.out, "{}", w.columns.join(","))?;
        }
        Ok(w)
    }

    pub fn row(&mut self, fields: &[String]) -> io::Result<()> {
        debug_assert_eq!(fields.len(), self.columns.len());
        match self.format {
            RowFormat::Csv => writeln!(self.out, "{}", fields.join(",")),
            RowFormat::Jsonl => {
                let body: Vec<String> = self
                    .columns
                    .iter()
                    .zip(fields)
                    .map(|(k, v)| format!("\"{k}\":{}", json_number(v)))
                    .collect();
                writeln!(self.out, "{{{}}}", body.join(","))
            }
        }
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.out.flush()?;
        Ok(self.out)
    }
}

fn json_number(v: &str) -> &str {
    match v {
        "NaN" | "inf" | "-inf" => "null",
        _ => v,
    }
}
