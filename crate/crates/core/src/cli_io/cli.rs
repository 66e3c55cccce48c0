//! The `figfig` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or comparison fails, 2 on
//! usage or input errors. Data goes to stdout (or `--out`), diagnostics to
//! stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::bfile::{compare_reference, parse_bfile, write_bfile, BFileRecord};
use super::table::{fmt_real, RowFormat, TableWriter};
use crate::asymptotics::{coefficients, eval_series, SeriesOrder, MAX_ORDER};
use crate::diagnostics::{decade_means, remainder_table, run_checks, Check};
use crate::error::{Error, Result};
use crate::seqcore::{GenState, SeqId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "figfig",
    version,
    about = "Hofstadter figure-figure sequences: exact terms and asymptotic series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate terms of a, b, u or whole triples
    Gen(GenArgs),
    /// Print exact series coefficients
    Coeffs(CoeffsArgs),
    /// Evaluate the truncated series at given indices
    Approx(ApproxArgs),
    /// Tabulate exact value, series value and scaled remainder
    Remainder(RemainderArgs),
    /// Run the partition, identity and bound checks
    Verify(VerifyArgs),
    /// Compare a b-file against the generated sequence
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Seq {
    A,
    B,
    U,
}

impl From<Seq> for SeqId {
    fn from(s: Seq) -> SeqId {
        match s {
            Seq::A => SeqId::A,
            Seq::B => SeqId::B,
            Seq::U => SeqId::U,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenSeq {
    A,
    B,
    U,
    Triple,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenFormat {
    Bfile,
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Jsonl,
}

impl From<TableFormat> for RowFormat {
    fn from(f: TableFormat) -> RowFormat {
        match f {
            TableFormat::Csv => RowFormat::Csv,
            TableFormat::Jsonl => RowFormat::Jsonl,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CoeffSeries {
    U,
    A,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckArg {
    Partition,
    Identities,
    Bounds,
    All,
}

#[derive(Debug, Args)]
struct OutArg {
    /// Write data here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutArg {
    fn open<'a>(&self, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(stdout)),
        })
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    seq: GenSeq,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    #[arg(long, value_enum, default_value = "bfile")]
    format: GenFormat,
    #[command(flatten)]
    out: OutArg,
}

fn order_arg() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..=MAX_ORDER as i64)
}

#[derive(Debug, Args)]
struct CoeffsArgs {
    #[arg(long, value_parser = order_arg())]
    order: u32,
    #[arg(long, value_enum, default_value = "u")]
    series: CoeffSeries,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Args)]
struct ApproxArgs {
    #[arg(long, value_enum)]
    seq: Seq,
    #[arg(long, value_parser = order_arg())]
    order: u32,
    /// Index to evaluate at; repeatable
    #[arg(long = "n", required = true, value_parser = clap::value_parser!(u64).range(1..))]
    ns: Vec<u64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Args)]
struct RemainderArgs {
    #[arg(long, value_enum)]
    seq: Seq,
    #[arg(long, value_parser = order_arg())]
    order: u32,
    /// Comma-separated, strictly increasing indices
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "decades",
        required_unless_present = "decades"
    )]
    ns: Vec<u64>,
    /// `lo:hi`, selecting n = 10^lo, ..., 10^hi
    #[arg(long, value_parser = parse_decades)]
    decades: Option<(u32, u32)>,
    /// With --decades, one row per decade holding the mean scaled remainder
    /// over [10^d, 10^(d+1))
    #[arg(long, requires = "decades")]
    mean: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[command(flatten)]
    out: OutArg,
}

fn parse_decades(s: &str) -> std::result::Result<(u32, u32), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: u32 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad decade `{lo}`"))?;
    let hi: u32 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad decade `{hi}`"))?;
    if lo > hi || hi > 18 {
        return Err(format!("need lo <= hi <= 18, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    check: CheckArg,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    upto: u64,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[arg(long, value_enum)]
    seq: Seq,
    #[arg(long)]
    bfile: PathBuf,
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen(args) => gen(args, stdout),
        Command::Coeffs(args) => coeffs(args, stdout),
        Command::Approx(args) => approx(args, stdout),
        Command::Remainder(args) => remainder(args, stdout, stderr),
        Command::Verify(args) => verify(args, stdout),
        Command::Compare(args) => compare(args, stdout),
    }
}

fn gen(args: GenArgs, stdout: &mut dyn Write) -> Result<i32> {
    let stream = GenState::new().take(args.count as usize);
    let mut out = args.out.open(stdout)?;
    let single = |seq: GenSeq| match seq {
        GenSeq::A => Some(SeqId::A),
        GenSeq::B => Some(SeqId::B),
        GenSeq::U => Some(SeqId::U),
        GenSeq::Triple => None,
    };
    match (args.format, single(args.seq)) {
        (GenFormat::Bfile, None) => {
            return Err(Error::domain(
                "a b-file holds one sequence; use --format csv or jsonl for triples",
            ));
        }
        (GenFormat::Bfile, Some(seq)) => {
            let records: Vec<BFileRecord> =
                stream.map(|t| BFileRecord::new(t.n, t.get(seq))).collect();
            write_bfile(&records, &mut out)?;
        }
        (GenFormat::Csv | GenFormat::Jsonl, which) => {
            let format = match args.format {
                GenFormat::Csv => RowFormat::Csv,
                _ => RowFormat::Jsonl,
            };
            match which {
                Some(seq) => {
                    let mut w = TableWriter::new(&mut out, format, &["n", seq.name()])?;
                    for t in stream {
                        w.row(&[t.n.to_string(), t.get(seq).to_string()])?;
                    }
                    w.finish()?;
                }
                None => {
                    let mut w = TableWriter::new(&mut out, format, &["n", "a", "b", "u"])?;
                    for t in stream {
                        w.row(&[
                            t.n.to_string(),
                            t.a.to_string(),
                            t.b.to_string(),
                            t.u.to_string(),
                        ])?;
                    }
                    w.finish()?;
                }
            }
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn coeffs(args: CoeffsArgs, stdout: &mut dyn Write) -> Result<i32> {
    let order = SeriesOrder::new(args.order)?;
    let seq = match args.series {
        CoeffSeries::U => SeqId::U,
        CoeffSeries::A => SeqId::A,
    };
    let text: Vec<String> = coefficients(seq, order)
        .iter()
        .map(|c| c.to_string())
        .collect();
    let mut out = args.out.open(stdout)?;
    writeln!(out, "{}", text.join(", "))?;
    out.flush()?;
    Ok(EXIT_OK)
}

fn approx(args: ApproxArgs, stdout: &mut dyn Write) -> Result<i32> {
    let order = SeriesOrder::new(args.order)?;
    let seq = SeqId::from(args.seq);
    let mut out = args.out.open(stdout)?;
    let mut w = TableWriter::new(&mut out, args.format.into(), &["n", "order", "series"])?;
    for &n in &args.ns {
        let v = eval_series(seq, n, order);
        w.row(&[n.to_string(), order.get().to_string(), fmt_real(v)])?;
    }
    w.finish()?;
    out.flush()?;
    Ok(EXIT_OK)
}

fn remainder(args: RemainderArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let order = SeriesOrder::new(args.order)?;
    let seq = SeqId::from(args.seq);
    let k = order.get();
    let scale = match seq {
        SeqId::A => format!("(n/2)^(1 + 1/2^{})", k + 1),
        _ => format!("(n/2)^(1/2^{})", k + 1),
    };
    writeln!(
        stderr,
        "# scaled = remainder / {scale}; no tolerance band is implied by the output"
    )?;
    let mut out = args.out.open(stdout)?;
    let format = RowFormat::from(args.format);
    match (args.decades, args.mean) {
        (Some((lo, hi)), true) => {
            let mut w = TableWriter::new(
                &mut out,
                format,
                &["decade", "lo", "hi", "order", "mean_scaled"],
            )?;
            for m in decade_means(seq, order, lo, hi)? {
                w.row(&[
                    m.decade.to_string(),
                    m.lo.to_string(),
                    m.hi.to_string(),
                    k.to_string(),
                    fmt_real(m.mean_scaled),
                ])?;
            }
            w.finish()?;
        }
        (decades, _) => {
            let ns: Vec<u64> = match decades {
                Some((lo, hi)) => (lo..=hi).map(|d| 10u64.pow(d)).collect(),
                None => args.ns,
            };
            let rows = remainder_table(seq, order, &ns)?;
            let mut w = TableWriter::new(
                &mut out,
                format,
                &["n", "order", "exact", "series", "remainder", "scaled"],
            )?;
            for r in rows {
                w.row(&[
                    r.n.to_string(),
                    k.to_string(),
                    r.exact.to_string(),
                    fmt_real(r.series),
                    fmt_real(r.remainder),
                    fmt_real(r.scaled),
                ])?;
            }
            w.finish()?;
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn verify(args: VerifyArgs, stdout: &mut dyn Write) -> Result<i32> {
    let checks: &[Check] = match args.check {
        CheckArg::Partition => &[Check::Partition],
        CheckArg::Identities => &[Check::Identities],
        CheckArg::Bounds => &[Check::Bounds],
        CheckArg::All => &Check::ALL,
    };
    let reports = run_checks(checks, args.upto)?;
    let mut out = args.out.open(stdout)?;
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    out.flush()?;
    Ok(if reports.iter().all(|r| r.passed()) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn compare(args: CompareArgs, stdout: &mut dyn Write) -> Result<i32> {
    let file = File::open(&args.bfile)?;
    let records = parse_bfile(BufReader::new(file))?;
    let report = compare_reference(&records, args.seq.into())?;
    writeln!(stdout, "{report}")?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}
