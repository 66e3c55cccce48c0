//! Range checks of the defining identities and bounds, and remainder tables
//! for the truncated series.
//!
//! Checks never panic or abort on a violation: they stop at the first
//! failing index and record it in the [`CheckReport`].

use std::fmt;
use std::thread;

use crate::asymptotics::{a_series_tail, eval_series, nested_sqrt, SeriesOrder};
use crate::error::{Error, Result};
use crate::seqcore::{GenState, SeqId, Triple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub n: u64,
    pub detail: String,
}

/// Outcome of one check over `lo..=hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub lo: u64,
    pub hi: u64,
    pub first_failure: Option<Failure>,
}

impl CheckReport {
    fn new(name: &str, lo: u64, hi: u64) -> Self {
        CheckReport {
            name: name.to_owned(),
            lo,
            hi,
            first_failure: None,
        }
    }

    fn failed(mut self, n: u64, detail: impl Into<String>) -> Self {
        self.first_failure = Some(Failure {
            n,
            detail: detail.into(),
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}, {}] ", self.name, self.lo, self.hi)?;
        match &self.first_failure {
            None => f.write_str("PASS"),
            Some(fail) => write!(f, "FAIL at n = {}: {}", fail.n, fail.detail),
        }
    }
}

/// Which check to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Partition,
    Identities,
    Bounds,
}

impl Check {
    pub const ALL: [Check; 3] = [Check::Partition, Check::Identities, Check::Bounds];

    pub fn run(self, upto: u64) -> Result<CheckReport> {
        match self {
            Check::Partition => check_partition(upto),
            Check::Identities => check_identities(upto),
            Check::Bounds => check_bounds(upto),
        }
    }
}

/// Runs several checks on their own threads. Reports come back in input order.
pub fn run_checks(checks: &[Check], upto: u64) -> Result<Vec<CheckReport>> {
    thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|&c| scope.spawn(move || c.run(upto)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    })
}

/// Every integer in `1..=upto` is exactly one of an `a`-value or a `b`-value.
///
/// Both streams are increasing, so a merge of the two walks `1, 2, 3, ...`
/// with no table.
pub fn check_partition(upto: u64) -> Result<CheckReport> {
    if upto == 0 {
        return Err(Error::domain("partition check needs N >= 1"));
    }
    let report = CheckReport::new("partition", 1, upto);
    let mut a_stream = GenState::new().map(|t| t.a);
    let mut b_stream = GenState::new().map(|t| t.b);
    let mut next_a = a_stream.next().unwrap();
    let mut next_b = b_stream.next().unwrap();
    let mut expected = 1u64;
    while expected <= upto {
        if next_a == next_b {
            return Ok(report.failed(next_a, format!("{next_a} is both an a-value and a b-value")));
        }
        let v = if next_a < next_b {
            let v = next_a;
            next_a = a_stream.next().unwrap();
            if next_a <= v {
                return Ok(report.failed(v, "a-values not increasing"));
            }
            v
        } else {
            let v = next_b;
            next_b = b_stream.next().unwrap();
            if next_b <= v {
                return Ok(report.failed(v, "b-values not increasing"));
            }
            v
        };
        if v != expected {
            let detail = if v > expected {
                format!("{expected} is neither an a-value nor a b-value")
            } else {
                format!("{v} appears more than once")
            };
            return Ok(report.failed(expected, detail));
        }
        expected += 1;
    }
    Ok(report)
}

/// `a`-values by index, extended on demand from a separate stream.
struct ALookup {
    stream: GenState,
    values: Vec<u64>,
}

impl ALookup {
    fn new() -> Self {
        ALookup {
            stream: GenState::new(),
            values: Vec::new(),
        }
    }

    /// `a_k` for `k >= 1`.
    fn get(&mut self, k: u64) -> i128 {
        let idx = (k - 1) as usize;
        while self.values.len() <= idx {
            self.values.push(self.stream.next_triple().a);
        }
        self.values[idx] as i128
    }
}

/// The recurrence `b_n = a_{n+1} - a_n`, `b_n = n + u_n`, the closed form
/// `a_n = 1 + (n-1)n/2 + sum_{k<n} u_k`, the inverse inequality
/// `a(u_n) - u_n < n <= a(u_n + 1) - (u_n + 1)`, and monotonicity
/// (`b` increasing, `u_{n+1} - u_n` in `{0, 1}`).
pub fn check_identities(upto: u64) -> Result<CheckReport> {
    if upto < 2 {
        return Err(Error::domain("identity check needs N >= 2"));
    }
    let report = CheckReport::new("identities", 1, upto);
    let mut stream = GenState::new();
    let mut lookup = ALookup::new();
    let mut cur = stream.next_triple();
    let mut u_sum: u128 = 0;
    while cur.n <= upto {
        let next = stream.next_triple();
        let Triple { n, a, b, u } = cur;

        if next.a.checked_sub(a) != Some(b) {
            return Ok(report.failed(n, format!("b_n = {b} but a_(n+1) - a_n = {} - {a}", next.a)));
        }
        if b != n + u {
            return Ok(report.failed(n, format!("b_n = {b} but n + u_n = {}", n + u)));
        }
        let closed = 1 + (n as u128 - 1) * n as u128 / 2 + u_sum;
        if a as u128 != closed {
            return Ok(report.failed(n, format!("a_n = {a} but closed form gives {closed}")));
        }
        let (n_i, u_i) = (n as i128, u as i128);
        let left = lookup.get(u) - u_i;
        let right = lookup.get(u + 1) - (u_i + 1);
        if !(left < n_i && n_i <= right) {
            return Ok(report.failed(
                n,
                format!("inverse inequality {left} < {n} <= {right} violated for u_n = {u}"),
            ));
        }
        if next.b <= b {
            return Ok(report.failed(n, "b not strictly increasing"));
        }
        if next.u != u && next.u != u + 1 {
            return Ok(report.failed(n, format!("u step {u} -> {}", next.u)));
        }

        u_sum += u as u128;
        cur = next;
    }
    Ok(report)
}

/// `1 <= u_n < sqrt(2n) + 1/2`, `n + 1 <= b_n < n + sqrt(2n) + 1/2` and
/// `n^2/2 + n/2 <= a_n < n^2/2 + 2^(3/2)/3 n^(3/2) - 1/3`, all compared in
/// integer arithmetic.
pub fn check_bounds(upto: u64) -> Result<CheckReport> {
    if upto == 0 {
        return Err(Error::domain("bounds check needs N >= 1"));
    }
    let report = CheckReport::new("bounds", 1, upto);
    for Triple { n, a, b, u } in GenState::new().take_while(|t| t.n <= upto) {
        let n_i = n as i128;
        let eight_n = 8 * n_i;
        // x - 1/2 < sqrt(2n)  <=>  (2x - 1)^2 < 8n, for x >= 1.
        let below_root = |x: i128| (2 * x - 1) * (2 * x - 1) < eight_n;

        if u < 1 {
            return Ok(report.failed(n, "u_n < 1"));
        }
        if !below_root(u as i128) {
            return Ok(report.failed(n, format!("u_n = {u} >= sqrt(2n) + 1/2")));
        }
        if b < n + 1 {
            return Ok(report.failed(n, format!("b_n = {b} < n + 1")));
        }
        if !below_root(b as i128 - n_i) {
            return Ok(report.failed(n, format!("b_n = {b} >= n + sqrt(2n) + 1/2")));
        }
        let a_i = a as i128;
        if n_i * (n_i + 1) > 2 * a_i {
            return Ok(report.failed(n, format!("a_n = {a} < n^2/2 + n/2")));
        }
        // a < n^2/2 + 2^(3/2)/3 n^(3/2) - 1/3  <=>  x < sqrt(32 n^3) with
        // x = 6a - 3n^2 + 2; only squared when x is positive.
        let x = 6 * a_i - 3 * n_i * n_i + 2;
        if x > 0 {
            let lhs = x.checked_mul(x).expect("bound check overflow");
            let rhs = 32 * n_i * n_i * n_i;
            if lhs >= rhs {
                return Ok(
                    report.failed(n, format!("a_n = {a} >= n^2/2 + 2^(3/2)/3 n^(3/2) - 1/3"))
                );
            }
        }
    }
    Ok(report)
}

/// One line of a remainder table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemainderRow {
    pub n: u64,
    pub order: SeriesOrder,
    pub exact: u64,
    pub series: f64,
    pub remainder: f64,
    /// Remainder divided by the scale of the first dropped term.
    pub scaled: f64,
}

/// Remainder row for `seq` read off the triple `t`.
pub fn remainder_row(seq: SeqId, order: SeriesOrder, t: &Triple) -> RemainderRow {
    let n = t.n;
    let exact = t.get(seq);
    let series = eval_series(seq, n, order);
    let half_n = n as f64 / 2.0;
    let next_scale = nested_sqrt(half_n, order.get() + 1);
    let (remainder, scaled) = match seq {
        SeqId::U | SeqId::B => {
            let r = exact as f64 - series;
            (r, r / next_scale)
        }
        SeqId::A => {
            // a_n - n^2/2 is formed exactly before going to floating point.
            let n_i = n as i128;
            let excess = (2 * exact as i128 - n_i * n_i) as f64 / 2.0;
            let r = excess - a_series_tail(n, order);
            (r, r / (half_n * next_scale))
        }
    };
    RemainderRow {
        n,
        order,
        exact,
        series,
        remainder,
        scaled,
    }
}

fn check_increasing(ns: &[u64]) -> Result<()> {
    match ns.first() {
        None => return Err(Error::domain("no indices requested")),
        Some(0) => return Err(Error::domain("indices start at 1")),
        _ => {}
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("indices must be strictly increasing"));
    }
    Ok(())
}

/// Rows for each `n` in `ns`, from one pass over the stream.
pub fn remainder_table(seq: SeqId, order: SeriesOrder, ns: &[u64]) -> Result<Vec<RemainderRow>> {
    check_increasing(ns)?;
    let mut stream = GenState::new();
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let t = loop {
            let t = stream.next_triple();
            if t.n == n {
                break t;
            }
        };
        rows.push(remainder_row(seq, order, &t));
    }
    Ok(rows)
}

/// Mean scaled remainder over `n` in `[10^d, 10^(d+1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecadeMean {
    pub decade: u32,
    pub lo: u64,
    pub hi: u64,
    pub mean_scaled: f64,
}

/// Decade means for `d` in `first..=last`, from one pass over the stream.
pub fn decade_means(
    seq: SeqId,
    order: SeriesOrder,
    first: u32,
    last: u32,
) -> Result<Vec<DecadeMean>> {
    if first > last {
        return Err(Error::domain("decade range is empty"));
    }
    if last >= 19 {
        return Err(Error::domain("decades beyond 10^18 are out of range"));
    }
    let mut stream = GenState::new();
    let mut out = Vec::new();
    for d in first..=last {
        let (lo, hi) = (10u64.pow(d), 10u64.pow(d + 1));
        let mut sum = 0.0;
        for t in stream.by_ref() {
            if t.n >= lo {
                sum += remainder_row(seq, order, &t).scaled;
            }
            if t.n + 1 == hi {
                break;
            }
        }
        out.push(DecadeMean {
            decade: d,
            lo,
            hi,
            mean_scaled: sum / (hi - lo) as f64,
        });
    }
    Ok(out)
}
