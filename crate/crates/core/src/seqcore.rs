//! Streaming generator for the figure-figure sequences.
//!
//! `a` enumerates the lexicographically minimal set `A`, `b` lists its first
//! differences and fills the complement of `A`, and `u_n = b_n - n` counts how
//! far `b` runs ahead of the index. All three come out of a single stream of
//! [`Triple`]s.
//!
//! The generator runs the greedy rule `b_{n+1} = ` next integer above `b_n`
//! that is not an `a`-value. To know which candidates to skip it only needs
//! the `a`-values just above `b_n`, which sit at index `u_n + 1 ~ sqrt(2n)`.
//! Those are produced by a second, lagging copy of the same walk that appends
//! to a shared prefix and feeds its own skips from the front of that prefix.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which of the three sequences a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqId {
    A,
    B,
    U,
}

impl SeqId {
    pub const ALL: [SeqId; 3] = [SeqId::A, SeqId::B, SeqId::U];

    pub fn name(self) -> &'static str {
        match self {
            SeqId::A => "a",
            SeqId::B => "b",
            SeqId::U => "u",
        }
    }

    /// OEIS A-number of the sequence.
    pub fn oeis_id(self) -> &'static str {
        match self {
            SeqId::A => "A005228",
            SeqId::B => "A030124",
            SeqId::U => "A225687",
        }
    }
}

impl fmt::Display for SeqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(SeqId::A),
            "b" => Ok(SeqId::B),
            "u" => Ok(SeqId::U),
            other => Err(Error::domain(format!("unknown sequence `{other}`"))),
        }
    }
}

/// One row `(n, a_n, b_n, u_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub u: u64,
}

impl Triple {
    pub fn get(&self, seq: SeqId) -> u64 {
        match seq {
            SeqId::A => self.a,
            SeqId::B => self.b,
            SeqId::U => self.u,
        }
    }
}

impl From<(u64, u64, u64, u64)> for Triple {
    fn from((n, a, b, u): (u64, u64, u64, u64)) -> Self {
        Triple { n, a, b, u }
    }
}

/// Position of one greedy walk: the current `(n, a_n, b_n)` and the index in
/// the `a`-prefix of the smallest `a`-value above `b_n`.
#[derive(Debug, Clone)]
struct Walk {
    n: u64,
    a: u64,
    b: u64,
    skip: usize,
}

impl Walk {
    fn start() -> Self {
        // a_2 = 3 is the first a-value above b_1 = 2; it lives at offset 1.
        Walk {
            n: 1,
            a: 1,
            b: 2,
            skip: 1,
        }
    }

    fn next_a(&self) -> u64 {
        self.a
            .checked_add(self.b)
            .unwrap_or_else(|| panic!("a_{} overflows u64", self.n + 1))
    }

    /// Requires `prefix[self.skip]` to exist.
    fn step(&mut self, prefix: &[u64]) {
        self.a = self.next_a();
        let mut candidate = self.b + 1;
        // Consecutive a-values differ by at least 2, so at most one skip.
        if candidate == prefix[self.skip] {
            candidate += 1;
            self.skip += 1;
        }
        self.b = candidate;
        self.n += 1;
    }

    fn triple(&self) -> Triple {
        Triple {
            n: self.n,
            a: self.a,
            b: self.b,
            u: self.b - self.n,
        }
    }
}

/// Single-owner generator state. Each call to [`GenState::next_triple`] emits
/// the row for the next index, starting at `n = 1`.
///
/// Memory is the `a`-prefix, which holds `a_1 ..= a_{u_n + 2}` or so.
#[derive(Debug, Clone)]
pub struct GenState {
    a_prefix: Vec<u64>,
    lag: Walk,
    head: Walk,
    started: bool,
}

impl Default for GenState {
    fn default() -> Self {
        Self::new()
    }
}

impl GenState {
    pub fn new() -> Self {
        GenState {
            a_prefix: vec![1],
            lag: Walk::start(),
            head: Walk::start(),
            started: false,
        }
    }

    /// Index of the last emitted triple, 0 before the first call.
    pub fn n(&self) -> u64 {
        if self.started {
            self.head.n
        } else {
            0
        }
    }

    /// The stored prefix `a_1, a_2, ...`.
    pub fn a_prefix(&self) -> &[u64] {
        &self.a_prefix
    }

    /// Offset in [`Self::a_prefix`] of the smallest `a`-value above the
    /// current `b_n`.
    pub fn skip_cursor(&self) -> usize {
        self.head.skip
    }

    /// The last emitted triple, if any.
    pub fn current(&self) -> Option<Triple> {
        self.started.then(|| self.head.triple())
    }

    fn extend_prefix(&mut self) {
        let a = self.lag.next_a();
        self.a_prefix.push(a);
        self.lag.step(&self.a_prefix);
    }

    pub fn next_triple(&mut self) -> Triple {
        if !self.started {
            self.started = true;
            return self.head.triple();
        }
        while self.a_prefix.len() <= self.head.skip {
            self.extend_prefix();
        }
        self.head.step(&self.a_prefix);
        self.head.triple()
    }

    /// The next `count` triples in index order.
    pub fn take_triples(&mut self, count: usize) -> Vec<Triple> {
        (0..count).map(|_| self.next_triple()).collect()
    }
}

impl Iterator for GenState {
    type Item = Triple;

    fn next(&mut self) -> Option<Triple> {
        Some(self.next_triple())
    }
}

pub fn new_state() -> GenState {
    GenState::new()
}

/// Streams `count` triples from `state`.
pub fn take(state: &mut GenState, count: usize) -> Vec<Triple> {
    state.take_triples(count)
}

/// The `n`-th term of `seq`, by streaming from a fresh state.
pub fn value_at(seq: SeqId, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("index must be at least 1"));
    }
    let mut state = GenState::new();
    let mut row = state.next_triple();
    while row.n < n {
        row = state.next_triple();
    }
    Ok(row.get(seq))
}
