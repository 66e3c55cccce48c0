//! Coefficients and truncated evaluation of the asymptotic series
//!
//! ```text
//! u_n ~ sum_k alpha_k (n/2)^(1/2^k)
//! b_n ~ n + sum_k alpha_k (n/2)^(1/2^k)
//! a_n ~ n^2/2 + sum_k c_k (n/2)^(1 + 1/2^k)
//! ```
//!
//! with `alpha_k = (-1)^(k+1) 2^(1 + (k-1)k/2) / prod_{j<k} (2^j + 1)` and
//! `c_k = alpha_k 2^(k+1) / (2^k + 1)`, the coefficient obtained by
//! integrating the `k`-th term of the `u`-series.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::seqcore::SeqId;

pub type Rational = BigRational;

/// Largest supported truncation order.
pub const MAX_ORDER: u32 = 64;

/// Number of retained terms `K`, `1 <= K <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesOrder(u32);

impl SeriesOrder {
    pub fn new(k: u32) -> Result<Self> {
        if (1..=MAX_ORDER).contains(&k) {
            Ok(SeriesOrder(k))
        } else {
            Err(Error::domain(format!(
                "series order must be in 1..={MAX_ORDER}, got {k}"
            )))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for SeriesOrder {
    type Error = Error;

    fn try_from(k: u32) -> Result<Self> {
        SeriesOrder::new(k)
    }
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::domain("coefficient index must be at least 1"))
    } else {
        Ok(())
    }
}

/// Exact `alpha_k`, the coefficient of `(n/2)^(1/2^k)` in the `u`-series.
pub fn alpha(k: u32) -> Result<Rational> {
    check_k(k)?;
    let exp = 1 + (k - 1) * k / 2;
    let mut numer = pow2(exp);
    if k.is_multiple_of(2) {
        numer = -numer;
    }
    let denom = (1..k).fold(BigInt::one(), |acc, j| acc * (pow2(j) + 1));
    Ok(Rational::new(numer, denom))
}

/// Exact coefficient of `(n/2)^(1 + 1/2^k)` in the `a`-series.
pub fn a_coeff(k: u32) -> Result<Rational> {
    let alpha = alpha(k)?;
    Ok(alpha * Rational::new(pow2(k + 1), pow2(k) + 1))
}

/// `x^(1/2^k)` for `x >= 0`, without range checks on `k`.
pub(crate) fn nested_sqrt(mut x: f64, k: u32) -> f64 {
    for _ in 0..k {
        x = x.sqrt();
    }
    x
}

/// `x^(1/2^k)` by `k` successive square roots.
pub fn root_pow(x: f64, k: u32) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain(format!("root_pow of negative value {x}")));
    }
    SeriesOrder::new(k)?;
    Ok(nested_sqrt(x, k))
}

struct CoeffTable {
    u: Vec<f64>,
    a: Vec<f64>,
}

fn table() -> &'static CoeffTable {
    static TABLE: OnceLock<CoeffTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let to_f64 = |r: Rational| r.to_f64().expect("coefficient fits in f64");
        CoeffTable {
            u: (1..=MAX_ORDER).map(|k| to_f64(alpha(k).unwrap())).collect(),
            a: (1..=MAX_ORDER)
                .map(|k| to_f64(a_coeff(k).unwrap()))
                .collect(),
        }
    })
}

/// `sum_{k=1}^{K} coeffs[k-1] * (n/2)^(1/2^k)`, increasing `k`.
fn ladder(coeffs: &[f64], half_n: f64, order: SeriesOrder) -> f64 {
    let mut root = half_n;
    let mut sum = 0.0;
    for c in &coeffs[..order.get() as usize] {
        root = root.sqrt();
        sum += c * root;
    }
    sum
}

/// Truncated `u`-series at `n`.
///
/// The value is rounded onto the grid of `n + u`, so that
/// `eval_b_series(n, K) - eval_u_series(n, K) == n` holds bit for bit
/// (for `n <= 2^53`).
pub fn eval_u_series(n: u64, order: SeriesOrder) -> f64 {
    let x = n as f64;
    let raw = ladder(&table().u, x / 2.0, order);
    (x + raw) - x
}

/// Truncated `b`-series, `n + eval_u_series(n, K)`.
pub fn eval_b_series(n: u64, order: SeriesOrder) -> f64 {
    n as f64 + eval_u_series(n, order)
}

/// The part of the truncated `a`-series beyond `n^2/2`.
pub(crate) fn a_series_tail(n: u64, order: SeriesOrder) -> f64 {
    let half_n = n as f64 / 2.0;
    // (n/2)^(1 + 1/2^k) is taken as (n/2) * (n/2)^(1/2^k).
    ladder(&table().a, half_n, order) * half_n
}

/// Truncated `a`-series at `n`.
pub fn eval_a_series(n: u64, order: SeriesOrder) -> f64 {
    let x = n as f64;
    x * x / 2.0 + a_series_tail(n, order)
}

pub fn eval_series(seq: SeqId, n: u64, order: SeriesOrder) -> f64 {
    match seq {
        SeqId::A => eval_a_series(n, order),
        SeqId::B => eval_b_series(n, order),
        SeqId::U => eval_u_series(n, order),
    }
}

/// Exact coefficients for `K` terms of the `u`- or `a`-series.
pub fn coefficients(seq: SeqId, order: SeriesOrder) -> Vec<Rational> {
    (1..=order.get())
        .map(|k| match seq {
            SeqId::A => a_coeff(k),
            SeqId::B | SeqId::U => alpha(k),
        })
        .collect::<Result<_>>()
        .expect("k >= 1")
}
