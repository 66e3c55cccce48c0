#![allow(dead_code)]

use std::path::PathBuf;

/// Brute-force generator over an explicit membership table: `b_n` is the
/// smallest unmarked value above `b_{n-1}`, and every `a`-value is marked as
/// soon as it is known. Returns `(a, b, u)` with index 0 unused.
pub fn membership_oracle(count: usize) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let limit = count + 3 * ((2.0 * count as f64).sqrt() as usize) + 16;
    let mut used = vec![false; limit + 2];
    let mut a = vec![0u64, 1];
    let mut b = vec![0u64];
    used[1] = true;
    let mut cand = 1usize;
    for n in 1..=count {
        cand += 1;
        while used[cand] {
            cand += 1;
        }
        used[cand] = true;
        b.push(cand as u64);
        let next = a[n] + cand as u64;
        a.push(next);
        if (next as usize) <= limit {
            used[next as usize] = true;
        }
    }
    a.truncate(count + 1);
    let u = (0..=count)
        .map(|n| if n == 0 { 0 } else { b[n] - n as u64 })
        .collect();
    (a, b, u)
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
}
