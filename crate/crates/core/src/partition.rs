use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing vector of nonnegative integers of fixed length `n`.
///
/// Partitions are always stored padded with zeros to the ambient rank, so
/// `(2,1)` in rank 3 is `(2,1,0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition of length exactly `parts.len()`.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition { n: parts.len(), parts: parts.iter().map(|&p| p as i64).collect() });
        }
        Ok(Partition(parts))
    }

    /// Right-pads `parts` with zeros to length `n`.
    pub fn padded(parts: &[u32], n: usize) -> Result<Self> {
        if parts.len() > n {
            // Trailing zeros beyond n are harmless.
            if parts[n..].iter().any(|&p| p != 0) {
                return Err(Error::NotPartition { n, parts: parts.iter().map(|&p| p as i64).collect() });
            }
            return Partition::new(parts[..n].to_vec());
        }
        let mut v = parts.to_vec();
        v.resize(n, 0);
        Partition::new(v)
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// The staircase `(n-1, n-2, ..., 1, 0)`.
    pub fn staircase(n: usize) -> Self {
        Partition((0..n as u32).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `(0, λ₁, λ₁+λ₂, …, |λ|)`.
    pub fn partial_sums(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut acc = 0i64;
        out.push(0);
        for &p in &self.0 {
            acc += p as i64;
            out.push(acc);
        }
        out
    }

    pub fn scale(&self, k: u32) -> Self {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    pub fn add(&self, other: &Partition) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), actual: other.n() });
        }
        Ok(Partition(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Entrywise division by `k`, if every part is divisible.
    pub fn divide(&self, k: u32) -> Option<Self> {
        if self.0.iter().all(|p| p % k == 0) {
            Some(Partition(self.0.iter().map(|p| p / k).collect()))
        } else {
            None
        }
    }

    /// Whether `λ_i = λ_{i+1}` (1-based `i`), i.e. `s_i` stabilizes the partition.
    pub fn is_fixed_by(&self, i: usize) -> bool {
        self.0[i - 1] == self.0[i]
    }

    /// All partitions of length `n` with parts at most `max_part`, in
    /// lexicographically increasing order.
    pub fn all_bounded(n: usize, max_part: u32) -> Vec<Partition> {
        fn rec(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                let mut p = cur.clone();
                p.reverse();
                out.push(Partition(p));
                return;
            }
            // Built from the last part upward so the output is sorted.
            let lo = cur.last().copied().unwrap_or(0);
            for v in lo..=cap {
                cur.push(v);
                rec(n, cap, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, &mut Vec::with_capacity(n), &mut out);
        out.sort();
        out
    }

    /// All partitions of length `n` and total `size`, sorted.
    pub fn all_of_size(n: usize, size: u64) -> Vec<Partition> {
        fn rec(n: usize, remaining: u64, cap: u64, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                if remaining == 0 {
                    out.push(Partition(cur.clone()));
                }
                return;
            }
            let slots = (n - cur.len()) as u64;
            // The current part is the largest remaining one.
            let lo = remaining.div_ceil(slots);
            for v in lo..=cap.min(remaining) {
                cur.push(v as u32);
                rec(n, remaining - v, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if size == 0 {
                out.push(Partition(Vec::new()));
            }
            return out;
        }
        rec(n, size, size, &mut Vec::with_capacity(n), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated list such as `"2,1"` and pads it to length `n`.
pub fn parse_partition(s: &str, n: usize) -> Result<Partition> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let mut parts = Vec::new();
    if !s.is_empty() {
        for tok in s.split(',') {
            let v: i64 = tok.trim().parse().map_err(|_| Error::NotPartition { n, parts: vec![] })?;
            if v < 0 {
                return Err(Error::NotPartition { n, parts: vec![v] });
            }
            parts.push(v as u32);
        }
    }
    Partition::padded(&parts, n)
}
