//! Integer combinatorics primitives: binomials with the cutoff conventions
//! used throughout the counting formulas, Stirling/Eulerian/weighted-Lah
//! numbers, and cyclic composition classes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Binomial coefficient with the conventions C(0,0) = 1 and C(n,k) = 0
/// whenever k < 0 or n < k (in particular for all negative n with k >= 0).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Unsigned Stirling number of the first kind, via the recurrence
/// [n,k] = (n-1)[n-1,k] + [n-1,k-1] with [0,0] = 1. Out-of-range k gives 0.
pub fn stirling_first_unsigned(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as usize;
    let n = n as usize;
    let mut row = vec![BigInt::zero(); n + 1];
    row[0] = BigInt::one();
    for i in 1..=n {
        let mut next = vec![BigInt::zero(); n + 1];
        for j in 1..=i {
            next[j] = BigInt::from(i as u64 - 1) * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// Eulerian number A(m,k) counting permutations of [m] with k descents,
/// so A(m,0) = 1 and A(m,1) = 2^m - m - 1. Zero for k < 0 or k >= max(m,1).
pub fn eulerian(m: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 >= m.max(1) {
        return BigInt::zero();
    }
    let m = m as usize;
    let k = k as usize;
    let mut row = vec![BigInt::one()];
    for i in 1..=m {
        let mut next = vec![BigInt::zero(); i];
        for j in 0..i {
            let from_same = if j < row.len() {
                BigInt::from(j as u64 + 1) * &row[j]
            } else {
                BigInt::zero()
            };
            let from_prev = if j >= 1 && j - 1 < row.len() {
                BigInt::from((i - j) as u64) * &row[j - 1]
            } else {
                BigInt::zero()
            };
            next[j] = from_same + from_prev;
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(BigInt::zero)
}

/// Weighted Lah number W(l,n,m): the count of weight-l partitions of [n]
/// into m linearly ordered blocks, evaluated by the closed-form double sum
/// W(l,n,m) = sum_{j=0}^{l} sum_{i=0}^{n-m} (-1)^{i+j} C(n,j)
///            C(m+l-j-1, m-1) [j, j-i] [n-j, m+i-j].
pub fn weighted_lah(l: u64, n: u64, m: u64) -> Result<BigInt> {
    if m == 0 || n == 0 || m > n {
        return Err(Error::InvalidInput(format!(
            "weighted_lah requires 1 <= m <= n, got n={n}, m={m}"
        )));
    }
    let mut acc = BigInt::zero();
    for j in 0..=l {
        for i in 0..=(n - m) {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let term = binomial(n as i64, j as i64)
                * binomial((m + l) as i64 - j as i64 - 1, m as i64 - 1)
                * stirling_first_unsigned(j, j as i64 - i as i64)
                * stirling_first_unsigned(n - j, (m + i) as i64 - j as i64);
            acc += sign * term;
        }
    }
    Ok(acc)
}

/// A composition with its cyclic-class metadata: length l, class size d
/// (the number of distinct rotations), and period sum T = n*d/l, the sum of
/// one least period.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<u64>,
    class_size: u64,
    period_sum: u64,
}

impl Composition {
    /// Builds a composition from its parts, normalizing to the
    /// lexicographically smallest rotation.
    pub fn new(parts: &[u64]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidInput(
                "composition parts must be positive".into(),
            ));
        }
        let canonical = (0..parts.len())
            .map(|i| {
                let mut rot = parts[i..].to_vec();
                rot.extend_from_slice(&parts[..i]);
                rot
            })
            .min()
            .unwrap();
        let distinct: std::collections::BTreeSet<Vec<u64>> = (0..parts.len())
            .map(|i| {
                let mut rot = parts[i..].to_vec();
                rot.extend_from_slice(&parts[..i]);
                rot
            })
            .collect();
        let d = distinct.len() as u64;
        let l = parts.len() as u64;
        let n: u64 = parts.iter().sum();
        debug_assert_eq!(l % d, 0);
        debug_assert_eq!((n * d) % l, 0);
        Ok(Self {
            parts: canonical,
            class_size: d,
            period_sum: n * d / l,
        })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> u64 {
        self.parts.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// d: the number of distinct cyclic rotations.
    pub fn class_size(&self) -> u64 {
        self.class_size
    }

    /// T = n*d/l: the sum over one least period.
    pub fn period_sum(&self) -> u64 {
        self.period_sum
    }
}

/// One canonical representative (lex-smallest rotation) per cyclic class of
/// compositions of n with at least two parts and all parts at least 2.
pub fn enumerate_gamma(n: u64) -> Vec<Composition> {
    let mut out = std::collections::BTreeSet::new();
    let mut parts = Vec::new();
    fn rec(
        remaining: u64,
        parts: &mut Vec<u64>,
        out: &mut std::collections::BTreeSet<Composition>,
    ) {
        if remaining == 0 {
            if parts.len() >= 2 {
                out.insert(Composition::new(parts).unwrap());
            }
            return;
        }
        for p in 2..=remaining {
            parts.push(p);
            rec(remaining - p, parts, out);
            parts.pop();
        }
    }
    rec(n, &mut parts, &mut out);
    out.into_iter().collect()
}
