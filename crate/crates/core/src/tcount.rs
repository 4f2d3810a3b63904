//! Exact values of `T(n)`.
//!
//! Three independent routes are provided and must agree:
//!
//! * [`t_closed`] decomposes `n = 2^{k_1} + … + 2^{k_t}` (`k_1 > … > k_t`)
//!   and sums `k_j 2^{k_j - 1} + (j - 1) 2^{k_j}`;
//! * [`t_hamming_sum`] adds the Hamming weights `H(0) + … + H(n - 1)`;
//! * [`t_recurrence`] walks `T(1) = 0`, `T(k + 1) = T(k) + H(k)`.
//!
//! All counts are `u64`. Inputs above [`MAX_N`] are rejected instead of
//! wrapping.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `n` accepted by the counting functions.
pub const MAX_N: u64 = 1 << 50;

/// Number of one bits in the binary expansion of `n`.
#[inline]
pub fn hamming_weight(n: u64) -> u32 {
    n.count_ones()
}

/// `⌈log₂ n⌉` for `n ≥ 1`, read off the bit length of `n - 1`.
#[inline]
pub fn ceil_log2(n: u64) -> u32 {
    debug_assert!(n >= 1);
    u64::BITS - (n - 1).leading_zeros()
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: "1..=2^50",
        });
    }
    Ok(())
}

/// `T(n)` from the binary-expansion closed form.
pub fn t_closed(n: u64) -> Result<u64> {
    check_n(n)?;
    let mut total = 0u64;
    let mut rest = n;
    // j - 1 = number of higher bits already consumed
    let mut higher = 0u64;
    while rest != 0 {
        let k = 63 - rest.leading_zeros();
        let block = 1u64 << k;
        let cube_edges = if k == 0 { 0 } else { u64::from(k) << (k - 1) };
        total += cube_edges + higher * block;
        higher += 1;
        rest ^= block;
    }
    Ok(total)
}

/// `T(n) = Σ_{k<n} H(k)`, evaluated in `O(log n)` by counting, for every
/// bit position, how many integers below `n` have that bit set.
pub fn t_hamming_sum(n: u64) -> Result<u64> {
    check_n(n)?;
    let mut total = 0u64;
    for bit in 0..u64::BITS - n.leading_zeros() {
        let period = 1u64 << (bit + 1);
        let half = 1u64 << bit;
        let full = n / period;
        let rem = n % period;
        total += full * half + rem.saturating_sub(half);
    }
    Ok(total)
}

/// `T(n)` by stepping the increment `T(k + 1) - T(k) = H(k)` from `T(1) = 0`.
///
/// Linear in `n`; use [`TRecurrence`] to walk a whole range instead of
/// calling this repeatedly.
pub fn t_recurrence(n: u64) -> Result<u64> {
    check_n(n)?;
    Ok(TRecurrence::new()
        .nth((n - 1) as usize)
        .map(|(_, t)| t)
        .unwrap_or(0))
}

/// Iterator over `(n, T(n))` for `n = 1, 2, …` driven by the Hamming-weight
/// increment.
#[derive(Debug, Clone)]
pub struct TRecurrence {
    n: u64,
    t: u64,
}

impl TRecurrence {
    pub fn new() -> Self {
        TRecurrence { n: 1, t: 0 }
    }
}

impl Default for TRecurrence {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for TRecurrence {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<Self::Item> {
        if self.n > MAX_N {
            return None;
        }
        let item = (self.n, self.t);
        self.t += u64::from(hamming_weight(self.n));
        self.n += 1;
        Some(item)
    }
}

/// An unreduced fraction with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    /// `self < value`, exactly.
    pub fn lt_int(&self, value: u64) -> bool {
        u128::from(self.num) < u128::from(value) * u128::from(self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Bounds `n(⌈log₂ n⌉ - 1)/4 < T(n) < n⌈log₂ n⌉`, valid for `n ≥ 2`.
///
/// The lower bound is returned as the fraction with denominator 4.
pub fn t_bounds(n: u64) -> Result<(Fraction, u64)> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: "2..=2^50",
        });
    }
    check_n(n)?;
    let log = u64::from(ceil_log2(n));
    Ok((
        Fraction {
            num: n * (log - 1),
            den: 4,
        },
        n * log,
    ))
}

/// All three routes to `T(n)` side by side, together with the bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TCountReport {
    pub n: u64,
    pub t_closed: u64,
    pub t_hamming_sum: u64,
    pub t_recurrence: u64,
    /// `None` for `n = 1`, where the bounds do not apply.
    pub lower_bound: Option<Fraction>,
    pub upper_bound: Option<u64>,
}

impl TCountReport {
    /// Builds the report; the recurrence route is linear in `n`.
    pub fn new(n: u64) -> Result<Self> {
        let bounds = if n >= 2 { Some(t_bounds(n)?) } else { None };
        Ok(TCountReport {
            n,
            t_closed: t_closed(n)?,
            t_hamming_sum: t_hamming_sum(n)?,
            t_recurrence: t_recurrence(n)?,
            lower_bound: bounds.map(|b| b.0),
            upper_bound: bounds.map(|b| b.1),
        })
    }

    pub fn is_consistent(&self) -> bool {
        let routes_agree =
            self.t_closed == self.t_hamming_sum && self.t_hamming_sum == self.t_recurrence;
        let bounds_hold = match (self.lower_bound, self.upper_bound) {
            (Some(lo), Some(hi)) => lo.lt_int(self.t_closed) && self.t_closed < hi,
            _ => self.n == 1,
        };
        routes_agree && bounds_hold
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn popcount_by_shifting(mut n: u64) -> u64 {
        let mut c = 0;
        while n != 0 {
            c += n & 1;
            n >>= 1;
        }
        c
    }

    fn naive_sum(n: u64) -> u64 {
        (0..n).map(popcount_by_shifting).sum()
    }

    #[test]
    fn hamming_weight_examples() {
        assert_eq!(hamming_weight(0), 0);
        assert_eq!(hamming_weight(13), 3);
        assert_eq!(u64::from(hamming_weight(13)), popcount_by_shifting(13));
        for k in 0..63 {
            assert_eq!(hamming_weight(1 << k), 1);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(t_closed(1).unwrap(), 0);
        assert_eq!(t_closed(8).unwrap(), 12);
        assert_eq!(t_closed(16).unwrap(), 32);
        assert_eq!(naive_sum(10), 15);
        assert_eq!(t_closed(10).unwrap(), 15);
    }

    #[test]
    fn hamming_sum_examples() {
        assert_eq!(t_hamming_sum(1).unwrap(), 0);
        assert_eq!(t_hamming_sum(3).unwrap(), 2);
        assert_eq!(t_hamming_sum(5).unwrap(), 5);
    }

    #[test]
    fn zero_and_oversized_rejected() {
        assert!(t_closed(0).is_err());
        assert!(t_hamming_sum(0).is_err());
        assert!(t_recurrence(0).is_err());
        assert!(t_closed(MAX_N + 1).is_err());
        assert!(t_closed(MAX_N).is_ok());
    }

    #[test]
    fn bounds_examples() {
        let (lo, hi) = t_bounds(5).unwrap();
        assert_eq!((lo.num, lo.den, hi), (10, 4, 15));
        assert_eq!(lo.to_f64(), 2.5);
        assert!(lo.lt_int(5) && 5 < hi);

        // n(⌈log n⌉ - 1)/4 with ⌈log 2⌉ = 1 is 0.
        let (lo, hi) = t_bounds(2).unwrap();
        assert_eq!((lo.num, hi), (0, 2));
        assert!(lo.lt_int(1) && 1 < hi);

        let (lo, hi) = t_bounds(16).unwrap();
        assert_eq!((lo.num, lo.den, hi), (48, 4, 64));
        assert_eq!(t_closed(16).unwrap(), 32);

        assert!(t_bounds(1).is_err());
        assert!(t_bounds(0).is_err());
    }

    #[test]
    fn ceil_log2_at_powers() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(1 << 40), 40);
        assert_eq!(ceil_log2((1 << 40) + 1), 41);
    }

    #[test]
    fn routes_agree_against_naive_sum() {
        for n in 1..=2048u64 {
            let expected = naive_sum(n);
            assert_eq!(t_closed(n).unwrap(), expected, "closed n={n}");
            assert_eq!(t_hamming_sum(n).unwrap(), expected, "sum n={n}");
        }
        for (n, t) in TRecurrence::new().take(2048) {
            assert_eq!(t, naive_sum(n));
        }
        assert_eq!(t_recurrence(37).unwrap(), naive_sum(37));
    }

    #[test]
    fn large_values_agree() {
        let n = MAX_N - 12345;
        assert_eq!(t_closed(n).unwrap(), t_hamming_sum(n).unwrap());
        assert_eq!(t_closed(MAX_N).unwrap(), 50 << 49);
    }

    #[test]
    fn report_consistency() {
        assert!(TCountReport::new(1).unwrap().is_consistent());
        let r = TCountReport::new(37).unwrap();
        assert!(r.is_consistent());
        assert_eq!(r.t_closed, naive_sum(37));
    }
}
