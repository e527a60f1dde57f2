//! Exact binomial coefficients, cascade sums and Turán binomials.
//!
//! Everything here is a pure function returning an exact [`Nat`]. Values
//! are computed in `u128` when they are known to fit and fall back to
//! arbitrary precision otherwise.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Unbounded non-negative integer.
pub type Nat = BigUint;

/// Arithmetic needed by the greedy searches, implemented for `u128`
/// (checked, overflow reported as `None`) and for [`BigUint`].
pub(crate) trait Exact: Clone + Ord {
    fn nil() -> Self;
    fn from_u64(v: u64) -> Self;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_mul_u64(&self, v: u64) -> Option<Self>;
    /// Exact division; the caller guarantees divisibility.
    fn div_u64(&self, v: u64) -> Self;
    /// `self - other`; the caller guarantees `self >= other`.
    fn minus(&self, other: &Self) -> Self;
    fn is_nil(&self) -> bool;
}

impl Exact for u128 {
    fn nil() -> Self {
        0
    }
    fn from_u64(v: u64) -> Self {
        v as u128
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        u128::checked_add(*self, *other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        u128::checked_mul(*self, *other)
    }
    fn checked_mul_u64(&self, v: u64) -> Option<Self> {
        u128::checked_mul(*self, v as u128)
    }
    fn div_u64(&self, v: u64) -> Self {
        self / v as u128
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
}

impl Exact for BigUint {
    fn nil() -> Self {
        Zero::zero()
    }
    fn from_u64(v: u64) -> Self {
        BigUint::from(v)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_mul_u64(&self, v: u64) -> Option<Self> {
        Some(self * v)
    }
    fn div_u64(&self, v: u64) -> Self {
        self / v
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// `C(n, k)` in `T`. Every intermediate value is at most `k * C(n, k)`, so
/// in `u128` a `None` result for a target below `2^64` means the
/// coefficient exceeds that target.
pub(crate) fn binom_in<T: Exact>(n: u64, k: u64) -> Option<T> {
    if k > n {
        return Some(T::nil());
    }
    let k = k.min(n - k);
    let mut acc = T::from_u64(1);
    for i in 0..k {
        acc = acc.checked_mul_u64(n - i)?.div_u64(i + 1);
    }
    Some(acc)
}

fn pow_in<T: Exact>(base: u64, exp: u64) -> Option<T> {
    let mut acc = T::from_u64(1);
    let b = T::from_u64(base);
    for _ in 0..exp {
        acc = acc.checked_mul(&b)?;
    }
    Some(acc)
}

/// Part sizes of the Turán graph `T(n, r)`, largest first.
pub fn turan_part_sizes(n: u64, r: u64) -> Vec<u64> {
    if r == 0 {
        return Vec::new();
    }
    let (q, big) = (n / r, n % r);
    (0..r).map(|i| if i < big { q + 1 } else { q }).collect()
}

/// Turán binomial in `T`: the degree-`k` elementary symmetric function of
/// the part sizes, summed over how many parts of each size are chosen.
/// Every summand is bounded by the result.
pub(crate) fn turan_in<T: Exact>(n: u64, k: u64, r: u64) -> Option<T> {
    debug_assert!(r >= 1);
    if k > r || k > n {
        return Some(T::nil());
    }
    let (q, big) = (n / r, n % r);
    let small = r - big;
    let mut total = T::nil();
    // j parts of size q + 1, k - j parts of size q.
    let lo = k.saturating_sub(small);
    let hi = k.min(big);
    for j in lo..=hi {
        if q == 0 && j < k {
            continue;
        }
        let mut term: T = binom_in(big, j)?;
        if term.is_nil() {
            continue;
        }
        term = term.checked_mul(&binom_in(small, k - j)?)?;
        term = term.checked_mul(&pow_in(q + 1, j)?)?;
        term = term.checked_mul(&pow_in(q, k - j)?)?;
        total = total.checked_add(&term)?;
    }
    Some(total)
}

/// `C(n, k)` for non-negative arguments; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Nat {
    if let Some(v) = binom_in::<u128>(n, k) {
        return Nat::from(v);
    }
    binom_in::<BigUint>(n, k).expect("arbitrary precision never overflows")
}

/// `C(n, k)` as a total function on integers: zero when `k < 0` or `n < k`.
/// Negative `n` is outside the combinatorial range used here and is also
/// mapped to zero (except `C(n, 0) = 1` for `n >= 0`).
pub fn binom(n: i64, k: i64) -> Nat {
    if k < 0 || n < 0 || n < k {
        return Nat::zero();
    }
    binomial(n as u64, k as u64)
}

/// Cascade sum `C(t_0, k) + C(t_1, k - 1) + ... + C(t_s, k - s)`.
///
/// Terms past position `k` contribute `C(t, negative) = 0`. The empty
/// list sums to zero.
pub fn r_sum(k: u64, terms: &[u64]) -> Nat {
    terms
        .iter()
        .enumerate()
        .filter(|(i, _)| (*i as u64) <= k)
        .map(|(i, &t)| binomial(t, k - i as u64))
        .sum()
}

/// Number of `k`-cliques of the Turán graph `T(n, r)`.
///
/// Fails only for `r = 0` with `n > 0`, which has no partition. `T(0, 0)`
/// is the empty graph.
pub fn turan_binom(n: u64, k: u64, r: u64) -> Result<Nat> {
    if r == 0 {
        if n > 0 {
            return Err(Error::domain(format!(
                "cannot partition {n} vertices into 0 parts"
            )));
        }
        return Ok(binomial(0, k));
    }
    if let Some(v) = turan_in::<u128>(n, k, r) {
        return Ok(Nat::from(v));
    }
    Ok(turan_in::<BigUint>(n, k, r).expect("arbitrary precision never overflows"))
}

/// Degree-`k` elementary symmetric polynomial of `values`, by the usual
/// dynamic program over the values one at a time.
pub fn elementary_symmetric(values: &[u64], k: usize) -> Nat {
    let mut dp = vec![Nat::zero(); k + 1];
    dp[0] = Nat::one();
    for &v in values {
        for t in (1..=k).rev() {
            let add = &dp[t - 1] * v;
            dp[t] += add;
        }
    }
    dp.swap_remove(k)
}
