//! The three unique integer representations behind the bounds.
//!
//! * [`CascadeRep`]: `m = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_{k-s}, k-s)`
//!   with strictly decreasing terms and `n_{k-s} >= k-s > 0`.
//! * [`LgbdRep`]: the two leading cascade terms plus a `(k-1)`-cascade of
//!   what is left over.
//! * [`ColoredRep`]: the same greedy expansion with Turán binomials and a
//!   color budget that drops by one at every level.
//!
//! All three are computed greedily with exponential-then-binary search over
//! the monotone coefficient, so astronomically large `m` are handled.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binom_in, r_sum, turan_binom, turan_in, Exact, Nat};
use crate::{Error, Result};

/// The unique `k`-cascade representation of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CascadeRep {
    pub k: u64,
    /// `[n_k, n_{k-1}, ..., n_{k-s}]`.
    pub terms: Vec<u64>,
}

impl CascadeRep {
    /// Recomposed value `r_k(terms)`.
    pub fn value(&self) -> Nat {
        r_sum(self.k, &self.terms)
    }

    /// The same terms read one dimension up, `r_{k+shift}(terms)`.
    pub fn shifted(&self, shift: u64) -> Nat {
        r_sum(self.k + shift, &self.terms)
    }

    pub fn leading(&self) -> u64 {
        self.terms[0]
    }

    /// Term `n_{k-i}` if present.
    pub fn term(&self, i: usize) -> Option<u64> {
        self.terms.get(i).copied()
    }

    /// Whether the terms satisfy the uniqueness conditions.
    pub fn is_valid(&self) -> bool {
        is_cascade(self.k, &self.terms) && !self.terms.is_empty()
    }
}

/// Strictly decreasing terms with `terms[i] >= k - i` and at most `k` terms.
/// The empty list is accepted (it represents zero).
pub fn is_cascade(k: u64, terms: &[u64]) -> bool {
    if k == 0 || terms.len() as u64 > k {
        return false;
    }
    let decreasing = terms.windows(2).all(|w| w[0] > w[1]);
    let floors = terms
        .iter()
        .enumerate()
        .all(|(i, &t)| t >= k - i as u64);
    decreasing && floors
}

/// Two leading cascade terms and a lower cascade of the remainder.
///
/// `second` holds the sentinel `k - 2` when `m = C(n_k, k)` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LgbdRep {
    pub k: u64,
    /// `n_k`.
    pub top: u64,
    /// `n_{k-1}`, or `k - 2` when absent.
    pub second: u64,
    /// `[a_{k-1}, ..., a_{k-s}]`, a `(k-1)`-cascade (empty when the
    /// remainder is zero).
    pub tail: Vec<u64>,
}

impl LgbdRep {
    pub fn has_second(&self) -> bool {
        self.second + 2 != self.k
    }

    /// `r_k(n_k, n_{k-1})`.
    pub fn head_value(&self) -> Nat {
        r_sum(self.k, &[self.top, self.second])
    }

    /// `r_{k-1}(a_{k-1}, ...)`.
    pub fn tail_value(&self) -> Nat {
        r_sum(self.k - 1, &self.tail)
    }

    pub fn value(&self) -> Nat {
        self.head_value() + self.tail_value()
    }

    /// `r_{k+shift}(n_k, n_{k-1}) + r_{k+shift-1}(a_{k-1}, ...)`.
    pub fn shifted(&self, shift: u64) -> Nat {
        r_sum(self.k + shift, &[self.top, self.second]) + r_sum(self.k + shift - 1, &self.tail)
    }

    /// `a_{k-1-i}` if present.
    pub fn tail_term(&self, i: usize) -> Option<u64> {
        self.tail.get(i).copied()
    }

    pub fn is_valid(&self) -> bool {
        let k = self.k;
        if k < 2 || self.top <= self.second || self.second + 2 < k {
            return false;
        }
        if !self.tail.is_empty() && !is_cascade(k - 1, &self.tail) {
            return false;
        }
        r_sum(k - 2, &[self.second]) > self.tail_value()
    }
}

/// Turán-binomial representation `m = sum_i T(n_{k-i}, k-i, r-i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredRep {
    pub k: u64,
    pub r: u64,
    /// `(n_{k-i}, r - i)` for `i = 0..=s`.
    pub terms: Vec<(u64, u64)>,
}

impl ColoredRep {
    pub fn value(&self) -> Nat {
        self.shifted(0)
    }

    /// `sum_i T(n_{k-i}, k-i+shift, r-i)`: every term's clique size raised by
    /// `shift` while keeping its color budget.
    pub fn shifted(&self, shift: u64) -> Nat {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, &(n, colors))| {
                turan_binom(n, self.k - i as u64 + shift, colors)
                    .expect("color budgets of a valid representation are positive")
            })
            .sum()
    }

    /// `n_{k-i}` if present.
    pub fn term(&self, i: usize) -> Option<u64> {
        self.terms.get(i).map(|t| t.0)
    }

    pub fn is_valid(&self) -> bool {
        let (k, r) = (self.k, self.r);
        if k == 0 || r < k || self.terms.is_empty() || self.terms.len() as u64 > k {
            return false;
        }
        let colors_ok = self
            .terms
            .iter()
            .enumerate()
            .all(|(i, &(_, c))| c == r - i as u64);
        let gaps_ok = self
            .terms
            .windows(2)
            .all(|w| w[0].0 - w[0].0 / w[0].1 > w[1].0);
        let s = self.terms.len() as u64 - 1;
        let last_ok = self.terms[s as usize].0 >= k - s;
        colors_ok && gaps_ok && last_ok
    }
}

/// Largest `n >= start` with `value(n) <= target`, where `value` is
/// non-decreasing in `n`, `value(start) <= target` and `None` means
/// "larger than any target".
fn largest_at_most<T: Exact>(
    start: u64,
    target: &T,
    value: impl Fn(u64) -> Option<T>,
) -> Result<u64> {
    let fits = |n: u64| value(n).is_some_and(|v| v <= *target);
    let overflow = || Error::Overflow(format!("representation term beyond {}", u64::MAX));
    let mut lo = start;
    let mut step = 1u64;
    let mut hi = lo.checked_add(step).ok_or_else(overflow)?;
    while fits(hi) {
        lo = hi;
        step = step.checked_mul(2).ok_or_else(overflow)?;
        hi = lo.checked_add(step).ok_or_else(overflow)?;
    }
    // fits(lo), !fits(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

fn cascade_terms<T: Exact>(mut rest: T, k: u64) -> Result<Vec<u64>> {
    let mut terms = Vec::new();
    let mut level = k;
    while !rest.is_nil() {
        if level == 0 {
            return Err(Error::invariant("cascade ran out of levels"));
        }
        let n = largest_at_most(level, &rest, |n| binom_in::<T>(n, level))?;
        rest = rest.minus(&binom_in::<T>(n, level).expect("fits"));
        terms.push(n);
        level -= 1;
    }
    Ok(terms)
}

fn colored_terms<T: Exact>(mut rest: T, k: u64, r: u64) -> Result<Vec<(u64, u64)>> {
    let mut terms = Vec::new();
    let (mut level, mut colors) = (k, r);
    while !rest.is_nil() {
        if level == 0 || colors == 0 {
            return Err(Error::invariant(format!(
                "color budget exhausted before the remainder for k={k}, r={r}"
            )));
        }
        let n = largest_at_most(level, &rest, |n| turan_in::<T>(n, level, colors))?;
        rest = rest.minus(&turan_in::<T>(n, level, colors).expect("fits"));
        terms.push((n, colors));
        level -= 1;
        colors -= 1;
    }
    Ok(terms)
}

/// Largest `x >= level - 1` with `C(x, level) <= target` (which may be 0).
pub(crate) fn largest_binomial_at_most(level: u64, target: &Nat) -> Result<u64> {
    debug_assert!(level >= 1);
    match target.to_u64() {
        Some(t) => largest_at_most(level - 1, &(t as u128), |n| binom_in::<u128>(n, level)),
        None => largest_at_most(level - 1, target, |n| binom_in::<BigUint>(n, level)),
    }
}

fn require_positive(m: &Nat, what: &str) -> Result<()> {
    if m.is_zero() {
        return Err(Error::domain(format!("{what} requires m >= 1")));
    }
    Ok(())
}

/// Greedy `k`-cascade representation of `m`.
pub fn kk_rep(m: &Nat, k: u64) -> Result<CascadeRep> {
    require_positive(m, "cascade representation")?;
    if k == 0 {
        return Err(Error::domain("cascade representation requires k >= 1"));
    }
    let terms = match m.to_u64() {
        Some(v) => cascade_terms(v as u128, k)?,
        None => cascade_terms(m.clone(), k)?,
    };
    Ok(CascadeRep { k, terms })
}

/// Two-leading-terms representation used by the large-clique bound.
pub fn lgbd_rep(m: &Nat, k: u64) -> Result<LgbdRep> {
    require_positive(m, "two-term representation")?;
    if k < 2 {
        return Err(Error::domain("two-term representation requires k >= 2"));
    }
    let cascade = kk_rep(m, k)?;
    let top = cascade.leading();
    let second = cascade.term(1).unwrap_or(k - 2);
    let head = r_sum(k, &[top, second]);
    let rest = m - &head;
    let tail = if rest.is_zero() {
        Vec::new()
    } else {
        kk_rep(&rest, k - 1)?.terms
    };
    let rep = LgbdRep {
        k,
        top,
        second,
        tail,
    };
    debug_assert!(rep.is_valid(), "{rep:?}");
    Ok(rep)
}

/// Greedy Turán-binomial representation of `m` with `r` colors.
pub fn colored_rep(m: &Nat, k: u64, r: u64) -> Result<ColoredRep> {
    require_positive(m, "colored representation")?;
    if k == 0 || r < k {
        return Err(Error::domain(format!(
            "colored representation requires r >= k >= 1 (k={k}, r={r})"
        )));
    }
    let terms = match m.to_u64() {
        Some(v) => colored_terms(v as u128, k, r)?,
        None => colored_terms(m.clone(), k, r)?,
    };
    Ok(ColoredRep { k, r, terms })
}
