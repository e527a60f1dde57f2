//! Upper bounds on the number of `(k+1)`-cliques of a graph with `m`
//! `k`-cliques.
//!
//! * [`oldbd`]: the Kruskal-Katona bound, valid for every simplicial complex.
//! * [`lgbd`]: valid for graphs that contain an `n_k`-clique, where `n_k` is
//!   the leading cascade term of `m`.
//! * [`smbd`]: valid for graphs without an `n_k`-clique (the colored bound
//!   with `n_k - 1` colors). Undefined when `n_k = k`.
//! * [`main_bound`]: the larger of the last two, valid for every graph.
//!
//! Every function maps `m = 0` to `0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::{r_sum, Nat};
use crate::representations::{colored_rep, kk_rep, lgbd_rep};
use crate::serde_exact;
use crate::{Error, Result};

fn require_k(k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::domain("clique size k must be at least 1"));
    }
    Ok(())
}

/// Kruskal-Katona bound: the cascade of `m` read one dimension up.
pub fn oldbd(m: &Nat, k: u64) -> Result<Nat> {
    require_k(k)?;
    if m.is_zero() {
        return Ok(Nat::zero());
    }
    Ok(kk_rep(m, k)?.shifted(1))
}

/// Large-clique bound `r_{k+1}(n_k, n_{k-1}) + r_k(a_{k-1}, ...)`.
///
/// Coincides with [`oldbd`] for `k < 3`.
pub fn lgbd(m: &Nat, k: u64) -> Result<Nat> {
    require_k(k)?;
    if m.is_zero() {
        return Ok(Nat::zero());
    }
    if k < 3 {
        return oldbd(m, k);
    }
    Ok(lgbd_rep(m, k)?.shifted(1))
}

/// Colored bound for graphs with no `(r+1)`-clique: the colored
/// representation of `m` with every clique size raised by one.
pub fn kalai_eckhoff_bound(m: &Nat, k: u64, r: u64) -> Result<Nat> {
    require_k(k)?;
    if r < k {
        return Err(Error::domain(format!(
            "colored bound requires r >= k (k={k}, r={r})"
        )));
    }
    if m.is_zero() {
        return Ok(Nat::zero());
    }
    Ok(colored_rep(m, k, r)?.shifted(1))
}

/// Small-clique bound; `None` when the leading cascade term equals `k`.
pub fn smbd(m: &Nat, k: u64) -> Result<Option<Nat>> {
    require_k(k)?;
    if m.is_zero() {
        return Ok(Some(Nat::zero()));
    }
    let top = kk_rep(m, k)?.leading();
    if top == k {
        return Ok(None);
    }
    kalai_eckhoff_bound(m, k, top - 1).map(Some)
}

/// Which of the two graph bounds is larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Winner {
    Lgbd,
    Smbd,
    Tie,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    #[serde(with = "serde_exact::nat")]
    pub m: Nat,
    pub k: u64,
    #[serde(with = "serde_exact::nat")]
    pub oldbd: Nat,
    #[serde(with = "serde_exact::nat")]
    pub lgbd: Nat,
    /// `None` when undefined.
    #[serde(with = "serde_exact::opt_nat")]
    pub smbd: Option<Nat>,
    /// `max(lgbd, smbd)` with an undefined `smbd` losing.
    #[serde(with = "serde_exact::nat")]
    pub main: Nat,
    pub winner: Winner,
}

/// All bounds for `(m, k)` and the main theorem's maximum.
pub fn main_bound(m: &Nat, k: u64) -> Result<BoundReport> {
    let oldbd = oldbd(m, k)?;
    let lgbd = lgbd(m, k)?;
    let smbd = smbd(m, k)?;
    let (main, winner) = match &smbd {
        None => (lgbd.clone(), Winner::Lgbd),
        Some(s) if *s > lgbd => (s.clone(), Winner::Smbd),
        Some(s) if *s < lgbd => (lgbd.clone(), Winner::Lgbd),
        Some(_) => (lgbd.clone(), Winner::Tie),
    };
    Ok(BoundReport {
        m: m.clone(),
        k,
        oldbd,
        lgbd,
        smbd,
        main,
        winner,
    })
}

/// Bound on `c_{k+step}` from `c_k = m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonconsecBound {
    #[serde(with = "serde_exact::nat")]
    pub m: Nat,
    pub k: u64,
    pub step: u64,
    /// Applies when the graph has an `n_k`-clique.
    #[serde(with = "serde_exact::nat")]
    pub large: Nat,
    /// Applies otherwise; `None` when `n_k = k` (then every `k`-clique lies
    /// in the only possible `n_k`-clique, so `large` covers all graphs).
    #[serde(with = "serde_exact::opt_nat")]
    pub small: Option<Nat>,
    #[serde(with = "serde_exact::nat")]
    pub value: Nat,
}

/// Bound on `c_{k+step}(G)` given `c_k(G) = m`.
///
/// The second component shifts the one-shot colored representation of `m`
/// by `step`; it is not the iterate of [`smbd`], which can differ.
pub fn nonconsec_bound(m: &Nat, k: u64, step: u64) -> Result<NonconsecBound> {
    require_k(k)?;
    if step == 0 {
        return Err(Error::domain("step must be at least 1"));
    }
    if m.is_zero() {
        return Ok(NonconsecBound {
            m: m.clone(),
            k,
            step,
            large: Nat::zero(),
            small: Some(Nat::zero()),
            value: Nat::zero(),
        });
    }
    let cascade = kk_rep(m, k)?;
    let large = if k >= 2 {
        lgbd_rep(m, k)?.shifted(step)
    } else {
        cascade.shifted(step)
    };
    let top = cascade.leading();
    let small = if top == k {
        None
    } else {
        Some(colored_rep(m, k, top - 1)?.shifted(step))
    };
    let value = match &small {
        Some(s) if *s > large => s.clone(),
        _ => large.clone(),
    };
    Ok(NonconsecBound {
        m: m.clone(),
        k,
        step,
        large,
        small,
        value,
    })
}

/// `lgbd_{k+step-1}( ... lgbd_{k+1}(lgbd_k(m)) ... )`.
pub fn iterated_lgbd(m: &Nat, k: u64, step: u64) -> Result<Nat> {
    let mut value = m.clone();
    for level in k..k + step {
        value = lgbd(&value, level)?;
    }
    Ok(value)
}

/// `smbd` applied `step` times, each time at the next clique size. `None`
/// as soon as one application is undefined.
pub fn iterated_smbd(m: &Nat, k: u64, step: u64) -> Result<Option<Nat>> {
    let mut value = m.clone();
    for level in k..k + step {
        match smbd(&value, level)? {
            Some(v) => value = v,
            None => return Ok(None),
        }
    }
    Ok(Some(value))
}

/// Lower bound on the most `(k+1)`-cliques of a graph with `m` `k`-cliques
/// and an `n_k`-clique: an `n_k`-clique plus one vertex joined to `n_{k-1}`
/// of it and one joined to `a_{k-1}` of it.
pub fn conbd_lower(m: &Nat, k: u64) -> Result<Nat> {
    if k < 3 {
        return Err(Error::domain("constructive lower bound requires k >= 3"));
    }
    let rep = lgbd_rep(m, k)?;
    let first_tail = rep.tail.first().map_or(Vec::new(), |&a| vec![a]);
    Ok(r_sum(k + 1, &[rep.top, rep.second]) + r_sum(k, &first_tail))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioStats {
    #[serde(with = "serde_exact::nat")]
    pub m: Nat,
    pub k: u64,
    #[serde(with = "serde_exact::nat")]
    pub oldbd: Nat,
    #[serde(with = "serde_exact::nat")]
    pub lgbd: Nat,
    #[serde(with = "serde_exact::nat")]
    pub conbd_lower: Nat,
    /// `(lgbd - conbd_lower) / (oldbd - conbd_lower)`, or 1 when the
    /// denominator vanishes. Upper-bounds the ratio taken with the true
    /// constructive maximum.
    #[serde(with = "serde_exact::rational")]
    pub ratio_proxy: BigRational,
    /// Third cascade term `n_{k-2}`, if present.
    pub third_term: Option<u64>,
    /// `k^2 / (n_{k-2} - k^2)` when `n_{k-2} > k^2`.
    #[serde(with = "serde_exact::opt_rational")]
    pub ratbound_rhs: Option<BigRational>,
}

fn to_int(n: &Nat) -> BigInt {
    BigInt::from(n.clone())
}

pub fn ratio_stats(m: &Nat, k: u64) -> Result<RatioStats> {
    if k < 3 {
        return Err(Error::domain("ratio statistics require k >= 3"));
    }
    let oldbd = oldbd(m, k)?;
    let lgbd = lgbd(m, k)?;
    let conbd_lower = conbd_lower(m, k)?;
    let ratio_proxy = if oldbd > conbd_lower {
        BigRational::new(
            to_int(&lgbd) - to_int(&conbd_lower),
            to_int(&oldbd) - to_int(&conbd_lower),
        )
    } else {
        BigRational::one()
    };
    let third_term = kk_rep(m, k)?.term(2);
    let k2 = k * k;
    let ratbound_rhs = third_term.filter(|&t| t > k2).map(|t| {
        BigRational::new(BigInt::from(k2), BigInt::from(t - k2))
    });
    Ok(RatioStats {
        m: m.clone(),
        k,
        oldbd,
        lgbd,
        conbd_lower,
        ratio_proxy,
        third_term,
        ratbound_rhs,
    })
}

pub fn ratio_proxy(m: &Nat, k: u64) -> Result<BigRational> {
    Ok(ratio_stats(m, k)?.ratio_proxy)
}

/// Whether the large-clique bound beats the small-clique bound at `m`
/// (an undefined small-clique bound counts as beaten).
pub fn lgbd_wins(m: &Nat, k: u64) -> Result<bool> {
    let lg = lgbd(m, k)?;
    Ok(match smbd(m, k)? {
        None => true,
        Some(s) => lg > s,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FjStatistic {
    pub k: u64,
    pub j: u64,
    /// `#{m <= j : lgbd > smbd}`.
    pub count: u64,
    #[serde(with = "serde_exact::rational")]
    pub fraction: BigRational,
}

/// The fraction of `m` in `1..=j` for which the large-clique bound wins.
pub fn fj_statistic(j: u64, k: u64) -> Result<FjStatistic> {
    Ok(fj_series(&[j], k)?.remove(0))
}

/// [`fj_statistic`] for several `j` with one scan up to the largest.
pub fn fj_series(js: &[u64], k: u64) -> Result<Vec<FjStatistic>> {
    if k < 3 {
        return Err(Error::domain("f_j is studied for k >= 3"));
    }
    if js.contains(&0) {
        return Err(Error::domain("f_j requires j >= 1"));
    }
    let max_j = js.iter().copied().max().unwrap_or(0);
    let wins: Vec<bool> = (1..=max_j)
        .into_par_iter()
        .map(|m| lgbd_wins(&Nat::from(m), k))
        .collect::<Result<_>>()?;
    let mut prefix = Vec::with_capacity(wins.len() + 1);
    prefix.push(0u64);
    for w in &wins {
        prefix.push(prefix.last().unwrap() + u64::from(*w));
    }
    Ok(js
        .iter()
        .map(|&j| {
            let count = prefix[j as usize];
            FjStatistic {
                k,
                j,
                count,
                fraction: BigRational::new(BigInt::from(count), BigInt::from(j)),
            }
        })
        .collect())
}

/// `f64` view of a ratio, for reporting only.
pub fn approx(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}
