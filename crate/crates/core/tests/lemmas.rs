//! Inequalities between cascade sums, checked on random cascades with
//! terms at most 40.

use clique_bounds::binomial::{binomial, r_sum};
use clique_bounds::representations::kk_rep;
use clique_bounds::Nat;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

const MAX_TERM: u64 = 40;

fn cascade_at(k: u64, seed: u64) -> Vec<u64> {
    let span = binomial(MAX_TERM, k).to_u64().unwrap() - 1;
    kk_rep(&Nat::from(1 + seed % span), k).unwrap().terms
}

fn cascade_of(m: &Nat, k: u64) -> Vec<u64> {
    if m.is_zero() {
        Vec::new()
    } else {
        kk_rep(m, k).unwrap().terms
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn dimshift(k in 1u64..=6, s in any::<u64>(), t in any::<u64>(), j in 1u64..=8) {
        let (a, b) = (cascade_at(k, s), cascade_at(k, t));
        let (a, b) = if r_sum(k, &a) >= r_sum(k, &b) { (a, b) } else { (b, a) };
        prop_assert!(r_sum(j, &a) >= r_sum(j, &b), "a={:?} b={:?} j={}", a, b, j);
    }

    #[test]
    fn disjoint(k in 1u64..=6, s in any::<u64>(), t in any::<u64>()) {
        let (a, b) = (cascade_at(k, s), cascade_at(k, t));
        let c = cascade_of(&(r_sum(k, &a) + r_sum(k, &b)), k);
        prop_assert!(r_sum(k + 1, &c) >= r_sum(k + 1, &a) + r_sum(k + 1, &b));
    }

    #[test]
    fn linksub(k in 2u64..=6, s in any::<u64>(), t in any::<u64>()) {
        let (a, b) = (cascade_at(k, s), cascade_at(k, t));
        let (a, b) = if r_sum(k, &a) >= r_sum(k, &b) { (a, b) } else { (b, a) };
        let c = cascade_of(&(r_sum(k, &a) + r_sum(k - 1, &b)), k);
        prop_assert!(r_sum(k + 1, &c) >= r_sum(k + 1, &a) + r_sum(k, &b), "a={:?} b={:?}", a, b);
    }

    #[test]
    fn algorithm2(k in 1u64..=6, s in any::<u64>(), t in any::<u64>(), extra in 1u64..=4) {
        let (a, c) = (cascade_at(k, s), cascade_at(k, t));
        let m = r_sum(k, &a) + r_sum(k, &c);
        let mut j = a[0].max(c[0]) + extra;
        while binomial(j, k) > m {
            j -= 1;
        }
        prop_assume!(j > a[0] && j > c[0]);
        let b = cascade_of(&(&m - binomial(j, k)), k);
        prop_assert!(binomial(j, k + 1) + r_sum(k + 1, &b) > r_sum(k + 1, &c) + r_sum(k + 1, &a));
    }
}

#[test]
fn strictlink() {
    // exhaustive over a small range: every pair with c_k - 1 = a_k > b_{k-1}
    let mut hits = 0;
    for k in 2..=5u64 {
        let limit = binomial(14, k).to_u64().unwrap();
        for ma in 1..limit {
            let a = kk_rep(&Nat::from(ma), k).unwrap().terms;
            let lower_limit = binomial(a[0], k - 1).to_u64().unwrap();
            for mb in 1..lower_limit {
                let b = kk_rep(&Nat::from(mb), k - 1).unwrap().terms;
                if b[0] >= a[0] {
                    continue;
                }
                let c = kk_rep(&(r_sum(k, &a) + r_sum(k - 1, &b)), k).unwrap().terms;
                if c[0] != a[0] + 1 {
                    continue;
                }
                hits += 1;
                assert!(
                    r_sum(k + 1, &c) > r_sum(k + 1, &a) + r_sum(k, &b),
                    "a={a:?} b={b:?} c={c:?}"
                );
            }
        }
    }
    assert!(hits >= 500, "only {hits} cases");
}
