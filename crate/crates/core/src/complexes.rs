//! Rev-lex order on vertex sets and the rev-lex complexes built from it.
//!
//! Vertices are positive integers `1, 2, ...` and a vertex set is an
//! ascending `Vec<u64>`. `A` precedes `B` in rev-lex order when the largest
//! element of the symmetric difference lies in `B`; on sets of one size
//! this is colex order, so ranks follow the combinatorial number system:
//! `rank({v_1 < ... < v_k}) = sum C(v_i - 1, i)`. Ranks are 0-based.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};

use crate::binomial::{binomial, r_sum, Nat};
use crate::representations::{kk_rep, largest_binomial_at_most};
use crate::{Error, Result};

/// Most faces a complex may be materialized with.
pub const FACE_CAP: u64 = 1_000_000;

pub type VertexSet = Vec<u64>;

fn check_set(a: &[u64]) -> Result<()> {
    if a.first() == Some(&0) {
        return Err(Error::domain("vertex labels start at 1"));
    }
    if a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain(format!("vertex set {a:?} is not strictly increasing")));
    }
    Ok(())
}

/// Whether `a` strictly precedes `b` in rev-lex order.
pub fn revlex_precedes(a: &[u64], b: &[u64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::domain(format!(
            "rev-lex comparison of sets of sizes {} and {}",
            a.len(),
            b.len()
        )));
    }
    check_set(a)?;
    check_set(b)?;
    // Walk both from the top; the first disagreement is the largest element
    // of the symmetric difference.
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return Ok(x < y);
        }
    }
    Ok(false)
}

/// 0-based position of `a` among all `|a|`-sets in rev-lex order.
pub fn revlex_rank(a: &[u64]) -> Result<Nat> {
    check_set(a)?;
    Ok(a
        .iter()
        .enumerate()
        .map(|(i, &v)| binomial(v - 1, i as u64 + 1))
        .sum())
}

/// The `k`-set at 0-based rank `t`.
pub fn revlex_unrank(t: &Nat, k: u64) -> Result<VertexSet> {
    if k == 0 {
        return if t.is_zero() {
            Ok(Vec::new())
        } else {
            Err(Error::domain("only one 0-set exists"))
        };
    }
    let mut rest = t.clone();
    let mut set = vec![0u64; k as usize];
    for level in (1..=k).rev() {
        let x = largest_binomial_at_most(level, &rest)?;
        rest -= binomial(x, level);
        set[level as usize - 1] = x + 1;
    }
    Ok(set)
}

/// Colex successor in place; `false` when `set` was `{}`.
fn advance(set: &mut [u64]) -> bool {
    let k = set.len();
    if k == 0 {
        return false;
    }
    let mut i = 0;
    while i + 1 < k && set[i] + 1 == set[i + 1] {
        i += 1;
    }
    set[i] += 1;
    for (j, v) in set.iter_mut().take(i).enumerate() {
        *v = j as u64 + 1;
    }
    true
}

/// All `k`-sets of positive integers in rev-lex order (infinite for `k >= 1`).
#[derive(Debug, Clone)]
pub struct RevlexSets {
    next: Option<VertexSet>,
}

impl Iterator for RevlexSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

pub fn revlex_sets(k: u64) -> RevlexSets {
    RevlexSets {
        next: Some((1..=k).collect()),
    }
}

/// No two elements of `a` agree mod `r`.
pub fn is_r_permissible(a: &[u64], r: u64) -> bool {
    if r == 0 {
        return false;
    }
    let mut seen = HashSet::with_capacity(a.len());
    a.iter().all(|v| seen.insert(v % r))
}

/// A simplicial complex given by its facets. Equality ignores the order
/// in which facets are listed.
#[derive(Debug, Clone, Default)]
pub struct Complex {
    facets: Vec<VertexSet>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        let sorted = |c: &Complex| {
            let mut f = c.facets.clone();
            f.sort();
            f
        };
        self.facets.len() == other.facets.len() && sorted(self) == sorted(other)
    }
}

impl Eq for Complex {}

impl Complex {
    /// Complex generated by `sets`; sets contained in other sets and
    /// duplicates are dropped.
    pub fn from_sets(sets: Vec<VertexSet>) -> Result<Self> {
        for s in &sets {
            check_set(s)?;
        }
        let mut sets = sets;
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
        let mut covered: HashSet<VertexSet> = HashSet::new();
        for s in sets {
            if covered.contains(&s) {
                continue;
            }
            for sub in proper_subsets(&s) {
                covered.insert(sub);
            }
            kept.push(s);
        }
        Ok(Complex { facets: kept })
    }

    fn from_facets_unchecked(facets: Vec<VertexSet>) -> Self {
        Complex { facets }
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn dimension_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.facets.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes.dedup();
        sizes
    }

    /// All faces of size `i`.
    pub fn faces(&self, i: usize) -> HashSet<VertexSet> {
        let mut out = HashSet::new();
        for f in &self.facets {
            if f.len() >= i {
                for_each_subset(f, i, |s| {
                    out.insert(s.to_vec());
                });
            }
        }
        if i == 0 {
            out.insert(Vec::new());
        }
        out
    }

    pub fn contains_face(&self, face: &[u64]) -> bool {
        self.facets
            .iter()
            .any(|f| face.iter().all(|v| f.binary_search(v).is_ok()))
    }

    /// Number of `(i+1)`-sets on the vertices of the complex whose
    /// `i`-subsets are all faces: the `(i+1)`-faces of the largest complex
    /// with the same `i`-skeleton.
    pub fn fillable_count(&self, i: usize) -> u64 {
        let faces = self.faces(i);
        if i == 0 {
            return self.faces(1).len() as u64;
        }
        let top = faces.iter().filter_map(|f| f.last().copied()).max().unwrap_or(0);
        let mut count = 0u64;
        let mut probe = Vec::with_capacity(i);
        for f in &faces {
            let last = *f.last().expect("i >= 1");
            for v in last + 1..=top {
                let mut all = true;
                for skip in 0..i {
                    probe.clear();
                    probe.extend(f.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x));
                    probe.push(v);
                    if !faces.contains(&probe) {
                        all = false;
                        break;
                    }
                }
                if all {
                    count += 1;
                }
            }
        }
        count
    }

    /// Face counts `f_0, f_1, ...` by size, `f_0 = 1` for the empty face.
    pub fn face_vector(&self) -> Vec<Nat> {
        face_vector(self)
    }

    /// One facet per line, ascending labels separated by spaces.
    pub fn to_facet_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let line: Vec<String> = f.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Inverse of [`Complex::to_facet_text`]. Blank lines and lines starting
    /// with `#` are skipped.
    pub fn parse_facet_text(text: &str) -> Result<Self> {
        let mut sets = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut set = Vec::new();
            for tok in line.split_whitespace() {
                let v: u64 = tok
                    .parse()
                    .map_err(|_| Error::parse(format!("line {}: bad vertex {tok:?}", no + 1)))?;
                set.push(v);
            }
            check_set(&set).map_err(|e| Error::parse(format!("line {}: {e}", no + 1)))?;
            sets.push(set);
        }
        Complex::from_sets(sets)
    }
}

fn proper_subsets(s: &[u64]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for size in 0..s.len() {
        for_each_subset(s, size, |sub| out.push(sub.to_vec()));
    }
    out
}

fn for_each_subset(s: &[u64], size: usize, mut f: impl FnMut(&[u64])) {
    fn rec(s: &[u64], size: usize, start: usize, buf: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
        if buf.len() == size {
            f(buf);
            return;
        }
        let need = size - buf.len();
        for i in start..=s.len() - need {
            buf.push(s[i]);
            rec(s, size, i + 1, buf, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(size);
    rec(s, size, 0, &mut buf, &mut f);
}

/// Face vector by downward closure of the facets.
pub fn face_vector(c: &Complex) -> Vec<Nat> {
    let max = c.facets.iter().map(Vec::len).max().unwrap_or(0);
    (0..=max).map(|i| Nat::from(c.faces(i).len() as u64)).collect()
}

fn face_budget(m: &Nat) -> Result<u64> {
    match m.to_u64() {
        Some(v) if v <= FACE_CAP => Ok(v),
        _ => Err(Error::ResourceLimit(format!(
            "{m} faces exceed the materialization cap of {FACE_CAP}"
        ))),
    }
}

/// Pure complex on the first `m` `k`-sets in rev-lex order.
pub fn revlex_complex(k: u64, m: &Nat) -> Result<Complex> {
    if k == 0 {
        return Err(Error::domain("rev-lex complex requires k >= 1"));
    }
    let m = face_budget(m)?;
    Ok(Complex::from_facets_unchecked(revlex_sets(k).take(m as usize).collect()))
}

/// Size of the `level`-shadow of the first `m` `size`-sets: itself an
/// initial segment, of length `r_level(terms of m)`.
pub fn revlex_shadow_size(m: &Nat, size: u64, level: u64) -> Result<Nat> {
    if m.is_zero() {
        return Ok(Nat::zero());
    }
    Ok(r_sum(level, &kk_rep(m, size)?.terms))
}

/// Union of the rev-lex complexes `C_{i_j}(m_j)`.
///
/// Sizes must strictly increase, and the shadow of each family on the next
/// smaller size must fit inside that family (the Kruskal-Katona
/// conditions); otherwise the union would have more faces than requested.
pub fn multi_revlex_complex(specs: &[(u64, Nat)]) -> Result<Complex> {
    if specs.iter().any(|(i, _)| *i == 0) {
        return Err(Error::domain("face sizes start at 1"));
    }
    if specs.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::domain("face sizes must strictly increase"));
    }
    for w in specs.windows(2) {
        let ((lo, m_lo), (hi, m_hi)) = (&w[0], &w[1]);
        let shadow = revlex_shadow_size(m_hi, *hi, *lo)?;
        if shadow > *m_lo {
            return Err(Error::domain(format!(
                "{m_hi} faces of size {hi} force {shadow} faces of size {lo}, more than {m_lo}"
            )));
        }
    }
    let total: Nat = specs.iter().map(|(_, m)| m.clone()).sum();
    face_budget(&total)?;
    let mut facets = Vec::new();
    for (j, (i, m)) in specs.iter().enumerate() {
        let covered = match specs.get(j + 1) {
            Some((hi, m_hi)) => revlex_shadow_size(m_hi, *hi, *i)?,
            None => Nat::zero(),
        };
        let (start, end) = (face_budget(&covered)?, face_budget(m)?);
        facets.extend(revlex_sets(*i).skip(start as usize).take((end - start) as usize));
    }
    Ok(Complex::from_facets_unchecked(facets))
}

/// Pure complex on the first `m` `r`-permissible `k`-sets in rev-lex order.
pub fn colored_revlex_complex(k: u64, m: &Nat, r: u64) -> Result<Complex> {
    if k == 0 || r < k {
        return Err(Error::domain(format!(
            "colored rev-lex complex requires r >= k >= 1 (k={k}, r={r})"
        )));
    }
    let m = face_budget(m)?;
    Ok(Complex::from_facets_unchecked(
        revlex_sets(k)
            .filter(|s| is_r_permissible(s, r))
            .take(m as usize)
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn order_examples() {
        assert!(revlex_precedes(&[2, 3, 5], &[1, 4, 5]).unwrap());
        assert!(revlex_precedes(&[3, 4, 5], &[1, 2, 6]).unwrap());
        assert!(revlex_precedes(&[1, 2, 3], &[1, 2, 4]).unwrap());
        assert!(!revlex_precedes(&[1, 2, 4], &[1, 2, 3]).unwrap());
        assert!(revlex_precedes(&[1, 2], &[1, 2, 3]).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(revlex_unrank(&nat(0), 3).unwrap(), vec![1, 2, 3]);
        assert_eq!(revlex_unrank(&nat(3), 3).unwrap(), vec![2, 3, 4]);
        for (t, s) in revlex_sets(4).take(3000).enumerate() {
            assert_eq!(revlex_rank(&s).unwrap(), nat(t as u64));
            assert_eq!(revlex_unrank(&nat(t as u64), 4).unwrap(), s);
        }
    }

    #[test]
    fn total_order_on_small_sets() {
        let sets: Vec<_> = revlex_sets(3).take_while(|s| s[2] <= 8).collect();
        assert_eq!(sets.len(), 56);
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                assert_eq!(revlex_precedes(a, b).unwrap(), i < j);
            }
        }
    }

    #[test]
    fn permissible_examples() {
        assert!(is_r_permissible(&[1, 2, 3], 3));
        assert!(!is_r_permissible(&[1, 4], 3));
        assert!(!is_r_permissible(&[2, 3, 5], 2));
    }

    #[test]
    fn revlex_complex_examples() {
        let c = revlex_complex(3, &nat(20)).unwrap();
        assert_eq!(c.face_vector(), vec![nat(1), nat(6), nat(15), nat(20)]);
        assert_eq!(revlex_complex(3, &nat(0)).unwrap().face_vector(), vec![nat(1)]);
        let c = revlex_complex(4, &nat(149)).unwrap();
        assert_eq!(c.face_vector()[3], nat(102));
        assert!(revlex_complex(2, &nat(FACE_CAP + 1)).is_err());
    }

    #[test]
    fn multi_examples() {
        let c = multi_revlex_complex(&[(3, nat(102)), (4, nat(147))]).unwrap();
        let fv = c.face_vector();
        assert_eq!((fv[3].clone(), fv[4].clone()), (nat(102), nat(147)));
        let c = multi_revlex_complex(&[(2, nat(3)), (3, nat(1))]).unwrap();
        assert_eq!(c.facets(), &[vec![1, 2, 3]]);
        assert!(multi_revlex_complex(&[(3, nat(102)), (4, nat(150))]).is_err());
        assert_eq!(
            multi_revlex_complex(&[(3, nat(40))]).unwrap(),
            revlex_complex(3, &nat(40)).unwrap()
        );
    }

    #[test]
    fn colored_examples() {
        let c = colored_revlex_complex(2, &nat(3), 2).unwrap();
        assert_eq!(c.facets(), &[vec![1, 2], vec![2, 3], vec![1, 4]]);
        let c = colored_revlex_complex(3, &nat(70), 7).unwrap();
        assert_eq!(c.fillable_count(3), 85);
    }

    #[test]
    fn facet_text_round_trip() {
        let c = multi_revlex_complex(&[(2, nat(12)), (3, nat(5))]).unwrap();
        let text = c.to_facet_text();
        let back = Complex::parse_facet_text(&text).unwrap();
        assert_eq!(back.face_vector(), c.face_vector());
        assert!(Complex::parse_facet_text("1 1 2\n").is_err());
        assert!(Complex::parse_facet_text("1 x\n").is_err());
        assert_eq!(Complex::parse_facet_text("# none\n").unwrap().face_vector(), vec![nat(1)]);
    }
}
