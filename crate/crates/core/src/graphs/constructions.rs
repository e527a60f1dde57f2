//! Graphs attaining the large-clique and small-clique bounds.
//!
//! Each construction builds a small core graph and pads it with disjoint
//! copies of `K_k` until it has exactly `m` `k`-cliques. Every padding
//! block adds one `k`-clique and no `(k+1)`-clique.
//!
//! * [`Which::Const1`]: `K_{n_k}` plus a vertex joined to `n_{k-1}` of it
//!   and a second, non-adjacent vertex joined to `a_{k-1}` of it. Needs
//!   `a_{k-2} = k-2` or absent.
//! * [`Which::Const2`]: as above but the two extra vertices `v`, `u` are
//!   adjacent and share `a_{k-2}` neighbours. Needs `a_{k-3} = k-3` or
//!   absent and `n_k + a_{k-2} >= n_{k-1} + a_{k-1}`.
//! * [`Which::Const3`]: the Turán graph `T(a_k, n_k - 1)` plus a vertex
//!   joined to an induced `T(a_{k-1}, n_k - 2)`, from the colored
//!   representation with `n_k - 1` colors. Needs `a_{k-2} = k-2` or absent.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{clique_vector, turan_graph_with_parts, Graph, CLIQUE_ENUMERATION_CAP};
use crate::binomial::{binomial, turan_binom, turan_part_sizes, Nat};
use crate::bounds::{lgbd, smbd};
use crate::representations::{colored_rep, kk_rep, lgbd_rep};
use crate::serde_exact;
use crate::{Error, Result};

/// Most vertices an explicit construction may have.
pub const VERTEX_CAP: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Which {
    Const1,
    Const2,
    Const3,
}

impl Which {
    pub fn tag(self) -> &'static str {
        match self {
            Which::Const1 => "CONST1",
            Which::Const2 => "CONST2",
            Which::Const3 => "CONST3",
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Which::Const1),
            2 => Ok(Which::Const2),
            3 => Ok(Which::Const3),
            _ => Err(Error::domain(format!("no construction {i}; choose 1, 2 or 3"))),
        }
    }
}

/// Parameters read off the representation the construction starts from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Parameters {
    /// `n_k`, `n_{k-1}` (`None` when absent) and `a_{k-1}, a_{k-2}, ...`.
    TwoTerm {
        n_k: u64,
        n_k1: Option<u64>,
        a_terms: Vec<u64>,
    },
    /// `(a_{k-i}, colors)` pairs with `n_k - 1` colors at the top.
    Colored { n_k: u64, terms: Vec<(u64, u64)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub which: Which,
    #[serde(with = "serde_exact::nat")]
    pub m: Nat,
    pub k: u64,
    pub parameters: Parameters,
    pub core_vertices: u64,
    /// `c_k` and `c_{k+1}` of the core, from closed forms.
    #[serde(with = "serde_exact::nat")]
    pub core_ck: Nat,
    #[serde(with = "serde_exact::nat")]
    pub core_ck1: Nat,
    /// Number of disjoint `K_k` blocks appended.
    #[serde(with = "serde_exact::nat")]
    pub padding: Nat,
    /// The bound the construction attains: `lgbd` or `smbd`.
    pub bound_name: &'static str,
    #[serde(with = "serde_exact::nat")]
    pub bound: Nat,
}

impl ConstructionPlan {
    pub fn total_vertices(&self) -> Nat {
        Nat::from(self.core_vertices) + &self.padding * self.k
    }

    pub fn predicted_ck(&self) -> Nat {
        &self.core_ck + &self.padding
    }

    pub fn predicted_ck1(&self) -> Nat {
        self.core_ck1.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The whole padded graph was enumerated.
    Enumerated,
    /// The core was enumerated and the padding added analytically.
    EnumeratedCore,
    /// Too large to enumerate; closed forms only.
    Predicted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub method: Method,
    #[serde(with = "serde_exact::nat")]
    pub ck: Nat,
    #[serde(with = "serde_exact::nat")]
    pub ck1: Nat,
    /// `ck == m` and `ck1 == bound`.
    pub attains: bool,
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub plan: ConstructionPlan,
    pub graph: Graph,
    pub verification: Verification,
}

fn inapplicable(which: Which, reason: impl Into<String>) -> Error {
    Error::Inapplicable {
        construction: which.tag(),
        reason: reason.into(),
    }
}

fn finish(
    which: Which,
    m: &Nat,
    k: u64,
    parameters: Parameters,
    core_vertices: u64,
    core_ck: Nat,
    core_ck1: Nat,
    bound_name: &'static str,
    bound: Nat,
) -> Result<ConstructionPlan> {
    if core_ck > *m {
        return Err(Error::invariant(format!(
            "{} core has {core_ck} {k}-cliques, more than m = {m}",
            which.tag()
        )));
    }
    if core_ck1 != bound {
        return Err(Error::invariant(format!(
            "{} core has {core_ck1} {}-cliques but {bound_name} = {bound}",
            which.tag(),
            k + 1
        )));
    }
    Ok(ConstructionPlan {
        which,
        m: m.clone(),
        k,
        parameters,
        core_vertices,
        padding: m - &core_ck,
        core_ck,
        core_ck1,
        bound_name,
        bound,
    })
}

fn two_term_plan(m: &Nat, k: u64, which: Which) -> Result<ConstructionPlan> {
    let min_k = if which == Which::Const1 { 2 } else { 3 };
    if k < min_k {
        return Err(inapplicable(which, format!("requires k >= {min_k}")));
    }
    let rep = lgbd_rep(m, k)?;
    let (top, tail) = (rep.top, rep.tail.clone());
    let second = rep.has_second().then_some(rep.second);
    let a = |i: usize| tail.get(i).copied();
    let mut vertices = top;
    let mut ck = binomial(top, k);
    let mut ck1 = binomial(top, k + 1);
    if let Some(s) = second {
        vertices += 1;
        ck += binomial(s, k - 1);
        ck1 += binomial(s, k);
    }
    match which {
        Which::Const1 => {
            if let Some(x) = a(1) {
                if x != k - 2 {
                    return Err(inapplicable(which, format!("a_(k-2) = {x} is neither k-2 nor absent")));
                }
            }
            if let Some(a1) = a(0) {
                vertices += 1;
                ck += binomial(a1, k - 1);
                ck1 += binomial(a1, k);
            }
        }
        _ => {
            if let Some(x) = a(2) {
                if x != k - 3 {
                    return Err(inapplicable(which, format!("a_(k-3) = {x} is neither k-3 nor absent")));
                }
            }
            if let Some(a1) = a(0) {
                let a2 = a(1).unwrap_or(0);
                let s = second.expect("a nonempty tail implies n_(k-1) is present");
                if top + a2 < s + a1 {
                    return Err(inapplicable(
                        which,
                        format!("n_k + a_(k-2) = {} < n_(k-1) + a_(k-1) = {}", top + a2, s + a1),
                    ));
                }
                vertices += 1;
                ck += binomial(a1, k - 1) + binomial(a2, k - 2);
                ck1 += binomial(a1, k) + binomial(a2, k - 1);
            }
        }
    }
    let parameters = Parameters::TwoTerm {
        n_k: top,
        n_k1: second,
        a_terms: tail,
    };
    finish(which, m, k, parameters, vertices, ck, ck1, "lgbd", lgbd(m, k)?)
}

fn turan_plan(m: &Nat, k: u64) -> Result<ConstructionPlan> {
    let which = Which::Const3;
    let top = kk_rep(m, k)?.leading();
    if top == k {
        return Err(inapplicable(which, "the small-clique bound is undefined (n_k = k)"));
    }
    let rep = colored_rep(m, k, top - 1)?;
    if let Some(x) = rep.term(2) {
        if x != k - 2 {
            return Err(inapplicable(which, format!("a_(k-2) = {x} is neither k-2 nor absent")));
        }
    }
    let (ak, r) = rep.terms[0];
    let mut vertices = ak;
    let mut ck = turan_binom(ak, k, r)?;
    let mut ck1 = turan_binom(ak, k + 1, r)?;
    if let Some(&(a1, r1)) = rep.terms.get(1) {
        vertices += 1;
        ck += turan_binom(a1, k - 1, r1)?;
        ck1 += turan_binom(a1, k, r1)?;
    }
    let bound = smbd(m, k)?.expect("defined when n_k > k");
    let parameters = Parameters::Colored {
        n_k: top,
        terms: rep.terms,
    };
    finish(which, m, k, parameters, vertices, ck, ck1, "smbd", bound)
}

/// The construction's parameters and predicted clique counts, or an
/// [`Error::Inapplicable`] when its hypothesis fails.
pub fn plan(m: &Nat, k: u64, which: Which) -> Result<ConstructionPlan> {
    if m.is_zero() {
        return Err(Error::domain("constructions require m >= 1"));
    }
    match which {
        Which::Const1 | Which::Const2 => two_term_plan(m, k, which),
        Which::Const3 => turan_plan(m, k),
    }
}

fn to_usize(v: u64) -> usize {
    usize::try_from(v).expect("below the vertex cap")
}

/// The unpadded core graph of a plan.
pub fn core_graph(plan: &ConstructionPlan) -> Result<Graph> {
    if plan.core_vertices > VERTEX_CAP {
        return Err(Error::ResourceLimit(format!(
            "core of {} vertices exceeds the {VERTEX_CAP}-vertex cap",
            plan.core_vertices
        )));
    }
    let mut g = Graph::new(to_usize(plan.core_vertices));
    match &plan.parameters {
        Parameters::TwoTerm { n_k, n_k1, a_terms } => {
            let top = to_usize(*n_k);
            for u in 0..top {
                for v in u + 1..top {
                    g.add_edge(u, v);
                }
            }
            let mut next = top;
            let v_vertex = n_k1.map(|s| {
                let v = next;
                next += 1;
                for u in 0..to_usize(s) {
                    g.add_edge(u, v);
                }
                (v, to_usize(s))
            });
            if let Some(&a1) = a_terms.first() {
                let u = next;
                let a1 = to_usize(a1);
                match plan.which {
                    Which::Const1 => {
                        for w in 0..a1 {
                            g.add_edge(w, u);
                        }
                    }
                    _ => {
                        let (v, s) = v_vertex.expect("present with a tail");
                        let a2 = a_terms.get(1).map_or(0, |&x| to_usize(x));
                        g.add_edge(u, v);
                        // a2 shared neighbours among v's, the rest outside them
                        for w in (0..a2).chain(s..s + a1 - a2) {
                            g.add_edge(w, u);
                        }
                    }
                }
            }
        }
        Parameters::Colored { terms, .. } => {
            let (ak, r) = terms[0];
            let (t, parts) = turan_graph_with_parts(to_usize(ak), to_usize(r))?;
            for (u, v) in t.edges() {
                g.add_edge(u, v);
            }
            if let Some(&(a1, r1)) = terms.get(1) {
                let w = to_usize(ak);
                let sizes = turan_part_sizes(a1, r1);
                // drop the last (smallest) part; fill the others largest first
                for (part, &size) in parts.iter().take(parts.len() - 1).zip(&sizes) {
                    if size as usize > part.len() {
                        return Err(Error::invariant(format!(
                            "T({a1}, {r1}) does not fit inside T({ak}, {r}) minus a part"
                        )));
                    }
                    for x in part.start..part.start + size as usize {
                        g.add_edge(x, w);
                    }
                }
            }
        }
    }
    Ok(g)
}

/// The padded graph of a plan.
pub fn build(plan: &ConstructionPlan) -> Result<Graph> {
    let total = plan.total_vertices();
    if total > Nat::from(VERTEX_CAP) {
        return Err(Error::ResourceLimit(format!(
            "construction needs {total} vertices, above the {VERTEX_CAP}-vertex cap"
        )));
    }
    let mut g = core_graph(plan)?;
    g.pad_with_cliques(to_usize(plan.k), plan.padding.to_usize().expect("below the cap"));
    Ok(g)
}

/// Counts `c_k` and `c_{k+1}` of the padded graph, by enumeration where
/// feasible.
pub fn verify(plan: &ConstructionPlan, graph: Option<&Graph>) -> Result<Verification> {
    let k = to_usize(plan.k);
    let (method, ck, ck1) = match graph {
        Some(g) if g.n() <= CLIQUE_ENUMERATION_CAP => {
            let cv = clique_vector(g, Some(k + 1))?;
            (Method::Enumerated, Nat::from(cv.get(k)), Nat::from(cv.get(k + 1)))
        }
        _ if plan.core_vertices <= CLIQUE_ENUMERATION_CAP as u64 => {
            let cv = clique_vector(&core_graph(plan)?, Some(k + 1))?;
            (
                Method::EnumeratedCore,
                Nat::from(cv.get(k)) + &plan.padding,
                Nat::from(cv.get(k + 1)),
            )
        }
        _ => (Method::Predicted, plan.predicted_ck(), plan.predicted_ck1()),
    };
    let attains = ck == plan.m && ck1 == plan.bound;
    Ok(Verification {
        method,
        ck,
        ck1,
        attains,
    })
}

/// Plan, build and verify. Fails with [`Error::Invariant`] if the
/// enumerated counts disagree with the closed forms.
pub fn construct(m: &Nat, k: u64, which: Which) -> Result<Construction> {
    let plan = plan(m, k, which)?;
    let graph = build(&plan)?;
    let verification = verify(&plan, Some(&graph))?;
    if !verification.attains {
        return Err(Error::invariant(format!(
            "{} at m = {m}, k = {k}: counted ({}, {}), expected ({m}, {})",
            which.tag(),
            verification.ck,
            verification.ck1,
            plan.bound
        )));
    }
    Ok(Construction {
        plan,
        graph,
        verification,
    })
}

pub fn construction1(m: &Nat, k: u64) -> Result<Construction> {
    construct(m, k, Which::Const1)
}

pub fn construction2(m: &Nat, k: u64) -> Result<Construction> {
    construct(m, k, Which::Const2)
}

pub fn construction3(m: &Nat, k: u64) -> Result<Construction> {
    construct(m, k, Which::Const3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::turan_graph;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn reference_constructions() {
        let c = construction2(&nat(102), 3).unwrap();
        assert_eq!((c.verification.ck.clone(), c.verification.ck1.clone()), (nat(102), nat(147)));
        assert_eq!(c.verification.method, Method::Enumerated);
        let c = construction1(&nat(85), 4).unwrap();
        assert_eq!((c.verification.ck.clone(), c.verification.ck1.clone()), (nat(85), nat(62)));
        let c = construction3(&nat(70), 3).unwrap();
        assert_eq!(c.graph, turan_graph(9, 7).unwrap());
        assert_eq!(c.plan.padding, nat(0));
        assert_eq!(c.verification.ck1, nat(85));
    }

    #[test]
    fn construction1_at_70() {
        let c = construction1(&nat(70), 3).unwrap();
        assert_eq!((c.verification.ck.clone(), c.verification.ck1.clone()), (nat(70), nat(81)));
        assert_eq!(c.plan.padding, nat(1));
    }

    #[test]
    fn exact_binomial_is_a_bare_clique() {
        let c = construction1(&nat(35), 3).unwrap();
        assert_eq!(c.graph, Graph::complete(7));
    }

    #[test]
    fn bare_turan_graph() {
        // 85 = T(9, 4, 7) exactly, so no extra vertex is needed
        let c = construction3(&nat(85), 4).unwrap();
        assert_eq!(c.graph, turan_graph(9, 7).unwrap());
        assert_eq!(c.verification.ck1, smbd(&nat(85), 4).unwrap().unwrap());
    }

    #[test]
    fn inapplicable_cases() {
        let e = plan(&nat(1), 3, Which::Const3).unwrap_err();
        assert_eq!(e.kind(), "inapplicable");
        let e = plan(&nat(10), 2, Which::Const2).unwrap_err();
        assert_eq!(e.kind(), "inapplicable");
        // first m whose Construction 2 inequality fails
        let bad = (1..=2000u64)
            .find(|&m| matches!(plan(&nat(m), 3, Which::Const2), Err(Error::Inapplicable { .. })))
            .expect("some m is inapplicable");
        assert!(construct(&nat(bad), 3, Which::Const2).is_err());
    }

    #[test]
    fn soundness_for_small_m() {
        for k in 3..=4u64 {
            for m in 1..=2000u64 {
                for which in [Which::Const1, Which::Const2, Which::Const3] {
                    match construct(&nat(m), k, which) {
                        Ok(c) => assert!(c.verification.attains),
                        Err(Error::Inapplicable { .. }) => {}
                        Err(e) => panic!("m={m} k={k} {which:?}: {e}"),
                    }
                }
            }
        }
    }
}
