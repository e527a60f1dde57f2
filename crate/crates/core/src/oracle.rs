//! Brute-force ground truth over all labeled graphs on a few vertices.
//!
//! A labeled graph on `n` vertices is an index in `0..2^(n(n-1)/2)` whose
//! bits are the edges in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`,
//! least significant bit first. Graphs with fewer vertices appear as
//! graphs with isolated vertices, so one pass at `n_max` covers them all.
//!
//! The index space is split into fixed chunks that are scanned in parallel
//! and merged cell by cell (larger value wins, ties go to the smaller
//! index), so tables and witnesses do not depend on the thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, Nat};
use crate::bounds::{lgbd, nonconsec_bound, oldbd, smbd};
use crate::graphs::io::to_graph6;
use crate::graphs::Graph;
use crate::representations::kk_rep;
use crate::serde_exact;
use crate::{Error, Result};

/// Default vertex cap.
pub const DEFAULT_N_MAX: usize = 7;
/// Hard cap, reachable only with [`EnumOptions::allow_long`].
pub const LONG_N_MAX: usize = 8;

const CHUNKS: u64 = 512;

/// A graph on at most 8 vertices as adjacency masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MaskGraph {
    pub n: u8,
    pub adj: [u8; 8],
}

impl MaskGraph {
    /// The graph with edge set given by the bits of `index`.
    pub fn from_index(n: usize, index: u64) -> Self {
        let mut adj = [0u8; 8];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if index >> bit & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        MaskGraph { n: n as u8, adj }
    }

    /// Clique counts `c_0..=c_8` (zero past the clique number).
    pub fn clique_counts(&self) -> [u64; 9] {
        fn rec(adj: &[u8; 8], cand: u8, depth: usize, counts: &mut [u64; 9]) {
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                counts[depth + 1] += 1;
                let next = cand & adj[v] & !((2u16 << v) - 1) as u8;
                if next != 0 {
                    rec(adj, next, depth + 1, counts);
                }
            }
        }
        let mut counts = [0u64; 9];
        counts[0] = 1;
        let all = ((1u16 << self.n) - 1) as u8;
        rec(&self.adj, all, 0, &mut counts);
        counts
    }

    fn degrees_non_increasing(&self) -> bool {
        let n = self.n as usize;
        (1..n).all(|v| self.adj[v - 1].count_ones() >= self.adj[v].count_ones())
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n as usize);
        for u in 0..self.n as usize {
            for v in u + 1..self.n as usize {
                if self.adj[u] >> v & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn graph6(&self) -> String {
        to_graph6(&self.to_graph()).expect("small graphs always encode")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumOptions {
    /// Skip graphs whose degrees are not non-increasing in label order.
    /// Every graph has such a relabeling, so the set of clique vectors seen
    /// is unchanged.
    pub prune: bool,
    /// Permit `n = 8` (2^28 graphs).
    pub allow_long: bool,
}

fn check_cap(n: usize, opts: EnumOptions) -> Result<()> {
    let cap = if opts.allow_long { LONG_N_MAX } else { DEFAULT_N_MAX };
    if n > cap {
        let hint = if n <= LONG_N_MAX { " (allow long runs to reach 8)" } else { "" };
        return Err(Error::ResourceLimit(format!(
            "enumeration of {n}-vertex graphs exceeds the cap of {cap}{hint}"
        )));
    }
    Ok(())
}

fn index_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Calls `consumer(index, graph)` for every labeled graph on `n` vertices
/// (subject to pruning) and returns how many were visited.
pub fn enumerate_graphs(n: usize, opts: EnumOptions, mut consumer: impl FnMut(u64, &MaskGraph)) -> Result<u64> {
    check_cap(n, opts)?;
    let mut visited = 0;
    for index in 0..index_count(n) {
        let g = MaskGraph::from_index(n, index);
        if opts.prune && !g.degrees_non_increasing() {
            continue;
        }
        consumer(index, &g);
        visited += 1;
    }
    Ok(visited)
}

/// `(value, index)` with larger values preferred and then smaller indices.
type Best = Option<(u64, u64)>;

fn better(a: Best, b: Best) -> Best {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x }),
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Cell {
    all: Best,
    with: Best,
    without: Best,
}

#[derive(Debug, Clone, Copy, Default)]
struct Violations {
    count: u64,
    first: Option<u64>,
}

impl Violations {
    fn record(&mut self, index: u64) {
        self.count += 1;
        self.first = Some(self.first.map_or(index, |f| f.min(index)));
    }

    fn merge(self, other: Violations) -> Violations {
        Violations {
            count: self.count + other.count,
            first: match (self.first, other.first) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }
}

/// Bounds for one `m`, precomputed.
#[derive(Debug, Clone)]
struct RowBounds {
    n_k: usize,
    lgbd: u64,
    smbd: Option<u64>,
    main: u64,
}

#[derive(Debug, Clone, Default)]
struct Partial {
    cells: Vec<Cell>,
    main: Violations,
    with: Violations,
    without: Violations,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        for (a, b) in self.cells.iter_mut().zip(other.cells) {
            a.all = better(a.all, b.all);
            a.with = better(a.with, b.with);
            a.without = better(a.without, b.without);
        }
        self.main = self.main.merge(other.main);
        self.with = self.with.merge(other.with);
        self.without = self.without.merge(other.without);
        self
    }
}

fn to_u64(v: &Nat) -> u64 {
    v.try_into().expect("bounds at oracle scale fit in 64 bits")
}

fn row_bounds(k: u64, max_m: u64) -> Result<Vec<Option<RowBounds>>> {
    (0..=max_m)
        .map(|m| {
            if m == 0 {
                return Ok(None);
            }
            let mn = Nat::from(m);
            let lg = to_u64(&lgbd(&mn, k)?);
            let sm = smbd(&mn, k)?.map(|s| to_u64(&s));
            Ok(Some(RowBounds {
                n_k: kk_rep(&mn, k)?.leading() as usize,
                lgbd: lg,
                smbd: sm,
                main: lg.max(sm.unwrap_or(0)),
            }))
        })
        .collect()
}

/// One row of an extremal table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalRow {
    #[serde(with = "serde_exact::u64_str")]
    pub m: u64,
    #[serde(with = "serde_exact::u64_str")]
    pub max_all: u64,
    /// Over graphs containing an `n_k`-clique.
    #[serde(with = "serde_exact::opt_u64_str")]
    pub max_with_clique: Option<u64>,
    /// Over graphs without an `n_k`-clique.
    #[serde(with = "serde_exact::opt_u64_str")]
    pub max_without: Option<u64>,
    pub witness_all: String,
    pub witness_with: Option<String>,
    pub witness_without: Option<String>,
    #[serde(with = "serde_exact::nat")]
    pub lgbd: Nat,
    #[serde(with = "serde_exact::opt_nat")]
    pub smbd: Option<Nat>,
    #[serde(with = "serde_exact::nat")]
    pub oldbd: Nat,
    /// `"exact"` when the with-clique maximum reaches `lgbd` (so it is the
    /// true constructive maximum), `"lower bound only"` otherwise: the
    /// extremal graph may need more than `n_max` vertices.
    pub conbd_status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalTable {
    pub k: u64,
    pub n_max: usize,
    pub pruned: bool,
    pub graphs_checked: u64,
    /// Rows for every `m >= 1` realized on at most `n_max` vertices.
    pub rows: Vec<ExtremalRow>,
    /// Graphs with `c_{k+1}` above the main bound.
    pub main_violations: u64,
    /// Graphs with an `n_k`-clique and `c_{k+1} > lgbd`.
    pub lgbd_violations: u64,
    /// Graphs without an `n_k`-clique and `c_{k+1} > smbd`.
    pub smbd_violations: u64,
    /// graph6 of the smallest-index violating graph, if any.
    pub counterexample: Option<String>,
}

pub const CSV_HEADER: &str = "m,max_all,max_with_clique,max_without,lgbd,smbd,oldbd,witness6";

impl ExtremalTable {
    pub fn row(&self, m: u64) -> Option<&ExtremalRow> {
        self.rows.iter().find(|r| r.m == m)
    }

    pub fn violations(&self) -> u64 {
        self.main_violations + self.lgbd_violations + self.smbd_violations
    }

    /// CSV with the fixed header; absent values are empty fields.
    pub fn to_csv(&self) -> String {
        let opt = |v: &Option<u64>| v.map_or(String::new(), |v| v.to_string());
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.m,
                r.max_all,
                opt(&r.max_with_clique),
                opt(&r.max_without),
                r.lgbd,
                r.smbd.as_ref().map_or(String::new(), Nat::to_string),
                r.oldbd,
                r.witness_all
            ));
        }
        out
    }
}

fn scan(n: usize, k: u64, bounds: &[Option<RowBounds>], opts: EnumOptions, range: std::ops::Range<u64>) -> Partial {
    let ku = k as usize;
    let mut p = Partial {
        cells: vec![Cell::default(); bounds.len()],
        ..Partial::default()
    };
    for index in range {
        let g = MaskGraph::from_index(n, index);
        if opts.prune && !g.degrees_non_increasing() {
            continue;
        }
        let counts = g.clique_counts();
        let m = counts[ku] as usize;
        if m == 0 {
            continue;
        }
        let c = counts[ku + 1];
        let omega = counts.iter().rposition(|&x| x > 0).unwrap_or(0);
        let b = bounds[m].as_ref().expect("m >= 1");
        let cell = &mut p.cells[m];
        cell.all = better(cell.all, Some((c, index)));
        if c > b.main {
            p.main.record(index);
        }
        if omega >= b.n_k {
            cell.with = better(cell.with, Some((c, index)));
            if c > b.lgbd {
                p.with.record(index);
            }
        } else {
            cell.without = better(cell.without, Some((c, index)));
            if b.smbd.is_none_or(|s| c > s) {
                p.without.record(index);
            }
        }
    }
    p
}

fn scan_all(n: usize, k: u64, opts: EnumOptions) -> Result<(Partial, Vec<Option<RowBounds>>, u64)> {
    if k < 1 {
        return Err(Error::domain("tables need k >= 1"));
    }
    let max_m = binomial(n as u64, k);
    let bounds = row_bounds(k, to_u64(&max_m))?;
    let total = index_count(n);
    let chunk = total.div_ceil(CHUNKS).max(1);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let partial = starts
        .into_par_iter()
        .map(|s| scan(n, k, &bounds, opts, s..(s + chunk).min(total)))
        .reduce_with(Partial::merge)
        .unwrap_or_default();
    let checked = if opts.prune {
        let mut count = 0;
        enumerate_graphs(n, opts, |_, _| count += 1)?;
        count
    } else {
        total
    };
    Ok((partial, bounds, checked))
}

fn witness(n: usize, best: Best) -> Option<String> {
    best.map(|(_, i)| MaskGraph::from_index(n, i).graph6())
}

/// Exact extremal values of `c_{k+1}` for every `c_k = m` over graphs on at
/// most `n_max` vertices.
pub fn build_extremal_table(k: u64, n_max: usize, opts: EnumOptions) -> Result<ExtremalTable> {
    Ok(build_extremal_tables(&[k], n_max, opts)?.remove(0))
}

/// [`build_extremal_table`] for several `k`.
pub fn build_extremal_tables(ks: &[u64], n_max: usize, opts: EnumOptions) -> Result<Vec<ExtremalTable>> {
    check_cap(n_max, opts)?;
    ks.iter()
        .map(|&k| {
            if k < 2 {
                return Err(Error::domain("extremal tables need k >= 2"));
            }
            let (partial, _bounds, checked) = scan_all(n_max, k, opts)?;
            let mut rows = Vec::new();
            for (m, cell) in partial.cells.iter().enumerate() {
                let Some((max_all, _)) = cell.all else { continue };
                let mn = Nat::from(m as u64);
                let lg = lgbd(&mn, k)?;
                let max_with = cell.with.map(|b| b.0);
                let exact = max_with.is_some_and(|v| Nat::from(v) == lg);
                rows.push(ExtremalRow {
                    m: m as u64,
                    max_all,
                    max_with_clique: max_with,
                    max_without: cell.without.map(|b| b.0),
                    witness_all: witness(n_max, cell.all).expect("row has a graph"),
                    witness_with: witness(n_max, cell.with),
                    witness_without: witness(n_max, cell.without),
                    lgbd: lg,
                    smbd: smbd(&mn, k)?,
                    oldbd: oldbd(&mn, k)?,
                    conbd_status: if exact { "exact" } else { "lower bound only" }.to_string(),
                });
            }
            let first = [partial.main.first, partial.with.first, partial.without.first]
                .into_iter()
                .flatten()
                .min();
            Ok(ExtremalTable {
                k,
                n_max,
                pruned: opts.prune,
                graphs_checked: checked,
                rows,
                main_violations: partial.main.count,
                lgbd_violations: partial.with.count,
                smbd_violations: partial.without.count,
                counterexample: first.map(|i| MaskGraph::from_index(n_max, i).graph6()),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub k: u64,
    pub n_max: usize,
    pub graphs_checked: u64,
    pub main_violations: u64,
    pub lgbd_violations: u64,
    pub smbd_violations: u64,
    pub counterexample: Option<String>,
    /// Rows where some graph reaches the main bound.
    pub tight_rows: u64,
    pub rows: u64,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.main_violations == 0 && self.lgbd_violations == 0 && self.smbd_violations == 0
    }

    pub fn from_table(t: &ExtremalTable) -> Self {
        let tight = t
            .rows
            .iter()
            .filter(|r| {
                let main = r.smbd.as_ref().map_or(r.lgbd.clone(), |s| s.max(&r.lgbd).clone());
                Nat::from(r.max_all) == main
            })
            .count() as u64;
        TheoremReport {
            k: t.k,
            n_max: t.n_max,
            graphs_checked: t.graphs_checked,
            main_violations: t.main_violations,
            lgbd_violations: t.lgbd_violations,
            smbd_violations: t.smbd_violations,
            counterexample: t.counterexample.clone(),
            tight_rows: tight,
            rows: t.rows.len() as u64,
        }
    }
}

/// Checks `c_{k+1} <= main bound`, and the refined split, on every graph.
pub fn verify_main_theorem(k: u64, n_max: usize, opts: EnumOptions) -> Result<TheoremReport> {
    Ok(TheoremReport::from_table(&build_extremal_table(k, n_max, opts)?))
}

pub fn verify_main_theorem_all(ks: &[u64], n_max: usize, opts: EnumOptions) -> Result<Vec<TheoremReport>> {
    Ok(build_extremal_tables(ks, n_max, opts)?
        .iter()
        .map(TheoremReport::from_table)
        .collect())
}

/// Outcome of a nonexistence query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Nonexistence {
    /// The bound on `c_{k+i}` is below the target, so no graph of any size
    /// exists.
    CertifiedByBound {
        #[serde(with = "serde_exact::nat")]
        bound: Nat,
    },
    /// No graph on at most `n_max` vertices has the pair.
    Exhaustive { n_max: usize },
    /// A graph with the pair exists.
    Exists { witness: String },
}

impl Nonexistence {
    pub fn no_graph(&self) -> bool {
        !matches!(self, Nonexistence::Exists { .. })
    }
}

/// Is there no graph with `c_k = m` and `c_{k+i} = target`?
pub fn verify_nonexistence(k: u64, i: u64, m: &Nat, target: &Nat, n_max: usize, opts: EnumOptions) -> Result<Nonexistence> {
    let bound = nonconsec_bound(m, k, i)?.value;
    if bound < *target {
        return Ok(Nonexistence::CertifiedByBound { bound });
    }
    check_cap(n_max, opts)?;
    let (ku, iu) = (k as usize, i as usize);
    if ku + iu > LONG_N_MAX {
        return Err(Error::domain("k + i exceeds the enumerable clique sizes"));
    }
    let (Ok(m), Ok(target)) = (u64::try_from(m), u64::try_from(target)) else {
        return Ok(Nonexistence::Exhaustive { n_max });
    };
    let found = (0..index_count(n_max)).into_par_iter().find_first(|&idx| {
        let g = MaskGraph::from_index(n_max, idx);
        if !g.degrees_non_increasing() {
            return false;
        }
        let c = g.clique_counts();
        c[ku] == m && c[ku + iu] == target
    });
    Ok(match found {
        Some(idx) => Nonexistence::Exists {
            witness: MaskGraph::from_index(n_max, idx).graph6(),
        },
        None => Nonexistence::Exhaustive { n_max },
    })
}
