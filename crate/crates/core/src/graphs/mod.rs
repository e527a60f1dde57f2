//! Finite simple graphs and their clique vectors.
//!
//! Vertices are indexed `0..n` in the API; the text formats in [`io`] use
//! 1-based labels. Adjacency is stored as one bitset row per vertex.

pub mod constructions;
pub mod io;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::turan_part_sizes;
use crate::{Error, Result};

/// Largest graph whose full clique vector is computed without a size cap.
pub const CLIQUE_ENUMERATION_CAP: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Adds `uv`; panics on a loop or an out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.n && vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Subgraph induced on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Appends `count` disjoint copies of `K_size`.
    pub fn pad_with_cliques(&mut self, size: usize, count: usize) {
        let old = self.n;
        let mut g = Graph::new(old + size * count);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for b in 0..count {
            let base = old + b * size;
            for u in 0..size {
                for v in u + 1..size {
                    g.add_edge(base + u, base + v);
                }
            }
        }
        *self = g;
    }
}

fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

/// Clique counts `c_0, c_1, ..., c_d` with `c_0 = 1` and `c_d > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CliqueVector {
    #[serde(with = "crate::serde_exact::u64_vec")]
    pub counts: Vec<u64>,
}

impl CliqueVector {
    /// `c_i`, zero past the clique number.
    pub fn get(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn clique_number(&self) -> usize {
        self.counts.len() - 1
    }
}

fn count_from(g: &Graph, cand: &mut [u64], depth: usize, max_size: usize, counts: &mut [u64]) {
    // `cand` holds the common neighbours of a clique of size `depth`.
    if depth + 1 == max_size {
        counts[max_size] += cand.iter().map(|w| w.count_ones() as u64).sum::<u64>();
        return;
    }
    let words = cand.len();
    let mut next = vec![0u64; words];
    let members: Vec<usize> = bits(cand).collect();
    for v in members {
        counts[depth + 1] += 1;
        let row = g.row(v);
        let mut any = false;
        for i in 0..words {
            // only neighbours after v, so each clique is counted once
            let after = if i < v / 64 {
                0
            } else if i == v / 64 {
                if v % 64 == 63 { 0 } else { !0u64 << (v % 64 + 1) }
            } else {
                !0
            };
            next[i] = cand[i] & row[i] & after;
            any |= next[i] != 0;
        }
        if any {
            let mut sub = next.clone();
            count_from(g, &mut sub, depth + 1, max_size, counts);
        }
    }
}

/// Exact clique counts of every size up to `max_size` (all sizes when
/// `None`, limited to graphs on at most [`CLIQUE_ENUMERATION_CAP`] vertices).
pub fn clique_vector(g: &Graph, max_size: Option<usize>) -> Result<CliqueVector> {
    let max_size = match max_size {
        Some(s) => s,
        None if g.n <= CLIQUE_ENUMERATION_CAP => g.n,
        None => {
            return Err(Error::ResourceLimit(format!(
                "full clique vector of a {}-vertex graph exceeds the {CLIQUE_ENUMERATION_CAP}-vertex cap; pass a maximum size",
                g.n
            )))
        }
    };
    let max_size = max_size.min(g.n);
    let mut counts = vec![0u64; max_size + 1];
    counts[0] = 1;
    if max_size >= 1 {
        let partials: Vec<Vec<u64>> = (0..g.n)
            .into_par_iter()
            .map(|v| {
                let mut local = vec![0u64; max_size + 1];
                local[1] = 1;
                if max_size >= 2 {
                    let mut cand: Vec<u64> = g.row(v).to_vec();
                    // keep only neighbours above v
                    let (word, bit) = (v / 64, v % 64);
                    cand[..word].fill(0);
                    cand[word] &= (!0u64).checked_shl(bit as u32 + 1).unwrap_or(0);
                    if cand.iter().any(|&w| w != 0) {
                        count_from(g, &mut cand, 1, max_size, &mut local);
                    }
                }
                local
            })
            .collect();
        for p in partials {
            for (c, x) in counts.iter_mut().zip(p) {
                *c += x;
            }
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    Ok(CliqueVector { counts })
}

/// Number of `k`-cliques.
pub fn clique_count(g: &Graph, k: usize) -> u64 {
    clique_vector(g, Some(k)).map(|c| c.get(k)).unwrap_or(0)
}

/// Whether the graph has a clique on `size` vertices.
pub fn has_clique(g: &Graph, size: usize) -> bool {
    size == 0 || clique_count(g, size) > 0
}

/// The subgraph induced on the common neighbours of the clique `c`,
/// together with the original index of each of its vertices.
pub fn link(g: &Graph, c: &[usize]) -> Result<(Graph, Vec<usize>)> {
    if !g.is_clique(c) {
        return Err(Error::domain(format!("{c:?} is not a clique")));
    }
    let common: Vec<usize> = (0..g.n())
        .filter(|&u| !c.contains(&u) && c.iter().all(|&v| g.has_edge(u, v)))
        .collect();
    Ok((g.induced(&common), common))
}

/// The Turán graph on `n` vertices with `r` parts, parts laid out
/// consecutively with the larger parts first.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    Ok(turan_graph_with_parts(n, r)?.0)
}

/// [`turan_graph`] plus the vertex ranges of its parts.
pub fn turan_graph_with_parts(n: usize, r: usize) -> Result<(Graph, Vec<std::ops::Range<usize>>)> {
    if r == 0 && n > 0 {
        return Err(Error::domain(format!("cannot partition {n} vertices into 0 parts")));
    }
    let mut parts = Vec::with_capacity(r);
    let mut start = 0usize;
    for size in turan_part_sizes(n as u64, r as u64) {
        parts.push(start..start + size as usize);
        start += size as usize;
    }
    let mut part_of = vec![0usize; n];
    for (p, range) in parts.iter().enumerate() {
        for v in range.clone() {
            part_of[v] = p;
        }
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok((g, parts))
}
