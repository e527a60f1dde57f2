//! graph6 and edge-list text formats.
//!
//! graph6 follows the usual layout: the vertex count `N(n)`, then the upper
//! triangle of the adjacency matrix read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed big-endian into 6-bit
//! groups, each offset by 63.
//!
//! The edge list has a header line `n <count>` followed by one `u v` line
//! per edge with 1-based labels.

use std::fmt::Write as _;

use super::Graph;
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_GRAPH6_N: u64 = (1 << 36) - 1;

fn encode_n(n: u64, out: &mut String) -> Result<()> {
    let push6 = |out: &mut String, v: u64| out.push((63 + (v & 63) as u8) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else if n <= MAX_GRAPH6_N {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        return Err(Error::domain(format!("{n} vertices exceed graph6 range")));
    }
    Ok(())
}

/// graph6 encoding without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = String::new();
    encode_n(n as u64, &mut out)?;
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

fn sextet(b: u8, pos: usize) -> Result<u8> {
    if !(63..=126).contains(&b) {
        return Err(Error::parse(format!("graph6 byte {b:#04x} at offset {pos} outside 63..=126")));
    }
    Ok(b - 63)
}

/// Parses one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted; the body must have exactly the expected length
/// and zero padding bits.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let body = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if body.is_empty() {
        return Err(Error::parse("empty graph6 string"));
    }
    let (n, mut pos) = if body[0] != b'~' {
        (sextet(body[0], 0)? as u64, 1)
    } else if body.get(1) != Some(&b'~') {
        let mut n = 0u64;
        for i in 1..4 {
            let b = *body.get(i).ok_or_else(|| Error::parse("truncated graph6 size"))?;
            n = n << 6 | sextet(b, i)? as u64;
        }
        if n <= 62 {
            return Err(Error::parse("non-canonical graph6 size"));
        }
        (n, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            let b = *body.get(i).ok_or_else(|| Error::parse("truncated graph6 size"))?;
            n = n << 6 | sextet(b, i)? as u64;
        }
        if n <= 258_047 {
            return Err(Error::parse("non-canonical graph6 size"));
        }
        (n, 8)
    };
    let n = usize::try_from(n).map_err(|_| Error::parse("graph6 size too large"))?;
    let pairs = n.saturating_sub(1) as u128 * n as u128 / 2;
    let need = pairs.div_ceil(6);
    if (body.len() - pos) as u128 != need {
        return Err(Error::parse(format!(
            "graph6 body has {} bytes, expected {need} for {n} vertices",
            body.len() - pos
        )));
    }
    let mut g = Graph::new(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut seen = 0u128;
    while pos < body.len() {
        let v = sextet(body[pos], pos)?;
        for bit in (0..6).rev() {
            let set = v >> bit & 1 == 1;
            if seen < pairs {
                if set {
                    g.add_edge(i, j);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
                seen += 1;
            } else if set {
                return Err(Error::parse("nonzero graph6 padding bits"));
            }
        }
        pos += 1;
    }
    Ok(g)
}

/// One graph per non-blank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| from_graph6(l).map_err(|e| Error::parse(format!("graph {}: {e}", i + 1))))
        .collect()
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments are skipped;
/// loops, repeated edges and labels outside `1..=n` are rejected.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (no, header) = lines.next().ok_or_else(|| Error::parse("missing `n <count>` header"))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse()
            .map_err(|_| Error::parse(format!("line {no}: bad vertex count {count:?}")))?,
        _ => return Err(Error::parse(format!("line {no}: expected `n <count>`"))),
    };
    let mut g = Graph::new(n);
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(Error::parse(format!("line {no}: expected `u v`")));
        };
        let label = |t: &str| -> Result<usize> {
            let v: usize = t
                .parse()
                .map_err(|_| Error::parse(format!("line {no}: bad vertex {t:?}")))?;
            if v == 0 || v > n {
                return Err(Error::parse(format!("line {no}: vertex {v} outside 1..={n}")));
            }
            Ok(v - 1)
        };
        let (u, v) = (label(a)?, label(b)?);
        if u == v {
            return Err(Error::parse(format!("line {no}: loop at {}", u + 1)));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(format!("line {no}: repeated edge {} {}", u + 1, v + 1)));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_strings() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::new(0)).unwrap(), "?");
        assert_eq!(to_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(from_graph6("DQc").unwrap(), g);
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn long_size_prefix() {
        let g = Graph::complete(63);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with("~??~"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("C").is_err());
        // K_3 is "Bw"; "Bx" sets a padding bit
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3));
        assert!(from_graph6("Bx").is_err());
        assert!(from_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(0..80);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
            assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_format() {
        let g = from_edge_list("n 3\n1 2\n# c\n\n2 3\n").unwrap();
        assert_eq!(to_edge_list(&g), "n 3\n1 2\n2 3\n");
        assert!(from_edge_list("3\n1 2\n").is_err());
        assert!(from_edge_list("n 3\n1 4\n").is_err());
        assert!(from_edge_list("n 3\n1 1\n").is_err());
        assert!(from_edge_list("n 3\n1 2\n2 1\n").is_err());
        assert!(from_edge_list("n 3\n1 2 3\n").is_err());
    }
}
