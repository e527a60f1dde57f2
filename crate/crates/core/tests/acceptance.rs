//! Acceptance run: one PASS/FAIL line per criterion, zero tolerance.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use clique_bounds::board::run_board;
use clique_bounds::bounds::{
    approx, fj_series, iterated_smbd, kalai_eckhoff_bound, lgbd, lgbd_wins, main_bound, nonconsec_bound,
    oldbd, ratio_stats, smbd,
};
use clique_bounds::binomial::{binomial, r_sum, turan_binom};
use clique_bounds::complexes::revlex_complex;
use clique_bounds::graphs::constructions::{construct, Which};
use clique_bounds::graphs::{clique_count, link, turan_graph, Graph};
use clique_bounds::oracle::{build_extremal_tables, EnumOptions};
use clique_bounds::representations::kk_rep;
use clique_bounds::Nat;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;

fn n(v: u64) -> Nat {
    Nat::from(v)
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn reference_values() -> Check {
    let b = ok(main_bound(&n(102), 3))?;
    expect("oldbd(102,3)", b.oldbd, n(149))?;
    expect("lgbd(102,3)", b.lgbd, n(147))?;
    expect("smbd(102,3)", b.smbd, Some(n(146)))?;
    expect("main(102,3)", b.main, n(147))?;
    let b = ok(main_bound(&n(70), 3))?;
    expect("smbd(70,3)", b.smbd, Some(n(85)))?;
    expect("lgbd(70,3)", b.lgbd, n(81))?;
    expect("main(70,3)", b.main, n(85))?;
    let b = ok(main_bound(&n(85), 4))?;
    expect("smbd(85,4)", b.smbd, Some(n(61)))?;
    expect("lgbd(85,4)", b.lgbd, n(62))?;
    expect("main(85,4)", b.main, n(62))?;
    expect("kalai_eckhoff(35,3,4)", ok(kalai_eckhoff_bound(&n(35), 3, 4))?, n(17))?;
    expect("smbd(20,3)", ok(smbd(&n(20), 3))?, Some(n(10)))?;
    expect("smbd(10,4)", ok(smbd(&n(10), 4))?, Some(n(0)))?;
    expect("iterated smbd(20,3,2)", ok(iterated_smbd(&n(20), 3, 2))?, Some(n(0)))?;
    expect("nonconsec(20,3,2).small", ok(nonconsec_bound(&n(20), 3, 2))?.small, Some(n(2)))?;
    expect("nonconsec(70,3,2)", ok(nonconsec_bound(&n(70), 3, 2))?.value, n(61))?;
    Ok("18 values".into())
}

fn counts(g: &Graph, k: usize) -> (u64, u64) {
    (clique_count(g, k), clique_count(g, k + 1))
}

fn constructions() -> Check {
    for (which, m, k, want) in [
        (Which::Const2, 102, 3, (102, 147)),
        (Which::Const1, 85, 4, (85, 62)),
        (Which::Const3, 70, 3, (70, 85)),
    ] {
        let c = ok(construct(&n(m), k, which))?;
        expect(&format!("{} at ({m},{k})", which.tag()), counts(&c.graph, k as usize), want)?;
    }
    let c = ok(construct(&n(70), 3, Which::Const3))?;
    expect("Construction 3 at (70,3) is T(9,7)", c.graph, ok(turan_graph(9, 7))?)?;
    let edges: Vec<_> = Graph::complete(10).edges().filter(|&e| e != (0, 1)).collect();
    let k10e = ok(Graph::from_edges(10, &edges))?;
    expect("K10 minus an edge, c_3", clique_count(&k10e, 3), 112)?;
    expect("K7, (c_3, c_4)", counts(&Graph::complete(7), 3), (35, 35))?;
    Ok("5 graphs".into())
}

fn oracle_sweep() -> Check {
    let tables = ok(build_extremal_tables(&[2, 3, 4, 5], 7, EnumOptions::default()))?;
    let mut checked = 0;
    for t in &tables {
        expect(&format!("graphs checked for k={}", t.k), t.graphs_checked, 1 << 21)?;
        expect(&format!("main violations k={}", t.k), t.main_violations, 0)?;
        expect(&format!("lgbd violations k={}", t.k), t.lgbd_violations, 0)?;
        expect(&format!("smbd violations k={}", t.k), t.smbd_violations, 0)?;
        checked += t.graphs_checked;
    }
    let row = tables[1].row(35).ok_or("no row m=35 for k=3")?;
    let without = row.max_without;
    if without.is_some_and(|v| v > 17) {
        return Err(format!("m=35, k=3: a graph without a 7-clique has c_4 = {without:?}"));
    }
    let note = without.map_or("none without K7".to_string(), |v| v.to_string());
    Ok(format!("{checked} graph/k pairs, m=35 without-clique max: {note}"))
}

/// Every strictly decreasing sequence that is a valid `k`-cascade with
/// value at most `limit`.
fn all_cascades(k: u64, limit: u64) -> Vec<(u64, Vec<u64>)> {
    fn go(k: u64, pos: u64, upper: u64, value: u64, limit: u64, cur: &mut Vec<u64>, out: &mut Vec<(u64, Vec<u64>)>) {
        if !cur.is_empty() {
            out.push((value, cur.clone()));
        }
        if pos == k {
            return;
        }
        let level = k - pos;
        for t in level..upper {
            let c = binomial(t, level).to_u64().unwrap_or(u64::MAX);
            if value + c > limit {
                break;
            }
            cur.push(t);
            go(k, pos + 1, t, value + c, limit, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 0, limit + k + 1, 0, limit, &mut Vec::new(), &mut out);
    out
}

fn properties() -> Check {
    // representation round trip
    (1..=6u64).into_par_iter().try_for_each(|k| -> Result<(), String> {
        for m in 1..=100_000u64 {
            let rep = ok(kk_rep(&n(m), k))?;
            if r_sum(k, &rep.terms) != n(m) || !rep.terms.windows(2).all(|w| w[0] > w[1]) {
                return Err(format!("kk_rep({m},{k}) = {:?}", rep.terms));
            }
            let last = rep.terms.len() as u64 - 1;
            if rep.terms[last as usize] < k - last {
                return Err(format!("trailing term of kk_rep({m},{k})"));
            }
        }
        Ok(())
    })?;
    // uniqueness by exhaustive search
    for k in 1..=4u64 {
        let mut seen = vec![0u32; 2001];
        for (v, terms) in all_cascades(k, 2000) {
            seen[v as usize] += 1;
            expect("exhaustive cascade equals kk_rep", ok(kk_rep(&n(v), k))?.terms, terms)?;
        }
        if let Some(m) = (1..=2000).find(|&m| seen[m] != 1) {
            return Err(format!("m={m}, k={k} has {} cascades", seen[m]));
        }
    }
    // bound comparisons
    (2..=6u64).into_par_iter().try_for_each(|k| -> Result<(), String> {
        for m in 1..=100_000u64 {
            let m = n(m);
            let old = ok(oldbd(&m, k))?;
            if ok(lgbd(&m, k))? > old {
                return Err(format!("lgbd({m},{k}) > oldbd"));
            }
            if let Some(s) = ok(smbd(&m, k))? {
                if old > n(0) && s >= old {
                    return Err(format!("smbd({m},{k}) >= oldbd"));
                }
            }
        }
        Ok(())
    })?;
    // superadditivity of oldbd
    for k in 1..=4u64 {
        let table: Vec<u64> = (0..=6000u64)
            .map(|m| ok(oldbd(&n(m), k)).map(|v| v.to_u64().unwrap()))
            .collect::<Result<_, _>>()?;
        for a in 1..=3000usize {
            for b in a..=3000usize {
                if table[a + b] < table[a] + table[b] {
                    return Err(format!("oldbd superadditivity fails at {a}+{b}, k={k}"));
                }
            }
        }
    }
    // shadow identity against a direct colex sweep
    for size in 2..=5u64 {
        let mut sets = subsets(20, size as usize);
        sets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        let mut shadow = HashSet::new();
        for (i, s) in sets.iter().enumerate() {
            for skip in 0..s.len() {
                let mut f = s.clone();
                f.remove(skip);
                shadow.insert(f);
            }
            let count = i as u64 + 1;
            let rep = ok(kk_rep(&n(count), size))?;
            if n(shadow.len() as u64) != r_sum(size - 1, &rep.terms) {
                return Err(format!("shadow of {count} {size}-sets"));
            }
            if count.is_multiple_of(97) {
                let fv = ok(revlex_complex(size, &n(count)))?.face_vector();
                expect("rev-lex complex face vector", fv[size as usize - 1].clone(), n(shadow.len() as u64))?;
            }
        }
    }
    // Turán numbers against the graphs
    for nn in 0..=12usize {
        for r in 1..=12usize {
            let g = turan_by_residue(nn, r);
            for k in 0..=nn {
                let want = brute_cliques(&g, k);
                expect(&format!("turan_binom({nn},{k},{r})"), ok(turan_binom(nn as u64, k as u64, r as u64))?, n(want))?;
            }
        }
    }
    // deletion identity
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let nn = rng.gen_range(2..=14);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, nn, p);
        let v = rng.gen_range(0..nn);
        let (l, _) = ok(link(&g, &[v]))?;
        let rest = g.remove_vertex(v);
        for k in 1..=nn {
            if clique_count(&g, k) != clique_count(&rest, k) + clique_count(&l, k - 1) {
                return Err(format!("deletion identity at k={k}"));
            }
        }
    }
    Ok("round trip, uniqueness, bounds, superadditivity, shadow, Turán, links".into())
}

fn subsets(n: u64, size: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: u64, n: u64, size: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    go(1, n, size, &mut cur, &mut out);
    out
}

fn turan_by_residue(nn: usize, r: usize) -> Graph {
    let mut g = Graph::new(nn);
    for u in 0..nn {
        for v in u + 1..nn {
            if u % r != v % r {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn brute_cliques(g: &Graph, k: usize) -> u64 {
    (0u32..1 << g.n())
        .filter(|s| s.count_ones() as usize == k)
        .filter(|&s| {
            let vs: Vec<usize> = (0..g.n()).filter(|&i| s >> i & 1 == 1).collect();
            g.is_clique(&vs)
        })
        .count() as u64
}

fn random_graph(rng: &mut ChaCha8Rng, nn: usize, p: f64) -> Graph {
    let mut g = Graph::new(nn);
    for u in 0..nn {
        for v in u + 1..nn {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random `(k, a, c)` satisfying the board preconditions.
pub fn random_board_instance(rng: &mut ChaCha8Rng) -> (u64, Vec<u64>, Vec<u64>) {
    let k = rng.gen_range(1..=5u64);
    let cap = binomial(15, k).to_u64().unwrap();
    let ma = rng.gen_range(1..cap);
    let a = kk_rep(&n(ma), k).unwrap().terms;
    let target = binomial(a[0] + 1, k).to_u64().unwrap();
    let mc = rng.gen_range(target - ma..target);
    let c = kk_rep(&n(mc), k).unwrap().terms;
    (k, a, c)
}

fn board() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut total_moves = 0;
    for _ in 0..200 {
        let (k, a, c) = random_board_instance(&mut rng);
        let run = run_board(k, &a, &c).map_err(|e| format!("k={k} a={a:?} c={c:?}: {e}"))?;
        for m in &run.moves {
            let pre = (&m.pre.top, &m.pre.bottom);
            let post = (&m.post.top, &m.post.bottom);
            let rk = |s: (&Vec<u64>, &Vec<u64>)| r_sum(k, s.0) + r_sum(k, s.1);
            let rk1 = |s: (&Vec<u64>, &Vec<u64>)| r_sum(k + 1, s.0) + r_sum(k + 1, s.1);
            if rk(pre) != rk(post) || rk1(post) < rk1(pre) || r_sum(k, post.0) <= r_sum(k, pre.0) {
                return Err(format!("move {:?} on a={a:?} c={c:?} breaks a condition", m.move_type));
            }
        }
        let ak = a[0];
        let rest = r_sum(k, &a) + r_sum(k, &c) - binomial(ak + 1, k);
        let b = if rest == n(0) { vec![] } else { kk_rep(&rest, k).unwrap().terms };
        expect("terminal top", run.final_state.top.clone(), vec![ak + 1])?;
        expect("terminal bottom", run.final_state.bottom.clone(), b.clone())?;
        if n(run.moves.len() as u64) > binomial(ak + 1, k) {
            return Err(format!("{} moves exceed C({}, {k})", run.moves.len(), ak + 1));
        }
        let lhs = binomial(ak + 1, k + 1) + r_sum(k + 1, &b);
        let rhs = r_sum(k + 1, &c) + r_sum(k + 1, &a);
        if lhs <= rhs {
            return Err(format!("strict inequality fails for a={a:?} c={c:?}"));
        }
        total_moves += run.moves.len();
    }
    Ok(format!("200 runs, {total_moves} moves"))
}

fn ratio() -> Check {
    let bounded = [3u64, 4]
        .par_iter()
        .map(|&k| -> Result<u64, String> {
            let mut bounded = 0;
            for m in 1..=100_000u64 {
                let r = ok(ratio_stats(&n(m), k))?;
                if let Some(rhs) = &r.ratbound_rhs {
                    bounded += 1;
                    if &r.ratio_proxy > rhs {
                        return Err(format!("ratio({m},{k}) = {} exceeds {}", r.ratio_proxy, rhs));
                    }
                }
            }
            Ok(bounded)
        })
        .collect::<Result<Vec<_>, _>>()?;
    if !ok(lgbd_wins(&n(102), 3))? {
        return Err("lgbd should win at m=102".into());
    }
    if ok(lgbd_wins(&n(70), 3))? {
        return Err("smbd should win at m=70".into());
    }
    let fj = ok(fj_series(&[1_000, 10_000, 100_000], 3))?;
    let report: Vec<String> = fj.iter().map(|f| format!("f_{}={:.4}", f.j, approx(&f.fraction))).collect();
    Ok(format!(
        "{} + {} bounded cases; {} (reported, not asserted)",
        bounded[0],
        bounded[1],
        report.join(" ")
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 6] = [
        ("reference-value regression", reference_values),
        ("construction attainment", constructions),
        ("oracle sweep n_max=7", oracle_sweep),
        ("property suites", properties),
        ("board algorithm", board),
        ("ratio statistics", ratio),
    ];
    let mut failed = false;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({secs:.2}s) {detail}", i + 1),
            Err(why) => {
                failed = true;
                println!("FAIL criterion {}: {name} ({secs:.2}s) {why}", i + 1);
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
