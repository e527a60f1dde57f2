//! The two-row board rearrangement.
//!
//! A board has `k` columns numbered `k` (left) down to `1` (right) and two
//! rows of positive integers. A row is stored as the entries from column
//! `k` rightwards; it is permissible when the entries strictly decrease and
//! the rightmost one, in column `i`, is at least `i`. A permissible row is
//! therefore exactly a cascade `n_k > n_{k-1} > ...`.
//!
//! Starting from cascades `a` (top) and `c` (bottom) with `c_k <= a_k`,
//! moves are chosen by a fixed decision list and applied until the top row
//! leads with `a_k + 1`. Every move keeps `r_k(top) + r_k(bottom)` fixed,
//! never lowers `r_{k+1}(top) + r_{k+1}(bottom)` and strictly raises
//! `r_k(top)`. At the end the top row is `[a_k + 1]` and the bottom row is
//! the cascade of what is left, which gives
//! `r_{k+1}(a_k+1) + r_{k+1}(b) > r_{k+1}(c) + r_{k+1}(a)`.

use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, r_sum, Nat};
use crate::representations::{is_cascade, kk_rep};
use crate::serde_exact;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoardState {
    pub k: u64,
    /// Entries of columns `k, k-1, ...` of the top row.
    pub top: Vec<u64>,
    pub bottom: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveType {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Row {
    Top,
    Bottom,
}

/// Sum-preserving rewrites recorded inside a composite move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SubStep {
    /// The last entry of `row`, in column `from`, spread over columns
    /// `from` down to `to`.
    Subdivide { row: Row, from: u64, to: u64 },
    /// The run ending at the last entry merged into one entry in `column`.
    Collapse { row: Row, column: u64 },
}

/// The four sums tracked by the allowability conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sums {
    #[serde(with = "serde_exact::nat")]
    pub rk_top: Nat,
    #[serde(with = "serde_exact::nat")]
    pub rk_bottom: Nat,
    #[serde(with = "serde_exact::nat")]
    pub rk1_top: Nat,
    #[serde(with = "serde_exact::nat")]
    pub rk1_bottom: Nat,
}

impl Sums {
    pub fn rk_total(&self) -> Nat {
        &self.rk_top + &self.rk_bottom
    }

    pub fn rk1_total(&self) -> Nat {
        &self.rk1_top + &self.rk1_bottom
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub move_type: MoveType,
    pub substeps: Vec<SubStep>,
    pub pre: BoardState,
    pub post: BoardState,
    pub before: Sums,
    pub after: Sums,
}

fn row_permissible(k: u64, row: &[u64]) -> bool {
    row.len() as u64 <= k
        && row.windows(2).all(|w| w[0] > w[1])
        && row.last().is_none_or(|&last| last >= k + 1 - row.len() as u64)
}

impl BoardState {
    pub fn new(k: u64, top: Vec<u64>, bottom: Vec<u64>) -> Result<Self> {
        let s = BoardState { k, top, bottom };
        if k == 0 {
            return Err(Error::domain("a board needs at least one column"));
        }
        if !s.is_permissible() {
            return Err(Error::domain(format!("board {s:?} is not permissible")));
        }
        Ok(s)
    }

    pub fn is_permissible(&self) -> bool {
        row_permissible(self.k, &self.top) && row_permissible(self.k, &self.bottom)
    }

    fn column_of(&self, len: usize) -> u64 {
        self.k + 1 - len as u64
    }

    /// Column of the last top entry (`k + 1` when the row is empty).
    pub fn g(&self) -> u64 {
        self.column_of(self.top.len())
    }

    /// Column of the last bottom entry (`k + 1` when the row is empty).
    pub fn h(&self) -> u64 {
        self.column_of(self.bottom.len())
    }

    fn index(&self, column: u64) -> usize {
        (self.k - column) as usize
    }

    /// Top entry in `column`, if any.
    pub fn x(&self, column: u64) -> Option<u64> {
        self.top.get(self.index(column)).copied()
    }

    pub fn y(&self, column: u64) -> Option<u64> {
        self.bottom.get(self.index(column)).copied()
    }

    pub fn sums(&self) -> Sums {
        Sums {
            rk_top: r_sum(self.k, &self.top),
            rk_bottom: r_sum(self.k, &self.bottom),
            rk1_top: r_sum(self.k + 1, &self.top),
            rk1_bottom: r_sum(self.k + 1, &self.bottom),
        }
    }

    /// Two-row text picture, `.` for blank squares.
    pub fn render(&self) -> String {
        let cell = |v: Option<u64>| v.map_or(".".to_string(), |v| v.to_string());
        let width = self
            .top
            .iter()
            .chain(&self.bottom)
            .map(|v| v.to_string().len())
            .chain(std::iter::once(self.k.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let mut line = |label: &str, f: &dyn Fn(u64) -> String| {
            let _ = write!(out, "{label:<4}");
            for col in (1..=self.k).rev() {
                let _ = write!(out, " {:>width$}", f(col));
            }
            out.push('\n');
        };
        line("col", &|c| c.to_string());
        line("top", &|c| cell(self.x(c)));
        line("bot", &|c| cell(self.y(c)));
        out
    }
}

/// The move picked by the decision list, or `None` when the bottom row
/// is empty.
pub fn classify_move(s: &BoardState) -> Result<Option<MoveType>> {
    if !s.is_permissible() {
        return Err(Error::invariant(format!("board {s:?} is not permissible")));
    }
    if s.bottom.is_empty() {
        return Ok(None);
    }
    if s.top.is_empty() {
        return Err(Error::invariant("top row is empty"));
    }
    let (g, h) = (s.g(), s.h());
    let overlap = g.max(h)..=s.k;
    if overlap.clone().any(|i| s.y(i) > s.x(i)) {
        return Ok(Some(MoveType::T2));
    }
    if g > h {
        return Ok(Some(MoveType::T1));
    }
    let (xg, yh) = (s.x(g).expect("g is filled"), s.y(h).expect("h is filled"));
    let t = if yh > h {
        if xg - g < yh - h {
            MoveType::T5
        } else if g == 1 {
            if h == 1 {
                MoveType::T7
            } else {
                MoveType::T8
            }
        } else {
            MoveType::T6
        }
    } else if g == 1 {
        MoveType::T3
    } else {
        MoveType::T4
    };
    Ok(Some(t))
}

/// Replaces the last entry `y` (in column `from`) by `y-1, ..., y-(from-to),
/// y-(from-to)` in columns `from` down to `to`.
fn subdivide(row: &mut Vec<u64>, from: u64, to: u64) {
    let y = row.pop().expect("subdivide needs an entry");
    for c in (to + 1..=from).rev() {
        row.push(y - (from - c + 1));
    }
    row.push(y - (from - to));
}

/// Merges the run `v, v-1, ..., w, w` at the end of `row` into `v+1`.
/// Returns the index of the merged entry when the last two were equal.
fn collapse(row: &mut Vec<u64>) -> Option<usize> {
    let p = row.len().checked_sub(1)?;
    if p == 0 || row[p - 1] != row[p] {
        return None;
    }
    let mut q = p - 1;
    while q > 0 && row[q - 1] == row[q] + 1 {
        q -= 1;
    }
    row[q] += 1;
    row.truncate(q + 1);
    Some(q)
}

fn swap_tails(s: &mut BoardState, column: u64) {
    let at = s.index(column);
    let top_tail = s.top.split_off(at.min(s.top.len()));
    let bottom_tail = s.bottom.split_off(at.min(s.bottom.len()));
    s.top.extend(bottom_tail);
    s.bottom.extend(top_tail);
}

/// `x_1 += 1` followed by a collapse if one is available.
fn bump_last_top(s: &mut BoardState, steps: &mut Vec<SubStep>) {
    *s.top.last_mut().expect("top row is nonempty") += 1;
    if let Some(q) = collapse(&mut s.top) {
        steps.push(SubStep::Collapse {
            row: Row::Top,
            column: s.k - q as u64,
        });
    }
}

fn check(cond: bool, what: &str, s: &BoardState, t: MoveType, post: &BoardState) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invariant(format!(
            "move {t:?} broke {what}\nbefore:\n{}after:\n{}",
            s.render(),
            post.render()
        )))
    }
}

/// Applies `t`, which must be the move [`classify_move`] picks, and checks
/// the four allowability conditions.
pub fn apply_move(s: &BoardState, t: MoveType) -> Result<(BoardState, MoveRecord)> {
    let picked = classify_move(s)?;
    if picked != Some(t) {
        return Err(Error::domain(format!("move {t:?} requested but the board calls for {picked:?}")));
    }
    let (g, h) = (s.g(), s.h());
    let mut n = s.clone();
    let mut steps = Vec::new();
    match t {
        MoveType::T1 => {
            let from = n.index(g - 1);
            let moved = n.bottom.split_off(from);
            n.top.extend(moved);
        }
        MoveType::T2 => {
            let i = (g.max(h)..=s.k)
                .rev()
                .find(|&i| s.y(i) > s.x(i))
                .expect("classified as T2");
            swap_tails(&mut n, i);
        }
        MoveType::T3 => {
            n.bottom.pop();
            bump_last_top(&mut n, &mut steps);
        }
        MoveType::T4 => {
            n.bottom.pop();
            n.top.push(g - 1);
        }
        MoveType::T5 => {
            let yh = s.y(h).expect("h is filled");
            let i = (g..h)
                .rev()
                .find(|&i| yh - (h - i) > s.x(i).expect("i >= g"))
                .ok_or_else(|| Error::invariant("no column for a fifth-type move"))?;
            subdivide(&mut n.bottom, h, i);
            steps.push(SubStep::Subdivide {
                row: Row::Bottom,
                from: h,
                to: i,
            });
            swap_tails(&mut n, i);
        }
        MoveType::T6 => {
            subdivide(&mut n.bottom, h, g - 1);
            steps.push(SubStep::Subdivide {
                row: Row::Bottom,
                from: h,
                to: g - 1,
            });
            let v = n.bottom.pop().expect("just subdivided");
            n.top.push(v);
        }
        MoveType::T7 | MoveType::T8 => {
            if t == MoveType::T8 {
                subdivide(&mut n.bottom, h, 1);
                steps.push(SubStep::Subdivide {
                    row: Row::Bottom,
                    from: h,
                    to: 1,
                });
            }
            let y1 = n.bottom.last_mut().expect("bottom nonempty");
            *y1 -= 1;
            if *y1 == 0 {
                n.bottom.pop();
            }
            bump_last_top(&mut n, &mut steps);
        }
    }
    let (before, after) = (s.sums(), n.sums());
    check(n.is_permissible(), "permissibility", s, t, &n)?;
    check(before.rk_total() == after.rk_total(), "conservation of the r_k total", s, t, &n)?;
    check(after.rk1_total() >= before.rk1_total(), "monotonicity of the r_(k+1) total", s, t, &n)?;
    check(after.rk_top > before.rk_top, "strict growth of r_k(top)", s, t, &n)?;
    let record = MoveRecord {
        move_type: t,
        substeps: steps,
        pre: s.clone(),
        post: n.clone(),
        before,
        after,
    };
    Ok((n, record))
}

/// A full run and the arithmetic it certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoardRun {
    pub k: u64,
    pub a: Vec<u64>,
    pub c: Vec<u64>,
    /// Cascade of `r_k(a) + r_k(c) - C(a_k + 1, k)`.
    pub b: Vec<u64>,
    pub moves: Vec<MoveRecord>,
    pub final_state: BoardState,
    /// `C(a_k + 1, k)`, the bound on the number of moves.
    #[serde(with = "serde_exact::nat")]
    pub step_bound: Nat,
    /// `r_{k+1}(a_k + 1) + r_{k+1}(b)`.
    #[serde(with = "serde_exact::nat")]
    pub lhs: Nat,
    /// `r_{k+1}(c) + r_{k+1}(a)`.
    #[serde(with = "serde_exact::nat")]
    pub rhs: Nat,
}

/// Runs the board from top row `a` and bottom row `c` to termination.
pub fn run_board(k: u64, a: &[u64], c: &[u64]) -> Result<BoardRun> {
    if k == 0 {
        return Err(Error::domain("a board needs at least one column"));
    }
    if a.is_empty() || !is_cascade(k, a) {
        return Err(Error::domain(format!("{a:?} is not a nonempty {k}-cascade")));
    }
    if !is_cascade(k, c) {
        return Err(Error::domain(format!("{c:?} is not a {k}-cascade")));
    }
    let ak = a[0];
    if c.first().is_some_and(|&ck| ck > ak) {
        return Err(Error::domain(format!("c_k = {} exceeds a_k = {ak}", c[0])));
    }
    let total = r_sum(k, a) + r_sum(k, c);
    let target = binomial(ak + 1, k);
    if total < target {
        return Err(Error::domain(format!(
            "r_k(a) + r_k(c) = {total} is below C(a_k + 1, k) = {target}"
        )));
    }
    let rest = &total - &target;
    let b = if rest.is_zero() { Vec::new() } else { kk_rep(&rest, k)?.terms };
    let step_limit = target.to_u64().unwrap_or(u64::MAX);

    let mut state = BoardState::new(k, a.to_vec(), c.to_vec())?;
    let mut moves = Vec::new();
    while state.top[0] <= ak {
        if moves.len() as u64 >= step_limit {
            return Err(Error::invariant(format!("no termination within {step_limit} moves")));
        }
        let t = classify_move(&state)?.ok_or_else(|| Error::invariant("bottom emptied before termination"))?;
        let (next, record) = apply_move(&state, t)?;
        moves.push(record);
        state = next;
    }
    if state.top != [ak + 1] || state.bottom != b {
        return Err(Error::invariant(format!(
            "terminal board differs from the prediction top [{}], bottom {b:?}:\n{}",
            ak + 1,
            state.render()
        )));
    }
    if !moves.iter().any(|m| m.after.rk1_total() > m.before.rk1_total()) {
        return Err(Error::invariant("no move strictly raised the r_(k+1) total"));
    }
    let lhs = binomial(ak + 1, k + 1) + r_sum(k + 1, &b);
    let rhs = r_sum(k + 1, c) + r_sum(k + 1, a);
    if lhs <= rhs {
        return Err(Error::invariant(format!("final inequality fails: {lhs} <= {rhs}")));
    }
    Ok(BoardRun {
        k,
        a: a.to_vec(),
        c: c.to_vec(),
        b,
        moves,
        final_state: state,
        step_bound: target,
        lhs,
        rhs,
    })
}
