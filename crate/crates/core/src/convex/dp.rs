//! Quadratic dynamic program for optimum fixed-endpoint alternating
//! paths on convex sequences.
//!
//! Indices are rotated so the start endpoint sits at 0; every explored
//! arc [i..j] then lives in 1..h-1 and contains the target t. Cross1
//! entries hold the optimum from p_i to p_t on S[i..j], Cross2 from
//! p_j to p_t. Each entry decomposes clockwise through the first
//! balance point J(i) or counterclockwise through the suffix balance
//! point (the J1 map, anchored at j for the color of p_i).

use super::arc_path;
use crate::error::{Error, Result};
use crate::geom::Color;
use crate::route::{AltRoute, RouteKind};
use crate::set::BicoloredSet;

const INF: u32 = u32::MAX / 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Par {
    Infeasible,
    Trivial,
    ArcEnds,
    Consecutive,
    Clockwise,
    Counterclockwise,
    Special,
}

/// Interval tables plus the index maps they are built from.
pub struct DpTables {
    h: usize,
    t: usize,
    col: Vec<Color>,
    prefix: Vec<i64>,
    red_starts: Vec<u32>,
    blue_starts: Vec<u32>,
    /// Smallest j >= i with [i..j] balanced.
    j_cw: Vec<usize>,
    /// Largest x <= j with [x..j] balanced.
    j_ccw_bal: Vec<usize>,
    /// Largest x <= j with {red point} ∪ [x..j] balanced.
    j_ccw_red: Vec<usize>,
    j_ccw_blue: Vec<usize>,
    /// Smallest y >= i with {red point} ∪ [i..y] balanced.
    j_cw_red: Vec<usize>,
    j_cw_blue: Vec<usize>,
    cross1: Vec<u32>,
    cross2: Vec<u32>,
    par1: Vec<Par>,
    par2: Vec<Par>,
    cols_per_row: usize,
}

const NONE: usize = usize::MAX;

impl DpTables {
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i <= self.t && self.t <= j && j < self.h);
        i * self.cols_per_row + (j - self.t)
    }

    fn balance(&self, a: usize, b: usize) -> i64 {
        self.prefix[b + 1] - self.prefix[a]
    }

    fn reds(&self, a: usize, b: usize) -> u32 {
        (((b - a + 1) as i64 + self.balance(a, b)) / 2) as u32
    }

    fn blues(&self, a: usize, b: usize) -> u32 {
        (b - a + 1) as u32 - self.reds(a, b)
    }

    fn red_runs(&self, a: usize, b: usize) -> u32 {
        self.red_starts[b + 1] - self.red_starts[a + 1] + u32::from(self.col[a] == Color::Red)
    }

    fn blue_runs(&self, a: usize, b: usize) -> u32 {
        self.blue_starts[b + 1] - self.blue_starts[a + 1] + u32::from(self.col[a] == Color::Blue)
    }

    /// Optimum value for a path between the two ends of the arc [a..b]
    /// (the ends are adjacent on the sub-circle).
    fn arc_value(&self, a: usize, b: usize) -> u32 {
        let (ca, cb) = (self.col[a], self.col[b]);
        if ca != cb {
            if self.balance(a, b) != 0 {
                return INF;
            }
            return self.reds(a, b) - self.red_runs(a, b);
        }
        let want = if ca == Color::Red { 1 } else { -1 };
        if self.balance(a, b) != want {
            return INF;
        }
        if ca == Color::Red {
            self.blues(a, b) - self.blue_runs(a, b)
        } else {
            self.reds(a, b) - self.red_runs(a, b)
        }
    }

    /// Closed form for an arc [a..b] whose sub-circle closes through a
    /// wrap edge joining p_b back to p_a: the endpoint pair lies
    /// inside, so runs must be counted circularly.
    fn consecutive_value(&self, a: usize, b: usize, e1: usize, e2: usize) -> u32 {
        let (c1, c2) = (self.col[e1], self.col[e2]);
        let wrap_merge = |color: Color| -> u32 {
            u32::from(self.col[a] == color && self.col[b] == color && a != b)
        };
        if c1 != c2 {
            if self.balance(a, b) != 0 {
                return INF;
            }
            self.reds(a, b) - (self.red_runs(a, b) - wrap_merge(Color::Red))
        } else if c1 == Color::Red {
            if self.balance(a, b) != 1 {
                return INF;
            }
            self.blues(a, b) - (self.blue_runs(a, b) - wrap_merge(Color::Blue))
        } else {
            if self.balance(a, b) != -1 {
                return INF;
            }
            self.reds(a, b) - (self.red_runs(a, b) - wrap_merge(Color::Red))
        }
    }

    /// Special-configuration optimum on the sub-circle [a..b].
    fn special_value(&self, a: usize, b: usize) -> u32 {
        let circ_merge = u32::from(self.col[a] == Color::Red && self.col[b] == Color::Red);
        self.reds(a, b) - (self.red_runs(a, b) - circ_merge)
    }

    /// Value of the prefix path of the counterclockwise decomposition
    /// of Cross1[i,j]: optimum from p_i to p_x on {p_i} ∪ [x..j].
    fn cross_prime(&self, i: usize, x: usize, j: usize) -> u32 {
        let ci = self.col[i];
        let reds = self.reds(x, j) + u32::from(ci == Color::Red);
        let mut red_runs = self.red_runs(x, j);
        if ci == Color::Red && self.col[j] != Color::Red {
            red_runs += 1;
        }
        reds - red_runs
    }

    /// Mirror prefix value for Cross2[i,j]: optimum from p_j to p_x on
    /// {p_j} ∪ [i..x].
    fn cross_second(&self, i: usize, x: usize, j: usize) -> u32 {
        let cj = self.col[j];
        let reds = self.reds(i, x) + u32::from(cj == Color::Red);
        let mut red_runs = self.red_runs(i, x);
        if cj == Color::Red && self.col[i] != Color::Red {
            red_runs += 1;
        }
        reds - red_runs
    }

    fn feasible1(&self, i: usize, j: usize) -> bool {
        shape_ok(self.col[i], self.col[self.t], self.balance(i, j))
    }

    fn feasible2(&self, i: usize, j: usize) -> bool {
        shape_ok(self.col[j], self.col[self.t], self.balance(i, j))
    }
}

fn shape_ok(ca: Color, cb: Color, bal: i64) -> bool {
    if ca != cb {
        bal == 0
    } else if ca == Color::Red {
        bal == 1
    } else {
        bal == -1
    }
}

fn build_tables(set: &BicoloredSet, s: usize, t_orig: usize) -> DpTables {
    let h = set.len();
    let rot = |x: usize| (x + h - s) % h;
    let t = rot(t_orig);
    let col: Vec<Color> = (0..h).map(|k| set.color((s + k) % h)).collect();

    let mut prefix = vec![0i64; h + 1];
    let mut red_starts = vec![0u32; h + 1];
    let mut blue_starts = vec![0u32; h + 1];
    for k in 0..h {
        prefix[k + 1] = prefix[k] + if col[k] == Color::Red { 1 } else { -1 };
        let red_start = col[k] == Color::Red && (k == 0 || col[k - 1] != Color::Red);
        let blue_start = col[k] == Color::Blue && (k == 0 || col[k - 1] != Color::Blue);
        red_starts[k + 1] = red_starts[k] + u32::from(red_start);
        blue_starts[k + 1] = blue_starts[k] + u32::from(blue_start);
    }

    let off = h as i64;
    let width = 2 * h + 1;

    // j_cw[i]: smallest j >= i with prefix[j+1] == prefix[i].
    let mut j_cw = vec![NONE; h];
    let mut first_pos = vec![NONE; width];
    for i in (0..h).rev() {
        first_pos[(prefix[i + 1] + off) as usize] = i;
        j_cw[i] = first_pos[(prefix[i] + off) as usize];
    }

    // Backward maps: largest x <= j with prefix[x] == prefix[j+1] + d.
    let mut j_ccw_bal = vec![NONE; h];
    let mut j_ccw_red = vec![NONE; h];
    let mut j_ccw_blue = vec![NONE; h];
    let mut last_pos = vec![NONE; width];
    for j in 0..h {
        last_pos[(prefix[j] + off) as usize] = j;
        let base = prefix[j + 1] + off;
        j_ccw_bal[j] = last_pos[base as usize];
        // {red p_i} ∪ [x..j] balanced: balance(x..j) = -1.
        if base + 1 < width as i64 {
            j_ccw_red[j] = last_pos[(base + 1) as usize];
        }
        if base > 0 {
            j_ccw_blue[j] = last_pos[(base - 1) as usize];
        }
    }

    // Forward maps: smallest y >= i with balance(i..y) = ±1.
    let mut j_cw_red = vec![NONE; h];
    let mut j_cw_blue = vec![NONE; h];
    let mut first_pos2 = vec![NONE; width];
    for i in (0..h).rev() {
        first_pos2[(prefix[i + 1] + off) as usize] = i;
        let base = prefix[i] + off;
        // {red p_j} ∪ [i..y] balanced: balance(i..y) = -1.
        if base > 0 {
            j_cw_red[i] = first_pos2[(base - 1) as usize];
        }
        if base + 1 < width as i64 {
            j_cw_blue[i] = first_pos2[(base + 1) as usize];
        }
    }

    let cols_per_row = h - t;
    let cells = (t + 1) * cols_per_row;
    let mut tables = DpTables {
        h,
        t,
        col,
        prefix,
        red_starts,
        blue_starts,
        j_cw,
        j_ccw_bal,
        j_ccw_red,
        j_ccw_blue,
        j_cw_red,
        j_cw_blue,
        cross1: vec![INF; cells],
        cross2: vec![INF; cells],
        par1: vec![Par::Infeasible; cells],
        par2: vec![Par::Infeasible; cells],
        cols_per_row,
    };
    fill(&mut tables);
    tables
}

fn fill(tb: &mut DpTables) {
    let (h, t) = (tb.h, tb.t);
    // Increasing arc length; every referenced sub-arc is strictly
    // shorter.
    for len in 1..h {
        for i in (1.max(t + 1 - len.min(t + 1))..=t).rev() {
            let j = i + len - 1;
            if j < t || j >= h {
                continue;
            }
            let cell = tb.idx(i, j);
            let (v1, p1) = solve1(tb, i, j);
            tb.cross1[cell] = v1;
            tb.par1[cell] = p1;
            let (v2, p2) = solve2(tb, i, j);
            tb.cross2[cell] = v2;
            tb.par2[cell] = p2;
        }
    }
}

fn solve1(tb: &DpTables, i: usize, j: usize) -> (u32, Par) {
    let t = tb.t;
    if i == t {
        return if j == t {
            (0, Par::Trivial)
        } else {
            (INF, Par::Infeasible)
        };
    }
    if !tb.feasible1(i, j) {
        return (INF, Par::Infeasible);
    }
    if t == j {
        return (tb.arc_value(i, j), Par::ArcEnds);
    }
    if t == i + 1 {
        return (tb.consecutive_value(i, j, i, t), Par::Consecutive);
    }
    let mut best = (INF, Par::Infeasible);
    let jc = tb.j_cw[i];
    if jc != NONE && jc < t {
        let v = tb.arc_value(i, jc).saturating_add(tb.cross1[tb.idx(jc, j)]);
        if v < best.0 {
            best = (v, Par::Clockwise);
        }
    }
    let x = match tb.col[i] {
        Color::Red => tb.j_ccw_red[j],
        Color::Blue => tb.j_ccw_blue[j],
    };
    if x != NONE && x > t && x <= j {
        let v = tb
            .cross_prime(i, x, j)
            .saturating_add(tb.cross2[tb.idx(i + 1, x)]);
        if v < best.0 {
            best = (v, Par::Counterclockwise);
        }
    }
    if best.0 >= INF && tb.col[i] != tb.col[t] {
        // Feasible, non-adjacent, but neither decomposition applies:
        // the sub-configuration is special.
        return (tb.special_value(i, j), Par::Special);
    }
    best
}

fn solve2(tb: &DpTables, i: usize, j: usize) -> (u32, Par) {
    let t = tb.t;
    if j == t {
        return if i == t {
            (0, Par::Trivial)
        } else {
            (INF, Par::Infeasible)
        };
    }
    if !tb.feasible2(i, j) {
        return (INF, Par::Infeasible);
    }
    if t == i {
        return (tb.arc_value(i, j), Par::ArcEnds);
    }
    if t == j - 1 {
        return (tb.consecutive_value(i, j, j, t), Par::Consecutive);
    }
    let mut best = (INF, Par::Infeasible);
    let xb = tb.j_ccw_bal[j];
    if xb != NONE && xb > t {
        let v = tb.arc_value(xb, j).saturating_add(tb.cross2[tb.idx(i, xb)]);
        if v < best.0 {
            best = (v, Par::Clockwise);
        }
    }
    let y = match tb.col[j] {
        Color::Red => tb.j_cw_red[i],
        Color::Blue => tb.j_cw_blue[i],
    };
    if y != NONE && y >= i && y < t {
        let v = tb
            .cross_second(i, y, j)
            .saturating_add(tb.cross1[tb.idx(y, j - 1)]);
        if v < best.0 {
            best = (v, Par::Counterclockwise);
        }
    }
    if best.0 >= INF && tb.col[j] != tb.col[t] {
        return (tb.special_value(i, j), Par::Special);
    }
    best
}

/// Path between the two ends of a sub-circle arc given as explicit
/// rotated positions (in sub-circle boundary order).
fn span_path(tb: &DpTables, span: &[usize]) -> Result<Vec<usize>> {
    let colors: Vec<Color> = span.iter().map(|&p| tb.col[p]).collect();
    Ok(arc_path(&colors)?.into_iter().map(|p| span[p]).collect())
}

/// Special-configuration path on the sub-circle [a..b] from the red
/// end r to the blue end b (both in {a-end colors}); positions are the
/// rotated circle indices restricted to [a..b].
fn special_span_path(tb: &DpTables, a: usize, b: usize, r: usize, bl: usize) -> Result<Vec<usize>> {
    let k = b - a + 1;
    let local = |x: usize| x - a;
    let global = |x: usize| x + a;
    let next = |x: usize| (x + 1) % k;
    let prev = |x: usize| (x + k - 1) % k;
    let span_local = |from: usize, to: usize| -> Vec<usize> {
        let mut v = Vec::new();
        let mut x = from;
        loop {
            v.push(global(x));
            if x == to {
                break;
            }
            x = next(x);
        }
        v
    };
    let (lr, lb) = (local(r), local(bl));
    let mut verts = vec![r];
    verts.extend(span_path(tb, &span_local(next(lb), prev(lr)))?);
    let mut p1 = span_path(tb, &span_local(next(lr), prev(lb)))?;
    p1.reverse();
    verts.extend(p1);
    verts.push(bl);
    Ok(verts)
}

fn rebuild1(tb: &DpTables, i: usize, j: usize, out_err: &mut Option<Error>) -> Vec<usize> {
    let t = tb.t;
    let join = |mut a: Vec<usize>, b: Vec<usize>| -> Vec<usize> {
        debug_assert_eq!(a.last(), b.first());
        a.extend(b.into_iter().skip(1));
        a
    };
    let fail = |out_err: &mut Option<Error>, e: Error| -> Vec<usize> {
        out_err.get_or_insert(e);
        Vec::new()
    };
    match tb.par1[tb.idx(i, j)] {
        Par::Infeasible => fail(
            out_err,
            Error::Internal("reconstruction reached an infeasible cell".into()),
        ),
        Par::Trivial => vec![t],
        Par::ArcEnds => {
            let span: Vec<usize> = (i..=j).collect();
            span_path(tb, &span).unwrap_or_else(|e| fail(out_err, e))
        }
        Par::Consecutive => {
            // From p_i to p_t = p_{i+1}: cut the sub-circle edge
            // (i, i+1) and reverse the resulting arc path.
            let mut span: Vec<usize> = (i + 1..=j).collect();
            span.push(i);
            let mut p = span_path(tb, &span).unwrap_or_else(|e| fail(out_err, e));
            p.reverse();
            p
        }
        Par::Special => {
            let (r, bl) = if tb.col[i] == Color::Red {
                (i, t)
            } else {
                (t, i)
            };
            let mut p = special_span_path(tb, i, j, r, bl).unwrap_or_else(|e| fail(out_err, e));
            if p.first() != Some(&i) {
                p.reverse();
            }
            p
        }
        Par::Clockwise => {
            let jc = tb.j_cw[i];
            let span: Vec<usize> = (i..=jc).collect();
            let head = span_path(tb, &span).unwrap_or_else(|e| fail(out_err, e));
            join(head, rebuild1(tb, jc, j, out_err))
        }
        Par::Counterclockwise => {
            let x = match tb.col[i] {
                Color::Red => tb.j_ccw_red[j],
                Color::Blue => tb.j_ccw_blue[j],
            };
            // {p_i} ∪ [x..j]: the sub-circle runs x..j then wraps to
            // p_i; cutting the (i, x) adjacency leaves this span.
            let mut span: Vec<usize> = (x..=j).collect();
            span.push(i);
            let mut head = span_path(tb, &span).unwrap_or_else(|e| fail(out_err, e));
            head.reverse();
            join(head, rebuild2(tb, i + 1, x, out_err))
        }
    }
}

fn rebuild2(tb: &DpTables, i: usize, j: usize, out_err: &mut Option<Error>) -> Vec<usize> {
    let t = tb.t;
    let join = |mut a: Vec<usize>, b: Vec<usize>| -> Vec<usize> {
        debug_assert_eq!(a.last(), b.first());
        a.extend(b.into_iter().skip(1));
        a
    };
    let fail = |out_err: &mut Option<Error>, e: Error| -> Vec<usize> {
        out_err.get_or_insert(e);
        Vec::new()
    };
    match tb.par2[tb.idx(i, j)] {
        Par::Infeasible => fail(
            out_err,
            Error::Internal("reconstruction reached an infeasible cell".into()),
        ),
        Par::Trivial => vec![t],
        Par::ArcEnds => {
            let span: Vec<usize> = (i..=j).collect();
            let mut p = span_path(tb, &span).unwrap_or_else(|e| fail(out_err, e));
            p.reverse();
            p
        }
        Par::Consecutive => {
            // From p_j to p_t = p_{j-1}: cut the (j-1, j) edge.
            let mut span: Vec<usize> = vec![j];
            span.extend(i..=j - 1);
            span_path(tb, &span).unwrap_or_else(|e| fail(out_err, e))
        }
        Par::Special => {
            let (r, bl) = if tb.col[j] == Color::Red {
                (j, t)
            } else {
                (t, j)
            };
            let mut p = special_span_path(tb, i, j, r, bl).unwrap_or_else(|e| fail(out_err, e));
            if p.first() != Some(&j) {
                p.reverse();
            }
            p
        }
        Par::Clockwise => {
            let xb = tb.j_ccw_bal[j];
            let span: Vec<usize> = (xb..=j).collect();
            let mut head = span_path(tb, &span).unwrap_or_else(|e| fail(out_err, e));
            head.reverse();
            join(head, rebuild2(tb, i, xb, out_err))
        }
        Par::Counterclockwise => {
            let y = match tb.col[j] {
                Color::Red => tb.j_cw_red[i],
                Color::Blue => tb.j_cw_blue[i],
            };
            // {p_j} ∪ [i..y]: cut the (y, j) adjacency.
            let mut span: Vec<usize> = vec![j];
            span.extend(i..=y);
            let head = span_path(tb, &span).unwrap_or_else(|e| fail(out_err, e));
            join(head, rebuild1(tb, y, j - 1, out_err))
        }
    }
}

/// Optimum path from p_s to p_t for non-consecutive, non-special
/// endpoint pairs (validated by the dispatcher).
pub(super) fn optimum_path_dp(set: &BicoloredSet, s: usize, t: usize) -> Result<AltRoute> {
    let tb = build_tables(set, s, t);
    let h = tb.h;
    let t_r = tb.t;

    // Top-level decomposition on the full circle (arc [0..h-1]).
    let mut best: (u32, Par) = (INF, Par::Infeasible);
    let jc = tb.j_cw[0];
    if jc != NONE && jc < t_r {
        let v = tb
            .arc_value(0, jc)
            .saturating_add(tb.cross1[tb.idx(jc, h - 1)]);
        if v < best.0 {
            best = (v, Par::Clockwise);
        }
    }
    let x = match tb.col[0] {
        Color::Red => tb.j_ccw_red[h - 1],
        Color::Blue => tb.j_ccw_blue[h - 1],
    };
    if x != NONE && x > t_r {
        let v = tb
            .cross_prime(0, x, h - 1)
            .saturating_add(tb.cross2[tb.idx(1, x)]);
        if v < best.0 {
            best = (v, Par::Counterclockwise);
        }
    }
    if best.0 >= INF {
        return Err(Error::Internal(
            "no decomposition found for a non-special instance".into(),
        ));
    }

    let mut err = None;
    let rotated = match best.1 {
        Par::Clockwise => {
            let span: Vec<usize> = (0..=jc).collect();
            let head = span_path(&tb, &span)?;
            let tail = rebuild1(&tb, jc, h - 1, &mut err);
            let mut v = head;
            v.extend(tail.into_iter().skip(1));
            v
        }
        _ => {
            let mut span: Vec<usize> = (x..=h - 1).collect();
            span.push(0);
            let mut head = span_path(&tb, &span)?;
            head.reverse();
            let tail = rebuild2(&tb, 1, x, &mut err);
            head.extend(tail.into_iter().skip(1));
            head
        }
    };
    if let Some(e) = err {
        return Err(e);
    }
    let verts: Vec<usize> = rotated.into_iter().map(|p| (p + s) % h).collect();
    let route = AltRoute::analyzed(set, RouteKind::Path, verts);
    if route.crossing_count() != best.0 as usize {
        return Err(Error::Internal(format!(
            "reconstructed path has {} crossings, table claims {}",
            route.crossing_count(),
            best.0
        )));
    }
    Ok(route)
}
