//! Maximal numbers of NE-turns for single paths and non-intersecting
//! families under side constraints.
//!
//! A path "stays weakly south-east" of an S-point `s` if none of its points
//! has `x < s.x` and `y > s.y`; it stays weakly north-west of a T-point `t`
//! if none of its points has `x > t.x` and `y < t.y`. Both conditions only
//! look at the point where the path crosses the antidiagonal through the
//! constraint point, which is what the slalom scan exploits.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::{LatticePath, Minor, Step};
use crate::region::Point;

/// Closed-form maximum for a single path from `from` to `to` staying weakly
/// south-east of every point in `se`:
/// `to.x - from.y - max(x - y)` over `se ∪ {from, to}`.
pub fn single_path_max(from: Point, to: Point, se: &[Point]) -> Result<i64> {
    if to.x < from.x || to.y < from.y {
        return Err(Error::Infeasible { from, to });
    }
    for &s in se {
        if s.x < from.x || s.x > to.x || s.y < from.y || s.y > to.y {
            return Err(Error::OutOfBounds { point: s, from, to });
        }
    }
    let worst = se
        .iter()
        .chain([&from, &to])
        .map(|p| p.offset())
        .max()
        .unwrap();
    Ok(to.x - from.y - worst)
}

/// S-points that path `i` of a family must pass weakly south-east of when
/// the family lives in an upper ladder with inwards corners `upper`: the
/// start and end points of paths `1..=i`, pushed diagonally by their distance
/// to `i`, and the corners pushed by `(i-1, -(i-1))`.
pub fn one_sided_constraints(
    i: usize,
    minor: &Minor,
    max_y: i64,
    max_x: i64,
    upper: &[Point],
) -> Vec<Point> {
    let mut out = Vec::new();
    endpoint_constraints(i, i, minor, max_y, max_x, &mut out);
    let shift = i as i64 - 1;
    out.extend(upper.iter().map(|c| c.shifted(shift, -shift)));
    dedup_in_order(out)
}

/// S- and T-point sets for path `i` of a family in a two-sided ladder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateConstraints {
    pub se: Vec<Point>,
    pub nw: Vec<Point>,
}

/// Constraint sets for path `i` in a two-sided ladder: S-points from the
/// paths above (`j < i`) and the upper corners shifted by `(i-1, -(i-1))`;
/// T-points are the lower corners shifted by `(-(n-i), n-i)`.
pub fn two_sided_constraints(
    i: usize,
    minor: &Minor,
    max_y: i64,
    max_x: i64,
    upper: &[Point],
    lower: &[Point],
) -> GateConstraints {
    let n = minor.n() as i64;
    let mut se = Vec::new();
    endpoint_constraints(i, i - 1, minor, max_y, max_x, &mut se);
    let up = i as i64 - 1;
    se.extend(upper.iter().map(|c| c.shifted(up, -up)));
    let down = n - i as i64;
    let nw = lower.iter().map(|d| d.shifted(-down, down)).collect();
    GateConstraints {
        se: dedup_in_order(se),
        nw: dedup_in_order(nw),
    }
}

fn endpoint_constraints(
    i: usize,
    upto: usize,
    minor: &Minor,
    max_y: i64,
    max_x: i64,
    out: &mut Vec<Point>,
) {
    let i = i as i64;
    for j in 1..=upto {
        let gap = i - j as i64;
        out.push(Point::new(gap, minor.start_height(j) - gap));
    }
    for j in 1..=upto {
        let gap = i - j as i64;
        out.push(Point::new(max_x - minor.end_offset(j) + gap, max_y - gap));
    }
}

fn dedup_in_order(points: Vec<Point>) -> Vec<Point> {
    let mut seen = HashSet::new();
    points.into_iter().filter(|p| seen.insert(*p)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GateLabel {
    /// The start point of the run.
    Start,
    /// Must be passed on the right (path weakly south-east of it).
    S,
    /// Must be passed on the left (path weakly north-west of it).
    T,
    /// The end point, which acts as both kinds of gate.
    Both,
}

impl GateLabel {
    fn acts_as_s(self) -> bool {
        matches!(self, GateLabel::S | GateLabel::Both)
    }

    fn acts_as_t(self) -> bool {
        matches!(self, GateLabel::T | GateLabel::Both)
    }
}

/// A constraint point in antidiagonal coordinates `(x + y, x - y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GatePoint {
    pub level: i64,
    pub offset: i64,
    pub label: GateLabel,
}

impl GatePoint {
    pub fn new(p: Point, label: GateLabel) -> Self {
        GatePoint {
            level: p.level(),
            offset: p.offset(),
            label,
        }
    }

    pub fn point(self) -> Point {
        debug_assert_eq!((self.level + self.offset).rem_euclid(2), 0);
        Point::new((self.level + self.offset) / 2, (self.level - self.offset) / 2)
    }
}

impl fmt::Display for GatePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.offset)?;
        match self.label {
            GateLabel::Start => Ok(()),
            GateLabel::S => f.write_str("_S"),
            GateLabel::T => f.write_str("_T"),
            GateLabel::Both => f.write_str("_ST"),
        }
    }
}

/// Outcome of a slalom run: the ordered gates, the relevant gates kept by
/// the scan (start and end included) and the resulting maximum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlalomTrace {
    pub ordered: Vec<GatePoint>,
    pub relevant: Vec<GatePoint>,
    pub max_turns: i64,
}

impl SlalomTrace {
    /// The relevant gates strictly between start and end, in plane coordinates.
    pub fn interior_gates(&self) -> Vec<Point> {
        let k = self.relevant.len();
        self.relevant[1..k - 1].iter().map(|g| g.point()).collect()
    }
}

/// Ordering of gates on a common antidiagonal: T before S, S by decreasing
/// offset, T by increasing offset.
fn gate_order(g: &GatePoint) -> (i64, u8, i64) {
    match g.label {
        GateLabel::T => (g.level, 0, g.offset),
        _ => (g.level, 1, -g.offset),
    }
}

/// Maximal number of NE-turns of a path from `from` to `to` passing weakly
/// south-east of all `se` points and weakly north-west of all `nw` points,
/// turns on `nw` points not counted.
///
/// Constraint points outside the rectangle spanned by `from` and `to` are
/// dropped when no path inside the rectangle can violate them and make the
/// instance infeasible otherwise.
pub fn slalom(from: Point, to: Point, se: &[Point], nw: &[Point]) -> Result<SlalomTrace> {
    if to.x < from.x || to.y < from.y {
        return Err(Error::Infeasible { from, to });
    }
    let inside = |p: &Point| from.x <= p.x && p.x <= to.x && from.y <= p.y && p.y <= to.y;
    let mut gates = Vec::with_capacity(se.len() + nw.len());
    for &s in se {
        if inside(&s) {
            gates.push(GatePoint::new(s, GateLabel::S));
        } else if s.x > from.x && s.y < to.y {
            return Err(Error::Infeasible { from, to });
        }
    }
    for &t in nw {
        if inside(&t) {
            gates.push(GatePoint::new(t, GateLabel::T));
        } else if t.x < to.x && t.y > from.y {
            return Err(Error::Infeasible { from, to });
        }
    }
    if !feasible(from, to, se, nw) {
        return Err(Error::Infeasible { from, to });
    }
    gates.sort_by_key(gate_order);

    let start = GatePoint::new(from, GateLabel::Start);
    let end = GatePoint::new(to, GateLabel::Both);
    let relevant = scan_gates(start, &gates, end);
    let max_turns = turns_through(&relevant)?;

    let mut ordered = Vec::with_capacity(gates.len() + 2);
    ordered.push(start);
    ordered.extend(gates);
    ordered.push(end);
    Ok(SlalomTrace {
        ordered,
        relevant,
        max_turns,
    })
}

/// Whether some path from `from` to `to` satisfies all side constraints:
/// the columns reachable on each antidiagonal form an interval.
fn feasible(from: Point, to: Point, se: &[Point], nw: &[Point]) -> bool {
    let window = |level: i64| {
        let mut lo = from.x.max(level - to.y);
        let mut hi = to.x.min(level - from.y);
        for s in se {
            lo = lo.max(s.x.min(level - s.y));
        }
        for t in nw {
            hi = hi.min(t.x.max(level - t.y));
        }
        (lo, hi)
    };
    let (mut lo, mut hi) = (from.x, from.x);
    for level in from.level()..=to.level() {
        let (wlo, whi) = window(level);
        if level > from.level() {
            hi += 1;
        }
        lo = lo.max(wlo);
        hi = hi.min(whi);
        if lo > hi {
            return false;
        }
    }
    lo <= to.x && to.x <= hi
}

/// Keeps the gates that actually bend the path. An S-gate further right
/// than the last kept S-gate replaces it; a T-gate further left than the last
/// kept S-gate is appended, and symmetrically after a T-gate.
pub fn scan_gates(start: GatePoint, gates: &[GatePoint], end: GatePoint) -> Vec<GatePoint> {
    let mut kept = vec![start];
    for &g in gates.iter().chain(std::iter::once(&end)) {
        let last = *kept.last().unwrap();
        let right_of = g.label.acts_as_s() && g.offset > last.offset;
        let left_of = g.label.acts_as_t() && g.offset < last.offset;
        match last.label {
            GateLabel::S if right_of => *kept.last_mut().unwrap() = g,
            GateLabel::T if left_of => *kept.last_mut().unwrap() = g,
            _ if right_of || left_of => kept.push(g),
            _ => {}
        }
        if g.label == GateLabel::Both {
            if !(right_of || left_of) {
                // end on the same offset as the last gate: still close the run
                kept.push(g);
            }
            break;
        }
    }
    kept
}

/// Half the sum of `min(Δ(level + offset), Δ(level - offset))` over
/// consecutive kept gates, i.e. the sum of `min(Δx, Δy)`.
pub fn turns_through(kept: &[GatePoint]) -> Result<i64> {
    let mut total = 0;
    for w in kept.windows(2) {
        let (v, u) = (w[0], w[1]);
        let diag = (u.level + u.offset) - (v.level + v.offset);
        let anti = (u.level - u.offset) - (v.level - v.offset);
        let (p, q) = (v.point(), u.point());
        debug_assert_eq!(diag.min(anti), 2 * (q.x - p.x).min(q.y - p.y));
        let term = diag.min(anti);
        if term < 0 {
            return Err(Error::Infeasible { from: p, to: q });
        }
        total += term / 2;
    }
    Ok(total)
}

/// Per-path maxima of a one-sided family and their sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMax {
    pub t: Vec<i64>,
    pub total: i64,
}

/// Closed-form maxima for a family of non-intersecting paths in an upper
/// ladder whose inwards corners are `upper`.
pub fn one_sided_family_max(minor: &Minor, max_y: i64, max_x: i64, upper: &[Point]) -> FamilyMax {
    let n = minor.n();
    let t: Vec<i64> = (1..=n)
        .map(|i| {
            let ii = i as i64;
            let from_paths = (1..=i).flat_map(|j| {
                let bend = 2 * (ii - j as i64);
                [
                    -minor.start_height(j) + bend,
                    max_x - max_y - minor.end_offset(j) + bend,
                ]
            });
            let from_corners = upper.iter().map(|c| c.offset() + 2 * (ii - 1));
            let worst = from_paths.chain(from_corners).max().unwrap();
            max_x - minor.start_height(i) - minor.end_offset(i) - worst
        })
        .collect();
    let total = t.iter().sum();
    FamilyMax { t, total }
}

/// Per-path slalom results of a two-sided family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoSidedMax {
    pub t: Vec<i64>,
    pub traces: Vec<SlalomTrace>,
    pub constraints: Vec<GateConstraints>,
    pub total: i64,
}

/// Runs the slalom scan for every path of the family with the two-sided
/// constraint sets.
pub fn two_sided_family_max(
    minor: &Minor,
    max_y: i64,
    max_x: i64,
    upper: &[Point],
    lower: &[Point],
) -> Result<TwoSidedMax> {
    let n = minor.n();
    let mut t = Vec::with_capacity(n);
    let mut traces = Vec::with_capacity(n);
    let mut constraints = Vec::with_capacity(n);
    for i in 1..=n {
        let gates = two_sided_constraints(i, minor, max_y, max_x, upper, lower);
        let trace = slalom(
            minor.start(i, max_y, max_x),
            minor.end(i, max_y, max_x),
            &gates.se,
            &gates.nw,
        )?;
        t.push(trace.max_turns);
        traces.push(trace);
        constraints.push(gates);
    }
    let total = t.iter().sum();
    Ok(TwoSidedMax {
        t,
        traces,
        constraints,
        total,
    })
}

/// A path from `from` to `to` satisfying every side constraint with the
/// largest number of counted NE-turns (turns on `excluded` not counted),
/// together with that number. Among optimal paths the one choosing North
/// earliest is returned.
pub fn witness_path(
    from: Point,
    to: Point,
    se: &[Point],
    nw: &[Point],
    excluded: &[Point],
) -> Result<(LatticePath, i64)> {
    if to.x < from.x || to.y < from.y {
        return Err(Error::Infeasible { from, to });
    }
    let width = (to.x - from.x + 1) as usize;
    let height = (to.y - from.y + 1) as usize;
    let idx = |p: Point| (p.y - from.y) as usize * width + (p.x - from.x) as usize;
    let allowed: Vec<bool> = (0..width * height)
        .map(|k| {
            let p = Point::new(from.x + (k % width) as i64, from.y + (k / width) as i64);
            se.iter().all(|s| p.x >= s.x || p.y <= s.y) && nw.iter().all(|t| p.x <= t.x || p.y >= t.y)
        })
        .collect();
    let excluded: HashSet<Point> = excluded.iter().copied().collect();

    // best[k][north]: most counted turns from point k to `to`, having entered
    // k by a North step (`north = 1`) or otherwise.
    const NONE: i64 = i64::MIN;
    let mut best = vec![[NONE; 2]; width * height];
    for y in (from.y..=to.y).rev() {
        for x in (from.x..=to.x).rev() {
            let p = Point::new(x, y);
            let k = idx(p);
            if !allowed[k] {
                continue;
            }
            if p == to {
                best[k] = [0, 0];
                continue;
            }
            for north in 0..2 {
                let mut b = NONE;
                if y < to.y && best[idx(p.shifted(0, 1))][1] != NONE {
                    b = b.max(best[idx(p.shifted(0, 1))][1]);
                }
                if x < to.x && best[idx(p.shifted(1, 0))][0] != NONE {
                    let turn = (north == 1 && !excluded.contains(&p)) as i64;
                    b = b.max(best[idx(p.shifted(1, 0))][0] + turn);
                }
                best[k][north] = b;
            }
        }
    }
    let value = best[idx(from)][0];
    if value == NONE {
        return Err(Error::Infeasible { from, to });
    }

    let mut steps = Vec::new();
    let (mut p, mut north) = (from, 0usize);
    while p != to {
        let want = best[idx(p)][north];
        let up = p.shifted(0, 1);
        if p.y < to.y && best[idx(up)][1] == want {
            steps.push(Step::North);
            p = up;
            north = 1;
        } else {
            steps.push(Step::East);
            p = p.shifted(1, 0);
            north = 0;
        }
    }
    Ok((LatticePath::new(from, steps), value))
}

/// A non-intersecting family realising the two-sided maxima (with no lower
/// corners this is the one-sided problem). Paths are built top-left first;
/// each path keeps strictly south-east of the previous one and, among its
/// optimal choices, stays as far north-west as the construction allows.
pub fn witness_family(
    minor: &Minor,
    max_y: i64,
    max_x: i64,
    upper: &[Point],
    lower: &[Point],
) -> Result<Vec<LatticePath>> {
    let maxima = two_sided_family_max(minor, max_y, max_x, upper, lower)?;
    let mut family: Vec<LatticePath> = Vec::with_capacity(minor.n());
    for i in 1..=minor.n() {
        let gates = &maxima.constraints[i - 1];
        let mut se = gates.se.clone();
        if let Some(prev) = family.last() {
            se.extend(prev.points().map(|p| p.shifted(1, -1)));
        }
        let from = minor.start(i, max_y, max_x);
        let to = minor.end(i, max_y, max_x);
        let (path, value) = witness_path(from, to, &se, &gates.nw, &gates.nw)?;
        if value != maxima.t[i - 1] {
            return Err(Error::Infeasible { from, to });
        }
        family.push(path);
    }
    Ok(family)
}
