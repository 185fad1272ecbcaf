//! Monotone lattice paths, their NE-turns, and the cogenerating minor that
//! fixes the start and end points of a path family.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::region::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    East,
    North,
}

impl Step {
    fn delta(self) -> (i64, i64) {
        match self {
            Step::East => (1, 0),
            Step::North => (0, 1),
        }
    }
}

/// A path made of unit East and North steps. Each step raises the level
/// `x + y` by one, so the path meets every level between its ends once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticePath {
    start: Point,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    pub fn empty(start: Point) -> Self {
        Self::new(start, Vec::new())
    }

    /// Parses a step word over `E`/`N`.
    pub fn parse(start: Point, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::East),
                'N' | 'n' => Ok(Step::North),
                other => Err(Error::InvalidPath(format!("unknown step symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(start, steps))
    }

    /// Rebuilds a path from its consecutive points.
    pub fn from_points(points: &[Point]) -> Option<Self> {
        let start = *points.first()?;
        let steps = points
            .windows(2)
            .map(|w| match (w[1].x - w[0].x, w[1].y - w[0].y) {
                (1, 0) => Some(Step::East),
                (0, 1) => Some(Step::North),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(start, steps))
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn end(&self) -> Point {
        let east = self.steps.iter().filter(|&&s| s == Step::East).count() as i64;
        let north = self.steps.len() as i64 - east;
        self.start.shifted(east, north)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().scan(self.start, |p, s| {
            let (dx, dy) = s.delta();
            *p = p.shifted(dx, dy);
            Some(*p)
        }))
    }

    /// Points entered by a North step and left by an East step, in path order.
    pub fn ne_turns(&self) -> Vec<Point> {
        self.points()
            .skip(1)
            .zip(self.steps.windows(2))
            .filter(|(_, w)| w[0] == Step::North && w[1] == Step::East)
            .map(|(p, _)| p)
            .collect()
    }

    /// Every point has `x >= s.x` or `y <= s.y`.
    pub fn weakly_southeast_of(&self, s: Point) -> bool {
        self.points().all(|p| p.x >= s.x || p.y <= s.y)
    }

    /// Every point has `x <= t.x` or `y >= t.y`.
    pub fn weakly_northwest_of(&self, t: Point) -> bool {
        self.points().all(|p| p.x <= t.x || p.y >= t.y)
    }

    pub fn shares_point_with(&self, other: &LatticePath) -> bool {
        let mine: std::collections::HashSet<Point> = self.points().collect();
        other.points().any(|p| mine.contains(&p))
    }

    /// Number of NE-turns not lying in `excluded`.
    pub fn counted_turns(&self, excluded: &[Point]) -> usize {
        self.ne_turns().iter().filter(|p| !excluded.contains(p)).count()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.start)?;
        for s in &self.steps {
            f.write_str(match s {
                Step::East => "E",
                Step::North => "N",
            })?;
        }
        Ok(())
    }
}

/// Builds a path from `from` to `to` passing through `gates` in order. Each
/// segment is a straight piece followed by a zig-zag `(NE)^k` ending in an
/// East step, so a segment with displacement `(dx, dy)` carries
/// `min(dx, dy)` NE-turns.
///
/// Only the gates themselves are guaranteed to be visited; constraint points
/// that the gates dominate are not consulted here (see
/// [`crate::turns::witness_path`] for a witness honouring every constraint).
pub fn zigzag_witness(from: Point, to: Point, gates: &[Point]) -> Result<LatticePath> {
    let mut steps = Vec::new();
    let waypoints: Vec<Point> = std::iter::once(from)
        .chain(gates.iter().copied())
        .chain(std::iter::once(to))
        .collect();
    for w in waypoints.windows(2) {
        let (dx, dy) = (w[1].x - w[0].x, w[1].y - w[0].y);
        if dx < 0 || dy < 0 {
            return Err(Error::Infeasible { from: w[0], to: w[1] });
        }
        let k = dx.min(dy);
        let straight = if dx >= dy { Step::East } else { Step::North };
        steps.extend(std::iter::repeat_n(straight, (dx.max(dy) - k) as usize));
        for _ in 0..k {
            steps.push(Step::North);
            steps.push(Step::East);
        }
    }
    Ok(LatticePath::new(from, steps))
}

/// The cogenerating minor `[u_1 .. u_n | v_1 .. v_n]`.
///
/// Path `i` (1-based) of the associated family runs from
/// `(0, u_{n-i+1} - 1)` to `(B - v_{n-i+1} + 1, A)`; path 1 is the top-left one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Minor {
    u: Vec<i64>,
    v: Vec<i64>,
}

impl Minor {
    pub fn new(u: Vec<i64>, v: Vec<i64>) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::InvalidMinor("the minor must have at least one row".into()));
        }
        if u.len() != v.len() {
            return Err(Error::InvalidMinor(format!(
                "u and v must have equal length, got {} and {}",
                u.len(),
                v.len()
            )));
        }
        for (name, seq) in [("u", &u), ("v", &v)] {
            if seq.iter().any(|&x| x < 1) {
                return Err(Error::InvalidMinor(format!("{name} must contain positive integers")));
            }
            if seq.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidMinor(format!("{name} must be strictly increasing")));
            }
        }
        Ok(Minor { u, v })
    }

    /// Builds the minor from start heights `a_1 > .. > a_n` and end offsets
    /// `b_1 > .. > b_n`, where path `i` runs from `(0, a_i)` to `(B - b_i, A)`.
    pub fn from_offsets(start_heights: &[i64], end_offsets: &[i64]) -> Result<Self> {
        let u = start_heights.iter().rev().map(|a| a + 1).collect();
        let v = end_offsets.iter().rev().map(|b| b + 1).collect();
        Self::new(u, v)
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn u(&self) -> &[i64] {
        &self.u
    }

    pub fn v(&self) -> &[i64] {
        &self.v
    }

    /// `a_i = u_{n-i+1} - 1`, the height of the start of path `i`.
    pub fn start_height(&self, i: usize) -> i64 {
        self.u[self.n() - i] - 1
    }

    /// `b_i = v_{n-i+1} - 1`, so path `i` ends at `(B - b_i, A)`.
    pub fn end_offset(&self, i: usize) -> i64 {
        self.v[self.n() - i] - 1
    }

    pub fn start(&self, i: usize, _max_y: i64, _max_x: i64) -> Point {
        Point::new(0, self.start_height(i))
    }

    pub fn end(&self, i: usize, max_y: i64, max_x: i64) -> Point {
        Point::new(max_x - self.end_offset(i), max_y)
    }

    pub fn check_fits(&self, max_y: i64, max_x: i64) -> Result<()> {
        let un = *self.u.last().unwrap();
        let vn = *self.v.last().unwrap();
        if un > max_y + 1 {
            return Err(Error::AssumptionViolated(format!(
                "u_n = {un} exceeds A + 1 = {}; a start point leaves the grid",
                max_y + 1
            )));
        }
        if vn > max_x + 1 {
            return Err(Error::AssumptionViolated(format!(
                "v_n = {vn} exceeds B + 1 = {}; an end point leaves the grid",
                max_x + 1
            )));
        }
        Ok(())
    }

    /// `(A + B + 3) n - Σ (u_i + v_i)`.
    pub fn closed_form_dimension(&self, max_y: i64, max_x: i64) -> i64 {
        (max_y + max_x + 3) * self.n() as i64 - self.u.iter().sum::<i64>() - self.v.iter().sum::<i64>()
    }

    /// The minor of the transposed matrix.
    pub fn transpose(&self) -> Self {
        Minor {
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[i64]| s.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "[{}|{}]", join(&self.u), join(&self.v))
    }
}
