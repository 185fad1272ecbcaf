//! Exhaustive ground truth: path enumeration, the NE-turn generating
//! function of non-intersecting families, and brute-force single-path maxima.
//!
//! Nothing here uses the closed forms or the slalom scan; families are
//! swept antidiagonal by antidiagonal, so two paths intersect exactly when
//! they occupy the same column on a common level.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::hilbert::IntPolynomial;
use crate::paths::{LatticePath, Minor, Step};
use crate::region::{BoundaryData, LadderRegion, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Longest admissible path, in steps.
    pub step_budget: usize,
    /// Largest number of partial families kept on one antidiagonal.
    pub state_cap: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            step_budget: 26,
            state_cap: 2_000_000,
        }
    }
}

fn check_budget(start: Point, end: Point, limits: &OracleLimits) -> Result<()> {
    let steps = (end.x - start.x) + (end.y - start.y);
    if steps > limits.step_budget as i64 {
        return Err(Error::InstanceTooLarge(format!(
            "path from {start} to {end} has {steps} steps, budget is {}",
            limits.step_budget
        )));
    }
    Ok(())
}

/// Depth-first (East before North) enumeration of monotone paths from
/// `start` to `end` whose NE-turns all lie in `allowed_turns` (`None`: any).
pub fn enumerate_paths<'a>(
    start: Point,
    end: Point,
    allowed_turns: Option<&'a BTreeSet<Point>>,
    limits: &OracleLimits,
) -> Result<PathIter<'a>> {
    check_budget(start, end, limits)?;
    let stack = if end.x >= start.x && end.y >= start.y {
        vec![Frame {
            point: start,
            arrived_north: false,
            next: Branch::East,
        }]
    } else {
        Vec::new()
    };
    Ok(PathIter {
        start,
        end,
        allowed: allowed_turns,
        stack,
        steps: Vec::new(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branch {
    East,
    North,
    Done,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    point: Point,
    arrived_north: bool,
    next: Branch,
}

pub struct PathIter<'a> {
    start: Point,
    end: Point,
    allowed: Option<&'a BTreeSet<Point>>,
    stack: Vec<Frame>,
    steps: Vec<Step>,
}

impl Iterator for PathIter<'_> {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        loop {
            let end = self.end;
            let top = self.stack.last_mut()?;
            if top.point == end && top.next == Branch::East {
                top.next = Branch::Done;
                return Some(LatticePath::new(self.start, self.steps.clone()));
            }
            match top.next {
                Branch::East => {
                    top.next = Branch::North;
                    let p = top.point;
                    let turn_ok = !top.arrived_north || self.allowed.is_none_or(|a| a.contains(&p));
                    if p.x < end.x && turn_ok {
                        self.stack.push(Frame {
                            point: p.shifted(1, 0),
                            arrived_north: false,
                            next: Branch::East,
                        });
                        self.steps.push(Step::East);
                    }
                }
                Branch::North => {
                    top.next = Branch::Done;
                    let p = top.point;
                    if p.y < end.y {
                        self.stack.push(Frame {
                            point: p.shifted(0, 1),
                            arrived_north: true,
                            next: Branch::East,
                        });
                        self.steps.push(Step::North);
                    }
                }
                Branch::Done => {
                    self.stack.pop();
                    if !self.stack.is_empty() {
                        self.steps.pop();
                    }
                }
            }
        }
    }
}

/// Start and end points of each path, the points where each path may turn,
/// and whether the paths must be pairwise vertex-disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyConstraint {
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
    pub allowed_turns: Vec<BTreeSet<Point>>,
    pub disjoint: bool,
}

impl FamilyConstraint {
    /// The families counted by the Hilbert series numerator of the ladder
    /// determinantal ring: path `i` turns only inside its shrunken region
    /// and off its boundary.
    pub fn for_ladder(region: &LadderRegion, minor: &Minor) -> Result<(Self, BoundaryData)> {
        let data = BoundaryData::compute(region, minor)?;
        let (max_y, max_x) = (region.max_y(), region.max_x());
        let n = minor.n();
        let constraint = FamilyConstraint {
            starts: (1..=n).map(|i| minor.start(i, max_y, max_x)).collect(),
            ends: (1..=n).map(|i| minor.end(i, max_y, max_x)).collect(),
            allowed_turns: data
                .regions
                .iter()
                .zip(&data.boundaries)
                .map(|(l, b)| l.difference(b).copied().collect())
                .collect(),
            disjoint: true,
        };
        Ok((constraint, data))
    }
}

/// `Σ z^{NE(P)}` over all families `P` admitted by `constraint`.
pub fn gf_families(constraint: &FamilyConstraint, limits: &OracleLimits) -> Result<IntPolynomial> {
    let n = constraint.starts.len();
    if constraint.ends.len() != n || constraint.allowed_turns.len() != n {
        return Err(Error::InvalidPath(
            "family constraint lists must have equal length".into(),
        ));
    }
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    for (s, e) in constraint.starts.iter().zip(&constraint.ends) {
        check_budget(*s, *e, limits)?;
        if e.x < s.x || e.y < s.y {
            return Ok(IntPolynomial::zero());
        }
    }
    if constraint.disjoint {
        for i in 0..n {
            for j in 0..i {
                let (si, ei) = (constraint.starts[i], constraint.ends[i]);
                let (sj, ej) = (constraint.starts[j], constraint.ends[j]);
                if si == sj || ei == ej || si == ej || sj == ei {
                    return Ok(IntPolynomial::zero());
                }
            }
        }
    }

    // Per path: column and whether the last step was North; `INACTIVE`
    // outside the path's level range.
    const INACTIVE: i64 = i64::MIN;
    let first = constraint.starts.iter().map(|p| p.level()).min().unwrap();
    let last = constraint.ends.iter().map(|p| p.level()).max().unwrap();

    let mut states: HashMap<Vec<i64>, IntPolynomial> = HashMap::new();
    let initial: Vec<i64> = constraint
        .starts
        .iter()
        .map(|s| if s.level() == first { encode(s.x, false) } else { INACTIVE })
        .collect();
    states.insert(initial, IntPolynomial::one());

    for level in first..last {
        let mut next: HashMap<Vec<i64>, IntPolynomial> = HashMap::new();
        for (state, weight) in &states {
            let mut partial: Vec<(Vec<i64>, usize)> = vec![(Vec::with_capacity(n), 0)];
            for i in 0..n {
                let (s, e) = (constraint.starts[i], constraint.ends[i]);
                let mut grown = Vec::new();
                for (prefix, turns) in partial {
                    if level + 1 == s.level() {
                        let mut p = prefix.clone();
                        p.push(encode(s.x, false));
                        grown.push((p, turns));
                    } else if level + 1 < s.level() || level >= e.level() {
                        let mut p = prefix.clone();
                        p.push(INACTIVE);
                        grown.push((p, turns));
                    } else {
                        let (x, north) = decode(state[i]);
                        let here = Point::new(x, level - x);
                        if x < e.x {
                            let turn = north;
                            if !turn || constraint.allowed_turns[i].contains(&here) {
                                let mut p = prefix.clone();
                                p.push(encode(x + 1, false));
                                grown.push((p, turns + turn as usize));
                            }
                        }
                        if here.y < e.y {
                            let mut p = prefix;
                            p.push(encode(x, true));
                            grown.push((p, turns));
                        }
                    }
                }
                partial = grown;
            }
            for (key, turns) in partial {
                if constraint.disjoint && !columns_distinct(&key) {
                    continue;
                }
                let add = weight.shifted(turns);
                next.entry(key)
                    .and_modify(|w| *w += &add)
                    .or_insert(add);
            }
        }
        if next.len() > limits.state_cap {
            return Err(Error::InstanceTooLarge(format!(
                "{} partial families on level {}, cap is {}",
                next.len(),
                level + 1,
                limits.state_cap
            )));
        }
        states = next;
    }
    Ok(states
        .into_values()
        .fold(IntPolynomial::zero(), |acc, w| acc + w))
}

fn encode(x: i64, north: bool) -> i64 {
    2 * x + north as i64
}

fn decode(code: i64) -> (i64, bool) {
    (code.div_euclid(2), code.rem_euclid(2) == 1)
}

fn columns_distinct(key: &[i64]) -> bool {
    let mut cols: Vec<i64> = key
        .iter()
        .filter(|&&c| c != i64::MIN)
        .map(|&c| decode(c).0)
        .collect();
    cols.sort_unstable();
    cols.windows(2).all(|w| w[0] != w[1])
}

/// Brute-force maximum of NE-turns not in `excluded` over all paths from
/// `start` to `end` staying weakly south-east of every `se` point and
/// weakly north-west of every `nw` point.
pub fn max_ne_single(
    start: Point,
    end: Point,
    se: &[Point],
    nw: &[Point],
    excluded: &[Point],
    limits: &OracleLimits,
) -> Result<i64> {
    check_budget(start, end, limits)?;
    let ok = |p: Point| {
        se.iter().all(|s| p.x >= s.x || p.y <= s.y) && nw.iter().all(|t| p.x <= t.x || p.y >= t.y)
    };
    let excluded: BTreeSet<Point> = excluded.iter().copied().collect();
    let mut best: Option<i64> = None;
    if end.x >= start.x && end.y >= start.y && ok(start) {
        search(start, end, false, 0, &ok, &excluded, &mut best);
    }
    best.ok_or(Error::Infeasible {
        from: start,
        to: end,
    })
}

fn search(
    p: Point,
    end: Point,
    arrived_north: bool,
    count: i64,
    ok: &dyn Fn(Point) -> bool,
    excluded: &BTreeSet<Point>,
    best: &mut Option<i64>,
) {
    if p == end {
        *best = Some(best.map_or(count, |b| b.max(count)));
        return;
    }
    if p.x < end.x {
        let q = p.shifted(1, 0);
        if ok(q) {
            let turn = (arrived_north && !excluded.contains(&p)) as i64;
            search(q, end, false, count + turn, ok, excluded, best);
        }
    }
    if p.y < end.y {
        let q = p.shifted(0, 1);
        if ok(q) {
            search(q, end, true, count, ok, excluded, best);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_points(a: i64, b: i64) -> BTreeSet<Point> {
        (0..=b).flat_map(|x| (0..=a).map(move |y| Point::new(x, y))).collect()
    }

    #[test]
    fn enumerate_small_boxes() {
        let lim = OracleLimits::default();
        let o = Point::new(0, 0);
        assert_eq!(enumerate_paths(o, Point::new(1, 1), None, &lim).unwrap().count(), 2);
        let none = BTreeSet::new();
        let no_turn: Vec<_> = enumerate_paths(o, Point::new(2, 2), Some(&none), &lim)
            .unwrap()
            .collect();
        // EENN and NNEE... only the paths without a North step followed by East
        assert!(no_turn.iter().all(|p| p.ne_turns().is_empty()));
        assert_eq!(no_turn.len(), 1);
        assert_eq!(enumerate_paths(o, Point::new(4, 0), None, &lim).unwrap().count(), 1);
        assert_eq!(enumerate_paths(o, o, None, &lim).unwrap().count(), 1);
        assert_eq!(enumerate_paths(o, Point::new(-1, 0), None, &lim).unwrap().count(), 0);
    }

    #[test]
    fn enumeration_is_east_first_and_complete() {
        let lim = OracleLimits::default();
        let paths: Vec<String> = enumerate_paths(Point::new(0, 0), Point::new(2, 1), None, &lim)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(paths, vec!["(0,0):EEN", "(0,0):ENE", "(0,0):NEE"]);
        let n = enumerate_paths(Point::new(0, 0), Point::new(5, 4), None, &lim)
            .unwrap()
            .count();
        assert_eq!(n, 126);
    }

    #[test]
    fn budget_is_enforced() {
        let lim = OracleLimits {
            step_budget: 4,
            ..Default::default()
        };
        assert!(matches!(
            enumerate_paths(Point::new(0, 0), Point::new(3, 2), None, &lim),
            Err(Error::InstanceTooLarge(_))
        ));
        assert!(max_ne_single(Point::new(0, 0), Point::new(3, 2), &[], &[], &[], &lim).is_err());
    }

    #[test]
    fn single_path_generating_function() {
        let c = FamilyConstraint {
            starts: vec![Point::new(0, 0)],
            ends: vec![Point::new(1, 1)],
            allowed_turns: vec![all_points(1, 1)],
            disjoint: true,
        };
        let gf = gf_families(&c, &OracleLimits::default()).unwrap();
        assert_eq!(gf, IntPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn dp_matches_enumeration_for_independent_pairs() {
        // Without the disjointness requirement the family GF factorises.
        let lim = OracleLimits::default();
        let allowed = all_points(4, 4);
        let starts = vec![Point::new(0, 2), Point::new(0, 0)];
        let ends = vec![Point::new(2, 4), Point::new(4, 4)];
        let gf_of = |s: Point, e: Point| {
            enumerate_paths(s, e, Some(&allowed), &lim)
                .unwrap()
                .fold(IntPolynomial::zero(), |acc, p| {
                    acc + IntPolynomial::one().shifted(p.ne_turns().len())
                })
        };
        let product = gf_of(starts[0], ends[0]) * gf_of(starts[1], ends[1]);
        let c = FamilyConstraint {
            starts: starts.clone(),
            ends: ends.clone(),
            allowed_turns: vec![allowed.clone(), allowed.clone()],
            disjoint: false,
        };
        assert_eq!(gf_families(&c, &lim).unwrap(), product);

        // With it, count pairs by brute force.
        let mut brute = IntPolynomial::zero();
        let first: Vec<_> = enumerate_paths(starts[0], ends[0], Some(&allowed), &lim).unwrap().collect();
        let second: Vec<_> = enumerate_paths(starts[1], ends[1], Some(&allowed), &lim).unwrap().collect();
        for p in &first {
            for q in &second {
                if !p.shares_point_with(q) {
                    brute += IntPolynomial::one().shifted(p.ne_turns().len() + q.ne_turns().len());
                }
            }
        }
        let c = FamilyConstraint {
            disjoint: true,
            ..c
        };
        assert_eq!(gf_families(&c, &lim).unwrap(), brute);
    }

    #[test]
    fn forced_single_family() {
        // Two paths squeezed into a 2-wide strip: only one family exists.
        let lim = OracleLimits::default();
        let c = FamilyConstraint {
            starts: vec![Point::new(0, 1), Point::new(0, 0)],
            ends: vec![Point::new(0, 3), Point::new(1, 3)],
            allowed_turns: vec![all_points(3, 1), all_points(3, 1)],
            disjoint: true,
        };
        let gf = gf_families(&c, &lim).unwrap();
        // path 1 is vertical; path 2 must go E at the bottom then N.
        assert_eq!(gf, IntPolynomial::from_i64s(&[1]));
    }

    #[test]
    fn brute_single_path_maxima() {
        let lim = OracleLimits::default();
        let a = Point::new(0, 1);
        let b = Point::new(7, 6);
        let s: Vec<Point> = [(3, 2), (6, 3), (6, 5), (7, 5)].map(Point::from).to_vec();
        assert_eq!(max_ne_single(a, b, &s, &[], &[], &lim).unwrap(), 3);
        assert_eq!(max_ne_single(a, b, &[], &[], &[], &lim).unwrap(), 5);
        assert_eq!(max_ne_single(a, a, &[], &[], &[], &lim).unwrap(), 0);
        assert!(matches!(
            max_ne_single(
                Point::new(0, 0),
                Point::new(4, 4),
                &[Point::new(3, 1)],
                &[Point::new(1, 3)],
                &[],
                &lim
            ),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn brute_running_example() {
        let lim = OracleLimits::default();
        let s: Vec<Point> = [(2, 2), (4, 3), (2, 5), (8, 9), (10, 10), (11, 11)]
            .map(Point::from)
            .to_vec();
        let t: Vec<Point> = [(4, 1), (5, 1), (6, 1), (5, 2), (5, 5), (5, 6), (8, 7), (11, 9), (13, 10)]
            .map(Point::from)
            .to_vec();
        let m = max_ne_single(Point::new(0, 1), Point::new(12, 14), &s, &t, &t, &lim).unwrap();
        assert_eq!(m, 9);
    }
}
