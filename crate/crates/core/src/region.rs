//! Ladder regions on the grid `[0, max_x] × [0, max_y]`.
//!
//! A matrix entry `Y[i][j]` is identified with the plane point `(j, max_y - i)`,
//! so the bottom row of the picture is the last row of the matrix. A ladder
//! region is stored row by row: every `y` in `0..=max_y` carries a nonempty
//! column interval `[lo_y, hi_y]`, and both endpoints are non-decreasing in
//! `y`. This is exactly the rectangle-completion property of a ladder.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::Minor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Antidiagonal index `x + y`.
    pub const fn level(self) -> i64 {
        self.x + self.y
    }

    /// Position along the antidiagonal, `x - y`.
    pub const fn offset(self) -> i64 {
        self.x - self.y
    }

    pub const fn shifted(self, dx: i64, dy: i64) -> Self {
        Point::new(self.x + dx, self.y + dy)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CornerSide {
    UpperBoundary,
    LowerBoundary,
}

/// An inwards corner of the region boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Corner {
    pub point: Point,
    pub side: CornerSide,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LadderRegion {
    max_x: i64,
    max_y: i64,
    rows: Vec<(i64, i64)>,
}

impl LadderRegion {
    /// The full rectangle `[0, max_x] × [0, max_y]`.
    pub fn rectangle(max_y: i64, max_x: i64) -> Result<Self> {
        if max_y < 0 || max_x < 0 {
            return Err(Error::InvalidRegion(format!(
                "grid size must be nonnegative, got A={max_y}, B={max_x}"
            )));
        }
        Ok(LadderRegion {
            max_x,
            max_y,
            rows: vec![(0, max_x); (max_y + 1) as usize],
        })
    }

    /// Builds a region from one column interval per row, bottom row first.
    pub fn from_row_intervals(max_y: i64, max_x: i64, intervals: &[(i64, i64)]) -> Result<Self> {
        if max_y < 0 || max_x < 0 {
            return Err(Error::InvalidRegion(format!(
                "grid size must be nonnegative, got A={max_y}, B={max_x}"
            )));
        }
        if intervals.len() as i64 != max_y + 1 {
            return Err(Error::InvalidRegion(format!(
                "expected {} row intervals, got {}",
                max_y + 1,
                intervals.len()
            )));
        }
        for (y, &(lo, hi)) in intervals.iter().enumerate() {
            if lo < 0 || hi > max_x || lo > hi {
                return Err(Error::InvalidRegion(format!(
                    "row {y}: interval [{lo},{hi}] is empty or leaves [0,{max_x}]"
                )));
            }
        }
        for (y, pair) in intervals.windows(2).enumerate() {
            let ((lo0, hi0), (lo1, hi1)) = (pair[0], pair[1]);
            if lo1 < lo0 {
                return Err(Error::InvalidRegion(format!(
                    "left ends must be non-decreasing, row {} has {lo1} < {lo0}",
                    y + 1
                )));
            }
            if hi1 < hi0 {
                return Err(Error::InvalidRegion(format!(
                    "right ends must be non-decreasing, row {} has {hi1} < {hi0}",
                    y + 1
                )));
            }
        }
        Ok(LadderRegion {
            max_x,
            max_y,
            rows: intervals.to_vec(),
        })
    }

    /// The largest region having exactly the given inwards corners.
    ///
    /// An upper corner `(x, y)` forces `lo = x` from row `y + 1` on; a lower
    /// corner `(x, y)` forces `hi = x` up to row `y - 1`.
    pub fn from_corners(max_y: i64, max_x: i64, upper: &[Point], lower: &[Point]) -> Result<Self> {
        if max_y < 0 || max_x < 0 {
            return Err(Error::InvalidRegion(format!(
                "grid size must be nonnegative, got A={max_y}, B={max_x}"
            )));
        }
        check_chain("upper", upper)?;
        check_chain("lower", lower)?;
        for c in upper {
            if c.x < 1 || c.x > max_x || c.y < 0 || c.y >= max_y {
                return Err(Error::InvalidCorners(format!(
                    "upper corner {c} lies outside the admissible range [1,{max_x}]×[0,{}]",
                    max_y - 1
                )));
            }
        }
        for c in lower {
            if c.x < 0 || c.x >= max_x || c.y < 1 || c.y > max_y {
                return Err(Error::InvalidCorners(format!(
                    "lower corner {c} lies outside the admissible range [0,{}]×[1,{max_y}]",
                    max_x - 1
                )));
            }
        }
        let rows: Vec<(i64, i64)> = (0..=max_y)
            .map(|y| {
                let lo = upper.iter().filter(|c| c.y < y).map(|c| c.x).max().unwrap_or(0);
                let hi = lower.iter().filter(|c| c.y > y).map(|c| c.x).min().unwrap_or(max_x);
                (lo, hi)
            })
            .collect();
        let region = Self::from_row_intervals(max_y, max_x, &rows)
            .map_err(|e| Error::InvalidCorners(format!("corners do not describe a ladder: {e}")))?;
        if region.upper_inwards_corners() != upper || region.lower_inwards_corners() != lower {
            return Err(Error::InvalidCorners(
                "corner chains are inconsistent: the induced region has different inwards corners"
                    .into(),
            ));
        }
        Ok(region)
    }

    /// Largest `x` coordinate of the grid (`B`).
    pub fn max_x(&self) -> i64 {
        self.max_x
    }

    /// Largest `y` coordinate of the grid (`A`).
    pub fn max_y(&self) -> i64 {
        self.max_y
    }

    pub fn rows(&self) -> &[(i64, i64)] {
        &self.rows
    }

    pub fn row(&self, y: i64) -> Option<(i64, i64)> {
        if y < 0 || y > self.max_y {
            None
        } else {
            Some(self.rows[y as usize])
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        self.row(p.y).is_some_and(|(lo, hi)| lo <= p.x && p.x <= hi)
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(y, &(lo, hi))| (lo..=hi).map(move |x| Point::new(x, y as i64)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|&(lo, hi)| (hi - lo + 1) as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_upper_ladder(&self) -> bool {
        self.rows[0].0 == 0 && self.rows.iter().all(|&(_, hi)| hi == self.max_x)
    }

    pub fn is_lower_ladder(&self) -> bool {
        self.rows[self.max_y as usize].1 == self.max_x && self.rows.iter().all(|&(lo, _)| lo == 0)
    }

    pub fn is_rectangle(&self) -> bool {
        self.is_upper_ladder() && self.is_lower_ladder()
    }

    /// Whether the region is determined by its inwards corners: it touches the
    /// bottom-left and top-right grid corners and consecutive rows overlap.
    pub fn is_corner_describable(&self) -> bool {
        self.rows[0].0 == 0
            && self.rows[self.max_y as usize].1 == self.max_x
            && self.rows.windows(2).all(|w| w[1].0 <= w[0].1)
    }

    /// Points `(x, y)` of the region with `(x-1, y)` and `(x, y+1)` inside and
    /// `(x-1, y+1)` outside, sorted by `x`.
    pub fn upper_inwards_corners(&self) -> Vec<Point> {
        self.rows
            .windows(2)
            .enumerate()
            .filter_map(|(y, w)| {
                let ((lo0, hi0), (lo1, _)) = (w[0], w[1]);
                (lo1 > lo0 && lo1 <= hi0).then(|| Point::new(lo1, y as i64))
            })
            .collect()
    }

    /// Points `(x, y)` of the region with `(x+1, y)` and `(x, y-1)` inside and
    /// `(x+1, y-1)` outside, sorted by `x`.
    pub fn lower_inwards_corners(&self) -> Vec<Point> {
        self.rows
            .windows(2)
            .enumerate()
            .filter_map(|(y, w)| {
                let ((_, hi0), (lo1, hi1)) = (w[0], w[1]);
                (hi0 < hi1 && hi0 >= lo1).then(|| Point::new(hi0, y as i64 + 1))
            })
            .collect()
    }

    pub fn corners(&self) -> Vec<Corner> {
        let upper = self.upper_inwards_corners().into_iter().map(|point| Corner {
            point,
            side: CornerSide::UpperBoundary,
        });
        let lower = self.lower_inwards_corners().into_iter().map(|point| Corner {
            point,
            side: CornerSide::LowerBoundary,
        });
        upper.chain(lower).collect()
    }

    /// Reflection corresponding to transposing the underlying matrix:
    /// `(x, y) ↦ (max_y - y, max_x - x)`. Fails if some column of the region
    /// is empty, since that column would become an empty row.
    pub fn transpose(&self) -> Result<Self> {
        let rows = (0..=self.max_x)
            .map(|y_new| {
                let x_old = self.max_x - y_new;
                let ys: Vec<i64> = (0..=self.max_y)
                    .filter(|&y| self.contains(Point::new(x_old, y)))
                    .collect();
                match (ys.first(), ys.last()) {
                    (Some(&ymin), Some(&ymax)) => Ok((self.max_y - ymax, self.max_y - ymin)),
                    _ => Err(Error::InvalidRegion(format!(
                        "column {x_old} is empty; the transpose has an empty row"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_row_intervals(self.max_x, self.max_y, &rows)
    }
}

fn check_chain(side: &str, corners: &[Point]) -> Result<()> {
    for w in corners.windows(2) {
        if !(w[0].x < w[1].x && w[0].y < w[1].y) {
            return Err(Error::InvalidCorners(format!(
                "{side} corners must increase strictly in both coordinates, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// The shrunken regions, their lower-right boundaries and the dimension `d`
/// entering the Hilbert series of the ladder determinantal ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryData {
    /// `regions[i - 1]` is the region available to the turns of path `i`.
    pub regions: Vec<BTreeSet<Point>>,
    /// `boundaries[i - 1]`: points of `regions[i - 1]` whose south-east
    /// diagonal neighbour is missing.
    pub boundaries: Vec<BTreeSet<Point>>,
    /// Size of the union of all boundaries.
    pub dimension: usize,
    /// Every boundary traces a full lattice path from its start to its end
    /// point inside the region.
    pub boundaries_are_paths: bool,
    /// `dimension == (A + B + 3) n - Σ (u_i + v_i)`.
    pub dimension_matches_closed_form: bool,
}

impl BoundaryData {
    pub fn compute(region: &LadderRegion, minor: &Minor) -> Result<Self> {
        let (max_y, max_x) = (region.max_y(), region.max_x());
        minor.check_fits(max_y, max_x)?;
        let n = minor.n();
        for i in 1..=n {
            for (what, p) in [("start", minor.start(i, max_y, max_x)), ("end", minor.end(i, max_y, max_x))] {
                if !region.contains(p) {
                    return Err(Error::AssumptionViolated(format!(
                        "{what} point {p} of path {i} lies outside the ladder region"
                    )));
                }
            }
        }

        let mut regions = vec![BTreeSet::new(); n];
        // The outermost region is the ladder cut down to the bounding box of
        // the lowest path; rows below its start and columns right of its end
        // carry no variables of the quotient.
        let start_n = minor.start(n, max_y, max_x);
        let end_n = minor.end(n, max_y, max_x);
        regions[n - 1] = region
            .points()
            .filter(|p| p.x <= end_n.x && p.y >= start_n.y)
            .collect();
        for i in (1..n).rev() {
            let start = minor.start(i, max_y, max_x);
            let end = minor.end(i, max_y, max_x);
            let outer = &regions[i];
            let inner: BTreeSet<Point> = outer
                .iter()
                .copied()
                .filter(|p| p.x <= end.x && p.y >= start.y && outer.contains(&p.shifted(1, -1)))
                .collect();
            regions[i - 1] = inner;
        }

        let boundaries: Vec<BTreeSet<Point>> = regions
            .iter()
            .map(|li| {
                li.iter()
                    .copied()
                    .filter(|p| !li.contains(&p.shifted(1, -1)))
                    .collect()
            })
            .collect();

        let union: BTreeSet<Point> = boundaries.iter().flatten().copied().collect();
        let dimension = union.len();

        let boundaries_are_paths = (1..=n).all(|i| {
            is_lattice_path_between(
                &boundaries[i - 1],
                minor.start(i, max_y, max_x),
                minor.end(i, max_y, max_x),
            )
        });
        let closed_form = minor.closed_form_dimension(max_y, max_x);

        Ok(BoundaryData {
            regions,
            boundaries,
            dimension,
            boundaries_are_paths,
            dimension_matches_closed_form: dimension as i64 == closed_form,
        })
    }
}

/// Whether `points`, ordered by level, is exactly a lattice path from `from` to `to`.
fn is_lattice_path_between(points: &BTreeSet<Point>, from: Point, to: Point) -> bool {
    let mut sorted: Vec<Point> = points.iter().copied().collect();
    sorted.sort_by_key(|p| (p.level(), p.x));
    sorted.first() == Some(&from)
        && sorted.last() == Some(&to)
        && sorted.windows(2).all(|w| {
            let (dx, dy) = (w[1].x - w[0].x, w[1].y - w[0].y);
            (dx, dy) == (1, 0) || (dx, dy) == (0, 1)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&p| p.into()).collect()
    }

    pub(crate) fn figure5_rows() -> Vec<(i64, i64)> {
        let mut rows = vec![(0, 6); 7];
        rows.push((4, 6));
        rows.extend([(4, 10); 3]);
        rows.push((4, 13));
        rows.push((7, 13));
        rows.extend([(8, 13); 3]);
        rows
    }

    #[test]
    fn full_rectangle_from_intervals() {
        let r = LadderRegion::from_row_intervals(1, 1, &[(0, 1), (0, 1)]).unwrap();
        assert!(r.is_rectangle());
        assert_eq!(r.len(), 4);
        assert_eq!(r, LadderRegion::rectangle(1, 1).unwrap());
    }

    #[test]
    fn rejects_non_monotone_left_ends() {
        let err = LadderRegion::from_row_intervals(2, 2, &[(0, 2), (1, 2), (0, 2)]).unwrap_err();
        assert!(matches!(err, Error::InvalidRegion(_)));
    }

    #[test]
    fn rejects_wrong_row_count_and_bounds() {
        assert!(LadderRegion::from_row_intervals(2, 2, &[(0, 2), (0, 2)]).is_err());
        assert!(LadderRegion::from_row_intervals(1, 2, &[(0, 3), (0, 3)]).is_err());
        assert!(LadderRegion::from_row_intervals(1, 2, &[(2, 1), (2, 2)]).is_err());
    }

    #[test]
    fn two_sided_figure_from_rows_and_corners_agree() {
        let by_rows = LadderRegion::from_row_intervals(15, 13, &figure5_rows()).unwrap();
        let by_corners = LadderRegion::from_corners(
            15,
            13,
            &pts(&[(4, 6), (7, 11), (8, 12)]),
            &pts(&[(6, 8), (10, 11)]),
        )
        .unwrap();
        assert_eq!(by_rows, by_corners);
        assert_eq!(by_rows.upper_inwards_corners(), pts(&[(4, 6), (7, 11), (8, 12)]));
        assert_eq!(by_rows.lower_inwards_corners(), pts(&[(6, 8), (10, 11)]));
        assert!(!by_rows.is_upper_ladder());
    }

    #[test]
    fn upper_ladder_figure_corners() {
        let r = LadderRegion::from_corners(15, 13, &pts(&[(4, 6), (8, 9), (10, 13)]), &[]).unwrap();
        assert!(r.is_upper_ladder());
        assert_eq!(r.row(7), Some((4, 13)));
        assert_eq!(r.row(10), Some((8, 13)));
        assert_eq!(r.row(14), Some((10, 13)));
        assert_eq!(r.upper_inwards_corners(), pts(&[(4, 6), (8, 9), (10, 13)]));
        assert!(r.lower_inwards_corners().is_empty());
    }

    #[test]
    fn no_corners_is_rectangle() {
        let r = LadderRegion::from_corners(3, 3, &[], &[]).unwrap();
        assert!(r.is_rectangle());
        assert!(r.corners().is_empty());
    }

    #[test]
    fn inconsistent_corner_chains_are_rejected() {
        // not increasing in y
        assert!(LadderRegion::from_corners(5, 5, &pts(&[(1, 3), (2, 2)]), &[]).is_err());
        // outside the grid
        assert!(LadderRegion::from_corners(5, 5, &pts(&[(6, 1)]), &[]).is_err());
        // upper corner right of the lower boundary in its row
        assert!(LadderRegion::from_corners(5, 5, &pts(&[(4, 1)]), &pts(&[(2, 3)])).is_err());
    }

    #[test]
    fn transpose_is_an_involution() {
        let r = LadderRegion::from_row_intervals(15, 13, &figure5_rows()).unwrap();
        let t = r.transpose().unwrap();
        assert_eq!(t.max_y(), 13);
        assert_eq!(t.max_x(), 15);
        assert_eq!(t.len(), r.len());
        assert_eq!(t.transpose().unwrap(), r);
    }

    #[test]
    fn single_path_boundary_is_the_lower_right_hook() {
        for (a, b) in [(0, 0), (2, 3), (4, 1)] {
            let r = LadderRegion::rectangle(a, b).unwrap();
            let m = Minor::new(vec![1], vec![1]).unwrap();
            let data = BoundaryData::compute(&r, &m).unwrap();
            let hook: BTreeSet<Point> =
                r.points().filter(|p| p.x == b || p.y == 0).collect();
            assert_eq!(data.boundaries[0], hook);
            assert_eq!(data.dimension as i64, a + b + 1);
            assert!(data.boundaries_are_paths);
            assert!(data.dimension_matches_closed_form);
        }
    }

    #[test]
    fn one_sided_example_dimension() {
        let r = LadderRegion::from_corners(15, 13, &pts(&[(4, 6), (8, 9), (10, 13)]), &[]).unwrap();
        let m = Minor::new(vec![3, 5, 6], vec![1, 2, 4]).unwrap();
        let data = BoundaryData::compute(&r, &m).unwrap();
        // (A+B+3)n - Σ(u+v) = 93 - 21
        assert_eq!(data.dimension, 72);
        let union: BTreeSet<Point> = data.boundaries.iter().flatten().copied().collect();
        assert_eq!(union.len(), 72);
        assert!(data.boundaries_are_paths);
    }

    #[test]
    fn boundary_sizes_match_path_lengths() {
        let r = LadderRegion::from_row_intervals(15, 13, &figure5_rows()).unwrap();
        let m = Minor::new(vec![3, 5, 6], vec![3, 4, 6]).unwrap();
        let data = BoundaryData::compute(&r, &m).unwrap();
        assert!(data.boundaries_are_paths);
        for i in 1..=3 {
            let (s, e) = (m.start(i, 15, 13), m.end(i, 15, 13));
            assert_eq!(
                data.boundaries[i - 1].len() as i64,
                e.x - s.x + e.y - s.y + 1
            );
        }
        assert_eq!(data.dimension, 66);
    }

    #[test]
    fn endpoint_off_grid_is_an_assumption_violation() {
        let r = LadderRegion::rectangle(3, 3).unwrap();
        let m = Minor::new(vec![5], vec![1]).unwrap();
        assert!(matches!(
            BoundaryData::compute(&r, &m),
            Err(Error::AssumptionViolated(_))
        ));
        // endpoint inside the grid but outside the ladder
        let r = LadderRegion::from_corners(3, 3, &pts(&[(1, 0)]), &[]).unwrap();
        let m = Minor::new(vec![3], vec![1]).unwrap();
        assert!(matches!(
            BoundaryData::compute(&r, &m),
            Err(Error::AssumptionViolated(_))
        ));
    }
}
