//! ASCII pictures with the origin at the bottom left.
//!
//! `.` region point, `1`-`9` point of that path (`#` beyond nine), `*` a
//! counted NE-turn, `S`/`T` a side constraint not covered by a path.

use std::collections::HashMap;

use ladder_core::{LadderRegion, LatticePath, Point};

pub struct Canvas {
    x0: i64,
    y0: i64,
    x1: i64,
    y1: i64,
    cells: HashMap<Point, char>,
}

impl Canvas {
    /// Blank canvas covering `[x0, x1] x [y0, y1]`.
    pub fn new(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        Canvas {
            x0,
            y0,
            x1,
            y1,
            cells: HashMap::new(),
        }
    }

    pub fn for_region(region: &LadderRegion) -> Self {
        let mut c = Canvas::new(0, 0, region.max_x(), region.max_y());
        for p in region.points() {
            c.put(p, '.');
        }
        c
    }

    pub fn put(&mut self, p: Point, ch: char) {
        if (self.x0..=self.x1).contains(&p.x) && (self.y0..=self.y1).contains(&p.y) {
            self.cells.insert(p, ch);
        }
    }

    /// Draws path number `index` (1-based); turns outside `uncounted` get `*`.
    pub fn draw_path(&mut self, index: usize, path: &LatticePath, uncounted: &[Point]) {
        let mark = char::from_digit(index as u32, 10).filter(|_| index <= 9).unwrap_or('#');
        for p in path.points() {
            self.put(p, mark);
        }
        for p in path.ne_turns() {
            if !uncounted.contains(&p) {
                self.put(p, '*');
            }
        }
    }

    pub fn render(&self) -> String {
        let width = self.y0.to_string().len().max(self.y1.to_string().len());
        let mut out = String::new();
        for y in (self.y0..=self.y1).rev() {
            let row: Vec<String> = (self.x0..=self.x1)
                .map(|x| self.cells.get(&Point::new(x, y)).copied().unwrap_or(' ').to_string())
                .collect();
            out.push_str(format!("{y:>width$} | {}", row.join(" ")).trim_end());
            out.push('\n');
        }
        let axis: Vec<String> = (self.x0..=self.x1)
            .map(|x| x.rem_euclid(10).to_string())
            .collect();
        out.push_str(&format!("{:>width$}   {}\n", "", axis.join(" ")));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_picture() {
        let region = LadderRegion::rectangle(1, 2).unwrap();
        let mut c = Canvas::for_region(&region);
        let path = LatticePath::parse(Point::new(0, 0), "NEE").unwrap();
        c.draw_path(1, &path, &[]);
        assert_eq!(c.render(), "1 | * 1 1\n0 | 1 . .\n    0 1 2\n");
        let mut c = Canvas::for_region(&region);
        c.draw_path(1, &path, &[Point::new(0, 1)]);
        assert!(c.render().starts_with("1 | 1 1 1"));
    }
}
