//! Problem files.
//!
//! A ladder problem:
//!
//! ```json
//! {"schema": 1, "A": 15, "B": 13, "u": [3, 5, 6], "v": [1, 2, 4],
//!  "region": {"upper_corners": [[4, 6], [8, 9], [10, 13]]}}
//! ```
//!
//! `region` is `"full"` or an object with any of `upper_corners`,
//! `corners: {upper, lower}` and `rows: [[lo, hi], ...]` (bottom row first);
//! every form given must describe the same region.
//!
//! A single-path problem for the slalom scan:
//!
//! ```json
//! {"schema": 1, "path": {"start": [0, 1], "end": [12, 14], "se": [[2, 2]], "nw": [[4, 1]]}}
//! ```

use ladder_core::{LadderRegion, Minor, Point};
use serde::Deserialize;

use crate::Failure;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    schema: Option<u64>,
    #[serde(rename = "A")]
    a: Option<i64>,
    #[serde(rename = "B")]
    b: Option<i64>,
    u: Option<Vec<i64>>,
    v: Option<Vec<i64>>,
    region: Option<serde_json::Value>,
    path: Option<RawPath>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegionSpec {
    upper_corners: Option<Vec<[i64; 2]>>,
    corners: Option<CornerSpec>,
    rows: Option<Vec<[i64; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CornerSpec {
    #[serde(default)]
    upper: Vec<[i64; 2]>,
    #[serde(default)]
    lower: Vec<[i64; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPath {
    start: [i64; 2],
    end: [i64; 2],
    #[serde(default)]
    se: Vec<[i64; 2]>,
    #[serde(default)]
    nw: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderProblem {
    pub region: LadderRegion,
    pub minor: Minor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathProblem {
    pub start: Point,
    pub end: Point,
    pub se: Vec<Point>,
    pub nw: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Ladder(LadderProblem),
    Path(PathProblem),
}

fn points(raw: &[[i64; 2]]) -> Vec<Point> {
    raw.iter().map(|&[x, y]| Point::new(x, y)).collect()
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Parse(msg.into())
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<Problem, Failure> {
    let raw: RawProblem =
        serde_json::from_str(text).map_err(|e| invalid(format!("malformed problem file: {e}")))?;
    match raw.schema {
        None => return Err(invalid("missing field `schema`")),
        Some(SCHEMA_VERSION) => {}
        Some(version) => {
            return Err(invalid(format!(
                "field `schema`: unsupported version {version}, expected {SCHEMA_VERSION}"
            )))
        }
    }
    if let Some(path) = raw.path {
        let extra: Vec<&str> = [
            ("A", raw.a.is_some()),
            ("B", raw.b.is_some()),
            ("u", raw.u.is_some()),
            ("v", raw.v.is_some()),
            ("region", raw.region.is_some()),
        ]
        .into_iter()
        .filter_map(|(name, present)| present.then_some(name))
        .collect();
        if !extra.is_empty() {
            return Err(invalid(format!(
                "a single-path problem must not contain {}",
                extra.join(", ")
            )));
        }
        let [sx, sy] = path.start;
        let [ex, ey] = path.end;
        if ex < sx || ey < sy {
            return Err(invalid(format!(
                "field `path.end`: ({ex},{ey}) is not weakly north-east of ({sx},{sy})"
            )));
        }
        return Ok(Problem::Path(PathProblem {
            start: Point::new(sx, sy),
            end: Point::new(ex, ey),
            se: points(&path.se),
            nw: points(&path.nw),
        }));
    }

    let missing = |name: &str| invalid(format!("missing field `{name}`"));
    let a = raw.a.ok_or_else(|| missing("A"))?;
    let b = raw.b.ok_or_else(|| missing("B"))?;
    let u = raw.u.ok_or_else(|| missing("u"))?;
    let v = raw.v.ok_or_else(|| missing("v"))?;
    let region = raw.region.ok_or_else(|| missing("region"))?;
    if a < 0 || b < 0 {
        return Err(invalid(format!("fields `A`, `B` must be nonnegative, got {a}, {b}")));
    }
    let minor = Minor::new(u, v).map_err(|e| invalid(format!("fields `u`, `v`: {e}")))?;
    let region = build_region(a, b, region)?;
    Ok(Problem::Ladder(LadderProblem { region, minor }))
}

fn build_region(a: i64, b: i64, raw: serde_json::Value) -> Result<LadderRegion, Failure> {
    let spec: RegionSpec = match raw {
        serde_json::Value::String(name) if name == "full" => {
            return LadderRegion::rectangle(a, b).map_err(|e| invalid(format!("field `region`: {e}")));
        }
        serde_json::Value::String(name) => {
            return Err(invalid(format!(
                "field `region`: unknown region name {name:?}, expected \"full\" or an object"
            )))
        }
        other => serde_json::from_value(other).map_err(|e| invalid(format!("field `region`: {e}")))?,
    };
    let mut candidates: Vec<(&str, LadderRegion)> = Vec::new();
    if let Some(upper) = &spec.upper_corners {
        let r = LadderRegion::from_corners(a, b, &points(upper), &[])
            .map_err(|e| invalid(format!("field `region.upper_corners`: {e}")))?;
        candidates.push(("region.upper_corners", r));
    }
    if let Some(corners) = &spec.corners {
        let r = LadderRegion::from_corners(a, b, &points(&corners.upper), &points(&corners.lower))
            .map_err(|e| invalid(format!("field `region.corners`: {e}")))?;
        candidates.push(("region.corners", r));
    }
    if let Some(rows) = &spec.rows {
        let rows: Vec<(i64, i64)> = rows.iter().map(|&[lo, hi]| (lo, hi)).collect();
        let r = LadderRegion::from_row_intervals(a, b, &rows)
            .map_err(|e| invalid(format!("field `region.rows`: {e}")))?;
        candidates.push(("region.rows", r));
    }
    let Some((first_name, first)) = candidates.first() else {
        return Err(invalid(
            "field `region`: give at least one of `upper_corners`, `corners`, `rows`",
        ));
    };
    for (name, other) in &candidates[1..] {
        if other != first {
            return Err(invalid(format!(
                "fields `{first_name}` and `{name}` describe different regions"
            )));
        }
    }
    Ok(first.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ladder(text: &str) -> LadderProblem {
        match parse_problem(text).unwrap() {
            Problem::Ladder(p) => p,
            other => panic!("expected a ladder problem, got {other:?}"),
        }
    }

    fn error(text: &str) -> String {
        match parse_problem(text) {
            Err(Failure::Parse(msg)) => msg,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn corner_ladder_file() {
        let p = ladder(
            r#"{"schema":1,"A":15,"B":13,"u":[3,5,6],"v":[1,2,4],"region":{"upper_corners":[[4,6],[8,9],[10,13]]}}"#,
        );
        assert_eq!(p.region.upper_inwards_corners().len(), 3);
        assert_eq!(p.minor.u(), &[3, 5, 6]);
    }

    #[test]
    fn full_rectangle() {
        let p = ladder(r#"{"schema":1,"A":2,"B":2,"u":[1],"v":[1],"region":"full"}"#);
        assert!(p.region.is_rectangle());
    }

    #[test]
    fn semantic_errors_name_the_invariant() {
        let msg = error(r#"{"schema":1,"A":4,"B":4,"u":[2,1],"v":[1,2],"region":"full"}"#);
        assert!(msg.contains("u must be strictly increasing"), "{msg}");
        let msg = error(r#"{"schema":1,"A":4,"B":4,"u":[1],"v":[1],"region":"empty"}"#);
        assert!(msg.contains("unknown region name"), "{msg}");
        let msg = error(r#"{"schema":1,"A":4,"B":4,"u":[1],"v":[1]}"#);
        assert!(msg.contains("missing field `region`"), "{msg}");
        let msg = error(r#"{"schema":2,"A":4,"B":4,"u":[1],"v":[1],"region":"full"}"#);
        assert!(msg.contains("unsupported version 2"), "{msg}");
        let msg = error(r#"{"A":4,"B":4,"u":[1],"v":[1],"region":"full"}"#);
        assert!(msg.contains("missing field `schema`"), "{msg}");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let msg = error("{\"A\":4,\n\"B\":}");
        assert!(msg.contains("line 2"), "{msg}");
        let msg = error(r#"{"schema":1,"A":4,"B":4,"u":[1],"v":[1],"region":"full","w":1}"#);
        assert!(msg.contains("unknown field `w`"), "{msg}");
    }

    #[test]
    fn redundant_region_forms_must_agree() {
        let ok = r#"{"schema":1,"A":2,"B":2,"u":[1],"v":[1],
            "region":{"upper_corners":[[1,0]],"rows":[[0,2],[1,2],[1,2]]}}"#;
        assert_eq!(ladder(ok).region.rows(), &[(0, 2), (1, 2), (1, 2)]);
        let bad = r#"{"schema":1,"A":2,"B":2,"u":[1],"v":[1],
            "region":{"upper_corners":[[1,1]],"rows":[[0,2],[1,2],[1,2]]}}"#;
        assert!(error(bad).contains("describe different regions"));
    }

    #[test]
    fn path_problems() {
        let p = parse_problem(r#"{"schema":1,"path":{"start":[0,1],"end":[7,6],"se":[[6,3]]}}"#).unwrap();
        assert_eq!(
            p,
            Problem::Path(PathProblem {
                start: Point::new(0, 1),
                end: Point::new(7, 6),
                se: vec![Point::new(6, 3)],
                nw: vec![],
            })
        );
        let msg = error(r#"{"schema":1,"A":3,"path":{"start":[0,1],"end":[7,6]}}"#);
        assert!(msg.contains("must not contain A"), "{msg}");
    }
}
