//! Subcommands of `ladder-ainv`, kept out of `main` so they can be tested
//! without spawning the binary.

pub mod problem;
pub mod render;

use std::fmt;

use ladder_core::ainv::{self, AInvariantReport, Method};
use ladder_core::hilbert::hilbert_coefficient;
use ladder_core::oracle::max_ne_single;
use ladder_core::turns::{
    one_sided_family_max, slalom, two_sided_constraints, two_sided_family_max, witness_family,
    witness_path, SlalomTrace,
};
use ladder_core::{
    a_invariant, hilbert_numerator, BoundaryData, Error, GatePoint, IntPolynomial, OracleLimits,
    Point,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use problem::{LadderProblem, PathProblem, Problem};
use render::Canvas;

/// Why a run did not succeed; each kind has its own exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Parse(String),
    Assumption(String),
    TooLarge(String),
    Mismatch(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Assumption(_) => 2,
            Failure::TooLarge(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Assumption(m) => write!(f, "{m}"),
            Failure::TooLarge(m) => write!(f, "{m}"),
            Failure::Mismatch(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidRegion(_)
            | Error::InvalidCorners(_)
            | Error::InvalidPath(_)
            | Error::InvalidMinor(_) => Failure::Parse(e.to_string()),
            Error::InstanceTooLarge(_) => Failure::TooLarge(e.to_string()),
            Error::OutOfBounds { .. } | Error::AssumptionViolated(_) | Error::Infeasible { .. } => {
                Failure::Assumption(e.to_string())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    AInvariant,
    MaxTurns,
    Slalom,
    Oracle,
    Hilbert,
    Validate,
    Render,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub verify: bool,
    pub json: bool,
    pub coeffs: usize,
    pub limits: OracleLimits,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            verify: false,
            json: false,
            coeffs: 10,
            limits: OracleLimits::default(),
        }
    }
}

/// Standard output of a run, and the failure to report after printing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<Failure>,
}

/// Human-readable lines plus the equivalent JSON document.
struct Report {
    lines: Vec<String>,
    json: Value,
    failure: Option<Failure>,
}

impl Report {
    fn new() -> Self {
        Report {
            lines: Vec::new(),
            json: json!({}),
            failure: None,
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn set(&mut self, key: &str, value: Value) {
        self.json[key] = value;
    }
}

pub fn run(command: Command, problem: &Problem, opts: &Options) -> Result<Outcome, Failure> {
    let report = match (command, problem) {
        (Command::AInvariant, Problem::Ladder(p)) => a_invariant_cmd(p, opts)?,
        (Command::MaxTurns, Problem::Ladder(p)) => max_turns_cmd(p, opts, false)?,
        (Command::Slalom, Problem::Ladder(p)) => max_turns_cmd(p, opts, true)?,
        (Command::Slalom, Problem::Path(p)) => slalom_cmd(p, opts)?,
        (Command::Oracle, Problem::Ladder(p)) => oracle_cmd(p, opts)?,
        (Command::Hilbert, Problem::Ladder(p)) => hilbert_cmd(p, opts)?,
        (Command::Validate, Problem::Ladder(p)) => validate_cmd(p),
        (Command::Render, Problem::Ladder(p)) => render_ladder(p)?,
        (Command::Render, Problem::Path(p)) => render_path(p)?,
        (_, Problem::Path(_)) => {
            return Err(Failure::Parse(
                "this subcommand needs a ladder problem (fields A, B, u, v, region); \
                 single-path files work with `slalom` and `render`"
                    .into(),
            ))
        }
    };
    let stdout = if opts.json {
        let mut s = serde_json::to_string_pretty(&report.json).expect("report serialises");
        s.push('\n');
        s
    } else {
        let mut s = report.lines.join("\n");
        s.push('\n');
        s
    };
    Ok(Outcome {
        stdout,
        failure: report.failure,
    })
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn point_list(ps: &[Point]) -> String {
    if ps.is_empty() {
        "none".into()
    } else {
        join(ps, " ")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn big_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn poly_json(h: &IntPolynomial) -> Value {
    Value::Array(h.coeffs().iter().map(big_json).collect())
}

fn points_json(ps: &[Point]) -> Value {
    Value::Array(ps.iter().map(|p| json!([p.x, p.y])).collect())
}

fn gates_json(gs: &[GatePoint]) -> Value {
    Value::Array(
        gs.iter()
            .map(|g| json!({"level": g.level, "offset": g.offset, "label": g.label}))
            .collect(),
    )
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::OneSidedFormula => "one-sided formula",
        Method::TwoSidedAlgorithm => "two-sided slalom",
        Method::GfDegree => "generating function degree",
    }
}

/// Outcome of an oracle cross-check that may be skipped for size.
enum Check {
    Agrees(String),
    Skipped(String),
}

fn record_check(report: &mut Report, check: Result<Check, Failure>) -> Result<(), Failure> {
    match check {
        Ok(Check::Agrees(msg)) => {
            report.line(format!("verify: ok, {msg}"));
            report.set("verify", json!({"status": "ok", "detail": msg}));
        }
        Ok(Check::Skipped(msg)) => {
            report.line(format!("verify: skipped, {msg}"));
            report.set("verify", json!({"status": "skipped", "detail": msg}));
        }
        Err(Failure::Mismatch(msg)) => {
            report.line(format!("verify: MISMATCH, {msg}"));
            report.set("verify", json!({"status": "mismatch", "detail": msg}));
            report.failure = Some(Failure::Mismatch(msg));
        }
        Err(other) => return Err(other),
    }
    Ok(())
}

fn skip_if_too_large<T>(r: Result<T, Error>) -> Result<Result<T, Check>, Failure> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::InstanceTooLarge(msg)) => Ok(Err(Check::Skipped(msg))),
        Err(e) => Err(e.into()),
    }
}

fn a_invariant_cmd(p: &LadderProblem, opts: &Options) -> Result<Report, Failure> {
    let r = a_invariant(&p.region, &p.minor)?;
    let mut report = Report::new();
    describe_report(&mut report, &r);
    if opts.verify {
        let check = (|| {
            let slow = match skip_if_too_large(ainv::from_gf(&p.region, &p.minor, &opts.limits))? {
                Ok(s) => s,
                Err(skip) => return Ok(skip),
            };
            if slow.value == r.value && slow.d == r.d {
                Ok(Check::Agrees(format!("oracle gives {} with d = {}", slow.value, slow.d)))
            } else {
                Err(Failure::Mismatch(format!(
                    "oracle gives {} with d = {}, {} gives {} with d = {}",
                    slow.value,
                    slow.d,
                    method_name(r.method),
                    r.value,
                    r.d
                )))
            }
        })();
        record_check(&mut report, check)?;
    }
    Ok(report)
}

fn describe_report(report: &mut Report, r: &AInvariantReport) {
    report.line(format!("method: {}", method_name(r.method)));
    report.line(format!("a-invariant: {}", r.value));
    if !r.t.is_empty() {
        report.line(format!("t: {}", join(&r.t, ", ")));
    }
    report.line(format!("d: {}", r.d));
    let f = &r.assumptions;
    report.line(format!(
        "checks: endpoints in region {}, upper ladder {}, boundaries are paths {}, d matches (A+B+3)n - sum(u+v) {}",
        yes_no(f.endpoints_in_region),
        yes_no(f.upper_ladder),
        yes_no(f.boundaries_are_paths),
        yes_no(f.dimension_matches_closed_form)
    ));
    report.json = serde_json::to_value(r).expect("report serialises");
}

fn trace_lines(report: &mut Report, trace: &SlalomTrace, with_p2: bool, indent: &str) {
    if with_p2 {
        report.line(format!("{indent}P2: {}", join(&trace.ordered, " ")));
    }
    report.line(format!("{indent}P3: {}", join(&trace.relevant, " ")));
    report.line(format!("{indent}max NE-turns: {}", trace.max_turns));
}

fn trace_json(trace: &SlalomTrace, with_p2: bool) -> Value {
    let mut v = json!({
        "p3": gates_json(&trace.relevant),
        "max_turns": trace.max_turns,
    });
    if with_p2 {
        v["p2"] = gates_json(&trace.ordered);
    }
    v
}

fn max_turns_cmd(p: &LadderProblem, opts: &Options, with_p2: bool) -> Result<Report, Failure> {
    let (a, b) = (p.region.max_y(), p.region.max_x());
    let upper = p.region.upper_inwards_corners();
    let lower = p.region.lower_inwards_corners();
    let fam = two_sided_family_max(&p.minor, a, b, &upper, &lower)?;
    let mut report = Report::new();
    let mut paths_json = Vec::new();
    for i in 1..=p.minor.n() {
        let (from, to) = (p.minor.start(i, a, b), p.minor.end(i, a, b));
        let gates = &fam.constraints[i - 1];
        let trace = &fam.traces[i - 1];
        report.line(format!("path {i}: {from} -> {to}"));
        report.line(format!("  S: {}", point_list(&gates.se)));
        report.line(format!("  T: {}", point_list(&gates.nw)));
        trace_lines(&mut report, trace, with_p2, "  ");
        let mut pj = trace_json(trace, with_p2);
        pj["start"] = json!([from.x, from.y]);
        pj["end"] = json!([to.x, to.y]);
        pj["se"] = points_json(&gates.se);
        pj["nw"] = points_json(&gates.nw);
        paths_json.push(pj);
    }
    report.line(format!("t: {}", join(&fam.t, ", ")));
    report.line(format!("total: {}", fam.total));
    report.set("paths", Value::Array(paths_json));
    report.set("t", json!(fam.t));
    report.set("total", json!(fam.total));
    if lower.is_empty() {
        let closed = one_sided_family_max(&p.minor, a, b, &upper);
        report.line(format!(
            "closed form: t = {}, total {}",
            join(&closed.t, ", "),
            closed.total
        ));
        report.set("closed_form", json!({"t": closed.t, "total": closed.total}));
    }
    if opts.verify {
        let check = (|| {
            for i in 1..=p.minor.n() {
                let g = two_sided_constraints(i, &p.minor, a, b, &upper, &lower);
                let (from, to) = (p.minor.start(i, a, b), p.minor.end(i, a, b));
                let brute = match skip_if_too_large(max_ne_single(from, to, &g.se, &g.nw, &g.nw, &opts.limits))? {
                    Ok(v) => v,
                    Err(skip) => return Ok(skip),
                };
                if brute != fam.t[i - 1] {
                    return Err(Failure::Mismatch(format!(
                        "path {i}: brute force gives {brute}, slalom gives {}",
                        fam.t[i - 1]
                    )));
                }
            }
            let family = witness_family(&p.minor, a, b, &upper, &lower)?;
            let counted: i64 = family
                .iter()
                .enumerate()
                .map(|(k, path)| {
                    path.counted_turns(&two_sided_constraints(k + 1, &p.minor, a, b, &upper, &lower).nw) as i64
                })
                .sum();
            if counted != fam.total {
                return Err(Failure::Mismatch(format!(
                    "witness family has {counted} counted NE-turns, expected {}",
                    fam.total
                )));
            }
            Ok(Check::Agrees(format!(
                "brute force agrees on every path, witness family has {counted} counted NE-turns"
            )))
        })();
        record_check(&mut report, check)?;
    }
    Ok(report)
}

fn slalom_cmd(p: &PathProblem, opts: &Options) -> Result<Report, Failure> {
    let trace = slalom(p.start, p.end, &p.se, &p.nw)?;
    let mut report = Report::new();
    report.line(format!("start: {}", p.start));
    report.line(format!("end: {}", p.end));
    trace_lines(&mut report, &trace, true, "");
    report.json = trace_json(&trace, true);
    if opts.verify {
        let check = (|| {
            let brute = match skip_if_too_large(max_ne_single(p.start, p.end, &p.se, &p.nw, &p.nw, &opts.limits))? {
                Ok(v) => v,
                Err(skip) => return Ok(skip),
            };
            if brute == trace.max_turns {
                Ok(Check::Agrees(format!("brute force gives {brute}")))
            } else {
                Err(Failure::Mismatch(format!(
                    "brute force gives {brute}, slalom gives {}",
                    trace.max_turns
                )))
            }
        })();
        record_check(&mut report, check)?;
    }
    Ok(report)
}

fn oracle_cmd(p: &LadderProblem, opts: &Options) -> Result<Report, Failure> {
    let (h, d) = hilbert_numerator(&p.region, &p.minor, &opts.limits)?;
    let deg = h.degree().expect("numerator is nonzero");
    let value = deg as i64 - d as i64;
    let mut report = Report::new();
    report.line(format!("GF(z): {h}"));
    report.line(format!("degree: {deg}"));
    report.line(format!("families: {}", h.eval_at_one()));
    report.line(format!("d: {d}"));
    report.line(format!("a-invariant: {value}"));
    report.json = json!({
        "gf": poly_json(&h),
        "degree": deg,
        "families": big_json(&h.eval_at_one()),
        "d": d,
        "a_invariant": value,
    });
    if opts.verify {
        let check = match a_invariant(&p.region, &p.minor) {
            Ok(fast) if fast.value == value => Ok(Check::Agrees(format!(
                "{} gives {}",
                method_name(fast.method),
                fast.value
            ))),
            Ok(fast) => Err(Failure::Mismatch(format!(
                "{} gives {}, oracle gives {value}",
                method_name(fast.method),
                fast.value
            ))),
            Err(e) => Ok(Check::Skipped(format!("no formula applies: {e}"))),
        };
        record_check(&mut report, check)?;
    }
    Ok(report)
}

fn hilbert_cmd(p: &LadderProblem, opts: &Options) -> Result<Report, Failure> {
    let (h, d) = hilbert_numerator(&p.region, &p.minor, &opts.limits)?;
    let coeffs: Vec<BigInt> = (0..opts.coeffs).map(|l| hilbert_coefficient(&h, d, l)).collect();
    let mut report = Report::new();
    report.line(format!("H(z): {h}"));
    report.line(format!("d: {d}"));
    report.line(format!("series: H(z) / (1 - z)^{d}"));
    report.line(format!("coefficients: {}", join(&coeffs, ", ")));
    report.json = json!({
        "h": poly_json(&h),
        "d": d,
        "coefficients": Value::Array(coeffs.iter().map(big_json).collect()),
    });
    if opts.verify {
        let value = h.degree().expect("numerator is nonzero") as i64 - d as i64;
        let check = match a_invariant(&p.region, &p.minor) {
            Ok(fast) if fast.value == value => Ok(Check::Agrees(format!(
                "deg H - d = {value} matches the {}",
                method_name(fast.method)
            ))),
            Ok(fast) => Err(Failure::Mismatch(format!(
                "deg H - d = {value}, {} gives {}",
                method_name(fast.method),
                fast.value
            ))),
            Err(e) => Ok(Check::Skipped(format!("no formula applies: {e}"))),
        };
        record_check(&mut report, check)?;
    }
    Ok(report)
}

fn validate_cmd(p: &LadderProblem) -> Report {
    let r = &p.region;
    let (a, b) = (r.max_y(), r.max_x());
    let mut report = Report::new();
    let kind = if r.is_rectangle() {
        "rectangle"
    } else if r.is_upper_ladder() {
        "upper ladder"
    } else if r.is_lower_ladder() {
        "lower ladder"
    } else {
        "two-sided ladder"
    };
    let upper = r.upper_inwards_corners();
    let lower = r.lower_inwards_corners();
    report.line(format!("grid: A = {a}, B = {b}"));
    report.line(format!("minor: {}", p.minor));
    report.line(format!("region: {kind}, {} points", r.len()));
    report.line(format!("upper corners: {}", point_list(&upper)));
    report.line(format!("lower corners: {}", point_list(&lower)));
    report.set("region", json!(kind));
    report.set("points", json!(r.len()));
    report.set("upper_corners", points_json(&upper));
    report.set("lower_corners", points_json(&lower));

    let fits = p.minor.check_fits(a, b);
    report.line(format!("minor fits the grid: {}", yes_no(fits.is_ok())));
    report.set("minor_fits", json!(fits.is_ok()));
    let data = BoundaryData::compute(r, &p.minor);
    report.line(format!("endpoints in region: {}", yes_no(data.is_ok())));
    report.set("endpoints_in_region", json!(data.is_ok()));
    let mut usable = data.is_ok();
    match data {
        Ok(data) => {
            let closed = p.minor.closed_form_dimension(a, b);
            report.line(format!("boundaries are paths: {}", yes_no(data.boundaries_are_paths)));
            report.line(format!(
                "d: {} ((A+B+3)n - sum(u+v) = {closed})",
                data.dimension
            ));
            report.set("boundaries_are_paths", json!(data.boundaries_are_paths));
            report.set("d", json!(data.dimension));
            report.set("d_closed_form", json!(closed));
            usable &= data.boundaries_are_paths || r.is_upper_ladder();
        }
        Err(e) => {
            report.line(format!("reason: {e}"));
            report.set("reason", json!(e.to_string()));
        }
    }
    let method = if !usable {
        "none"
    } else if r.is_upper_ladder() {
        method_name(Method::OneSidedFormula)
    } else {
        method_name(Method::TwoSidedAlgorithm)
    };
    report.line(format!("method: {method}"));
    report.set("method", json!(method));
    report
}

fn render_ladder(p: &LadderProblem) -> Result<Report, Failure> {
    let r = &p.region;
    let (a, b) = (r.max_y(), r.max_x());
    let upper = r.upper_inwards_corners();
    let lower = r.lower_inwards_corners();
    let mut canvas = Canvas::for_region(r);
    let mut report = Report::new();
    match witness_family(&p.minor, a, b, &upper, &lower) {
        Ok(family) => {
            let mut paths = Vec::new();
            for (k, path) in family.iter().enumerate() {
                let g = two_sided_constraints(k + 1, &p.minor, a, b, &upper, &lower);
                canvas.draw_path(k + 1, path, &g.nw);
                report.line(format!(
                    "path {}: {path} ({} counted NE-turns)",
                    k + 1,
                    path.counted_turns(&g.nw)
                ));
                paths.push(json!(path.to_string()));
            }
            report.set("paths", Value::Array(paths));
        }
        Err(e) => {
            report.line(format!("no witness family: {e}"));
            report.set("paths", Value::Null);
        }
    }
    let picture = canvas.render();
    report.lines.insert(0, picture.trim_end().to_string());
    report.set("picture", json!(picture));
    Ok(report)
}

fn render_path(p: &PathProblem) -> Result<Report, Failure> {
    let (path, value) = witness_path(p.start, p.end, &p.se, &p.nw, &p.nw)?;
    let all = || p.se.iter().chain(&p.nw).chain([&p.start, &p.end]);
    let x0 = all().map(|q| q.x).min().unwrap();
    let x1 = all().map(|q| q.x).max().unwrap();
    let y0 = all().map(|q| q.y).min().unwrap();
    let y1 = all().map(|q| q.y).max().unwrap();
    let mut canvas = Canvas::new(x0, y0, x1, y1);
    for x in p.start.x..=p.end.x {
        for y in p.start.y..=p.end.y {
            canvas.put(Point::new(x, y), '.');
        }
    }
    for &s in &p.se {
        canvas.put(s, 'S');
    }
    for &t in &p.nw {
        canvas.put(t, 'T');
    }
    canvas.draw_path(1, &path, &p.nw);
    let picture = canvas.render();
    let mut report = Report::new();
    report.line(picture.trim_end());
    report.line(format!("path: {path} ({value} counted NE-turns)"));
    report.json = json!({"picture": picture, "path": path.to_string(), "max_turns": value});
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse_problem;

    fn run_text(cmd: Command, text: &str, opts: Options) -> Outcome {
        run(cmd, &parse_problem(text).unwrap(), &opts).unwrap()
    }

    const CORNER: &str =
        r#"{"schema":1,"A":15,"B":13,"u":[3,5,6],"v":[1,2,4],"region":{"upper_corners":[[4,6],[8,9],[10,13]]}}"#;

    #[test]
    fn a_invariant_text() {
        let out = run_text(Command::AInvariant, CORNER, Options::default());
        assert!(out.stdout.contains("a-invariant: -51\n"));
        assert!(out.stdout.contains("t: 14, 12, 10\n"));
        assert!(out.failure.is_none());
    }

    #[test]
    fn a_invariant_json_mirrors_report() {
        let opts = Options {
            json: true,
            ..Options::default()
        };
        let out = run_text(Command::AInvariant, CORNER, opts);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["value"], json!(-51));
        assert_eq!(v["t"], json!([14, 12, 10]));
        assert_eq!(v["d"], json!(72));
        assert_eq!(v["method"], json!("OneSidedFormula"));
    }

    #[test]
    fn verify_respects_the_budget() {
        let mut opts = Options {
            verify: true,
            ..Options::default()
        };
        let out = run_text(Command::AInvariant, CORNER, opts);
        assert!(out.stdout.contains("verify: ok, oracle gives -51 with d = 72"), "{}", out.stdout);
        opts.limits.step_budget = 10;
        let out = run_text(Command::AInvariant, CORNER, opts);
        assert!(out.stdout.contains("verify: skipped"), "{}", out.stdout);
        assert!(out.failure.is_none());
    }

    #[test]
    fn verify_small_instance() {
        let opts = Options {
            verify: true,
            ..Options::default()
        };
        let text = r#"{"schema":1,"A":3,"B":3,"u":[1,2],"v":[1,2],"region":"full"}"#;
        let out = run_text(Command::AInvariant, text, opts);
        assert!(out.stdout.contains("a-invariant: -8\nt:"));
        assert!(out.stdout.contains("verify: ok, oracle gives -8"), "{}", out.stdout);
        for cmd in [Command::MaxTurns, Command::Oracle, Command::Hilbert] {
            let out = run_text(cmd, text, opts);
            assert!(out.failure.is_none(), "{}", out.stdout);
            assert!(out.stdout.contains("verify: ok"), "{}", out.stdout);
        }
    }

    #[test]
    fn hilbert_coefficients() {
        let opts = Options {
            coeffs: 5,
            ..Options::default()
        };
        let out = run_text(
            Command::Hilbert,
            r#"{"schema":1,"A":1,"B":1,"u":[1],"v":[1],"region":"full"}"#,
            opts,
        );
        assert!(out.stdout.contains("H(z): 1 + z\n"));
        assert!(out.stdout.contains("coefficients: 1, 4, 9, 16, 25\n"));
    }

    #[test]
    fn path_files_only_for_slalom_and_render() {
        let p = parse_problem(r#"{"schema":1,"path":{"start":[0,1],"end":[7,6]}}"#).unwrap();
        assert!(matches!(
            run(Command::AInvariant, &p, &Options::default()),
            Err(Failure::Parse(_))
        ));
        let out = run(Command::Slalom, &p, &Options::default()).unwrap();
        assert!(out.stdout.contains("max NE-turns: 5"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::from(Error::InvalidMinor("x".into())).exit_code(), 1);
        assert_eq!(Failure::from(Error::AssumptionViolated("x".into())).exit_code(), 2);
        assert_eq!(Failure::from(Error::InstanceTooLarge("x".into())).exit_code(), 3);
        assert_eq!(Failure::Mismatch("x".into()).exit_code(), 4);
    }
}
