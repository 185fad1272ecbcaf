//! The a-invariant of a ladder determinantal ring, from the closed formula
//! (upper ladders), the slalom scan (two-sided ladders) or the degree of the
//! brute-force generating function.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::hilbert_numerator;
use crate::oracle::OracleLimits;
use crate::paths::Minor;
use crate::region::{BoundaryData, LadderRegion};
use crate::turns::{one_sided_family_max, two_sided_family_max};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    OneSidedFormula,
    TwoSidedAlgorithm,
    GfDegree,
}

/// Which hypotheses were checked on the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AssumptionFlags {
    pub endpoints_in_region: bool,
    pub upper_ladder: bool,
    pub boundaries_are_paths: bool,
    pub dimension_matches_closed_form: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AInvariantReport {
    pub value: i64,
    /// Per-path turn maxima as they enter `value`; empty for `GfDegree`.
    pub t: Vec<i64>,
    pub d: usize,
    pub method: Method,
    pub assumptions: AssumptionFlags,
}

fn flags(region: &LadderRegion, data: &BoundaryData) -> AssumptionFlags {
    AssumptionFlags {
        endpoints_in_region: true,
        upper_ladder: region.is_upper_ladder(),
        boundaries_are_paths: data.boundaries_are_paths,
        dimension_matches_closed_form: data.dimension_matches_closed_form,
    }
}

/// Closed formula for an upper ladder: `Σ t_i - (A + B + 1) n`, where `t_i`
/// counts the maximal NE-turns of path `i` plus its start height and end offset.
pub fn one_sided(region: &LadderRegion, minor: &Minor) -> Result<AInvariantReport> {
    if !region.is_upper_ladder() {
        return Err(Error::AssumptionViolated(
            "the closed formula needs an upper ladder (no lower inwards corners)".into(),
        ));
    }
    let data = BoundaryData::compute(region, minor)?;
    let (max_y, max_x) = (region.max_y(), region.max_x());
    let fam = one_sided_family_max(minor, max_y, max_x, &region.upper_inwards_corners());
    let t: Vec<i64> = fam
        .t
        .iter()
        .enumerate()
        .map(|(k, ti)| ti + minor.start_height(k + 1) + minor.end_offset(k + 1))
        .collect();
    let n = minor.n() as i64;
    let value = t.iter().sum::<i64>() - (max_y + max_x + 1) * n;
    Ok(AInvariantReport {
        value,
        t,
        d: data.dimension,
        method: Method::OneSidedFormula,
        assumptions: flags(region, &data),
    })
}

/// The formula on the full `(A+1) x (B+1)` matrix.
pub fn rectangular(max_y: i64, max_x: i64, minor: &Minor) -> Result<AInvariantReport> {
    one_sided(&LadderRegion::rectangle(max_y, max_x)?, minor)
}

/// Slalom scan for a general ladder: `Σ (t_i + u_i + v_i) - (A + B + 3) n`.
/// Refuses instances whose boundary sets do not form lattice paths.
pub fn two_sided(region: &LadderRegion, minor: &Minor) -> Result<AInvariantReport> {
    let data = BoundaryData::compute(region, minor)?;
    if !data.boundaries_are_paths {
        let bad = (1..=minor.n())
            .find(|&i| {
                let b = &data.boundaries[i - 1];
                b.len() as i64
                    != minor.end(i, region.max_y(), region.max_x()).level()
                        - minor.start(i, region.max_y(), region.max_x()).level()
                        + 1
            })
            .unwrap_or(1);
        return Err(Error::AssumptionViolated(format!(
            "the boundary of the region available to path {bad} is not a lattice path inside the ladder"
        )));
    }
    let (max_y, max_x) = (region.max_y(), region.max_x());
    let fam = two_sided_family_max(
        minor,
        max_y,
        max_x,
        &region.upper_inwards_corners(),
        &region.lower_inwards_corners(),
    )?;
    let n = minor.n() as i64;
    let uv: i64 = minor.u().iter().chain(minor.v()).sum();
    let value = fam.total + uv - (max_y + max_x + 3) * n;
    Ok(AInvariantReport {
        value,
        t: fam.t,
        d: data.dimension,
        method: Method::TwoSidedAlgorithm,
        assumptions: flags(region, &data),
    })
}

/// `deg H - d` with the numerator `H` obtained by enumerating path families.
pub fn from_gf(region: &LadderRegion, minor: &Minor, limits: &OracleLimits) -> Result<AInvariantReport> {
    let data = BoundaryData::compute(region, minor)?;
    let (h, d) = hilbert_numerator(region, minor, limits)?;
    let deg = h.degree().expect("numerator is nonzero") as i64;
    Ok(AInvariantReport {
        value: deg - d as i64,
        t: Vec::new(),
        d,
        method: Method::GfDegree,
        assumptions: flags(region, &data),
    })
}

/// The closed formula on upper ladders, the slalom scan otherwise.
pub fn a_invariant(region: &LadderRegion, minor: &Minor) -> Result<AInvariantReport> {
    if region.is_upper_ladder() {
        one_sided(region, minor)
    } else {
        two_sided(region, minor)
    }
}
