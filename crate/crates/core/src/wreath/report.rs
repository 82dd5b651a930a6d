use std::time::{Duration, Instant};

use crate::terwilliger::TerwilligerAlgebra;

use super::check::{ensure, Check, CheckName};
use super::{
    block_form, build, f_idempotents, g_basis, verify_bose, verify_f, verify_subconstituents,
    verify_primary_ideal, WreathError, WreathParams,
};

/// Largest order for which triple regularity runs unless forced.
pub const TRIPLE_REGULARITY_LIMIT: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dimensions {
    /// `dim T(x)` from span closure.
    pub t: usize,
    /// `dim U`.
    pub u: usize,
    /// Number of nonzero `F_ih`.
    pub f_nonzero: usize,
    /// `dim Z(T(x))`.
    pub center: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub params: WreathParams,
    pub base_point: usize,
    pub dims: Dimensions,
    pub checks: Vec<Check>,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// `None` runs the brute-force triple-regularity check only when
    /// `v <= TRIPLE_REGULARITY_LIMIT`.
    pub triple_regularity: Option<bool>,
}

/// Wall-clock time per pipeline stage, in execution order.
pub type StageTimings = Vec<(&'static str, Duration)>;

/// Runs the whole pipeline for `K_{n_1} wr ... wr K_{n_d}` at base point `x`.
pub fn structure_report(params: &WreathParams, x: usize) -> Result<StructureReport, WreathError> {
    structure_report_with(params, x, ReportOptions::default()).map(|(r, _)| r)
}

pub fn structure_report_with(
    params: &WreathParams,
    x: usize,
    options: ReportOptions,
) -> Result<(StructureReport, StageTimings), WreathError> {
    let mut timings = StageTimings::new();
    let mut clock = Instant::now();
    let mut lap = |name: &'static str, timings: &mut StageTimings| {
        timings.push((name, clock.elapsed()));
        clock = Instant::now();
    };

    let s = build(params);
    lap("build", &mut timings);
    let t = TerwilligerAlgebra::new(&s, x)?;
    lap("closure", &mut timings);
    let pb = g_basis(&t);
    let fs = f_idempotents(&t);
    lap("bases", &mut timings);

    let mut checks = verify_bose(&s, params);
    lap("bose", &mut timings);
    checks.extend(block_form(&t).checks);
    checks.extend(verify_subconstituents(&t));
    lap("subconstituents", &mut timings);
    checks.extend(verify_primary_ideal(&t, &pb));
    lap("primary", &mut timings);
    checks.extend(verify_f(&t, &fs, &pb));
    lap("central", &mut timings);

    let center = t.center().dim();
    lap("center", &mut timings);
    checks.push(Check::run(CheckName::DimensionFormula, || {
        let expected = params.terwilliger_dim();
        ensure!(t.dim() == expected, "dim T(x) = {}, formula gives {expected}", t.dim());
        Ok(())
    }));
    checks.push(Check::run(CheckName::CenterDimension, || {
        let expected = params.center_dim();
        ensure!(center == expected, "dim Z(T(x)) = {center}, formula gives {expected}");
        ensure!(center == 1 + fs.nonzero_count, "dim Z(T(x)) = {center} but {} nonzero F_ih", fs.nonzero_count);
        Ok(())
    }));
    checks.push(Check::run(CheckName::TripleProductSpan, || {
        let span = t.triple_product_span();
        ensure!(&span == t.basis(), "triple products span {} of {} dimensions", span.dim(), t.dim());
        Ok(())
    }));
    lap("triple-products", &mut timings);

    if options.triple_regularity.unwrap_or(s.order() <= TRIPLE_REGULARITY_LIMIT) {
        checks.push(Check::run(CheckName::TripleRegularity, || {
            match s.triple_regularity().witness {
                None => Ok(()),
                Some(w) => Err(format!(
                    "triples {:?} and {:?} of type {:?} give counts {} and {} for {:?}",
                    w.first, w.second, w.relation_type, w.first_count, w.second_count, w.counted
                )),
            }
        }));
        lap("triple-regularity", &mut timings);
    }

    let dims = Dimensions { t: t.dim(), u: pb.span.dim(), f_nonzero: fs.nonzero_count, center };
    let report = StructureReport { params: params.clone(), base_point: x, dims, checks };
    Ok((report, timings))
}
