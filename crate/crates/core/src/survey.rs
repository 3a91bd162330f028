//! Grid sweeps comparing the closed form with the exhaustive search.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::mu_cyclic;
use crate::oracle::{max_sumfree_with, OracleConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub mu_formula: u64,
    pub lower: u64,
    pub upper: u64,
    /// `None` beyond the oracle cap.
    pub mu_oracle: Option<u64>,
    pub agree: bool,
}

#[derive(Debug, Clone)]
pub struct SurveyGrid {
    pub n: RangeInclusive<u64>,
    pub k: RangeInclusive<u64>,
    pub l: RangeInclusive<u64>,
    /// Run the oracle for `n <= oracle_max` (further limited by `config.max_n`).
    pub oracle_max: u64,
    pub workers: usize,
    pub config: OracleConfig,
}

impl SurveyGrid {
    /// Instances in canonical `(n, k, l)` order, skipping `k <= l` and `n = 0`.
    pub fn instances(&self) -> Vec<(u64, u64, u64)> {
        let mut out = Vec::new();
        for n in self.n.clone().filter(|&n| n > 0) {
            for k in self.k.clone() {
                for l in self.l.clone().filter(|&l| l >= 1 && l < k) {
                    out.push((n, k, l));
                }
            }
        }
        out
    }
}

fn survey_one(grid: &SurveyGrid, (n, k, l): (u64, u64, u64)) -> Result<SurveyRow> {
    let report = mu_cyclic(n, k, l)?;
    let mu_oracle = if n <= grid.oracle_max.min(grid.config.max_n) {
        Some(max_sumfree_with(n, k, l, false, &grid.config)?.optimum)
    } else {
        None
    };
    let bounded = report.lower_bound <= report.mu && report.mu <= report.upper_bound;
    Ok(SurveyRow {
        n,
        k,
        l,
        mu_formula: report.mu,
        lower: report.lower_bound,
        upper: report.upper_bound,
        mu_oracle,
        agree: bounded && mu_oracle.is_none_or(|o| o == report.mu),
    })
}

/// Evaluates every instance on `workers` threads; rows come back in
/// canonical order regardless of the thread count.
pub fn run_survey(grid: &SurveyGrid) -> Result<Vec<SurveyRow>> {
    let instances = grid.instances();
    if instances.is_empty() {
        return Err(Error::OutOfRange("no instances with k > l >= 1 in the given ranges".into()));
    }
    if grid.workers <= 1 {
        return instances.into_iter().map(|i| survey_one(grid, i)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(grid.workers)
        .build()
        .map_err(|e| Error::OutOfRange(format!("cannot start {} workers: {e}", grid.workers)))?;
    pool.install(|| instances.into_par_iter().map(|i| survey_one(grid, i)).collect())
}
