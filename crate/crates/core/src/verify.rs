//! Brute-force check of the extremal value over every family `T(n, alpha)`.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::CanonicalCode;
use crate::enumeration::{enumerate_family_with_cap, TreeFamilyQuery};
use crate::error::{Error, Result};
use crate::extremal::{closed_form_max, construct_t_star, feasible_alpha, ExtremalParams};
use crate::invariants::sombor_index;

/// Two index values closer than this are treated as equal.
pub const TOLERANCE: f64 = 1e-9;

/// Default largest order the driver accepts.
pub const DEFAULT_VERIFY_CAP: usize = 16;

/// CSV header written by [`render_csv`].
pub const CSV_HEADER: &str =
    "n,alpha,family_size,closed_form,brute_force_max,maximizer_count,margin_to_second,pass";

/// One `(n, alpha)` cell of the verification table.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalRecord {
    pub order: usize,
    pub alpha: usize,
    pub family_size: usize,
    pub closed_form: f64,
    pub brute_force_max: f64,
    /// Isomorphism classes within [`TOLERANCE`] of the maximum.
    pub maximizer_count: usize,
    /// Smallest canonical code among the maximizers.
    pub maximizer_code: CanonicalCode,
    /// Code of the extremal construction for this cell.
    pub expected_code: CanonicalCode,
    /// Maximum minus the best value not tied with it; infinite when every
    /// member ties (in particular for a single-member family).
    pub margin_to_second: f64,
    pub wall_time: Duration,
}

impl ExtremalRecord {
    /// The closed form matches the brute-force maximum, and exactly one
    /// class attains it: the extremal construction.
    pub fn passes(&self) -> bool {
        (self.closed_form - self.brute_force_max).abs() <= TOLERANCE
            && self.maximizer_count == 1
            && self.maximizer_code == self.expected_code
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// Sorted by `(n, alpha)`.
    pub records: Vec<ExtremalRecord>,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.records.iter().all(ExtremalRecord::passes)
    }

    pub fn total_time(&self) -> Duration {
        self.records.iter().map(|r| r.wall_time).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses rayon's default pool.
    pub jobs: Option<usize>,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: None,
            cap: DEFAULT_VERIFY_CAP,
        }
    }
}

/// Feasible `(n, alpha)` cells for `n_min <= n <= n_max`, sorted.
pub fn cells(n_min: usize, n_max: usize) -> Vec<ExtremalParams> {
    (n_min..=n_max)
        .flat_map(|n| {
            feasible_alpha(n).map(move |a| ExtremalParams::new(n, a).expect("feasible by range"))
        })
        .collect()
}

/// Folds every family `T(n, alpha)` with `n_min <= n <= n_max`. Cells run
/// in parallel; the record order never depends on scheduling.
pub fn verify(n_min: usize, n_max: usize, options: VerifyOptions) -> Result<VerificationReport> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::Domain("need 2 <= n_min <= n_max"));
    }
    if n_max > options.cap {
        return Err(Error::TooLarge {
            order: n_max,
            cap: options.cap,
        });
    }
    let cells = cells(n_min, n_max);
    let run = || -> Result<Vec<ExtremalRecord>> {
        cells
            .par_iter()
            .map(|p| verify_cell_with_cap(p, options.cap))
            .collect()
    };
    let records = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|_| Error::Domain("could not start the worker pool"))?
            .install(run)?,
        None => run()?,
    };
    Ok(VerificationReport { records })
}

/// Brute-force fold of one family.
pub fn verify_cell(params: &ExtremalParams) -> Result<ExtremalRecord> {
    verify_cell_with_cap(params, DEFAULT_VERIFY_CAP)
}

fn verify_cell_with_cap(params: &ExtremalParams, cap: usize) -> Result<ExtremalRecord> {
    let start = Instant::now();
    let query = TreeFamilyQuery::with_alpha(params.order(), params.alpha());
    let mut family_size = 0;
    let mut best = f64::NEG_INFINITY;
    let mut runner_up = f64::NEG_INFINITY;
    // Members currently within tolerance of the best value.
    let mut ties: Vec<(f64, CanonicalCode)> = Vec::new();
    for tree in enumerate_family_with_cap(query, cap)? {
        family_size += 1;
        let score = sombor_index(&tree);
        if score < best - TOLERANCE {
            runner_up = runner_up.max(score);
            continue;
        }
        best = best.max(score);
        ties.push((score, tree.canonical_code()));
        ties.retain(|&(s, _)| {
            let keep = best - s <= TOLERANCE;
            if !keep {
                runner_up = runner_up.max(s);
            }
            keep
        });
    }
    let mut maximizer_codes: Vec<CanonicalCode> = ties.into_iter().map(|(_, c)| c).collect();
    maximizer_codes.sort_unstable();
    maximizer_codes.dedup();

    Ok(ExtremalRecord {
        order: params.order(),
        alpha: params.alpha(),
        family_size,
        closed_form: closed_form_max(params),
        brute_force_max: best,
        maximizer_count: maximizer_codes.len(),
        maximizer_code: maximizer_codes
            .into_iter()
            .next()
            .expect("every feasible family is nonempty"),
        expected_code: construct_t_star(params).canonical_code(),
        margin_to_second: best - runner_up,
        wall_time: start.elapsed(),
    })
}

/// Fixed-point rendering used in every report: nine decimals, `inf` for
/// infinity.
pub fn format_real(x: f64) -> String {
    format!("{x:.9}")
}

/// CSV table, one row per cell, LF line endings. Contains no timings, so
/// equal reports render byte-identically.
pub fn render_csv(report: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for r in &report.records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.order,
            r.alpha,
            r.family_size,
            format_real(r.closed_form),
            format_real(r.brute_force_max),
            r.maximizer_count,
            format_real(r.margin_to_second),
            r.passes()
        )
        .unwrap();
    }
    out
}

/// Human-readable summary with per-cell timings.
pub fn render_summary(report: &VerificationReport) -> String {
    let mut out = String::new();
    for r in &report.records {
        writeln!(
            out,
            "n={:<3} alpha={:<3} family={:<7} max={} closed={} margin={} time={:.3}ms {}",
            r.order,
            r.alpha,
            r.family_size,
            format_real(r.brute_force_max),
            format_real(r.closed_form),
            format_real(r.margin_to_second),
            r.wall_time.as_secs_f64() * 1e3,
            if r.passes() { "PASS" } else { "FAIL" }
        )
        .unwrap();
    }
    let failed = report.records.iter().filter(|r| !r.passes()).count();
    writeln!(
        out,
        "{} cells, {} failed, {:.3}s total: {}",
        report.records.len(),
        failed,
        report.total_time().as_secs_f64(),
        if report.passes() { "PASS" } else { "FAIL" }
    )
    .unwrap();
    out
}
