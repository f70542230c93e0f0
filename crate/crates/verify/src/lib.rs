//! Acceptance suite: ten numbered criteria, each checked against an
//! independent oracle or an exact expected value.

pub mod criteria;
pub mod oracle;
pub mod sample;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

/// Wall-clock budget for criteria 1 to 9 together.
pub const SUITE_BUDGET: Duration = Duration::from_secs(300);

pub const TITLES: [&str; 10] = [
    "explicit ideal metric",
    "unital Farey embedding",
    "doubling law and growth",
    "trace seed and chain",
    "fusing/metric equivalence",
    "Effros-Shen identification",
    "r-approach",
    "coherent-ideal oracle",
    "quantum-metric numerics",
    "end-to-end suite",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub results: Vec<CriterionResult>,
    pub seconds: f64,
}

/// Runs criterion `id` in `1..=9`.
pub fn run_criterion(id: usize) -> CriterionResult {
    let start = Instant::now();
    let outcome = match id {
        1 => criteria::remark(),
        2 => criteria::farey_unital(),
        3 => criteria::doubling(),
        4 => criteria::trace_seed(),
        5 => criteria::fusing(),
        6 => criteria::effros_shen(),
        7 => criteria::r_approach(),
        8 => criteria::coherent_ideals(),
        9 => criteria::quantum_metric(),
        _ => Err(format!(
            "no criterion {id}; criterion 10 is the whole suite"
        )),
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    CriterionResult {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Runs 1 to 9, then scores 10 on their combined result and runtime.
pub fn run_all() -> Report {
    let start = Instant::now();
    let mut results: Vec<CriterionResult> = (1..=9).map(run_criterion).collect();
    let elapsed = start.elapsed();
    let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    let in_budget = elapsed < SUITE_BUDGET;
    let detail = match (failed.is_empty(), in_budget) {
        (true, true) => format!(
            "criteria 1-9 pass in {:.1} s (budget {} s)",
            elapsed.as_secs_f64(),
            SUITE_BUDGET.as_secs()
        ),
        (false, _) => format!("failing criteria {failed:?}"),
        (true, false) => format!(
            "{:.1} s exceeds the {} s budget",
            elapsed.as_secs_f64(),
            SUITE_BUDGET.as_secs()
        ),
    };
    results.push(CriterionResult {
        id: 10,
        title: TITLES[9],
        passed: failed.is_empty() && in_budget,
        detail,
        seconds: elapsed.as_secs_f64(),
    });
    Report {
        results,
        seconds: elapsed.as_secs_f64(),
    }
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    /// One line per criterion: id, PASS/FAIL, title, seconds, detail.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:>2}  {}  {:<28} {:>7.2}s  {}",
                r.id,
                if r.passed { "PASS" } else { "FAIL" },
                r.title,
                r.seconds,
                r.detail
            );
        }
        out
    }
}
