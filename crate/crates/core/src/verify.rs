//! Batch cross-checks of every closed form against its oracle.
//!
//! For each `k ≤ k_max` the harness compares
//! - the closed-form power with dense binary exponentiation,
//! - the closed-form power with `T·Jʳ·T⁻¹`,
//! - `T·T⁻¹ = I` and `T·J·T⁻¹ = A`,
//! - single entries with brute-force walk counts (`0 ≤ r ≤ min(r_max, cap)`),
//! - `(−1)ᵏ` with the elimination determinant,
//! - `(x² − x − 1)ᵏ` with Faddeev–LeVerrier,
//!
//! over every `|r| ≤ r_max`. Checks for different `k` run on the rayon pool;
//! the report keeps them in `(k, check)` order.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::closedpower::{char_poly_closed, det_closed, entry_closed, matrix_power_closed};
use crate::error::Result;
use crate::exactnum::QuadRat;
use crate::exmatrix::ExactMatrix;
use crate::graphfam::{LoopChainGraph, WalkQuery, DEFAULT_WALK_CAP};
use crate::spectral::{verify_similarity, JordanDecomposition};

/// Largest `k` whose characteristic polynomial is cross-checked (`2k ≤ 64`).
pub const CHAR_POLY_MAX_K: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    fn from_outcome(name: String, outcome: Result<Option<String>>) -> Self {
        match outcome {
            Ok(None) => Self {
                name,
                passed: true,
                detail: None,
            },
            Ok(Some(detail)) => Self {
                name,
                passed: false,
                detail: Some(detail),
            },
            Err(e) => Self {
                name,
                passed: false,
                detail: Some(format!("error: {e}")),
            },
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}", self.name)?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub k_max: usize,
    pub r_max: i64,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs every check against [`matrix_power_closed`].
pub fn run(k_max: usize, r_max: i64) -> Report {
    run_with(k_max, r_max, matrix_power_closed)
}

/// Runs every check with `closed` standing in for the closed-form power.
pub fn run_with<F>(k_max: usize, r_max: i64, closed: F) -> Report
where
    F: Fn(usize, i64) -> Result<ExactMatrix> + Sync,
{
    let r_max = r_max.max(0);
    let checks = (1..=k_max)
        .into_par_iter()
        .map(|k| checks_for_k(k, r_max, &closed))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report {
        k_max,
        r_max,
        checks,
    }
}

fn checks_for_k<F>(k: usize, r_max: i64, closed: &F) -> Vec<CheckResult>
where
    F: Fn(usize, i64) -> Result<ExactMatrix>,
{
    let range = format!("k={k} r={}..={r_max}", -r_max);
    let mut out = vec![
        CheckResult::from_outcome(
            format!("closed-form vs dense power {range}"),
            closed_vs_dense(k, r_max, closed),
        ),
        CheckResult::from_outcome(
            format!("closed-form vs T*J^r*T^-1 {range}"),
            closed_vs_spectral(k, r_max, closed),
        ),
        CheckResult::from_outcome(
            format!("similarity T*J*T^-1 = A, T*T^-1 = I k={k}"),
            verify_similarity(k).map(|ok| (!ok).then(|| "identity does not hold".to_string())),
        ),
    ];
    let walk_max = r_max.min(DEFAULT_WALK_CAP as i64);
    out.push(CheckResult::from_outcome(
        format!("entries vs walk enumeration k={k} r=0..={walk_max}"),
        entries_vs_walks(k, walk_max),
    ));
    out.push(CheckResult::from_outcome(
        format!("det (-1)^k vs elimination k={k}"),
        det_check(k),
    ));
    if k <= CHAR_POLY_MAX_K {
        out.push(CheckResult::from_outcome(
            format!("char poly (x^2-x-1)^k vs Faddeev-LeVerrier k={k}"),
            char_poly_check(k),
        ));
    }
    out
}

fn closed_vs_dense<F>(k: usize, r_max: i64, closed: &F) -> Result<Option<String>>
where
    F: Fn(usize, i64) -> Result<ExactMatrix>,
{
    let a = LoopChainGraph::new(k)?.adjacency();
    for r in -r_max..=r_max {
        if closed(k, r)? != a.pow(r)? {
            return Ok(Some(format!("mismatch at r={r}")));
        }
    }
    Ok(None)
}

fn closed_vs_spectral<F>(k: usize, r_max: i64, closed: &F) -> Result<Option<String>>
where
    F: Fn(usize, i64) -> Result<ExactMatrix>,
{
    let d = JordanDecomposition::new(k)?;
    for r in -r_max..=r_max {
        if closed(k, r)? != d.power(r)? {
            return Ok(Some(format!("mismatch at r={r}")));
        }
    }
    Ok(None)
}

fn entries_vs_walks(k: usize, r_max: i64) -> Result<Option<String>> {
    let g = LoopChainGraph::new(k)?;
    let n = g.vertex_count();
    for length in 0..=r_max.max(0) as u64 {
        for from in 1..=n {
            for to in 1..=n {
                let walks = BigInt::from(g.count_walks(WalkQuery { from, to, length })?);
                let closed = entry_closed(k, from, to, length as i64)?;
                if walks != closed {
                    return Ok(Some(format!(
                        "({from},{to}) r={length}: walks {walks}, closed form {closed}"
                    )));
                }
            }
        }
    }
    Ok(None)
}

fn det_check(k: usize) -> Result<Option<String>> {
    let oracle = LoopChainGraph::new(k)?.adjacency().det()?;
    let closed = QuadRat::from_integer(det_closed(k)?);
    Ok((oracle != closed).then(|| format!("elimination gave {oracle}, expected {closed}")))
}

fn char_poly_check(k: usize) -> Result<Option<String>> {
    let oracle = LoopChainGraph::new(k)?.adjacency().char_poly()?;
    let closed = char_poly_closed(k)?;
    Ok((oracle != closed).then(|| format!("Faddeev-LeVerrier gave {oracle}, expected {closed}")))
}
