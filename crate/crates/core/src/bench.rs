//! Wall-clock comparison of the closed-form power against dense exponentiation.

use std::time::{Duration, Instant};

use crate::closedpower::matrix_power_closed;
use crate::error::Result;
use crate::graphfam::LoopChainGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Closed,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        }
    }
}

/// One CSV row: `None` for `median_ns` means the run exceeded its time budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub method: Method,
    pub k: usize,
    pub r: i64,
    pub median_ns: Option<u128>,
}

impl BenchRow {
    pub fn median_field(&self) -> String {
        self.median_ns
            .map_or_else(|| "timeout".to_string(), |ns| ns.to_string())
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{}",
            self.method.name(),
            self.k,
            self.r,
            self.median_field()
        )
    }
}

pub const CSV_HEADER: &str = "method,k,r,median_ns";

/// Median of a non-empty sample; the lower middle element for even lengths.
pub fn median(samples: &mut [u128]) -> u128 {
    samples.sort_unstable();
    samples[(samples.len() - 1) / 2]
}

/// Times `reps` closed-form evaluations.
pub fn time_closed(k: usize, r: i64, reps: usize) -> Result<u128> {
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let m = matrix_power_closed(k, r)?;
        samples.push(start.elapsed().as_nanos());
        drop(m);
    }
    Ok(median(&mut samples))
}

/// Times `reps` dense exponentiations of `A(k)`, returning `None` once the
/// total time exceeds `budget`.
pub fn time_oracle(k: usize, r: i64, reps: usize, budget: Duration) -> Result<Option<u128>> {
    let a = LoopChainGraph::new(k)?.adjacency();
    let deadline = Instant::now() + budget;
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        if a.pow_until(r, Some(deadline))?.is_none() || Instant::now() > deadline {
            return Ok(None);
        }
        samples.push(start.elapsed().as_nanos());
    }
    Ok(Some(median(&mut samples)))
}

/// Both rows of the comparison, closed form first.
pub fn run(k: usize, r: i64, reps: usize, budget: Duration) -> Result<[BenchRow; 2]> {
    let closed = time_closed(k, r, reps)?;
    let oracle = time_oracle(k, r, reps, budget)?;
    Ok([
        BenchRow {
            method: Method::Closed,
            k,
            r,
            median_ns: Some(closed),
        },
        BenchRow {
            method: Method::Oracle,
            k,
            r,
            median_ns: oracle,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        assert_eq!(median(&mut [5]), 5);
        assert_eq!(median(&mut [9, 1, 5]), 5);
        assert_eq!(median(&mut [4, 1, 3, 2]), 2);
    }

    #[test]
    fn csv_rows() {
        let row = BenchRow {
            method: Method::Oracle,
            k: 3,
            r: -2,
            median_ns: None,
        };
        assert_eq!(row.to_csv(), "oracle,3,-2,timeout");
    }

    #[test]
    fn zero_budget_times_out() {
        assert_eq!(time_oracle(2, 10, 1, Duration::ZERO).unwrap(), None);
    }
}
