//! Closed-form integer powers of the loop-chain adjacency matrix.
//!
//! Every power of `A(k)` is block diagonal with `k` copies of
//!
//! ```text
//! [[F(r−1), F(r)  ],
//!  [F(r),   F(r+1)]]
//! ```
//!
//! and this single form holds for negative `r` too once `F` is extended by
//! the negafibonacci rule. Computing it costs one fast-doubling chain.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::QuadRat;
use crate::exmatrix::{ExactMatrix, Polynomial};
use crate::fib::fib_pair;

/// The 2×2 diagonal block of `Aʳ`, with entries in matrix order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerBlock {
    pub r: i64,
    pub e11: BigInt,
    pub e12: BigInt,
    pub e21: BigInt,
    pub e22: BigInt,
}

impl PowerBlock {
    pub fn det(&self) -> BigInt {
        &self.e11 * &self.e22 - &self.e12 * &self.e21
    }

    /// Entry at 0-based position `(row, col)` within the block.
    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        match (row, col) {
            (0, 0) => &self.e11,
            (0, 1) => &self.e12,
            (1, 0) => &self.e21,
            (1, 1) => &self.e22,
            _ => panic!("block index ({row}, {col}) out of range"),
        }
    }

    pub fn as_array(&self) -> [[BigInt; 2]; 2] {
        [
            [self.e11.clone(), self.e12.clone()],
            [self.e21.clone(), self.e22.clone()],
        ]
    }
}

/// `[[F(r−1), F(r)], [F(r), F(r+1)]]` for any signed `r`.
pub fn power_block(r: i64) -> PowerBlock {
    let (f_r, f_next) = fib_pair(r);
    let f_prev = &f_next - &f_r;
    PowerBlock {
        r,
        e11: f_prev,
        e12: f_r.clone(),
        e21: f_r,
        e22: f_next,
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParameter("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `A(k)ʳ` assembled from [`power_block`].
pub fn matrix_power_closed(k: usize, r: i64) -> Result<ExactMatrix> {
    check_k(k)?;
    let block = power_block(r);
    let cells = block
        .as_array()
        .map(|row| row.map(QuadRat::from_integer));
    let mut m = ExactMatrix::zeros(2 * k, 2 * k);
    for b in 0..k {
        for (i, row) in cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if !cell.is_zero() {
                    m.set(2 * b + i, 2 * b + j, cell.clone());
                }
            }
        }
    }
    Ok(m)
}

/// `det A(k) = (−1)ᵏ`.
pub fn det_closed(k: usize) -> Result<i64> {
    check_k(k)?;
    Ok(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// Entry `(i, j)` of `A(k)ʳ`, 1-based, without building the matrix.
pub fn entry_closed(k: usize, i: usize, j: usize, r: i64) -> Result<BigInt> {
    check_k(k)?;
    let n = 2 * k;
    for v in [i, j] {
        if !(1..=n).contains(&v) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if i.div_ceil(2) != j.div_ceil(2) {
        return Ok(BigInt::zero());
    }
    Ok(power_block(r).entry((i - 1) % 2, (j - 1) % 2).clone())
}

/// `x² − x − 1`.
pub fn golden_quadratic() -> Polynomial {
    Polynomial::from_integers(&[-1, -1, 1])
}

/// Characteristic polynomial of `A(k)` in closed form, `(x² − x − 1)ᵏ`.
pub fn char_poly_closed(k: usize) -> Result<Polynomial> {
    check_k(k)?;
    let e = u32::try_from(k).map_err(|_| Error::InvalidParameter(format!("k = {k} too large")))?;
    Ok(golden_quadratic().pow(e))
}

/// `(−1)^(k·r)`, the determinant of `A(k)ʳ`.
pub fn power_det_closed(k: usize, r: i64) -> BigInt {
    if (k as i128 * r as i128) % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
