//! Dense exact matrices over Q(√5).
//!
//! This kernel knows nothing about the loop-chain structure: products are
//! plain triple loops, inverses come from Gauss–Jordan elimination and the
//! characteristic polynomial from the Faddeev–LeVerrier recurrence. That
//! independence is what lets it serve as the oracle for the closed forms in
//! [`crate::closedpower`] and [`crate::spectral`].
//!
//! Indices passed to [`ExactMatrix::get`] and friends are 0-based.

use std::fmt;
use std::ops::Index;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{BigRational, QuadRat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QuadRat>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<QuadRat>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![QuadRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                QuadRat::one()
            } else {
                QuadRat::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> QuadRat) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let entries = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Diagonal matrix with the given diagonal.
    pub fn diagonal(diag: &[QuadRat]) -> Self {
        Self::from_fn(diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                QuadRat::zero()
            }
        })
    }

    /// Builds an integer matrix from rows of `i64`.
    ///
    /// Panics if the rows are ragged or empty.
    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| QuadRat::from_integer(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &QuadRat {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: QuadRat) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[QuadRat] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[QuadRat] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<QuadRat> {
        (0..self.rows).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Result<QuadRat> {
        self.require_square()?;
        let mut t = QuadRat::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        Ok(t)
    }

    pub fn scale(&self, s: &QuadRat) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Number of entries that are not zero.
    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// Converts every entry to an integer, failing on irrational or fractional entries.
    pub fn to_integer_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(QuadRat::as_integer).collect())
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact product `self · rhs`.
    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = vec![QuadRat::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            let out_row = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, b) in out_row.iter_mut().zip(rhs.row(l)) {
                    if !b.is_zero() {
                        *o += &(a * b);
                    }
                }
            }
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: out,
        })
    }

    /// Exact `r`-th power by repeated squaring; negative powers invert first.
    pub fn pow(&self, r: i64) -> Result<ExactMatrix> {
        Ok(self
            .pow_until(r, None)?
            .expect("no deadline means the power always completes"))
    }

    /// Like [`ExactMatrix::pow`], but gives up with `Ok(None)` once `deadline`
    /// has passed. The deadline is checked between multiplications.
    pub fn pow_until(&self, r: i64, deadline: Option<Instant>) -> Result<Option<ExactMatrix>> {
        self.require_square()?;
        let expired = || deadline.is_some_and(|d| Instant::now() >= d);
        let mut base = if r < 0 { self.inverse()? } else { self.clone() };
        let mut e = r.unsigned_abs();
        let mut acc = ExactMatrix::identity(self.rows);
        while e > 0 {
            if expired() {
                return Ok(None);
            }
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(Some(acc))
    }

    /// Exact inverse by Gauss–Jordan elimination, pivoting on the first
    /// nonzero entry of each column.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut work: Vec<Vec<QuadRat>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<QuadRat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { QuadRat::one() } else { QuadRat::zero() })
                    .collect()
            })
            .collect();

        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !work[r][col].is_zero())
                .ok_or(Error::Singular)?;
            work.swap(col, pivot_row);
            inv.swap(col, pivot_row);

            let pivot_inv = work[col][col].inv()?;
            for x in work[col].iter_mut().chain(inv[col].iter_mut()) {
                if !x.is_zero() {
                    *x = &*x * &pivot_inv;
                }
            }

            let (pivot_work, pivot_inv_row) = (work[col].clone(), inv[col].clone());
            for r in (0..n).filter(|&r| r != col) {
                let factor = work[r][col].clone();
                if factor.is_zero() {
                    continue;
                }
                eliminate(&mut work[r], &pivot_work, &factor);
                eliminate(&mut inv[r], &pivot_inv_row, &factor);
            }
        }

        Ok(ExactMatrix {
            rows: n,
            cols: n,
            entries: inv.into_iter().flatten().collect(),
        })
    }

    /// Exact determinant as the signed product of elimination pivots.
    pub fn det(&self) -> Result<QuadRat> {
        self.require_square()?;
        let n = self.rows;
        let mut work: Vec<Vec<QuadRat>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = QuadRat::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !work[r][col].is_zero()) else {
                return Ok(QuadRat::zero());
            };
            if pivot_row != col {
                work.swap(col, pivot_row);
                det = -det;
            }
            let pivot = work[col][col].clone();
            let pivot_inv = pivot.inv()?;
            det = &det * &pivot;
            let pivot_vals = work[col].clone();
            for row in work.iter_mut().skip(col + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] * &pivot_inv;
                eliminate(row, &pivot_vals, &factor);
            }
        }
        Ok(det)
    }

    /// Monic characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier.
    ///
    /// Requires every entry to be rational.
    pub fn char_poly(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        let a: Vec<BigRational> = self
            .entries
            .iter()
            .map(QuadRat::as_rational)
            .collect::<Result<_>>()?;

        // coeffs[d] is the coefficient of x^d.
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        // a_m holds A·M_k; M_1 = I so A·M_1 = A.
        let mut m = vec![BigRational::zero(); n * n];
        for i in 0..n {
            m[i * n + i] = BigRational::one();
        }
        let mut a_m = a.clone();
        for k in 1..=n {
            if k > 1 {
                // M_k = A·M_{k−1} + c_{n−k+1}·I
                m = a_m;
                for i in 0..n {
                    m[i * n + i] += &coeffs[n - k + 1];
                }
                a_m = rational_mul(&a, &m, n);
            }
            let trace: BigRational = (0..n).map(|i| a_m[i * n + i].clone()).sum();
            coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
        }
        Ok(Polynomial::new(coeffs))
    }
}

fn eliminate(row: &mut [QuadRat], pivot: &[QuadRat], factor: &QuadRat) {
    for (x, p) in row.iter_mut().zip(pivot) {
        if !p.is_zero() {
            *x = &*x - &(factor * p);
        }
    }
}

fn rational_mul(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for l in 0..n {
            let x = &a[i * n + l];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[l * n + j];
                if !y.is_zero() {
                    out[i * n + j] += x * y;
                }
            }
        }
    }
    out
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = QuadRat;

    fn index(&self, (row, col): (usize, usize)) -> &QuadRat {
        self.get(row, col)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row = &cells[i * self.cols..(i + 1) * self.cols];
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Polynomial with rational coefficients, lowest degree first.
///
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn one() -> Self {
        Self::from_integers(&[1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// Integer coefficients, lowest degree first.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::InvalidParameter(format!("{c} is not an integer")))
                }
            })
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;

        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = !mag.is_one() || d == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}
