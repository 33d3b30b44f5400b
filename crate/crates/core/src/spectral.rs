//! Exact diagonalization of the loop-chain adjacency matrix.
//!
//! `A(k) = T · J · T⁻¹` where `J = diag(α, …, α, β, …, β)` (each root `k`
//! times). Column `c ≤ k` of `T` is the α-eigenvector `(1, α)` of block
//! `k − c + 1`, and column `k + c` the β-eigenvector `(1, β)` of the same
//! block, so the first α-column lands in the last block. `T⁻¹` is assembled
//! from the per-block inverse
//!
//! ```text
//! [[1, 1], [α, β]]⁻¹ = 1/(α − β) · [[−β, 1], [α, −1]]
//! ```
//!
//! rather than by elimination, so that comparing it with
//! [`ExactMatrix::inverse`] is a real check.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{alpha, beta, QuadRat};
use crate::exmatrix::ExactMatrix;
use crate::graphfam::build_adjacency;

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParameter("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// 0-based row index of the first vertex of the block hosting column `c`
/// (`0 ≤ c < k`).
fn block_row(k: usize, c: usize) -> usize {
    2 * (k - 1 - c)
}

/// Eigenvalue attached to 0-based column `col` of `T`.
pub fn eigenvalue(k: usize, col: usize) -> QuadRat {
    if col < k {
        alpha()
    } else {
        beta()
    }
}

/// `diag(α, …, α, β, …, β)` of size `2k`.
pub fn jordan_form(k: usize) -> Result<ExactMatrix> {
    check_k(k)?;
    let diag: Vec<QuadRat> = (0..2 * k).map(|c| eigenvalue(k, c)).collect();
    Ok(ExactMatrix::diagonal(&diag))
}

/// The eigenvector matrix `T`.
pub fn transform_matrix(k: usize) -> Result<ExactMatrix> {
    check_k(k)?;
    let mut t = ExactMatrix::zeros(2 * k, 2 * k);
    for c in 0..k {
        let row = block_row(k, c);
        t.set(row, c, QuadRat::one());
        t.set(row + 1, c, alpha());
        t.set(row, k + c, QuadRat::one());
        t.set(row + 1, k + c, beta());
    }
    Ok(t)
}

/// The inverse of [`transform_matrix`], built block by block.
pub fn transform_inverse(k: usize) -> Result<ExactMatrix> {
    check_k(k)?;
    let scale = (&alpha() - &beta()).inv()?;
    let a = alpha();
    let b = beta();
    let mut t_inv = ExactMatrix::zeros(2 * k, 2 * k);
    for c in 0..k {
        let col = block_row(k, c);
        t_inv.set(c, col, -(&b * &scale));
        t_inv.set(c, col + 1, scale.clone());
        t_inv.set(k + c, col, &a * &scale);
        t_inv.set(k + c, col + 1, -scale.clone());
    }
    Ok(t_inv)
}

/// `J`, `T` and `T⁻¹` for one member of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanDecomposition {
    k: usize,
    j: ExactMatrix,
    t: ExactMatrix,
    t_inv: ExactMatrix,
}

impl JordanDecomposition {
    pub fn new(k: usize) -> Result<Self> {
        Ok(Self {
            k,
            j: jordan_form(k)?,
            t: transform_matrix(k)?,
            t_inv: transform_inverse(k)?,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn j(&self) -> &ExactMatrix {
        &self.j
    }

    pub fn t(&self) -> &ExactMatrix {
        &self.t
    }

    pub fn t_inv(&self) -> &ExactMatrix {
        &self.t_inv
    }

    /// `Jʳ`, computed entrywise on the diagonal.
    pub fn j_pow(&self, r: i64) -> Result<ExactMatrix> {
        let a = alpha().pow(r)?;
        let b = beta().pow(r)?;
        let diag: Vec<QuadRat> = (0..2 * self.k)
            .map(|c| if c < self.k { a.clone() } else { b.clone() })
            .collect();
        Ok(ExactMatrix::diagonal(&diag))
    }

    /// `T · Jʳ · T⁻¹`.
    pub fn power(&self, r: i64) -> Result<ExactMatrix> {
        self.t.mul(&self.j_pow(r)?)?.mul(&self.t_inv)
    }

    /// `A·T_c − λ_c·T_c` for every column `c`; all zero when `T` holds eigenvectors.
    pub fn eigen_residuals(&self) -> Result<Vec<Vec<QuadRat>>> {
        let a = build_adjacency(self.k)?;
        let at = a.mul(&self.t)?;
        Ok((0..2 * self.k)
            .map(|c| {
                let lambda = eigenvalue(self.k, c);
                (0..2 * self.k)
                    .map(|i| at.get(i, c) - &(&lambda * self.t.get(i, c)))
                    .collect()
            })
            .collect())
    }
}

/// Checks `T·T⁻¹ = I` and `T·J·T⁻¹ = A(k)` as exact equalities.
pub fn verify_similarity(k: usize) -> Result<bool> {
    let d = JordanDecomposition::new(k)?;
    let identity = d.t.mul(&d.t_inv)? == ExactMatrix::identity(2 * k);
    let similar = d.t.mul(&d.j)?.mul(&d.t_inv)? == build_adjacency(k)?;
    Ok(identity && similar)
}

/// True when `J` has no off-diagonal entries, i.e. no Jordan block is larger than 1×1.
pub fn is_diagonal(m: &ExactMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m.get(i, j).is_zero()))
}
