//! The loop-chain graph family: `k` disjoint components, each an edge
//! `{2i−1, 2i}` with a loop at the even vertex `2i`.
//!
//! Vertices are 1-based throughout this module.
//!
//! Two loop conventions coexist here. In the adjacency matrix a loop is a
//! single `1` on the diagonal, so odd rows sum to 1 and even rows to 2. For
//! [`LoopChainGraph::degree`] a loop counts twice, giving degrees 1 and 3.
//! Walks traverse a loop as one edge, which is the reading under which walk
//! counts equal matrix-power entries.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::QuadRat;
use crate::exmatrix::ExactMatrix;

/// Longest walk [`LoopChainGraph::count_walks`] will enumerate by default.
pub const DEFAULT_WALK_CAP: u64 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LoopChainGraph {
    k: usize,
}

/// A request for the number of walks of exactly `length` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkQuery {
    pub from: usize,
    pub to: usize,
    pub length: u64,
}

impl LoopChainGraph {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        Ok(Self { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.k
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.vertex_count()).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    /// Component (1-based) that vertex `v` belongs to.
    pub fn component_of(v: usize) -> usize {
        v.div_ceil(2)
    }

    /// Out-neighbors of `v`, listing the loop once for even vertices.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(if v % 2 == 1 { vec![v + 1] } else { vec![v - 1, v] })
    }

    /// Graph degree with loops counted twice: 1 for odd, 3 for even vertices.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(if v % 2 == 1 { 1 } else { 3 })
    }

    /// The `2k × 2k` adjacency matrix: `a[i][i+1] = a[i+1][i] = 1` for odd `i`,
    /// `a[i][i] = 1` for even `i`.
    pub fn adjacency(&self) -> ExactMatrix {
        let n = self.vertex_count();
        let mut a = ExactMatrix::zeros(n, n);
        for i in (1..n).step_by(2) {
            a.set(i - 1, i, QuadRat::one());
            a.set(i, i - 1, QuadRat::one());
            a.set(i, i, QuadRat::one());
        }
        a
    }

    /// Walk count by exhaustive enumeration, capped at [`DEFAULT_WALK_CAP`].
    pub fn count_walks(&self, q: WalkQuery) -> Result<BigUint> {
        self.count_walks_capped(q, DEFAULT_WALK_CAP)
    }

    pub fn count_walks_capped(&self, q: WalkQuery, cap: u64) -> Result<BigUint> {
        self.check_vertex(q.from)?;
        self.check_vertex(q.to)?;
        if q.length > cap {
            return Err(Error::CapExceeded {
                length: q.length,
                cap,
            });
        }
        let mut count = 0u64;
        self.walk(q.from, q.to, q.length, &mut count);
        Ok(BigUint::from(count))
    }

    fn walk(&self, at: usize, to: usize, remaining: u64, count: &mut u64) {
        if remaining == 0 {
            if at == to {
                *count += 1;
            }
            return;
        }
        // check_vertex already ran on the start vertex; neighbors stay in range.
        for next in self.neighbors(at).unwrap_or_default() {
            self.walk(next, to, remaining - 1, count);
        }
    }
}

/// Adjacency matrix of the loop-chain graph with `k` components.
pub fn build_adjacency(k: usize) -> Result<ExactMatrix> {
    Ok(LoopChainGraph::new(k)?.adjacency())
}
