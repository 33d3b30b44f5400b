//! Exact integer powers of the adjacency matrix of the loop-chain graph.
//!
//! The loop-chain graph with `k` components has adjacency matrix `A(k)`, a
//! block-diagonal matrix of `k` copies of `[[0, 1], [1, 1]]`. Every integer
//! power of it, negative ones included, is block diagonal with Fibonacci
//! entries:
//!
//! ```
//! use loopchain::closedpower::power_block;
//!
//! let b = power_block(-5);
//! assert_eq!((b.e11, b.e12, b.e22), ((-8).into(), 5.into(), (-3).into()));
//! ```
//!
//! The crate computes those closed forms and, independently, the dense exact
//! linear algebra needed to check them: binary exponentiation, Gauss–Jordan
//! inversion, determinants, Faddeev–LeVerrier characteristic polynomials and
//! a brute-force walk counter. All arithmetic is exact, over Q(√5).

pub mod bench;
pub mod cli;
pub mod closedpower;
mod error;
pub mod exactnum;
pub mod exmatrix;
pub mod fib;
pub mod graphfam;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{alpha, beta, BigRational, QuadRat};
pub use exmatrix::{ExactMatrix, Polynomial};
pub use graphfam::{build_adjacency, LoopChainGraph, WalkQuery};

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graph.md")]
    mod graph {}
    #[doc = include_str!("../../../book/src/quadratic-field.md")]
    mod quadratic_field {}
    #[doc = include_str!("../../../book/src/fibonacci.md")]
    mod fibonacci {}
    #[doc = include_str!("../../../book/src/characteristic-polynomial.md")]
    mod characteristic_polynomial {}
    #[doc = include_str!("../../../book/src/diagonalization.md")]
    mod diagonalization {}
    #[doc = include_str!("../../../book/src/powers.md")]
    mod powers {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
