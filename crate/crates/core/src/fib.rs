//! Fibonacci numbers for every signed index.
//!
//! Non-negative indices go through fast doubling,
//!
//! ```text
//! F(2m)   = F(m) · (2·F(m+1) − F(m))
//! F(2m+1) = F(m)² + F(m+1)²
//! ```
//!
//! and negative indices are reflected with `F(−n) = (−1)^(n+1) · F(n)`, which
//! is what running `F(n) = F(n+2) − F(n+1)` backwards produces.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{alpha, beta, QuadRat};

/// `(F(n), F(n+1))` for `n ≥ 0`.
fn doubling(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if n == 0 {
        return (a, b);
    }
    for bit in (0..64 - n.leading_zeros()).rev() {
        let two_b_minus_a = (&b << 1) - &a;
        let c = &a * two_b_minus_a;
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = &c + &d;
            a = d;
        }
    }
    (a, b)
}

fn reflect(value: BigInt, magnitude: u64) -> BigInt {
    if magnitude.is_multiple_of(2) {
        -value
    } else {
        value
    }
}

/// `F(n)` for any signed `n`, with `F(0) = 0` and `F(1) = 1`.
pub fn fib(n: i64) -> BigInt {
    if n >= 0 {
        doubling(n as u64).0
    } else {
        let m = n.unsigned_abs();
        reflect(doubling(m).0, m)
    }
}

/// `(F(n), F(n+1))` from a single doubling chain.
pub fn fib_pair(n: i64) -> (BigInt, BigInt) {
    if n >= 0 {
        return doubling(n as u64);
    }
    // n = −m with m ≥ 1: F(−m) and F(−(m−1)) both come from (F(m−1), F(m)).
    let m = n.unsigned_abs();
    let (f_m_minus_1, f_m) = doubling(m - 1);
    (reflect(f_m, m), reflect(f_m_minus_1, m - 1))
}

/// Binet's form `(αⁿ − βⁿ)/(α − β)` evaluated exactly in Q(√5).
///
/// The result always has zero `√5` part and equals [`fib`]`(n)`.
pub fn binet_exact(n: i64) -> QuadRat {
    let a = alpha().pow(n).expect("alpha is nonzero");
    let b = beta().pow(n).expect("beta is nonzero");
    let inv_sqrt5 = QuadRat::sqrt5().inv().expect("sqrt5 is nonzero");
    &(&a - &b) * &inv_sqrt5
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_and_small_values() {
        assert_eq!(fib(0), BigInt::from(0));
        assert_eq!(fib(1), BigInt::from(1));
        assert_eq!(fib(4), BigInt::from(3));
        assert_eq!(fib(5), BigInt::from(5));
        assert_eq!(fib(6), BigInt::from(8));
        assert_eq!(fib(-1), BigInt::from(1));
        assert_eq!(fib(-4), BigInt::from(-3));
        assert_eq!(fib(-5), BigInt::from(5));
    }

    #[test]
    fn pairs_straddle_zero() {
        for n in -40..40 {
            assert_eq!(fib_pair(n), (fib(n), fib(n + 1)), "n = {n}");
        }
    }

    #[test]
    fn binet_small() {
        assert_eq!(binet_exact(0), QuadRat::from_integer(0));
        assert_eq!(binet_exact(4), QuadRat::from_integer(3));
        assert_eq!(binet_exact(-5), QuadRat::from_integer(5));
    }

    #[test]
    fn large_index_digits() {
        // F(300) has 63 decimal digits.
        assert_eq!(fib(300).to_string().len(), 63);
        assert_eq!(
            fib(100).to_string(),
            "354224848179261915075"
        );
    }
}
