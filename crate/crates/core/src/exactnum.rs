//! Exact arithmetic in the quadratic field Q(√5).
//!
//! Every value is stored as `rat + irr·√5` with both coefficients held as
//! reduced [`BigRational`]s, so equality is structural and identities such as
//! `α·β = −1` hold exactly.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept with a positive denominator and
/// coprime numerator/denominator.
pub type BigRational = num_rational::BigRational;

/// An element `rat + irr·√5` of Q(√5).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadRat {
    rat: BigRational,
    irr: BigRational,
}

impl QuadRat {
    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        Self { rat, irr }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self {
            rat: BigRational::from_integer(n.into()),
            irr: BigRational::zero(),
        }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        Self {
            rat,
            irr: BigRational::zero(),
        }
    }

    /// `√5`, which is also `α − β`.
    pub fn sqrt5() -> Self {
        Self {
            rat: BigRational::zero(),
            irr: BigRational::one(),
        }
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn irr(&self) -> &BigRational {
        &self.irr
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// `a − b√5`.
    pub fn conj(&self) -> Self {
        Self {
            rat: self.rat.clone(),
            irr: -&self.irr,
        }
    }

    /// Field norm `a² − 5b²`, i.e. `x · conj(x)`.
    pub fn norm(&self) -> BigRational {
        let five = BigRational::from_integer(BigInt::from(5));
        &self.rat * &self.rat - five * &self.irr * &self.irr
    }

    /// Multiplicative inverse `(a − b√5) / (a² − 5b²)`.
    pub fn inv(&self) -> Result<Self> {
        if self.irr.is_zero() {
            if self.rat.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Self::from_rational(self.rat.recip()));
        }
        // √5 is irrational, so the norm only vanishes at zero.
        let norm = self.norm();
        Ok(Self {
            rat: &self.rat / &norm,
            irr: -&self.irr / &norm,
        })
    }

    /// Exact `e`-th power by square-and-multiply. `x⁰ = 1`, including `0⁰`.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(pow_unsigned(base, e.unsigned_abs()))
    }

    /// Returns the rational value, failing if the `√5` coefficient is nonzero.
    pub fn as_rational(&self) -> Result<BigRational> {
        if self.irr.is_zero() {
            Ok(self.rat.clone())
        } else {
            Err(Error::Irrational(self.to_string()))
        }
    }

    /// Returns the integer value when the element is a rational integer.
    pub fn as_integer(&self) -> Result<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(Error::InvalidParameter(format!("{r} is not an integer")))
        }
    }
}

fn pow_unsigned(mut base: QuadRat, mut e: u64) -> QuadRat {
    let mut acc = QuadRat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// The golden ratio `α = (1 + √5)/2`.
pub fn alpha() -> QuadRat {
    let half = BigRational::new(1.into(), 2.into());
    QuadRat::new(half.clone(), half)
}

/// The conjugate root `β = (1 − √5)/2`.
pub fn beta() -> QuadRat {
    let half = BigRational::new(1.into(), 2.into());
    QuadRat::new(half.clone(), -half)
}

impl Zero for QuadRat {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for QuadRat {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl From<i64> for QuadRat {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for QuadRat {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn add(self, rhs: &QuadRat) -> QuadRat {
        QuadRat {
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
        }
    }
}

impl Add for QuadRat {
    type Output = QuadRat;

    fn add(self, rhs: QuadRat) -> QuadRat {
        QuadRat {
            rat: self.rat + rhs.rat,
            irr: self.irr + rhs.irr,
        }
    }
}

impl AddAssign<&QuadRat> for QuadRat {
    fn add_assign(&mut self, rhs: &QuadRat) {
        if !rhs.rat.is_zero() {
            self.rat += &rhs.rat;
        }
        if !rhs.irr.is_zero() {
            self.irr += &rhs.irr;
        }
    }
}

impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn sub(self, rhs: &QuadRat) -> QuadRat {
        QuadRat {
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
        }
    }
}

impl Sub for QuadRat {
    type Output = QuadRat;

    fn sub(self, rhs: QuadRat) -> QuadRat {
        &self - &rhs
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        QuadRat {
            rat: -self.rat,
            irr: -self.irr,
        }
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;

    fn neg(self) -> QuadRat {
        -self.clone()
    }
}

impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;

    fn mul(self, rhs: &QuadRat) -> QuadRat {
        if self.is_zero() || rhs.is_zero() {
            return QuadRat::zero();
        }
        // Rational fast paths keep the dense matrix kernel cheap on integer inputs.
        match (self.irr.is_zero(), rhs.irr.is_zero()) {
            (true, true) => QuadRat::from_rational(&self.rat * &rhs.rat),
            (true, false) => QuadRat {
                rat: &self.rat * &rhs.rat,
                irr: &self.rat * &rhs.irr,
            },
            (false, true) => QuadRat {
                rat: &self.rat * &rhs.rat,
                irr: &self.irr * &rhs.rat,
            },
            (false, false) => {
                let five = BigRational::from_integer(BigInt::from(5));
                QuadRat {
                    rat: &self.rat * &rhs.rat + five * &self.irr * &rhs.irr,
                    irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
                }
            }
        }
    }
}

impl Mul for QuadRat {
    type Output = QuadRat;

    fn mul(self, rhs: QuadRat) -> QuadRat {
        &self * &rhs
    }
}

impl Mul<&QuadRat> for QuadRat {
    type Output = QuadRat;

    fn mul(self, rhs: &QuadRat) -> QuadRat {
        &self * rhs
    }
}

impl Add<&QuadRat> for QuadRat {
    type Output = QuadRat;

    fn add(mut self, rhs: &QuadRat) -> QuadRat {
        self += rhs;
        self
    }
}

impl Sub<&QuadRat> for QuadRat {
    type Output = QuadRat;

    fn sub(self, rhs: &QuadRat) -> QuadRat {
        &self - rhs
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let irr_abs = self.irr.abs();
        let irr_str = if irr_abs.is_one() {
            "√5".to_string()
        } else {
            format!("{irr_abs}·√5")
        };
        match (self.rat.is_zero(), self.irr.is_negative()) {
            (true, false) => write!(f, "{irr_str}"),
            (true, true) => write!(f, "-{irr_str}"),
            (false, false) => write!(f, "{} + {irr_str}", self.rat),
            (false, true) => write!(f, "{} - {irr_str}", self.rat),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> QuadRat {
        QuadRat::new(
            BigRational::new(a.0.into(), a.1.into()),
            BigRational::new(b.0.into(), b.1.into()),
        )
    }

    #[test]
    fn alpha_plus_beta_is_one() {
        assert_eq!(&alpha() + &beta(), QuadRat::one());
        let x = q((3, 7), (-2, 9));
        assert_eq!(&x + &QuadRat::zero(), x);
        assert_eq!(&q((1, 2), (1, 2)) + &q((1, 2), (-1, 2)), QuadRat::one());
    }

    #[test]
    fn products() {
        assert_eq!(&alpha() * &beta(), QuadRat::from_integer(-1));
        assert_eq!(&alpha() * &alpha(), q((3, 2), (1, 2)));
        let x = q((5, 3), (1, 4));
        assert_eq!(&x * &QuadRat::one(), x);
    }

    #[test]
    fn inverses() {
        assert_eq!(alpha().inv().unwrap(), -beta());
        assert_eq!(alpha().inv().unwrap(), q((-1, 2), (1, 2)));
        assert_eq!(QuadRat::one().inv().unwrap(), QuadRat::one());
        assert_eq!(beta().inv().unwrap(), q((-1, 2), (-1, 2)));
        assert_eq!(QuadRat::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn powers() {
        assert_eq!(alpha().pow(2).unwrap(), q((3, 2), (1, 2)));
        assert_eq!(alpha().pow(-1).unwrap(), -beta());
        assert_eq!(alpha().pow(0).unwrap(), QuadRat::one());
        // F_10 = 55 by iterating the recurrence.
        let (mut a, mut b) = (0i64, 1i64);
        for _ in 0..10 {
            (a, b) = (b, a + b);
        }
        assert_eq!(a, 55);
        let diff = &alpha().pow(10).unwrap() - &beta().pow(10).unwrap();
        assert_eq!(diff, q((0, 1), (a, 1)));
        assert_eq!(QuadRat::zero().pow(-3), Err(Error::DivisionByZero));
        assert_eq!(QuadRat::zero().pow(3).unwrap(), QuadRat::zero());
    }

    #[test]
    fn rational_extraction() {
        assert_eq!(
            QuadRat::from_integer(7).as_rational().unwrap(),
            BigRational::from_integer(7.into())
        );
        assert_eq!(
            (&alpha() + &beta()).as_rational().unwrap(),
            BigRational::one()
        );
        assert!(matches!(alpha().as_rational(), Err(Error::Irrational(_))));
        assert!(q((1, 2), (0, 1)).as_integer().is_err());
    }

    #[test]
    fn golden_constants() {
        let diff = &alpha() - &beta();
        assert_eq!(diff, QuadRat::sqrt5());
        for root in [alpha(), beta()] {
            let p = &(&(&root * &root) - &root) - &QuadRat::one();
            assert!(p.is_zero());
        }
    }

    #[test]
    fn display() {
        assert_eq!(alpha().to_string(), "1/2 + 1/2·√5");
        assert_eq!(beta().to_string(), "1/2 - 1/2·√5");
        assert_eq!(QuadRat::sqrt5().to_string(), "√5");
        assert_eq!(QuadRat::from_integer(-4).to_string(), "-4");
    }
}
