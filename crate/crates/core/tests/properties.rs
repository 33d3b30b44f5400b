use loopchain::closedpower::{matrix_power_closed, power_block, power_det_closed};
use loopchain::fib::{binet_exact, fib};
use loopchain::spectral::{transform_inverse, transform_matrix, JordanDecomposition};
use loopchain::{alpha, beta, build_adjacency, BigRational, ExactMatrix, QuadRat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn quad() -> impl Strategy<Value = QuadRat> {
    (rational(), rational()).prop_map(|(a, b)| QuadRat::new(a, b))
}

fn nonzero_quad() -> impl Strategy<Value = QuadRat> {
    quad().prop_filter("nonzero", |x| !x.is_zero())
}

fn small_int_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..5).prop_flat_map(|n| {
        prop::collection::vec(-4i64..5, n * n).prop_map(move |v| {
            ExactMatrix::from_fn(n, n, |i, j| QuadRat::from_integer(v[i * n + j]))
        })
    })
}

fn is_canonical(r: &BigRational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

proptest! {
    #[test]
    fn field_axioms(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        let p = &x * &y;
        prop_assert!(is_canonical(p.rat()) && is_canonical(p.irr()));
    }

    #[test]
    fn inverse_is_two_sided(x in nonzero_quad()) {
        let inv = x.inv().unwrap();
        prop_assert_eq!(&x * &inv, QuadRat::one());
        prop_assert_eq!(&inv * &x, QuadRat::one());
        prop_assert_eq!(x.norm(), (&x * &x.conj()).as_rational().unwrap());
    }

    #[test]
    fn power_exponents_add(x in nonzero_quad(), a in -20i64..=20, b in -20i64..=20) {
        prop_assert_eq!(x.pow(a + b).unwrap(), &x.pow(a).unwrap() * &x.pow(b).unwrap());
    }

    #[test]
    fn closed_powers_form_a_group(k in 1usize..5, r in -10i64..=10, s in -10i64..=10) {
        let lhs = matrix_power_closed(k, r).unwrap().mul(&matrix_power_closed(k, s).unwrap()).unwrap();
        prop_assert_eq!(lhs, matrix_power_closed(k, r + s).unwrap());
    }

    #[test]
    fn closed_power_determinant(k in 1usize..5, r in -15i64..=15) {
        let det = matrix_power_closed(k, r).unwrap().det().unwrap();
        prop_assert_eq!(det, QuadRat::from_integer(power_det_closed(k, r)));
        let a_det = build_adjacency(k).unwrap().det().unwrap();
        prop_assert_eq!(a_det.pow(r).unwrap(), QuadRat::from_integer(power_det_closed(k, r)));
    }

    #[test]
    fn power_block_invariants(r in -2000i64..2000) {
        let b = power_block(r);
        prop_assert_eq!(&b.e12, &b.e21);
        let cassini = if r % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(b.det(), cassini);
        if r >= 0 {
            prop_assert!(!b.e11.is_negative() && !b.e12.is_negative() && !b.e22.is_negative());
        }
    }

    #[test]
    fn faddeev_leverrier_constant_term_is_signed_det(m in small_int_matrix()) {
        let p = m.char_poly().unwrap();
        let det = m.det().unwrap().as_rational().unwrap();
        let n = m.rows();
        let constant = p.coeffs().first().cloned().unwrap_or_else(BigRational::zero);
        let sign = if n % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        prop_assert_eq!(constant, sign * det);
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.coeffs()[n].is_one());
    }

    #[test]
    fn dense_inverse_round_trip(m in small_int_matrix()) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(m.rows()));
                prop_assert!(!m.det().unwrap().is_zero());
            }
            Err(_) => prop_assert!(m.det().unwrap().is_zero()),
        }
    }
}

#[test]
fn golden_ratio_identities() {
    assert_eq!(&alpha() + &beta(), QuadRat::one());
    assert_eq!(&alpha() * &beta(), -QuadRat::one());
    let diff = &alpha() - &beta();
    assert!(diff.rat().is_zero());
    assert!(diff.irr().is_one());
}

#[test]
fn fibonacci_recurrence_and_reflection() {
    for n in -300..=300 {
        assert_eq!(fib(n + 2), fib(n + 1) + fib(n), "n = {n}");
    }
    for n in 0..=300i64 {
        let sign = if n % 2 == 0 { -1 } else { 1 };
        assert_eq!(fib(-n), fib(n) * sign);
    }
    for n in -100..=100 {
        let expected = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(fib(n - 1) * fib(n + 1) - fib(n) * fib(n), BigInt::from(expected));
    }
}

#[test]
fn binet_agrees_with_fast_doubling() {
    for n in -200..=200 {
        assert_eq!(binet_exact(n), QuadRat::from_integer(fib(n)));
    }
}

#[test]
fn powers_of_symmetric_matrices_stay_symmetric() {
    for k in 1..=4 {
        let a = build_adjacency(k).unwrap();
        for r in -12..=12 {
            assert!(a.pow(r).unwrap().is_symmetric(), "k={k} r={r}");
            let dense = a.pow(r).unwrap();
            let inverse = a.pow(-r).unwrap();
            assert_eq!(dense.mul(&inverse).unwrap(), ExactMatrix::identity(2 * k));
        }
    }
}

#[test]
fn analytic_transform_inverse_equals_gauss_jordan() {
    for k in 1..=8 {
        assert_eq!(
            transform_inverse(k).unwrap(),
            transform_matrix(k).unwrap().inverse().unwrap(),
            "k = {k}"
        );
    }
}

#[test]
fn spectral_route_matches_closed_form() {
    for k in 1..=4 {
        let d = JordanDecomposition::new(k).unwrap();
        for r in -8..=8 {
            assert_eq!(d.power(r).unwrap(), matrix_power_closed(k, r).unwrap());
        }
    }
}

#[test]
fn eigenvector_residuals_vanish() {
    for k in 1..=8 {
        let d = JordanDecomposition::new(k).unwrap();
        assert!(loopchain::spectral::is_diagonal(d.j()));
        for column in d.eigen_residuals().unwrap() {
            assert!(column.iter().all(QuadRat::is_zero));
        }
    }
}

#[test]
fn closed_determinant_matches_elimination_up_to_16() {
    for k in 1..=16 {
        let det = build_adjacency(k).unwrap().det().unwrap().as_integer().unwrap();
        assert_eq!(det, BigInt::from(loopchain::closedpower::det_closed(k).unwrap()));
    }
}
