use hilbnef::hilbpoly::{
    binomial_polynomial, fiber_dimension, hilb_poly, hilbert_function_oracle,
    through_point_dimension,
};
use hilbnef::{binom_comb, QPolynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[test]
fn oracle_agrees_with_polynomial_from_degree_d() {
    for d in 1..=5u32 {
        for m in 1..=5u32 {
            let poly: QPolynomial = hilb_poly(d, m);
            for t in d..=d + 6 {
                let v = poly.eval_int(t as i64);
                assert_eq!(
                    v,
                    BigRational::from(BigInt::from(hilbert_function_oracle(d, m, t))),
                    "d={d} m={m} T={t}"
                );
            }
            assert_eq!(poly.degree(), Some(m as usize - 1));
            assert_eq!(
                poly.leading_coeff(),
                BigRational::new(BigInt::from(d), factorial(m - 1))
            );
        }
    }
}

#[test]
fn euler_characteristic_is_one_when_d_at_most_m() {
    for m in 1..=6u32 {
        for d in 1..=m {
            assert!(
                hilb_poly::<BigRational>(d, m).eval_int(0).is_one(),
                "d={d} m={m}"
            );
        }
    }
}

#[test]
fn denominators_divide_m_factorial() {
    for m in 0..=8u32 {
        for shift in -6..=6i64 {
            let poly = binomial_polynomial::<BigRational>(shift, m);
            for c in poly.coeffs() {
                assert!(
                    factorial(m).is_multiple_of(c.denom()),
                    "shift={shift} m={m}"
                );
            }
        }
    }
}

#[test]
fn binomial_polynomial_matches_combinatorial_binomial_at_nonnegative_top() {
    for m in 0..=6u32 {
        for shift in -6..=6i64 {
            let poly = binomial_polynomial::<BigRational>(shift, m);
            for t in 0..=10i64 {
                if t + shift >= 0 {
                    let want = BigInt::from(binom_comb(t + shift, m as i64));
                    assert_eq!(poly.eval_int(t), BigRational::from(want));
                }
            }
        }
    }
}

#[test]
fn fiber_hyperplane_has_codimension_one() {
    for d in 1..=6 {
        for m in 1..=6 {
            assert!((fiber_dimension(d, m) - through_point_dimension(d, m)).is_one());
        }
    }
}

fn poly(coeffs: &[i64], den: i64) -> QPolynomial {
    QPolynomial::from_coeffs(
        coeffs
            .iter()
            .map(|&c| BigRational::new(BigInt::from(c), BigInt::from(den)))
            .collect(),
    )
}

proptest! {
    #[test]
    fn ring_laws(a in proptest::collection::vec(-9i64..9, 0..5),
                 b in proptest::collection::vec(-9i64..9, 0..5),
                 c in proptest::collection::vec(-9i64..9, 0..5),
                 den in 1i64..5,
                 t in -5i64..5) {
        let (a, b, c) = (poly(&a, den), poly(&b, 1), poly(&c, 2));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        let at = BigRational::from(BigInt::from(t));
        prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
        prop_assert!(!a.coeffs().last().is_some_and(|x| x.is_zero()));
    }

    #[test]
    fn json_round_trip(a in proptest::collection::vec(-99i64..99, 0..6), den in 1i64..12) {
        let p = poly(&a, den);
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<QPolynomial>(&s).unwrap(), p);
    }
}
