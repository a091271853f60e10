//! Univariate polynomials over a generic scalar, the Hilbert polynomial of a
//! degree-`d` hypersurface in `P^m`, and a monomial-counting oracle for it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::combinat::binom_comb;
use crate::scalar::{ExactInteger, Scalar};

/// Polynomial in one variable `T`; `coeffs[i]` multiplies `T^i`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `T`.
    pub fn variable() -> Self {
        Polynomial {
            coeffs: vec![S::zero(), S::one()],
        }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> S {
        self.coeffs.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn eval_int(&self, t: i64) -> S {
        self.eval(&S::from_i64(t).expect("scalar type must represent small integers"))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(S, S) -> S) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..len).map(|i| f(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;

    fn add(self, rhs: Self) -> Polynomial<S> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;

    fn sub(self, rhs: Self) -> Polynomial<S> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;

    fn neg(self) -> Polynomial<S> {
        &Polynomial::zero() - self
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;

    fn mul(self, rhs: Self) -> Polynomial<S> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<S: Scalar> $tr for Polynomial<S> {
            type Output = Polynomial<S>;

            fn $f(self, rhs: Self) -> Polynomial<S> {
                (&self).$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `binom(T + shift, m)` read as a polynomial in `T`:
/// `(T+shift)(T+shift-1)...(T+shift-m+1) / m!`.
pub fn binomial_polynomial<S: Scalar>(shift: i64, m: u32) -> Polynomial<S> {
    let int = |v: i64| S::from_i64(v).expect("scalar type must represent small integers");
    let mut acc = Polynomial::constant(S::one());
    for i in 0..m as i64 {
        let factor = Polynomial::from_coeffs(vec![int(shift - i), S::one()]);
        acc = (&acc * &factor).scale(&(S::one() / int(i + 1)));
    }
    acc
}

/// Hilbert polynomial `binom(T+m, m) - binom(T+m-d, m)` of a degree-`d`
/// hypersurface in `P^m`.
pub fn hilb_poly<S: Scalar>(d: u32, m: u32) -> Polynomial<S> {
    let m_shift = m as i64;
    &binomial_polynomial(m_shift, m) - &binomial_polynomial(m_shift - d as i64, m)
}

/// Number of monomials of degree `degree` in `vars` variables, by enumerating
/// exponent vectors one at a time.
fn count_monomials(vars: u32, degree: u32) -> u64 {
    fn walk(vars_left: u32, remaining: u32) -> u64 {
        if vars_left == 1 {
            return 1;
        }
        (0..=remaining)
            .map(|e| walk(vars_left - 1, remaining - e))
            .sum()
    }
    if vars == 0 {
        return u64::from(degree == 0);
    }
    walk(vars, degree)
}

/// Hilbert function of `k[x_0..x_m] / (f)` with `deg f = d`, counted directly:
/// degree-`t` monomials minus the multiples of `f` in that degree.
pub fn hilbert_function_oracle(d: u32, m: u32, t: u32) -> u64 {
    let all = count_monomials(m + 1, t);
    let multiples = if t >= d {
        count_monomials(m + 1, t - d)
    } else {
        0
    };
    all - multiples
}

/// Dimension of the projective space of degree-`d` hypersurfaces in `P^m`.
pub fn fiber_dimension(d: u32, m: u32) -> BigUint {
    binom_comb((m + d) as i64, d as i64) - BigUint::one()
}

/// Dimension of the hypersurfaces in `P^m` through a fixed point.
pub fn through_point_dimension(d: u32, m: u32) -> BigUint {
    binom_comb((m + d) as i64, d as i64) - BigUint::from(2u32)
}

impl<T> Serialize for Polynomial<Ratio<T>>
where
    T: ExactInteger + fmt::Display,
{
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        #[derive(Serialize)]
        struct Repr {
            coeffs: Vec<[String; 2]>,
        }
        Repr {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| [c.numer().to_string(), c.denom().to_string()])
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T> Deserialize<'de> for Polynomial<Ratio<T>>
where
    T: ExactInteger + FromStr,
    Ratio<T>: Scalar,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<[String; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let parse = |s: &str| {
            s.parse::<T>()
                .map_err(|_| de::Error::custom(format!("invalid integer {s:?}")))
        };
        let coeffs = repr
            .coeffs
            .iter()
            .map(|[n, d]| {
                let den = parse(d)?;
                if den.is_zero() {
                    return Err(de::Error::custom("zero denominator"));
                }
                Ok(Ratio::new(parse(n)?, den))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

/// Renders e.g. `3/2T^2 + 3/2T + 1`.
impl<T> fmt::Display for Polynomial<Ratio<T>>
where
    T: ExactInteger + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Ratio::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = abs.is_one();
            if i == 0 || !unit {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPolynomial;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn qp(c: &[(i64, i64)]) -> QPolynomial {
        Polynomial::from_coeffs(c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn binomial_polynomial_examples() {
        assert_eq!(
            binomial_polynomial::<BigRational>(2, 2),
            qp(&[(1, 1), (3, 2), (1, 2)])
        );
        assert_eq!(binomial_polynomial::<BigRational>(0, 0), qp(&[(1, 1)]));
        assert_eq!(
            binomial_polynomial::<BigRational>(-1, 2),
            qp(&[(1, 1), (-3, 2), (1, 2)])
        );
    }

    #[test]
    fn hilbert_polynomial_examples() {
        assert_eq!(hilb_poly::<BigRational>(3, 2), qp(&[(0, 1), (3, 1)]));
        assert_eq!(
            hilb_poly::<BigRational>(3, 3),
            qp(&[(1, 1), (3, 2), (3, 2)])
        );
        assert_eq!(hilb_poly::<BigRational>(1, 1), qp(&[(1, 1)]));
        assert_eq!(hilb_poly::<BigRational>(3, 3).eval_int(4), q(31, 1));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(hilbert_function_oracle(3, 2, 3), 9);
        assert_eq!(hilbert_function_oracle(3, 3, 4), 31);
        assert_eq!(hilbert_function_oracle(5, 2, 2), 6);
    }

    #[test]
    fn fiber_dimensions() {
        assert_eq!(fiber_dimension(3, 3), BigUint::from(19u32));
        assert_eq!(fiber_dimension(3, 2), BigUint::from(9u32));
        assert_eq!(through_point_dimension(3, 3), BigUint::from(18u32));
    }

    #[test]
    fn float_scalar_evaluates_approximately() {
        let p = hilb_poly::<f64>(3, 3);
        assert!((p.eval(&4.0) - 31.0).abs() < 1e-9);
    }

    #[test]
    fn ring_operations() {
        let t = QPolynomial::variable();
        let one = QPolynomial::constant(q(1, 1));
        let sq = &(&t + &one) * &(&t - &one);
        assert_eq!(sq, qp(&[(-1, 1), (0, 1), (1, 1)]));
        assert!((&sq - &sq).is_zero());
        assert_eq!((-&one).coeff(0), q(-1, 1));
    }

    #[test]
    fn display() {
        assert_eq!(hilb_poly::<BigRational>(3, 2).to_string(), "3T");
        assert_eq!(
            hilb_poly::<BigRational>(3, 3).to_string(),
            "3/2T^2 + 3/2T + 1"
        );
        assert_eq!(qp(&[(-1, 1), (0, 1), (-1, 1)]).to_string(), "-T^2 - 1");
    }

    #[test]
    fn json_form() {
        let p = hilb_poly::<BigRational>(3, 3);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":[["1","1"],["3","2"],["3","2"]]}"#);
        let back: QPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<QPolynomial>(r#"{"coeffs":[["1","0"]]}"#).is_err());
    }
}
