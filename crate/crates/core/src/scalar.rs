//! Scalar traits the polynomial and cone kernels are generic over.

use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A field-like coefficient type: exact rationals, or `f64`/`f32` when an
/// approximate evaluation is enough.
pub trait Scalar: Num + Clone + Debug + FromPrimitive {}

impl<T> Scalar for T where T: Num + Clone + Debug + FromPrimitive {}

/// Integer type backing exact rational arithmetic (`BigInt`, `i64`, ...).
pub trait ExactInteger: Integer + Signed + Clone + Debug {}

impl<T> ExactInteger for T where T: Integer + Signed + Clone + Debug {}

/// Exact rationals over an [`ExactInteger`].
pub type Rational<T> = Ratio<T>;
