//! Schubert calculus on Grassmannians and the Nef cone of the Hilbert scheme
//! of degree-`d` hypersurfaces in linear spaces `P^m ⊂ G(k,n)`.
//!
//! The polynomial and cone kernels are generic over their scalar; the
//! aliases below fix the exact big-rational instances used everywhere else.

pub mod cli;
pub mod combinat;
pub mod cones;
pub mod error;
pub mod hilbpoly;
pub mod hilbscheme;
mod json;
pub mod scalar;
pub mod schubring;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use combinat::{binom_comb, lr_coefficient, partitions_in_box, BoxConstraint, Partition};
pub use error::{Error, Result};
pub use schubring::{RingContext, SchubertExpansion};

/// Polynomial with exact rational coefficients.
pub type QPolynomial = hilbpoly::Polynomial<BigRational>;

/// Polynomial with `f64` coefficients, for approximate evaluation.
pub type FloatPolynomial = hilbpoly::Polynomial<f64>;

/// Rational polyhedral cone with arbitrary-precision integer generators.
pub type RationalCone = cones::Cone<BigInt>;

/// Divisor/curve intersection table with arbitrary-precision entries.
pub type PairingMatrix = cones::Pairing<BigInt>;
