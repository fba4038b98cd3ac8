//! Exact quadratic discrepancy of binary codes and finite metric spaces.
//!
//! Values are exact rationals. The spectral formulas, MacWilliams transforms
//! and the simplex solver are generic over [`Scalar`] and also run in `f64`.

pub mod codes;
pub mod combinatorics;
pub mod discrepancy;
pub mod display;
pub mod error;
pub mod gf2;
pub mod identities;
pub mod kernels;
pub mod krawtchouk;
pub mod lp_bounds;
pub mod metric_space;
pub mod report;
pub mod scalar;
pub mod simplex;

pub use codes::{code_from_id, BinaryCode, DistanceDistribution, DualDistribution};
pub use error::{Error, Result};
pub use lp_bounds::DualCertificate;
pub use metric_space::FiniteMetricSpace;
pub use report::IdentityCheck;
pub use scalar::Scalar;

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

pub type ExactLp = simplex::LinearProgram<Rational>;

pub type FloatLp = simplex::LinearProgram<f64>;

pub type ExactLpResult = simplex::LPResult<Rational>;
