//! Exact arithmetic for skew polynomial rings `F[x; sigma, delta]` over
//! division rings: Ore multiplication, one-sided Euclidean division,
//! GCRD/LCLM, evaluation, multiplicity sequences and their validation,
//! Hasse derivatives, conjugacy-class polynomials, and Hermite/Lagrange
//! interpolation through confluent Vandermonde systems.
//!
//! Four coefficient rings are provided in [`rings`]: finite fields with a
//! power-of-Frobenius twist, the rational quaternions, the Gaussian
//! rationals twisted by conjugation, and rational function fields over a
//! prime field carrying the derivation `c * d/dz`. Everything else is
//! generic over the [`ring::SkewRing`] contract, so a fifth coefficient
//! ring only needs to implement that trait.

pub mod error;
pub mod interp;
pub mod linalg;
pub mod multiplicity;
pub mod poly;
pub mod ring;
pub mod rings;
pub mod text;

pub use error::{Error, Result};
pub use poly::{Degree, PointEntry, PointSet, SkewPoly, SkewPolyRing};
pub use ring::{RingId, SkewRing};
pub use text::AnyRing;

/// Skew polynomials over `gf(p^m)` with a power-of-Frobenius twist.
pub type FinitePolyRing = SkewPolyRing<rings::FiniteField>;
/// Skew polynomials over the rational quaternions (identity twist).
pub type QuatPolyRing = SkewPolyRing<rings::Quaternions>;
/// Skew polynomials over the Gaussian rationals twisted by conjugation.
pub type GaussPolyRing = SkewPolyRing<rings::GaussianRationals>;
/// Skew polynomials over `F_p(z)` with the derivation `c * d/dz`.
pub type RatFunPolyRing = SkewPolyRing<rings::RatFunField>;
