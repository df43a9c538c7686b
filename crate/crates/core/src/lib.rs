//! Exact codimension-one Minkowski weights on fans over 3-polytopes.
//!
//! The fan over a polytope has one ray per vertex and one 2-cone per edge.
//! A Minkowski weight assigns a scalar to every edge so that, at every ray,
//! the weighted sum of neighbouring rays is parallel to the ray itself.
//! Everything here is exact over `Q(√5)` (or another real quadratic field);
//! the linear algebra is generic over [`Scalar`], so the same code also runs
//! over `BigRational`, `f64` or `f32` for cross-checks.

pub mod balance;
pub mod field;
pub mod figure;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod skeleton;

#[doc(hidden)]
pub mod cli;

pub use field::{QuadraticScalar, Radicand};
pub use scalar::Scalar;

/// Exact rationals.
pub type Rational = num_rational::BigRational;

pub type Skeleton = skeleton::PolytopeSkeleton<QuadraticScalar>;
pub type Weight = balance::WeightVector<QuadraticScalar>;
pub type Basis = balance::EchelonBasis<QuadraticScalar>;
pub type SolutionSet = balance::AffineSolutionSet<QuadraticScalar>;
pub type System = balance::BalancingSystem<QuadraticScalar>;
pub type Point = linalg::Vec3<QuadraticScalar>;

pub type SkeletonF64 = skeleton::PolytopeSkeleton<f64>;
pub type WeightF64 = balance::WeightVector<f64>;
pub type SkeletonQ = skeleton::PolytopeSkeleton<Rational>;
