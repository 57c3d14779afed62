//! Exact-arithmetic toolkit for FKM isoparametric foliations.
//!
//! The crate builds symmetric Clifford systems and their Cartan–Münzner
//! quartics, decides foliation preservation for complex and quaternionic
//! structures, runs the weight-lattice pipeline that counts congruence classes
//! of Hopf structures for the two `(8,7)` foliations on `S^31`, and reproduces
//! the census of codimension one polar foliations of `CP^15` and `HP^7`.
//!
//! Core routines are generic over [`Scalar`] / [`Field`]; the aliases below
//! fix the arbitrary-precision rationals used everywhere by default.

pub mod census;
pub mod clifford;
pub mod exactmat;
pub mod munzner;
pub mod quartic;
pub mod sampling;
pub mod scalar;
pub mod symmetry;
pub mod weights;

pub use scalar::{Field, Scalar};

/// Arbitrary-precision rational, the default scalar.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer, for fraction-free routines.
pub type Integer = num_bigint::BigInt;

pub type RationalMatrix = exactmat::Matrix<Rational>;
pub type IntegerMatrix = exactmat::Matrix<Integer>;
pub type RationalCliffordSystem = clifford::CliffordSystem<Rational>;
pub type RationalForm = munzner::CartanMunznerForm<Rational>;
pub type RationalTorusElement = weights::TorusElement<Rational>;
pub type RationalWeightSystem = weights::WeightSystem<Rational>;
