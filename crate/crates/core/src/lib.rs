//! Exact symplectic Hodge theory on the invariant complex of a Lie algebra.
//!
//! Given structure equations and an invariant symplectic form `ω`, this crate
//! computes the Lefschetz decomposition, the symplectic star, `d^Λ`, the
//! de Rham, `d^Λ`, `d + d^Λ` and `dd^Λ` cohomologies, the subgroups
//! `H^(r,s)_ω` of classes represented by `ω^r ∧ (primitive s-form)`, and
//! decides the Hard Lefschetz Condition and the `dd^Λ`-lemma. All arithmetic
//! is exact.
//!
//! The core types are generic over an exact [`Field`]; the aliases below fix
//! the arbitrary-precision rationals used everywhere else.

pub mod cohomology;
pub mod exterior;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod notation;
pub mod random;
pub mod report;
pub mod scalar;
pub mod symplectic;
pub mod verify;

pub use scalar::Field;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;
pub type QMatrix = linalg::Matrix<Rational>;
pub type QSubspace = linalg::Subspace<Rational>;
pub type QForm = exterior::Form<Rational>;
pub type QOperator = exterior::GradedOperator<Rational>;
pub type QLieAlgebra = lie::LieAlgebra<Rational>;

pub type QSymplectic = symplectic::SymplecticStructure<Rational>;
