//! Exact computational engine for Clifford algebras Cl(p,q), the finite
//! groups G(p,q) formed by their signed basis blades, gamma-matrix spinor
//! representations over the Gaussian integers, and the finite CPT
//! (extended automorphism) groups of the Dirac field.
//!
//! Everything is integer arithmetic: blade products are sign-tracked bit
//! set operations, matrices have Gaussian-integer entries, and group
//! structure is established by explicit Cayley tables and verified
//! isomorphism witnesses.

pub mod blade;
pub mod ext;
pub mod gamma;
pub mod group;
pub mod matrix;
pub mod verify;

pub use blade::{
    AlgebraSignature, BladeError, CenterType, IndexSet, Phase, RingClass, SignedBlade,
};
pub use gamma::{
    brauer_weyl_basis, fixture_basis, rep_of_blade, schur_scalar, solve_intertwiner,
    verify_intertwiner, BladeRepTable, FixtureName, GammaBasis,
};
pub use matrix::{pauli, Gaussian, GaussianMatrix, MatrixError};
