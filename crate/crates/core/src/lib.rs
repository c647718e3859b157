//! Exact symbolic computation with finite free BiHom-Lie conformal
//! superalgebras over ℚ.
//!
//! Coefficients are polynomials in `D` (standing for ∂) and λ-slots
//! `X1, X2, ...`. Algebras are given by generators, two twisting maps and a
//! bracket table; everything else (axiom checks, constructions, modules,
//! cochains, derivation solvers) is computed exactly from that data.

pub mod algebra;
mod ansatz;
pub mod constructions;
pub mod derivations;
pub mod error;
pub mod gallery;
pub mod kernel;
pub mod parity;
pub mod rep;

pub use algebra::{
    apply_endo, check_algebra, check_associative, check_associative_with, is_ideal,
    is_subalgebra, Algebra, AssocConformal, AssocLaw, Axiom, Basis, CheckReport, Element,
    EndoMap, LValue, Table, Vector, Violation,
};
pub use constructions::SuperAlgebraFD;
pub use derivations::ConfMap;
pub use error::{Error, Result};
pub use kernel::{Monomial, Poly, PolyMatrix, Scalar, Var, D};
pub use parity::Parity;
pub use rep::{Cochain, OOperator, RepModule};
