//! Finite free BiHom-Lie conformal superalgebras: generators, λ-bracket
//! tables, evaluation and axiom checking.

pub mod basis;
pub mod check;
pub mod structure;
pub mod sub;
pub mod table;
pub mod vector;

pub use basis::Basis;
pub use check::{
    check_algebra, check_associative, check_associative_with, jacobi_residual, skew_residual,
    AssocLaw, Axiom, CheckReport, Violation,
};
pub use structure::{apply_endo, Algebra, AssocConformal, EndoMap};
pub use sub::{is_ideal, is_subalgebra};
pub use table::Table;
pub use vector::{partial, Element, LValue, Vector};
