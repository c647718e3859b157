//! Modules over BiHom-Lie conformal superalgebras, cochains and their
//! differential, degree-truncated cohomology, and O-operators.

pub mod cochain;
pub mod cohomology;
pub mod differential;
pub mod module;
pub mod ooperator;

pub use cochain::{check_cochain, Cochain};
pub use cohomology::{solve_cochain_space, solve_cocycles, truncated_cohomology_report, TruncationReport};
pub use differential::{
    check_d_squared, check_d_squared_with, differential, differential_with,
    find_differential_variant, ActionSign, DifferentialVariant, PanelCase, ZeroRule,
};
pub use module::{check_module, RepModule};
pub use ooperator::{
    check_o_operator, homomorphism_residual, induced_bracket, search_o_operators, OOperator,
};
