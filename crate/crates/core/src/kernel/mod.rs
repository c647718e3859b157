//! Exact arithmetic: rationals, polynomials in `D` and the λ-slots, linear
//! algebra over ℚ and over the univariate ring ℚ[D].

pub mod linalg;
pub mod poly;
pub mod polymat;
pub mod scalar;
pub mod upoly;

pub use linalg::{rank, rref_kernel, solve_affine, MatrixQ, PreparedSystem, VectorQ};
pub use poly::{Monomial, Poly, Var, D};
pub use polymat::{hnf_membership, PolyMatrix};
pub use scalar::Scalar;
pub use upoly::UniPoly;
