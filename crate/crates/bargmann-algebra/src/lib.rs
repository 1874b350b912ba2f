//! Symbolic Bargmann-space machinery: polynomial spinors, the osp(2,2)
//! generators, the QES operator L and the coupled first-order systems in
//! ξ = z1 z2 and in the shifted variable x.
//!
//! Spinor convention: Π = σ-σ+ projects onto the lower slot, so the upper
//! slot carries the degree-2k component of the QES space.

pub mod generators;
pub mod ode;
pub mod operator;
pub mod qes;
pub mod xpoly;

pub use generators::{printed_j_minus_literal, GeneratorSet, IdentityCheck, Realization};
pub use ode::{
    compare_x_system, evaluate_at, xi_system, xi_system_scaled, printed_x_system,
    printed_x_system_is_l_minus_lambda, to_x_system, to_x_system_numeric, OdeComparison,
};
pub use operator::{agree_on_monomials, anticommutator, commutator, PolynomialSpinor, ScalarOperator, SpinorOperator};
pub use qes::{
    build_l, build_l_weighted, divided_power_basis, divided_power_matrix, lambda, parameter_maps, preserves_space,
    spinor_from_coordinates, ParameterMap,
};
pub use xpoly::XPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("k = {0} is invalid: 2k must be a nonnegative integer")]
    InvalidK(String),
    #[error("the substitution xi = kappa^2 (1 + x) is singular at kappa = 0")]
    SingularSubstitution,
}
