//! Exact arithmetic foundation: rationals, Laurent and multivariate
//! polynomials, rational functions in `t`, matrices and Smith normal form.

pub mod laurent;
pub mod matrix;
pub mod multipoly;
pub mod ratfunc;
pub mod rational;
pub mod rowspace;

pub use laurent::LaurentPoly;
pub use matrix::{berkowitz, smith_normal_form, ExactMatrix, SmithForm};
pub use multipoly::{monomials_of_degree, Monomial, MultiPoly};
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use rowspace::{RowSpace, SparseVec};
