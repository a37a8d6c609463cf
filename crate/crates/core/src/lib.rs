//! Exact Weyl-algebra engine for the Fisher-Bingham systems.
//!
//! The crate provides, bottom to top:
//!
//! * [`poly`] / [`ratfun`] — sparse multivariate polynomials over exact
//!   rationals and the rational function field they generate;
//! * [`weyl`] — normally ordered differential operators in three modes
//!   (polynomial, rational-function and homogenized coefficients);
//! * [`order`] — composable term orders (block, graded, weight-refined);
//! * [`groebner`] — left division, S-pairs, Buchberger completion, standard
//!   monomials and holonomic rank;
//! * [`systems`] — constructors for the Fisher-Bingham operator families;
//! * [`check`] — the named verification checks with pass/fail ledgers.

pub mod error;
pub mod monomial;
pub mod vars;
pub mod poly;
pub mod ratfun;
pub mod order;
pub mod weyl;
pub mod text;
pub mod groebner;
pub mod systems;
pub mod check;

pub use error::{AlgebraError, Result};
