//! Exact computations with annihilators of forms under the differentiation action:
//! catalecticants, initial ideals, Gröbner bases and graded Betti numbers.

pub mod betti;
pub mod error;
pub mod forms;
pub mod groebner;
pub mod harness;
pub mod ideal;
pub mod inverse;
pub mod linalg;
pub mod monomial;
pub mod poly;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
