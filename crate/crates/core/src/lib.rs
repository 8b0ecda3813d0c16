//! Exact real computation: rational and algebraic arithmetic, root isolation,
//! exact spectral linear algebra, computable reals and a certified solver for
//! symmetric hyperbolic systems.

pub mod algebraic;
pub mod cauchy;
pub mod error;
pub mod factor;
pub mod field;
pub mod interval;
pub mod linalg;
pub mod pde;
pub mod poly;
pub mod roots;

pub use error::{Error, Result};
pub use field::{Field, OrderedField, Rational, Sign};
pub use poly::Poly;
