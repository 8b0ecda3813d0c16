//! The real closure of the rationals and its algebraic closure.

pub mod arith;
pub mod cfrac;
pub mod complex;
pub mod numfield;
pub mod primitive;
pub mod real;
pub mod rootfind;
pub mod tower;

pub use cfrac::{continued_fraction, floor};
pub use complex::{AlgebraicComplex, ComplexNF};
pub use numfield::{NFElem, NumberFieldContext};
pub use primitive::{as_number_field, primitive_element};
pub use real::{approx, minimal_polynomial, sign_of_poly_at, AlgebraicReal};
pub use rootfind::{complex_roots_of, real_imag_annihilators, real_roots_of};
pub use tower::Tower;

use crate::field::Rational;

impl AlgebraicReal {
    /// `self + r`.
    pub fn add_q(&self, r: &Rational) -> AlgebraicReal {
        arith::add_rational(self, r)
    }

    /// `self * c`.
    pub fn scale_q(&self, c: &Rational) -> AlgebraicReal {
        arith::mul_rational(self, c)
    }
}
