//! Algebraic complex numbers as pairs of reals, and the matching
//! representation over a number field adjoined with `i`.

use std::cmp::Ordering;
use std::fmt;

use crate::field::{Field, Rational};
use crate::interval::Interval;

use super::numfield::NFElem;
use super::real::AlgebraicReal;

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicComplex {
    pub re: AlgebraicReal,
    pub im: AlgebraicReal,
}

impl AlgebraicComplex {
    pub fn new(re: AlgebraicReal, im: AlgebraicReal) -> Self {
        AlgebraicComplex { re, im }
    }

    pub fn real(re: AlgebraicReal) -> Self {
        AlgebraicComplex { re, im: AlgebraicReal::from_int(0) }
    }

    pub fn i() -> Self {
        AlgebraicComplex { re: AlgebraicReal::from_int(0), im: AlgebraicReal::from_int(1) }
    }

    pub fn conj(&self) -> Self {
        AlgebraicComplex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Lexicographic order on `(re, im)`.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.re.compare(&other.re).then_with(|| self.im.compare(&other.im))
    }
}

impl fmt::Debug for AlgebraicComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})i", self.re, self.im)
    }
}

impl Field for AlgebraicComplex {
    fn zero() -> Self {
        Self::real(AlgebraicReal::from_int(0))
    }
    fn one() -> Self {
        Self::real(AlgebraicReal::from_int(1))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        AlgebraicComplex { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }
    fn sub(&self, o: &Self) -> Self {
        AlgebraicComplex { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }
    fn mul(&self, o: &Self) -> Self {
        AlgebraicComplex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
    fn neg(&self) -> Self {
        AlgebraicComplex { re: self.re.neg(), im: self.im.neg() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let ni = n.inv()?;
        Some(AlgebraicComplex { re: self.re.mul(&ni), im: self.im.neg().mul(&ni) })
    }
    fn from_rational(r: &Rational) -> Self {
        Self::real(AlgebraicReal::from_rational(r.clone()))
    }
    fn eq_exact(&self, o: &Self) -> bool {
        self.re.eq_exact(&o.re) && self.im.eq_exact(&o.im)
    }
}

/// `re + i im` with both parts in one real number field.
#[derive(Clone, PartialEq)]
pub struct ComplexNF {
    pub re: NFElem,
    pub im: NFElem,
}

impl ComplexNF {
    pub fn new(re: NFElem, im: NFElem) -> Self {
        ComplexNF { re, im }
    }

    pub fn real(re: NFElem) -> Self {
        ComplexNF { re, im: NFElem::zero() }
    }

    pub fn i() -> Self {
        ComplexNF { re: NFElem::zero(), im: NFElem::one() }
    }

    pub fn conj(&self) -> Self {
        ComplexNF { re: self.re.clone(), im: self.im.neg() }
    }

    /// `|z|^2`.
    pub fn norm_sq(&self) -> NFElem {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn to_algebraic(&self) -> AlgebraicComplex {
        AlgebraicComplex { re: self.re.to_algebraic(), im: self.im.to_algebraic() }
    }

    pub fn enclosure(&self, k: u32) -> (Interval, Interval) {
        (self.re.enclosure(k), self.im.enclosure(k))
    }
}

impl fmt::Debug for ComplexNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})i", self.re, self.im)
    }
}

impl Field for ComplexNF {
    fn zero() -> Self {
        ComplexNF { re: NFElem::zero(), im: NFElem::zero() }
    }
    fn one() -> Self {
        ComplexNF { re: NFElem::one(), im: NFElem::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        ComplexNF { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }
    fn sub(&self, o: &Self) -> Self {
        ComplexNF { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }
    fn mul(&self, o: &Self) -> Self {
        ComplexNF {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
    fn neg(&self) -> Self {
        ComplexNF { re: self.re.neg(), im: self.im.neg() }
    }
    fn inv(&self) -> Option<Self> {
        let ni = self.norm_sq().inv()?;
        Some(ComplexNF { re: self.re.mul(&ni), im: self.im.neg().mul(&ni) })
    }
    fn from_rational(r: &Rational) -> Self {
        Self::real(NFElem::rational(r.clone()))
    }
    fn eq_exact(&self, o: &Self) -> bool {
        self.re.eq_exact(&o.re) && self.im.eq_exact(&o.im)
    }
}

/// Rectangle enclosure arithmetic for complex values.
#[derive(Debug, Clone)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn point(re: Rational, im: Rational) -> Self {
        ComplexInterval { re: Interval::point(re), im: Interval::point(im) }
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }
}
