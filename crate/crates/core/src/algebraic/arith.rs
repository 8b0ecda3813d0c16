//! Field operations on algebraic reals by resultant elimination.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{int, pow2, sqrt_lower, sqrt_upper, Rational, Sign};
use crate::interval::Interval;
use crate::poly::Poly;
use crate::roots::SturmSequence;

use super::real::{locate_root, AlgebraicReal};

/// Interpolates `x -> value(x)` through the nodes `0..=degree`.
pub fn eliminant(degree: usize, value: impl Fn(&Rational) -> Rational) -> Poly<Rational> {
    let xs: Vec<Rational> = (0..=degree as i64).map(int).collect();
    let ys: Vec<Rational> = xs.iter().map(&value).collect();
    Poly::interpolate(&xs, &ys)
}

/// `res_y(p(x - y), q(y))`, whose roots are the sums of roots.
pub fn sum_eliminant(p: &Poly<Rational>, q: &Poly<Rational>) -> Poly<Rational> {
    eliminant(p.deg0() * q.deg0(), |x| {
        p.compose(&Poly::new(vec![x.clone(), int(-1)])).resultant(q)
    })
}

/// `res_y(p(x + y), q(y))`, whose roots are the differences of roots.
pub fn difference_eliminant(p: &Poly<Rational>, q: &Poly<Rational>) -> Poly<Rational> {
    eliminant(p.deg0() * q.deg0(), |x| p.compose(&Poly::new(vec![x.clone(), int(1)])).resultant(q))
}

/// `res_y(y^m p(x / y), q(y))`, whose roots are the products of roots.
pub fn product_eliminant(p: &Poly<Rational>, q: &Poly<Rational>) -> Poly<Rational> {
    let m = p.deg0();
    eliminant(m * q.deg0(), |x| {
        let mut v = vec![int(0); m + 1];
        let mut xp = int(1);
        for (i, a) in p.coeffs().iter().enumerate() {
            v[m - i] = a * &xp;
            xp *= x;
        }
        Poly::new(v).resultant(q)
    })
}

pub fn neg(a: &AlgebraicReal) -> AlgebraicReal {
    if let Some(r) = a.as_rational() {
        return AlgebraicReal::from_rational(-r);
    }
    let p = a.defining_polynomial();
    let q = p.scale_var(&int(-1));
    let iv = a.isolating_interval();
    let (lo, hi) = (-iv.hi, -iv.lo);
    if SturmSequence::new(&q).unwrap().count(&lo, &hi).unwrap() == 1 {
        AlgebraicReal::from_parts(q, lo, hi, a.defpoly_is_minimal())
    } else {
        locate_root(&q, |k| a.enclosure(k).neg())
    }
}

pub fn add_rational(a: &AlgebraicReal, r: &Rational) -> AlgebraicReal {
    if let Some(x) = a.as_rational() {
        return AlgebraicReal::from_rational(x + r);
    }
    let p = a.defining_polynomial();
    let q = p.taylor_shift(&-r);
    let iv = a.isolating_interval();
    let minimal = a.defpoly_is_minimal();
    AlgebraicReal::from_parts(q, iv.lo + r, iv.hi + r, minimal)
}

pub fn mul_rational(a: &AlgebraicReal, c: &Rational) -> AlgebraicReal {
    if c.is_zero() {
        return AlgebraicReal::from_int(0);
    }
    if let Some(x) = a.as_rational() {
        return AlgebraicReal::from_rational(x * c);
    }
    if c.is_negative() {
        return neg(&mul_rational(a, &-c));
    }
    let p = a.defining_polynomial();
    let q = p.scale_var(&c.recip());
    let iv = a.isolating_interval();
    let minimal = a.defpoly_is_minimal();
    AlgebraicReal::from_parts(q, iv.lo * c, iv.hi * c, minimal)
}

pub fn add(a: &AlgebraicReal, b: &AlgebraicReal) -> AlgebraicReal {
    if let Some(r) = b.as_rational() {
        return add_rational(a, &r);
    }
    if let Some(r) = a.as_rational() {
        return add_rational(b, &r);
    }
    let r = sum_eliminant(&a.defining_polynomial(), &b.defining_polynomial());
    locate_root(&r, |k| a.enclosure(k + 1).add(&b.enclosure(k + 1)))
}

pub fn sub(a: &AlgebraicReal, b: &AlgebraicReal) -> AlgebraicReal {
    if let Some(r) = b.as_rational() {
        return add_rational(a, &-r);
    }
    if let Some(r) = a.as_rational() {
        return add_rational(&neg(b), &r);
    }
    if a.ptr_eq(b) {
        return AlgebraicReal::from_int(0);
    }
    let r = difference_eliminant(&a.defining_polynomial(), &b.defining_polynomial());
    locate_root(&r, |k| a.enclosure(k + 1).sub(&b.enclosure(k + 1)))
}

fn magnitude_bits(a: &AlgebraicReal) -> u32 {
    let e = a.enclosure(0);
    let m = e.abs_max() + int(1);
    crate::field::ceil(&m).bits() as u32
}

pub fn mul(a: &AlgebraicReal, b: &AlgebraicReal) -> AlgebraicReal {
    if let Some(r) = b.as_rational() {
        return mul_rational(a, &r);
    }
    if let Some(r) = a.as_rational() {
        return mul_rational(b, &r);
    }
    if a.sign() == Sign::Zero || b.sign() == Sign::Zero {
        return AlgebraicReal::from_int(0);
    }
    let (pa, _) = a.defining_polynomial().strip_x();
    let (pb, _) = b.defining_polynomial().strip_x();
    let r = product_eliminant(&pa, &pb);
    let extra = magnitude_bits(a) + magnitude_bits(b) + 1;
    locate_root(&r, |k| a.enclosure(k + extra).mul(&b.enclosure(k + extra)))
}

/// Enclosure of `1/a` of width shrinking with `k`, for nonzero `a`.
fn reciprocal_enclosure(a: &AlgebraicReal, k: u32) -> Interval {
    let mut j = k;
    loop {
        if let Some(i) = a.enclosure(j).inv() {
            if i.width() <= pow2(-(k as i64)) {
                return i;
            }
        }
        j += 4;
    }
}

pub fn invert(a: &AlgebraicReal) -> Result<AlgebraicReal> {
    if a.sign() == Sign::Zero {
        return Err(Error::DivisionByZero);
    }
    if let Some(r) = a.as_rational() {
        return Ok(AlgebraicReal::from_rational(r.recip()));
    }
    let (p, _) = a.defining_polynomial().strip_x();
    let q = p.reverse();
    Ok(locate_root(&q, |k| reciprocal_enclosure(a, k)))
}

pub fn div(a: &AlgebraicReal, b: &AlgebraicReal) -> Result<AlgebraicReal> {
    Ok(mul(a, &invert(b)?))
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Non-negative square root.
pub fn sqrt(a: &AlgebraicReal) -> Result<AlgebraicReal> {
    match a.sign() {
        Sign::Negative => return Err(Error::NegativeSqrt),
        Sign::Zero => return Ok(AlgebraicReal::from_int(0)),
        Sign::Positive => {}
    }
    if let Some(r) = a.as_rational() {
        if let Some(s) = rational_sqrt(&r) {
            return Ok(AlgebraicReal::from_rational(s));
        }
    }
    let (p, _) = a.defining_polynomial().strip_x();
    let q = p.compose(&Poly::monomial(int(1), 2));
    Ok(locate_root(&q, |k| {
        let e = a.enclosure(2 * k + 4);
        let lo = std::cmp::max(e.lo, int(0));
        Interval::new(sqrt_lower(&lo, k + 2), sqrt_upper(&e.hi, k + 2))
    }))
}

pub fn pow(a: &AlgebraicReal, k: usize) -> AlgebraicReal {
    let mut r = AlgebraicReal::from_int(1);
    for _ in 0..k {
        r = mul(&r, a);
    }
    r
}

impl AlgebraicReal {
    pub fn neg(&self) -> AlgebraicReal {
        neg(self)
    }
    pub fn invert(&self) -> Result<AlgebraicReal> {
        invert(self)
    }
    pub fn sqrt(&self) -> Result<AlgebraicReal> {
        sqrt(self)
    }
}
