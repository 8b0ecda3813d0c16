//! Towers `K(sqrt r_1)(sqrt r_2)..` over a number field, used to turn
//! expressions with normalizing square roots into algebraic reals.
//!
//! An element of level `j` is a dense vector of length `d * 2^j`: the lower
//! half is the part without `t_j = sqrt r_j`, the upper half its coefficient.

use std::sync::Arc;

use crate::field::{int, sqrt_lower, sqrt_upper, Rational};
use crate::interval::Interval;
use crate::linalg::hessenberg::char_poly_rational;
use crate::poly::Poly;

use super::numfield::{NFElem, NumberFieldContext};
use super::real::{locate_root, AlgebraicReal};

#[derive(Clone, Debug)]
pub struct Tower {
    base: Arc<NumberFieldContext>,
    radicands: Vec<Vec<Rational>>,
}

impl Tower {
    pub fn new(base: Arc<NumberFieldContext>) -> Self {
        Tower { base, radicands: Vec::new() }
    }

    pub fn base(&self) -> &Arc<NumberFieldContext> {
        &self.base
    }

    pub fn height(&self) -> usize {
        self.radicands.len()
    }

    pub fn dim(&self) -> usize {
        self.base.degree() << self.radicands.len()
    }

    fn dim_at(&self, level: usize) -> usize {
        self.base.degree() << level
    }

    /// Adjoins the positive square root of `r`, an element of the current top.
    pub fn push_sqrt(&mut self, r: Vec<Rational>) {
        let d = self.dim();
        let mut r = r;
        r.resize(d, int(0));
        self.radicands.push(r);
    }

    /// Base field element as a top-level vector.
    pub fn embed(&self, e: &NFElem) -> Vec<Rational> {
        let mut v: Vec<Rational> = e.coeffs().to_vec();
        v.resize(self.dim(), int(0));
        v
    }

    /// `t_level` as a top-level vector.
    pub fn root(&self, level: usize) -> Vec<Rational> {
        let mut v = vec![int(0); self.dim()];
        v[self.dim_at(level)] = int(1);
        v
    }

    pub fn add(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn scale(&self, a: &[Rational], c: &Rational) -> Vec<Rational> {
        a.iter().map(|x| x * c).collect()
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.mul_at(self.height(), a, b)
    }

    fn mul_at(&self, level: usize, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if level == 0 {
            let p = Poly::new(a.to_vec()).mul(&Poly::new(b.to_vec()));
            let mut v = p.rem(self.base.minpoly()).unwrap().into_coeffs();
            v.resize(self.dim_at(0), int(0));
            return v;
        }
        let h = self.dim_at(level - 1);
        let (a0, a1) = a.split_at(h);
        let (b0, b1) = b.split_at(h);
        let r = &self.radicands[level - 1][..h];
        let a1b1 = self.mul_at(level - 1, a1, b1);
        let lo = self.add(&self.mul_at(level - 1, a0, b0), &self.mul_at(level - 1, &a1b1, r));
        let hi = self.add(&self.mul_at(level - 1, a0, b1), &self.mul_at(level - 1, a1, b0));
        let mut v = lo;
        v.extend(hi);
        v
    }

    fn enclose_at(&self, level: usize, a: &[Rational], k: u32) -> Interval {
        if level == 0 {
            let p = Poly::new(a.to_vec());
            if p.deg0() == 0 {
                return Interval::point(p.coeff(0));
            }
            return p.eval_interval(&self.base.theta().enclosure(k));
        }
        let h = self.dim_at(level - 1);
        let (a0, a1) = a.split_at(h);
        let e0 = self.enclose_at(level - 1, a0, k);
        if a1.iter().all(|c| *c == int(0)) {
            return e0;
        }
        let e1 = self.enclose_at(level - 1, a1, k);
        let r = self.enclose_at(level - 1, &self.radicands[level - 1][..h], 2 * k + 4);
        let lo = std::cmp::max(r.lo, int(0));
        let t = Interval::new(sqrt_lower(&lo, k + 2), sqrt_upper(&r.hi, k + 2));
        e0.add(&e1.mul(&t))
    }

    /// Enclosure of the value of a top-level element.
    pub fn enclosure(&self, a: &[Rational], k: u32) -> Interval {
        self.enclose_at(self.height(), a, k)
    }

    /// Exact value as an algebraic real, through the characteristic
    /// polynomial of multiplication by `a`.
    pub fn to_algebraic(&self, a: &[Rational]) -> AlgebraicReal {
        let d = self.dim();
        if a[1..].iter().all(|c| *c == int(0)) {
            return AlgebraicReal::from_rational(a[0].clone());
        }
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let mut e = vec![int(0); d];
            e[j] = int(1);
            cols.push(self.mul(a, &e));
        }
        let rows: Vec<Vec<Rational>> = (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
        let ann = char_poly_rational(&rows);
        locate_root(&ann, |k| self.enclosure(a, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn sqrt2_over_q() {
        let mut t = Tower::new(NumberFieldContext::rationals());
        t.push_sqrt(vec![int(2)]);
        let s = t.root(0);
        assert_eq!(t.mul(&s, &s), vec![int(2), int(0)]);
        let half = t.scale(&s, &crate::field::rat(1, 2));
        let v = t.to_algebraic(&half);
        assert_eq!(v.minimal_polynomial(), Poly::from_rationals(&[crate::field::rat(-1, 2), int(0), int(1)]));
    }

    #[test]
    fn two_level() {
        let two = AlgebraicReal::from_int(2).sqrt().unwrap();
        let base = NumberFieldContext::generated_by(&two);
        let mut t = Tower::new(base.clone());
        // sqrt(3 + sqrt 2)
        t.push_sqrt(base.elem(&Poly::from_ints(&[3, 1])).coeffs().to_vec());
        let r = t.to_algebraic(&t.root(0));
        let expected = AlgebraicReal::from_int(3).add(&two).sqrt().unwrap();
        assert_eq!(r, expected);
        let _ = NFElem::one();
    }
}
