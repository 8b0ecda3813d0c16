//! Roots of polynomials with algebraic real or complex coefficients.
//!
//! Coefficients are lifted into one number field `K`; each square-free part
//! over `K` is pushed down to the rationals by a norm resultant, whose roots
//! are candidates that are then tested exactly against the part over `K`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{int, Field, Rational, Sign};
use crate::poly::Poly;

use super::arith::eliminant;
use super::complex::{AlgebraicComplex, ComplexInterval, ComplexNF};
use super::numfield::{NFElem, NumberFieldContext};
use super::primitive::as_number_field;
use super::real::AlgebraicReal;

/// `(q1, q2)`: the real part of every complex root of `r` is a root of `q1`
/// and the imaginary part a root of `q2`.
pub fn real_imag_annihilators(r: &Poly<Rational>) -> Result<(Poly<Rational>, Poly<Rational>)> {
    let n = r.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok((Poly::one(), Poly::one()));
    }
    // roots (y_i + y_j) / 2
    let q1 = eliminant(n * n, |x| r.compose(&Poly::new(vec![x * int(2), int(-1)])).resultant(r));
    // roots (y_i - y_j) / 2, among them i Im(b)
    let q = eliminant(n * n, |x| r.compose(&Poly::new(vec![x * int(2), int(1)])).resultant(r));
    // q(i y) = re(y) + i im(y); Im(b) is a common real root
    let mut re = vec![int(0); q.deg0() + 1];
    let mut im = vec![int(0); q.deg0() + 1];
    for (k, a) in q.coeffs().iter().enumerate() {
        let s = if (k / 2) % 2 == 0 { a.clone() } else { -a };
        if k % 2 == 0 {
            re[k] = s;
        } else {
            im[k] = s;
        }
    }
    let (re, im) = (Poly::new(re), Poly::new(im));
    let q2 = match (re.is_zero(), im.is_zero()) {
        (false, false) => re.gcd(&im)?,
        (false, true) => re,
        (true, false) => im,
        (true, true) => unreachable!("q is nonzero"),
    };
    Ok((q1, q2))
}

/// `prod over conjugates of s`, a rational polynomial vanishing on the roots of `s`.
pub fn norm_down(ctx: &NumberFieldContext, s: &Poly<NFElem>) -> Poly<Rational> {
    let d = ctx.degree();
    let m = ctx.minpoly();
    eliminant(s.deg0() * d, |x| {
        let mut acc = Poly::<Rational>::zero();
        let mut xp = int(1);
        for c in s.coeffs() {
            acc = acc.add(&c.to_poly().scale(&xp));
            xp *= x;
        }
        m.resultant(&acc)
    })
}

/// Sturm sequence over a real number field.
pub struct SturmK {
    polys: Vec<Poly<NFElem>>,
}

impl SturmK {
    pub fn new(p: &Poly<NFElem>) -> Self {
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            polys.push(d);
            loop {
                let n = polys.len();
                let r = polys[n - 2].rem(&polys[n - 1]).unwrap().neg();
                if r.is_zero() {
                    break;
                }
                polys.push(r);
            }
        }
        SturmK { polys }
    }

    fn variations(&self, c: &Rational) -> usize {
        let x = NFElem::rational(c.clone());
        let mut last = Sign::Zero;
        let mut v = 0;
        for q in &self.polys {
            let s = q.eval(&x).sign();
            if s == Sign::Zero {
                continue;
            }
            if last != Sign::Zero && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn sort_roots(v: &mut [(AlgebraicReal, usize)]) {
    v.sort_by(|a, b| a.0.compare(&b.0));
}

/// Real roots with multiplicities of a polynomial over `ctx`.
pub fn real_roots_in(ctx: &Arc<NumberFieldContext>, p: &Poly<NFElem>) -> Result<Vec<(AlgebraicReal, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (j, s) in p.square_free_decomposition()?.iter().enumerate() {
        if s.deg0() == 0 {
            continue;
        }
        if s.coeffs().iter().all(|c| c.as_rational().is_some()) {
            let q = s.map(|c| c.as_rational().unwrap());
            for a in AlgebraicReal::real_roots(&q) {
                out.push((a, j + 1));
            }
            continue;
        }
        let r = norm_down(ctx, s).square_free_part()?;
        let rs = crate::roots::SturmSequence::new(&r)?;
        let sk = SturmK::new(s);
        for c in AlgebraicReal::real_roots(&r) {
            let mut iv = c.isolating_interval();
            if let Some(x) = c.as_rational() {
                if s.eval(&NFElem::rational(x.clone())).is_zero() {
                    out.push((c, j + 1));
                }
                continue;
            }
            while rs.count(&iv.lo, &iv.hi)? != 1 {
                c.refine(&(iv.width() / int(2)));
                iv = c.isolating_interval();
            }
            if sk.count(&iv.lo, &iv.hi) == 1 {
                out.push((c, j + 1));
            }
        }
    }
    sort_roots(&mut out);
    Ok(out)
}

/// Every real root with its multiplicity, in increasing order.
pub fn real_roots_of(p: &Poly<AlgebraicReal>) -> Result<Vec<(AlgebraicReal, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg0() == 0 {
        return Ok(Vec::new());
    }
    let (ctx, imgs) = as_number_field(p.coeffs())?;
    real_roots_in(&ctx, &Poly::new(imgs))
}

fn enclose_poly(s: &Poly<ComplexNF>, z: &ComplexInterval, k: u32) -> ComplexInterval {
    let mut acc = ComplexInterval::point(int(0), int(0));
    for c in s.coeffs().iter().rev() {
        let (re, im) = c.enclosure(k);
        acc = acc.mul(z).add(&ComplexInterval { re, im });
    }
    acc
}

/// Complex roots with multiplicities of a polynomial over `ctx(i)`, ordered by `(re, im)`.
pub fn complex_roots_in(ctx: &Arc<NumberFieldContext>, p: &Poly<ComplexNF>) -> Result<Vec<(AlgebraicComplex, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (j, s) in p.square_free_decomposition()?.iter().enumerate() {
        let n = s.deg0();
        if n == 0 {
            continue;
        }
        let conj = s.map(ComplexNF::conj);
        let prod = s.mul(&conj).map(|c| c.re.clone());
        let r = norm_down(ctx, &prod).square_free_part()?;
        let (q1, q2) = real_imag_annihilators(&r)?;
        let xs = AlgebraicReal::real_roots(&q1);
        let ys = AlgebraicReal::real_roots(&q2);
        let mut cands: Vec<(AlgebraicReal, AlgebraicReal)> = Vec::new();
        for x in &xs {
            for y in &ys {
                cands.push((x.clone(), y.clone()));
            }
        }
        let mut k = 4u32;
        while cands.len() > n {
            cands.retain(|(x, y)| {
                let z = ComplexInterval { re: x.enclosure(k), im: y.enclosure(k) };
                enclose_poly(s, &z, k).contains_zero()
            });
            k += 4;
        }
        if cands.len() != n {
            return Err(Error::Verification("complex root candidates lost".into()));
        }
        for (x, y) in cands {
            out.push((AlgebraicComplex::new(x, y), j + 1));
        }
    }
    out.sort_by(|a, b| a.0.lex_cmp(&b.0));
    Ok(out)
}

/// Every complex root with its multiplicity, ordered by `(re, im)`.
pub fn complex_roots_of(p: &Poly<AlgebraicComplex>) -> Result<Vec<(AlgebraicComplex, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg0() == 0 {
        return Ok(Vec::new());
    }
    let mut gens = Vec::new();
    for c in p.coeffs() {
        gens.push(c.re.clone());
        gens.push(c.im.clone());
    }
    let (ctx, imgs) = as_number_field(&gens)?;
    let q = Poly::new(imgs.chunks(2).map(|c| ComplexNF::new(c[0].clone(), c[1].clone())).collect());
    complex_roots_in(&ctx, &q)
}
