//! Primitive elements and number-field contexts for finitely many algebraic reals.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{int, Field, Rational};
use crate::poly::Poly;

use super::arith::{self, eliminant};
use super::numfield::{NFElem, NumberFieldContext};
use super::real::AlgebraicReal;

/// `theta` with `Q(gens) = Q(theta)` and `gens[i] = exprs[i](theta)`.
pub fn primitive_element(gens: &[AlgebraicReal]) -> Result<(AlgebraicReal, Vec<Poly<Rational>>)> {
    let first = gens.first().ok_or_else(|| Error::Unsupported("empty generator list".into()))?;
    let mut theta = first.clone();
    let mut cur_min = theta.minimal_polynomial();
    let mut exprs: Vec<Poly<Rational>> = vec![Poly::x().rem(&cur_min)?];
    for g in &gens[1..] {
        let mg = g.minimal_polynomial();
        let (d0, d1) = (cur_min.deg0(), mg.deg0());
        let quick = d0 * d1 + 1;
        let rigorous = d0 * d0.saturating_sub(1) * d1 * d1.saturating_sub(1) / 2 + 1;
        let mut done = false;
        for s in 1..=quick.max(rigorous) as i64 {
            let n = eliminant(d0 * d1, |x| {
                cur_min.compose(&Poly::new(vec![x.clone(), int(-s)])).resultant(&mg)
            });
            if n.gcd(&n.derivative())?.deg0() != 0 {
                continue;
            }
            let next = arith::add(&theta, &arith::mul_rational(g, &int(s)));
            let f = next.minimal_polynomial();
            let k = NumberFieldContext::new(f.clone(), next.clone());
            let z = k.generator();
            // cur_min(z - s y) and mg(y) share exactly the factor y - g(z)
            let lin: Poly<NFElem> = Poly::new(vec![z.clone(), NFElem::rational(int(-s))]);
            let a = cur_min.map(|c| NFElem::rational(c.clone())).compose(&lin);
            let b = mg.map(|c| NFElem::rational(c.clone()));
            let gg = a.gcd(&b)?;
            if gg.deg0() != 1 {
                continue;
            }
            let g_expr = gg.coeff(0).neg();
            let old_theta = z.sub(&g_expr.mul(&NFElem::rational(int(s))));
            exprs = exprs.iter().map(|e| eval_in(e, &old_theta).to_poly()).collect();
            exprs.push(g_expr.to_poly());
            theta = next;
            cur_min = f;
            done = true;
            break;
        }
        if !done {
            return Err(Error::Verification("no primitive element multiplier found".into()));
        }
    }
    for (e, g) in exprs.iter().zip(gens) {
        if !represents(&theta, e, g) {
            return Err(Error::Verification("primitive element expression mismatch".into()));
        }
    }
    Ok((theta, exprs))
}

fn eval_in(e: &Poly<Rational>, x: &NFElem) -> NFElem {
    let mut acc = NFElem::zero();
    for c in e.coeffs().iter().rev() {
        acc = acc.mul(x).add(&NFElem::rational(c.clone()));
    }
    acc
}

/// Exact check that `e(theta) = g`.
fn represents(theta: &AlgebraicReal, e: &Poly<Rational>, g: &AlgebraicReal) -> bool {
    let mg = g.minimal_polynomial();
    let f = theta.minimal_polynomial();
    // e(theta) must be a root of mg
    if !mg.compose(e).rem(&f).unwrap().is_zero() {
        return false;
    }
    if let Some(r) = g.as_rational() {
        return e.deg0() == 0 && e.coeff(0) == r;
    }
    // and it must be the root of mg isolated by g's interval
    let iv = g.isolating_interval();
    let mut k = 8;
    loop {
        let enc = e.eval_interval(&theta.enclosure(k));
        if enc.lo > iv.lo && enc.hi <= iv.hi {
            return true;
        }
        if enc.hi <= iv.lo || enc.lo > iv.hi {
            return false;
        }
        k += 8;
    }
}

/// A number-field context containing every generator, and their images.
pub fn as_number_field(gens: &[AlgebraicReal]) -> Result<(Arc<NumberFieldContext>, Vec<NFElem>)> {
    let (theta, exprs) = primitive_element(gens)?;
    let ctx = NumberFieldContext::generated_by(&theta);
    let images = exprs.iter().map(|e| ctx.elem(e)).collect();
    Ok((ctx, images))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(n: i64) -> AlgebraicReal {
        AlgebraicReal::from_int(n).sqrt().unwrap()
    }

    #[test]
    fn sqrt2_sqrt3() {
        let (t, e) = primitive_element(&[sqrt(2), sqrt(3)]).unwrap();
        assert_eq!(t.minimal_polynomial(), Poly::from_ints(&[1, 0, -10, 0, 1]));
        assert_eq!(t, sqrt(2).add(&sqrt(3)));
        assert_eq!(e[0], Poly::from_rationals(&[int(0), crate::field::rat(-9, 2), int(0), crate::field::rat(1, 2)]));
    }

    #[test]
    fn single_and_rational() {
        let (t, e) = primitive_element(&[sqrt(2)]).unwrap();
        assert_eq!(t, sqrt(2));
        assert_eq!(e, vec![Poly::x()]);
        let (t, e) = primitive_element(&[AlgebraicReal::from_int(2), AlgebraicReal::from_int(3)]).unwrap();
        assert_eq!(t, AlgebraicReal::from_int(5));
        assert_eq!(e, vec![Poly::from_ints(&[2]), Poly::from_ints(&[3])]);
    }

    #[test]
    fn dependent_generators_collapse() {
        let (ctx, im) = as_number_field(&[sqrt(2), sqrt(8)]).unwrap();
        assert_eq!(ctx.degree(), 2);
        assert_eq!(im[1].to_algebraic(), sqrt(8));
        assert_eq!(im[0].to_algebraic(), sqrt(2));
    }
}
