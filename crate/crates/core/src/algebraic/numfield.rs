//! Fixed number fields `Q(theta)` with elements as coefficient vectors.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::field::{int, Field, OrderedField, Rational, Sign};
use crate::interval::Interval;
use crate::poly::Poly;

use super::arith::eliminant;
use super::real::{locate_root, AlgebraicReal};

/// `Q[x] / (minpoly)` with a chosen real root `theta` of `minpoly`.
pub struct NumberFieldContext {
    minpoly: Poly<Rational>,
    theta: AlgebraicReal,
    traces: OnceLock<Vec<Rational>>,
}

impl fmt::Debug for NumberFieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({}) at {:?}", self.minpoly, self.theta)
    }
}

impl NumberFieldContext {
    /// `minpoly` must be monic irreducible with `theta` as a root.
    pub fn new(minpoly: Poly<Rational>, theta: AlgebraicReal) -> Arc<Self> {
        debug_assert_eq!(theta.sign_of_poly_at(&minpoly), Sign::Zero);
        Arc::new(NumberFieldContext { minpoly: minpoly.monic(), theta, traces: OnceLock::new() })
    }

    /// The context generated by `theta`.
    pub fn generated_by(theta: &AlgebraicReal) -> Arc<Self> {
        Self::new(theta.minimal_polynomial(), theta.clone())
    }

    pub fn rationals() -> Arc<Self> {
        Self::new(Poly::x(), AlgebraicReal::from_int(0))
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg0()
    }

    pub fn minpoly(&self) -> &Poly<Rational> {
        &self.minpoly
    }

    pub fn theta(&self) -> &AlgebraicReal {
        &self.theta
    }

    /// Same field embedded through another real root of the minimal polynomial.
    pub fn conjugate(&self, root: AlgebraicReal) -> Arc<Self> {
        Self::new(self.minpoly.clone(), root)
    }

    /// The real embeddings, as contexts, in increasing order of the root.
    pub fn real_conjugates(&self) -> Vec<Arc<Self>> {
        AlgebraicReal::real_roots(&self.minpoly)
            .into_iter()
            .map(|r| Self::new(self.minpoly.clone(), r))
            .collect()
    }

    pub fn elem(self: &Arc<Self>, p: &Poly<Rational>) -> NFElem {
        let r = p.rem(&self.minpoly).unwrap();
        NFElem { ctx: Some(self.clone()), coeffs: r.into_coeffs() }
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> NFElem {
        self.elem(&Poly::constant(r))
    }

    pub fn generator(self: &Arc<Self>) -> NFElem {
        self.elem(&Poly::x())
    }

    /// Traces of `1, theta, theta^2, ..` up to `2 d - 2` via Newton's identities.
    fn power_traces(&self) -> &[Rational] {
        self.traces.get_or_init(|| {
            let d = self.degree();
            let c = self.minpoly.coeffs();
            let mut p: Vec<Rational> = vec![int(d as i64)];
            for k in 1..(2 * d).max(2) {
                let mut s = int(0);
                for j in 1..k.min(d + 1) {
                    s += &c[d - j] * &p[k - j];
                }
                if k <= d {
                    s += int(k as i64) * &c[d - k];
                }
                p.push(-s);
            }
            p
        })
    }
}

/// Element of a number field. A missing context denotes a plain rational,
/// compatible with every context.
#[derive(Clone)]
pub struct NFElem {
    ctx: Option<Arc<NumberFieldContext>>,
    coeffs: Vec<Rational>,
}

fn join(
    a: &Option<Arc<NumberFieldContext>>,
    b: &Option<Arc<NumberFieldContext>>,
) -> Option<Arc<NumberFieldContext>> {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => {
            assert!(Arc::ptr_eq(x, y), "elements of different number field contexts");
            Some(x.clone())
        }
    }
}

impl NFElem {
    pub fn rational(r: Rational) -> Self {
        NFElem { ctx: None, coeffs: Poly::constant(r).into_coeffs() }
    }

    pub fn context(&self) -> Option<&Arc<NumberFieldContext>> {
        self.ctx.as_ref()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly<Rational> {
        Poly::new(self.coeffs.clone())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(int(0)),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// The same coefficient vector read in another context with the same
    /// minimal polynomial.
    pub fn rebase(&self, ctx: &Arc<NumberFieldContext>) -> NFElem {
        if let Some(c) = &self.ctx {
            assert!(c.minpoly == ctx.minpoly, "rebase across different fields");
        }
        NFElem { ctx: Some(ctx.clone()), coeffs: self.coeffs.clone() }
    }

    fn make(ctx: Option<Arc<NumberFieldContext>>, p: Poly<Rational>) -> Self {
        let p = match &ctx {
            Some(c) if p.deg0() >= c.degree() => p.rem(&c.minpoly).unwrap(),
            _ => p,
        };
        NFElem { ctx, coeffs: p.into_coeffs() }
    }

    /// Enclosure of the value through a `2^-k` enclosure of theta.
    pub fn enclosure(&self, k: u32) -> Interval {
        match (&self.ctx, self.coeffs.len()) {
            (_, 0) => Interval::point(int(0)),
            (_, 1) => Interval::point(self.coeffs[0].clone()),
            (Some(c), _) => self.to_poly().eval_interval(&c.theta.enclosure(k)),
            (None, _) => unreachable!(),
        }
    }

    pub fn sign(&self) -> Sign {
        if let Some(r) = self.as_rational() {
            return Sign::of_rational(&r);
        }
        let mut k = 8;
        loop {
            if let Some(s) = self.enclosure(k).sign() {
                return s;
            }
            k += 8;
        }
    }

    /// Trace from `ctx` down to the rationals.
    pub fn trace_in(&self, ctx: &NumberFieldContext) -> Rational {
        let t = ctx.power_traces();
        self.coeffs.iter().zip(t).map(|(a, b)| a * b).sum()
    }

    /// The value as an algebraic real.
    pub fn to_algebraic(&self) -> AlgebraicReal {
        if let Some(r) = self.as_rational() {
            return AlgebraicReal::from_rational(r);
        }
        let c = self.ctx.as_ref().unwrap();
        let e = self.to_poly();
        let m = c.minpoly.clone();
        let ann = eliminant(c.degree(), |x| m.resultant(&Poly::constant(x.clone()).sub(&e)));
        locate_root(&ann, |k| self.enclosure(k))
    }
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        self.eq_exact(other)
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", crate::field::format_rational(&r));
        }
        write!(f, "[{}](theta)", self.to_poly())
    }
}

impl Field for NFElem {
    fn zero() -> Self {
        NFElem { ctx: None, coeffs: Vec::new() }
    }
    fn one() -> Self {
        NFElem::rational(int(1))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        NFElem::make(join(&self.ctx, &o.ctx), self.to_poly().add(&o.to_poly()))
    }
    fn sub(&self, o: &Self) -> Self {
        NFElem::make(join(&self.ctx, &o.ctx), self.to_poly().sub(&o.to_poly()))
    }
    fn mul(&self, o: &Self) -> Self {
        NFElem::make(join(&self.ctx, &o.ctx), self.to_poly().mul(&o.to_poly()))
    }
    fn neg(&self) -> Self {
        NFElem { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn inv(&self) -> Option<Self> {
        if self.coeffs.is_empty() {
            return None;
        }
        match &self.ctx {
            Some(c) if self.coeffs.len() > 1 => {
                let (_, s, _) = self.to_poly().xgcd(&c.minpoly).unwrap();
                Some(NFElem::make(self.ctx.clone(), s))
            }
            _ => Some(NFElem { ctx: self.ctx.clone(), coeffs: vec![self.coeffs[0].recip()] }),
        }
    }
    fn from_rational(r: &Rational) -> Self {
        NFElem::rational(r.clone())
    }
    fn eq_exact(&self, o: &Self) -> bool {
        self.coeffs == o.coeffs
    }
}

impl OrderedField for NFElem {
    fn sign(&self) -> Sign {
        NFElem::sign(self)
    }
}
