//! Dense univariate polynomials over exact fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{Field, Rational, Sign};
use crate::interval::Interval;

/// Coefficients are stored constant term first with trailing zeros removed,
/// so the zero polynomial has no coefficients and no degree.
#[derive(Clone, Debug)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.eq_exact(b))
    }
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![F::one()] }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly { coeffs: vec![F::zero(), F::one()] }
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k];
        v.push(c);
        Poly::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: &F) -> Self {
        Poly { coeffs: vec![r.neg(), F::one()] }
    }

    pub fn from_rational_poly(p: &Poly<Rational>) -> Self {
        Poly { coeffs: p.coeffs.iter().map(F::from_rational).collect() }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as a constant.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(F::neg).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![F::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut r = Poly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn divmod(&self, q: &Self) -> Result<(Self, Self)> {
        let dq = q.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lc_inv = q.lead().unwrap().inv().ok_or(Error::DivisionByZeroPolynomial)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dq {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); r.len() - dq];
        for k in (0..quot.len()).rev() {
            let c = r[k + dq].mul(&lc_inv);
            if !c.is_zero() {
                for (j, b) in q.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&c.mul(b));
                }
            }
            r[k + dq] = F::zero();
            quot[k] = c;
        }
        r.truncate(dq);
        Ok((Poly::new(quot), Poly::new(r)))
    }

    pub fn rem(&self, q: &Self) -> Result<Self> {
        Ok(self.divmod(q)?.1)
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, q: &Self) -> Self {
        let (d, r) = self.divmod(q).expect("exact division by zero polynomial");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        d
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => {
                let li = l.inv().expect("nonzero leading coefficient");
                self.scale(&li)
            }
        }
    }

    pub fn gcd(&self, q: &Self) -> Result<Self> {
        if self.is_zero() && q.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), q.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*q = g`, `g` monic.
    pub fn xgcd(&self, q: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && q.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut r0, mut r1) = (self.clone(), q.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (qq, r) = r0.divmod(&r1)?;
            let s = s0.sub(&qq.mul(&s1));
            let t = t0.sub(&qq.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let li = r0.lead().unwrap().inv().unwrap();
        Ok((r0.scale(&li), s0.scale(&li), t0.scale(&li)))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// `self(x + c)`.
    pub fn taylor_shift(&self, c: &F) -> Self {
        self.compose(&Poly::new(vec![c.clone(), F::one()]))
    }

    pub fn square_free_part(&self) -> Result<Self> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::DegreeTooSmall { needed: 1, found: 0 }),
            Some(_) => {
                let g = self.gcd(&self.derivative())?;
                Ok(self.div_exact(&g).monic())
            }
        }
    }

    /// Yun's decomposition: entry `i` is the monic product of the factors of
    /// multiplicity `i + 1`. Trailing entries equal to one are dropped.
    pub fn square_free_decomposition(&self) -> Result<Vec<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        if f.deg0() == 0 {
            return Ok(Vec::new());
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp)?;
        let mut b = f.div_exact(&a0);
        let mut c = fp.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        loop {
            let a = b.gcd(&d)?;
            out.push(a.clone());
            b = b.div_exact(&a);
            if b.deg0() == 0 {
                break;
            }
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|p| p.deg0() == 0) {
            out.pop();
        }
        Ok(out)
    }

    /// Sylvester resultant, computed by the Euclidean recurrence.
    ///
    /// The zero polynomial counts as a degree zero constant, so
    /// `res(0, q) = 0` whenever `deg q > 0`.
    pub fn resultant(&self, q: &Self) -> F {
        let (mut f, mut g) = (self.clone(), q.clone());
        let mut acc = F::one();
        loop {
            let m = f.deg0();
            let n = g.deg0();
            if n == 0 {
                return acc.mul(&pow_f(&g.coeff(0), m));
            }
            if m == 0 {
                return acc.mul(&pow_f(&f.coeff(0), n));
            }
            let r = f.rem(&g).expect("nonzero divisor");
            if r.is_zero() {
                return F::zero();
            }
            let k = r.deg0();
            let mut factor = pow_f(g.lead().unwrap(), m - k);
            if (m * n) % 2 == 1 {
                factor = factor.neg();
            }
            acc = acc.mul(&factor);
            f = g;
            g = r;
        }
    }

    /// `D(p) = (-1)^{m(m-1)/2} res(p, p') / a_m`.
    pub fn discriminant(&self) -> Result<F> {
        let m = self.degree().ok_or(Error::ZeroPolynomial)?;
        if m < 2 {
            return Err(Error::DegreeTooSmall { needed: 2, found: m });
        }
        let r = self.resultant(&self.derivative());
        let d = r.div(self.lead().unwrap()).unwrap();
        Ok(if (m * (m - 1) / 2) % 2 == 1 { d.neg() } else { d })
    }

    /// Newton interpolation through `(xs[i], ys[i])`, nodes distinct.
    pub fn interpolate(xs: &[F], ys: &[F]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        let mut dd: Vec<F> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = dd[i].sub(&dd[i - 1]);
                let den = xs[i].sub(&xs[i - j]);
                dd[i] = num.div(&den).expect("distinct nodes");
            }
        }
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            acc = acc.mul(&Poly::linear_root(&xs[i])).add(&Poly::constant(dd[i].clone()));
        }
        acc
    }
}

fn pow_f<F: Field>(a: &F, k: usize) -> F {
    let mut r = F::one();
    for _ in 0..k {
        r = r.mul(a);
    }
    r
}

impl Poly<Rational> {
    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&i| Rational::from_integer(i.into())).collect())
    }

    pub fn from_rationals(c: &[Rational]) -> Self {
        Poly::new(c.to_vec())
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = self.coeffs.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        let g = ints.iter().fold(BigInt::from(0), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    pub fn from_integers(c: &[BigInt]) -> Self {
        Poly::new(c.iter().map(|i| Rational::from_integer(i.clone())).collect())
    }

    /// Primitive integer version with positive leading coefficient.
    pub fn integer_normal(&self) -> Self {
        let mut v = self.primitive_integer();
        if v.last().is_some_and(|l| l.is_negative()) {
            v.iter_mut().for_each(|c| *c = -c.clone());
        }
        Poly::from_integers(&v)
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        sign_at_int(&self.primitive_integer(), x)
    }

    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Interval::point(c.clone()));
        }
        acc
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn l2_norm_sq(&self) -> Rational {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// `self(c * x)`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut p = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a * &p);
            p *= c;
        }
        Poly::new(v)
    }

    /// `x^deg * self(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    /// Removes the largest power of `x` dividing `self`.
    pub fn strip_x(&self) -> (Self, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (Poly::new(self.coeffs[k..].to_vec()), k)
    }
}

/// Sign of an integer polynomial at `a/b` by homogeneous Horner on integers.
pub fn sign_at_int(c: &[BigInt], x: &Rational) -> Sign {
    if c.is_empty() {
        return Sign::Zero;
    }
    let a = x.numer();
    let b = x.denom();
    let mut acc = BigInt::from(0);
    let mut bp = BigInt::from(1);
    for ci in c.iter().rev() {
        acc = acc * a + ci * &bp;
        bp *= b;
    }
    Sign::of_int(&acc)
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = crate::field::format_rational(&mag);
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coef}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_ints(c)
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = p(&[-1, 0, 1]).divmod(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1]), p(&[])));
        let (q, r) = p(&[1, 0, 1]).divmod(&p(&[0, 1])).unwrap();
        assert_eq!((q, r), (p(&[0, 1]), p(&[1])));
        let (q, r) = p(&[5, -2, 0, 1]).divmod(&p(&[1, 0, 1])).unwrap();
        assert_eq!((q, r), (p(&[0, 1]), p(&[5, -3])));
        assert_eq!(p(&[1]).divmod(&p(&[])), Err(Error::DivisionByZeroPolynomial));
    }

    #[test]
    fn gcd_examples() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, -2, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[-2, 0, 1]).gcd(&p(&[-3, 0, 1])).unwrap(), p(&[1]));
        assert_eq!(p(&[0, -1, 0, 1]).gcd(&a).unwrap(), a);
        assert_eq!(p(&[]).gcd(&p(&[])), Err(Error::GcdOfZeros));
        assert_eq!(p(&[]).gcd(&p(&[0, 2])).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[-2, 0, 1]);
        let b = p(&[1, 1, 0, 3]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(g, p(&[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn square_free_examples() {
        let f = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        assert_eq!(f.square_free_part().unwrap(), p(&[-1, 1]).mul(&p(&[2, 1])));
        assert_eq!(p(&[-2, 0, 1]).square_free_part().unwrap(), p(&[-2, 0, 1]));
        assert_eq!(p(&[1, 0, -2, 0, 1]).square_free_part().unwrap(), p(&[-1, 0, 1]));
        assert!(p(&[]).square_free_part().is_err());
        assert!(p(&[3]).square_free_part().is_err());
    }

    #[test]
    fn yun_decomposition() {
        let f = p(&[-1, 1]).mul(&p(&[2, 1]).pow(2)).mul(&p(&[1, 0, 1]).pow(3)).scale(&int(5));
        let d = f.square_free_decomposition().unwrap();
        assert_eq!(d, vec![p(&[-1, 1]), p(&[2, 1]), p(&[1, 0, 1])]);
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p(&[-5, 1]).resultant(&p(&[-3, 1])), int(2));
        assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-3, 0, 1])), int(1));
        assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-4, 0, 2])), int(0));
        assert_eq!(p(&[3]).resultant(&p(&[1, 1, 1])), int(9));
        assert_eq!(p(&[1, 1, 1]).resultant(&p(&[3])), int(9));
        assert_eq!(p(&[3]).resultant(&p(&[5])), int(1));
        assert_eq!(p(&[]).resultant(&p(&[1, 1])), int(0));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[-2, 0, 1]).discriminant().unwrap(), int(8));
        assert_eq!(p(&[1, -2, 1]).discriminant().unwrap(), int(0));
        assert_eq!(p(&[0, -1, 0, 1]).discriminant().unwrap(), int(4));
        assert_eq!(p(&[1, 1, 1]).discriminant().unwrap(), int(-3));
        assert!(p(&[1, 1]).discriminant().is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-2, 0, 1]).eval(&int(2)), int(2));
        assert_eq!(p(&[]).eval(&int(7)), int(0));
        assert_eq!(p(&[1, -3, 0, 1]).eval(&rat(1, 2)), rat(-3, 8));
    }

    #[test]
    fn sign_at_matches_eval() {
        let f = Poly::from_rationals(&[rat(-1, 3), rat(2, 5), rat(-7, 2)]);
        for x in [rat(-3, 2), rat(0, 1), rat(1, 7), rat(5, 1)] {
            assert_eq!(f.sign_at(&x), Sign::of_rational(&f.eval(&x)));
        }
    }

    #[test]
    fn interpolation_recovers() {
        let f = p(&[3, -1, 4, 1, -5]);
        let xs: Vec<Rational> = (0..5).map(int).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(Poly::interpolate(&xs, &ys), f);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -10, 0, 1]).to_string(), "x^4 - 10*x^2 + 1");
        assert_eq!(Poly::from_rationals(&[rat(-1, 2), int(-1)]).to_string(), "-x - 1/2");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
