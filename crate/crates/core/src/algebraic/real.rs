//! Exact real algebraic numbers as a square-free defining polynomial plus an
//! isolating interval `(lo, hi]`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use crate::factor::factor_square_free;
use crate::field::{self, int, pow2, Field, OrderedField, Rational, Sign};
use crate::interval::Interval;
use crate::poly::Poly;
use crate::roots::{isolate_real_roots, root_bound, IsolatingInterval, SturmSequence};

/// Eliminants up to this degree are split into irreducible factors as soon
/// as they are produced.
pub(crate) const EAGER_FACTOR_DEGREE: usize = 24;

struct State {
    poly: Poly<Rational>,
    seq: Arc<SturmSequence>,
    lo: Rational,
    hi: Rational,
    minimal: bool,
}

struct Inner {
    state: Mutex<State>,
    exact: OnceLock<Rational>,
}

#[derive(Clone)]
pub struct AlgebraicReal {
    inner: Arc<Inner>,
}

impl AlgebraicReal {
    pub fn from_rational(r: Rational) -> Self {
        let poly = Poly::linear_root(&r);
        let seq = Arc::new(SturmSequence::new(&poly).unwrap());
        let exact = OnceLock::new();
        let _ = exact.set(r.clone());
        let state = State { poly, seq, lo: &r - int(1), hi: r, minimal: true };
        AlgebraicReal { inner: Arc::new(Inner { state: Mutex::new(state), exact }) }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(int(i))
    }

    /// Builds from a square-free polynomial with exactly one root in `(lo, hi]`.
    pub(crate) fn from_parts(poly: Poly<Rational>, lo: Rational, hi: Rational, minimal: bool) -> Self {
        let poly = poly.monic();
        if poly.deg0() == 1 {
            return Self::from_rational(-poly.coeff(0));
        }
        let seq = Arc::new(SturmSequence::new(&poly).unwrap());
        debug_assert_eq!(seq.count(&lo, &hi).unwrap(), 1);
        let state = State { poly, seq, lo, hi, minimal };
        AlgebraicReal { inner: Arc::new(Inner { state: Mutex::new(state), exact: OnceLock::new() }) }
    }

    /// Like `from_parts`, splitting off the irreducible factor when cheap.
    pub(crate) fn from_isolated(poly: Poly<Rational>, lo: Rational, hi: Rational) -> Self {
        if poly.deg0() <= EAGER_FACTOR_DEGREE {
            let f = irreducible_factor_at(&poly, &lo, &hi);
            Self::from_parts(f, lo, hi, true)
        } else {
            Self::from_parts(poly, lo, hi, false)
        }
    }

    /// The `(k+1)`-st real root of `p` in increasing order.
    pub fn from_root_index(p: &Poly<Rational>, k: usize) -> Option<Self> {
        if p.deg0() == 0 {
            return None;
        }
        let q = p.square_free_part().ok()?;
        let iv = isolate_real_roots(&q, &int(1)).ok()?;
        let i = iv.get(k)?;
        Some(Self::from_isolated(q, i.lo.clone(), i.hi.clone()))
    }

    /// Every real root of `p` in increasing order.
    pub fn real_roots(p: &Poly<Rational>) -> Vec<Self> {
        if p.deg0() == 0 {
            return Vec::new();
        }
        let q = p.square_free_part().unwrap();
        isolate_real_roots(&q, &int(1))
            .unwrap()
            .into_iter()
            .map(|i| Self::from_isolated(q.clone(), i.lo, i.hi))
            .collect()
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.inner.exact.get().cloned()
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some() || self.minimal_polynomial().deg0() == 1
    }

    fn set_exact(&self, r: Rational) {
        let _ = self.inner.exact.set(r);
    }

    pub fn defining_polynomial(&self) -> Poly<Rational> {
        self.inner.state.lock().unwrap().poly.clone()
    }

    pub fn isolating_interval(&self) -> IsolatingInterval {
        let s = self.inner.state.lock().unwrap();
        IsolatingInterval { lo: s.lo.clone(), hi: s.hi.clone() }
    }

    pub(crate) fn defpoly_is_minimal(&self) -> bool {
        self.inner.exact.get().is_some() || self.inner.state.lock().unwrap().minimal
    }

    /// Position among the real roots of the defining polynomial.
    pub fn root_index(&self) -> usize {
        let s = self.inner.state.lock().unwrap();
        let b = root_bound(&s.poly).unwrap().bound;
        let nb = -b;
        if s.lo <= nb {
            0
        } else {
            s.seq.count(&nb, &s.lo).unwrap()
        }
    }

    /// Shrinks the isolating interval to width at most `w`.
    pub fn refine(&self, w: &Rational) {
        if self.inner.exact.get().is_some() {
            return;
        }
        let mut s = self.inner.state.lock().unwrap();
        if s.seq.sign_at(&s.hi) == Sign::Zero {
            let hi = s.hi.clone();
            drop(s);
            self.set_exact(hi);
            return;
        }
        while &(&s.hi - &s.lo) > w {
            let mid = (&s.lo + &s.hi) / int(2);
            let sm = s.seq.sign_at(&mid);
            if sm == Sign::Zero {
                s.lo = std::cmp::max(s.lo.clone(), &mid - w / int(2));
                s.hi = mid.clone();
                drop(s);
                self.set_exact(mid);
                return;
            }
            if sm == s.seq.sign_at(&s.hi) {
                s.hi = mid;
            } else {
                s.lo = mid;
            }
        }
    }

    /// Closed enclosure of width at most `2^-k`.
    pub fn enclosure(&self, k: u32) -> Interval {
        if let Some(r) = self.as_rational() {
            return Interval::point(r);
        }
        self.refine(&pow2(-(k as i64)));
        if let Some(r) = self.as_rational() {
            return Interval::point(r);
        }
        let s = self.inner.state.lock().unwrap();
        Interval::new(s.lo.clone(), s.hi.clone())
    }

    /// Exact comparison against a rational.
    pub fn compare_rational(&self, c: &Rational) -> Ordering {
        if let Some(r) = self.as_rational() {
            return r.cmp(c);
        }
        let mut s = self.inner.state.lock().unwrap();
        if c <= &s.lo {
            return Ordering::Greater;
        }
        let sh = s.seq.sign_at(&s.hi);
        if sh == Sign::Zero {
            let hi = s.hi.clone();
            drop(s);
            self.set_exact(hi.clone());
            return hi.cmp(c);
        }
        if c >= &s.hi {
            return Ordering::Less;
        }
        let sc = s.seq.sign_at(c);
        if sc == Sign::Zero {
            s.lo = std::cmp::max(s.lo.clone(), c - (&s.hi - c));
            s.hi = c.clone();
            drop(s);
            self.set_exact(c.clone());
            return Ordering::Equal;
        }
        if sc == sh {
            s.hi = c.clone();
            Ordering::Less
        } else {
            s.lo = c.clone();
            Ordering::Greater
        }
    }

    pub fn sign(&self) -> Sign {
        match self.compare_rational(&int(0)) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    /// Exact total order.
    ///
    /// Overlapping intervals are resolved by a gcd certificate: the values are
    /// equal iff both are roots of `g = gcd(p_a, p_b)` and the hull of the two
    /// intervals holds a single root of `g`.
    pub fn compare(&self, other: &Self) -> Ordering {
        if self.ptr_eq(other) {
            return Ordering::Equal;
        }
        if let Some(r) = other.as_rational() {
            return self.compare_rational(&r);
        }
        if let Some(r) = self.as_rational() {
            return other.compare_rational(&r).reverse();
        }
        let pa = self.defining_polynomial();
        let pb = other.defining_polynomial();
        let g = pa.gcd(&pb).unwrap();
        let gseq = if g.deg0() >= 1 { Some(SturmSequence::new(&g).unwrap()) } else { None };
        let mut roots_of_g: Option<bool> = None;
        loop {
            let a = self.isolating_interval();
            let b = other.isolating_interval();
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if let Some(gs) = &gseq {
                let both = *roots_of_g.get_or_insert_with(|| {
                    gs.count(&a.lo, &a.hi).unwrap() == 1 && gs.count(&b.lo, &b.hi).unwrap() == 1
                });
                if both {
                    let lo = std::cmp::min(&a.lo, &b.lo);
                    let hi = std::cmp::max(&a.hi, &b.hi);
                    if gs.count(lo, hi).unwrap() == 1 {
                        return Ordering::Equal;
                    }
                }
            }
            self.refine(&(a.width() / int(2)));
            other.refine(&(b.width() / int(2)));
            if self.as_rational().is_some() || other.as_rational().is_some() {
                return self.compare(other);
            }
        }
    }

    /// Monic irreducible polynomial over the rationals; cached.
    pub fn minimal_polynomial(&self) -> Poly<Rational> {
        if let Some(r) = self.inner.exact.get() {
            return Poly::linear_root(r);
        }
        let mut s = self.inner.state.lock().unwrap();
        if !s.minimal {
            let f = irreducible_factor_at(&s.poly, &s.lo, &s.hi);
            s.seq = Arc::new(SturmSequence::new(&f).unwrap());
            s.poly = f;
            s.minimal = true;
        }
        let p = s.poly.clone();
        drop(s);
        if p.deg0() == 1 {
            self.set_exact(-p.coeff(0));
        }
        p
    }

    /// Sign of `q` at this number.
    pub fn sign_of_poly_at(&self, q: &Poly<Rational>) -> Sign {
        if q.is_zero() {
            return Sign::Zero;
        }
        if let Some(r) = self.as_rational() {
            return q.sign_at(&r);
        }
        let p = self.defining_polynomial();
        let g = q.gcd(&p).unwrap();
        if g.deg0() >= 1 {
            let iv = self.isolating_interval();
            if SturmSequence::new(&g).unwrap().count(&iv.lo, &iv.hi).unwrap() == 1 {
                return Sign::Zero;
            }
        }
        let mut k = 8;
        loop {
            let e = q.eval_interval(&self.enclosure(k));
            if let Some(s) = e.sign() {
                return s;
            }
            k += 8;
        }
    }

    /// `floor(self * s + off)` for rational `s > 0`.
    pub fn floor_scaled(&self, s: &Rational, off: &Rational) -> BigInt {
        if let Some(r) = self.as_rational() {
            return field::floor(&(r * s + off));
        }
        self.refine(&(int(1) / (s * int(2))));
        let iv = self.isolating_interval();
        let n = field::floor(&(&iv.lo * s + off));
        let next = (Rational::from_integer(&n + 1) - off) / s;
        match self.compare_rational(&next) {
            Ordering::Less => n,
            _ => n + 1,
        }
    }

    pub fn floor(&self) -> BigInt {
        self.floor_scaled(&int(1), &int(0))
    }

    /// Dyadic approximation with `|approx - self| <= 2^-(k+2)`.
    pub fn approx(&self, k: u32) -> Rational {
        if let Some(r) = self.as_rational() {
            return r;
        }
        let s = pow2(k as i64 + 1);
        let n = self.floor_scaled(&s, &field::rat(1, 2));
        Rational::from_integer(n) / s
    }
}

/// The irreducible factor of square-free `p` with a root in `(lo, hi]`.
pub(crate) fn irreducible_factor_at(p: &Poly<Rational>, lo: &Rational, hi: &Rational) -> Poly<Rational> {
    for f in factor_square_free(p) {
        if SturmSequence::new(&f).unwrap().count(lo, hi).unwrap() == 1 {
            return f;
        }
    }
    unreachable!("no factor vanishes in the isolating interval")
}

/// Isolates the root of square-free `p` whose enclosures `enclose(k)` shrink
/// to it as `k` grows.
pub(crate) fn locate_root(p: &Poly<Rational>, enclose: impl Fn(u32) -> Interval) -> AlgebraicReal {
    let p = p.square_free_part().unwrap();
    let seq = SturmSequence::new(&p).unwrap();
    let mut k = 4u32;
    loop {
        let e = enclose(k);
        let lo = &e.lo - pow2(-(k as i64));
        let hi = e.hi.clone();
        if seq.count(&lo, &hi).unwrap() == 1 {
            return AlgebraicReal::from_isolated(p, lo, hi);
        }
        k += 4;
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", field::format_rational(&r));
        }
        let iv = self.isolating_interval();
        write!(
            f,
            "root of {} in ({}, {}]",
            self.defining_polynomial(),
            field::format_rational(&iv.lo),
            field::format_rational(&iv.hi)
        )
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Field for AlgebraicReal {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.sign() == Sign::Zero
    }
    fn add(&self, other: &Self) -> Self {
        super::arith::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        super::arith::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        super::arith::mul(self, other)
    }
    fn neg(&self) -> Self {
        super::arith::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        super::arith::invert(self).ok()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_rational(r.clone())
    }
    fn eq_exact(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl OrderedField for AlgebraicReal {
    fn sign(&self) -> Sign {
        AlgebraicReal::sign(self)
    }
}

pub fn sign_of_poly_at(q: &Poly<Rational>, a: &AlgebraicReal) -> Sign {
    a.sign_of_poly_at(q)
}

pub fn approx(a: &AlgebraicReal, k: u32) -> Rational {
    a.approx(k)
}

pub fn minimal_polynomial(a: &AlgebraicReal) -> Poly<Rational> {
    a.minimal_polynomial()
}
