//! Computable reals as fast Cauchy sequences of rationals.
//!
//! Every operation is a total realizer: output index `i` reads input indices
//! shifted by an amount fixed from the inputs' first terms or from a caller
//! supplied witness, never found by search.

use std::fmt;
use std::sync::Arc;

use crate::algebraic::{approx, AlgebraicReal};
use crate::field::{abs, bit_length, ceil, int, pow2, Rational};

/// A total sequence of rationals.
#[derive(Clone)]
pub struct RationalSequence(Arc<dyn Fn(u64) -> Rational + Send + Sync>);

impl RationalSequence {
    pub fn new(f: impl Fn(u64) -> Rational + Send + Sync + 'static) -> Self {
        RationalSequence(Arc::new(f))
    }

    pub fn constant(r: Rational) -> Self {
        Self::new(move |_| r.clone())
    }

    /// The sequence `vals` continued by its last element.
    pub fn from_prefix(vals: Vec<Rational>) -> Self {
        assert!(!vals.is_empty());
        Self::new(move |i| vals[(i as usize).min(vals.len() - 1)].clone())
    }

    pub fn at(&self, i: u64) -> Rational {
        (self.0)(i)
    }
}

impl fmt::Debug for RationalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = (0..4).map(|i| self.at(i).to_string()).collect();
        write!(f, "[{}, ..]", head.join(", "))
    }
}

fn fast_step(a: &Rational, b: &Rational, i: u64) -> bool {
    abs(&(a - b)) < pow2(-(i as i64))
}

/// A real given by a sequence with `|q_n - q_(n+1)| < 2^-n`.
#[derive(Clone, Debug)]
pub struct FastCauchyReal {
    seq: RationalSequence,
}

/// Retraction onto fast Cauchy sequences: follows `p` while the condition
/// holds and stays at `p(i0)` from the first violation `i0` on.
pub fn tilde(p: &RationalSequence) -> FastCauchyReal {
    let p = p.clone();
    let seq = RationalSequence::new(move |n| {
        let mut prev = p.at(0);
        for i in 0..n {
            let next = p.at(i + 1);
            if !fast_step(&prev, &next, i) {
                return prev;
            }
            prev = next;
        }
        prev
    });
    FastCauchyReal { seq }
}

impl FastCauchyReal {
    /// Wraps a sequence already known to be fast Cauchy.
    pub fn from_fast_cauchy(seq: RationalSequence) -> Self {
        FastCauchyReal { seq }
    }

    pub fn constant(r: Rational) -> Self {
        FastCauchyReal { seq: RationalSequence::constant(r) }
    }

    pub fn seq(&self) -> &RationalSequence {
        &self.seq
    }

    pub fn at(&self, i: u64) -> Rational {
        self.seq.at(i)
    }

    /// A rational within `2^-k` of the limit.
    pub fn approx(&self, k: u64) -> Rational {
        self.at(k + 1)
    }

    /// Checks `|q_n - q_(n+1)| < 2^-n` for `n <= upto`.
    pub fn check_prefix(&self, upto: u64) -> bool {
        let mut prev = self.at(0);
        for i in 0..=upto {
            let next = self.at(i + 1);
            if !fast_step(&prev, &next, i) {
                return false;
            }
            prev = next;
        }
        true
    }

    fn shifted2(&self, o: &Self, f: impl Fn(Rational, Rational) -> Rational + Send + Sync + 'static, s: u64) -> Self {
        let (x, y) = (self.seq.clone(), o.seq.clone());
        FastCauchyReal { seq: RationalSequence::new(move |i| f(x.at(i + s), y.at(i + s))) }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.shifted2(o, |a, b| a + b, 2)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.shifted2(o, |a, b| a - b, 2)
    }

    pub fn neg(&self) -> Self {
        let x = self.seq.clone();
        FastCauchyReal { seq: RationalSequence::new(move |i| -x.at(i)) }
    }

    /// Shift `bitlen(ceil|x_0| + ceil|y_0| + 4)`: every term is within 2 of
    /// the first, which bounds both factors.
    pub fn mul(&self, o: &Self) -> Self {
        let m = ceil(&abs(&self.at(0))) + ceil(&abs(&o.at(0))) + 4;
        let s = bit_length(&m);
        self.shifted2(o, |a, b| a * b, s)
    }

    /// `1 / x` under the promise `|x| >= 1/(n+1)`. Shift `bitlen(4 (n+1)^2)`
    /// keeps the terms used at least `1/(2(n+1))` away from zero. If the
    /// promise fails the result is meaningless but still total.
    pub fn reciprocal_bounded(&self, n: u64) -> Self {
        let w = int(4) * int((n + 1) as i64) * int((n + 1) as i64);
        let s = bit_length(w.numer());
        let x = self.seq.clone();
        FastCauchyReal {
            seq: RationalSequence::new(move |i| {
                let v = x.at(i + s);
                if v == int(0) {
                    v
                } else {
                    int(1) / v
                }
            }),
        }
    }
}

/// `seq(i) = approx(a, i)`.
pub fn embed(a: &AlgebraicReal) -> FastCauchyReal {
    let a = a.clone();
    FastCauchyReal { seq: RationalSequence::new(move |i| approx(&a, i as u32)) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn tilde_freezes() {
        let p = RationalSequence::from_prefix(vec![int(0), int(1)]);
        let t = tilde(&p);
        assert!((0..10).all(|i| t.at(i) == int(0)));
        let c = tilde(&RationalSequence::constant(int(7)));
        assert_eq!(c.at(5), int(7));
    }

    #[test]
    fn arithmetic() {
        let a = FastCauchyReal::constant(rat(1, 2));
        let b = FastCauchyReal::constant(rat(1, 3));
        assert_eq!(a.add(&b).approx(10), rat(5, 6));
        assert_eq!(b.reciprocal_bounded(2).approx(25), int(3));
        assert_eq!(FastCauchyReal::constant(int(-2)).reciprocal_bounded(0).at(0), rat(-1, 2));
    }
}
