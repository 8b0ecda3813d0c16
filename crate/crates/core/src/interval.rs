//! Closed rational intervals for enclosure arithmetic.

use num_traits::{Signed, Zero};

use crate::field::{Rational, Sign};

/// Closed interval `[lo, hi]`, `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(r: Rational) -> Interval {
        Interval { lo: r.clone(), hi: r }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    /// Sign shared by every point, if any.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn scale(&self, r: &Rational) -> Interval {
        if r.is_negative() {
            Interval::new(&self.hi * r, &self.lo * r)
        } else {
            Interval::new(&self.lo * r, &self.hi * r)
        }
    }

    /// Reciprocal, `None` when the interval meets zero.
    pub fn inv(&self) -> Option<Interval> {
        if self.contains_zero() {
            None
        } else {
            Some(Interval::new(self.hi.recip(), self.lo.recip()))
        }
    }

    pub fn abs_max(&self) -> Rational {
        std::cmp::max(self.lo.abs(), self.hi.abs())
    }

    pub fn pow(&self, k: usize) -> Interval {
        let mut r = Interval::point(Rational::from_integer(1.into()));
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    #[test]
    fn arithmetic_encloses() {
        let a = Interval::new(int(-1), int(2));
        let b = Interval::new(int(3), int(4));
        assert_eq!(a.mul(&b), Interval::new(int(-4), int(8)));
        assert_eq!(a.sub(&b), Interval::new(int(-5), int(-1)));
        assert_eq!(b.inv().unwrap(), Interval::new(rat(1, 4), rat(1, 3)));
        assert!(a.inv().is_none());
        assert_eq!(a.sign(), None);
        assert_eq!(b.sign(), Some(Sign::Positive));
        assert_eq!(a.scale(&int(-2)), Interval::new(int(-4), int(2)));
    }
}
