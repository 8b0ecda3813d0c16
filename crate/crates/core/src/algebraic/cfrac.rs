//! Floors and canonical continued fractions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::field::Rational;

use super::arith::{add_rational, invert};
use super::real::AlgebraicReal;

pub fn floor(a: &AlgebraicReal) -> BigInt {
    a.floor()
}

/// First `n` partial quotients; zeros after a rational expansion ends.
pub fn continued_fraction(a: &AlgebraicReal, n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    let x0 = a.floor();
    let mut d = add_rational(a, &-Rational::from_integer(x0.clone()));
    out.push(x0);
    let mut finished = false;
    while out.len() < n {
        if finished || d.is_zero_exact() {
            finished = true;
            out.push(BigInt::zero());
            continue;
        }
        let y = invert(&d).expect("nonzero remainder");
        let t = y.floor();
        d = add_rational(&y, &-Rational::from_integer(t.clone()));
        out.push(t);
    }
    out
}

impl AlgebraicReal {
    fn is_zero_exact(&self) -> bool {
        self.sign() == crate::field::Sign::Zero
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&i| BigInt::from(i)).collect()
    }

    #[test]
    fn examples() {
        let s2 = AlgebraicReal::from_int(2).sqrt().unwrap();
        assert_eq!(floor(&s2), BigInt::from(1));
        assert_eq!(floor(&s2.neg()), BigInt::from(-2));
        assert_eq!(continued_fraction(&s2, 5), ints(&[1, 2, 2, 2, 2]));
        assert_eq!(continued_fraction(&AlgebraicReal::from_rational(rat(7, 3)), 5), ints(&[2, 3, 0, 0, 0]));
        let golden = AlgebraicReal::from_int(5).sqrt().unwrap().add_q(&rat(1, 1)).scale_q(&rat(1, 2));
        assert_eq!(continued_fraction(&golden, 4), ints(&[1, 1, 1, 1]));
        assert_eq!(continued_fraction(&AlgebraicReal::from_rational(rat(-7, 3)), 3), ints(&[-3, 1, 2]));
    }
}
