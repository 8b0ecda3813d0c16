//! Real-root localization: root bounds, Sturm sequences, separation bounds
//! and isolating intervals.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{int, sqrt_lower, Field, Rational, Sign};
use crate::poly::{sign_at_int, Poly};

/// Half-open interval `(lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidInterval);
        }
        Ok(IsolatingInterval { lo, hi })
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBound {
    pub bound: Rational,
}

/// `1 + a / |a_m|` with `a` the largest lower coefficient magnitude.
pub fn root_bound(p: &Poly<Rational>) -> Result<RootBound> {
    let m = p.degree().ok_or(Error::ZeroPolynomial)?;
    let a = p.coeffs()[..m].iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero);
    Ok(RootBound { bound: int(1) + a / p.coeffs()[m].abs() })
}

#[derive(Debug, Clone)]
pub struct SturmSequence {
    polys: Vec<Poly<Rational>>,
    ints: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &Poly<Rational>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            polys.push(d);
            loop {
                let n = polys.len();
                let r = polys[n - 2].rem(&polys[n - 1])?.neg();
                if r.is_zero() {
                    break;
                }
                polys.push(r);
            }
        }
        let ints = polys.iter().map(|q| q.primitive_integer()).collect();
        Ok(SturmSequence { polys, ints })
    }

    pub fn polys(&self) -> &[Poly<Rational>] {
        &self.polys
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::Zero;
        let mut v = 0;
        for s in signs {
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

    pub fn variations_at(&self, c: &Rational) -> usize {
        Self::variations(self.ints.iter().map(|q| sign_at_int(q, c)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.ints.iter().map(|q| {
            let s = Sign::of_int(q.last().unwrap());
            if !positive && (q.len() - 1) % 2 == 1 {
                s.flip()
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> Result<usize> {
        if a >= b {
            return Err(Error::InvalidInterval);
        }
        Ok(self.variations_at(a) - self.variations_at(b))
    }

    /// Number of distinct real roots.
    pub fn total(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    pub fn sign_at(&self, c: &Rational) -> Sign {
        sign_at_int(&self.ints[0], c)
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn sturm_count(p: &Poly<Rational>, a: &Rational, b: &Rational) -> Result<usize> {
    if a >= b {
        return Err(Error::InvalidInterval);
    }
    SturmSequence::new(p)?.count(a, b)
}

/// Positive rational below the minimal distance between distinct roots,
/// `m^-(m+2) |D|^(1/2) L^-(m-1)` on the primitive square-free part.
pub fn separation_lower_bound(p: &Poly<Rational>) -> Result<Rational> {
    let m = p.degree().ok_or(Error::ZeroPolynomial)?;
    if m < 2 {
        return Err(Error::DegreeTooSmall { needed: 2, found: m });
    }
    let q = p.square_free_part()?.integer_normal();
    let m = q.deg0();
    if m < 2 {
        // a single root: every positive number is a valid bound
        return Ok(int(1));
    }
    let d = q.discriminant()?.abs();
    let root_d = sqrt_lower(&d, 16);
    let l = q.l1_norm();
    let mm = int(m as i64);
    let denom = pow_r(&mm, m + 2) * pow_r(&l, m - 1);
    Ok(root_d / denom)
}

fn pow_r(a: &Rational, k: usize) -> Rational {
    let mut r = int(1);
    for _ in 0..k {
        r *= a;
    }
    r
}

/// Pairwise disjoint, increasing intervals of width at most `eps`, one per
/// distinct real root of `p`.
pub fn isolate_real_roots(p: &Poly<Rational>, eps: &Rational) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !eps.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    if p.deg0() == 0 {
        return Ok(Vec::new());
    }
    let q = p.square_free_part()?;
    let seq = SturmSequence::new(&q)?;
    let b = root_bound(&q)?.bound;
    let delta = if q.deg0() >= 2 { separation_lower_bound(&q)? } else { int(1) };
    let mut out = Vec::new();
    let total = seq.total();
    let lo = -b.clone();
    bisect(&seq, lo, b, total, eps, &delta, &mut out);
    Ok(out)
}

fn bisect(
    seq: &SturmSequence,
    lo: Rational,
    hi: Rational,
    count: usize,
    eps: &Rational,
    delta: &Rational,
    out: &mut Vec<IsolatingInterval>,
) {
    if count == 0 {
        return;
    }
    let w = &hi - &lo;
    if count == 1 && &w <= eps {
        out.push(IsolatingInterval { lo, hi });
        return;
    }
    // two roots never sit closer than delta
    assert!(count == 1 || &w >= delta, "separation bound violated");
    let mid = (&lo + &hi) / int(2);
    if seq.sign_at(&mid) == Sign::Zero {
        let mut pw = std::cmp::min(eps.clone(), &mid - &lo) / int(2);
        loop {
            let a = &mid - &pw;
            if seq.count(&a, &mid).unwrap() == 1 {
                let left = seq.count(&lo, &a).unwrap();
                bisect(seq, lo, a.clone(), left, eps, delta, out);
                out.push(IsolatingInterval { lo: a, hi: mid.clone() });
                let right = count - left - 1;
                bisect(seq, mid, hi, right, eps, delta, out);
                return;
            }
            pw /= int(2);
        }
    }
    let left = seq.count(&lo, &mid).unwrap();
    bisect(seq, lo, mid.clone(), left, eps, delta, out);
    bisect(seq, mid, hi, count - left, eps, delta, out);
}

/// Narrows an isolating interval of a square-free `p` to width at most `w`.
pub fn refine(seq: &SturmSequence, iv: &IsolatingInterval, w: &Rational) -> IsolatingInterval {
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    while &(&hi - &lo) > w {
        let mid = (&lo + &hi) / int(2);
        if seq.sign_at(&mid) == Sign::Zero {
            return IsolatingInterval { lo: &mid - &(w / int(2)), hi: mid };
        }
        if seq.count(&lo, &mid).unwrap() == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    IsolatingInterval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_ints(c)
    }

    #[test]
    fn root_bounds() {
        assert_eq!(root_bound(&p(&[-2, 0, 1])).unwrap().bound, int(3));
        assert_eq!(root_bound(&p(&[-5, 1])).unwrap().bound, int(6));
        assert_eq!(root_bound(&p(&[0, 0, 0, 1])).unwrap().bound, int(1));
        assert!(root_bound(&p(&[])).is_err());
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(sturm_count(&p(&[0, -1, 0, 1]), &int(-2), &int(2)).unwrap(), 3);
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), &int(0), &int(2)).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &int(-10), &int(10)).unwrap(), 0);
        assert_eq!(sturm_count(&p(&[0, -1, 0, 1]), &int(-1), &int(1)).unwrap(), 2);
        assert!(sturm_count(&p(&[1, 1]), &int(1), &int(1)).is_err());
    }

    #[test]
    fn sturm_sequence_shape() {
        let s = SturmSequence::new(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(s.polys()[0], p(&[-2, 0, 1]));
        assert_eq!(s.polys()[1], p(&[0, 2]));
        assert_eq!(s.polys()[2], p(&[2]));
        assert_eq!(s.total(), 2);
    }

    #[test]
    fn separation_examples() {
        let d = separation_lower_bound(&p(&[-2, 0, 1])).unwrap();
        assert!(d.is_positive());
        // d <= 2^-4 sqrt(8) / 3 and the true gap is 2 sqrt(2)
        let scaled = &d * int(48);
        assert!(&scaled * &scaled <= int(8));
        assert!(d < rat(5893, 100000));
        assert!(separation_lower_bound(&p(&[2, -3, 1])).unwrap() < int(1));
        assert!(separation_lower_bound(&p(&[0, -1, 0, 1])).unwrap() < int(1));
        assert!(separation_lower_bound(&p(&[1, 1])).is_err());
    }

    #[test]
    fn isolation_examples() {
        let iv = isolate_real_roots(&p(&[-2, 0, 1]), &rat(1, 4)).unwrap();
        assert_eq!(iv.len(), 2);
        for (i, s) in iv.iter().zip([-1i64, 1]) {
            assert!(i.width() <= rat(1, 4));
            // sign of root: s*sqrt(2) in (lo, hi]
            let lo2 = &i.lo * &i.lo;
            let hi2 = &i.hi * &i.hi;
            if s > 0 {
                assert!(i.lo.is_positive() && lo2 < int(2) && hi2 >= int(2));
            } else {
                assert!(i.hi.is_negative() && hi2 < int(2) && lo2 > int(2));
            }
        }
        assert!(isolate_real_roots(&p(&[1, 0, 1]), &int(1)).unwrap().is_empty());
        let cubic = p(&[-1, 1]).mul(&p(&[-2, 1])).mul(&p(&[-3, 1]));
        let iv = isolate_real_roots(&cubic, &rat(1, 2)).unwrap();
        assert_eq!(iv.len(), 3);
        for (i, r) in iv.iter().zip(1..=3) {
            assert!(i.lo < int(r) && int(r) <= i.hi);
        }
    }

    #[test]
    fn root_at_midpoint_gets_pinched() {
        // bound 2, first midpoint 0 is a root
        let f = p(&[0, -1, 0, 1]);
        let iv = isolate_real_roots(&f, &int(1)).unwrap();
        assert_eq!(iv.len(), 3);
        assert!(iv[1].lo < int(0) && iv[1].hi == int(0));
        for w in iv.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn errors() {
        assert!(isolate_real_roots(&p(&[]), &int(1)).is_err());
        assert!(isolate_real_roots(&p(&[1, 1]), &int(0)).is_err());
    }

    #[test]
    fn refine_narrows() {
        let f = p(&[-2, 0, 1]);
        let s = SturmSequence::new(&f).unwrap();
        let iv = isolate_real_roots(&f, &int(1)).unwrap();
        let r = refine(&s, &iv[1], &rat(1, 1 << 20));
        assert!(r.width() <= rat(1, 1 << 20));
        assert_eq!(s.count(&r.lo, &r.hi).unwrap(), 1);
    }
}
