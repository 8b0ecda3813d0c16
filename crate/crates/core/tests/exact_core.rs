use exactreal::factor::factor_rational;
use exactreal::field::{int, rat, Rational};
use exactreal::{Error, Poly};
use proptest::prelude::*;

fn p(c: &[i64]) -> Poly<Rational> {
    Poly::from_ints(c)
}

fn arb_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly<Rational>> {
    proptest::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

fn arb_nonzero_lead(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly<Rational>> {
    (proptest::collection::vec(-bound..=bound, 0..=max_deg), 1..=bound, any::<bool>()).prop_map(|(mut c, l, s)| {
        c.push(if s { l } else { -l });
        Poly::from_ints(&c)
    })
}

#[test]
fn division_examples() {
    assert_eq!(p(&[-1, 0, 1]).divmod(&p(&[-1, 1])).unwrap(), (p(&[1, 1]), Poly::zero()));
    assert_eq!(p(&[1, 0, 1]).divmod(&p(&[0, 1])).unwrap(), (p(&[0, 1]), p(&[1])));
    assert_eq!(p(&[5, -2, 0, 1]).divmod(&p(&[1, 0, 1])).unwrap(), (p(&[0, 1]), p(&[5, -3])));
    assert_eq!(p(&[1, 1]).divmod(&Poly::zero()).unwrap_err(), Error::DivisionByZeroPolynomial);
}

#[test]
fn gcd_and_square_free_examples() {
    let a = p(&[-1, 0, 1]);
    assert_eq!(a.gcd(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
    assert_eq!(p(&[-2, 0, 1]).gcd(&p(&[-3, 0, 1])).unwrap(), p(&[1]));
    assert_eq!(p(&[0, -1, 0, 1]).gcd(&a).unwrap(), a);
    assert_eq!(Poly::<Rational>::zero().gcd(&Poly::zero()).unwrap_err(), Error::GcdOfZeros);

    // (x - 1)^2 (x + 2)
    let sq = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
    assert_eq!(sq.square_free_part().unwrap(), p(&[-1, 1]).mul(&p(&[2, 1])));
    assert_eq!(p(&[1, 0, -2, 0, 1]).square_free_part().unwrap(), a);
    assert!(p(&[3]).square_free_part().is_err());
}

#[test]
fn resultant_and_discriminant_examples() {
    assert_eq!(p(&[-5, 1]).resultant(&p(&[-3, 1])), int(2));
    assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-3, 0, 1])), int(1));
    assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-4, 0, 2])), int(0));
    assert_eq!(p(&[-2, 0, 1]).discriminant().unwrap(), int(8));
    assert_eq!(p(&[1, -2, 1]).discriminant().unwrap(), int(0));
    assert_eq!(p(&[0, -1, 0, 1]).discriminant().unwrap(), int(4));
    assert!(p(&[1, 1]).discriminant().is_err());
}

#[test]
fn eval_examples() {
    assert_eq!(p(&[-2, 0, 1]).eval(&int(2)), int(2));
    assert_eq!(Poly::<Rational>::zero().eval(&int(7)), int(0));
    assert_eq!(p(&[1, -3, 0, 1]).eval(&rat(1, 2)), rat(-3, 8));
}

#[test]
fn factor_examples() {
    let f = factor_rational(&p(&[-1, 0, 0, 0, 1])).unwrap();
    let fs: Vec<Poly<Rational>> = f.factors.iter().map(|(q, _)| q.clone()).collect();
    assert_eq!(fs.len(), 3);
    for want in [p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1])] {
        assert!(fs.contains(&want));
    }
    let g = factor_rational(&p(&[1, 0, -10, 0, 1])).unwrap();
    assert_eq!(g.factors, vec![(p(&[1, 0, -10, 0, 1]), 1)]);
    let h = factor_rational(&p(&[-6, 0, 6])).unwrap();
    assert_eq!(h.unit, int(6));
    assert_eq!(h.factors.len(), 2);
    assert_eq!(factor_rational(&Poly::zero()).unwrap_err(), Error::ZeroPolynomial);
}

/// Brute force over quadratic factors with small integer coefficients.
#[test]
fn quartic_has_no_small_quadratic_factor() {
    let q = p(&[1, 0, -10, 0, 1]);
    for b in -12..=12 {
        for c in -12..=12 {
            let (_, r) = q.divmod(&p(&[c, b, 1])).unwrap();
            assert!(!r.is_zero(), "x^2 + {b}x + {c} divides");
        }
    }
}

fn has_rational_root(f: &Poly<Rational>) -> bool {
    let c = f.primitive_integer();
    let (a0, an) = (c[0].clone(), c.last().unwrap().clone());
    if a0 == 0.into() {
        return true;
    }
    let divisors = |n: &num_bigint::BigInt| -> Vec<i64> {
        let n: i64 = i64::try_from(n.clone()).unwrap().abs();
        (1..=n).filter(|d| n % d == 0).collect()
    };
    for u in divisors(&a0) {
        for v in divisors(&an) {
            for s in [1, -1] {
                if f.eval(&rat(s * u, v)) == int(0) {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn divmod_reconstructs(a in arb_poly(8, 1000), b in arb_nonzero_lead(8, 1000)) {
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.deg0() < b.deg0());
    }

    #[test]
    fn gcd_divides_both(a in arb_nonzero_lead(6, 20), b in arb_nonzero_lead(6, 20), c in arb_nonzero_lead(2, 5)) {
        let (x, y) = (a.mul(&c), b.mul(&c));
        let g = x.gcd(&y).unwrap();
        prop_assert!(x.rem(&g).unwrap().is_zero());
        prop_assert!(y.rem(&g).unwrap().is_zero());
        prop_assert!(g.deg0() <= x.deg0().min(y.deg0()));
        prop_assert!(g.deg0() >= c.deg0());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in arb_nonzero_lead(4, 6), b in arb_nonzero_lead(4, 6), share in any::<bool>()) {
        let (x, y) = if share { (a.mul(&p(&[1, 1])), b.mul(&p(&[1, 1]))) } else { (a, b) };
        let r = x.resultant(&y);
        prop_assert_eq!(r == int(0), x.gcd(&y).unwrap().deg0() > 0);
    }

    #[test]
    fn discriminant_detects_square_factors(a in arb_nonzero_lead(3, 5), sq in any::<bool>()) {
        let f = if sq { a.mul(&a).mul(&p(&[1, 1])) } else { a.mul(&p(&[1, 1])) };
        prop_assume!(f.deg0() >= 2 && f.deg0() <= 6);
        let d = f.discriminant().unwrap();
        prop_assert_eq!(d == int(0), f.square_free_part().unwrap() != f.monic());
    }

    #[test]
    fn factorization_is_canonical(a in arb_nonzero_lead(3, 9), b in arb_nonzero_lead(3, 9)) {
        let f = a.mul(&b);
        let fac = factor_rational(&f).unwrap();
        prop_assert_eq!(fac.product(), f);
        for (g, _) in &fac.factors {
            prop_assert_eq!(g.lead().unwrap(), &int(1));
            if g.deg0() >= 2 {
                prop_assert!(!has_rational_root(g));
            }
        }
        // multiplying two factors back and refactoring returns the same multiset
        if fac.factors.len() >= 2 {
            let (g, e) = &fac.factors[0];
            let (h, k) = &fac.factors[1];
            let again = factor_rational(&g.pow(*e).mul(&h.pow(*k))).unwrap();
            let mut want = vec![(g.clone(), *e), (h.clone(), *k)];
            let mut got = again.factors.clone();
            let key = |x: &(Poly<Rational>, usize)| format!("{:?}", x);
            want.sort_by_key(key);
            got.sort_by_key(key);
            prop_assert_eq!(got, want);
        }
    }
}
