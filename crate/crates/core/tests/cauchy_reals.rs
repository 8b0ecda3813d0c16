use exactreal::algebraic::{approx, AlgebraicReal};
use exactreal::cauchy::{embed, tilde, FastCauchyReal, RationalSequence};
use exactreal::field::{abs, int, pow2, rat, Field, Rational};
use proptest::prelude::*;

fn within(a: &Rational, b: &Rational, k: i64) -> bool {
    abs(&(a - b)) <= pow2(-k)
}

fn sqrt2() -> AlgebraicReal {
    AlgebraicReal::from_int(2).sqrt().unwrap()
}

fn pow10(k: u32) -> Rational {
    (0..k).fold(int(1), |a, _| a * int(10))
}

/// Fifty digits of sqrt(2) / 2.
fn half_sqrt2_ref() -> Rational {
    exactreal::field::parse_rational("70710678118654752440084436210484903928483593768847").unwrap() / pow10(50)
}

#[test]
fn tilde_examples() {
    let p = RationalSequence::new(|i| if i == 0 { int(0) } else { int(1) });
    let t = tilde(&p);
    for i in 0..20 {
        assert_eq!(t.at(i), int(0));
    }
    let fc = RationalSequence::new(|i| pow2(-(i as i64)) * int(3) / int(4));
    let t = tilde(&fc);
    for i in 0..40 {
        assert_eq!(t.at(i), fc.at(i));
    }
    assert_eq!(tilde(&RationalSequence::constant(int(7))).at(30), int(7));
}

#[test]
fn tilde_freezes_at_first_violation() {
    // fast for i < 3, then a jump of 1 between indices 3 and 4
    let p = RationalSequence::new(|i| if i <= 3 { pow2(-(i as i64)) / int(4) } else { int(1) });
    let t = tilde(&p);
    assert_eq!(t.at(2), p.at(2));
    assert_eq!(t.at(3), p.at(3));
    assert_eq!(t.at(4), p.at(3));
    assert_eq!(t.at(50), p.at(3));
}

#[test]
fn arithmetic_examples() {
    let a = FastCauchyReal::constant(rat(1, 2));
    let b = FastCauchyReal::constant(rat(1, 3));
    assert_eq!(a.add(&b).approx(30), rat(5, 6));
    let x = embed(&sqrt2());
    assert!(within(&x.sub(&x).approx(40), &int(0), 40));
    let sq = x.mul(&x);
    assert!(within(&sq.approx(20), &int(2), 20));
    assert!(sq.check_prefix(64));
}

#[test]
fn reciprocal_examples() {
    let r = FastCauchyReal::constant(rat(1, 3)).reciprocal_bounded(2);
    assert!(within(&r.at(25), &int(3), 20));
    let r = FastCauchyReal::constant(int(-2)).reciprocal_bounded(0);
    assert!(within(&r.approx(30), &rat(-1, 2), 30));
    let r = embed(&sqrt2()).reciprocal_bounded(0);
    assert!(within(&r.approx(20), &half_sqrt2_ref(), 20));
    assert!(r.check_prefix(64));
}

#[test]
fn embed_examples() {
    let e = embed(&AlgebraicReal::from_rational(rat(3, 4)));
    assert_eq!(e.approx(10), rat(3, 4));
    let e = embed(&sqrt2());
    let r = exactreal::field::parse_rational("141421356237309504880168872420969807856967187537694").unwrap() / pow10(50);
    assert!(within(&e.approx(60), &r, 60));
    assert_eq!(embed(&AlgebraicReal::from_int(0)).approx(5), int(0));
    assert!(e.check_prefix(64));
}

fn arb_seq() -> impl Strategy<Value = RationalSequence> {
    prop::collection::vec((-1000i64..1000, 1i64..64), 1..12).prop_map(|v| {
        RationalSequence::from_prefix(v.into_iter().map(|(a, b)| rat(a, b)).collect())
    })
}

fn arb_alg() -> impl Strategy<Value = AlgebraicReal> {
    (prop::collection::vec(-5i64..=5, 2..=4), 0usize..3).prop_filter_map("real root", |(mut c, k)| {
        if *c.last().unwrap() == 0 {
            *c.last_mut().unwrap() = 1;
        }
        let roots = AlgebraicReal::real_roots(&exactreal::Poly::from_ints(&c));
        (!roots.is_empty()).then(|| roots[k % roots.len()].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tilde_idempotent(p in arb_seq()) {
        let t = tilde(&p);
        let tt = tilde(t.seq());
        for i in 0..40 {
            prop_assert_eq!(t.at(i), tt.at(i));
        }
        prop_assert!(t.check_prefix(64));
    }

    #[test]
    fn operations_stay_fast_cauchy(p in arb_seq(), q in arb_seq()) {
        let x = tilde(&p);
        let y = tilde(&q);
        prop_assert!(x.add(&y).check_prefix(64));
        prop_assert!(x.sub(&y).check_prefix(64));
        prop_assert!(x.mul(&y).check_prefix(64));
        prop_assert!(x.neg().check_prefix(64));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn embedding_is_coherent(a in arb_alg(), b in arb_alg()) {
        let x = embed(&a);
        let y = embed(&b);
        prop_assert!(x.check_prefix(64));
        let s = x.add(&y);
        prop_assert!(abs(&(s.approx(20) - (approx(&a, 22) + approx(&b, 22)))) <= pow2(-19));
        let p = x.mul(&y);
        prop_assert!(p.check_prefix(64));
        let ab = a.mul(&b);
        prop_assert!(abs(&(p.approx(30) - approx(&ab, 32))) <= pow2(-29));
    }
}
