use exactreal::algebraic::AlgebraicReal;
use exactreal::field::{int, rat, Rational};
use exactreal::roots::*;
use exactreal::{Error, Poly};
use proptest::prelude::*;

fn p(c: &[i64]) -> Poly<Rational> {
    Poly::from_ints(c)
}

#[test]
fn bound_and_count_examples() {
    assert_eq!(root_bound(&p(&[-2, 0, 1])).unwrap().bound, int(3));
    assert_eq!(root_bound(&p(&[-5, 1])).unwrap().bound, int(6));
    assert_eq!(root_bound(&p(&[0, 0, 0, 1])).unwrap().bound, int(1));
    assert_eq!(sturm_count(&p(&[0, -1, 0, 1]), &int(-2), &int(2)).unwrap(), 3);
    assert_eq!(sturm_count(&p(&[-2, 0, 1]), &int(0), &int(2)).unwrap(), 1);
    assert_eq!(sturm_count(&p(&[1, 0, 1]), &int(-10), &int(10)).unwrap(), 0);
    assert_eq!(sturm_count(&p(&[1, 0, 1]), &int(1), &int(1)).unwrap_err(), Error::InvalidInterval);
}

#[test]
fn separation_examples() {
    let d = separation_lower_bound(&p(&[-2, 0, 1])).unwrap();
    assert!(d > int(0) && d < rat(5893, 100000));
    assert!(separation_lower_bound(&p(&[2, -3, 1])).unwrap() < int(1));
    assert!(separation_lower_bound(&p(&[0, -1, 0, 1])).unwrap() < int(1));
    assert!(separation_lower_bound(&p(&[1, 1])).is_err());
}

#[test]
fn isolation_examples() {
    let iv = isolate_real_roots(&p(&[-2, 0, 1]), &rat(1, 4)).unwrap();
    assert_eq!(iv.len(), 2);
    // -sqrt 2 in the first, sqrt 2 in the second
    assert!(iv[0].hi < int(0) && int(0) < iv[1].lo);
    for i in &iv {
        assert!(i.width() <= rat(1, 4));
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), &i.lo, &i.hi).unwrap(), 1);
    }
    assert!(isolate_real_roots(&p(&[1, 0, 1]), &int(1)).unwrap().is_empty());
    let three = isolate_real_roots(&p(&[-6, 11, -6, 1]), &rat(1, 2)).unwrap();
    for (i, r) in three.iter().zip(1..=3) {
        assert!(i.lo < int(r) && int(r) <= i.hi);
    }
    assert_eq!(isolate_real_roots(&Poly::zero(), &int(1)).unwrap_err(), Error::ZeroPolynomial);
}

fn arb_square_free() -> impl Strategy<Value = Poly<Rational>> {
    proptest::collection::vec(-100i64..=100, 2..=7)
        .prop_map(|c| Poly::from_ints(&c))
        .prop_filter("degree >= 1", |f| f.deg0() >= 1)
        .prop_map(|f| f.square_free_part().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isolation_is_certified(f in arb_square_free(), e in 0usize..3) {
        let eps = [int(1), rat(1, 8), rat(1, 64)][e].clone();
        let iv = isolate_real_roots(&f, &eps).unwrap();
        let b = root_bound(&f).unwrap().bound;
        prop_assert_eq!(iv.len(), sturm_count(&f, &-&b, &b).unwrap());
        for w in iv.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
        for i in &iv {
            prop_assert!(i.width() <= eps);
            prop_assert_eq!(sturm_count(&f, &i.lo, &i.hi).unwrap(), 1);
        }
    }

    #[test]
    fn separation_bound_is_below_the_gap(f in arb_square_free()) {
        prop_assume!(f.deg0() >= 2);
        let delta = separation_lower_bound(&f).unwrap();
        prop_assert!(delta > int(0));
        let roots = AlgebraicReal::real_roots(&f);
        for w in roots.windows(2) {
            // enclosures of width 2^-40 are far tighter than any realistic gap
            let (a, b) = (w[0].enclosure(40), w[1].enclosure(40));
            prop_assert!(delta < &b.lo - &a.hi);
        }
    }

    #[test]
    fn sturm_count_is_additive(f in arb_square_free(), c in -2000i64..2000) {
        let b = root_bound(&f).unwrap().bound;
        let c = rat(c, 1000);
        prop_assume!(f.eval(&c) != int(0) && -&b < c && c < b);
        let total = sturm_count(&f, &-&b, &b).unwrap();
        let left = sturm_count(&f, &-&b, &c).unwrap();
        let right = sturm_count(&f, &c, &b).unwrap();
        prop_assert_eq!(left + right, total);
    }
}
