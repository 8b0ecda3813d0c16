//! Quadratic Hensel lifting of a modular factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::{self, Fp};

pub type Zp = Vec<BigInt>;

fn trim(mut v: Zp) -> Zp {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub fn reduce(a: &[BigInt], m: &BigInt) -> Zp {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn add(a: &Zp, b: &Zp, m: &BigInt) -> Zp {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m)).collect())
}

fn sub(a: &Zp, b: &Zp, m: &BigInt) -> Zp {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m)).collect())
}

pub fn mul(a: &Zp, b: &Zp, m: &BigInt) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    reduce(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn divmod_monic(a: &Zp, b: &Zp, m: &BigInt) -> (Zp, Zp) {
    let db = b.len() - 1;
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * y).mod_floor(m);
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), reduce(&r, m))
}

fn to_zp(a: &Fp) -> Zp {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Lifts `f = g h mod p` to `f = g* h* mod target` where `target = p^(2^j)`.
fn lift_pair(f: &Zp, g: &Fp, h: &Fp, p: u64, target: &BigInt) -> (Zp, Zp) {
    let (one, s, t) = modp::xgcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h, mut s, mut t) = (to_zp(g), to_zp(h), to_zp(&s), to_zp(&t));
    let mut m = BigInt::from(p);
    while &m < target {
        let m2 = &m * &m;
        let e = sub(&reduce(f, &m2), &mul(&g, &h, &m2), &m2);
        let (q, r) = divmod_monic(&mul(&s, &e, &m2), &h, &m2);
        let g2 = add(&add(&g, &mul(&t, &e, &m2), &m2), &mul(&q, &g, &m2), &m2);
        let h2 = add(&h, &r, &m2);
        let b = sub(&add(&mul(&s, &g2, &m2), &mul(&t, &h2, &m2), &m2), &vec![BigInt::one()], &m2);
        let (c, d) = divmod_monic(&mul(&s, &b, &m2), &h2, &m2);
        s = sub(&s, &d, &m2);
        t = sub(&sub(&t, &mul(&t, &b, &m2), &m2), &mul(&c, &g2, &m2), &m2);
        g = g2;
        h = h2;
        m = m2;
    }
    (g, h)
}

/// Lifts monic modular factors of `f` (leading coefficient prime to `p`) to
/// monic factors modulo `target`, a power `p^(2^j)`.
pub fn lift(f: &Zp, factors: &[Fp], p: u64, target: &BigInt) -> Vec<Zp> {
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let li = mod_inverse(lc, target);
        let scaled: Zp = f.iter().map(|c| c * &li).collect();
        return vec![reduce(&scaled, target)];
    }
    let k = factors.len() / 2;
    let lc = u64::try_from(f.last().unwrap().mod_floor(&BigInt::from(p))).unwrap();
    let mut g: Fp = vec![lc];
    for a in &factors[..k] {
        g = modp::mul(&g, a, p);
    }
    let mut h: Fp = vec![1];
    for a in &factors[k..] {
        h = modp::mul(&h, a, p);
    }
    let (gl, hl) = lift_pair(f, &g, &h, p, target);
    let mut out = lift(&gl, &factors[..k], p, target);
    out.extend(lift(&hl, &factors[k..], p, target));
    out
}
