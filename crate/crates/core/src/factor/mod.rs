//! Factorization of rational polynomials into irreducibles.
//!
//! Square-free decomposition first, then for each square-free part a
//! modular factorization (distinct degree, Cantor-Zassenhaus), quadratic
//! Hensel lifting past the Mignotte bound, and subset recombination.

pub mod hensel;
pub mod modp;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::poly::Poly;

/// `unit * prod(f_i ^ e_i)` with each `f_i` monic irreducible.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Poly<Rational>, usize)>,
}

impl Factorization {
    pub fn product(&self) -> Poly<Rational> {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(*e));
        }
        acc
    }
}

const SMALL_PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Deterministic order: by degree, then coefficients from the top down.
pub fn poly_order(a: &Poly<Rational>, b: &Poly<Rational>) -> Ordering {
    a.deg0().cmp(&b.deg0()).then_with(|| {
        for (x, y) in a.coeffs().iter().rev().zip(b.coeffs().iter().rev()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

pub fn factor_rational(p: &Poly<Rational>) -> Result<Factorization> {
    let unit = p.lead().ok_or(Error::ZeroPolynomial)?.clone();
    let mut factors = Vec::new();
    if p.deg0() > 0 {
        for (j, part) in p.square_free_decomposition()?.iter().enumerate() {
            if part.deg0() == 0 {
                continue;
            }
            for f in factor_square_free(part) {
                factors.push((f, j + 1));
            }
        }
    }
    factors.sort_by(|a, b| poly_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

/// Distinct monic irreducible factors of `p`.
pub fn irreducible_factors(p: &Poly<Rational>) -> Result<Vec<Poly<Rational>>> {
    let mut v = factor_square_free(&p.square_free_part()?);
    v.sort_by(poly_order);
    Ok(v)
}

/// Monic irreducible factors of a square-free polynomial of positive degree.
pub fn factor_square_free(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let f = p.integer_normal().primitive_integer();
    let mut out: Vec<Poly<Rational>> =
        zassenhaus(&f).iter().map(|g| Poly::from_integers(g).monic()).collect();
    out.sort_by(poly_order);
    out
}

fn content_free(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut w: Vec<BigInt> = v.into_iter().map(|c| c / &g).collect();
    if w.last().is_some_and(|l| l.is_negative()) {
        w.iter_mut().for_each(|c| *c = -c.clone());
    }
    w
}

fn divides(g: &[BigInt], f: &[BigInt]) -> Option<Vec<BigInt>> {
    if !f[0].is_zero() && !g[0].is_zero() && !(&f[0] % &g[0]).is_zero() {
        return None;
    }
    let (q, r) = Poly::from_integers(f).divmod(&Poly::from_integers(g)).ok()?;
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

fn choose_prime(f: &[BigInt], lc: &BigInt) -> Option<(u64, Vec<(usize, modp::Fp)>)> {
    let mut best: Option<(u64, Vec<(usize, modp::Fp)>, usize)> = None;
    let mut tried = 0;
    for &p in SMALL_PRIMES.iter() {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::monic(&modp::from_ints(f, p), p);
        if !modp::is_square_free(&fp, p) {
            continue;
        }
        let dd = modp::distinct_degree(&fp, p);
        let count: usize = dd.iter().map(|(d, g)| (g.len() - 1) / d).sum();
        if best.as_ref().is_none_or(|b| count < b.2) {
            best = Some((p, dd, count));
        }
        tried += 1;
        if count == 1 || tried == 5 {
            break;
        }
    }
    best.map(|(p, dd, _)| (p, dd))
}

/// Irreducible factors over the integers of a primitive square-free polynomial.
pub fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].clone();
    let (p, dd) = choose_prime(f, &lc).expect("no suitable prime among the small primes");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut modular = Vec::new();
    for (d, g) in &dd {
        modular.extend(modp::equal_degree(g, *d, p, &mut rng));
    }
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    modular.sort();

    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let b = (BigInt::one() << n) * (norm_sq.sqrt() + 1u32);
    let need = BigInt::from(2u32) * lc.abs() * &b;
    let mut k = BigInt::from(p);
    while k <= need {
        k = &k * &k;
    }
    let fz: Vec<BigInt> = f.to_vec();
    let lifted = hensel::lift(&fz, &modular, p, &k);

    let half = &k >> 1;
    let sym = |v: Vec<BigInt>| -> Vec<BigInt> {
        v.into_iter().map(|c| if c > half { c - &k } else { c }).collect()
    };

    let mut remaining: Vec<hensel::Zp> = lifted;
    let mut fcur = fz;
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut hit = None;
        for subset in combinations(remaining.len(), s) {
            let lcur = fcur.last().unwrap().clone();
            let mut g: hensel::Zp = vec![lcur];
            for &i in &subset {
                g = hensel::mul(&g, &remaining[i], &k);
            }
            let g = content_free(sym(g));
            if let Some(q) = divides(&g, &fcur) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                fcur = content_free(q);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, v)| v)
                    .collect();
            }
            None => s += 1,
        }
    }
    if fcur.len() > 1 {
        found.push(fcur);
    }
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_ints(c)
    }

    #[test]
    fn x4_minus_1() {
        let f = factor_rational(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.unit, int(1));
        let fs: Vec<_> = f.factors.iter().map(|(q, e)| (q.clone(), *e)).collect();
        assert_eq!(fs, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_irreducible() {
        let f = factor_rational(&p(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[1, 0, -10, 0, 1]), 1)]);
    }

    #[test]
    fn unit_extracted() {
        let f = factor_rational(&p(&[-6, 0, 6])).unwrap();
        assert_eq!(f.unit, int(6));
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn multiplicities_and_product() {
        let g = p(&[-2, 0, 1]).pow(2).mul(&p(&[3, 1])).mul(&p(&[1, 1, 1]).pow(3)).scale(&int(-4));
        let f = factor_rational(&g).unwrap();
        assert_eq!(f.product(), g);
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.factors[0], (p(&[3, 1]), 1));
    }

    #[test]
    fn zero_is_error() {
        assert!(factor_rational(&p(&[])).is_err());
    }

    #[test]
    fn many_modular_factors() {
        // x^8 - 1 and a Swinnerton-Dyer style product split into many pieces mod p
        let f = p(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fs = irreducible_factors(&f).unwrap();
        assert_eq!(fs.len(), 4);
        let sd3 = p(&[576, 0, -960, 0, 352, 0, -40, 0, 1]);
        assert_eq!(irreducible_factors(&sd3).unwrap(), vec![sd3]);
    }
}
