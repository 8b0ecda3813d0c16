//! Characteristic polynomials by Hessenberg reduction.

use crate::field::{Field, Rational};
use crate::poly::Poly;

/// `det(x I - m)` for a square matrix given by rows.
pub fn char_poly_rows<F: Field>(m: &[Vec<F>]) -> Poly<F> {
    let n = m.len();
    let mut h: Vec<Vec<F>> = m.to_vec();
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| !h[i][k].is_zero()) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let pinv = h[k + 1][k].inv().unwrap();
        for i in k + 2..n {
            if h[i][k].is_zero() {
                continue;
            }
            let u = h[i][k].mul(&pinv);
            for j in 0..n {
                let t = u.mul(&h[k + 1][j]);
                h[i][j] = h[i][j].sub(&t);
            }
            for j in 0..n {
                let t = u.mul(&h[j][i]);
                h[j][k + 1] = h[j][k + 1].add(&t);
            }
        }
    }
    let x = Poly::<F>::x();
    let mut p: Vec<Poly<F>> = vec![Poly::one()];
    for mm in 1..=n {
        let mut next = x.sub(&Poly::constant(h[mm - 1][mm - 1].clone())).mul(&p[mm - 1]);
        let mut prod = F::one();
        for i in (1..mm).rev() {
            prod = prod.mul(&h[i][i - 1]);
            if prod.is_zero() {
                break;
            }
            let c = h[i - 1][mm - 1].mul(&prod);
            next = next.sub(&p[i - 1].scale(&c));
        }
        p.push(next);
    }
    p.pop().unwrap()
}

pub fn char_poly_rational(m: &[Vec<Rational>]) -> Poly<Rational> {
    char_poly_rows(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(char_poly_rational(&m(&[&[2, 0], &[0, 3]])), Poly::from_ints(&[6, -5, 1]));
        assert_eq!(char_poly_rational(&m(&[&[2, 1], &[1, 2]])), Poly::from_ints(&[3, -4, 1]));
        let a = m(&[&[1, 2, 3, 4], &[0, 1, 5, 2], &[7, 1, 0, 1], &[2, 2, 1, 3]]);
        let p = char_poly_rational(&a);
        assert_eq!(p.deg0(), 4);
        // trace and determinant
        assert_eq!(p.coeff(3), int(-5));
        assert_eq!(p.coeff(0), int(-39));
    }
}
