//! Multivariate rational polynomials for initial data.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{abs, int, Rational};

/// Sparse polynomial in `nvars` variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn binom(n: u32, k: u32) -> Rational {
    let mut r = int(1);
    for i in 0..k {
        r = r * int((n - i) as i64) / int((i + 1) as i64);
    }
    r
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c).unwrap();
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    /// Univariate polynomial from coefficients, constant term first.
    pub fn univariate(coeffs: &[Rational]) -> Self {
        Self::from_terms(1, coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone()))).unwrap()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) -> Result<()> {
        if exps.len() != self.nvars {
            return Err(Error::Shape(format!("monomial with {} exponents in {} variables", exps.len(), self.nvars)));
        }
        let e = self.terms.entry(exps).or_insert_with(|| int(0));
        *e += c;
        if *e == int(0) {
            self.terms.retain(|_, v| *v != int(0));
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut s = int(0);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            s += t;
        }
        s
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut f = e.clone();
                f[var] -= 1;
                p.add_term(f, c * int(e[var] as i64)).unwrap();
            }
        }
        p
    }

    fn degrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.nvars];
        for e in self.terms.keys() {
            for (di, &k) in d.iter_mut().zip(e) {
                *di = (*di).max(k);
            }
        }
        d
    }

    /// Upper bound on `sup |p|` over `[0,1]^m` from the tensor Bernstein coefficients.
    pub fn sup_bound_unit_cube(&self) -> Rational {
        if self.is_zero() {
            return int(0);
        }
        let d = self.degrees();
        let total: usize = d.iter().map(|&k| k as usize + 1).product();
        let mut best = int(0);
        for idx in 0..total {
            let mut j = Vec::with_capacity(self.nvars);
            let mut r = idx;
            for &dk in &d {
                j.push((r % (dk as usize + 1)) as u32);
                r /= dk as usize + 1;
            }
            let mut b = int(0);
            for (e, c) in &self.terms {
                if e.iter().zip(&j).any(|(k, jj)| k > jj) {
                    continue;
                }
                let mut t = c.clone();
                for i in 0..self.nvars {
                    t = t * binom(j[i], e[i]) / binom(d[i], e[i]);
                }
                b += t;
            }
            best = best.max(abs(&b));
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn bump_bounds() {
        // x^2 (1 - x)^2
        let g = MPoly::univariate(&[int(0), int(0), int(1), int(-2), int(1)]);
        assert_eq!(g.eval(&[rat(1, 2)]), rat(1, 16));
        assert_eq!(g.derivative(0).sup_bound_unit_cube(), rat(2, 3));
        assert_eq!(g.derivative(0).derivative(0).sup_bound_unit_cube(), int(4));
        let xy = MPoly::from_terms(2, [(vec![1, 1], int(3))]).unwrap();
        assert_eq!(xy.sup_bound_unit_cube(), int(3));
        assert_eq!(xy.eval(&[rat(1, 2), rat(1, 3)]), rat(1, 2));
    }
}
