//! Dense matrices over an exact field.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

use super::hessenberg::char_poly_rows;

#[derive(Clone)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

/// Outcome of solving `M x = b`.
#[derive(Clone, Debug)]
pub enum Solution<F> {
    Consistent { particular: Vec<F>, nullspace: Vec<Vec<F>> },
    Inconsistent,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[F]> = self.entries.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, o: &Self) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.entries.iter().zip(&o.entries).all(|(a, b)| a.eq_exact(b))
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![F::one(); n])
    }

    pub fn diag(d: &[F]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<F>]) -> Result<Self> {
        let m = Matrix::from_rows(cols.to_vec())?;
        Ok(m.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut e = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                e.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, entries: e }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j).eq_exact(self.get(j, i))))
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Shape(format!("{}x{} vs {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let e = self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries: e })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let e = self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries: e })
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut e = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut s = F::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    s = s.add(&a.mul(o.get(k, j)));
                }
                e.push(s);
            }
        }
        Ok(Matrix { rows: self.rows, cols: o.cols, entries: e })
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(F::zero(), |s, (a, b)| s.add(&a.mul(b))))
            .collect())
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        Ok(())
    }

    /// Determinant by Gaussian elimination with exact division.
    pub fn det(&self) -> Result<F> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.to_rows();
        let mut d = F::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(F::zero());
            };
            if p != k {
                a.swap(p, k);
                d = d.neg();
            }
            d = d.mul(&a[k][k]);
            let inv = a[k][k].inv().unwrap();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].mul(&inv);
                for j in k..n {
                    let t = f.mul(&a[k][j]);
                    a[i][j] = a[i][j].sub(&t);
                }
            }
        }
        Ok(d)
    }

    /// `det(x I - M)`, monic of degree `n`.
    pub fn char_poly(&self) -> Result<Poly<F>> {
        self.require_square()?;
        Ok(char_poly_rows(&self.to_rows()))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let inv = a[r][c].inv().unwrap();
            for j in c..self.cols {
                a[r][j] = a[r][j].mul(&inv);
            }
            for i in 0..self.rows {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for j in c..self.cols {
                    let t = f.mul(&a[r][j]);
                    a[i][j] = a[i][j].sub(&t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Matrix::from_rows(a).unwrap_or_else(|_| Matrix::zeros(self.rows, self.cols)), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column with a 1 there.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, piv) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !piv.contains(c)) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &pc) in piv.iter().enumerate() {
                v[pc] = r.get(row, free).neg();
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            e.extend_from_slice(&r.row(i)[n..]);
        }
        Matrix::new(n, n, e)
    }

    /// Particular solution and fundamental system of `M x = rhs`.
    pub fn solve_general(&self, rhs: &[F]) -> Result<Solution<F>> {
        if rhs.len() != self.rows {
            return Err(Error::Shape(format!("right-hand side of length {} for {} rows", rhs.len(), self.rows)));
        }
        let c = self.cols;
        let mut aug = Matrix::zeros(self.rows, c + 1);
        for i in 0..self.rows {
            for j in 0..c {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, c, rhs[i].clone());
        }
        let (r, piv) = aug.rref();
        if piv.last() == Some(&c) {
            return Ok(Solution::Inconsistent);
        }
        let mut particular = vec![F::zero(); c];
        for (row, &pc) in piv.iter().enumerate() {
            particular[pc] = r.get(row, c).clone();
        }
        Ok(Solution::Consistent { particular, nullspace: self.nullspace() })
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        self.require_square()?;
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Evaluates a polynomial at the matrix.
    pub fn eval_poly(&self, p: &Poly<F>) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::zeros(self.rows, self.rows);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&Self::identity(self.rows).scale(c))?;
        }
        Ok(acc)
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |s, (x, y)| s.add(&x.mul(y)))
}
