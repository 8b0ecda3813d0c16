//! Unitary eigenbases of normal matrices over the algebraic numbers.

use std::sync::Arc;

use crate::algebraic::rootfind::complex_roots_in;
use crate::algebraic::{AlgebraicComplex, AlgebraicReal, ComplexNF, NFElem, NumberFieldContext, Tower};
use crate::error::{Error, Result};
use crate::field::{int, Field};
use crate::interval::Interval;

use super::embed::{complex_field, enclose_over_sqrt, Extension};
use super::matrix::Matrix;

/// A unit eigenvector `u / sqrt(norm)` with `u` over `ctx(i)`.
#[derive(Clone, Debug)]
pub struct ComplexEigenVector {
    ctx: Arc<NumberFieldContext>,
    u: Vec<ComplexNF>,
    norm: NFElem,
}

impl ComplexEigenVector {
    pub fn context(&self) -> &Arc<NumberFieldContext> {
        &self.ctx
    }

    pub fn direction(&self) -> &[ComplexNF] {
        &self.u
    }

    pub fn norm_sq(&self) -> &NFElem {
        &self.norm
    }

    pub fn entries(&self) -> Vec<AlgebraicComplex> {
        let d = self.ctx.degree();
        let ninv = self.norm.inv().unwrap();
        let mut tower = Tower::new(self.ctx.clone());
        tower.push_sqrt(tower.embed(&self.norm));
        let part = |x: &NFElem| -> AlgebraicReal {
            let mut v = vec![int(0); 2 * d];
            for (i, c) in x.mul(&ninv).coeffs().iter().enumerate() {
                v[d + i] = c.clone();
            }
            tower.to_algebraic(&v)
        };
        self.u.iter().map(|z| AlgebraicComplex::new(part(&z.re), part(&z.im))).collect()
    }

    /// Enclosures of `(re, im)` of each coordinate.
    pub fn enclosure(&self, k: u32) -> Vec<(Interval, Interval)> {
        let mut kk = k + 4;
        loop {
            let n = self.norm.enclosure(kk);
            let out: Option<Vec<(Interval, Interval)>> = self
                .u
                .iter()
                .map(|z| {
                    Some((
                        enclose_over_sqrt(&z.re.enclosure(kk), &n, kk)?,
                        enclose_over_sqrt(&z.im.enclosure(kk), &n, kk)?,
                    ))
                })
                .collect();
            if let Some(v) = out {
                return v;
            }
            kk += 8;
        }
    }
}

#[derive(Clone, Debug)]
pub struct NormalDecomposition {
    /// Ordered by `(re, im)`, repeated according to multiplicity.
    pub eigenvalues: Vec<AlgebraicComplex>,
    pub eigenvectors: Vec<ComplexEigenVector>,
}

pub fn conjugate_transpose(m: &Matrix<ComplexNF>) -> Matrix<ComplexNF> {
    m.transpose().map(ComplexNF::conj)
}

fn hermitian(x: &[ComplexNF], y: &[ComplexNF]) -> ComplexNF {
    x.iter().zip(y).fold(ComplexNF::zero(), |s, (a, b)| s.add(&a.mul(&b.conj())))
}

pub(crate) fn to_complex_field(m: &Matrix<AlgebraicComplex>) -> Result<(Arc<NumberFieldContext>, Matrix<ComplexNF>)> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let (ctx, im) = complex_field(m.entries())?;
    Ok((ctx, Matrix::new(m.rows(), m.cols(), im)?))
}

/// The field generated by `k` and the real and imaginary parts of `vals`.
pub(crate) fn adjoin_complex(k: &Arc<NumberFieldContext>, vals: &[AlgebraicComplex]) -> Result<(Extension, Vec<ComplexNF>)> {
    let parts: Vec<AlgebraicReal> = vals.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect();
    let ext = Extension::new(k, &parts)?;
    let im = ext.images.chunks(2).map(|c| ComplexNF::new(c[0].clone(), c[1].clone())).collect();
    Ok((ext, im))
}

pub fn spectral_decomposition_normal(a: &Matrix<AlgebraicComplex>) -> Result<NormalDecomposition> {
    let (k, ak) = to_complex_field(a)?;
    let n = ak.rows();
    let ah = conjugate_transpose(&ak);
    if ak.mul(&ah)? != ah.mul(&ak)? {
        return Err(Error::NotNormal);
    }
    let roots = complex_roots_in(&k, &ak.char_poly()?)?;
    let vals: Vec<AlgebraicComplex> = roots.iter().map(|r| r.0.clone()).collect();
    let (ext, lams) = adjoin_complex(&k, &vals)?;
    let af = ak.map(|z| ext.lift_complex(z));
    let mut sum = Matrix::<ComplexNF>::zeros(n, n);
    let mut eigenvalues = Vec::new();
    let mut eigenvectors = Vec::new();
    for ((lam_a, e), lam) in roots.iter().zip(&lams) {
        let kk = af.sub(&Matrix::identity(n).scale(lam))?;
        let basis = kk.nullspace();
        if basis.len() != *e {
            return Err(Error::Verification("eigenspace dimension differs from multiplicity".into()));
        }
        let mut fam: Vec<(Vec<ComplexNF>, NFElem)> = Vec::new();
        for b in basis {
            let mut u = b.clone();
            for (w, nn) in &fam {
                let c = hermitian(&b, w).mul(&ComplexNF::real(nn.inv().unwrap()));
                for (ui, wi) in u.iter_mut().zip(w) {
                    *ui = ui.sub(&c.mul(wi));
                }
            }
            // rotate so the first nonzero coordinate is real and positive
            if let Some(f) = u.iter().find(|z| !z.is_zero()).cloned() {
                let fc = f.conj();
                for ui in u.iter_mut() {
                    *ui = ui.mul(&fc);
                }
            }
            let nn = hermitian(&u, &u).re;
            fam.push((u, nn));
        }
        for (u, nn) in fam {
            if !kk.mul_vec(&u)?.iter().all(|z| z.is_zero()) {
                return Err(Error::Verification("eigen equation".into()));
            }
            let ninv = ComplexNF::real(nn.inv().unwrap());
            for i in 0..n {
                for j in 0..n {
                    let v = sum.get(i, j).add(&u[i].mul(&u[j].conj()).mul(&ninv));
                    sum.set(i, j, v);
                }
            }
            eigenvalues.push(lam_a.clone());
            eigenvectors.push(ComplexEigenVector { ctx: ext.field.clone(), u, norm: nn });
        }
    }
    if sum != Matrix::identity(n) {
        return Err(Error::Verification("eigenvectors are not a unitary basis".into()));
    }
    Ok(NormalDecomposition { eigenvalues, eigenvectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: i64, im: i64) -> AlgebraicComplex {
        AlgebraicComplex::new(AlgebraicReal::from_int(re), AlgebraicReal::from_int(im))
    }

    #[test]
    fn rotation() {
        let a = Matrix::from_rows(vec![vec![c(0, 0), c(-1, 0)], vec![c(1, 0), c(0, 0)]]).unwrap();
        let d = spectral_decomposition_normal(&a).unwrap();
        assert_eq!(d.eigenvalues, vec![c(0, -1), c(0, 1)]);
    }

    #[test]
    fn hermitian_and_diagonal() {
        let a = Matrix::from_rows(vec![vec![c(1, 0), c(0, 1)], vec![c(0, -1), c(1, 0)]]).unwrap();
        let d = spectral_decomposition_normal(&a).unwrap();
        assert_eq!(d.eigenvalues, vec![c(0, 0), c(2, 0)]);
        let a = Matrix::diag(&[c(0, 1), c(3, 0)]);
        let d = spectral_decomposition_normal(&a).unwrap();
        assert_eq!(d.eigenvalues, vec![c(0, 1), c(3, 0)]);
        assert_eq!(d.eigenvectors[0].entries(), vec![c(1, 0), c(0, 0)]);
        let bad = Matrix::from_rows(vec![vec![c(1, 0), c(1, 0)], vec![c(0, 0), c(1, 0)]]).unwrap();
        assert!(matches!(spectral_decomposition_normal(&bad), Err(Error::NotNormal)));
    }
}
