//! Spectra and orthonormal eigenbases of real symmetric matrices and
//! symmetric-definite pencils.
//!
//! An eigenvector is kept as `u / sqrt(N)` with `u` over a number field and
//! `N = <u, u>` in the same field, so every identity can be checked exactly
//! without nesting square roots.

use std::sync::Arc;

use crate::algebraic::rootfind::real_roots_in;
use crate::algebraic::{AlgebraicReal, NFElem, NumberFieldContext, Tower};
use crate::error::{Error, Result};
use crate::factor::factor_rational;
use crate::field::{int, Field, Rational, Sign};
use crate::interval::Interval;

use super::embed::{enclose_over_sqrt, real_field, Extension};
use super::matrix::{dot, Matrix};

/// A unit eigenvector `u / sqrt(norm)` over the number field `ctx`.
#[derive(Clone, Debug)]
pub struct EigenVector {
    ctx: Arc<NumberFieldContext>,
    lambda: NFElem,
    u: Vec<NFElem>,
    norm: NFElem,
}

impl EigenVector {
    pub fn context(&self) -> &Arc<NumberFieldContext> {
        &self.ctx
    }

    /// The eigenvalue as an element of the field.
    pub fn eigenvalue_in_field(&self) -> &NFElem {
        &self.lambda
    }

    /// Unnormalized direction `u`.
    pub fn direction(&self) -> &[NFElem] {
        &self.u
    }

    /// `N`, the squared length of `u` in the relevant inner product.
    pub fn norm_sq(&self) -> &NFElem {
        &self.norm
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    /// Exact coordinates as algebraic reals.
    pub fn entries(&self) -> Vec<AlgebraicReal> {
        let d = self.ctx.degree();
        let ninv = self.norm.inv().unwrap();
        let mut tower = Tower::new(self.ctx.clone());
        tower.push_sqrt(tower.embed(&self.norm));
        self.u
            .iter()
            .map(|x| {
                let mut v = vec![int(0); 2 * d];
                for (i, c) in x.mul(&ninv).coeffs().iter().enumerate() {
                    v[d + i] = c.clone();
                }
                tower.to_algebraic(&v)
            })
            .collect()
    }

    /// Coordinate enclosures of width about `2^-k`.
    pub fn enclosure(&self, k: u32) -> Vec<Interval> {
        let mut kk = k + 4;
        loop {
            let n = self.norm.enclosure(kk);
            let out: Option<Vec<Interval>> =
                self.u.iter().map(|x| enclose_over_sqrt(&x.enclosure(kk), &n, kk)).collect();
            if let Some(v) = out {
                return v;
            }
            kk += 8;
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    /// Nondecreasing, repeated according to multiplicity.
    pub eigenvalues: Vec<AlgebraicReal>,
    pub eigenvectors: Vec<EigenVector>,
}

/// `T` with `T^t A T = I` and `T^t B T = diag(mu)`.
#[derive(Clone, Debug)]
pub struct PencilDecomposition {
    /// Spectral decomposition of `A`.
    pub lambda: SpectralDecomposition,
    /// Nondecreasing spectrum of `A^-1 B`.
    pub mu: Vec<AlgebraicReal>,
    /// Columns of `T`, normalized in the `A` inner product.
    pub columns: Vec<EigenVector>,
}

impl PencilDecomposition {
    /// `T` as rows of algebraic reals.
    pub fn t_matrix(&self) -> Vec<Vec<AlgebraicReal>> {
        let cols: Vec<Vec<AlgebraicReal>> = self.columns.iter().map(|c| c.entries()).collect();
        let n = cols.len();
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }
}

fn bilinear(a: &Matrix<NFElem>, x: &[NFElem], y: &[NFElem]) -> NFElem {
    dot(x, &a.mul_vec(y).unwrap())
}

/// Gram-Schmidt in the `a` inner product without square roots.
fn gram_schmidt(a: &Matrix<NFElem>, basis: Vec<Vec<NFElem>>) -> Vec<(Vec<NFElem>, NFElem)> {
    let mut out: Vec<(Vec<NFElem>, NFElem)> = Vec::new();
    for b in basis {
        let mut u = b.clone();
        for (w, n) in &out {
            let c = bilinear(a, &b, w).div(n).unwrap();
            for (ui, wi) in u.iter_mut().zip(w) {
                *ui = ui.sub(&c.mul(wi));
            }
        }
        let n = bilinear(a, &u, &u);
        out.push((u, n));
    }
    out
}

/// Flips `u` so that its first nonzero coordinate is positive.
fn orient(u: &mut [NFElem]) {
    if let Some(x) = u.iter().find(|x| !x.is_zero()) {
        if x.sign() == Sign::Negative {
            for v in u.iter_mut() {
                *v = v.neg();
            }
        }
    }
}

fn outer_acc(acc: &mut Matrix<NFElem>, u: &[NFElem], c: &NFElem) {
    let n = u.len();
    for i in 0..n {
        for j in 0..n {
            let t = u[i].mul(&u[j]).mul(c);
            let v = acc.get(i, j).add(&t);
            acc.set(i, j, v);
        }
    }
}

fn rational_matrix(m: &Matrix<NFElem>) -> Option<Matrix<Rational>> {
    let e: Option<Vec<Rational>> = m.entries().iter().map(|x| x.as_rational()).collect();
    Matrix::new(m.rows(), m.cols(), e?).ok()
}

fn nf(m: &Matrix<Rational>) -> Matrix<NFElem> {
    m.map(|x| NFElem::rational(x.clone()))
}

fn verify(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(what.into()))
    }
}

/// Solves `B t = mu A t` for rational `A` (positive definite) and `B`.
///
/// One nullspace computation per irreducible factor of the characteristic
/// polynomial, done over `Q[x]/(m)`; every real root of `m` then reuses the
/// same coordinates. `sum t t^t = A^-1` and `sum mu t t^t = A^-1 B A^-1` are
/// checked over the rationals through field traces.
fn pencil_rational(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Result<Vec<(AlgebraicReal, EigenVector)>> {
    let n = a.rows();
    let ainv = a.inverse()?;
    let chi = ainv.mul(b)?.char_poly()?;
    let an = nf(a);
    let bn = nf(b);
    let mut s0 = Matrix::<Rational>::zeros(n, n);
    let mut s1 = Matrix::<Rational>::zeros(n, n);
    let mut out = Vec::new();
    for (m, e) in factor_rational(&chi)?.factors {
        let roots = AlgebraicReal::real_roots(&m);
        verify(roots.len() == m.deg0(), "characteristic polynomial has non-real roots")?;
        let generic = NumberFieldContext::new(m.clone(), roots[0].clone());
        let theta = generic.generator();
        let k = bn.sub(&an.scale(&theta))?;
        let basis = k.nullspace();
        verify(basis.len() == e, "eigenspace dimension differs from multiplicity")?;
        let fam = gram_schmidt(&an, basis);
        for (i, (u, nn)) in fam.iter().enumerate() {
            verify(k.mul_vec(u)?.iter().all(|x| x.is_zero()), "eigen equation")?;
            for (w, _) in &fam[..i] {
                verify(bilinear(&an, u, w).is_zero(), "orthogonality within an eigenspace")?;
            }
            let ninv = nn.inv().ok_or_else(|| Error::Verification("null eigenvector".into()))?;
            let ninv_t = ninv.mul(&theta);
            for r in 0..n {
                for c in 0..n {
                    let uu = u[r].mul(&u[c]);
                    let t0 = uu.mul(&ninv).trace_in(&generic);
                    let t1 = uu.mul(&ninv_t).trace_in(&generic);
                    s0.set(r, c, s0.get(r, c) + t0);
                    s1.set(r, c, s1.get(r, c) + t1);
                }
            }
        }
        for (j, root) in roots.into_iter().enumerate() {
            let ctx = if j == 0 { generic.clone() } else { generic.conjugate(root.clone()) };
            for (u, nn) in &fam {
                let mut u: Vec<NFElem> = u.iter().map(|x| x.rebase(&ctx)).collect();
                orient(&mut u);
                out.push((
                    root.clone(),
                    EigenVector { ctx: ctx.clone(), lambda: ctx.generator(), u, norm: nn.rebase(&ctx) },
                ));
            }
        }
    }
    verify(s0 == ainv, "completeness")?;
    verify(s1 == ainv.mul(b)?.mul(&ainv)?, "spectral sum")?;
    out.sort_by(|x, y| x.0.compare(&y.0));
    Ok(out)
}

/// Same problem with entries in a proper number field `k`: all eigenvalues
/// are adjoined to one field and the identities are checked there.
fn pencil_general(
    k: &Arc<NumberFieldContext>,
    a: &Matrix<NFElem>,
    b: &Matrix<NFElem>,
) -> Result<Vec<(AlgebraicReal, EigenVector)>> {
    let n = a.rows();
    let ainv = a.inverse()?;
    let chi = ainv.mul(b)?.char_poly()?;
    let roots = real_roots_in(k, &chi)?;
    verify(roots.iter().map(|r| r.1).sum::<usize>() == n, "characteristic polynomial has non-real roots")?;
    let vals: Vec<AlgebraicReal> = roots.iter().map(|r| r.0.clone()).collect();
    let ext = Extension::new(k, &vals)?;
    let af = a.map(|x| ext.lift(x));
    let bf = b.map(|x| ext.lift(x));
    let ainv_f = af.inverse()?;
    let mut s0 = Matrix::<NFElem>::zeros(n, n);
    let mut s1 = Matrix::<NFElem>::zeros(n, n);
    let mut out = Vec::new();
    for ((mu, e), lam) in roots.iter().zip(&ext.images) {
        let kk = bf.sub(&af.scale(lam))?;
        let basis = kk.nullspace();
        verify(basis.len() == *e, "eigenspace dimension differs from multiplicity")?;
        for (mut u, nn) in gram_schmidt(&af, basis) {
            verify(kk.mul_vec(&u)?.iter().all(|x| x.is_zero()), "eigen equation")?;
            orient(&mut u);
            let ninv = nn.inv().ok_or_else(|| Error::Verification("null eigenvector".into()))?;
            outer_acc(&mut s0, &u, &ninv);
            outer_acc(&mut s1, &u, &ninv.mul(lam));
            let lambda = if lam.context().is_some() { lam.clone() } else { ext.field.elem(&lam.to_poly()) };
            out.push((mu.clone(), EigenVector { ctx: ext.field.clone(), lambda, u, norm: nn }));
        }
    }
    verify(s0 == ainv_f, "completeness")?;
    verify(s1 == ainv_f.mul(&bf)?.mul(&ainv_f)?, "spectral sum")?;
    Ok(out)
}

fn to_field(m: &Matrix<AlgebraicReal>) -> Result<(Arc<NumberFieldContext>, Matrix<NFElem>)> {
    let (ctx, im) = real_field(m.entries())?;
    Ok((ctx, Matrix::new(m.rows(), m.cols(), im)?))
}

fn pencil_parts(
    k: &Arc<NumberFieldContext>,
    a: &Matrix<NFElem>,
    b: &Matrix<NFElem>,
) -> Result<(Vec<AlgebraicReal>, Vec<EigenVector>)> {
    let pairs = match (rational_matrix(a), rational_matrix(b)) {
        (Some(ar), Some(br)) => pencil_rational(&ar, &br)?,
        _ => pencil_general(k, a, b)?,
    };
    Ok(pairs.into_iter().unzip())
}

fn require_symmetric(m: &Matrix<AlgebraicReal>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// Eigenvalues of a symmetric matrix, nondecreasing and with multiplicity.
pub fn spectrum(m: &Matrix<AlgebraicReal>) -> Result<Vec<AlgebraicReal>> {
    require_symmetric(m)?;
    let (k, mk) = to_field(m)?;
    let roots = match rational_matrix(&mk) {
        Some(r) => {
            let chi = r.char_poly()?.map(|c| NFElem::rational(c.clone()));
            real_roots_in(&k, &chi)?
        }
        None => real_roots_in(&k, &mk.char_poly()?)?,
    };
    let out: Vec<AlgebraicReal> =
        roots.into_iter().flat_map(|(r, e)| std::iter::repeat(r).take(e)).collect();
    verify(out.len() == m.rows(), "characteristic polynomial has non-real roots")?;
    Ok(out)
}

/// Orthonormal eigenbasis of a symmetric matrix; each eigenvector has its
/// first nonzero coordinate positive.
pub fn spectral_decomposition(m: &Matrix<AlgebraicReal>) -> Result<SpectralDecomposition> {
    require_symmetric(m)?;
    let (k, mk) = to_field(m)?;
    let id = Matrix::<NFElem>::identity(m.rows());
    let (eigenvalues, eigenvectors) = pencil_parts(&k, &id, &mk)?;
    Ok(SpectralDecomposition { eigenvalues, eigenvectors })
}

/// Leading principal minors all positive.
fn positive_definite(a: &Matrix<NFElem>) -> Result<bool> {
    for s in 1..=a.rows() {
        let rows: Vec<Vec<NFElem>> = (0..s).map(|i| a.row(i)[..s].to_vec()).collect();
        if Matrix::from_rows(rows)?.det()?.sign() != Sign::Positive {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Simultaneous diagonalization of `A` (positive definite) and `B`.
pub fn pencil_decomposition(a: &Matrix<AlgebraicReal>, b: &Matrix<AlgebraicReal>) -> Result<PencilDecomposition> {
    require_symmetric(a)?;
    require_symmetric(b)?;
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!("{}x{} vs {}x{}", a.rows(), a.cols(), b.rows(), b.cols())));
    }
    let n = a.rows();
    let mut all = a.entries().to_vec();
    all.extend_from_slice(b.entries());
    let (k, im) = real_field(&all)?;
    let ak = Matrix::new(n, n, im[..n * n].to_vec())?;
    let bk = Matrix::new(n, n, im[n * n..].to_vec())?;
    if ak.det()?.is_zero() {
        return Err(Error::Degenerate("A".into()));
    }
    if bk.det()?.is_zero() {
        return Err(Error::Degenerate("B".into()));
    }
    if !positive_definite(&ak)? {
        return Err(Error::NotPositiveDefinite);
    }
    let id = Matrix::<NFElem>::identity(n);
    let (lv, le) = pencil_parts(&k, &id, &ak)?;
    let (mu, columns) = pencil_parts(&k, &ak, &bk)?;
    Ok(PencilDecomposition { lambda: SpectralDecomposition { eigenvalues: lv, eigenvectors: le }, mu, columns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn m(rows: &[&[i64]]) -> Matrix<AlgebraicReal> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| AlgebraicReal::from_int(v)).collect()).collect())
            .unwrap()
    }

    fn q(n: i64) -> AlgebraicReal {
        AlgebraicReal::from_int(n)
    }

    #[test]
    fn two_by_two() {
        let d = spectral_decomposition(&m(&[&[2, 1], &[1, 2]])).unwrap();
        assert_eq!(d.eigenvalues, vec![q(1), q(3)]);
        let h = AlgebraicReal::from_rational(rat(1, 2)).sqrt().unwrap();
        assert_eq!(d.eigenvectors[0].entries(), vec![h.clone(), h.neg()]);
        assert_eq!(d.eigenvectors[1].entries(), vec![h.clone(), h]);
    }

    #[test]
    fn repeated_eigenvalue() {
        let d = spectral_decomposition(&m(&[&[5, 0, 0], &[0, 5, 0], &[0, 0, 2]])).unwrap();
        assert_eq!(d.eigenvalues, vec![q(2), q(5), q(5)]);
        assert_eq!(d.eigenvectors[0].entries(), vec![q(0), q(0), q(1)]);
        assert!(matches!(spectrum(&m(&[&[1, 2], &[0, 1]])), Err(Error::NotSymmetric)));
    }

    #[test]
    fn pencil_small() {
        let p = pencil_decomposition(&m(&[&[2, 0], &[0, 2]]), &m(&[&[2, 0], &[0, 6]])).unwrap();
        assert_eq!(p.mu, vec![q(1), q(3)]);
        let p = pencil_decomposition(&m(&[&[4]]), &m(&[&[2]])).unwrap();
        assert_eq!(p.mu, vec![AlgebraicReal::from_rational(rat(1, 2))]);
        assert_eq!(p.t_matrix(), vec![vec![AlgebraicReal::from_rational(rat(1, 2))]]);
        assert!(matches!(
            pencil_decomposition(&m(&[&[-1, 0], &[0, 1]]), &m(&[&[1, 0], &[0, 1]])),
            Err(Error::NotPositiveDefinite)
        ));
    }
}
