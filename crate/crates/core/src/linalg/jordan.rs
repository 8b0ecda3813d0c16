//! Jordan normal form over the algebraic numbers.

use crate::algebraic::rootfind::complex_roots_in;
use crate::algebraic::{AlgebraicComplex, ComplexNF};
use crate::error::{Error, Result};
use crate::field::Field;

use super::matrix::Matrix;
use super::normal::{adjoin_complex, to_complex_field};

#[derive(Clone, Debug, PartialEq)]
pub struct JordanBlock {
    pub eigenvalue: AlgebraicComplex,
    pub size: usize,
}

/// `M = C^-1 J C`.
#[derive(Clone, Debug)]
pub struct JordanForm {
    pub j: Matrix<AlgebraicComplex>,
    pub c: Matrix<AlgebraicComplex>,
    /// Blocks along the diagonal of `J`, by eigenvalue then size.
    pub blocks: Vec<JordanBlock>,
}

fn independent(vs: &[Vec<ComplexNF>]) -> bool {
    if vs.is_empty() {
        return true;
    }
    Matrix::from_columns(vs).map(|m| m.rank() == vs.len()).unwrap_or(false)
}

/// Chain heads `(x, length)` for the nilpotent part `nm` on a generalized
/// eigenspace of dimension `e`.
fn chain_heads(nm: &Matrix<ComplexNF>, e: usize) -> Result<Vec<(Vec<ComplexNF>, usize)>> {
    let mut kers: Vec<Vec<Vec<ComplexNF>>> = vec![Vec::new()];
    let mut p = nm.clone();
    while kers.last().unwrap().len() < e {
        let k = p.nullspace();
        if k.len() <= kers.last().unwrap().len() || kers.len() > e {
            return Err(Error::Verification("generalized eigenspace dimension".into()));
        }
        kers.push(k);
        p = p.mul(nm)?;
    }
    let top = kers.len() - 1;
    let mut heads = Vec::new();
    let mut prev: Vec<Vec<ComplexNF>> = Vec::new();
    for level in (1..=top).rev() {
        let mut cur: Vec<Vec<ComplexNF>> = prev.iter().map(|v| nm.mul_vec(v).unwrap()).collect();
        for b in &kers[level] {
            let mut cand: Vec<Vec<ComplexNF>> = kers[level - 1].clone();
            cand.extend(cur.iter().cloned());
            cand.push(b.clone());
            if independent(&cand) {
                cur.push(b.clone());
                heads.push((b.clone(), level));
            }
        }
        prev = cur;
    }
    Ok(heads)
}

pub fn jordan_form(m: &Matrix<AlgebraicComplex>) -> Result<JordanForm> {
    let (k, mk) = to_complex_field(m)?;
    let n = mk.rows();
    let roots = complex_roots_in(&k, &mk.char_poly()?)?;
    let vals: Vec<AlgebraicComplex> = roots.iter().map(|r| r.0.clone()).collect();
    let (ext, lams) = adjoin_complex(&k, &vals)?;
    let mf = mk.map(|z| ext.lift_complex(z));
    let mut cols: Vec<Vec<ComplexNF>> = Vec::new();
    let mut diag: Vec<ComplexNF> = Vec::new();
    let mut sup: Vec<bool> = Vec::new();
    let mut blocks = Vec::new();
    for ((lam_a, e), lam) in roots.iter().zip(&lams) {
        let nm = mf.sub(&Matrix::identity(n).scale(lam))?;
        let mut heads = chain_heads(&nm, *e)?;
        heads.sort_by_key(|h| h.1);
        if heads.iter().map(|h| h.1).sum::<usize>() != *e {
            return Err(Error::Verification("block sizes differ from multiplicity".into()));
        }
        for (x, len) in heads {
            let mut chain = vec![x];
            for _ in 1..len {
                let next = nm.mul_vec(chain.last().unwrap())?;
                chain.push(next);
            }
            chain.reverse();
            for (i, v) in chain.into_iter().enumerate() {
                cols.push(v);
                diag.push(lam.clone());
                sup.push(i > 0);
            }
            blocks.push(JordanBlock { eigenvalue: lam_a.clone(), size: len });
        }
    }
    if cols.len() != n {
        return Err(Error::Verification("Jordan chains do not span".into()));
    }
    let p = Matrix::from_columns(&cols)?;
    let mut j = Matrix::diag(&diag);
    for (i, &s) in sup.iter().enumerate() {
        if s {
            j.set(i - 1, i, ComplexNF::one());
        }
    }
    if mf.mul(&p)? != p.mul(&j)? {
        return Err(Error::Verification("M P = P J".into()));
    }
    let c = p.inverse()?;
    Ok(JordanForm { j: j.map(ComplexNF::to_algebraic), c: c.map(ComplexNF::to_algebraic), blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::AlgebraicReal;

    fn m(rows: &[&[i64]]) -> Matrix<AlgebraicComplex> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| AlgebraicComplex::real(AlgebraicReal::from_int(v))).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_cases() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let f = jordan_form(&a).unwrap();
        assert_eq!(f.j, a);
        assert_eq!(f.c, m(&[&[1, 0], &[0, 1]]));
        let f = jordan_form(&m(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]])).unwrap();
        assert_eq!(f.j, m(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]));
        let nil = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let f = jordan_form(&nil).unwrap();
        assert_eq!(f.blocks.len(), 1);
        assert_eq!(f.blocks[0].size, 3);
        assert_eq!(f.j, nil);
    }
}
