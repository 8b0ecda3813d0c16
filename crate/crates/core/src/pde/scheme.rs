//! Upwind finite-difference scheme with dimensional splitting.

use std::sync::Arc;

use crate::algebraic::{AlgebraicReal, NFElem, NumberFieldContext};
use crate::error::{Error, Result};
use crate::field::{int, rat, Field, Rational, Sign};
use crate::linalg::embed::{real_field, Extension};
use crate::linalg::{pencil_decomposition, Matrix, PencilDecomposition};
use crate::poly::Poly;

use super::domain::{DomainH, Steps};
use super::grid::GridFunction;
use super::problem::HyperbolicProblem;

/// Problem data prepared for stepping: the pencils `(A, B_i)`, the domain
/// and the upwind splits `A^-1 B_i = P+_i + P-_i` in one number field.
#[derive(Clone, Debug)]
pub struct SchemeData {
    pub pencils: Vec<PencilDecomposition>,
    pub domain: DomainH,
    ctx: Arc<NumberFieldContext>,
    a: Matrix<NFElem>,
    plus: Vec<Matrix<NFElem>>,
    minus: Vec<Matrix<NFElem>>,
}

fn product_of_roots(roots: &[AlgebraicReal]) -> Poly<AlgebraicReal> {
    roots.iter().fold(Poly::one(), |f, r| f.mul(&Poly::new(vec![r.neg(), AlgebraicReal::one()])))
}

fn distinct(v: &[AlgebraicReal], sign: Sign) -> Vec<AlgebraicReal> {
    let mut out: Vec<AlgebraicReal> = Vec::new();
    for x in v {
        if x.sign() == sign && !out.contains(x) {
            out.push(x.clone());
        }
    }
    out
}

impl SchemeData {
    pub fn new(p: &HyperbolicProblem) -> Result<Self> {
        p.validate()?;
        let pencils =
            p.b.iter().map(|b| pencil_decomposition(&p.a, b)).collect::<Result<Vec<_>>>()?;
        let domain = DomainH::from_pencils(&pencils)?;

        let n = p.n;
        let mut entries: Vec<AlgebraicReal> = p.a.entries().to_vec();
        for b in &p.b {
            entries.extend_from_slice(b.entries());
        }
        let (k, images) = real_field(&entries)?;
        let mat = |i: usize| Matrix::new(n, n, images[i * n * n..(i + 1) * n * n].to_vec());
        let ak = mat(0)?;
        let ainv = ak.inverse()?;
        let cs = (0..p.m).map(|i| ainv.mul(&mat(i + 1)?)).collect::<Result<Vec<_>>>()?;

        // f+ and f- vanish exactly at the positive and negative speeds
        let mut factors = Vec::new();
        let mut coeffs = Vec::new();
        for pen in &pencils {
            for sign in [Sign::Positive, Sign::Negative] {
                let f = product_of_roots(&distinct(&pen.mu, sign));
                coeffs.extend_from_slice(f.coeffs());
                factors.push(f.deg0());
            }
        }
        let ext = Extension::new(&k, &coeffs)?;
        let g = ext.field.clone();
        let lift = |m: &Matrix<NFElem>| m.map(|x| ext.lift(x));
        let a = lift(&ak);
        let mut at = 0;
        let mut take = |d: usize| {
            let f = Poly::new(ext.images[at..at + d + 1].to_vec());
            at += d + 1;
            f
        };
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (i, c) in cs.iter().enumerate() {
            let c = lift(c);
            let fp = take(factors[2 * i]);
            let fm = take(factors[2 * i + 1]);
            let (gcd, s, _) = fm.xgcd(&fp)?;
            if gcd.deg0() != 0 {
                return Err(Error::Verification("speed polynomials share a root".into()));
            }
            let e_plus = s.mul(&fm);
            let pp = c.mul(&c.eval_poly(&e_plus)?)?;
            let pm = c.sub(&pp)?;
            let zero = Matrix::zeros(n, n);
            if pp.mul(&pm)? != zero {
                return Err(Error::Verification("upwind projectors do not split".into()));
            }
            let ap = a.mul(&pp)?;
            if !ap.is_symmetric() {
                return Err(Error::Verification("A P+ is not symmetric".into()));
            }
            plus.push(pp);
            minus.push(pm);
        }
        Ok(SchemeData { pencils, domain, ctx: g, a, plus, minus })
    }

    /// Field holding the upwind matrices and every grid value.
    pub fn context(&self) -> &Arc<NumberFieldContext> {
        &self.ctx
    }

    pub fn a(&self) -> &Matrix<NFElem> {
        &self.a
    }

    /// `P+_i`, the part of `A^-1 B_i` carried by positive speeds.
    pub fn plus(&self, i: usize) -> &Matrix<NFElem> {
        &self.plus[i]
    }

    pub fn minus(&self, i: usize) -> &Matrix<NFElem> {
        &self.minus[i]
    }
}

/// Box `[lo_d, hi_d)` of global cell indices with row-major values.
struct Region {
    lo: Vec<i64>,
    hi: Vec<i64>,
    vals: Vec<Vec<NFElem>>,
}

impl Region {
    fn sizes(&self) -> Vec<usize> {
        self.lo.iter().zip(&self.hi).map(|(a, b)| (b - a) as usize).collect()
    }

    fn strides(&self) -> Vec<usize> {
        let s = self.sizes();
        let mut st = vec![1; s.len()];
        for d in (0..s.len().saturating_sub(1)).rev() {
            st[d] = st[d + 1] * s[d + 1];
        }
        st
    }

    fn energy(&self, a: &Matrix<NFElem>) -> Result<NFElem> {
        let mut e = NFElem::zero();
        for v in &self.vals {
            let av = a.mul_vec(v)?;
            for (x, y) in v.iter().zip(&av) {
                e = e.add(&x.mul(y));
            }
        }
        Ok(e)
    }
}

/// Calls `f` with every multi-index in the box of the given sizes, last index fastest.
fn for_each_index(sizes: &[usize], mut f: impl FnMut(&[usize])) {
    if sizes.iter().any(|&s| s == 0) {
        return;
    }
    let mut idx = vec![0; sizes.len()];
    loop {
        f(&idx);
        let mut d = sizes.len();
        loop {
            if d == 0 {
                return;
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < sizes[d] {
                break;
            }
            idx[d] = 0;
        }
    }
}

fn sweep(r: &Region, d: usize, cp: &Matrix<NFElem>, cm: &Matrix<NFElem>) -> Result<Region> {
    let mut lo = r.lo.clone();
    let mut hi = r.hi.clone();
    lo[d] += 1;
    hi[d] -= 1;
    let st = r.strides();
    let new_sizes: Vec<usize> = lo.iter().zip(&hi).map(|(a, b)| (b - a).max(0) as usize).collect();
    let mut vals = Vec::with_capacity(new_sizes.iter().product());
    let mut err = None;
    for_each_index(&new_sizes, |idx| {
        if err.is_some() {
            return;
        }
        let mut o: usize = idx.iter().zip(&st).map(|(i, s)| i * s).sum();
        o += st[d];
        let u = &r.vals[o];
        let back = &r.vals[o - st[d]];
        let fwd = &r.vals[o + st[d]];
        let db: Vec<NFElem> = u.iter().zip(back).map(|(x, y)| x.sub(y)).collect();
        let df: Vec<NFElem> = fwd.iter().zip(u).map(|(x, y)| x.sub(y)).collect();
        match (cp.mul_vec(&db), cm.mul_vec(&df)) {
            (Ok(pb), Ok(mf)) => {
                vals.push(u.iter().zip(pb.iter().zip(&mf)).map(|(x, (a, b))| x.sub(a).sub(b)).collect())
            }
            (Err(e), _) | (_, Err(e)) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(Region { lo, hi, vals })
}

/// Values on `G_N` at levels `0..=L`.
///
/// The grid is padded by `L` cells per side holding `phi` at the clamped
/// center, and every sweep in direction `i` drops one cell per side in that
/// direction, so no boundary condition is ever applied. After each sweep
/// `sum u^T A u` over the current box is checked not to grow.
pub fn run_scheme(p: &HyperbolicProblem, data: &SchemeData, steps: &Steps) -> Result<GridFunction> {
    let m = p.m;
    let cells = 1i64 << steps.level;
    let pad = steps.count as i64;
    let h = &steps.h;
    let c = NFElem::rational(&steps.tau / h);
    let cp: Vec<Matrix<NFElem>> = data.plus.iter().map(|x| x.scale(&c)).collect();
    let cm: Vec<Matrix<NFElem>> = data.minus.iter().map(|x| x.scale(&c)).collect();

    let coords: Vec<Rational> = (-pad..cells + pad)
        .map(|g| {
            let x = (int(g) + rat(1, 2)) * h;
            x.clamp(int(0), int(1))
        })
        .collect();
    let mut region = Region { lo: vec![-pad; m], hi: vec![cells + pad; m], vals: Vec::new() };
    let sizes = region.sizes();
    for_each_index(&sizes, |idx| {
        let x: Vec<Rational> = idx.iter().map(|&i| coords[i].clone()).collect();
        region.vals.push(p.phi.iter().map(|f| NFElem::rational(f.eval(&x))).collect());
    });

    let extract = |r: &Region| -> Vec<Vec<NFElem>> {
        let st = r.strides();
        let mut out = Vec::new();
        for_each_index(&vec![cells as usize; m], |idx| {
            let o: usize = idx.iter().zip(&r.lo).zip(&st).map(|((&i, &lo), s)| (i as i64 - lo) as usize * s).sum();
            out.push(r.vals[o].clone());
        });
        out
    };

    let mut levels = vec![extract(&region)];
    let mut energy = region.energy(&data.a)?;
    for _ in 0..steps.count {
        for d in 0..m {
            region = sweep(&region, d, &cp[d], &cm[d])?;
            let e = region.energy(&data.a)?;
            if e.sub(&energy).sign() == Sign::Positive {
                return Err(Error::Verification("discrete energy increased".into()));
            }
            energy = e;
        }
        levels.push(extract(&region));
    }
    GridFunction::new(m, p.n, steps.level, steps.tau.clone(), data.ctx.clone(), levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pde::mpoly::MPoly;
    use crate::pde::problem::SolveOptions;

    fn swap_problem(phi: Vec<MPoly>) -> HyperbolicProblem {
        let q = |r: Vec<Vec<i64>>| {
            Matrix::from_rows(r.into_iter().map(|row| row.into_iter().map(AlgebraicReal::from_int).collect()).collect())
                .unwrap()
        };
        HyperbolicProblem {
            m: 1,
            n: 2,
            a: q(vec![vec![1, 0], vec![0, 1]]),
            b: vec![q(vec![vec![0, 1], vec![1, 0]])],
            phi,
            source: None,
            deriv_bound: int(4),
            accuracy: 4,
            options: SolveOptions::default(),
        }
    }

    #[test]
    fn projectors_for_swap() {
        let p = swap_problem(vec![MPoly::zero(1), MPoly::zero(1)]);
        let d = SchemeData::new(&p).unwrap();
        let half = NFElem::rational(rat(1, 2));
        let want = Matrix::from_rows(vec![vec![half.clone(), half.clone()], vec![half.clone(), half]]).unwrap();
        assert_eq!(d.plus(0), &want);
        assert_eq!(d.context().degree(), 1);
    }

    #[test]
    fn constant_data_is_preserved() {
        let p = swap_problem(vec![MPoly::constant(1, int(3)), MPoly::constant(1, int(-1))]);
        let d = SchemeData::new(&p).unwrap();
        let s = crate::pde::domain::select_steps(&d.domain, &rat(1, 2), 2);
        let g = run_scheme(&p, &d, &s).unwrap();
        for l in 0..=g.steps() {
            for v in g.level_values(l) {
                assert_eq!(v, &vec![NFElem::rational(int(3)), NFElem::rational(int(-1))]);
            }
        }
    }
}
