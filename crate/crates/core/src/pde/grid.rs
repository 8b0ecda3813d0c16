//! Grid functions on `G_N x {l tau}` and their norms.

use std::sync::Arc;

use crate::algebraic::{NFElem, NumberFieldContext};
use crate::error::{Error, Result};
use crate::field::{int, pow2, sqrt_upper, Field, Rational};
use crate::linalg::Matrix;

use super::domain::DomainH;

/// Values of an `n`-vector function at the cell centers `((i_1 - 1/2) h, ..)`
/// of `[0,1]^m`, `h = 2^-N`, for time levels `l = 0..=L`.
#[derive(Clone, Debug)]
pub struct GridFunction {
    m: usize,
    n: usize,
    level: u32,
    tau: Rational,
    ctx: Arc<NumberFieldContext>,
    levels: Vec<Vec<Vec<NFElem>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormKind {
    Sup,
    L2,
    SL2,
}

impl GridFunction {
    pub fn new(
        m: usize,
        n: usize,
        level: u32,
        tau: Rational,
        ctx: Arc<NumberFieldContext>,
        levels: Vec<Vec<Vec<NFElem>>>,
    ) -> Result<Self> {
        let cells = 1usize << (level as usize * m);
        if levels.iter().any(|lv| lv.len() != cells || lv.iter().any(|v| v.len() != n)) {
            return Err(Error::Shape("grid level dimensions".into()));
        }
        Ok(GridFunction { m, n, level, tau, ctx, levels })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Refinement `N`.
    pub fn refinement(&self) -> u32 {
        self.level
    }

    pub fn h(&self) -> Rational {
        pow2(-(self.level as i64))
    }

    pub fn tau(&self) -> &Rational {
        &self.tau
    }

    /// Number of time steps `L`.
    pub fn steps(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn context(&self) -> &Arc<NumberFieldContext> {
        &self.ctx
    }

    pub fn cells_per_dim(&self) -> usize {
        1 << self.level
    }

    pub fn num_cells(&self) -> usize {
        self.cells_per_dim().pow(self.m as u32)
    }

    pub fn time(&self, l: usize) -> Rational {
        &self.tau * int(l as i64)
    }

    pub fn level_values(&self, l: usize) -> &[Vec<NFElem>] {
        &self.levels[l]
    }

    pub fn levels(&self) -> &[Vec<Vec<NFElem>>] {
        &self.levels
    }

    /// Flat position of a 0-based multi-index, first coordinate slowest.
    pub fn flat(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.cells_per_dim() + i)
    }

    pub fn multi(&self, mut flat: usize) -> Vec<usize> {
        let c = self.cells_per_dim();
        let mut out = vec![0; self.m];
        for d in (0..self.m).rev() {
            out[d] = flat % c;
            flat /= c;
        }
        out
    }

    pub fn value(&self, l: usize, idx: &[usize]) -> &[NFElem] {
        &self.levels[l][self.flat(idx)]
    }

    /// Center of the cell with 0-based multi-index `idx`.
    pub fn center(&self, idx: &[usize]) -> Vec<Rational> {
        let h = self.h();
        idx.iter().map(|&i| (int(i as i64) + crate::field::rat(1, 2)) * &h).collect()
    }

    /// Piecewise multilinear interpolation of level `l` at a rational point
    /// inside the hull of the cell centers.
    pub fn multilinear_interp(&self, l: usize, x: &[Rational]) -> Result<Vec<NFElem>> {
        if x.len() != self.m {
            return Err(Error::Shape(format!("point of dimension {} for m = {}", x.len(), self.m)));
        }
        let h = self.h();
        let c = self.cells_per_dim();
        let mut base = Vec::with_capacity(self.m);
        let mut frac = Vec::with_capacity(self.m);
        for xi in x {
            // position in units of h relative to the first center
            let s = xi / &h - crate::field::rat(1, 2);
            if s < int(0) || s > int(c as i64 - 1) {
                return Err(Error::OutsideGrid);
            }
            let mut j = crate::field::floor(&s);
            if j == (c as i64 - 1).into() && c > 1 {
                j -= 1;
            }
            let jf = Rational::from_integer(j.clone());
            frac.push(s - &jf);
            base.push(usize::try_from(j).unwrap_or(0));
        }
        let mut out = vec![NFElem::zero(); self.n];
        for corner in 0..(1usize << self.m) {
            let mut w = int(1);
            let mut idx = base.clone();
            for d in 0..self.m {
                if corner >> d & 1 == 1 {
                    w *= &frac[d];
                    idx[d] += 1;
                } else {
                    w *= int(1) - &frac[d];
                }
            }
            if w == int(0) {
                continue;
            }
            let wv = NFElem::rational(w);
            for (o, v) in out.iter_mut().zip(self.value(l, &idx)) {
                *o = o.add(&v.mul(&wv));
            }
        }
        Ok(out)
    }

    /// Flat indices of the cells whose centers lie in `H` at level `l`.
    pub fn cells_in(&self, domain: &DomainH, l: usize) -> Vec<usize> {
        let t = self.time(l);
        let ranges: Vec<(usize, usize)> =
            (0..self.m).map(|d| domain.cell_range(d, &t, self.level, self.cells_per_dim())).collect();
        if ranges.iter().any(|r| r.0 >= r.1) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = ranges.iter().map(|r| r.0).collect();
        loop {
            out.push(self.flat(&idx));
            let mut d = self.m;
            loop {
                if d == 0 {
                    return out;
                }
                d -= 1;
                idx[d] += 1;
                if idx[d] < ranges[d].1 {
                    break;
                }
                idx[d] = ranges[d].0;
            }
        }
    }

    pub fn norm(&self, kind: NormKind, weight: Option<&Matrix<NFElem>>) -> Result<Rational> {
        grid_norm(&self.levels, &self.h(), self.m, kind, weight)
    }

    /// `max_l sqrt(h^m sum_(x in H) |u(l, x) - exact(t_l, x)|^2)` as an upper bound.
    pub fn sl2_distance_on(
        &self,
        domain: &DomainH,
        exact: impl Fn(&Rational, &[Rational]) -> Vec<Rational>,
    ) -> Rational {
        let hm = self.h().pow(self.m as i32);
        let mut best = int(0);
        for l in 0..self.levels.len() {
            let t = self.time(l);
            let mut s = NFElem::zero();
            for f in self.cells_in(domain, l) {
                let e = exact(&t, &self.center(&self.multi(f)));
                for (v, ev) in self.levels[l][f].iter().zip(e) {
                    let d = v.sub(&NFElem::rational(ev));
                    s = s.add(&d.mul(&d));
                }
            }
            best = best.max(sqrt_upper_bound(&s.mul(&NFElem::rational(hm.clone()))));
        }
        best
    }
}

/// Dyadic upper bound on `sqrt(s)` for `s >= 0`, 16 bits below its leading bit.
pub fn sqrt_upper_bound(s: &NFElem) -> Rational {
    let hi = match s.as_rational() {
        Some(r) => r,
        None => s.enclosure(96).hi,
    };
    if hi <= int(0) {
        return int(0);
    }
    let e = hi.numer().bits() as i64 - hi.denom().bits() as i64;
    let k = (16 - e.div_euclid(2)).max(0) as u32;
    sqrt_upper(&hi, k)
}

fn weighted_sq(v: &[NFElem], weight: Option<&Matrix<NFElem>>) -> Result<NFElem> {
    match weight {
        None => Ok(v.iter().fold(NFElem::zero(), |s, x| s.add(&x.mul(x)))),
        Some(w) => {
            let wv = w.mul_vec(v)?;
            Ok(v.iter().zip(&wv).fold(NFElem::zero(), |s, (x, y)| s.add(&x.mul(y))))
        }
    }
}

/// Sup, `L2` (single level) or `sL2` (max over levels) norm of grid values,
/// returned as a dyadic upper bound.
pub fn grid_norm(
    levels: &[Vec<Vec<NFElem>>],
    h: &Rational,
    m: usize,
    kind: NormKind,
    weight: Option<&Matrix<NFElem>>,
) -> Result<Rational> {
    if let Some(w) = weight {
        if levels.iter().flatten().any(|v| v.len() != w.cols()) {
            return Err(Error::Shape("weight does not match the vector size".into()));
        }
    }
    let hm = NFElem::rational(h.pow(m as i32));
    match kind {
        NormKind::Sup => {
            let mut best = int(0);
            for v in levels.iter().flatten() {
                best = best.max(sqrt_upper_bound(&weighted_sq(v, weight)?));
            }
            Ok(best)
        }
        NormKind::L2 | NormKind::SL2 => {
            if kind == NormKind::L2 && levels.len() != 1 {
                return Err(Error::Shape("L2 norm needs a single level".into()));
            }
            let mut best = int(0);
            for lv in levels {
                let mut s = NFElem::zero();
                for v in lv {
                    s = s.add(&weighted_sq(v, weight)?);
                }
                best = best.max(sqrt_upper_bound(&s.mul(&hm)));
            }
            Ok(best)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn q(v: &[Rational]) -> Vec<NFElem> {
        v.iter().map(|x| NFElem::rational(x.clone())).collect()
    }

    #[test]
    fn norms() {
        let one = vec![vec![q(&[int(3), int(4)])]];
        assert_eq!(grid_norm(&one, &int(1), 1, NormKind::L2, None).unwrap(), int(5));
        let zero = vec![vec![q(&[int(0)]), q(&[int(0)])]];
        for k in [NormKind::Sup, NormKind::L2, NormKind::SL2] {
            assert_eq!(grid_norm(&zero, &rat(1, 2), 1, k, None).unwrap(), int(0));
        }
        let s = vec![vec![q(&[int(1)]), q(&[int(-2)]), q(&[rat(3, 2)])]];
        assert_eq!(grid_norm(&s, &rat(1, 2), 1, NormKind::Sup, None).unwrap(), int(2));
    }

    #[test]
    fn interpolation() {
        let ctx = NumberFieldContext::rationals();
        let g = GridFunction::new(1, 1, 1, int(1), ctx.clone(), vec![vec![q(&[int(0)]), q(&[int(1)])]]).unwrap();
        assert_eq!(g.multilinear_interp(0, &[rat(1, 2)]).unwrap(), q(&[rat(1, 2)]));
        assert_eq!(g.multilinear_interp(0, &[rat(3, 4)]).unwrap(), q(&[int(1)]));
        assert!(matches!(g.multilinear_interp(0, &[rat(1, 8)]), Err(Error::OutsideGrid)));
        let b = GridFunction::new(
            2,
            1,
            1,
            int(1),
            ctx,
            vec![vec![q(&[int(0)]), q(&[int(0)]), q(&[int(0)]), q(&[int(1)])]],
        )
        .unwrap();
        assert_eq!(b.multilinear_interp(0, &[rat(1, 2), rat(1, 2)]).unwrap(), q(&[rat(1, 4)]));
    }
}
