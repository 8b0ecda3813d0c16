//! Refinement loop with an a-posteriori certificate.

use crate::algebraic::NFElem;
use crate::error::{Error, Result};
use crate::field::{int, rat, Field, Rational};

use super::domain::{a_priori_level, select_steps, DomainH, Steps};
use super::grid::{sqrt_upper_bound, GridFunction};
use super::problem::HyperbolicProblem;
use super::scheme::{run_scheme, SchemeData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    /// The refinement gap fell below `1/(3a)`.
    Certified,
    /// The level cap was reached first; carries the last gap.
    Uncertified { gap: Rational },
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub status: SolveStatus,
    pub grid: GridFunction,
    pub steps: Steps,
    pub domain: DomainH,
    /// `(N, gap between G_N and G_(N+1))` for every comparison made.
    pub gaps: Vec<(u32, Rational)>,
    pub a_priori_level: u32,
}

/// Solution on the grid of refinement `level`.
pub fn solve_at_level(p: &HyperbolicProblem, data: &SchemeData, level: u32) -> Result<GridFunction> {
    let steps = select_steps(&data.domain, &p.options.cfl_factor, level);
    run_scheme(p, data, &steps)
}

/// `max_l sqrt(h_c^m sum |v_c - mean of the 2^m fine children|^2)` over
/// coarse cells with centers in `H`, fine level matched by time.
pub fn refinement_gap(coarse: &GridFunction, fine: &GridFunction, domain: &DomainH) -> Result<Rational> {
    if fine.refinement() != coarse.refinement() + 1 || coarse.m() != fine.m() {
        return Err(Error::Shape("gap needs consecutive refinements".into()));
    }
    let ratio = coarse.tau() / fine.tau();
    if !ratio.is_integer() {
        return Err(Error::Shape("time steps are not nested".into()));
    }
    let ratio = ratio.to_integer();
    let ratio = usize::try_from(ratio).map_err(|_| Error::Shape("time step ratio".into()))?;
    let m = coarse.m();
    let hm = NFElem::rational(coarse.h().pow(m as i32));
    let weight = NFElem::rational(rat(1, 1 << m));
    let mut best = int(0);
    for l in 0..=coarse.steps() {
        let fl = l * ratio;
        let mut s = NFElem::zero();
        for f in coarse.cells_in(domain, l) {
            let idx = coarse.multi(f);
            let mut mean = vec![NFElem::zero(); coarse.n()];
            for corner in 0..(1usize << m) {
                let child: Vec<usize> = idx.iter().enumerate().map(|(d, &i)| 2 * i + (corner >> d & 1)).collect();
                for (a, v) in mean.iter_mut().zip(fine.value(fl, &child)) {
                    *a = a.add(v);
                }
            }
            for (v, a) in coarse.level_values(l)[f].iter().zip(&mean) {
                let d = v.sub(&a.mul(&weight));
                s = s.add(&d.mul(&d));
            }
        }
        best = best.max(sqrt_upper_bound(&s.mul(&hm)));
    }
    Ok(best)
}

/// Refines from `start_level` until two consecutive grids differ by less than
/// `1/(3a)` in the gap norm, or the cap `min(N_ap, start + max_refine)` is hit.
pub fn solve(p: &HyperbolicProblem) -> Result<SolveReport> {
    let data = SchemeData::new(p)?;
    let domain = data.domain.clone();
    let n_ap = a_priori_level(p, &domain);
    let start = p.options.start_level.max(1);
    let cap = n_ap.min(start + p.options.max_refine).max(start + 1);
    let target = rat(1, 3) / int(p.accuracy as i64);
    let mut gaps = Vec::new();
    let mut coarse = solve_at_level(p, &data, start)?;
    let mut level = start;
    loop {
        let fine = solve_at_level(p, &data, level + 1)?;
        let gap = refinement_gap(&coarse, &fine, &domain)?;
        gaps.push((level, gap.clone()));
        level += 1;
        let done = gap < target;
        if done || level >= cap {
            let steps = select_steps(&domain, &p.options.cfl_factor, level);
            let status = if done { SolveStatus::Certified } else { SolveStatus::Uncertified { gap } };
            return Ok(SolveReport { status, grid: fine, steps, domain, gaps, a_priori_level: n_ap });
        }
        coarse = fine;
    }
}
