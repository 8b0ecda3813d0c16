//! Determinacy domain and step selection.

use std::cmp::Ordering;

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::field::{int, pow2, Field, Rational};
use crate::linalg::PencilDecomposition;

use super::problem::HyperbolicProblem;

/// `H = {(t, x) : 0 <= t <= T, mu_max_i t <= x_i <= 1 + mu_min_i t}`.
#[derive(Clone, Debug)]
pub struct DomainH {
    pub mu_min: Vec<AlgebraicReal>,
    pub mu_max: Vec<AlgebraicReal>,
    /// Final time, rounded up to a multiple of `2^-16`.
    pub t: Rational,
    /// Rational upper bound on every `|mu|`.
    pub speed: Rational,
}

impl DomainH {
    pub fn from_speeds(speeds: &[Vec<AlgebraicReal>]) -> Result<Self> {
        let mut mu_min = Vec::new();
        let mut mu_max = Vec::new();
        let mut t: Option<AlgebraicReal> = None;
        let mut speed = int(0);
        for (i, mus) in speeds.iter().enumerate() {
            let lo = mus.iter().min().ok_or_else(|| Error::Shape("empty spectrum".into()))?.clone();
            let hi = mus.iter().max().unwrap().clone();
            if lo.sign() != crate::field::Sign::Negative || hi.sign() != crate::field::Sign::Positive {
                return Err(Error::NoDeterminacyDomain(format!(
                    "direction {} needs speeds of both signs, found range [{lo}, {hi}]",
                    i + 1
                )));
            }
            let ti = hi.sub(&lo).inv().expect("positive width");
            t = Some(match t {
                Some(s) if s <= ti => s,
                _ => ti,
            });
            for mu in mus {
                let b = match mu.as_rational() {
                    Some(r) => crate::field::abs(&r),
                    None => mu.enclosure(32).abs_max(),
                };
                speed = speed.max(b);
            }
            mu_min.push(lo);
            mu_max.push(hi);
        }
        let t = t.ok_or_else(|| Error::Shape("no space directions".into()))?;
        let s = pow2(16);
        let k = -t.neg().floor_scaled(&s, &int(0));
        Ok(DomainH { mu_min, mu_max, t: Rational::from_integer(k) / s, speed })
    }

    pub fn from_pencils(pencils: &[PencilDecomposition]) -> Result<Self> {
        let speeds: Vec<Vec<AlgebraicReal>> = pencils.iter().map(|p| p.mu.clone()).collect();
        Self::from_speeds(&speeds)
    }

    pub fn dim(&self) -> usize {
        self.mu_min.len()
    }

    pub fn contains(&self, t: &Rational, x: &[Rational]) -> bool {
        if *t < int(0) || *t > self.t || x.len() != self.dim() {
            return false;
        }
        x.iter().enumerate().all(|(d, xi)| {
            self.mu_max[d].scale_q(t).compare_rational(xi) != Ordering::Greater
                && self.mu_min[d].scale_q(t).compare_rational(&(xi - int(1))) != Ordering::Less
        })
    }

    /// 0-based cells `[lo, hi)` along dimension `d` of `G_level` whose centers
    /// satisfy the slice condition at time `t`.
    pub fn cell_range(&self, d: usize, t: &Rational, level: u32, cells: usize) -> (usize, usize) {
        if *t > self.t {
            return (0, 0);
        }
        if *t == int(0) {
            return (0, cells);
        }
        let inv_h = pow2(level as i64);
        let s = t * &inv_h;
        let half = crate::field::rat(1, 2);
        let lo = -self.mu_max[d].neg().floor_scaled(&s, &half);
        let hi = self.mu_min[d].floor_scaled(&s, &(inv_h - &half)) + 1;
        let clamp = |v: num_bigint::BigInt| -> usize {
            if v <= 0.into() {
                0
            } else {
                usize::try_from(v).unwrap_or(usize::MAX).min(cells)
            }
        };
        (clamp(lo), clamp(hi))
    }
}

/// Spectra of the pencils `(A, B_i)` and the domain they determine.
pub fn compute_domain(p: &HyperbolicProblem) -> Result<DomainH> {
    p.validate()?;
    let pencils = p
        .b
        .iter()
        .map(|b| crate::linalg::pencil_decomposition(&p.a, b))
        .collect::<Result<Vec<_>>>()?;
    DomainH::from_pencils(&pencils)
}

/// Grid and time step for refinement `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Steps {
    pub level: u32,
    pub h: Rational,
    pub tau: Rational,
    /// Number of time steps `L`, a power of two with `L tau = T`.
    pub count: u64,
}

/// `h = 2^-N` and the smallest power of two `L` with `tau speed / h <= cfl`.
pub fn select_steps(domain: &DomainH, cfl: &Rational, level: u32) -> Steps {
    let h = pow2(-(level as i64));
    let x = &domain.t * &domain.speed / &h / cfl;
    let mut count: u64 = 1;
    while int(count as i64) < x {
        count *= 2;
    }
    let tau = &domain.t / int(count as i64);
    Steps { level, h, tau, count }
}

/// Smallest `N >= 1` with `2^N >= 3 a C`, `C = c0 n m M (1 + speed) T`.
pub fn a_priori_level(p: &HyperbolicProblem, domain: &DomainH) -> u32 {
    let c = &p.options.c0
        * int(p.n as i64)
        * int(p.m as i64)
        * &p.deriv_bound
        * (int(1) + &domain.speed)
        * &domain.t;
    let x = c * int(3) * int(p.accuracy as i64);
    let mut n = 1;
    while pow2(n as i64) < x {
        n += 1;
    }
    n
}
