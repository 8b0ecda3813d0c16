//! Cauchy problems `A u_t + sum B_i u_(x_i) = 0`, `u(0, x) = phi(x)` on `[0,1]^m`.

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::field::{int, rat, Rational};
use crate::linalg::Matrix;

use super::mpoly::MPoly;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Fraction of the unit CFL number used for the time step, in `(0, 1]`.
    pub cfl_factor: Rational,
    /// Constant in the a-priori error bound.
    pub c0: Rational,
    /// Most refinements tried after the first grid.
    pub max_refine: u32,
    /// Coarsest refinement level.
    pub start_level: u32,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { cfl_factor: rat(1, 2), c0: int(8), max_refine: 8, start_level: 1 }
    }
}

#[derive(Clone, Debug)]
pub struct HyperbolicProblem {
    pub m: usize,
    pub n: usize,
    pub a: Matrix<AlgebraicReal>,
    pub b: Vec<Matrix<AlgebraicReal>>,
    pub phi: Vec<MPoly>,
    /// Right-hand side; only the zero function is supported.
    pub source: Option<Vec<MPoly>>,
    /// Bound on first and second partial derivatives of `phi` over the cube.
    pub deriv_bound: Rational,
    /// Target accuracy `1/a`.
    pub accuracy: u64,
    pub options: SolveOptions,
}

impl HyperbolicProblem {
    /// Shape and data checks that do not need spectral information.
    pub fn validate(&self) -> Result<()> {
        let shape = |s: String| Err(Error::Shape(s));
        if self.m == 0 || self.n == 0 {
            return shape("m and n must be positive".into());
        }
        if self.a.rows() != self.n || self.a.cols() != self.n {
            return shape(format!("A must be {0}x{0}", self.n));
        }
        if self.b.len() != self.m {
            return shape(format!("expected {} matrices B, found {}", self.m, self.b.len()));
        }
        if self.b.iter().any(|b| b.rows() != self.n || b.cols() != self.n) {
            return shape(format!("every B must be {0}x{0}", self.n));
        }
        if self.phi.len() != self.n {
            return shape(format!("phi must have {} components", self.n));
        }
        if self.phi.iter().any(|p| p.nvars() != self.m) {
            return shape(format!("phi components must be polynomials in {} variables", self.m));
        }
        if self.accuracy == 0 {
            return shape("accuracy a must be a positive integer".into());
        }
        let o = &self.options;
        if o.cfl_factor <= int(0) || o.cfl_factor > int(1) {
            return shape("cfl_factor must lie in (0, 1]".into());
        }
        if o.c0 <= int(0) {
            return shape("c0 must be positive".into());
        }
        if let Some(f) = &self.source {
            if f.iter().any(|p| !p.is_zero()) {
                return Err(Error::Unsupported("nonzero source term".into()));
            }
        }
        if !self.a.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if self.b.iter().any(|b| !b.is_symmetric()) {
            return Err(Error::NotSymmetric);
        }
        self.check_derivative_bound()
    }

    fn check_derivative_bound(&self) -> Result<()> {
        for (k, p) in self.phi.iter().enumerate() {
            for i in 0..self.m {
                let di = p.derivative(i);
                let b = di.sup_bound_unit_cube();
                if b > self.deriv_bound {
                    return Err(Error::DerivativeBound(format!(
                        "d phi_{}/dx_{} may reach {b} > M = {}",
                        k + 1,
                        i + 1,
                        self.deriv_bound
                    )));
                }
                for j in 0..self.m {
                    let b = di.derivative(j).sup_bound_unit_cube();
                    if b > self.deriv_bound {
                        return Err(Error::DerivativeBound(format!(
                            "d2 phi_{}/dx_{} dx_{} may reach {b} > M = {}",
                            k + 1,
                            i + 1,
                            j + 1,
                            self.deriv_bound
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
