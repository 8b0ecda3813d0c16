//! Exact solver for symmetric hyperbolic systems with constant coefficients.

pub mod domain;
pub mod grid;
pub mod mpoly;
pub mod problem;
pub mod scheme;
pub mod solver;

pub use domain::{a_priori_level, compute_domain, select_steps, DomainH, Steps};
pub use grid::{grid_norm, sqrt_upper_bound, GridFunction, NormKind};
pub use mpoly::MPoly;
pub use problem::{HyperbolicProblem, SolveOptions};
pub use scheme::{run_scheme, SchemeData};
pub use solver::{refinement_gap, solve, solve_at_level, SolveReport, SolveStatus};
