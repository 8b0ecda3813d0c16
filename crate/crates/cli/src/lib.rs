//! Batch frontend: argument parsing, dispatch and output formatting.

pub mod literal;
pub mod problem_file;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use exactreal::algebraic::{
    complex_roots_of, continued_fraction, real_roots_of, AlgebraicComplex, AlgebraicReal,
};
use exactreal::field::{format_rational, to_decimal};
use exactreal::linalg::{
    jordan_form, pencil_decomposition, spectral_decomposition, spectral_decomposition_normal, Matrix,
};
use exactreal::pde::{solve, SolveReport, SolveStatus};
use exactreal::roots::isolate_real_roots;
use exactreal::{Error, Rational, Result};
use serde_json::{json, Value};

use literal::*;

#[derive(Parser, Debug)]
#[command(name = "exactreal", version, about = "Exact real algebraic computation")]
struct Cli {
    /// Print numbers as rounded decimals with this many places
    #[arg(long, global = true)]
    digits: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Isolating intervals `(lo, hi]` of the real roots of a rational polynomial
    Isolate {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "1")]
        eps: String,
    },
    /// Roots with multiplicities of a polynomial with algebraic coefficients
    Roots {
        #[arg(long)]
        poly: String,
        /// Report complex roots too
        #[arg(long)]
        complex: bool,
    },
    /// Minimal polynomial over the rationals
    Minpoly {
        #[arg(long)]
        value: String,
    },
    /// Prints `<`, `=` or `>`
    Compare {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Dyadic rational within `2^-bits`
    Approx {
        #[arg(long)]
        value: String,
        #[arg(long)]
        bits: u32,
    },
    /// Eigenvalues and orthonormal eigenvectors of a symmetric or normal matrix
    Eig {
        #[arg(long)]
        matrix: String,
    },
    /// Simultaneous diagonalization of a pencil with `A` positive definite
    Pencil {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Jordan normal form `M = C^-1 J C`
    Jordan {
        #[arg(long)]
        matrix: String,
    },
    /// Certified solve of a hyperbolic Cauchy problem
    SolvePde {
        problem: PathBuf,
        /// Grid dump as CSV
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exact grid dump as JSON
        #[arg(long)]
        exact_out: Option<PathBuf>,
    },
    /// Leading terms of the continued fraction
    Cfrac {
        #[arg(long)]
        value: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
}

/// A JSON literal, or a bare rational such as `-3/7`.
fn value_arg(s: &str) -> Result<Value> {
    parse_json(s).or_else(|e| {
        if exactreal::field::parse_rational(s.trim()).is_ok() {
            Ok(Value::String(s.trim().to_string()))
        } else {
            Err(e)
        }
    })
}

fn complex_matrix(s: &str) -> Result<Matrix<AlgebraicComplex>> {
    parse_matrix_with(&value_arg(s)?, parse_complex)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

fn eig(p: &Printer, s: &str) -> Result<Value> {
    let m = complex_matrix(s)?;
    if m.entries().iter().all(|z| z.is_real()) {
        let r = m.map(|z| z.re.clone());
        if r.is_symmetric() {
            let d = spectral_decomposition(&r)?;
            let vecs: Vec<Vec<AlgebraicReal>> = d.eigenvectors.iter().map(|v| v.entries()).collect();
            return Ok(json!({
                "eigenvalues": p.reals(&d.eigenvalues),
                "eigenvectors": p.real_matrix(&vecs),
            }));
        }
    }
    let d = spectral_decomposition_normal(&m)?;
    let vecs: Vec<Value> = d
        .eigenvectors
        .iter()
        .map(|v| Value::Array(v.entries().iter().map(|z| p.complex(z)).collect()))
        .collect();
    Ok(json!({
        "eigenvalues": d.eigenvalues.iter().map(|z| p.complex(z)).collect::<Vec<_>>(),
        "eigenvectors": vecs,
    }))
}

fn roots(p: &Printer, s: &str, complex: bool) -> Result<Value> {
    let v = value_arg(s)?;
    let out: Vec<Value> = if complex {
        let f = parse_poly_with(&v, parse_complex)?;
        complex_roots_of(&f)?
            .iter()
            .map(|(z, k)| json!({"value": p.complex(z), "multiplicity": k}))
            .collect()
    } else {
        let f = parse_poly_with(&v, parse_algebraic)?;
        real_roots_of(&f)?.iter().map(|(a, k)| json!({"value": p.real(a), "multiplicity": k})).collect()
    };
    Ok(Value::Array(out))
}

fn report_json(p: &Printer, r: &SolveReport) -> Value {
    let (status, gap) = match &r.status {
        SolveStatus::Certified => ("certified", r.gaps.last().map(|g| g.1.clone())),
        SolveStatus::Uncertified { gap } => ("uncertified", Some(gap.clone())),
    };
    json!({
        "status": status,
        "N": r.steps.level,
        "h": p.rational(&r.steps.h),
        "tau": p.rational(&r.steps.tau),
        "L": r.steps.count,
        "T": p.rational(&r.domain.t),
        "mu_min": p.reals(&r.domain.mu_min),
        "mu_max": p.reals(&r.domain.mu_max),
        "gap": gap.map(|g| p.rational(&g)),
        "gaps": r.gaps.iter().map(|(n, g)| json!({"N": n, "gap": p.rational(g)})).collect::<Vec<_>>(),
        "a_priori_level": r.a_priori_level,
        "field_degree": r.grid.context().degree(),
    })
}

/// Rows `l,t,i1..im,x1..xm,u1..un` with 1-based cell indices.
pub fn grid_csv(r: &SolveReport, digits: usize) -> String {
    let g = &r.grid;
    let mut s = String::from("l,t");
    for d in 1..=g.m() {
        write!(s, ",i{d}").unwrap();
    }
    for d in 1..=g.m() {
        write!(s, ",x{d}").unwrap();
    }
    for k in 1..=g.n() {
        write!(s, ",u{k}").unwrap();
    }
    s.push('\n');
    for l in 0..=g.steps() {
        let t = format_rational(&g.time(l));
        for f in 0..g.num_cells() {
            let idx = g.multi(f);
            write!(s, "{l},{t}").unwrap();
            for i in &idx {
                write!(s, ",{}", i + 1).unwrap();
            }
            for x in g.center(&idx) {
                write!(s, ",{}", format_rational(&x)).unwrap();
            }
            for u in &g.level_values(l)[f] {
                write!(s, ",{}", nf_decimal(u, digits)).unwrap();
            }
            s.push('\n');
        }
    }
    s
}

/// Coefficient vectors over the context `Q(theta)` for every value.
pub fn grid_exact(r: &SolveReport) -> Value {
    let g = &r.grid;
    let ctx = g.context();
    let levels: Vec<Value> = (0..=g.steps())
        .map(|l| {
            Value::Array(
                g.level_values(l)
                    .iter()
                    .map(|v| {
                        Value::Array(
                            v.iter()
                                .map(|x| Value::Array(x.coeffs().iter().map(rational_json).collect()))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "minpoly": poly_json(ctx.minpoly()),
        "theta": algebraic_json(ctx.theta()),
        "m": g.m(),
        "n": g.n(),
        "N": g.refinement(),
        "tau": rational_json(g.tau()),
        "levels": levels,
    })
}

fn dispatch(cli: Cli) -> Result<String> {
    let p = Printer { digits: cli.digits };
    match cli.cmd {
        Command::Isolate { poly, eps } => {
            let f = parse_poly(&value_arg(&poly)?)?;
            let eps = parse_rational_value(&value_arg(&eps)?)?;
            let mut s = String::new();
            for iv in isolate_real_roots(&f, &eps)? {
                let show = |r: &Rational| match cli.digits {
                    Some(d) => to_decimal(r, d),
                    None => format_rational(r),
                };
                writeln!(s, "{} {}", show(&iv.lo), show(&iv.hi)).unwrap();
            }
            Ok(s)
        }
        Command::Roots { poly, complex } => Ok(pretty(&roots(&p, &poly, complex)?)),
        Command::Minpoly { value } => {
            let m = parse_algebraic(&value_arg(&value)?)?.minimal_polynomial();
            Ok(pretty(&poly_json(&m)))
        }
        Command::Compare { a, b } => {
            let a = parse_algebraic(&value_arg(&a)?)?;
            let b = parse_algebraic(&value_arg(&b)?)?;
            Ok(match a.compare(&b) {
                std::cmp::Ordering::Less => "<\n",
                std::cmp::Ordering::Equal => "=\n",
                std::cmp::Ordering::Greater => ">\n",
            }
            .to_string())
        }
        Command::Approx { value, bits } => {
            let a = parse_algebraic(&value_arg(&value)?)?;
            Ok(pretty(&p.rational(&a.approx(bits))))
        }
        Command::Eig { matrix } => Ok(pretty(&eig(&p, &matrix)?)),
        Command::Pencil { a, b } => {
            let a = parse_matrix(&value_arg(&a)?)?;
            let b = parse_matrix(&value_arg(&b)?)?;
            let d = pencil_decomposition(&a, &b)?;
            Ok(pretty(&json!({
                "mu": p.reals(&d.mu),
                "T": p.real_matrix(&d.t_matrix()),
                "lambda_A": p.reals(&d.lambda.eigenvalues),
            })))
        }
        Command::Jordan { matrix } => {
            let jf = jordan_form(&complex_matrix(&matrix)?)?;
            let blocks: Vec<Value> =
                jf.blocks.iter().map(|b| json!({"eigenvalue": p.complex(&b.eigenvalue), "size": b.size})).collect();
            Ok(pretty(&json!({
                "J": p.complex_matrix(&jf.j),
                "C": p.complex_matrix(&jf.c),
                "blocks": blocks,
            })))
        }
        Command::SolvePde { problem, out, exact_out } => {
            let text = std::fs::read_to_string(&problem)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", problem.display())))?;
            let prob = problem_file::parse_problem(&text)?;
            let r = solve(&prob)?;
            if let Some(path) = out {
                write_file(&path, &grid_csv(&r, cli.digits.unwrap_or(12)))?;
            }
            if let Some(path) = exact_out {
                write_file(&path, &pretty(&grid_exact(&r)))?;
            }
            Ok(pretty(&report_json(&p, &r)))
        }
        Command::Cfrac { value, terms } => {
            let a = parse_algebraic(&value_arg(&value)?)?;
            let cf: Vec<String> = continued_fraction(&a, terms).iter().map(|c| c.to_string()).collect();
            Ok(format!("[{}]\n", cf.join(", ")))
        }
    }
}

/// Runs one command; returns the process exit code.
///
/// 0 on success, 2 for malformed input, 3 when a mathematical precondition fails.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = writeln!(err, "{}", text.lines().next().unwrap_or("invalid arguments"));
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli) {
        Ok(s) => {
            let _ = out.write_all(s.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_mathematical() {
                3
            } else {
                2
            }
        }
    }
}
