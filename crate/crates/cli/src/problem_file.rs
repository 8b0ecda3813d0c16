//! Problem files for `solve-pde`.
//!
//! ```json
//! {"m": 1, "n": 2,
//!  "A": [[1,0],[0,1]], "B": [[[0,1],[1,0]]],
//!  "phi": [{"2": 1, "3": -2, "4": 1}, {}],
//!  "M": 4, "a": 4,
//!  "options": {"cfl_factor": "1/2", "c0": 8, "max_refine": 8}}
//! ```
//!
//! Each component of `phi` (and of the optional source `f`) maps a monomial,
//! written as comma separated exponents of `x1..xm`, to its coefficient.

use exactreal::pde::{HyperbolicProblem, MPoly, SolveOptions};
use exactreal::{Error, Result};
use serde_json::{Map, Value};

use crate::literal::{parse_json, parse_matrix, parse_rational_value};

fn field<'a>(o: &'a Map<String, Value>, k: &str) -> Result<&'a Value> {
    o.get(k).ok_or_else(|| Error::Parse(format!("missing field {k:?}")))
}

fn natural(v: &Value, k: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::Parse(format!("{k:?} must be a natural number")))
}

fn mpoly(v: &Value, m: usize) -> Result<MPoly> {
    let o = v.as_object().ok_or_else(|| Error::Parse(format!("expected a monomial map, found {v}")))?;
    let mut p = MPoly::zero(m);
    for (k, c) in o {
        let exps = k
            .split(',')
            .map(|e| e.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad monomial key {k:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if exps.len() != m {
            return Err(Error::Parse(format!("monomial {k:?} needs {m} exponents")));
        }
        p.add_term(exps, parse_rational_value(c)?)?;
    }
    Ok(p)
}

fn mpolys(v: &Value, m: usize) -> Result<Vec<MPoly>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array of components".into()))?
        .iter()
        .map(|c| mpoly(c, m))
        .collect()
}

pub fn parse_problem(text: &str) -> Result<HyperbolicProblem> {
    let v = parse_json(text)?;
    let o = v.as_object().ok_or_else(|| Error::Parse("problem must be a JSON object".into()))?;
    for k in o.keys() {
        if !["m", "n", "A", "B", "phi", "f", "M", "a", "options"].contains(&k.as_str()) {
            return Err(Error::Parse(format!("unknown field {k:?}")));
        }
    }
    let m = natural(field(o, "m")?, "m")? as usize;
    let n = natural(field(o, "n")?, "n")? as usize;
    let a = parse_matrix(field(o, "A")?)?;
    let b = field(o, "B")?
        .as_array()
        .ok_or_else(|| Error::Parse("\"B\" must be an array of matrices".into()))?
        .iter()
        .map(parse_matrix)
        .collect::<Result<Vec<_>>>()?;
    let phi = mpolys(field(o, "phi")?, m)?;
    let source = o.get("f").map(|f| mpolys(f, m)).transpose()?;
    let deriv_bound = parse_rational_value(field(o, "M")?)?;
    let accuracy = natural(field(o, "a")?, "a")?;
    let mut options = SolveOptions::default();
    if let Some(opt) = o.get("options") {
        let opt = opt.as_object().ok_or_else(|| Error::Parse("\"options\" must be an object".into()))?;
        for (k, v) in opt {
            match k.as_str() {
                "cfl_factor" => options.cfl_factor = parse_rational_value(v)?,
                "c0" => options.c0 = parse_rational_value(v)?,
                "max_refine" => options.max_refine = natural(v, k)? as u32,
                "start_level" => options.start_level = natural(v, k)? as u32,
                _ => return Err(Error::Parse(format!("unknown option {k:?}"))),
            }
        }
    }
    Ok(HyperbolicProblem { m, n, a, b, phi, source, deriv_bound, accuracy, options })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactreal::field::{int, rat};

    #[test]
    fn wave_file() {
        let p = parse_problem(
            r#"{"m":1,"n":2,"A":[[1,0],[0,1]],"B":[[[0,1],[1,0]]],
                "phi":[{"2":1,"3":-2,"4":1},{}],"M":4,"a":4,
                "options":{"cfl_factor":"1","max_refine":3}}"#,
        )
        .unwrap();
        assert_eq!(p.phi[0].eval(&[rat(1, 2)]), rat(1, 16));
        assert!(p.phi[1].is_zero());
        assert_eq!(p.options.cfl_factor, int(1));
        assert_eq!(p.options.max_refine, 3);
        assert!(parse_problem(r#"{"m":1}"#).is_err());
        assert!(parse_problem(r#"{"m":1,"n":1,"A":[[1]],"B":[[[1]]],"phi":[{"1,1":1}],"M":1,"a":1}"#).is_err());
    }
}
