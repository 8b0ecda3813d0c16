//! JSON literals for exact values.
//!
//! Rational: `"-3/7"` or a JSON integer. Polynomial: array of coefficients,
//! constant term first. Algebraic real: a rational, `{"sqrt": r}` or
//! `{"poly": [..], "root": k}` for the `(k+1)`-st real root. Complex:
//! `{"re": .., "im": ..}` or any real literal.

use exactreal::algebraic::{AlgebraicComplex, AlgebraicReal, NFElem};
use exactreal::field::{format_rational, parse_rational, pow2, to_decimal};
use exactreal::linalg::Matrix;
use exactreal::{Error, Field, Poly, Rational, Result};
use serde_json::{json, Value};

pub fn parse_json(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

pub fn parse_rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => Err(Error::Parse(format!("{n} is not an integer; write fractions as strings"))),
        },
        _ => Err(Error::Parse(format!("expected a rational literal, found {v}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("expected {what} as an array, found {v}")))
}

pub fn parse_poly(v: &Value) -> Result<Poly<Rational>> {
    let c = array(v, "a polynomial")?.iter().map(parse_rational_value).collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(c))
}

pub fn parse_poly_with<F: Field>(v: &Value, f: impl Fn(&Value) -> Result<F>) -> Result<Poly<F>> {
    let c = array(v, "a polynomial")?.iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(c))
}

pub fn parse_algebraic(v: &Value) -> Result<AlgebraicReal> {
    let Value::Object(o) = v else {
        return Ok(AlgebraicReal::from_rational(parse_rational_value(v)?));
    };
    if let Some(r) = o.get("sqrt") {
        if o.len() != 1 {
            return Err(Error::Parse("sqrt literal takes no other keys".into()));
        }
        return AlgebraicReal::from_rational(parse_rational_value(r)?).sqrt();
    }
    let (Some(p), Some(k)) = (o.get("poly"), o.get("root")) else {
        return Err(Error::Parse(format!("expected {{\"poly\", \"root\"}} or {{\"sqrt\"}}, found {v}")));
    };
    if o.len() != 2 {
        return Err(Error::Parse("root literal takes only \"poly\" and \"root\"".into()));
    }
    let p = parse_poly(p)?;
    let k = k.as_u64().ok_or_else(|| Error::Parse(format!("root index must be a natural number, found {k}")))?;
    AlgebraicReal::from_root_index(&p, k as usize)
        .ok_or_else(|| Error::Parse(format!("polynomial has no real root with index {k}")))
}

pub fn parse_complex(v: &Value) -> Result<AlgebraicComplex> {
    if let Value::Object(o) = v {
        if o.contains_key("re") || o.contains_key("im") {
            if o.keys().any(|k| k != "re" && k != "im") {
                return Err(Error::Parse("complex literal takes only \"re\" and \"im\"".into()));
            }
            let part = |k: &str| o.get(k).map(parse_algebraic).unwrap_or_else(|| Ok(AlgebraicReal::zero()));
            return Ok(AlgebraicComplex::new(part("re")?, part("im")?));
        }
    }
    Ok(AlgebraicComplex::real(parse_algebraic(v)?))
}

pub fn parse_matrix_with<F: Field>(v: &Value, f: impl Fn(&Value) -> Result<F>) -> Result<Matrix<F>> {
    let rows = array(v, "a matrix")?
        .iter()
        .map(|r| array(r, "a matrix row")?.iter().map(&f).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

pub fn parse_matrix(v: &Value) -> Result<Matrix<AlgebraicReal>> {
    parse_matrix_with(v, parse_algebraic)
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn poly_json(p: &Poly<Rational>) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

/// Canonical exact form: the minimal polynomial with integer coefficients
/// and the root index among its real roots.
pub fn algebraic_json(a: &AlgebraicReal) -> Value {
    if let Some(r) = a.as_rational() {
        return rational_json(&r);
    }
    let m = a.minimal_polynomial();
    if m.deg0() == 1 {
        return rational_json(&-m.coeff(0));
    }
    let k = a.root_index();
    json!({ "poly": poly_json(&m.integer_normal()), "root": k })
}

/// Rounded decimal with `digits` places.
pub fn decimal(a: &AlgebraicReal, digits: usize) -> String {
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8;
    to_decimal(&a.approx(bits), digits)
}

pub fn nf_decimal(x: &NFElem, digits: usize) -> String {
    match x.as_rational() {
        Some(r) => to_decimal(&r, digits),
        None => {
            let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8;
            let iv = x.enclosure(bits);
            debug_assert!(iv.width() <= pow2(-(bits as i64)));
            to_decimal(&iv.mid(), digits)
        }
    }
}

/// Exact by default, rounded decimals when `digits` is set.
#[derive(Clone, Copy, Debug)]
pub struct Printer {
    pub digits: Option<usize>,
}

impl Printer {
    pub fn real(&self, a: &AlgebraicReal) -> Value {
        match self.digits {
            Some(d) => Value::String(decimal(a, d)),
            None => algebraic_json(a),
        }
    }

    pub fn complex(&self, z: &AlgebraicComplex) -> Value {
        if z.im.sign() == exactreal::Sign::Zero {
            return self.real(&z.re);
        }
        json!({ "re": self.real(&z.re), "im": self.real(&z.im) })
    }

    pub fn rational(&self, r: &Rational) -> Value {
        match self.digits {
            Some(d) => Value::String(to_decimal(r, d)),
            None => rational_json(r),
        }
    }

    pub fn reals(&self, v: &[AlgebraicReal]) -> Value {
        Value::Array(v.iter().map(|a| self.real(a)).collect())
    }

    pub fn real_matrix(&self, rows: &[Vec<AlgebraicReal>]) -> Value {
        Value::Array(rows.iter().map(|r| self.reals(r)).collect())
    }

    pub fn complex_matrix(&self, m: &Matrix<AlgebraicComplex>) -> Value {
        Value::Array(
            m.to_rows().iter().map(|r| Value::Array(r.iter().map(|z| self.complex(z)).collect())).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactreal::field::{int, rat};

    #[test]
    fn rationals() {
        assert_eq!(parse_rational_value(&json!("-3/7")).unwrap(), rat(-3, 7));
        assert_eq!(parse_rational_value(&json!(5)).unwrap(), int(5));
        assert!(parse_rational_value(&json!(0.5)).is_err());
        assert!(parse_rational_value(&json!("1/0")).is_err());
    }

    #[test]
    fn algebraic_round_trip() {
        let s2 = parse_algebraic(&json!({"sqrt": 2})).unwrap();
        let printed = algebraic_json(&s2);
        assert_eq!(printed, json!({"poly": ["-2", "0", "1"], "root": 1}));
        assert_eq!(parse_algebraic(&printed).unwrap(), s2);
        let r = parse_algebraic(&json!({"poly": ["-1/4", 0, 1], "root": 1})).unwrap();
        assert_eq!(algebraic_json(&r), json!("1/2"));
        assert!(parse_algebraic(&json!({"poly": [1, 0, 1], "root": 0})).is_err());
        assert_eq!(parse_algebraic(&json!({"sqrt": -1})).unwrap_err(), Error::NegativeSqrt);
    }

    #[test]
    fn complex_and_decimal() {
        let i = parse_complex(&json!({"im": 1})).unwrap();
        assert_eq!(i, AlgebraicComplex::i());
        let s2 = parse_algebraic(&json!({"sqrt": 2})).unwrap();
        assert_eq!(decimal(&s2, 6), "1.414214");
        assert_eq!(decimal(&s2.neg(), 3), "-1.414");
    }
}
