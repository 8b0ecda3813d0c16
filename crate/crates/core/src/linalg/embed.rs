//! Moving algebraic matrix entries into a single number field.

use std::sync::Arc;

use crate::algebraic::{as_number_field, AlgebraicComplex, AlgebraicReal, ComplexNF, NFElem, NumberFieldContext};
use crate::error::Result;
use crate::field::{sqrt_lower, sqrt_upper};
use crate::interval::Interval;

/// A number field containing every value, with the image of each value.
pub fn real_field(vals: &[AlgebraicReal]) -> Result<(Arc<NumberFieldContext>, Vec<NFElem>)> {
    let mut gens: Vec<AlgebraicReal> = Vec::new();
    for v in vals {
        if !v.is_rational() && !gens.iter().any(|g| g == v) {
            gens.push(v.clone());
        }
    }
    if gens.is_empty() {
        let images = vals.iter().map(|v| NFElem::rational(v.as_rational().unwrap())).collect();
        return Ok((NumberFieldContext::rationals(), images));
    }
    let (ctx, gi) = as_number_field(&gens)?;
    let images = vals
        .iter()
        .map(|v| match v.as_rational() {
            Some(r) => NFElem::rational(r),
            None => gi[gens.iter().position(|g| g == v).unwrap()].clone(),
        })
        .collect();
    Ok((ctx, images))
}

pub fn complex_field(vals: &[AlgebraicComplex]) -> Result<(Arc<NumberFieldContext>, Vec<ComplexNF>)> {
    let parts: Vec<AlgebraicReal> = vals.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect();
    let (ctx, im) = real_field(&parts)?;
    let out = im.chunks(2).map(|c| ComplexNF::new(c[0].clone(), c[1].clone())).collect();
    Ok((ctx, out))
}

/// An extension `F` of `k` containing `extra`, a map `k -> F` and the images of `extra`.
pub struct Extension {
    pub field: Arc<NumberFieldContext>,
    theta_image: Option<NFElem>,
    pub images: Vec<NFElem>,
}

impl Extension {
    pub fn new(k: &Arc<NumberFieldContext>, extra: &[AlgebraicReal]) -> Result<Self> {
        if k.degree() == 1 {
            let (field, images) = real_field(extra)?;
            return Ok(Extension { field, theta_image: None, images });
        }
        let mut gens = vec![k.theta().clone()];
        gens.extend_from_slice(extra);
        let (field, mut images) = real_field(&gens)?;
        let t = images.remove(0);
        Ok(Extension { field, theta_image: Some(t), images })
    }

    pub fn lift(&self, x: &NFElem) -> NFElem {
        if let Some(r) = x.as_rational() {
            return NFElem::rational(r);
        }
        let t = self.theta_image.as_ref().expect("irrational element of a rational context");
        self.field.elem(&x.to_poly().compose(&t.to_poly()))
    }

    pub fn lift_complex(&self, z: &ComplexNF) -> ComplexNF {
        ComplexNF::new(self.lift(&z.re), self.lift(&z.im))
    }
}

/// Enclosure of `x / sqrt(n)`, `None` unless `n` is enclosed away from zero.
pub fn enclose_over_sqrt(x: &Interval, n: &Interval, k: u32) -> Option<Interval> {
    if n.lo <= crate::field::int(0) {
        return None;
    }
    let s = Interval::new(sqrt_lower(&n.lo, k + 4), sqrt_upper(&n.hi, k + 4));
    Some(x.mul(&s.inv()?))
}
