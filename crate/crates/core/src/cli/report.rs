//! JSON rendering of exact values. Rationals are `"p/q"` strings;
//! polynomials are maps from exponent to coefficient in ascending order.

use serde_json::{json, Map, Value};

use crate::exactalg::{BiPoly, Rational, RationalFunctionEps, UniPoly};
use crate::lines::LambdaVector;

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn unipoly(p: &UniPoly) -> Value {
    let mut m = Map::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            m.insert(i.to_string(), rational(c));
        }
    }
    Value::Object(m)
}

/// Keys are `"i,j"` for the coefficient of `k^i r^j`.
pub fn bipoly(p: &BiPoly) -> Value {
    let mut m = Map::new();
    for ((i, j), c) in p.terms() {
        m.insert(format!("{i},{j}"), rational(c));
    }
    Value::Object(m)
}

pub fn rational_fn(f: &RationalFunctionEps) -> Value {
    json!({
        "numerator": unipoly(f.numerator()),
        "denominator": unipoly(f.denominator()),
    })
}

pub fn lambda_vector(v: &LambdaVector) -> Value {
    Value::Array(
        v.entries()
            .iter()
            .map(|e| e.as_ref().map_or(Value::Null, rational))
            .collect(),
    )
}
