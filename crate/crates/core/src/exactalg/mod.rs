//! Exact arithmetic: rationals, polynomials in `k`, `r`, `ε`, and the
//! binomial basis. Nothing in this crate touches floating point.

mod binomial;
mod bipoly;
mod ratfn;
mod rational;
mod unipoly;

pub use binomial::{binomial_fit, binomial_poly, eval_binomial, from_binomial_basis, to_binomial_basis};
pub use bipoly::BiPoly;
pub use ratfn::RationalFunctionEps;
pub use rational::{q, Rational};
pub use unipoly::UniPoly;

/// `p(k·r)` as a polynomial in `(k, r)`.
pub fn compose_scale(p: &UniPoly) -> BiPoly {
    BiPoly::compose_scale(p)
}

pub fn coefficient(poly: &BiPoly, i: i64, j: i64) -> Rational {
    poly.coefficient(i, j)
}

pub fn eval_rational_fn(f: &RationalFunctionEps, e: &Rational) -> crate::error::Result<Rational> {
    f.eval(e)
}

pub fn derivative_at_zero(f: &RationalFunctionEps) -> crate::error::Result<Rational> {
    f.derivative_at_zero()
}
