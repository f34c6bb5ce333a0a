//! Exact rational functions of the blowup parameter ε.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// `numerator / denominator`, reduced so the two are coprime and the
/// denominator is monic. Structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunctionEps {
    numerator: UniPoly,
    denominator: UniPoly,
}

impl RationalFunctionEps {
    pub fn new(numerator: UniPoly, denominator: UniPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Precondition("rational function with zero denominator".into()));
        }
        if numerator.is_zero() {
            return Ok(RationalFunctionEps {
                numerator,
                denominator: UniPoly::one(),
            });
        }
        let g = UniPoly::gcd(&numerator, &denominator);
        let (num, _) = numerator.div_rem(&g);
        let (den, _) = denominator.div_rem(&g);
        let lead = den.leading().recip();
        Ok(RationalFunctionEps {
            numerator: num.scale(&lead),
            denominator: den.scale(&lead),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunctionEps {
            numerator: p,
            denominator: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunctionEps::from_poly(UniPoly::constant(c))
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.denominator
    }

    pub fn eval(&self, e: &Rational) -> Result<Rational> {
        let den = self.denominator.eval(e);
        if den.is_zero() {
            return Err(Error::Pole { at: e.clone() });
        }
        Ok(self.numerator.eval(e) / den)
    }

    /// First derivative at ε = 0 by the quotient rule.
    pub fn derivative_at_zero(&self) -> Result<Rational> {
        let d0 = self.denominator.coeff(0);
        if d0.is_zero() {
            return Err(Error::Pole { at: Rational::zero() });
        }
        let n0 = self.numerator.coeff(0);
        let n1 = self.numerator.coeff(1);
        let d1 = self.denominator.coeff(1);
        Ok((n1 * &d0 - n0 * d1) / (&d0 * &d0))
    }

    /// Fails only when `rhs` is identically zero.
    pub fn checked_div(&self, rhs: &RationalFunctionEps) -> Result<Self> {
        RationalFunctionEps::new(&self.numerator * &rhs.denominator, &self.denominator * &rhs.numerator)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.denominator == UniPoly::one() {
            self.numerator.display_in(var)
        } else {
            format!(
                "({}) / ({})",
                self.numerator.display_in(var),
                self.denominator.display_in(var)
            )
        }
    }
}

impl fmt::Debug for RationalFunctionEps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunctionEps({})", self.display_in("eps"))
    }
}

fn reduce(num: UniPoly, den: UniPoly) -> RationalFunctionEps {
    // operands already have nonzero denominators
    RationalFunctionEps::new(num, den).expect("product of nonzero denominators")
}

impl Add<&RationalFunctionEps> for &RationalFunctionEps {
    type Output = RationalFunctionEps;
    fn add(self, rhs: &RationalFunctionEps) -> RationalFunctionEps {
        reduce(
            &self.numerator * &rhs.denominator + &rhs.numerator * &self.denominator,
            &self.denominator * &rhs.denominator,
        )
    }
}

impl Sub<&RationalFunctionEps> for &RationalFunctionEps {
    type Output = RationalFunctionEps;
    fn sub(self, rhs: &RationalFunctionEps) -> RationalFunctionEps {
        reduce(
            &self.numerator * &rhs.denominator - &rhs.numerator * &self.denominator,
            &self.denominator * &rhs.denominator,
        )
    }
}

impl Mul<&RationalFunctionEps> for &RationalFunctionEps {
    type Output = RationalFunctionEps;
    fn mul(self, rhs: &RationalFunctionEps) -> RationalFunctionEps {
        reduce(&self.numerator * &rhs.numerator, &self.denominator * &rhs.denominator)
    }
}

impl Neg for &RationalFunctionEps {
    type Output = RationalFunctionEps;
    fn neg(self) -> RationalFunctionEps {
        RationalFunctionEps {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}
