//! Sparse polynomials in the two indeterminates `k` and `r`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, UniPoly};

/// Map from `(i, j)` to the coefficient of `k^i r^j`. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), Rational)>>(terms: I) -> Self {
        let mut p = BiPoly::zero();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: (usize, usize), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// A polynomial in `k` alone.
    pub fn from_k(p: &UniPoly) -> Self {
        BiPoly::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i, 0), c.clone())))
    }

    /// A polynomial in `r` alone.
    pub fn from_r(p: &UniPoly) -> Self {
        BiPoly::from_terms(p.coeffs().iter().enumerate().map(|(j, c)| ((0, j), c.clone())))
    }

    /// `p(k·r)`: every monomial `k^i` becomes `k^i r^i`.
    pub fn compose_scale(p: &UniPoly) -> Self {
        BiPoly::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i, i), c.clone())))
    }

    /// Coefficient of `k^i r^j`; zero when absent or when an exponent is negative.
    pub fn coefficient(&self, i: i64, j: i64) -> Rational {
        if i < 0 || j < 0 {
            return Rational::zero();
        }
        self.terms.get(&(i as usize, j as usize)).cloned().unwrap_or_default()
    }

    /// All terms with `k`-exponent `i`, as a polynomial in `r`.
    pub fn k_slice(&self, i: usize) -> UniPoly {
        let top = self.terms.keys().filter(|(a, _)| *a == i).map(|(_, b)| *b).max();
        let Some(top) = top else {
            return UniPoly::zero();
        };
        UniPoly::new((0..=top).map(|j| self.coefficient(i as i64, j as i64)).collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BiPoly::from_terms(self.terms.iter().map(|(e, a)| (*e, a * c)))
    }

    /// Multiply by `k^di r^dj`.
    pub fn shift(&self, di: usize, dj: usize) -> Self {
        BiPoly::from_terms(self.terms.iter().map(|((i, j), a)| ((i + di, j + dj), a.clone())))
    }

    pub fn eval(&self, k: &Rational, r: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|((i, j), c)| c * k.pow(*i as u32) * r.pow(*j as u32))
            .sum()
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|((i, j), c)| (format!("k^{i} r^{j}"), c)))
            .finish()
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, -c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_scale_is_diagonal() {
        let p = UniPoly::from_ints(&[0, 1, 0, 1]); // k^3 + k
        let q = BiPoly::compose_scale(&p);
        assert_eq!(q.coefficient(3, 3), Rational::one());
        assert_eq!(q.coefficient(1, 1), Rational::one());
        assert_eq!(q.len(), 2);
        assert_eq!(
            BiPoly::compose_scale(&UniPoly::from_ints(&[0, 0, 1])).coefficient(2, 2),
            Rational::one()
        );
        assert_eq!(
            BiPoly::compose_scale(&UniPoly::one()),
            BiPoly::from_terms([((0, 0), Rational::one())])
        );
    }

    #[test]
    fn coefficient_lookup() {
        let q = BiPoly::from_terms([((2, 1), Rational::from(3))]);
        assert_eq!(q.coefficient(2, 1), Rational::from(3));
        assert_eq!(q.coefficient(0, 0), Rational::zero());
        assert_eq!(q.coefficient(-1, 0), Rational::zero());
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a = BiPoly::from_terms([((1, 0), Rational::one()), ((0, 1), Rational::one())]);
        let d = &a - &a;
        assert!(d.is_zero());
        // (k + r)^2 = k^2 + 2kr + r^2
        let sq = &a * &a;
        assert_eq!(sq.coefficient(1, 1), Rational::from(2));
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.k_slice(0), UniPoly::from_ints(&[0, 0, 1]));
    }
}
