//! The binomial basis `C(k, 0), C(k, 1), …` of polynomials in `k`.

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// `C(k, i) = k(k−1)…(k−i+1)/i!` as a polynomial of degree `i`.
pub fn binomial_poly(i: usize) -> UniPoly {
    let mut p = UniPoly::one();
    for j in 0..i {
        p = &p * &UniPoly::new(vec![-Rational::from(j), Rational::one()]);
    }
    p.scale(&Rational::factorial(i as u32).recip())
}

/// Coefficients `c_0..c_d` with `p(k) = Σ c_i·C(k, i)`.
pub fn to_binomial_basis(p: &UniPoly) -> Result<Vec<Rational>> {
    let degree = p.degree().unwrap_or(0);
    let samples: Vec<Rational> = (0..=2 * degree as i64 + 2).map(|k| p.eval_int(k)).collect();
    binomial_fit(&samples, degree)
}

/// Fits a degree-`degree` polynomial in the binomial basis to the values
/// `samples[k]` at `k = 0, 1, …`.
///
/// The lower-triangular system at `k = 0..=degree` is solved by forward
/// substitution (`C(k, i) = 0` for `i > k`, `C(k, k) = 1`). Every remaining
/// sample is then re-checked against the fit; a mismatch means the values
/// do not come from a polynomial of that degree.
pub fn binomial_fit(samples: &[Rational], degree: usize) -> Result<Vec<Rational>> {
    if samples.len() <= degree {
        return Err(Error::Precondition(format!(
            "binomial fit of degree {degree} needs at least {} samples, got {}",
            degree + 1,
            samples.len()
        )));
    }
    let mut coeffs: Vec<Rational> = Vec::with_capacity(degree + 1);
    for (k, sample) in samples.iter().enumerate().take(degree + 1) {
        let partial: Rational = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * Rational::binomial(k as u32, i as u32))
            .sum();
        coeffs.push(sample - partial);
    }
    for (k, sample) in samples.iter().enumerate().skip(degree + 1) {
        let fitted = eval_binomial(&coeffs, &Rational::from(k));
        if &fitted != sample {
            return Err(Error::NotPolynomial {
                degree,
                k: k as i64,
                sample: sample.clone(),
                fitted,
            });
        }
    }
    Ok(coeffs)
}

/// `Σ c_i·C(x, i)` at a rational point.
pub fn eval_binomial(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut total = Rational::zero();
    let mut basis = Rational::one();
    for (i, c) in coeffs.iter().enumerate() {
        total += c * &basis;
        basis = basis * (x - Rational::from(i)) / Rational::from(i + 1);
    }
    total
}

/// Inverse of [`to_binomial_basis`].
pub fn from_binomial_basis(coeffs: &[Rational]) -> UniPoly {
    coeffs
        .iter()
        .enumerate()
        .fold(UniPoly::zero(), |acc, (i, c)| acc + binomial_poly(i).scale(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn small_basis_elements() {
        assert_eq!(binomial_poly(0), UniPoly::one());
        assert_eq!(binomial_poly(1), UniPoly::x());
        // (k³ − 3k² + 2k)/6
        assert_eq!(
            binomial_poly(3),
            UniPoly::new(vec![Rational::zero(), q(1, 3), q(-1, 2), q(1, 6)])
        );
    }

    #[test]
    fn basis_element_and_identity() {
        assert_eq!(
            to_binomial_basis(&binomial_poly(3)).unwrap(),
            vec![Rational::zero(), Rational::zero(), Rational::zero(), Rational::one()]
        );
        assert_eq!(
            to_binomial_basis(&UniPoly::x()).unwrap(),
            vec![Rational::zero(), Rational::one()]
        );
        assert_eq!(to_binomial_basis(&UniPoly::zero()).unwrap(), vec![Rational::zero()]);
    }

    #[test]
    fn negative_shifted_binomial() {
        // −C(k+2, 3), sampled directly from its product form
        let samples: Vec<Rational> = (0..=8)
            .map(|k: i64| Rational::from(-(k + 2) * (k + 1) * k) / Rational::from(6))
            .collect();
        let expected: Vec<Rational> = [0, -1, -2, -1].iter().map(|&c| Rational::from(c)).collect();
        assert_eq!(binomial_fit(&samples, 3).unwrap(), expected);
        let p = from_binomial_basis(&expected);
        assert_eq!(to_binomial_basis(&p).unwrap(), expected);
    }

    #[test]
    fn non_polynomial_samples_are_rejected() {
        // 2^k is not a cubic
        let samples: Vec<Rational> = (0..9).map(|k| Rational::from(1i64 << k)).collect();
        assert!(matches!(
            binomial_fit(&samples, 3),
            Err(Error::NotPolynomial { degree: 3, k: 4, .. })
        ));
        assert!(binomial_fit(&samples[..2], 3).is_err());
    }

    #[test]
    fn eval_matches_poly() {
        let c = vec![q(1, 2), Rational::from(-3), q(5, 7)];
        let p = from_binomial_basis(&c);
        for x in [-3, 0, 4, 11] {
            assert_eq!(eval_binomial(&c, &Rational::from(x)), p.eval_int(x));
        }
    }
}
