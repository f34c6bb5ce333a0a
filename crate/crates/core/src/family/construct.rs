//! Projective bundles, fibred products, twists and rescalings.
//!
//! Conventions: `P(E)` is the space of lines in `E`, `L = O_{P(E)}(1)` with
//! `ξ = c1(L)`, so `π_*L^k = S^k E*`, `ξ^{n+1} = −π*c1(E)·ξ^n` and
//! `K_{X/B} = −(n+1)ξ − π*c1(E)`.

use super::{FamilyData, MultisectionSpec};
use crate::error::{Error, Result};
use crate::exactalg::{Rational, UniPoly};

fn fmt_degrees(degrees: &[i64]) -> String {
    let parts: Vec<String> = degrees.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// `C(k + shift, m)` as a polynomial in `k`.
fn shifted_binomial(shift: usize, m: usize) -> UniPoly {
    let mut p = UniPoly::one();
    for j in 0..m {
        let root = Rational::from(shift as i64 - j as i64);
        p = &p * &UniPoly::new(vec![root, Rational::one()]);
    }
    p.scale(&Rational::factorial(m as u32).recip())
}

/// `P(O(d_0) ⊕ … ⊕ O(d_n))` over a base curve of the given genus, polarised
/// by `O(1)`.
pub fn proj_bundle(genus_base: u32, degrees: &[i64]) -> Result<FamilyData> {
    if degrees.len() < 2 {
        return Err(Error::Precondition(format!(
            "a projective bundle needs at least two summands, got {}",
            degrees.len()
        )));
    }
    let n = degrees.len() - 1;
    let s = Rational::from(degrees.iter().sum::<i64>());
    let hilb = shifted_binomial(n, n);
    let pushforward = shifted_binomial(n, n + 1).scale(&-&s);
    FamilyData::new(
        n,
        genus_base,
        hilb,
        -&s,
        Rational::from(n) * &s,
        Some(pushforward),
        format!("proj_bundle({genus_base},{})", fmt_degrees(degrees)),
    )
}

/// The section `P(O(d_i)) ⊂ P(E)` as a degree-one multisection.
pub fn section_of_summand(genus_base: u32, degrees: &[i64], index: usize) -> Result<MultisectionSpec> {
    let Some(&di) = degrees.get(index) else {
        return Err(Error::Precondition(format!(
            "summand index {index} out of range for {} summands",
            degrees.len()
        )));
    };
    let n1 = degrees.len() as i64;
    let s: i64 = degrees.iter().sum();
    MultisectionSpec::new(
        1,
        2 * genus_base as i64 - 2,
        Rational::from(-di),
        Rational::from(n1 * di - s),
    )
}

/// `X1 ×_B X2` with the product polarisation.
pub fn fibred_product(f1: &FamilyData, f2: &FamilyData) -> Result<FamilyData> {
    if f1.genus_base() != f2.genus_base() {
        return Err(Error::Precondition(format!(
            "fibred product needs a common base: genus {} vs {}",
            f1.genus_base(),
            f2.genus_base()
        )));
    }
    let (n1, n2) = (f1.n(), f2.n());
    let n = n1 + n2;
    let c = |a: usize, b: usize| Rational::binomial(a as u32, b as u32);

    // A monomial L1^a·L2^b (a + b = n + 1) survives only when one factor
    // carries a fibre class and the other a total-space class.
    let deg_l_top =
        c(n + 1, n1 + 1) * f1.deg_l_top() * f2.fibre_volume() + c(n + 1, n1) * f1.fibre_volume() * f2.deg_l_top();

    let k_part = |fa: &FamilyData, fb: &FamilyData| {
        let na = fa.n();
        c(n, na) * fa.deg_kl() * fb.fibre_volume() + c(n, na - 1) * fa.fibre_canonical_degree() * fb.deg_l_top()
    };
    let deg_kl = k_part(f1, f2) + k_part(f2, f1);

    let hilb = f1.hilb() * f2.hilb();
    let pushforward = match (f1.pushforward(), f2.pushforward()) {
        (Some(l1), Some(l2)) => Some(f2.hilb() * l1 + f1.hilb() * l2),
        _ => None,
    };
    FamilyData::new(
        n,
        f1.genus_base(),
        hilb,
        deg_l_top,
        deg_kl,
        pushforward,
        format!("product({}, {})", f1.label(), f2.label()),
    )
}

/// `L ↦ L ⊗ π*σ` for a line bundle `σ` of degree `t` on the base.
pub fn twist(f: &FamilyData, t: &Rational) -> Result<FamilyData> {
    let n = f.n();
    let deg_l_top = f.deg_l_top() + Rational::from(n + 1) * t * f.fibre_volume();
    let deg_kl = f.deg_kl() + Rational::from(n) * t * f.fibre_canonical_degree();
    let pushforward = f.pushforward().map(|push| push + &f.hilb().shift(1).scale(t));
    FamilyData::new(
        n,
        f.genus_base(),
        f.hilb().clone(),
        deg_l_top,
        deg_kl,
        pushforward,
        format!("twist({}, {t})", f.label()),
    )
}

/// `L ↦ L^r`.
pub fn scale(f: &FamilyData, r: i64) -> Result<FamilyData> {
    if r < 1 {
        return Err(Error::Precondition(format!(
            "polarisation power r = {r} must be at least 1"
        )));
    }
    let n = f.n() as u32;
    let rr = Rational::from(r);
    FamilyData::new(
        f.n(),
        f.genus_base(),
        f.hilb().rescale_var(&rr),
        rr.pow(n + 1) * f.deg_l_top(),
        rr.pow(n) * f.deg_kl(),
        f.pushforward().map(|push| push.rescale_var(&rr)),
        format!("scale({}, {r})", f.label()),
    )
}

/// `C(k + n, n)`, the Hilbert polynomial of `(P^n, O(1))`.
pub fn projective_space_hilb(n: usize) -> UniPoly {
    shifted_binomial(n, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{binomial_poly, q, to_binomial_basis};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn shifted_binomial_matches_basis() {
        assert_eq!(shifted_binomial(0, 3), binomial_poly(3));
        assert_eq!(shifted_binomial(1, 1), UniPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn balanced_bundle_is_flat() {
        let f = proj_bundle(0, &[2, -1, -1]).unwrap();
        assert_eq!(f.n(), 2);
        assert!(f.deg_l_top().is_zero());
        assert!(f.deg_kl().is_zero());
        assert!(f.pushforward().unwrap().is_zero());
        assert_eq!(f.a0(), q(1, 2));
        assert_eq!(f.a1(), q(3, 2));
    }

    #[test]
    fn single_positive_summand() {
        let f = proj_bundle(0, &[1, 0, 0]).unwrap();
        assert_eq!(f.deg_l_top(), &Rational::from(-1));
        assert_eq!(f.deg_kl(), &Rational::from(2));
        assert_eq!(
            to_binomial_basis(f.pushforward().unwrap()).unwrap(),
            ints(&[0, -1, -2, -1])
        );
    }

    #[test]
    fn trivial_p1_bundle() {
        let f = proj_bundle(0, &[0, 0]).unwrap();
        assert_eq!(f.n(), 1);
        assert!(f.deg_l_top().is_zero() && f.deg_kl().is_zero());
        assert!(f.pushforward().unwrap().is_zero());
        assert!(proj_bundle(0, &[3]).is_err());
    }

    #[test]
    fn sections_of_summands() {
        let ms = section_of_summand(0, &[2, -1, -1], 0).unwrap();
        assert_eq!((ms.d(), ms.canonical_degree()), (1, -2));
        assert_eq!(ms.deg_l(), &Rational::from(-2));
        assert_eq!(ms.deg_k_rel(), &Rational::from(6));
        let ms = section_of_summand(0, &[2, -1, -1], 1).unwrap();
        assert_eq!(ms.deg_l(), &Rational::from(1));
        assert_eq!(ms.deg_k_rel(), &Rational::from(-3));
        let ms = section_of_summand(0, &[0, 0, 0], 0).unwrap();
        assert!(ms.deg_l().is_zero() && ms.deg_k_rel().is_zero());
        assert!(section_of_summand(0, &[0, 0, 0], 3).is_err());
    }

    #[test]
    fn twist_examples() {
        let f = proj_bundle(0, &[2, -1, -1]).unwrap();
        assert_eq!(twist(&f, &Rational::zero()).unwrap().deg_l_top(), f.deg_l_top());
        let g = twist(&f, &Rational::one()).unwrap();
        assert_eq!(g.deg_l_top(), &Rational::from(3));
        assert_eq!(g.deg_kl(), &Rational::from(-6));
    }

    #[test]
    fn scale_examples() {
        let f = proj_bundle(0, &[1, 0, 0]).unwrap();
        let g = scale(&f, 2).unwrap();
        assert_eq!(g.deg_l_top(), &Rational::from(-8));
        assert_eq!(g.deg_kl(), &Rational::from(8));
        assert_eq!(scale(&f, 1).unwrap().hilb(), f.hilb());
        assert!(scale(&f, 0).is_err());
    }

    #[test]
    fn product_examples() {
        let p1 = proj_bundle(0, &[0, 0]).unwrap();
        let g = fibred_product(&p1, &p1).unwrap();
        assert!(g.deg_l_top().is_zero() && g.deg_kl().is_zero());
        assert_eq!(g.hilb(), &UniPoly::from_ints(&[1, 2, 1]));

        let f = proj_bundle(0, &[1, 0, 0]).unwrap();
        let g = fibred_product(&f, &p1).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.deg_l_top(), &Rational::from(-4));
        assert!(g.pushforward().is_some());

        let h = proj_bundle(1, &[0, 0]).unwrap();
        assert!(fibred_product(&f, &h).is_err());
    }
}
