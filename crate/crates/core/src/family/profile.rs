//! The intersection profile of a polarised family `(X, L) → B` over a curve.

use crate::error::{Error, Result};
use crate::exactalg::{to_binomial_basis, Rational, UniPoly};

/// Everything the line-degree formulas need to know about a family.
///
/// Invariants (checked by [`FamilyData::new`]):
/// * `hilb` has degree `n` with strictly positive leading coefficient `a0`;
/// * if `pushforward` is present it has degree at most `n + 1` and its
///   binomial coefficients satisfy `λ_{n+1} = deg_L_top` and
///   `n·λ_{n+1} − 2·λ_n = deg_KL`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyData {
    n: usize,
    genus_base: u32,
    hilb: UniPoly,
    deg_l_top: Rational,
    deg_kl: Rational,
    pushforward: Option<UniPoly>,
    label: String,
}

impl FamilyData {
    pub fn new(
        n: usize,
        genus_base: u32,
        hilb: UniPoly,
        deg_l_top: Rational,
        deg_kl: Rational,
        pushforward: Option<UniPoly>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let f = FamilyData::from_raw(n, genus_base, hilb, deg_l_top, deg_kl, pushforward, label)?;
        f.check_pushforward()?;
        Ok(f)
    }

    /// Builds a profile checking only the Hilbert polynomial invariants.
    ///
    /// Used for externally supplied profiles whose consistency is the thing
    /// under test; the verification checks report any disagreement.
    pub fn from_raw(
        n: usize,
        genus_base: u32,
        hilb: UniPoly,
        deg_l_top: Rational,
        deg_kl: Rational,
        pushforward: Option<UniPoly>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("relative dimension must be positive".into()));
        }
        if hilb.degree() != Some(n) {
            return Err(Error::Precondition(format!(
                "Hilbert polynomial {} must have degree n = {n}",
                hilb.display_in("k")
            )));
        }
        if !hilb.leading().is_positive() {
            return Err(Error::Precondition(format!(
                "leading Hilbert coefficient a0 = {} must be strictly positive",
                hilb.leading()
            )));
        }
        Ok(FamilyData {
            n,
            genus_base,
            hilb,
            deg_l_top,
            deg_kl,
            pushforward,
            label: label.into(),
        })
    }

    /// Checks the pushforward invariants: degree at most `n + 1` and both
    /// Riemann–Roch identities on its binomial coefficients.
    pub fn check_pushforward(&self) -> Result<()> {
        let Some(push) = &self.pushforward else {
            return Ok(());
        };
        let n = self.n;
        if push.degree().is_some_and(|d| d > n + 1) {
            return Err(Error::Precondition(format!(
                "pushforward {} has degree above n + 1 = {}",
                push.display_in("k"),
                n + 1
            )));
        }
        let lambda = self.pushforward_lambdas().expect("pushforward present")?;
        let top = &lambda[n + 1];
        if top != &self.deg_l_top {
            return Err(Error::Inconsistent {
                quantity: format!("{}: top intersection", self.label),
                left_route: "deg λ_{n+1}".into(),
                left: top.clone(),
                right_route: "π_*(L^{n+1})".into(),
                right: self.deg_l_top.clone(),
            });
        }
        let kl_from_lambda = Rational::from(n) * top - Rational::from(2) * &lambda[n];
        if kl_from_lambda != self.deg_kl {
            return Err(Error::Inconsistent {
                quantity: format!("{}: canonical intersection", self.label),
                left_route: "n·λ_{n+1} − 2·λ_n".into(),
                left: kl_from_lambda,
                right_route: "π_*(K·L^n)".into(),
                right: self.deg_kl.clone(),
            });
        }
        Ok(())
    }

    /// Binomial coefficients `λ_0..λ_{n+1}` of the pushforward, zero-padded.
    pub(crate) fn pushforward_lambdas(&self) -> Option<Result<Vec<Rational>>> {
        let push = self.pushforward.as_ref()?;
        Some(to_binomial_basis(push).map(|mut c| {
            if c.len() < self.n + 2 {
                c.resize(self.n + 2, Rational::zero());
            }
            c
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn genus_base(&self) -> u32 {
        self.genus_base
    }

    pub fn hilb(&self) -> &UniPoly {
        &self.hilb
    }

    /// Leading Hilbert coefficient, the fibre volume divided by `n!`.
    pub fn a0(&self) -> Rational {
        self.hilb.coeff(self.n)
    }

    pub fn a1(&self) -> Rational {
        self.hilb.coeff(self.n - 1)
    }

    /// `π_*(c1(L)^{n+1})`.
    pub fn deg_l_top(&self) -> &Rational {
        &self.deg_l_top
    }

    /// `π_*(c1(K_{X/B})·c1(L)^n)`.
    pub fn deg_kl(&self) -> &Rational {
        &self.deg_kl
    }

    pub fn pushforward(&self) -> Option<&UniPoly> {
        self.pushforward.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `∫ L_b^n = n!·a0` over a fibre.
    pub fn fibre_volume(&self) -> Rational {
        Rational::factorial(self.n as u32) * self.a0()
    }

    /// `∫ K_b·L_b^{n−1} = −2·(n−1)!·a1` over a fibre (Riemann–Roch).
    pub fn fibre_canonical_degree(&self) -> Rational {
        Rational::from(-2) * Rational::factorial(self.n as u32 - 1) * self.a1()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    fn p2_hilb() -> UniPoly {
        UniPoly::new(vec![Rational::one(), q(3, 2), q(1, 2)])
    }

    #[test]
    fn rejects_bad_hilbert_polynomial() {
        let r = FamilyData::new(3, 0, p2_hilb(), Rational::zero(), Rational::zero(), None, "x");
        assert!(matches!(r, Err(Error::Precondition(_))));
        let neg = UniPoly::from_ints(&[1, 0, -1]);
        let r = FamilyData::new(2, 0, neg, Rational::zero(), Rational::zero(), None, "x");
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn rejects_inconsistent_pushforward() {
        // −C(k+2, 3) belongs to L³ = −1, KL² = 2
        let push = UniPoly::new(vec![Rational::zero(), q(-1, 3), q(-1, 2), q(-1, 6)]);
        let ok = FamilyData::new(
            2,
            0,
            p2_hilb(),
            Rational::from(-1),
            Rational::from(2),
            Some(push.clone()),
            "ok",
        );
        assert!(ok.is_ok());
        let bad = FamilyData::new(
            2,
            0,
            p2_hilb(),
            Rational::from(-1),
            Rational::from(3),
            Some(push.clone()),
            "bad",
        );
        assert!(matches!(bad, Err(Error::Inconsistent { .. })));
        let raw = FamilyData::from_raw(
            2,
            0,
            p2_hilb(),
            Rational::from(-1),
            Rational::from(3),
            Some(push),
            "raw",
        );
        assert!(raw.is_ok());
    }

    #[test]
    fn fibre_numbers_of_plane() {
        let f = FamilyData::new(2, 0, p2_hilb(), Rational::zero(), Rational::zero(), None, "p2").unwrap();
        assert_eq!(f.fibre_volume(), Rational::one());
        // K_{P²}·H = −3
        assert_eq!(f.fibre_canonical_degree(), Rational::from(-3));
    }
}
