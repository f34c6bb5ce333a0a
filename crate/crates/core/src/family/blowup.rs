//! Blowing up a threefold family along a multisection, polarised by
//! `L_ε = q*L − ε·E`.
//!
//! With `ℓ = deg L|_C`, `κ = deg K_{X/B}|_C` and `E³ = −deg N_{C/X}`, the
//! intersection numbers on the blowup follow from `K̃ = q*K + E` and
//! `q*L²·E = 0`, `q*L·E² = −ℓ`, `q*K·E² = −κ`:
//!
//! ```text
//! L_ε³     = L³ − 3ℓε² − E³ε³
//! K̃·L_ε²   = K·L² + 2ℓε + (E³ − κ)ε²
//! p_ε(k)   = p(k) − d(ε²k² + εk)/2
//! ```

use super::FamilyData;
use crate::error::{Error, Result};
use crate::exactalg::{Rational, RationalFunctionEps, UniPoly};

/// Numerical data of a (possibly disconnected) curve `C ⊂ X` finite of
/// degree `d` over the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisectionSpec {
    d: u32,
    canonical_degree: i64,
    deg_l: Rational,
    deg_k_rel: Rational,
}

impl MultisectionSpec {
    pub fn new(d: u32, canonical_degree: i64, deg_l: Rational, deg_k_rel: Rational) -> Result<Self> {
        if d < 1 {
            return Err(Error::Precondition("multisection degree d must be at least 1".into()));
        }
        if canonical_degree < -2 * d as i64 {
            return Err(Error::Precondition(format!(
                "canonical degree {canonical_degree} is below −2d = {} for a smooth curve of degree {d}",
                -2 * d as i64
            )));
        }
        Ok(MultisectionSpec {
            d,
            canonical_degree,
            deg_l,
            deg_k_rel,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Degree of `K_C`, additive over components.
    pub fn canonical_degree(&self) -> i64 {
        self.canonical_degree
    }

    /// `deg(L|_C)`.
    pub fn deg_l(&self) -> &Rational {
        &self.deg_l
    }

    /// `deg(K_{X/B}|_C)`.
    pub fn deg_k_rel(&self) -> &Rational {
        &self.deg_k_rel
    }

    /// Disjoint union; all four numbers add.
    pub fn union(&self, other: &MultisectionSpec) -> Result<MultisectionSpec> {
        MultisectionSpec::new(
            self.d + other.d,
            self.canonical_degree + other.canonical_degree,
            &self.deg_l + &other.deg_l,
            &self.deg_k_rel + &other.deg_k_rel,
        )
    }

    fn describe(&self) -> String {
        format!(
            "C(d={}, K_C={}, L.C={}, K.C={})",
            self.d, self.canonical_degree, self.deg_l, self.deg_k_rel
        )
    }
}

/// `E³ = −deg N_{C/X}` with the normal degree from adjunction:
/// `deg N = deg K_C − K_X·C` and `K_X·C = κ + d·(2g_B − 2)`.
pub fn exceptional_cube(genus_base: u32, ms: &MultisectionSpec) -> Rational {
    let base_canonical = Rational::from(ms.d as i64 * (2 * genus_base as i64 - 2));
    let normal = Rational::from(ms.canonical_degree) - &ms.deg_k_rel - base_canonical;
    -normal
}

/// The blowup with `ε` left as an indeterminate.
#[derive(Clone, Debug)]
pub struct EpsBlowup {
    ambient: FamilyData,
    ms: MultisectionSpec,
}

impl EpsBlowup {
    pub fn new(ambient: &FamilyData, ms: &MultisectionSpec) -> Result<Self> {
        if ambient.n() != 2 {
            return Err(Error::Dimension {
                expected: 2,
                actual: ambient.n(),
            });
        }
        Ok(EpsBlowup {
            ambient: ambient.clone(),
            ms: ms.clone(),
        })
    }

    pub fn ambient(&self) -> &FamilyData {
        &self.ambient
    }

    pub fn multisection(&self) -> &MultisectionSpec {
        &self.ms
    }

    pub fn exceptional_cube(&self) -> Rational {
        exceptional_cube(self.ambient.genus_base(), &self.ms)
    }

    fn d(&self) -> Rational {
        Rational::from(self.ms.d)
    }

    /// `L_ε³` as a polynomial in ε.
    pub fn deg_l_top(&self) -> UniPoly {
        UniPoly::new(vec![
            self.ambient.deg_l_top().clone(),
            Rational::zero(),
            Rational::from(-3) * &self.ms.deg_l,
            -self.exceptional_cube(),
        ])
    }

    /// `K̃·L_ε²` as a polynomial in ε.
    pub fn deg_kl(&self) -> UniPoly {
        UniPoly::new(vec![
            self.ambient.deg_kl().clone(),
            Rational::from(2) * &self.ms.deg_l,
            self.exceptional_cube() - &self.ms.deg_k_rel,
        ])
    }

    /// `a0(ε) = a0 − dε²/2`.
    pub fn a0(&self) -> UniPoly {
        UniPoly::new(vec![self.ambient.a0(), Rational::zero(), -self.d() / Rational::from(2)])
    }

    /// `a1(ε) = a1 − dε/2`.
    pub fn a1(&self) -> UniPoly {
        UniPoly::new(vec![self.ambient.a1(), -self.d() / Rational::from(2)])
    }

    /// `µ(ε) = 2a1(ε)/a0(ε)`.
    pub fn mu(&self) -> RationalFunctionEps {
        RationalFunctionEps::new(self.a1().scale(&Rational::from(2)), self.a0())
            .expect("a0(ε) has nonzero constant term")
    }

    /// The CM degree `µ(ε)·L_ε³ + 3·K̃·L_ε²` as an exact function of ε.
    pub fn cm_degree(&self) -> RationalFunctionEps {
        let top = RationalFunctionEps::from_poly(self.deg_l_top());
        let kl = RationalFunctionEps::from_poly(self.deg_kl().scale(&Rational::from(3)));
        &(&self.mu() * &top) + &kl
    }

    /// `σ = −(d/a0)·L³ + 6·deg(L|_C)`.
    pub fn sigma(&self) -> Rational {
        -(self.d() / self.ambient.a0()) * self.ambient.deg_l_top() + Rational::from(6) * &self.ms.deg_l
    }

    /// Specialises to a numeric ε. Requires `ε ≥ 0` and `a0(ε) > 0`; the
    /// closed-form pushforward is not carried over.
    pub fn at(&self, eps: &Rational) -> Result<FamilyData> {
        if eps.is_negative() {
            return Err(Error::Precondition(format!(
                "blowup parameter ε = {eps} must be non-negative"
            )));
        }
        let a0 = self.a0().eval(eps);
        if !a0.is_positive() {
            return Err(Error::Precondition(format!(
                "leading Hilbert coefficient a0(ε) = {a0} at ε = {eps} is not positive"
            )));
        }
        let correction =
            UniPoly::new(vec![Rational::zero(), eps.clone(), eps * eps]).scale(&(-self.d() / Rational::from(2)));
        FamilyData::new(
            2,
            self.ambient.genus_base(),
            self.ambient.hilb() + &correction,
            self.deg_l_top().eval(eps),
            self.deg_kl().eval(eps),
            None,
            format!("blowup({}, {}, eps={eps})", self.ambient.label(), self.ms.describe()),
        )
    }
}

/// Numeric blowup; see [`EpsBlowup::at`].
pub fn blowup(ambient: &FamilyData, ms: &MultisectionSpec, eps: &Rational) -> Result<FamilyData> {
    EpsBlowup::new(ambient, ms)?.at(eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::family::{proj_bundle, section_of_summand};

    fn o2_blowup() -> EpsBlowup {
        let base = proj_bundle(0, &[2, -1, -1]).unwrap();
        let ms = section_of_summand(0, &[2, -1, -1], 0).unwrap();
        EpsBlowup::new(&base, &ms).unwrap()
    }

    #[test]
    fn exceptional_cube_of_sections() {
        assert_eq!(o2_blowup().exceptional_cube(), Rational::from(6));
        let ms = section_of_summand(0, &[2, -1, -1], 1).unwrap();
        assert_eq!(exceptional_cube(0, &ms), Rational::from(-3));
    }

    #[test]
    fn symbolic_hilbert_coefficients() {
        let b = o2_blowup();
        assert_eq!(b.a1(), UniPoly::new(vec![q(3, 2), q(-1, 2)]));
        assert_eq!(b.a0(), UniPoly::new(vec![q(1, 2), Rational::zero(), q(-1, 2)]));
    }

    #[test]
    fn numeric_blowup_at_one_tenth() {
        let f = o2_blowup().at(&q(1, 10)).unwrap();
        assert_eq!(f.deg_l_top(), &q(27, 500));
        assert_eq!(f.deg_kl(), &q(-2, 5));
        assert_eq!(f.a0(), q(99, 200));
        assert!(f.pushforward().is_none());
    }

    #[test]
    fn blowdown_limit() {
        let b = o2_blowup();
        let f = b.at(&Rational::zero()).unwrap();
        let a = b.ambient();
        assert_eq!(f.hilb(), a.hilb());
        assert_eq!(f.deg_l_top(), a.deg_l_top());
        assert_eq!(f.deg_kl(), a.deg_kl());
        assert!(f.pushforward().is_none());
    }

    #[test]
    fn guards() {
        let b = o2_blowup();
        assert!(matches!(b.at(&q(-1, 10)), Err(Error::Precondition(_))));
        // a0(1) = 1/2 − 1/2 = 0
        assert!(matches!(b.at(&Rational::one()), Err(Error::Precondition(_))));
        let p1 = proj_bundle(0, &[0, 0]).unwrap();
        let ms = MultisectionSpec::new(1, -2, Rational::zero(), Rational::zero()).unwrap();
        assert!(matches!(
            EpsBlowup::new(&p1, &ms),
            Err(Error::Dimension { expected: 2, actual: 1 })
        ));
        assert!(MultisectionSpec::new(0, 0, Rational::zero(), Rational::zero()).is_err());
        assert!(MultisectionSpec::new(1, -3, Rational::zero(), Rational::zero()).is_err());
    }
}
