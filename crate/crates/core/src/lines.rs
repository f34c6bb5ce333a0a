//! Degrees of the determinant line bundles attached to a family: the
//! Knudsen–Mumford `λ_i`, `λ(k)`, the CM line and its normalisation, the
//! Chow (Cornalba–Harris) and Hilbert lines, the blowup perturbation `σ`
//! and the Futaki invariant.
//!
//! Every quantity is a rational number or an exact polynomial. Quantities
//! built from `λ(k)` need the closed-form pushforward and return a
//! capability error without it.

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, Rational, RationalFunctionEps, UniPoly};
use crate::family::{EpsBlowup, FamilyData, MultisectionSpec};

/// Degrees of `λ_0 … λ_{n+1}`. Without a closed-form pushforward only the
/// top two entries are known; the rest are `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaVector {
    entries: Vec<Option<Rational>>,
}

impl LambdaVector {
    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.entries.get(i).and_then(Option::as_ref)
    }

    pub fn entries(&self) -> &[Option<Rational>] {
        &self.entries
    }

    /// `deg λ_{n+1}`.
    pub fn top(&self) -> &Rational {
        self.entries
            .last()
            .and_then(Option::as_ref)
            .expect("top entry always known")
    }

    /// `deg λ_n`.
    pub fn sub_top(&self) -> &Rational {
        self.entries[self.entries.len() - 2].as_ref().expect("λ_n always known")
    }

    /// The full vector, when known.
    pub fn full(&self) -> Option<Vec<Rational>> {
        self.entries.iter().cloned().collect()
    }
}

/// Top coefficients of the weight polynomial `w(k) = b0·k^{n+1} + b1·k^n + …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub b0: Rational,
    pub b1: Rational,
}

fn require_pushforward(f: &FamilyData) -> Result<&UniPoly> {
    f.pushforward()
        .ok_or_else(|| Error::Capability(format!("{} has no closed-form pushforward deg λ(k)", f.label())))
}

/// `µ = 2a1/a0`.
pub fn mu(f: &FamilyData) -> Rational {
    Rational::from(2) * f.a1() / f.a0()
}

/// `µ·π_*L^{n+1} + (n+1)·π_*(K·L^n)`.
pub fn cm_degree_intersection(f: &FamilyData) -> Rational {
    mu(f) * f.deg_l_top() + Rational::from(f.n() + 1) * f.deg_kl()
}

/// `(µ + n(n+1))·λ_{n+1} − 2(n+1)·λ_n` on the extracted `λ` vector.
pub fn cm_degree_lambda(f: &FamilyData) -> Result<Rational> {
    require_pushforward(f)?;
    let lambda = lambda_vector(f)?;
    let n = Rational::from(f.n());
    let n1 = Rational::from(f.n() + 1);
    Ok((mu(f) + &n * &n1) * lambda.top() - Rational::from(2) * n1 * lambda.sub_top())
}

/// Degree of `λ_CM`. With a pushforward present it is computed both from
/// intersection numbers and from the `λ_i` and the two must agree.
pub fn cm_degree(f: &FamilyData) -> Result<Rational> {
    let by_intersection = cm_degree_intersection(f);
    if f.pushforward().is_some() {
        let by_lambda = cm_degree_lambda(f)?;
        if by_lambda != by_intersection {
            return Err(Error::Inconsistent {
                quantity: format!("cm_degree of {}", f.label()),
                left_route: "µ·L^{n+1} + (n+1)·K·L^n".into(),
                left: by_intersection,
                right_route: "(µ+n(n+1))·λ_{n+1} − 2(n+1)·λ_n".into(),
                right: by_lambda,
            });
        }
    }
    Ok(by_intersection)
}

/// `2·a0·(n+1)!`, the exponent normalising `λ_CM` to `λ_CM′`.
fn cm_prime_normaliser(f: &FamilyData) -> Rational {
    Rational::from(2) * f.a0() * Rational::factorial(f.n() as u32 + 1)
}

/// Degree of `λ_CM′ = λ_CM^{1/(2a0(n+1)!)}`.
pub fn cm_prime_degree(f: &FamilyData) -> Result<Rational> {
    Ok(cm_degree(f)? / cm_prime_normaliser(f))
}

pub fn lambda_vector(f: &FamilyData) -> Result<LambdaVector> {
    let n = f.n();
    match f.pushforward_lambdas() {
        Some(lambdas) => {
            let lambdas = lambdas?;
            if lambdas.len() > n + 2 {
                return Err(Error::Precondition(format!(
                    "pushforward of {} has degree {} above n + 1",
                    f.label(),
                    lambdas.len() - 1
                )));
            }
            Ok(LambdaVector {
                entries: lambdas.into_iter().map(Some).collect(),
            })
        }
        None => {
            let top = f.deg_l_top().clone();
            let sub = (Rational::from(n) * &top - f.deg_kl()) / Rational::from(2);
            let mut entries = vec![None; n];
            entries.push(Some(sub));
            entries.push(Some(top));
            Ok(LambdaVector { entries })
        }
    }
}

/// `deg λ(k) = deg det π_!(L^k)`.
pub fn lambda_of_k(f: &FamilyData, k: i64) -> Result<Rational> {
    Ok(require_pushforward(f)?.eval_int(k))
}

/// `deg λ_Hilb(X, L^r, k) = p(r)·deg λ(kr) − k·p(kr)·deg λ(r)`.
pub fn hilb_degree_bipoly(f: &FamilyData) -> Result<BiPoly> {
    let push = require_pushforward(f)?;
    let p = f.hilb();
    let first = &BiPoly::from_r(p) * &BiPoly::compose_scale(push);
    let second = (&BiPoly::compose_scale(p) * &BiPoly::from_r(push)).shift(1, 0);
    Ok(&first - &second)
}

/// `deg λ_CH(X, L^r) = p(r)·r^{n+1}·λ_{n+1} − a0·(n+1)!·r^n·deg λ(r)`.
pub fn ch_degree(f: &FamilyData) -> Result<UniPoly> {
    let push = require_pushforward(f)?;
    let n = f.n();
    let lambda = lambda_vector(f)?;
    let first = f.hilb().shift(n + 1).scale(lambda.top());
    let second = push.shift(n).scale(&(f.a0() * Rational::factorial(n as u32 + 1)));
    Ok(&first - &second)
}

/// `σ = −(d/a0)·π_*L³ + 6·deg(L|_C)`.
pub fn sigma_blowup(ambient: &FamilyData, ms: &MultisectionSpec) -> Result<Rational> {
    Ok(EpsBlowup::new(ambient, ms)?.sigma())
}

/// Exact CM degree of the blowup as a function of ε.
pub fn cm_eps_function(ambient: &FamilyData, ms: &MultisectionSpec) -> Result<RationalFunctionEps> {
    Ok(EpsBlowup::new(ambient, ms)?.cm_degree())
}

/// `F1 = (2(n+1)!/a0)·(b1·a0 − b0·a1)`.
pub fn futaki(f: &FamilyData, w: &WeightData) -> Rational {
    let bracket = &w.b1 * f.a0() - &w.b0 * f.a1();
    Rational::from(2) * Rational::factorial(f.n() as u32 + 1) / f.a0() * bracket
}
