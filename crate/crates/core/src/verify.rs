//! Executable checks of the identities satisfied by the line degrees.
//!
//! Each check compares two independently computed sides and records every
//! intermediate exact value in its witness. A failure carries both unequal
//! values together with the construction path of the family involved.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactalg::{derivative_at_zero, eval_binomial, to_binomial_basis, Rational, UniPoly};
use crate::family::{fibred_product, scale, twist, Bindings, Construction, EpsBlowup, FamilyData};
use crate::lines::{ch_degree, cm_degree, cm_degree_intersection, cm_prime_degree, hilb_degree_bipoly, lambda_vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One disagreement found by a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub clause: String,
    pub left_route: String,
    pub left: String,
    pub right_route: String,
    pub right: String,
    pub path: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub status: Status,
    pub family_label: String,
    pub witness: Map<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates witness values and failures for one check.
struct Recorder {
    check: &'static str,
    label: String,
    witness: Map<String, Value>,
    failures: Vec<Failure>,
}

impl Recorder {
    fn new(check: &'static str, label: &str) -> Self {
        Recorder {
            check,
            label: label.to_string(),
            witness: Map::new(),
            failures: Vec::new(),
        }
    }

    fn record(&mut self, key: impl Into<String>, value: impl Serialize) {
        self.witness
            .insert(key.into(), serde_json::to_value(value).expect("witness value"));
    }

    fn fail(
        &mut self,
        clause: impl Into<String>,
        left_route: &str,
        left: String,
        right_route: &str,
        right: String,
        path: &str,
    ) {
        self.failures.push(Failure {
            clause: clause.into(),
            left_route: left_route.into(),
            left,
            right_route: right_route.into(),
            right,
            path: path.into(),
        });
    }

    /// Compares two sides; records both and a failure if they differ.
    fn compare(
        &mut self,
        clause: impl Into<String>,
        left_route: &str,
        left: &Rational,
        right_route: &str,
        right: &Rational,
        path: &str,
    ) -> bool {
        let clause = clause.into();
        self.record(
            clause.clone(),
            serde_json::json!({ left_route: left.to_string(), right_route: right.to_string() }),
        );
        if left != right {
            self.fail(
                clause,
                left_route,
                left.to_string(),
                right_route,
                right.to_string(),
                path,
            );
            false
        } else {
            true
        }
    }

    /// Records an evaluation error as a failure, keeping both values when the
    /// error is itself a disagreement between two routes.
    fn error(&mut self, clause: impl Into<String>, err: &Error, path: &str) {
        let clause = clause.into();
        self.record(format!("{clause}: error"), err.to_string());
        match err {
            Error::Inconsistent {
                left_route,
                left,
                right_route,
                right,
                ..
            } => self.fail(
                clause,
                left_route,
                left.to_string(),
                right_route,
                right.to_string(),
                path,
            ),
            other => self.fail(
                clause,
                "evaluation",
                other.to_string(),
                "expected",
                "a value".into(),
                path,
            ),
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            check_name: self.check.to_string(),
            status: if self.failures.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            family_label: self.label,
            witness: self.witness,
            failures: self.failures,
        }
    }
}

/// Parameter ranges for the checks.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub r_max: i64,
    pub t_values: Vec<Rational>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            r_max: 5,
            t_values: (-3..=3).map(Rational::from).collect(),
        }
    }
}

/// `cm_degree(scale(F, r)) = r^n·cm_degree(F)` for `r = 1..=r_max`.
///
/// The left side goes through the full (dual-route) CM degree of the scaled
/// family, the right side through the intersection formula on `F`.
pub fn check_homogeneity(f: &FamilyData, r_max: i64) -> VerificationReport {
    let mut rec = Recorder::new("homogeneity", f.label());
    let base = cm_degree_intersection(f);
    rec.record("cm_degree(F)", base.to_string());
    for r in 1..=r_max.max(1) {
        let clause = format!("r={r}");
        let scaled = match scale(f, r) {
            Ok(g) => g,
            Err(e) => {
                rec.error(clause, &e, f.label());
                continue;
            }
        };
        let rhs = Rational::from(r).pow(f.n() as u32) * &base;
        match cm_degree(&scaled) {
            Ok(lhs) => {
                rec.compare(
                    clause,
                    "cm_degree(scale(F,r))",
                    &lhs,
                    "r^n·cm_degree(F)",
                    &rhs,
                    scaled.label(),
                );
            }
            Err(e) => rec.error(clause, &e, scaled.label()),
        }
    }
    rec.finish()
}

/// `cm_degree(twist(F, t)) = cm_degree(F)` and, with a pushforward, the
/// Hilbert-line polynomial is unchanged too.
pub fn check_rigidity(f: &FamilyData, t_values: &[Rational]) -> VerificationReport {
    let mut rec = Recorder::new("rigidity", f.label());
    let base = cm_degree_intersection(f);
    rec.record("cm_degree(F)", base.to_string());
    let base_hilb = match f.pushforward() {
        Some(_) => match hilb_degree_bipoly(f) {
            Ok(h) => Some(h),
            Err(e) => {
                rec.error("hilb_degree(F)", &e, f.label());
                None
            }
        },
        None => None,
    };
    for t in t_values {
        let clause = format!("t={t}");
        let twisted = match twist(f, t) {
            Ok(g) => g,
            Err(e) => {
                rec.error(clause, &e, f.label());
                continue;
            }
        };
        match cm_degree(&twisted) {
            Ok(lhs) => {
                rec.compare(
                    clause.clone(),
                    "cm_degree(twist(F,t))",
                    &lhs,
                    "cm_degree(F)",
                    &base,
                    twisted.label(),
                );
            }
            Err(e) => rec.error(clause.clone(), &e, twisted.label()),
        }
        if let Some(h0) = &base_hilb {
            let hilb_clause = format!("{clause}: hilb_degree");
            match hilb_degree_bipoly(&twisted) {
                Ok(h1) => {
                    let diff = &h1 - h0;
                    rec.record(hilb_clause.clone(), diff.is_empty());
                    let first = diff.terms().next().map(|((i, j), _)| (*i as i64, *j as i64));
                    if let Some((i, j)) = first {
                        rec.fail(
                            format!("{hilb_clause} coefficient k^{i} r^{j}"),
                            "hilb_degree(twist(F,t))",
                            h1.coefficient(i, j).to_string(),
                            "hilb_degree(F)",
                            h0.coefficient(i, j).to_string(),
                            twisted.label(),
                        );
                    }
                }
                Err(e) => rec.error(hilb_clause, &e, twisted.label()),
            }
        }
    }
    rec.finish()
}

/// `cm′(F1 ×_B F2) = cm′(F1) + cm′(F2)`: the left side from the product's
/// own intersection profile, the right side from the factors.
pub fn check_product_additivity(f1: &FamilyData, f2: &FamilyData) -> VerificationReport {
    let label = format!("{} × {}", f1.label(), f2.label());
    let mut rec = Recorder::new("product_additivity", &label);
    let product = match fibred_product(f1, f2) {
        Ok(p) => p,
        Err(e) => {
            rec.error("product", &e, &label);
            return rec.finish();
        }
    };
    rec.record("product n", product.n());
    rec.record("product deg_L_top", product.deg_l_top().to_string());
    rec.record("product deg_KL", product.deg_kl().to_string());
    let lhs = cm_prime_degree(&product);
    let parts = (cm_prime_degree(f1), cm_prime_degree(f2));
    match (lhs, parts) {
        (Ok(lhs), (Ok(a), Ok(b))) => {
            rec.record("cm_prime(F1)", a.to_string());
            rec.record("cm_prime(F2)", b.to_string());
            rec.compare(
                "additivity",
                "cm_prime(F1×F2)",
                &lhs,
                "cm_prime(F1)+cm_prime(F2)",
                &(a + b),
                product.label(),
            );
        }
        (Err(e), _) => rec.error("cm_prime(F1×F2)", &e, product.label()),
        (_, (Err(e), _)) => rec.error("cm_prime(F1)", &e, f1.label()),
        (_, (_, Err(e))) => rec.error("cm_prime(F2)", &e, f2.label()),
    }
    rec.finish()
}

/// Leading-order structure of the Hilbert line:
/// (a) the `k^{n+1} r^{2n}` coefficient is `a0/(2(n+1)!)·cm_degree`;
/// (b) the remainder has `i ≤ n+1`, `j ≤ 2n+1`, and `j ≤ 2n` when `i = n+1`;
/// (c) the `r^{2n}` coefficient of the Chow line is `(a0/2)·cm_degree`;
/// (d) `(n+1)!` times the `k^{n+1}` slice equals the Chow line in `r`.
///
/// `cm_degree` here is the intersection formula, independent of `λ(k)`.
/// Registered under the check name `prop31`.
pub fn check_hilbert_leading_order(f: &FamilyData) -> Result<VerificationReport> {
    let hilb = hilb_degree_bipoly(f)?;
    let mut rec = Recorder::new("prop31", f.label());
    let n = f.n();
    let cm = cm_degree_intersection(f);
    let fact = Rational::factorial(n as u32 + 1);
    rec.record("cm_degree", cm.to_string());

    let lead = hilb.coefficient(n as i64 + 1, 2 * n as i64);
    let expected = f.a0() / (Rational::from(2) * &fact) * &cm;
    rec.compare(
        "(a) leading coefficient",
        "hilb_degree[k^{n+1} r^{2n}]",
        &lead,
        "a0/(2(n+1)!)·cm",
        &expected,
        f.label(),
    );

    let mut shape_ok = true;
    for ((i, j), c) in hilb.terms() {
        let (i, j) = (*i, *j);
        let allowed = i <= n + 1 && j <= 2 * n + 1 && !(i == n + 1 && j > 2 * n);
        if !allowed {
            shape_ok = false;
            rec.fail(
                format!("(b) support: term k^{i} r^{j}"),
                "hilb_degree coefficient",
                c.to_string(),
                "allowed",
                "0".into(),
                f.label(),
            );
        }
    }
    rec.record("(b) support shape", shape_ok);

    match (ch_degree(f), lambda_vector(f)) {
        (Ok(ch), Ok(_)) => {
            let ch_lead = ch.coeff(2 * n);
            let expected = f.a0() / Rational::from(2) * &cm;
            rec.compare(
                "(c) chow leading",
                "ch_degree[r^{2n}]",
                &ch_lead,
                "(a0/2)·cm",
                &expected,
                f.label(),
            );
            let slice = hilb.k_slice(n + 1).scale(&fact);
            let same = slice == ch;
            rec.record("(d) chow/hilbert link", same);
            if !same {
                let diff = &slice - &ch;
                let j = diff.degree().unwrap_or(0);
                rec.fail(
                    format!("(d) chow/hilbert link at r^{j}"),
                    "(n+1)!·hilb_degree[k^{n+1}]",
                    slice.coeff(j).to_string(),
                    "ch_degree",
                    ch.coeff(j).to_string(),
                    f.label(),
                );
            }
        }
        (Err(e), _) | (_, Err(e)) => rec.error("(c) chow line", &e, f.label()),
    }
    Ok(rec.finish())
}

/// Knudsen–Mumford expansion of the pushforward: degree at most `n+1`,
/// exact binomial reconstruction at `k = 0..=2n+4`, and both Riemann–Roch
/// identities on the extracted `λ_i`.
pub fn check_mk_consistency(f: &FamilyData) -> Result<VerificationReport> {
    let push = f
        .pushforward()
        .ok_or_else(|| Error::Capability(format!("{} has no closed-form pushforward deg λ(k)", f.label())))?;
    let mut rec = Recorder::new("mk_consistency", f.label());
    let n = f.n();
    rec.record("pushforward", push.display_in("k"));
    let degree = push.degree();
    if degree.is_some_and(|d| d > n + 1) {
        rec.fail(
            "degree",
            "deg pushforward",
            degree.unwrap_or(0).to_string(),
            "at most n+1",
            (n + 1).to_string(),
            f.label(),
        );
    }
    let mut lambda = to_binomial_basis(push)?;
    lambda.resize(n + 2, Rational::zero());
    rec.record("lambda", lambda.iter().map(Rational::to_string).collect::<Vec<_>>());

    for k in 0..=(2 * n as i64 + 4) {
        let direct = push.eval_int(k);
        let rebuilt = eval_binomial(&lambda, &Rational::from(k));
        if direct != rebuilt {
            rec.fail(
                format!("reconstruction at k={k}"),
                "pushforward(k)",
                direct.to_string(),
                "Σ λ_i·C(k,i)",
                rebuilt.to_string(),
                f.label(),
            );
        }
    }
    rec.compare(
        "λ_{n+1} = L^{n+1}",
        "λ_{n+1}",
        &lambda[n + 1],
        "π_*L^{n+1}",
        f.deg_l_top(),
        f.label(),
    );
    let kl = Rational::from(n) * &lambda[n + 1] - Rational::from(2) * &lambda[n];
    rec.compare(
        "nλ_{n+1} − 2λ_n = K·L^n",
        "nλ_{n+1} − 2λ_n",
        &kl,
        "π_*(K·L^n)",
        f.deg_kl(),
        f.label(),
    );
    Ok(rec.finish())
}

/// The exact ε-function of the blowup has value `cm_degree(ambient)` and
/// slope `σ` at ε = 0.
pub fn check_sigma_first_order(blowup: &EpsBlowup) -> VerificationReport {
    let ambient = blowup.ambient();
    let mut rec = Recorder::new("sigma_first_order", ambient.label());
    let f = blowup.cm_degree();
    rec.record("cm_eps", f.display_in("eps"));
    let sigma = blowup.sigma();
    rec.record("sigma", sigma.to_string());
    match derivative_at_zero(&f) {
        Ok(slope) => {
            rec.compare("slope at 0", "d/dε cm_eps(0)", &slope, "σ", &sigma, ambient.label());
        }
        Err(e) => rec.error("slope at 0", &e, ambient.label()),
    }
    match (f.eval(&Rational::zero()), cm_degree(ambient)) {
        (Ok(v0), Ok(cm)) => {
            rec.compare(
                "value at 0",
                "cm_eps(0)",
                &v0,
                "cm_degree(ambient)",
                &cm,
                ambient.label(),
            );
        }
        (Err(e), _) | (_, Err(e)) => rec.error("value at 0", &e, ambient.label()),
    }
    rec.finish()
}

/// What [`run_all`] checks: a family and, when it was built as a blowup,
/// the symbolic blowup it came from.
#[derive(Clone, Debug)]
pub struct Subject {
    pub family: FamilyData,
    pub blowup: Option<EpsBlowup>,
}

impl Subject {
    pub fn new(family: FamilyData) -> Self {
        Subject { family, blowup: None }
    }

    pub fn from_construction(c: &Construction, bindings: &Bindings) -> Result<Self> {
        let family = c.evaluate(bindings)?;
        let blowup = c.resolve_blowup(bindings)?.map(|r| r.blowup);
        Ok(Subject { family, blowup })
    }
}

pub const CHECK_NAMES: [&str; 6] = [
    "homogeneity",
    "mk_consistency",
    "product_additivity",
    "prop31",
    "rigidity",
    "sigma_first_order",
];

/// Runs one named check, or returns `None` when it does not apply to the
/// subject (no pushforward, not a blowup).
pub fn run_check(name: &str, subject: &Subject, config: &CheckConfig) -> Result<Option<VerificationReport>> {
    let f = &subject.family;
    let report = match name {
        "homogeneity" => Some(check_homogeneity(f, config.r_max)),
        "rigidity" => Some(check_rigidity(f, &config.t_values)),
        "product_additivity" => Some(check_product_additivity(f, f)),
        "prop31" => match f.pushforward() {
            Some(_) => Some(check_hilbert_leading_order(f)?),
            None => None,
        },
        "mk_consistency" => match f.pushforward() {
            Some(_) => Some(check_mk_consistency(f)?),
            None => None,
        },
        "sigma_first_order" => subject.blowup.as_ref().map(check_sigma_first_order),
        other => {
            return Err(Error::Parse(format!(
                "unknown check {other:?}; expected one of {}",
                CHECK_NAMES.join(", ")
            )))
        }
    };
    Ok(report)
}

/// Every applicable check, in the order of [`CHECK_NAMES`].
pub fn run_all(subject: &Subject, config: &CheckConfig) -> Vec<VerificationReport> {
    CHECK_NAMES
        .iter()
        .filter_map(|name| run_check(name, subject, config).expect("known check name"))
        .collect()
}

/// Shorthand used by the pushforward-corruption fixtures.
pub fn with_pushforward(f: &FamilyData, push: UniPoly) -> Result<FamilyData> {
    FamilyData::from_raw(
        f.n(),
        f.genus_base(),
        f.hilb().clone(),
        f.deg_l_top().clone(),
        f.deg_kl().clone(),
        Some(push),
        format!("{} [pushforward replaced]", f.label()),
    )
}
