//! Construction trees: the JSON documents from which families are built.
//!
//! ```json
//! {"type": "blowup",
//!  "ambient": {"type": "proj_bundle", "base_genus": 0, "degrees": [2, -1, -1]},
//!  "multisection": {"d": 1, "canonical_degree": -2, "deg_L": "-2", "deg_K_rel": "6"},
//!  "epsilon": "1/10"}
//! ```
//!
//! `epsilon` is either a rational or the name of a free parameter (default
//! `eps`), bound at evaluation time.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{fibred_product, proj_bundle, scale, section_of_summand, twist, EpsBlowup, FamilyData, MultisectionSpec};
use crate::error::{Error, Result};
use crate::exactalg::{Rational, UniPoly};

/// Values for the free parameters of a construction tree.
pub type Bindings = BTreeMap<String, Rational>;

pub const DEFAULT_PARAM: &str = "eps";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Value(Rational),
    Symbol(String),
}

impl Param {
    pub fn resolve(&self, bindings: &Bindings) -> Result<Rational> {
        match self {
            Param::Value(v) => Ok(v.clone()),
            Param::Symbol(name) => bindings
                .get(name)
                .cloned()
                .ok_or_else(|| Error::Precondition(format!("parameter {name:?} is symbolic; supply a value for it"))),
        }
    }
}

impl Default for Param {
    fn default() -> Self {
        Param::Symbol(DEFAULT_PARAM.to_string())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Value(v) => write!(f, "{v}"),
            Param::Symbol(s) => f.write_str(s),
        }
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Param {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if let Ok(v) = s.parse::<Rational>() {
            return Ok(Param::Value(v));
        }
        let ident = s.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if ident {
            Ok(Param::Symbol(s))
        } else {
            Err(serde::de::Error::custom(format!(
                "epsilon {s:?} is neither a rational \"p/q\" nor a parameter name"
            )))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultisectionNode {
    /// A section `P(O(d_i))` of a split projective bundle ambient.
    SectionOf { section_of_summand: usize },
    Explicit {
        d: u32,
        canonical_degree: i64,
        #[serde(rename = "deg_L")]
        deg_l: Rational,
        #[serde(rename = "deg_K_rel")]
        deg_k_rel: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Construction {
    ProjBundle {
        base_genus: u32,
        degrees: Vec<i64>,
    },
    Blowup {
        ambient: Box<Construction>,
        multisection: MultisectionNode,
        #[serde(default)]
        epsilon: Param,
    },
    Product {
        left: Box<Construction>,
        right: Box<Construction>,
    },
    Twist {
        family: Box<Construction>,
        t: Rational,
    },
    Scale {
        family: Box<Construction>,
        r: i64,
    },
    /// A raw intersection profile. Only the Hilbert polynomial invariants are
    /// enforced, so inconsistent data can be fed to the verification checks.
    Profile {
        n: usize,
        base_genus: u32,
        /// Coefficients of `p(k)`, constant term first.
        hilb: Vec<Rational>,
        #[serde(rename = "deg_L_top")]
        deg_l_top: Rational,
        #[serde(rename = "deg_KL")]
        deg_kl: Rational,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pushforward: Option<Vec<Rational>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
}

/// A blowup root resolved to its ambient family and multisection.
#[derive(Clone, Debug)]
pub struct ResolvedBlowup {
    pub blowup: EpsBlowup,
    pub epsilon: Param,
}

impl Construction {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("construction document: {e}")))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("construction trees serialise")
    }

    pub fn evaluate(&self, bindings: &Bindings) -> Result<FamilyData> {
        match self {
            Construction::ProjBundle { base_genus, degrees } => proj_bundle(*base_genus, degrees),
            Construction::Blowup { .. } => {
                let resolved = self.resolve_blowup(bindings)?.expect("blowup node");
                let eps = resolved.epsilon.resolve(bindings)?;
                resolved.blowup.at(&eps)
            }
            Construction::Product { left, right } => {
                fibred_product(&left.evaluate(bindings)?, &right.evaluate(bindings)?)
            }
            Construction::Twist { family, t } => twist(&family.evaluate(bindings)?, t),
            Construction::Scale { family, r } => scale(&family.evaluate(bindings)?, *r),
            Construction::Profile {
                n,
                base_genus,
                hilb,
                deg_l_top,
                deg_kl,
                pushforward,
                label,
            } => FamilyData::from_raw(
                *n,
                *base_genus,
                UniPoly::new(hilb.clone()),
                deg_l_top.clone(),
                deg_kl.clone(),
                pushforward.clone().map(UniPoly::new),
                label.clone().unwrap_or_else(|| "profile".to_string()),
            ),
        }
    }

    /// For a blowup root, the symbolic blowup of its evaluated ambient;
    /// `None` for any other root.
    pub fn resolve_blowup(&self, bindings: &Bindings) -> Result<Option<ResolvedBlowup>> {
        let Construction::Blowup {
            ambient,
            multisection,
            epsilon,
        } = self
        else {
            return Ok(None);
        };
        let amb = ambient.evaluate(bindings)?;
        let ms = match multisection {
            MultisectionNode::Explicit {
                d,
                canonical_degree,
                deg_l,
                deg_k_rel,
            } => MultisectionSpec::new(*d, *canonical_degree, deg_l.clone(), deg_k_rel.clone())?,
            MultisectionNode::SectionOf {
                section_of_summand: index,
            } => match ambient.as_ref() {
                Construction::ProjBundle { base_genus, degrees } => section_of_summand(*base_genus, degrees, *index)?,
                _ => {
                    return Err(Error::Precondition(
                        "section_of_summand needs a proj_bundle ambient".into(),
                    ))
                }
            },
        };
        Ok(Some(ResolvedBlowup {
            blowup: EpsBlowup::new(&amb, &ms)?,
            epsilon: epsilon.clone(),
        }))
    }

    /// Names of all symbolic parameters in the tree.
    pub fn free_params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_params(&mut out);
        out
    }

    fn collect_params(&self, out: &mut BTreeSet<String>) {
        match self {
            Construction::Blowup { ambient, epsilon, .. } => {
                if let Param::Symbol(s) = epsilon {
                    out.insert(s.clone());
                }
                ambient.collect_params(out);
            }
            Construction::Product { left, right } => {
                left.collect_params(out);
                right.collect_params(out);
            }
            Construction::Twist { family, .. } | Construction::Scale { family, .. } => family.collect_params(out),
            Construction::ProjBundle { .. } | Construction::Profile { .. } => {}
        }
    }
}
