//! The construction algebra: intersection profiles of polarised families
//! over a curve and the operations that build new ones.

mod blowup;
mod construct;
mod profile;
pub mod tree;

pub use blowup::{blowup, exceptional_cube, EpsBlowup, MultisectionSpec};
pub use construct::{fibred_product, proj_bundle, projective_space_hilb, scale, section_of_summand, twist};
pub use profile::FamilyData;
pub use tree::{Bindings, Construction, Param, DEFAULT_PARAM};
