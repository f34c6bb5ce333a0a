//! Fibred products over the base: the normalised CM degree cm′ is additive,
//! so a product with one negative and one non-positive factor is negative.
//!
//! `cargo run --example fibred_products`

use cmline::exactalg::q;
use cmline::family::{blowup, fibred_product, proj_bundle, section_of_summand};
use cmline::lines::{cm_degree, cm_prime_degree};
use cmline::Result;

fn main() -> Result<()> {
    let degrees = [2, -1, -1];
    let base = proj_bundle(0, &degrees)?;
    let negative = blowup(&base, &section_of_summand(0, &degrees, 0)?, &q(1, 10))?;
    let flat = proj_bundle(0, &[1, 0, 0])?;
    let factors = [negative.clone(), flat.clone(), base.clone()];
    for f in &factors {
        println!(
            "{}: n = {}, cm = {}, cm' = {}",
            f.label(),
            f.n(),
            cm_degree(f)?,
            cm_prime_degree(f)?
        );
    }
    let mut product = negative.clone();
    for f in [&negative, &flat, &base] {
        product = fibred_product(&product, f)?;
        println!(
            "x {} -> n = {}: L^(n+1) = {}, K L^n = {}, cm = {}, cm' = {}",
            f.label(),
            product.n(),
            product.deg_l_top(),
            product.deg_kl(),
            cm_degree(&product)?,
            cm_prime_degree(&product)?
        );
    }
    Ok(())
}
