//! The Hilbert line deg λ_Hilb(X, L^r, k) as a polynomial in (k, r) and its
//! leading piece, the Chow line, for a profile with non-zero CM degree.
//!
//! `cargo run --example hilbert_leading_order`

use cmline::exactalg::{binomial_poly, Rational, UniPoly};
use cmline::family::{projective_space_hilb, FamilyData};
use cmline::lines::{ch_degree, cm_degree, hilb_degree_bipoly};
use cmline::Result;

fn main() -> Result<()> {
    // plane fibres with deg λ(k) = C(k, 3): L^3 = 1, K L^2 = 2
    let push: UniPoly = binomial_poly(3);
    let f = FamilyData::new(
        2,
        0,
        projective_space_hilb(2),
        Rational::one(),
        Rational::from(2),
        Some(push),
        "lambda(k) = C(k,3)",
    )?;
    let n = f.n() as i64;
    let cm = cm_degree(&f)?;
    let h = hilb_degree_bipoly(&f)?;
    println!("{}: cm_degree = {cm}", f.label());
    println!("hilb_degree(k, r):");
    for ((i, j), c) in h.terms() {
        println!("  k^{i} r^{j}: {c}");
    }
    let fact = Rational::factorial(n as u32 + 1);
    println!(
        "coefficient of k^{} r^{} = {}",
        n + 1,
        2 * n,
        h.coefficient(n + 1, 2 * n)
    );
    println!(
        "a0 / (2 (n+1)!) * cm     = {}",
        f.a0() / (Rational::from(2) * &fact) * &cm
    );
    let ch = ch_degree(&f)?;
    println!("chow line ch(r)          = {}", ch.display_in("r"));
    println!(
        "(n+1)! * [k^(n+1)] slice = {}",
        h.k_slice(n as usize + 1).scale(&fact).display_in("r")
    );
    Ok(())
}
