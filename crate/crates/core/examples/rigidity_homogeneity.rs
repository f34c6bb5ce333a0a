//! The CM degree is unchanged by twisting L with a line bundle from the base
//! and scales as r^n when L is replaced by L^r.
//!
//! `cargo run --example rigidity_homogeneity`

use cmline::cli::BUILTINS;
use cmline::exactalg::Rational;
use cmline::family::{scale, twist};
use cmline::lines::cm_degree;
use cmline::verify::{check_homogeneity, check_rigidity};
use cmline::Result;

fn main() -> Result<()> {
    for b in BUILTINS {
        let f = b.construction().evaluate(&b.default_bindings())?;
        let cm = cm_degree(&f)?;
        println!("{} (n = {}): cm = {cm}", b.name, f.n());
        for t in [-3, 1, 5] {
            println!(
                "  twist by O({t}): cm = {}",
                cm_degree(&twist(&f, &Rational::from(t))?)?
            );
        }
        for r in [2, 3] {
            println!("  scale by {r}: cm = {}", cm_degree(&scale(&f, r)?)?);
        }
        let t_values: Vec<Rational> = (-3..=3).map(Rational::from).collect();
        println!(
            "  checks: rigidity {:?}, homogeneity {:?}",
            check_rigidity(&f, &t_values).status,
            check_homogeneity(&f, 5).status
        );
    }
    Ok(())
}
