//! A second blowup, along three disjoint sections at a much smaller scale,
//! keeps the CM degree negative. The three sections are blown up once as a
//! single degree-3 multisection and once one at a time.
//!
//! `cargo run --example iterated_blowup`

use cmline::exactalg::{q, Rational};
use cmline::family::{blowup, proj_bundle, section_of_summand, EpsBlowup, MultisectionSpec};
use cmline::lines::cm_degree;
use cmline::Result;

fn main() -> Result<()> {
    let degrees = [2, -1, -1];
    let base = proj_bundle(0, &degrees)?;
    let first = blowup(&base, &section_of_summand(0, &degrees, 0)?, &q(1, 10))?;
    let triple = MultisectionSpec::new(3, -6, Rational::from(3), Rational::from(-9))?;
    let single = MultisectionSpec::new(1, -2, Rational::one(), Rational::from(-3))?;
    let second = EpsBlowup::new(&first, &triple)?;
    println!("cm after the first blowup: {}", cm_degree(&first)?);
    println!(
        "cm(eps') of the second blowup = {}",
        second.cm_degree().display_in("eps'")
    );
    println!("sigma of the second blowup = {}", second.sigma());
    for eps in [q(1, 10000), q(1, 1000), q(1, 100), q(1, 20)] {
        let together = cm_degree(&second.at(&eps)?)?;
        let mut y = first.clone();
        for _ in 0..3 {
            y = blowup(&y, &single, &eps)?;
        }
        let one_at_a_time = cm_degree(&y)?;
        assert_eq!(together, one_at_a_time);
        println!("eps' = {eps:>7}: cm = {together} ~ {}", together.to_decimal_string(6));
    }
    Ok(())
}
