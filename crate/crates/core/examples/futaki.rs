//! The Futaki invariant of a weight polynomial w(k) = b0 k^{n+1} + b1 k^n + …
//! and its invariance under changing the linearisation.
//!
//! `cargo run --example futaki`

use cmline::exactalg::q;
use cmline::family::proj_bundle;
use cmline::lines::{futaki, WeightData};
use cmline::Result;

fn main() -> Result<()> {
    let f = proj_bundle(0, &[2, -1, -1])?;
    println!("p(k) = {}", f.hilb().display_in("k"));
    for (b0, b1) in [
        (q(1, 1), q(0, 1)),
        (q(1, 1), q(-1, 2)),
        (q(1, 2), q(3, 2)),
        (q(2, 3), q(-5, 4)),
    ] {
        let w = WeightData { b0, b1 };
        let shift = q(7, 3);
        let shifted = WeightData {
            b0: &w.b0 + &shift * f.a0(),
            b1: &w.b1 + &shift * f.a1(),
        };
        println!(
            "b0 = {:>4}, b1 = {:>4}: F1 = {:>6}, after adding {shift} k p(k): {}",
            w.b0,
            w.b1,
            futaki(&f, &w),
            futaki(&f, &shifted)
        );
    }
    let zero = WeightData { b0: f.a0(), b1: f.a1() };
    println!("weights proportional to (a0, a1): F1 = {}", futaki(&f, &zero));
    Ok(())
}
