//! Blowing up a section of P(O(2) ⊕ O(−1) ⊕ O(−1)) over P¹ and shrinking the
//! exceptional divisor: the sign of the CM degree depends on the section.
//!
//! `cargo run --example blowup_signs`

use cmline::exactalg::q;
use cmline::family::{proj_bundle, section_of_summand, EpsBlowup};
use cmline::Result;

fn main() -> Result<()> {
    let degrees = [2, -1, -1];
    let base = proj_bundle(0, &degrees)?;
    for index in [0, 1] {
        let section = section_of_summand(0, &degrees, index)?;
        let b = EpsBlowup::new(&base, &section)?;
        println!("blowing up P(O({}))", degrees[index]);
        println!("  L_eps^3      = {}", b.deg_l_top().display_in("eps"));
        println!("  K L_eps^2    = {}", b.deg_kl().display_in("eps"));
        println!("  cm(eps)      = {}", b.cm_degree().display_in("eps"));
        println!("  sigma        = {}", b.sigma());
        for eps in [q(1, 100), q(1, 20), q(1, 10), q(1, 2)] {
            let v = b.cm_degree().eval(&eps)?;
            println!("  cm({eps:>5}) = {v:>14}  ~ {}", v.to_decimal_string(6));
        }
    }
    Ok(())
}
