//! Extracting the Knudsen–Mumford coefficients λ_0..λ_{n+1} from
//! deg π_*(L^k) and checking them against the intersection numbers.
//!
//! `cargo run --example knudsen_mumford`

use cmline::family::{proj_bundle, twist};
use cmline::lines::{cm_degree_intersection, cm_degree_lambda, lambda_vector};
use cmline::verify::check_mk_consistency;
use cmline::Result;

fn main() -> Result<()> {
    for degrees in [vec![1, 0, 0], vec![2, -1, -1], vec![3, 1, -2], vec![1, 1, 0, -4]] {
        let f = proj_bundle(0, &degrees)?;
        let push = f.pushforward().expect("split bundles carry their pushforward");
        let lambda = lambda_vector(&f)?.full().expect("complete");
        let shown: Vec<String> = lambda.iter().map(ToString::to_string).collect();
        println!("{}", f.label());
        println!("  deg pi_*(L^k) = {}", push.display_in("k"));
        println!("  lambda        = [{}]", shown.join(", "));
        println!("  L^(n+1) = {}, K L^n = {}", f.deg_l_top(), f.deg_kl());
        println!(
            "  cm by intersections = {}, by lambdas = {}",
            cm_degree_intersection(&f),
            cm_degree_lambda(&f)?
        );
        println!("  mk_consistency: {:?}", check_mk_consistency(&f)?.status);
        let g = twist(&f, &2.into())?;
        let shifted: Vec<String> = lambda_vector(&g)?
            .full()
            .expect("complete")
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("  twisted by O(2): lambda = [{}]", shifted.join(", "));
    }
    Ok(())
}
