//! Runs every applicable identity check on the built-in families and on a
//! deliberately corrupted profile, printing the JSON reports.
//!
//! `cargo run --example verify_all`

use cmline::cli::BUILTINS;
use cmline::family::{proj_bundle, FamilyData};
use cmline::verify::{run_all, CheckConfig, Subject};
use cmline::Result;

fn main() -> Result<()> {
    let config = CheckConfig::default();
    for b in BUILTINS {
        let subject = Subject::from_construction(&b.construction(), &b.default_bindings())?;
        let reports = run_all(&subject, &config);
        let summary: Vec<String> = reports
            .iter()
            .map(|r| format!("{} {:?}", r.check_name, r.status))
            .collect();
        println!("{}: {}", b.name, summary.join(", "));
    }

    // K·L^2 off by one: the pushforward route and the intersection route disagree
    let good = proj_bundle(0, &[1, 0, 0])?;
    let bad = FamilyData::from_raw(
        good.n(),
        good.genus_base(),
        good.hilb().clone(),
        good.deg_l_top().clone(),
        good.deg_kl() + cmline::exactalg::Rational::one(),
        good.pushforward().cloned(),
        "corrupted K.L^2",
    )?;
    for report in run_all(&Subject::new(bad), &config) {
        println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    }
    Ok(())
}
