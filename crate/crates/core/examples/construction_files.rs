//! Construction documents: JSON trees of bundles, blowups, products, twists
//! and rescalings, with symbolic parameters bound at evaluation time.
//!
//! `cargo run --example construction_files`

use cmline::exactalg::q;
use cmline::family::{Bindings, Construction};
use cmline::lines::{cm_degree, mu};
use cmline::Result;

const TREE: &str = r#"{
  "type": "scale",
  "r": 2,
  "family": {
    "type": "twist",
    "t": "-1/2",
    "family": {
      "type": "blowup",
      "ambient": {"type": "proj_bundle", "base_genus": 1, "degrees": [2, -1, -1]},
      "multisection": {"section_of_summand": 1},
      "epsilon": "delta"
    }
  }
}"#;

fn main() -> Result<()> {
    let tree = Construction::from_json(TREE)?;
    println!("free parameters: {:?}", tree.free_params());
    for delta in [q(1, 50), q(1, 10), q(1, 4)] {
        let bindings = Bindings::from([("delta".to_string(), delta.clone())]);
        let f = tree.evaluate(&bindings)?;
        println!(
            "delta = {delta}: {} -> mu = {}, cm = {}",
            f.label(),
            mu(&f),
            cm_degree(&f)?
        );
    }
    match tree.evaluate(&Bindings::new()) {
        Ok(_) => unreachable!("delta is unbound"),
        Err(e) => println!("without a value: {e} (exit code {})", e.exit_code()),
    }
    println!("{}", serde_json::to_string_pretty(&tree.to_json_value()).expect("json"));
    Ok(())
}
