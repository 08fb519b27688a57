//! Runs a registered scenario and prints the JSON summary.

use nebcheck::{run_scenario, scenarios, Params, Result};

fn main() -> Result<()> {
    for s in scenarios() {
        println!("{:<22} {}", s.name, s.summary);
    }
    let name = std::env::args().nth(1).unwrap_or_else(|| "example-ex".into());
    let report = run_scenario(&name, &Params::default())?;
    println!("{}", serde_json::to_string_pretty(&report.summary()).expect("summary serializes"));
    Ok(())
}
