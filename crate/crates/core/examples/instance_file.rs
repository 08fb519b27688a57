//! Loads a structure-table instance and a group file and runs the Hopf
//! axioms on them.

use nebcheck::{check_hopf_axioms, parse_instance, Judge, Result};

fn main() -> Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    for file in ["kz2.txt", "z4.txt"] {
        let text = std::fs::read_to_string(format!("{dir}/{file}")).expect("bundled data file");
        let instance = parse_instance(&text)?;
        for h in instance.hopf_algebras() {
            let basis: Vec<_> = (0..h.algebra().dim().unwrap_or(0)).map(|i| h.algebra().basis_element(i)).collect();
            let entries = check_hopf_axioms(&h, &basis, &basis, &Judge::exact(2), file)?;
            let failed = entries.iter().filter(|e| !e.status.is_pass()).count();
            println!("{file}: {} (dim {}): {} checks, {failed} failures", h.name(), basis.len(), entries.len());
        }
    }
    match parse_instance("field Q\nkind table 1\nunit 1*0\nmul 0 0 = 1*0\ndelta 0 = 1*0|3\n") {
        Err(e) => println!("bad file: {e}"),
        Ok(_) => println!("bad file parsed?"),
    }
    Ok(())
}
