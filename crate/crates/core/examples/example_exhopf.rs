//! The Hopf module coaction with the same coefficient pattern as the
//! non-invertible θ, its extension of scalars, and the transposed variant.

use nebcheck::counterexample::MatrixSetting;
use nebcheck::equivariance::{check_hopfmodule, module_spanning_set};
use nebcheck::{Field, ModVec, Result, Status};

fn main() -> Result<()> {
    let s = MatrixSetting::new(Field::Rational);
    let judge = s.hopf.judge(2);
    let spanning = module_spanning_set(s.hopf.algebra(), &s.hopf.spanning_set(1, 1)?, 2);
    let e0 = ModVec::basis(Field::Rational, &[s.hopf.algebra().clone()], 2, 0);

    for d in [s.example_coaction(), s.transposed_coaction()] {
        println!("{}: δ̄(e_0) = {}", d.name(), d.coact(&e0)?);
        let entries = check_hopfmodule(&d, &spanning, &[], &judge, "example")?;
        match entries.iter().find(|e| e.status == Status::Fail) {
            None => println!("  all {} axiom checks pass", entries.len()),
            Some(f) => {
                let w = f.witness.as_ref().expect("failures carry witnesses");
                println!("  {} fails on {}\n    residual {}", f.check, f.element, w.residual);
            }
        }
        for (label, v) in s.r_spanning_set(1).into_iter().take(2) {
            println!("  ρ_R({label}) = {}   Θ_R = {}", s.rho_r(&d, &v)?, s.theta_r_direct(&v));
        }
    }
    Ok(())
}
