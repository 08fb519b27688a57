//! A neb matrix over the free Hopf algebra that satisfies both conditions
//! yet is not invertible: after extending scalars to R = K⟨y,z⟩ the vector
//! (-y, 1) is killed.

use nebcheck::counterexample::MatrixSetting;
use nebcheck::equivariance::{check_neb, invert, module_spanning_set};
use nebcheck::{Field, ModVec, Result};

fn main() -> Result<()> {
    let s = MatrixSetting::new(Field::Rational);
    let theta = s.example_theta();
    println!("θ matrix: {}", theta.matrix().render());

    let e0 = ModVec::basis(Field::Rational, &[s.hopf.algebra().clone()], 2, 0);
    println!("θ(e_0) = {}", theta.theta(&e0)?);
    let (lhs, rhs) = theta.coassociativity_sides(&e0)?;
    println!("coassociativity on e_0:\n  {lhs}\n  {rhs}");

    let judge = s.hopf.judge(2);
    let spanning = module_spanning_set(s.hopf.algebra(), &s.hopf.spanning_set(1, 2)?, 2);
    let entries = check_neb(&theta, &spanning, &judge, "example")?;
    let passed = entries.iter().filter(|e| e.status.is_pass()).count();
    println!("neb conditions: {passed}/{} pass on words of degree ≤ 2", entries.len());

    let x = s.r_vector(&-&s.y(), &s.r.one());
    println!("Θ_R{x:?} directly      = {}", s.theta_r_direct(&x));
    println!("Θ_R via extension      = {}", s.theta_r_extended(&x)?);
    match invert(theta.matrix()) {
        Ok(_) => println!("unexpected inverse"),
        Err(e) => println!("inverse: {e}"),
    }
    Ok(())
}
