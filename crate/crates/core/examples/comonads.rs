//! The comonads G and H on a free module, and comodules over H versus the
//! neb conditions, including a mutated θ that fails both the same way.

use nebcheck::coaction::Coaction;
use nebcheck::comonad::{check_comodule_equivalence, check_comonads, pair_spanning_set};
use nebcheck::counterexample::MatrixSetting;
use nebcheck::equivariance::module_spanning_set;
use nebcheck::{group_hopf, Field, FiniteGroup, Judge, Result, Status};

fn main() -> Result<()> {
    let h = group_hopf(&FiniteGroup::cyclic(2)?, Field::Rational);
    let c = Coaction::regular(&h);
    let basis: Vec<_> = (0..2).map(|i| h.algebra().basis_element(i)).collect();
    let spanning = pair_spanning_set(&c, &basis, &basis, 1, usize::MAX);
    let entries = check_comonads(&c, &spanning, &basis, &Judge::exact(2), "example")?;
    println!("{}: {} comonad checks, all pass: {}", h.name(), entries.len(), entries.iter().all(|e| e.status.is_pass()));

    let s = MatrixSetting::new(Field::Rational);
    let judge = s.hopf.judge(2);
    let spanning = module_spanning_set(s.hopf.algebra(), &s.hopf.spanning_set(1, 1)?, 2);
    for theta in [s.example_theta(), s.mutated_theta()] {
        let entries = check_comodule_equivalence(&theta, &spanning, &judge, "example")?;
        let fails = entries.iter().filter(|e| e.status == Status::Fail && e.check.starts_with("comodule-c")).count();
        let agree = entries.iter().filter(|e| e.check == "comodule-agrees-with-neb").all(|e| e.status.is_pass());
        println!("{}: {fails} failing comodule checks, agrees with neb conditions: {agree}", theta.name());
    }
    Ok(())
}
