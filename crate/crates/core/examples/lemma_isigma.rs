//! σ(h⊗a) = S(h)a₍₋₁₎ ⊗ a₍₀₎ undoes δ, also for noncommutative H.

use nebcheck::coaction::{check_isigma, Coaction};
use nebcheck::counterexample::MatrixSetting;
use nebcheck::{group_hopf, Field, FiniteGroup, Judge, Result};

fn main() -> Result<()> {
    let h = group_hopf(&FiniteGroup::symmetric3(), Field::Rational);
    let c = Coaction::regular(&h);
    let basis: Vec<_> = (0..6).map(|i| h.algebra().basis_element(i)).collect();
    let r = basis[1].clone();
    println!("δ({r}) = {}, σ(δ({r})) = {}", c.apply(&r)?, c.sigma(&c.apply(&r)?)?);
    let entries = check_isigma(&c, &basis, &Judge::exact(2), "example")?;
    println!("{}: {} checks, all pass: {}", h.name(), entries.len(), entries.iter().all(|e| e.status.is_pass()));

    let s = MatrixSetting::new(Field::Rational);
    let entries = check_isigma(&s.coaction, &s.hopf.spanning_set(1, 1)?, &s.hopf.judge(2), "example")?;
    for e in entries.iter().filter(|e| e.element == "a[0;0,1]") {
        let terms = e.certificate.as_ref().map_or(0, Vec::len);
        println!("free H: {} on {} -> {} ({terms} certificate terms)", e.check, e.element, e.status.label());
    }
    Ok(())
}
