//! The free Hopf algebra on the 2×2 matrix coalgebra: comultiplication on
//! each level, the antipode moving generators up one level, and an antipode
//! law that only holds modulo the relation ideal.

use nebcheck::hopf::free_generator;
use nebcheck::{check_hopf_axioms, free_hopf, tensor_map, Coalgebra, Field, LinearMap, Result};

fn main() -> Result<()> {
    let h = free_hopf(&Coalgebra::matrix(2, Field::Rational));
    let a01 = free_generator(&h, 0, 0, 1);
    let b01 = free_generator(&h, 1, 0, 1);
    let s = h.antipode()?;

    println!("Δ({a01}) = {}", h.delta().apply(&a01)?);
    println!("Δ({b01}) = {}", h.delta().apply(&b01)?);
    println!("S({a01}) = {}", s.apply(&a01)?);
    println!("S({}) = {}", &a01 * &b01, s.apply(&(&a01 * &b01))?);

    // μ(S⊗id)Δ(a[0;0,1]) is zero only in the quotient.
    let id = LinearMap::identity(h.algebra());
    let raw = tensor_map(&[s, &id], &h.delta().apply(&a01)?)?.multiply_slots(0)?;
    println!("μ(S⊗id)Δ({a01}) = {raw}  (in the free algebra)");

    let judge = h.judge(2);
    let elements = h.spanning_set(1, 1)?;
    let entries = check_hopf_axioms(&h, &elements, &elements[1..], &judge, "free-hopf")?;
    for e in entries.iter().filter(|e| e.check.starts_with("antipode")).take(4) {
        let terms = e.certificate.as_ref().map_or(0, Vec::len);
        println!("{:<14} {:<10} {:<15} certificate terms: {terms}", e.check, e.element, e.status.label());
    }
    let failed = entries.iter().filter(|e| !e.status.is_pass()).count();
    println!("{} axiom checks, {failed} failures", entries.len());
    Ok(())
}
