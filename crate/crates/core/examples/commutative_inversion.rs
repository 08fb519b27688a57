//! For commutative H, σ applied entrywise inverts a neb matrix. Here H = A =
//! K^{Z3} with the regular representation as θ.

use nebcheck::coaction::Coaction;
use nebcheck::equivariance::{
    check_composite_identity, hopfmodule_from_theta, regular_representation_coefficients,
    rho_from_theta_commutative, NebMatrix,
};
use nebcheck::{function_hopf, Field, FiniteGroup, Judge, Result};

fn main() -> Result<()> {
    let g = FiniteGroup::cyclic(3)?;
    let h = function_hopf(&g, Field::Rational);
    let c = Coaction::regular(&h);
    let theta = NebMatrix::from_hopf_entries("regular", &c, &regular_representation_coefficients(&g, h.algebra()))?;
    let rho = rho_from_theta_commutative(&theta)?;
    println!("Θ = {}", theta.matrix().render());
    println!("ρ = σ*Θ = {}", rho.matrix().render());

    let judge = Judge::exact(2);
    for (check, outer, inner) in [("ρ∘Θ", &rho.matrix().clone(), theta.matrix()), ("Θ∘ρ", theta.matrix(), rho.matrix())] {
        let entries = check_composite_identity(outer, inner, &judge, "example", check)?;
        println!("{check} = id: {}", entries.iter().all(|e| e.status.is_pass()));
    }
    let certified = hopfmodule_from_theta(&theta)?;
    println!("certified inverse equals σ*Θ: {}", certified.matrix() == rho.matrix());
    Ok(())
}
