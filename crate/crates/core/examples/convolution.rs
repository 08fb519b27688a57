//! Convolution of maps H → B: the identity's inverse is the antipode, and
//! an algebra map into a commutative algebra is inverted by composing with S.

use nebcheck::convolution::{convolution, convolution_inverse, convolution_unit, maps_agree};
use nebcheck::{function_hopf, group_hopf, Algebra, BasisKey, Extension, Field, FiniteGroup, LinearMap, Result, Tensor};

fn main() -> Result<()> {
    let g = FiniteGroup::cyclic(3)?;
    let kg = group_hopf(&g, Field::Rational);
    let id = LinearMap::identity(kg.algebra());
    let inv = convolution_inverse(&kg, &id)?;
    println!("id⁻¹ = S on {}: {}", kg.name(), maps_agree(&inv, kg.antipode()?)?);
    let unit = convolution_unit(&kg, kg.algebra())?;
    println!("id ∗ S = η∘ε: {}", maps_agree(&convolution(&kg, &id, kg.antipode()?)?, &unit)?);

    // Evaluation at g on K^{Z3} is an algebra map into the ground field.
    let fun = function_hopf(&g, Field::Rational);
    let k = Algebra::ground(Field::Rational);
    let images = (0..3).map(|i| Tensor::from_element(&k.scalar(Field::Rational.int((i == 1) as i64)))).collect();
    let ev = LinearMap::on_basis("ev_g", fun.algebra(), &[k.clone()], Extension::AlgebraHom, images)?;
    let inv = convolution_inverse(&fun, &ev)?;
    let via_antipode = fun.antipode()?.then(&ev)?;
    for i in 0..3 {
        let key = BasisKey::Index(i);
        println!("  {}: ev⁻¹ = {}, ev∘S = {}", fun.algebra().key_name(&key), inv.apply_key(&key)?, via_antipode.apply_key(&key)?);
    }
    println!("ev⁻¹ = ev∘S: {}", maps_agree(&inv, &via_antipode)?);
    Ok(())
}
