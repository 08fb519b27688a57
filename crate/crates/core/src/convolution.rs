//! The convolution monoid of linear maps `H → B` and the action of maps
//! `H → B` on maps `A → B` through a coaction.

use crate::algebra::{Algebra, Element};
use crate::coaction::Coaction;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg;
use crate::linear_map::{tensor_map, Extension, LinearMap};
use crate::scalar::Scalar;
use crate::tensor::Tensor;

fn target(f: &LinearMap) -> Result<&Algebra> {
    match f.codomain() {
        [b] => Ok(b),
        other => Err(Error::FactorMismatch { left: format!("{other:?}"), right: "one algebra".into() }),
    }
}

/// `μ_B ∘ (f ⊗ g)` applied to a two-slot tensor.
fn multiply_through(f: &LinearMap, g: &LinearMap, t: &Tensor) -> Result<Element> {
    Ok(tensor_map(&[f, g], t)?.multiply_slots(0)?.to_element())
}

/// `(f ∗ g)(x) = μ_B((f ⊗ g)(Δx))`, evaluated on one element (works for
/// free carriers too).
pub fn convolve_at(h: &HopfAlgebra, f: &LinearMap, g: &LinearMap, x: &Element) -> Result<Element> {
    if target(f)? != target(g)? {
        return Err(Error::OwnerMismatch { left: target(f)?.name().into(), right: target(g)?.name().into() });
    }
    multiply_through(f, g, &h.delta().apply(x)?)
}

/// The convolution product `f ∗ g`, materialized on the basis of `H`.
pub fn convolution(h: &HopfAlgebra, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    let basis = h.algebra().basis()?;
    let images = basis
        .iter()
        .map(|k| Ok(Tensor::from_element(&convolve_at(h, f, g, &h.algebra().from_key(k.clone()))?)))
        .collect::<Result<Vec<_>>>()?;
    let name = format!("{}∗{}", f.name(), g.name());
    LinearMap::on_basis(&name, h.algebra(), f.codomain(), Extension::Linear, images)
}

/// The convolution unit `η_B ∘ ε`.
pub fn convolution_unit(h: &HopfAlgebra, b: &Algebra) -> Result<LinearMap> {
    let basis = h.algebra().basis()?;
    let images = basis
        .iter()
        .map(|k| Ok(Tensor::from_element(&b.scalar(h.counit().apply_key(k)?.scalar_value()))))
        .collect::<Result<Vec<_>>>()?;
    LinearMap::on_basis("η∘ε", h.algebra(), &[b.clone()], Extension::AlgebraHom, images)
}

/// `(v • φ)(x) = μ_B((v ⊗ φ)(δx))` on one element.
pub fn star_action_at(c: &Coaction, v: &LinearMap, phi: &LinearMap, x: &Element) -> Result<Element> {
    multiply_through(v, phi, &c.apply(x)?)
}

/// `v • φ`, materialized on the basis of `A`.
pub fn star_action(c: &Coaction, v: &LinearMap, phi: &LinearMap) -> Result<LinearMap> {
    let basis = c.algebra().basis()?;
    let images = basis
        .iter()
        .map(|k| Ok(Tensor::from_element(&star_action_at(c, v, phi, &c.algebra().from_key(k.clone()))?)))
        .collect::<Result<Vec<_>>>()?;
    let name = format!("{}•{}", v.name(), phi.name());
    LinearMap::on_basis(&name, c.algebra(), phi.codomain(), Extension::Linear, images)
}

/// The two-sided convolution inverse of `f`, found by solving the linear
/// system `f ∗ g = η∘ε = g ∗ f` in the unknown coordinates of `g`.
pub fn convolution_inverse(h: &HopfAlgebra, f: &LinearMap) -> Result<LinearMap> {
    let b = target(f)?.clone();
    let hb = h.algebra().basis()?;
    let bb = b.basis()?;
    let field = h.field();
    let (nh, nb) = (hb.len(), bb.len());
    let unknown = |i: usize, j: usize| i * nb + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let unit = convolution_unit(h, &b)?;
    // For each x and each output coordinate, (f ∗ g)(x) and (g ∗ f)(x) are
    // linear in the values g(h_i) = Σ_j g_ij b_j.
    for x in &hb {
        let dx = h.delta().apply_key(x)?;
        let target_value = unit.apply_key(x)?.to_element();
        for right in [true, false] {
            let mut eq = vec![vec![field.zero(); nh * nb]; nb];
            for (keys, c) in dx.terms() {
                let (known, free) = if right { (&keys[0], &keys[1]) } else { (&keys[1], &keys[0]) };
                let fx = f.apply_key(known)?.to_element();
                let i = hb.iter().position(|k| k == free).expect("basis key");
                for (j, bj) in bb.iter().enumerate() {
                    let bj = b.from_key(bj.clone());
                    let prod = if right { fx.try_mul(&bj)? } else { bj.try_mul(&fx)? };
                    for (out, coef) in prod.terms() {
                        let o = bb.iter().position(|k| k == out).expect("basis key");
                        let cell = &mut eq[o][unknown(i, j)];
                        *cell = &*cell + &(c * coef);
                    }
                }
            }
            for (o, row) in eq.into_iter().enumerate() {
                rows.push(row);
                rhs.push(target_value.coefficient(&bb[o]));
            }
        }
    }
    let solution = linalg::solve(field, &rows, &rhs)
        .ok_or_else(|| Error::NotInvertible(format!("{} has no convolution inverse", f.name())))?;
    let images = (0..nh)
        .map(|i| {
            let terms = (0..nb).map(|j| (bb[j].clone(), solution[unknown(i, j)].clone()));
            Tensor::from_element(&b.from_terms(terms))
        })
        .collect();
    let name = format!("{}⁻¹", f.name());
    LinearMap::on_basis(&name, h.algebra(), &[b], Extension::Linear, images)
}

/// Whether two maps with finite-dimensional domain agree on every basis element.
pub fn maps_agree(f: &LinearMap, g: &LinearMap) -> Result<bool> {
    for k in f.domain().basis()? {
        if f.apply_key(&k)? != g.apply_key(&k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_hopf, FiniteGroup};
    use crate::scalar::Field;

    #[test]
    fn identity_star_antipode_is_counit() {
        let h = group_hopf(&FiniteGroup::cyclic(2).unwrap(), Field::Rational);
        let id = LinearMap::identity(h.algebra());
        let s = h.antipode().unwrap().clone();
        let u = h.algebra().basis_element(1);
        assert_eq!(convolve_at(&h, &id, &s, &u).unwrap(), h.algebra().one());
        let inv = convolution_inverse(&h, &id).unwrap();
        assert!(maps_agree(&inv, &s).unwrap());
    }

    #[test]
    fn zero_map_is_not_invertible() {
        let h = group_hopf(&FiniteGroup::cyclic(3).unwrap(), Field::Rational);
        let zero = LinearMap::on_basis(
            "0",
            h.algebra(),
            &[h.algebra().clone()],
            Extension::Linear,
            vec![Tensor::zero(h.field(), &[h.algebra().clone()]); 3],
        )
        .unwrap();
        assert!(matches!(convolution_inverse(&h, &zero), Err(Error::NotInvertible(_))));
    }
}
