//! Algebra coactions `δ: A → H ⊗ A`, the derived maps `ν` and `γ`, and the
//! auxiliary maps `σ`, `τ` on `H ⊗ A` and `H ⊗ H ⊗ A`.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::judge::Judge;
use crate::linear_map::{map_one_slot, Extension, LinearMap};
use crate::report::CheckEntry;
use crate::tensor::Tensor;

/// A left coaction of a Hopf algebra on an algebra.
#[derive(Clone, Debug)]
pub struct Coaction {
    name: String,
    hopf: HopfAlgebra,
    algebra: Algebra,
    map: LinearMap,
    nu: LinearMap,
}

/// `a ↦ 1 ⊗ a` as an algebra map `A → H ⊗ A`.
fn embed_right(h: &Algebra, a: &Algebra) -> LinearMap {
    let codomain = [h.clone(), a.clone()];
    let one = Tensor::from_element(&h.one());
    if let Ok(basis) = a.basis() {
        let images = basis
            .into_iter()
            .map(|k| one.outer(&Tensor::from_element(&a.from_key(k))))
            .collect();
        return LinearMap::on_basis("ν", a, &codomain, Extension::AlgebraHom, images).expect("finite basis");
    }
    let a2 = a.clone();
    LinearMap::from_rule("ν", a, &codomain, Extension::AlgebraHom, move |g| {
        Some(one.outer(&Tensor::from_element(&a2.gen(*g))))
    })
    .expect("free domain")
}

impl Coaction {
    /// Wraps an algebra map `A → H ⊗ A`. No axioms are checked here; see
    /// [`check_coaction`].
    pub fn new(name: &str, hopf: &HopfAlgebra, map: LinearMap) -> Result<Coaction> {
        let expected = [hopf.algebra().clone(), map.domain().clone()];
        if map.codomain() != expected {
            return Err(Error::FactorMismatch {
                left: format!("{:?}", map.codomain()),
                right: format!("{expected:?}"),
            });
        }
        let algebra = map.domain().clone();
        let nu = embed_right(hopf.algebra(), &algebra);
        Ok(Coaction { name: name.to_string(), hopf: hopf.clone(), algebra, map, nu })
    }

    /// `A = H` with `δ = Δ`.
    pub fn regular(hopf: &HopfAlgebra) -> Coaction {
        Coaction::new("Δ", hopf, hopf.delta().clone()).expect("Δ lands in H ⊗ H")
    }

    /// `δ(a) = 1 ⊗ a`.
    pub fn trivial(hopf: &HopfAlgebra, algebra: &Algebra) -> Coaction {
        let nu = embed_right(hopf.algebra(), algebra);
        Coaction::new("trivial", hopf, nu).expect("ν lands in H ⊗ A")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// `ν = η ⊗ id_A`.
    pub fn nu(&self) -> &LinearMap {
        &self.nu
    }

    /// The factor list `[H, A]`.
    pub fn pair(&self) -> Vec<Algebra> {
        vec![self.hopf.algebra().clone(), self.algebra.clone()]
    }

    /// The factor list `[H, H, A]`.
    pub fn triple(&self) -> Vec<Algebra> {
        let h = self.hopf.algebra().clone();
        vec![h.clone(), h, self.algebra.clone()]
    }

    pub fn apply(&self, x: &Element) -> Result<Tensor> {
        self.map.apply(x)
    }

    /// `γ(a) = (Δ ⊗ id)(δ(a))`.
    pub fn gamma(&self, x: &Element) -> Result<Tensor> {
        map_one_slot(self.hopf.delta(), 0, &self.apply(x)?)
    }

    /// `(id ⊗ δ)` on a tensor of `H ⊗ A`.
    pub fn on_last(&self, t: &Tensor) -> Result<Tensor> {
        map_one_slot(&self.map, t.factors().len() - 1, t)
    }

    /// `σ(h ⊗ a) = S(h)a₍₋₁₎ ⊗ a₍₀₎`, i.e. `(μ ⊗ id) ∘ (S ⊗ δ)`.
    pub fn sigma(&self, t: &Tensor) -> Result<Tensor> {
        let s = self.hopf.antipode()?;
        let pair = self.pair();
        let field = self.hopf.field();
        let one_a = Tensor::from_element(&self.algebra.one());
        let mut out = Tensor::zero(field, &pair);
        for (keys, c) in t.terms() {
            let head = s.apply_key(&keys[0])?.outer(&one_a);
            let tail = self.map.apply_key(&keys[1])?;
            out = &out + &head.try_mul(&tail)?.scale(c);
        }
        Ok(out)
    }

    /// `τ(h ⊗ h' ⊗ a) = S(h)h' ⊗ a`, i.e. `(μ ⊗ id) ∘ (S ⊗ id ⊗ id)`.
    pub fn tau(&self, t: &Tensor) -> Result<Tensor> {
        let s = self.hopf.antipode()?;
        map_one_slot(s, 0, t)?.multiply_slots(0)
    }

    /// `σ` as a map that may be used for extension of scalars: refuses
    /// unless `H` is commutative, since only then is it multiplicative.
    pub fn sigma_hom(&self) -> Result<impl Fn(&Tensor) -> Result<Tensor> + '_> {
        if !self.hopf.is_commutative() {
            return Err(Error::NotCommutative(self.hopf.name().to_string()));
        }
        self.hopf.antipode()?;
        Ok(move |t: &Tensor| self.sigma(t))
    }
}

fn label(x: &Element) -> String {
    if x.terms().len() == 1 {
        let (k, c) = x.terms().iter().next().expect("one term");
        if c.is_one() {
            return x.algebra().key_name(k);
        }
    }
    x.to_string()
}

/// Checks that `δ` is a unital multiplicative coassociative counital map:
/// coassociativity and counit on `elements`, multiplicativity on all
/// `x·y` with `x` in `elements` and `y` in `factors`.
pub fn check_coaction(
    c: &Coaction,
    elements: &[Element],
    factors: &[Element],
    judge: &Judge,
    scenario: &str,
) -> Result<Vec<CheckEntry>> {
    let h = c.hopf();
    let a = c.algebra();
    let field = h.field();
    let mut out = vec![judge.check(scenario, "coaction-unit", "1", c.apply(&a.one())?, Tensor::unit(field, &c.pair()))?];
    for x in elements {
        let name = label(x);
        let dx = c.apply(x)?;
        let lhs = map_one_slot(h.delta(), 0, &dx)?;
        let rhs = c.on_last(&dx)?;
        out.push(judge.check(scenario, "coaction-coassociativity", &name, lhs, rhs)?);
        let lhs = map_one_slot(h.counit(), 0, &dx)?;
        out.push(judge.check(scenario, "coaction-counit", &name, lhs, Tensor::from_element(x))?);
    }
    for x in elements {
        for y in factors {
            let name = format!("{} * {}", label(x), label(y));
            let lhs = c.apply(&x.try_mul(y)?)?;
            let rhs = c.apply(x)?.try_mul(&c.apply(y)?)?;
            out.push(judge.check(scenario, "coaction-multiplicative", &name, lhs, rhs)?);
        }
    }
    Ok(out)
}

/// Checks `σ∘δ = η⊗id_A` and `σ∘(η⊗id_A) = δ` on `elements`.
pub fn check_isigma(c: &Coaction, elements: &[Element], judge: &Judge, scenario: &str) -> Result<Vec<CheckEntry>> {
    let mut out = Vec::new();
    for x in elements {
        let name = label(x);
        let nu_x = c.nu().apply(x)?;
        let dx = c.apply(x)?;
        out.push(judge.check(scenario, "sigma-after-delta", &name, c.sigma(&dx)?, nu_x.clone())?);
        out.push(judge.check(scenario, "sigma-after-unit", &name, c.sigma(&nu_x)?, dx)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_hopf, FiniteGroup};
    use crate::scalar::Field;

    #[test]
    fn sigma_on_group_algebra() {
        let h = group_hopf(&FiniteGroup::cyclic(2).unwrap(), Field::Rational);
        let c = Coaction::regular(&h);
        let u = h.algebra().basis_element(1);
        let q = h.field();
        let one = h.algebra().one();
        assert_eq!(c.sigma(&Tensor::pure(q, &[&one, &u])).unwrap(), Tensor::pure(q, &[&u, &u]));
        assert_eq!(c.sigma(&Tensor::pure(q, &[&u, &u])).unwrap(), Tensor::pure(q, &[&one, &u]));
        assert_eq!(c.sigma(&Tensor::pure(q, &[&one, &one])).unwrap(), Tensor::pure(q, &[&one, &one]));
    }
}
