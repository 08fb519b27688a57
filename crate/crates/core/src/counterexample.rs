//! The non-invertible examples over the free Hopf algebra `H` on the 2×2
//! matrix coalgebra, with `A = H`, `δ = Δ` and `M = H ⊕ H`.
//!
//! Scalars are extended to the free algebra `R = K⟨y, z⟩` through
//! `w ⊗ ε: H ⊗ H → R`, where `w` is known only on level-0 generators:
//! `w(a[0;0,0]) = 1`, `w(a[0;0,1]) = y`, `w(a[0;1,0]) = z`, `w(a[0;1,1]) = yz`.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Element, GenId, Word};
use crate::coaction::Coaction;
use crate::equivariance::{HopfModuleMatrix, NebMatrix};
use crate::error::Result;
use crate::hopf::{free_generator, free_hopf, Coalgebra, HopfAlgebra};
use crate::linear_map::{tensor_map, Extension, LinearMap};
use crate::module::{ModVec, ModuleMatrix};
use crate::scalar::Field;
use crate::tensor::Tensor;

/// The free Hopf algebra, its regular coaction and the target algebra `R`.
#[derive(Clone, Debug)]
pub struct MatrixSetting {
    pub hopf: HopfAlgebra,
    pub coaction: Coaction,
    pub r: Algebra,
    pub w: LinearMap,
}

impl MatrixSetting {
    pub fn new(field: Field) -> MatrixSetting {
        let hopf = free_hopf(&Coalgebra::matrix(2, field));
        let coaction = Coaction::regular(&hopf);
        let r = Algebra::free("R", field, &["y", "z"]);
        let w = partial_w(&hopf, &r);
        MatrixSetting { hopf, coaction, r, w }
    }

    /// `a[0;i,j]`.
    pub fn coefficient(&self, i: u32, j: u32) -> Element {
        free_generator(&self.hopf, 0, i, j)
    }

    pub fn y(&self) -> Element {
        self.r.gen(GenId::named("y"))
    }

    pub fn z(&self) -> Element {
        self.r.gen(GenId::named("z"))
    }

    /// The matrix `[a[0;p,q] ⊗ 1]`.
    fn coefficient_matrix(&self, transpose: bool) -> Vec<Vec<Element>> {
        (0..2)
            .map(|p| (0..2).map(|q| if transpose { self.coefficient(q, p) } else { self.coefficient(p, q) }).collect())
            .collect()
    }

    /// `θ(k⁰, k¹) = (a⁰₀⊗k⁰ + a⁰₁⊗k¹) ⊗ e_0 + (a¹₀⊗k⁰ + a¹₁⊗k¹) ⊗ e_1`.
    pub fn example_theta(&self) -> NebMatrix {
        NebMatrix::from_hopf_entries("θ", &self.coaction, &self.coefficient_matrix(false)).expect("2x2 over H⊗H")
    }

    /// The example `θ` with both off-diagonal entries set to zero.
    pub fn mutated_theta(&self) -> NebMatrix {
        let zero = Tensor::zero(self.hopf.field(), &self.coaction.pair());
        self.example_theta()
            .with_entry("θ-mutated", 0, 1, zero.clone())
            .and_then(|t| t.with_entry("θ-mutated", 1, 0, zero))
            .expect("same shape")
    }

    /// `δ̄(k⁰, k¹) = Σ_{p,q} k^q₍₁₎ a^p_q ⊗ k^q₍₂₎ e_p`, read literally:
    /// `δ̄(e_q) = Σ_p a[0;p,q] ⊗ e_p`.
    pub fn example_coaction(&self) -> HopfModuleMatrix {
        HopfModuleMatrix::from_hopf_entries("δ̄", &self.coaction, &self.coefficient_matrix(false)).expect("2x2 over H⊗H")
    }

    /// `δ̄(e_q) = Σ_p a[0;q,p] ⊗ e_p`, the transposed variant.
    pub fn transposed_coaction(&self) -> HopfModuleMatrix {
        HopfModuleMatrix::from_hopf_entries("δ̄ᵀ", &self.coaction, &self.coefficient_matrix(true)).expect("2x2 over H⊗H")
    }

    /// The literal `δ̄` with every term involving `k¹` deleted.
    pub fn truncated_coaction(&self) -> HopfModuleMatrix {
        self.example_coaction().without_column("δ̄-truncated", 1).expect("same shape")
    }

    /// `w ⊗ ε: H ⊗ H → R`.
    pub fn w_eps(&self, t: &Tensor) -> Result<Element> {
        Ok(tensor_map(&[&self.w, self.hopf.counit()], t)?.to_element())
    }

    /// Extension of scalars of a matrix over `H ⊗ H` along `w ⊗ ε`.
    pub fn extend_to_r(&self, m: &ModuleMatrix) -> Result<ModuleMatrix> {
        m.map_entries(&[self.r.clone()], |t| Ok(Tensor::from_element(&self.w_eps(t)?)))
    }

    /// `Θ_R(x⁰, x¹) = (x⁰ + x¹y, x⁰z + x¹yz)`, directly.
    pub fn theta_r_direct(&self, x: &ModVec) -> ModVec {
        let (y, z) = (self.y(), self.z());
        let x0 = x.slot(0).to_element();
        let x1 = x.slot(1).to_element();
        let first = &x0 + &(&x1 * &y);
        let second = &(&x0 * &z) + &(&(&x1 * &y) * &z);
        crate::module::vector_of(&self.r, &[first, second])
    }

    /// `Θ_R` through extension of scalars: `x_q ⊗ (1 ⊗ e_q) ↦ x_q ⊗ Θ(1 ⊗ e_q)`,
    /// then `r ⊗ (h⁰⊗h¹) ⊗ e_p ↦ r·w(h⁰)·ε(h¹) e_p` (the image is already
    /// balanced, so the `k` in the identification is 1).
    pub fn theta_r_extended(&self, x: &ModVec) -> Result<ModVec> {
        self.extend_to_r(self.example_theta().matrix())?.apply(x)
    }

    /// `ρ_R` for a Hopf module coaction, through the same identifications.
    pub fn rho_r(&self, d: &HopfModuleMatrix, x: &ModVec) -> Result<ModVec> {
        self.extend_to_r(d.matrix())?.apply(x)
    }

    /// The test vectors `r·e_q` for `r` a word in `y, z` of degree ≤ `degree`.
    pub fn r_spanning_set(&self, degree: usize) -> Vec<(String, ModVec)> {
        let gens = [GenId::named("y"), GenId::named("z")];
        let mut out = Vec::new();
        for w in Word::all_up_to(&gens, degree) {
            let e = self.r.word(&w.0);
            for q in 0..2 {
                out.push((format!("{w}*e_{q}"), ModVec::single(Tensor::from_element(&e), 2, q)));
            }
        }
        out
    }

    /// `(x⁰, x¹)` as a vector of `R²`.
    pub fn r_vector(&self, x0: &Element, x1: &Element) -> ModVec {
        crate::module::vector_of(&self.r, &[x0.clone(), x1.clone()])
    }
}

/// The algebra map `w` on level-0 generators only. Any other generator
/// raises `MissingGeneratorImage`.
pub fn partial_w(h: &HopfAlgebra, r: &Algebra) -> LinearMap {
    let y = r.gen(GenId::named("y"));
    let z = r.gen(GenId::named("z"));
    let images: BTreeMap<GenId, Tensor> = [
        ((0, 0), r.one()),
        ((0, 1), y.clone()),
        ((1, 0), z.clone()),
        ((1, 1), &y * &z),
    ]
    .into_iter()
    .map(|((i, j), e)| (GenId::leveled("a", 0, i, j), Tensor::from_element(&e)))
    .collect();
    LinearMap::on_generators("w", h.algebra(), &[r.clone()], Extension::AlgebraHom, images).expect("free domain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn kernel_vector_of_theta_r() {
        let s = MatrixSetting::new(Field::Rational);
        let x = s.r_vector(&-&s.y(), &s.r.one());
        assert!(!x.is_zero());
        assert!(s.theta_r_direct(&x).is_zero());
        assert!(s.theta_r_extended(&x).unwrap().is_zero());
    }

    #[test]
    fn w_refuses_higher_levels() {
        let s = MatrixSetting::new(Field::Rational);
        let g = free_generator(&s.hopf, 1, 0, 0);
        assert!(matches!(s.w.apply(&g), Err(Error::MissingGeneratorImage { .. })));
        let word = &s.coefficient(0, 0) * &s.coefficient(0, 1);
        assert_eq!(s.w.apply_element(&word).unwrap(), s.y());
    }
}
