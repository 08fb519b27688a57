//! Free modules of finite rank over a tensor-product algebra, in normal form.
//!
//! For `M = A^n` and an algebra map `φ: A → N`, the module `N_φ ⊗_A M` is
//! identified with `N^n`: the balanced relation `x ⊗ a·e_q = x·φ(a) ⊗ e_q`
//! moves every coefficient to the left, so an element is just one tensor of
//! `N` per basis vector. [`ModVec`] is that vector and [`ModuleMatrix`] the
//! matrix of an `N`-linear map between such modules.

use std::fmt;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linear_map::LinearMap;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;

/// An element `Σ_q x_q e_q` of a free module with coefficients in a tensor
/// product algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct ModVec {
    field: Field,
    factors: Vec<Algebra>,
    slots: Vec<Tensor>,
}

impl ModVec {
    pub fn zero(field: Field, factors: &[Algebra], rank: usize) -> ModVec {
        ModVec { field, factors: factors.to_vec(), slots: vec![Tensor::zero(field, factors); rank] }
    }

    /// The basis vector `e_q`.
    pub fn basis(field: Field, factors: &[Algebra], rank: usize, q: usize) -> ModVec {
        let mut v = ModVec::zero(field, factors, rank);
        v.slots[q] = Tensor::unit(field, factors);
        v
    }

    /// `x · e_q`.
    pub fn single(x: Tensor, rank: usize, q: usize) -> ModVec {
        let mut v = ModVec::zero(x.field(), x.factors(), rank);
        v.slots[q] = x;
        v
    }

    pub fn from_slots(field: Field, factors: &[Algebra], slots: Vec<Tensor>) -> Result<ModVec> {
        for s in &slots {
            if s.factors() != factors {
                return Err(Error::FactorMismatch {
                    left: format!("{factors:?}"),
                    right: format!("{:?}", s.factors()),
                });
            }
        }
        Ok(ModVec { field, factors: factors.to_vec(), slots })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn factors(&self) -> &[Algebra] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn slot(&self, q: usize) -> &Tensor {
        &self.slots[q]
    }

    pub fn slots(&self) -> &[Tensor] {
        &self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(Tensor::is_zero)
    }

    fn check(&self, other: &ModVec) -> Result<()> {
        if self.factors != other.factors || self.rank() != other.rank() {
            return Err(Error::FactorMismatch {
                left: format!("{:?}^{}", self.factors, self.rank()),
                right: format!("{:?}^{}", other.factors, other.rank()),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ModVec) -> Result<ModVec> {
        self.check(other)?;
        let slots = self.slots.iter().zip(&other.slots).map(|(a, b)| a + b).collect();
        Ok(ModVec { field: self.field, factors: self.factors.clone(), slots })
    }

    pub fn try_sub(&self, other: &ModVec) -> Result<ModVec> {
        self.check(other)?;
        let slots = self.slots.iter().zip(&other.slots).map(|(a, b)| a - b).collect();
        Ok(ModVec { field: self.field, factors: self.factors.clone(), slots })
    }

    pub fn scale(&self, c: &Scalar) -> ModVec {
        ModVec {
            field: self.field,
            factors: self.factors.clone(),
            slots: self.slots.iter().map(|s| s.scale(c)).collect(),
        }
    }

    /// The module action `x · v`.
    pub fn left_mul(&self, x: &Tensor) -> Result<ModVec> {
        let slots = self.slots.iter().map(|s| x.try_mul(s)).collect::<Result<Vec<_>>>()?;
        Ok(ModVec { field: self.field, factors: self.factors.clone(), slots })
    }

    /// Applies `f` to every coordinate; the result lives over `factors`.
    pub fn map_slots(
        &self,
        factors: &[Algebra],
        mut f: impl FnMut(&Tensor) -> Result<Tensor>,
    ) -> Result<ModVec> {
        let slots = self.slots.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        ModVec::from_slots(self.field, factors, slots)
    }

    /// The pairs `(x_q, e_q)`, i.e. this normal form read as a raw balanced sum.
    pub fn as_pairs(&self, base: &Algebra) -> Vec<(Tensor, ModVec)> {
        (0..self.rank())
            .map(|q| (self.slots[q].clone(), ModVec::basis(self.field, &[base.clone()], self.rank(), q)))
            .collect()
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (q, s) in self.slots.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (k, c) in s.terms() {
                let keys: Vec<String> =
                    self.factors.iter().zip(k).map(|(a, key)| a.key_name(key)).collect();
                if keys.is_empty() {
                    parts.push(format!("{c}*e{q}"));
                } else {
                    parts.push(format!("{c}*({})*e{q}", keys.join("|")));
                }
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for ModVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Matrix of a linear map between free modules: the basis vector `e_q` is
/// sent to `Σ_p entries[p][q] e_p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleMatrix {
    field: Field,
    factors: Vec<Algebra>,
    entries: Vec<Vec<Tensor>>,
}

impl ModuleMatrix {
    pub fn new(field: Field, factors: &[Algebra], entries: Vec<Vec<Tensor>>) -> Result<ModuleMatrix> {
        let cols = entries.first().map(Vec::len).unwrap_or(0);
        for row in &entries {
            if row.len() != cols {
                return Err(Error::Usage("ragged module matrix".into()));
            }
            for t in row {
                if t.factors() != factors {
                    return Err(Error::FactorMismatch {
                        left: format!("{factors:?}"),
                        right: format!("{:?}", t.factors()),
                    });
                }
            }
        }
        Ok(ModuleMatrix { field, factors: factors.to_vec(), entries })
    }

    pub fn identity(field: Field, factors: &[Algebra], n: usize) -> ModuleMatrix {
        let entries = (0..n)
            .map(|p| {
                (0..n)
                    .map(|q| if p == q { Tensor::unit(field, factors) } else { Tensor::zero(field, factors) })
                    .collect()
            })
            .collect();
        ModuleMatrix { field, factors: factors.to_vec(), entries }
    }

    /// The matrix whose `q`-th column is `columns[q]`.
    pub fn from_columns(columns: &[ModVec]) -> Result<ModuleMatrix> {
        let first = columns.first().ok_or_else(|| Error::Usage("no columns".into()))?;
        let rows = first.rank();
        let entries = (0..rows)
            .map(|p| columns.iter().map(|c| c.slot(p).clone()).collect())
            .collect();
        ModuleMatrix::new(first.field(), first.factors(), entries)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn factors(&self) -> &[Algebra] {
        &self.factors
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map(Vec::len).unwrap_or(0)
    }

    pub fn entry(&self, p: usize, q: usize) -> &Tensor {
        &self.entries[p][q]
    }

    /// Image of the basis vector `e_q`.
    pub fn column(&self, q: usize) -> ModVec {
        ModVec {
            field: self.field,
            factors: self.factors.clone(),
            slots: (0..self.rows()).map(|p| self.entries[p][q].clone()).collect(),
        }
    }

    /// Applies the linear map: `(Σ_q x_q e_q) ↦ Σ_p (Σ_q x_q·M[p][q]) e_p`.
    pub fn apply(&self, v: &ModVec) -> Result<ModVec> {
        if v.rank() != self.cols() || v.factors() != self.factors.as_slice() {
            return Err(Error::FactorMismatch {
                left: format!("{:?}^{}", self.factors, self.cols()),
                right: format!("{:?}^{}", v.factors(), v.rank()),
            });
        }
        let mut slots = Vec::with_capacity(self.rows());
        for p in 0..self.rows() {
            let mut acc = Tensor::zero(self.field, &self.factors);
            for q in 0..self.cols() {
                if v.slot(q).is_zero() || self.entries[p][q].is_zero() {
                    continue;
                }
                acc = &acc + &v.slot(q).try_mul(&self.entries[p][q])?;
            }
            slots.push(acc);
        }
        Ok(ModVec { field: self.field, factors: self.factors.clone(), slots })
    }

    /// The matrix of `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleMatrix) -> Result<ModuleMatrix> {
        let columns = (0..inner.cols())
            .map(|q| self.apply(&inner.column(q)))
            .collect::<Result<Vec<_>>>()?;
        ModuleMatrix::from_columns(&columns)
    }

    /// Applies `f` entrywise; the result lives over `factors`.
    pub fn map_entries(
        &self,
        factors: &[Algebra],
        mut f: impl FnMut(&Tensor) -> Result<Tensor>,
    ) -> Result<ModuleMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(&mut f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        ModuleMatrix::new(self.field, factors, entries)
    }

    pub fn is_identity(&self) -> bool {
        *self == ModuleMatrix::identity(self.field, &self.factors, self.rows()) && self.rows() == self.cols()
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(Tensor::render).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// Extension of scalars of a matrix along an algebra map `φ` applied entrywise.
///
/// For free modules the matrix of `φ*f` in the induced bases is `φ(M)`.
pub fn extend_scalars(
    factors: &[Algebra],
    phi: impl FnMut(&Tensor) -> Result<Tensor>,
    m: &ModuleMatrix,
) -> Result<ModuleMatrix> {
    m.map_entries(factors, phi)
}

/// Normalizes a raw sum `Σ_i x_i ⊗_A n_i` in `N_φ ⊗_A M'`, where each `n_i`
/// is a vector over `prefix ⊗ A` (so `M' = (prefix ⊗ A)^n` is free over `A`
/// acting on the last slot). The result lives in `(prefix ⊗ N)^n`:
/// a term `p ⊗ a` of `n_i` at coordinate `q` contributes `p ⊗ x_i·φ(a)`.
pub fn balanced_normalize(
    prefix: &[Algebra],
    pairs: &[(Tensor, ModVec)],
    phi: &LinearMap,
    rank: usize,
) -> Result<ModVec> {
    let field = phi.field();
    let mut n_factors: Vec<Algebra> = prefix.to_vec();
    n_factors.push(phi.domain().clone());
    let mut out_factors: Vec<Algebra> = prefix.to_vec();
    out_factors.extend(phi.codomain().iter().cloned());
    let mut out = ModVec::zero(field, &out_factors, rank);
    for (x, n) in pairs {
        if x.factors() != phi.codomain() {
            return Err(Error::FactorMismatch {
                left: format!("{:?}", x.factors()),
                right: format!("{:?}", phi.codomain()),
            });
        }
        if n.factors() != n_factors.as_slice() || n.rank() != rank {
            return Err(Error::FactorMismatch {
                left: format!("{:?}^{}", n.factors(), n.rank()),
                right: format!("{n_factors:?}^{rank}"),
            });
        }
        for q in 0..rank {
            for (k, c) in n.slot(q).terms() {
                let (pk, ak) = k.split_at(prefix.len());
                let moved = x.try_mul(&phi.apply_key(&ak[0])?)?;
                let mut head = Tensor::zero(field, prefix);
                head.add_term(pk.to_vec(), c.clone());
                out.slots[q] = &out.slots[q] + &head.outer(&moved);
            }
        }
    }
    Ok(out)
}

/// A module map `f: A^n → N^m` over an algebra map `φ: A → N`, given by the
/// images of the basis vectors and extended by `f(Σ a_q e_q) = Σ φ(a_q) f(e_q)`.
#[derive(Clone, Debug)]
pub struct ModuleMapOverPhi {
    phi: LinearMap,
    values: Vec<ModVec>,
}

impl ModuleMapOverPhi {
    pub fn new(phi: &LinearMap, values: Vec<ModVec>) -> Result<ModuleMapOverPhi> {
        for v in &values {
            if v.factors() != phi.codomain() {
                return Err(Error::FactorMismatch {
                    left: format!("{:?}", v.factors()),
                    right: format!("{:?}", phi.codomain()),
                });
            }
        }
        Ok(ModuleMapOverPhi { phi: phi.clone(), values })
    }

    /// The map over `φ` corresponding to the `N`-linear map with matrix `m`.
    pub fn from_matrix(phi: &LinearMap, m: &ModuleMatrix) -> Result<ModuleMapOverPhi> {
        ModuleMapOverPhi::new(phi, (0..m.cols()).map(|q| m.column(q)).collect())
    }

    pub fn phi(&self) -> &LinearMap {
        &self.phi
    }

    pub fn values(&self) -> &[ModVec] {
        &self.values
    }

    /// Matrix of the corresponding `N`-linear map `φ*A^n → N^m`.
    pub fn matrix(&self) -> Result<ModuleMatrix> {
        ModuleMatrix::from_columns(&self.values)
    }

    /// Evaluates on `m ∈ A^n` (a vector over the single factor `A`).
    pub fn evaluate(&self, m: &ModVec) -> Result<ModVec> {
        let target = self.values.first().ok_or_else(|| Error::Usage("rank 0 map".into()))?;
        let mut out = ModVec::zero(self.phi.field(), self.phi.codomain(), target.rank());
        for (q, v) in self.values.iter().enumerate() {
            let coeff = self.phi.apply(&m.slot(q).to_element())?;
            if coeff.is_zero() {
                continue;
            }
            out = out.try_add(&v.left_mul(&coeff)?)?;
        }
        Ok(out)
    }
}

/// The vector `Σ_q a_q e_q` over a single algebra from coordinate elements.
pub fn vector_of(alg: &Algebra, coords: &[Element]) -> ModVec {
    let slots = coords.iter().map(Tensor::from_element).collect();
    ModVec { field: alg.field(), factors: vec![alg.clone()], slots }
}

