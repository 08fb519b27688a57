//! Equivariant structures on a free module `M = A^n` over a comodule algebra:
//! neb matrices `θ` (maps `M → (H⊗A)_δ ⊗_A M` over `ν`), relative Hopf
//! module coactions `δ̄: M → H ⊗ M` over `δ`, and the passage between them.
//!
//! Both `(H⊗A)_δ ⊗_A M` and `H ⊗ M` are identified with `(H⊗A)^n`, so each
//! structure is an `n × n` matrix over `H ⊗ A`: column `q` is the image of
//! `e_q`. Read as an `(H⊗A)`-linear map, the matrix of `θ` is `Θ` and the
//! matrix of `δ̄` is `ρ`.

use std::collections::HashMap;

use crate::algebra::{Algebra, BasisKey, Element};
use crate::coaction::Coaction;
use crate::error::{Error, Result};
use crate::judge::Judge;
use crate::linalg;
use crate::linear_map::map_one_slot;
use crate::module::{ModVec, ModuleMapOverPhi, ModuleMatrix};
use crate::report::CheckEntry;
use crate::scalar::Scalar;
use crate::tensor::Tensor;

fn label(x: &Element) -> String {
    if x.terms().len() == 1 {
        let (k, c) = x.terms().iter().next().expect("one term");
        if c.is_one() {
            return x.algebra().key_name(k);
        }
    }
    format!("({x})")
}

/// The vectors `a·e_q` for `a` in `elements`, labelled `a*e_q` (`e_q` for
/// `a = 1`).
pub fn module_spanning_set(algebra: &Algebra, elements: &[Element], rank: usize) -> Vec<(String, ModVec)> {
    let mut out = Vec::new();
    for a in elements {
        for q in 0..rank {
            let name = if *a == algebra.one() { format!("e_{q}") } else { format!("{}*e_{q}", label(a)) };
            out.push((name, ModVec::single(Tensor::from_element(a), rank, q)));
        }
    }
    out
}

/// A neb matrix: `θ(a·e_q) = Σ_p ν(a)·T[p][q] e_p`.
#[derive(Clone, Debug)]
pub struct NebMatrix {
    name: String,
    coaction: Coaction,
    matrix: ModuleMatrix,
}

impl NebMatrix {
    pub fn new(name: &str, coaction: &Coaction, entries: Vec<Vec<Tensor>>) -> Result<NebMatrix> {
        let matrix = ModuleMatrix::new(coaction.hopf().field(), &coaction.pair(), entries)?;
        NebMatrix::from_matrix(name, coaction, matrix)
    }

    pub fn from_matrix(name: &str, coaction: &Coaction, matrix: ModuleMatrix) -> Result<NebMatrix> {
        if matrix.factors() != coaction.pair().as_slice() || matrix.rows() != matrix.cols() {
            return Err(Error::FactorMismatch {
                left: format!("{:?} {}x{}", matrix.factors(), matrix.rows(), matrix.cols()),
                right: format!("{:?} square", coaction.pair()),
            });
        }
        Ok(NebMatrix { name: name.to_string(), coaction: coaction.clone(), matrix })
    }

    /// `θ(e_q) = e_q` for all `q`.
    pub fn trivial(coaction: &Coaction, rank: usize) -> NebMatrix {
        let m = ModuleMatrix::identity(coaction.hopf().field(), &coaction.pair(), rank);
        NebMatrix::from_matrix("trivial", coaction, m).expect("square identity")
    }

    /// `T[p][q] = h_pq ⊗ 1` from a square matrix of elements of `H`.
    pub fn from_hopf_entries(name: &str, coaction: &Coaction, entries: &[Vec<Element>]) -> Result<NebMatrix> {
        NebMatrix::new(name, coaction, lift_entries(coaction, entries))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coaction(&self) -> &Coaction {
        &self.coaction
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// The matrix of `Θ`.
    pub fn matrix(&self) -> &ModuleMatrix {
        &self.matrix
    }

    /// A copy with one entry replaced.
    pub fn with_entry(&self, name: &str, p: usize, q: usize, entry: Tensor) -> Result<NebMatrix> {
        let mut entries: Vec<Vec<Tensor>> = (0..self.rank())
            .map(|r| (0..self.rank()).map(|c| self.matrix.entry(r, c).clone()).collect())
            .collect();
        entries[p][q] = entry;
        NebMatrix::new(name, &self.coaction, entries)
    }

    /// `θ` as a map over `ν`.
    pub fn as_map(&self) -> Result<ModuleMapOverPhi> {
        ModuleMapOverPhi::from_matrix(self.coaction.nu(), &self.matrix)
    }

    /// `θ(m)` for `m ∈ A^n`.
    pub fn theta(&self, m: &ModVec) -> Result<ModVec> {
        self.as_map()?.evaluate(m)
    }

    /// The two sides of the coassociativity condition at `m`, in
    /// `(H⊗H⊗A)^n`: with `θ(m) = Σ_p X_p e_p`,
    /// `Σ_p (1⊗X_p)·(id⊗δ)(T[r][p])` against `(Δ⊗id)(X_r)`.
    pub fn coassociativity_sides(&self, m: &ModVec) -> Result<(ModVec, ModVec)> {
        let c = &self.coaction;
        let field = c.hopf().field();
        let triple = c.triple();
        let x = self.theta(m)?;
        let one_h = Tensor::from_element(&c.hopf().algebra().one());
        let n = self.rank();
        let mut lhs = Vec::with_capacity(n);
        let mut rhs = Vec::with_capacity(n);
        for r in 0..n {
            let mut acc = Tensor::zero(field, &triple);
            for p in 0..n {
                let entry = self.matrix.entry(r, p);
                if x.slot(p).is_zero() || entry.is_zero() {
                    continue;
                }
                acc = &acc + &one_h.outer(x.slot(p)).try_mul(&c.on_last(entry)?)?;
            }
            lhs.push(acc);
            rhs.push(map_one_slot(c.hopf().delta(), 0, x.slot(r))?);
        }
        Ok((ModVec::from_slots(field, &triple, lhs)?, ModVec::from_slots(field, &triple, rhs)?))
    }

    /// The two sides of the counit condition at `m`, in `A^n`:
    /// `Σ_p (ε⊗id)(X_p) e_p` against `m`.
    pub fn counit_sides(&self, m: &ModVec) -> Result<(ModVec, ModVec)> {
        let c = &self.coaction;
        let x = self.theta(m)?;
        let lhs = x.map_slots(&[c.algebra().clone()], |t| map_one_slot(c.hopf().counit(), 0, t))?;
        Ok((lhs, m.clone()))
    }
}

fn lift_entries(coaction: &Coaction, entries: &[Vec<Element>]) -> Vec<Vec<Tensor>> {
    let one_a = Tensor::from_element(&coaction.algebra().one());
    entries
        .iter()
        .map(|row| row.iter().map(|h| Tensor::from_element(h).outer(&one_a)).collect())
        .collect()
}

/// Checks both neb conditions on every vector of `spanning`.
pub fn check_neb(
    theta: &NebMatrix,
    spanning: &[(String, ModVec)],
    judge: &Judge,
    scenario: &str,
) -> Result<Vec<CheckEntry>> {
    let mut out = Vec::new();
    for (name, m) in spanning {
        let (lhs, rhs) = theta.coassociativity_sides(m)?;
        out.push(judge.check(scenario, "neb-coassociativity", name, lhs, rhs)?);
        let (lhs, rhs) = theta.counit_sides(m)?;
        out.push(judge.check(scenario, "neb-counit", name, lhs, rhs)?);
    }
    Ok(out)
}

/// A relative Hopf module coaction: `δ̄(a·e_q) = Σ_p δ(a)·D[p][q] e_p`.
#[derive(Clone, Debug)]
pub struct HopfModuleMatrix {
    name: String,
    coaction: Coaction,
    matrix: ModuleMatrix,
}

impl HopfModuleMatrix {
    pub fn new(name: &str, coaction: &Coaction, entries: Vec<Vec<Tensor>>) -> Result<HopfModuleMatrix> {
        let matrix = ModuleMatrix::new(coaction.hopf().field(), &coaction.pair(), entries)?;
        HopfModuleMatrix::from_matrix(name, coaction, matrix)
    }

    pub fn from_matrix(name: &str, coaction: &Coaction, matrix: ModuleMatrix) -> Result<HopfModuleMatrix> {
        if matrix.factors() != coaction.pair().as_slice() || matrix.rows() != matrix.cols() {
            return Err(Error::FactorMismatch {
                left: format!("{:?} {}x{}", matrix.factors(), matrix.rows(), matrix.cols()),
                right: format!("{:?} square", coaction.pair()),
            });
        }
        Ok(HopfModuleMatrix { name: name.to_string(), coaction: coaction.clone(), matrix })
    }

    /// `δ̄(e_q) = 1 ⊗ e_q`.
    pub fn trivial(coaction: &Coaction, rank: usize) -> HopfModuleMatrix {
        let m = ModuleMatrix::identity(coaction.hopf().field(), &coaction.pair(), rank);
        HopfModuleMatrix::from_matrix("trivial", coaction, m).expect("square identity")
    }

    /// `D[p][q] = h_pq ⊗ 1`.
    pub fn from_hopf_entries(name: &str, coaction: &Coaction, entries: &[Vec<Element>]) -> Result<HopfModuleMatrix> {
        HopfModuleMatrix::new(name, coaction, lift_entries(coaction, entries))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coaction(&self) -> &Coaction {
        &self.coaction
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// The matrix of `ρ: δ*M → H ⊗ M`.
    pub fn matrix(&self) -> &ModuleMatrix {
        &self.matrix
    }

    /// A copy with column `q` set to zero.
    pub fn without_column(&self, name: &str, q: usize) -> Result<HopfModuleMatrix> {
        let zero = Tensor::zero(self.coaction.hopf().field(), &self.coaction.pair());
        let entries = (0..self.rank())
            .map(|r| (0..self.rank()).map(|c| if c == q { zero.clone() } else { self.matrix.entry(r, c).clone() }).collect())
            .collect();
        HopfModuleMatrix::new(name, &self.coaction, entries)
    }

    pub fn as_map(&self) -> Result<ModuleMapOverPhi> {
        ModuleMapOverPhi::from_matrix(self.coaction.map(), &self.matrix)
    }

    /// `δ̄(m)` for `m ∈ A^n`, in `(H⊗A)^n ≅ H ⊗ M`.
    pub fn coact(&self, m: &ModVec) -> Result<ModVec> {
        self.as_map()?.evaluate(m)
    }

    /// `(Δ⊗id_M)(δ̄ m)` against `(id_H⊗δ̄)(δ̄ m)` in `(H⊗H⊗A)^n`.
    pub fn coassociativity_sides(&self, m: &ModVec) -> Result<(ModVec, ModVec)> {
        let c = &self.coaction;
        let field = c.hopf().field();
        let triple = c.triple();
        let y = self.coact(m)?;
        let one_h = Tensor::from_element(&c.hopf().algebra().one());
        let n = self.rank();
        let mut lhs = Vec::with_capacity(n);
        let mut rhs = Vec::with_capacity(n);
        for r in 0..n {
            lhs.push(map_one_slot(c.hopf().delta(), 0, y.slot(r))?);
            let mut acc = Tensor::zero(field, &triple);
            for p in 0..n {
                let entry = self.matrix.entry(r, p);
                if y.slot(p).is_zero() || entry.is_zero() {
                    continue;
                }
                acc = &acc + &c.on_last(y.slot(p))?.try_mul(&one_h.outer(entry))?;
            }
            rhs.push(acc);
        }
        Ok((ModVec::from_slots(field, &triple, lhs)?, ModVec::from_slots(field, &triple, rhs)?))
    }

    /// `(ε⊗id_M)(δ̄ m)` against `m`.
    pub fn counit_sides(&self, m: &ModVec) -> Result<(ModVec, ModVec)> {
        let c = &self.coaction;
        let y = self.coact(m)?;
        let lhs = y.map_slots(&[c.algebra().clone()], |t| map_one_slot(c.hopf().counit(), 0, t))?;
        Ok((lhs, m.clone()))
    }
}

/// Checks the Hopf module axioms: coassociativity and counit on `spanning`,
/// and `δ̄(a·m) = δ(a)·δ̄(m)` for `a` in `factors`.
pub fn check_hopfmodule(
    d: &HopfModuleMatrix,
    spanning: &[(String, ModVec)],
    factors: &[Element],
    judge: &Judge,
    scenario: &str,
) -> Result<Vec<CheckEntry>> {
    let c = d.coaction();
    let mut out = Vec::new();
    for (name, m) in spanning {
        let (lhs, rhs) = d.coassociativity_sides(m)?;
        out.push(judge.check(scenario, "hopf-module-coassociativity", name, lhs, rhs)?);
        let (lhs, rhs) = d.counit_sides(m)?;
        out.push(judge.check(scenario, "hopf-module-counit", name, lhs, rhs)?);
        for a in factors {
            let am = m.left_mul(&Tensor::from_element(a))?;
            let lhs = d.coact(&am)?;
            let rhs = d.coact(m)?.left_mul(&c.apply(a)?)?;
            out.push(judge.check(scenario, "hopf-module-linearity", &format!("{} * {name}", label(a)), lhs, rhs)?);
        }
    }
    Ok(out)
}

/// `ρ := σ*Θ` (entrywise `σ`), for commutative `H`.
pub fn rho_from_theta_commutative(theta: &NebMatrix) -> Result<HopfModuleMatrix> {
    let c = theta.coaction();
    let sigma = c.sigma_hom()?;
    let m = theta.matrix().map_entries(&c.pair(), |t| sigma(t))?;
    HopfModuleMatrix::from_matrix(&format!("σ*{}", theta.name()), c, m)
}

/// `Θ := σ*ρ` (entrywise `σ`), for commutative `H`.
pub fn theta_from_hopfmodule_commutative(d: &HopfModuleMatrix) -> Result<NebMatrix> {
    let c = d.coaction();
    let sigma = c.sigma_hom()?;
    let m = d.matrix().map_entries(&c.pair(), |t| sigma(t))?;
    NebMatrix::from_matrix(&format!("σ*{}", d.name()), c, m)
}

/// Flattening of `(A_1⊗...⊗A_k)^n` into coordinates over the field.
struct Flattener {
    factors: Vec<Algebra>,
    rank: usize,
    keys: Vec<Vec<BasisKey>>,
    index: HashMap<Vec<BasisKey>, usize>,
}

impl Flattener {
    fn new(factors: &[Algebra], rank: usize) -> Result<Flattener> {
        let mut keys: Vec<Vec<BasisKey>> = vec![Vec::new()];
        for a in factors {
            let basis = a.basis().map_err(|_| {
                Error::NoCertifiedInverse(format!("{} has no finite basis, so no inverse can be certified", a.name()))
            })?;
            keys = keys
                .into_iter()
                .flat_map(|prefix| {
                    basis.iter().map(move |k| {
                        let mut v = prefix.clone();
                        v.push(k.clone());
                        v
                    })
                })
                .collect();
        }
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Ok(Flattener { factors: factors.to_vec(), rank, keys, index })
    }

    fn dim(&self) -> usize {
        self.rank * self.keys.len()
    }

    fn flatten(&self, v: &ModVec) -> Vec<Scalar> {
        let field = v.field();
        let mut out = vec![field.zero(); self.dim()];
        for q in 0..self.rank {
            for (k, c) in v.slot(q).terms() {
                out[q * self.keys.len() + self.index[k]] = c.clone();
            }
        }
        out
    }

    fn unflatten(&self, field: crate::scalar::Field, x: &[Scalar]) -> ModVec {
        let slots = (0..self.rank)
            .map(|q| {
                Tensor::from_terms(
                    field,
                    &self.factors,
                    self.keys.iter().enumerate().map(|(i, k)| (k.clone(), x[q * self.keys.len() + i].clone())),
                )
            })
            .collect();
        ModVec::from_slots(field, &self.factors, slots).expect("factors match")
    }

    fn basis_vector(&self, field: crate::scalar::Field, i: usize) -> ModVec {
        let mut x = vec![field.zero(); self.dim()];
        x[i] = field.one();
        self.unflatten(field, &x)
    }
}

/// The inverse of a module map given by its matrix, found by an exact solve
/// of the underlying finite-dimensional linear map and then certified by
/// checking both composites. Free (infinite-dimensional) carriers are refused.
pub fn invert(matrix: &ModuleMatrix) -> Result<ModuleMatrix> {
    let field = matrix.field();
    let n = matrix.rows();
    let flat = Flattener::new(matrix.factors(), n)?;
    let dim = flat.dim();
    let mut rows = vec![vec![field.zero(); dim]; dim];
    for col in 0..dim {
        let image = flat.flatten(&matrix.apply(&flat.basis_vector(field, col))?);
        for (row, value) in image.into_iter().enumerate() {
            rows[row][col] = value;
        }
    }
    let inv = linalg::inverse(field, &rows).ok_or_else(|| Error::NoCertifiedInverse("the map is singular".into()))?;
    let columns: Vec<ModVec> = (0..n)
        .map(|q| {
            let e = flat.flatten(&ModVec::basis(field, matrix.factors(), n, q));
            let x: Vec<Scalar> = (0..dim)
                .map(|i| e.iter().zip(&inv[i]).fold(field.zero(), |acc, (a, b)| &acc + &(a * b)))
                .collect();
            flat.unflatten(field, &x)
        })
        .collect();
    let candidate = ModuleMatrix::from_columns(&columns)?;
    if !candidate.compose(matrix)?.is_identity() || !matrix.compose(&candidate)?.is_identity() {
        return Err(Error::NoCertifiedInverse("the linear inverse is not a module map".into()));
    }
    Ok(candidate)
}

/// The Hopf module coaction corresponding via `δ` to `Θ⁻¹`.
pub fn hopfmodule_from_theta(theta: &NebMatrix) -> Result<HopfModuleMatrix> {
    let inv = invert(theta.matrix())?;
    HopfModuleMatrix::from_matrix(&format!("{}⁻¹", theta.name()), theta.coaction(), inv)
}

/// The neb matrix whose `Θ` is `ρ⁻¹`.
pub fn theta_from_hopfmodule(d: &HopfModuleMatrix) -> Result<NebMatrix> {
    let inv = invert(d.matrix())?;
    NebMatrix::from_matrix(&format!("{}⁻¹", d.name()), d.coaction(), inv)
}

/// Compares `outer ∘ inner` with the identity column by column.
pub fn check_composite_identity(
    outer: &ModuleMatrix,
    inner: &ModuleMatrix,
    judge: &Judge,
    scenario: &str,
    check: &str,
) -> Result<Vec<CheckEntry>> {
    let composite = outer.compose(inner)?;
    let id = ModuleMatrix::identity(inner.field(), inner.factors(), inner.cols());
    (0..inner.cols())
        .map(|q| judge.check(scenario, check, &format!("e_{q}"), composite.column(q), id.column(q)))
        .collect()
}

/// Entries `h_pq = Σ_g ρ(g)_pq d_g` of the left regular representation in
/// the function algebra of a group: `h_pq = d_{p·q⁻¹}`.
pub fn regular_representation_coefficients(group: &crate::hopf::FiniteGroup, functions: &Algebra) -> Vec<Vec<Element>> {
    let n = group.order();
    (0..n)
        .map(|p| (0..n).map(|q| functions.basis_element(group.mul(p, group.inv(q)))).collect())
        .collect()
}

/// The group-like elements `Σ_g χ(g) d_g` of a function algebra, one per
/// character `χ: G → K^×`.
pub fn characters(group: &crate::hopf::FiniteGroup, functions: &Algebra) -> Vec<Element> {
    let field = functions.field();
    let n = group.order();
    let roots = field.roots_of_unity(n as u64);
    let mut out = Vec::new();
    let mut values: Vec<Option<Scalar>> = vec![None; n];
    fn extend(
        group: &crate::hopf::FiniteGroup,
        roots: &[Scalar],
        values: &mut Vec<Option<Scalar>>,
        next: usize,
        out: &mut Vec<Vec<Scalar>>,
    ) {
        let n = group.order();
        if next == n {
            let v: Vec<Scalar> = values.iter().map(|x| x.clone().expect("assigned")).collect();
            let ok = (0..n).all(|a| (0..n).all(|b| v[group.mul(a, b)] == &v[a] * &v[b]));
            if ok {
                out.push(v);
            }
            return;
        }
        for r in roots {
            values[next] = Some(r.clone());
            let consistent = (0..=next).all(|a| {
                (0..=next).all(|b| {
                    let ab = group.mul(a, b);
                    ab > next || values[ab] == Some(values[a].as_ref().unwrap() * values[b].as_ref().unwrap())
                })
            });
            if consistent {
                extend(group, roots, values, next + 1, out);
            }
        }
        values[next] = None;
    }
    let mut chars = Vec::new();
    extend(group, &roots, &mut values, 0, &mut chars);
    chars.sort_by_key(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    for v in chars {
        out.push(functions.from_terms(v.into_iter().enumerate().map(|(i, c)| (BasisKey::Index(i as u32), c))));
    }
    out
}
