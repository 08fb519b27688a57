//! The two comonads attached to a coaction `δ: A → H ⊗ A`, evaluated on a
//! free module `M = A^n`:
//!
//! * `G(M) = H ⊗ M` with `A` acting through `δ`; comultiplication `Δ ⊗ id`,
//!   counit `ε ⊗ id`.
//! * `H(M) = ν_* δ^* M`, i.e. `(H⊗A)_δ ⊗_A M` with `A` acting through `ν`.
//!   `H^k(M)` is stored as `(H^{⊗k} ⊗ A)^n` with the innermost application
//!   in slot 0, via `(h⊗a) ⊗ (h'⊗a') = h' ⊗ h·a'₍₋₁₎ ⊗ a·a'₍₀₎`.
//!   The comultiplication `H → HH` is `Δ ⊗ id` and the counit `ε ⊗ id`.
//!
//! Comodules over `H` are exactly the neb matrices; [`check_comodule_equivalence`]
//! computes the comodule conditions through `H(θ)` and compares them with
//! [`check_neb`] element by element.

use crate::algebra::Element;
use crate::coaction::Coaction;
use crate::equivariance::{check_neb, NebMatrix};
use crate::error::Result;
use crate::judge::Judge;
use crate::linear_map::map_one_slot;
use crate::module::{balanced_normalize, ModVec};
use crate::report::{CheckEntry, Status};
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

/// Vectors `(h⊗a)·e_q` of `(H⊗A)^n` with `deg h + deg a ≤ max_degree`.
pub fn pair_spanning_set(
    c: &Coaction,
    hs: &[Element],
    as_: &[Element],
    rank: usize,
    max_degree: usize,
) -> Vec<(String, ModVec)> {
    let mut out = Vec::new();
    for h in hs {
        for a in as_ {
            if h.degree() + a.degree() > max_degree {
                continue;
            }
            let t = Tensor::pure(c.hopf().field(), &[h, a]);
            for q in 0..rank {
                out.push((format!("{}|{}*e_{q}", label(h), label(a)), ModVec::single(t.clone(), rank, q)));
            }
        }
    }
    out
}

fn on_slot(map: &crate::linear_map::LinearMap, slot: usize, v: &ModVec, factors: &[crate::algebra::Algebra]) -> Result<ModVec> {
    v.map_slots(factors, |t| map_one_slot(map, slot, t))
}

/// Axioms of both comonads on the spanning vectors of `(H⊗A)^n`, plus the
/// compatibility of the structure maps with the relevant `A`-actions for
/// every `b` in `factors`.
pub fn check_comonads(
    c: &Coaction,
    spanning: &[(String, ModVec)],
    factors: &[Element],
    judge: &Judge,
    scenario: &str,
) -> Result<Vec<CheckEntry>> {
    let h = c.hopf();
    let (delta, eps) = (h.delta(), h.counit());
    let pair = c.pair();
    let triple = c.triple();
    let mut quad = vec![h.algebra().clone()];
    quad.extend(triple.iter().cloned());
    let mut out = Vec::new();
    for (name, x) in spanning {
        let dx = on_slot(delta, 0, x, &triple)?;
        // G: Δ_{GM} splits the outer copy (slot 0), G(Δ_M) the inner one.
        let split_first = on_slot(delta, 0, &dx, &quad)?;
        let split_second = on_slot(delta, 1, &dx, &quad)?;
        out.push(judge.check(scenario, "g-coassociativity", name, split_first.clone(), split_second.clone())?);
        out.push(judge.check(scenario, "g-counit-outer", name, on_slot(eps, 0, &dx, &pair)?, x.clone())?);
        out.push(judge.check(scenario, "g-counit-inner", name, on_slot(eps, 1, &dx, &pair)?, x.clone())?);
        // H: slot 0 is innermost, so H(c_M) splits slot 0 and c_{H(M)} slot 1.
        out.push(judge.check(scenario, "h-coassociativity", name, split_second, split_first)?);
        out.push(judge.check(scenario, "h-counit-outer", name, on_slot(eps, 1, &dx, &pair)?, x.clone())?);
        out.push(judge.check(scenario, "h-counit-inner", name, on_slot(eps, 0, &dx, &pair)?, x.clone())?);
        let ex = on_slot(eps, 0, x, &[c.algebra().clone()])?;
        for b in factors {
            let db = c.apply(b)?;
            let tb = Tensor::from_element(b);
            let gamma_b = c.gamma(b)?;
            let iterated_b = c.on_last(&db)?;
            let element = format!("{} . {name}", label(b));
            // G(M): A acts by δ(b)·X, on G(G(M)) by (id⊗δ)δ(b).
            let bx = x.left_mul(&db)?;
            let lhs = on_slot(delta, 0, &bx, &triple)?;
            let rhs = dx.left_mul(&iterated_b)?;
            out.push(judge.check(scenario, "g-comultiplication-linear", &element, lhs, rhs)?);
            let lhs = on_slot(eps, 0, &bx, &[c.algebra().clone()])?;
            out.push(judge.check(scenario, "g-counit-linear", &element, lhs, ex.left_mul(&tb)?)?);
            // H(M) = (H⊗A)_δ ⊗_A M: Δ⊗id and ε⊗id respect the balanced relation.
            let xb = x.map_slots(&pair, |t| t.try_mul(&db))?;
            let lhs = on_slot(delta, 0, &xb, &triple)?;
            let rhs = dx.map_slots(&triple, |t| t.try_mul(&gamma_b))?;
            out.push(judge.check(scenario, "h-comultiplication-balanced", &element, lhs, rhs)?);
            let lhs = on_slot(eps, 0, &xb, &[c.algebra().clone()])?;
            let rhs = ex.map_slots(&[c.algebra().clone()], |t| t.try_mul(&tb))?;
            out.push(judge.check(scenario, "h-counit-balanced", &element, lhs, rhs)?);
        }
    }
    Ok(out)
}

/// `H(θ)` on an element of `H(M) = (H⊗A)^n`, landing in `H(H(M))`.
pub fn h_of_theta(theta: &NebMatrix, x: &ModVec) -> Result<ModVec> {
    let c = theta.coaction();
    let n = theta.rank();
    let pairs: Vec<(Tensor, ModVec)> = (0..n).map(|p| (x.slot(p).clone(), theta.matrix().column(p))).collect();
    balanced_normalize(&[c.hopf().algebra().clone()], &pairs, c.map(), n)
}

/// The comodule conditions for `θ: M → H(M)`:
/// `c_M ∘ θ = H(θ) ∘ θ` and `(ε⊗id) ∘ θ = id`, on every spanning vector,
/// followed by one agreement entry per vector comparing the outcome with
/// [`check_neb`] (same statuses and same witnesses).
pub fn check_comodule_equivalence(
    theta: &NebMatrix,
    spanning: &[(String, ModVec)],
    judge: &Judge,
    scenario: &str,
) -> Result<Vec<CheckEntry>> {
    let c = theta.coaction();
    let triple = c.triple();
    let neb = check_neb(theta, spanning, judge, scenario)?;
    let mut out = Vec::new();
    for (i, (name, m)) in spanning.iter().enumerate() {
        let x = theta.theta(m)?;
        let lhs = h_of_theta(theta, &x)?;
        let rhs = on_slot(c.hopf().delta(), 0, &x, &triple)?;
        let coassoc = judge.check(scenario, "comodule-coassociativity", name, lhs, rhs)?;
        let lhs = on_slot(c.hopf().counit(), 0, &x, &[c.algebra().clone()])?;
        let counit = judge.check(scenario, "comodule-counit", name, lhs, m.clone())?;
        let same = |a: &CheckEntry, b: &CheckEntry| {
            (a.status == Status::Fail) == (b.status == Status::Fail) && a.witness == b.witness
        };
        let agrees = same(&coassoc, &neb[2 * i]) && same(&counit, &neb[2 * i + 1]);
        let verdict = |e: &CheckEntry| e.status.label().to_string();
        let note = format!(
            "comodule {}/{} vs neb {}/{}",
            verdict(&coassoc),
            verdict(&counit),
            verdict(&neb[2 * i]),
            verdict(&neb[2 * i + 1])
        );
        out.push(coassoc);
        out.push(counit);
        out.push(CheckEntry::assertion(scenario, "comodule-agrees-with-neb", name, agrees, note));
    }
    Ok(out)
}
