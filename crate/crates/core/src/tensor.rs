//! Elements of tensor products `A_1 ⊗ ... ⊗ A_k` over the base field.
//!
//! A tensor with no factors is a scalar; this lets a counit map into the
//! empty product so that `K ⊗ A = A` holds without any bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{add_into, render_terms, Algebra, BasisKey, Element};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    factors: Vec<Algebra>,
    terms: BTreeMap<Vec<BasisKey>, Scalar>,
}

fn factor_names(f: &[Algebra]) -> String {
    let names: Vec<&str> = f.iter().map(Algebra::name).collect();
    format!("[{}]", names.join(", "))
}

impl Tensor {
    pub fn zero(field: Field, factors: &[Algebra]) -> Tensor {
        Tensor { field, factors: factors.to_vec(), terms: BTreeMap::new() }
    }

    /// The unit `1 ⊗ ... ⊗ 1`.
    pub fn unit(field: Field, factors: &[Algebra]) -> Tensor {
        let mut out = Tensor::scalar(field, field.one());
        for a in factors {
            out = out.outer(&Tensor::from_element(&a.one()));
        }
        out
    }

    /// A scalar, i.e. a tensor with no factors.
    pub fn scalar(field: Field, c: Scalar) -> Tensor {
        let mut t = Tensor::zero(field, &[]);
        add_into(&mut t.terms, Vec::new(), c);
        t
    }

    pub fn from_element(e: &Element) -> Tensor {
        let alg = e.algebra().clone();
        let mut t = Tensor::zero(alg.field(), &[alg]);
        for (k, c) in e.terms() {
            t.terms.insert(vec![k.clone()], c.clone());
        }
        t
    }

    /// The pure tensor `e_1 ⊗ ... ⊗ e_k`.
    pub fn pure(field: Field, elements: &[&Element]) -> Tensor {
        elements
            .iter()
            .fold(Tensor::scalar(field, field.one()), |acc, e| acc.outer(&Tensor::from_element(e)))
    }

    pub fn from_terms(
        field: Field,
        factors: &[Algebra],
        terms: impl IntoIterator<Item = (Vec<BasisKey>, Scalar)>,
    ) -> Tensor {
        let mut t = Tensor::zero(field, factors);
        for (k, c) in terms {
            assert_eq!(k.len(), factors.len(), "tensor key has the wrong length");
            for (a, key) in factors.iter().zip(&k) {
                assert!(a.key_valid(key), "key {key:?} is not valid in {}", a.name());
            }
            add_into(&mut t.terms, k, c);
        }
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn factors(&self) -> &[Algebra] {
        &self.factors
    }

    pub fn terms(&self) -> &BTreeMap<Vec<BasisKey>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, key: Vec<BasisKey>, c: Scalar) {
        add_into(&mut self.terms, key, c);
    }

    /// Largest word length appearing in any slot.
    pub fn degree(&self) -> usize {
        self.terms.keys().flatten().map(BasisKey::degree).max().unwrap_or(0)
    }

    /// Largest level of any leveled generator appearing.
    pub fn max_level(&self) -> u32 {
        self.terms
            .keys()
            .flatten()
            .filter_map(BasisKey::as_word)
            .map(|w| w.max_level())
            .max()
            .unwrap_or(0)
    }

    /// The value of a scalar tensor.
    pub fn scalar_value(&self) -> Scalar {
        assert!(self.factors.is_empty(), "not a scalar tensor");
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The element of a one-factor tensor.
    pub fn to_element(&self) -> Element {
        assert_eq!(self.factors.len(), 1, "not a one-factor tensor");
        self.factors[0].from_terms(self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone())))
    }

    fn check_factors(&self, other: &Tensor) -> Result<()> {
        if self.factors != other.factors {
            return Err(Error::FactorMismatch {
                left: factor_names(&self.factors),
                right: factor_names(&other.factors),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_factors(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Tensor) -> Result<Tensor> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.field, &self.factors);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// Componentwise product `(x_1⊗...⊗x_k)(y_1⊗...⊗y_k) = x_1y_1⊗...⊗x_ky_k`.
    pub fn try_mul(&self, other: &Tensor) -> Result<Tensor> {
        self.check_factors(other)?;
        let mut out = Tensor::zero(self.field, &self.factors);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut partial: Vec<(Vec<BasisKey>, Scalar)> = vec![(Vec::new(), ca * cb)];
                for (slot, alg) in self.factors.iter().enumerate() {
                    let prods = alg.mul_keys(&ka[slot], &kb[slot]);
                    let mut next = Vec::with_capacity(partial.len() * prods.len());
                    for (key, c) in &partial {
                        for (pk, pc) in &prods {
                            let mut k = key.clone();
                            k.push(pk.clone());
                            next.push((k, c * pc));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, c);
                }
            }
        }
        Ok(out)
    }

    /// The tensor `self ⊗ other`, concatenating factor lists.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        let mut out = Tensor::zero(self.field, &factors);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut k = ka.clone();
                k.extend(kb.iter().cloned());
                out.add_term(k, ca * cb);
            }
        }
        out
    }

    /// Reorders slots: slot `i` of the result is slot `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.factors.len());
        let factors: Vec<Algebra> = perm.iter().map(|&i| self.factors[i].clone()).collect();
        let mut out = Tensor::zero(self.field, &factors);
        for (k, c) in &self.terms {
            out.add_term(perm.iter().map(|&i| k[i].clone()).collect(), c.clone());
        }
        out
    }

    /// Swaps the two slots of a two-factor tensor.
    pub fn flip(&self) -> Tensor {
        self.permute(&[1, 0])
    }

    /// Multiplies slots `slot` and `slot + 1` together (they must carry the
    /// same algebra), leaving the other slots in place.
    pub fn multiply_slots(&self, slot: usize) -> Result<Tensor> {
        let (a, b) = (&self.factors[slot], &self.factors[slot + 1]);
        if a != b {
            return Err(Error::FactorMismatch {
                left: a.name().to_string(),
                right: b.name().to_string(),
            });
        }
        let mut factors = self.factors.clone();
        factors.remove(slot + 1);
        let mut out = Tensor::zero(self.field, &factors);
        for (k, c) in &self.terms {
            for (pk, pc) in a.mul_keys(&k[slot], &k[slot + 1]) {
                let mut key = k.clone();
                key.remove(slot + 1);
                key[slot] = pk;
                out.add_term(key, c * &pc);
            }
        }
        Ok(out)
    }

    /// Applies `f` to each term's key in `slot`, replacing that slot by the
    /// factors of the images (possibly none).
    pub fn map_slot(
        &self,
        slot: usize,
        new_factors: &[Algebra],
        mut f: impl FnMut(&BasisKey) -> Result<Tensor>,
    ) -> Result<Tensor> {
        let mut factors: Vec<Algebra> = self.factors[..slot].to_vec();
        factors.extend(new_factors.iter().cloned());
        factors.extend(self.factors[slot + 1..].iter().cloned());
        let mut out = Tensor::zero(self.field, &factors);
        let mut cache: BTreeMap<BasisKey, Tensor> = BTreeMap::new();
        for (k, c) in &self.terms {
            if !cache.contains_key(&k[slot]) {
                let img = f(&k[slot])?;
                cache.insert(k[slot].clone(), img);
            }
            let img = &cache[&k[slot]];
            for (ik, ic) in &img.terms {
                let mut key: Vec<BasisKey> = k[..slot].to_vec();
                key.extend(ik.iter().cloned());
                key.extend(k[slot + 1..].iter().cloned());
                out.add_term(key, c * ic);
            }
        }
        Ok(out)
    }

    /// Renders as `coef*(k1|k2|...)` terms joined by ` + `.
    pub fn render(&self) -> String {
        render_terms(&self.terms, |k| {
            let parts: Vec<String> =
                self.factors.iter().zip(k).map(|(a, key)| a.key_name(key)).collect();
            format!("({})", parts.join("|"))
        })
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    /// Panics on mismatched factor lists; see [`Tensor::try_add`].
    fn add(self, rhs: &Tensor) -> Tensor {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Tensor {
    type Output = Tensor;
    fn mul(self, rhs: &Tensor) -> Tensor {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        self.scale(&-&self.field.one())
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.render(), factor_names(&self.factors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GenId;

    #[test]
    fn componentwise_product_with_unit_factors() {
        let q = Field::Rational;
        let h = Algebra::free("H", q, &["a"]);
        let a00 = h.gen(GenId::leveled("a", 0, 0, 0));
        let a11 = h.gen(GenId::leveled("a", 0, 1, 1));
        let x = Tensor::pure(q, &[&a00, &h.one()]);
        let y = Tensor::pure(q, &[&h.one(), &a11]);
        assert_eq!(&x * &y, Tensor::pure(q, &[&a00, &a11]));
        assert_eq!((&x * &y).to_string(), "1*(a[0;0,0]|a[0;1,1])");
    }

    #[test]
    fn multiply_and_permute_slots() {
        let q = Field::Rational;
        let r = Algebra::free("R", q, &["y", "z"]);
        let y = r.gen(GenId::named("y"));
        let z = r.gen(GenId::named("z"));
        let t = Tensor::pure(q, &[&y, &z, &y]);
        assert_eq!(t.multiply_slots(0).unwrap(), Tensor::pure(q, &[&(&y * &z), &y]));
        assert_eq!(t.permute(&[1, 0, 2]), Tensor::pure(q, &[&z, &y, &y]));
        assert!(Tensor::unit(q, &[]).scalar_value().is_one());
    }

    #[test]
    fn mismatched_factors_are_rejected() {
        let q = Field::Rational;
        let r = Algebra::free("R", q, &["y"]);
        let s = Algebra::free("S", q, &["y"]);
        let x = Tensor::unit(q, &[r]);
        let y = Tensor::unit(q, &[s]);
        assert!(matches!(x.try_add(&y), Err(Error::FactorMismatch { .. })));
    }
}
