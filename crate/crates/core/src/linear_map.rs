//! Linear maps out of an algebra, given on a basis or on generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algebra::{Algebra, BasisKey, Element, GenId};
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::tensor::Tensor;

/// How the given images extend to the whole domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    /// Linear extension from basis images (table domains only).
    Linear,
    /// Multiplicative extension: `f(g_1...g_k) = f(g_1)...f(g_k)`.
    AlgebraHom,
    /// Reversed multiplicative extension: `f(g_1...g_k) = f(g_k)...f(g_1)`.
    AlgebraAntiHom,
}

type Rule = dyn Fn(&GenId) -> Option<Tensor> + Send + Sync;

enum Images {
    Identity,
    Basis(Vec<Tensor>),
    Generators(BTreeMap<GenId, Tensor>),
    Rule(Box<Rule>, Mutex<HashMap<GenId, Tensor>>),
}

struct Inner {
    name: String,
    domain: Algebra,
    codomain: Vec<Algebra>,
    extension: Extension,
    images: Images,
}

/// A linear map `domain → codomain[0] ⊗ ... ⊗ codomain[k-1]`.
///
/// On a table domain the map is evaluated linearly from basis images,
/// whatever its declared extension (the declaration then records a property
/// of the map). On a free domain the map is evaluated multiplicatively from
/// generator images, and a generator without an image is an error.
#[derive(Clone)]
pub struct LinearMap(Arc<Inner>);

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap({}: {} -> {:?})", self.0.name, self.0.domain, self.0.codomain)
    }
}

impl LinearMap {
    fn build(
        name: &str,
        domain: &Algebra,
        codomain: &[Algebra],
        extension: Extension,
        images: Images,
    ) -> LinearMap {
        LinearMap(Arc::new(Inner {
            name: name.to_string(),
            domain: domain.clone(),
            codomain: codomain.to_vec(),
            extension,
            images,
        }))
    }

    pub fn identity(alg: &Algebra) -> LinearMap {
        LinearMap::build("id", alg, &[alg.clone()], Extension::AlgebraHom, Images::Identity)
    }

    /// A map on a table algebra from the images of its basis elements.
    pub fn on_basis(
        name: &str,
        domain: &Algebra,
        codomain: &[Algebra],
        extension: Extension,
        images: Vec<Tensor>,
    ) -> Result<LinearMap> {
        let dim = domain.dim().ok_or_else(|| Error::InfiniteBasis(domain.name().to_string()))?;
        if images.len() != dim {
            return Err(Error::InvalidTable(format!(
                "{name}: {} basis images for a {dim}-dimensional domain",
                images.len()
            )));
        }
        for t in &images {
            check_codomain(name, t, codomain)?;
        }
        Ok(LinearMap::build(name, domain, codomain, extension, Images::Basis(images)))
    }

    /// A (anti)homomorphism on a free algebra from a finite table of
    /// generator images.
    pub fn on_generators(
        name: &str,
        domain: &Algebra,
        codomain: &[Algebra],
        extension: Extension,
        images: BTreeMap<GenId, Tensor>,
    ) -> Result<LinearMap> {
        check_free_extension(name, domain, extension)?;
        for t in images.values() {
            check_codomain(name, t, codomain)?;
        }
        Ok(LinearMap::build(name, domain, codomain, extension, Images::Generators(images)))
    }

    /// A (anti)homomorphism on a free algebra whose generator images are
    /// computed on demand by `rule` and memoized. `rule` returns `None` for
    /// generators outside the map's definition domain.
    pub fn from_rule(
        name: &str,
        domain: &Algebra,
        codomain: &[Algebra],
        extension: Extension,
        rule: impl Fn(&GenId) -> Option<Tensor> + Send + Sync + 'static,
    ) -> Result<LinearMap> {
        check_free_extension(name, domain, extension)?;
        Ok(LinearMap::build(
            name,
            domain,
            codomain,
            extension,
            Images::Rule(Box::new(rule), Mutex::new(HashMap::new())),
        ))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn domain(&self) -> &Algebra {
        &self.0.domain
    }

    pub fn codomain(&self) -> &[Algebra] {
        &self.0.codomain
    }

    pub fn extension(&self) -> Extension {
        self.0.extension
    }

    pub fn field(&self) -> Field {
        self.0.domain.field()
    }

    /// Image of a single generator of a free domain.
    pub fn generator_image(&self, g: &GenId) -> Result<Tensor> {
        let missing = || Error::MissingGeneratorImage {
            map: self.0.name.clone(),
            generator: g.to_string(),
        };
        match &self.0.images {
            Images::Identity => Ok(Tensor::from_element(&self.0.domain.gen(*g))),
            Images::Generators(m) => m.get(g).cloned().ok_or_else(missing),
            Images::Rule(rule, cache) => {
                if let Some(t) = cache.lock().expect("map cache poisoned").get(g) {
                    return Ok(t.clone());
                }
                let t = rule(g).ok_or_else(missing)?;
                check_codomain(&self.0.name, &t, &self.0.codomain)?;
                cache.lock().expect("map cache poisoned").insert(*g, t.clone());
                Ok(t)
            }
            Images::Basis(_) => Err(missing()),
        }
    }

    /// Image of a basis key of the domain.
    pub fn apply_key(&self, key: &BasisKey) -> Result<Tensor> {
        if let Images::Identity = self.0.images {
            let mut t = Tensor::zero(self.field(), &self.0.codomain);
            t.add_term(vec![key.clone()], self.field().one());
            return Ok(t);
        }
        match key {
            BasisKey::Index(i) => match &self.0.images {
                Images::Basis(v) => Ok(v[*i as usize].clone()),
                _ => unreachable!("table domains always carry basis images"),
            },
            BasisKey::Word(w) => {
                let mut acc = Tensor::unit(self.field(), &self.0.codomain);
                let anti = self.0.extension == Extension::AlgebraAntiHom;
                for g in &w.0 {
                    let img = self.generator_image(g)?;
                    acc = if anti { img.try_mul(&acc)? } else { acc.try_mul(&img)? };
                }
                Ok(acc)
            }
        }
    }

    pub fn apply(&self, x: &Element) -> Result<Tensor> {
        if x.algebra() != &self.0.domain {
            return Err(Error::OwnerMismatch {
                left: self.0.domain.name().to_string(),
                right: x.algebra().name().to_string(),
            });
        }
        let mut out = Tensor::zero(self.field(), &self.0.codomain);
        for (k, c) in x.terms() {
            let img = self.apply_key(k)?;
            for (ik, ic) in img.terms() {
                out.add_term(ik.clone(), c * ic);
            }
        }
        Ok(out)
    }

    /// Applies a map whose codomain is a single algebra, returning an element.
    pub fn apply_element(&self, x: &Element) -> Result<Element> {
        Ok(self.apply(x)?.to_element())
    }

    /// The composite `x ↦ next(self(x))`; `self` must land in a single algebra.
    ///
    /// Table domains are materialized on the basis. On free domains both maps
    /// must be (anti)homomorphisms and the composite is one as well.
    pub fn then(&self, next: &LinearMap) -> Result<LinearMap> {
        if self.0.codomain.len() != 1 || self.0.codomain[0] != next.0.domain {
            return Err(Error::FactorMismatch {
                left: format!("{:?}", self.0.codomain),
                right: next.0.domain.name().to_string(),
            });
        }
        let name = format!("{}∘{}", next.0.name, self.0.name);
        if let Ok(basis) = self.0.domain.basis() {
            let images = basis
                .iter()
                .map(|k| next.apply(&self.apply_key(k)?.to_element()))
                .collect::<Result<Vec<_>>>()?;
            let extension = compose_extension(self.0.extension, next.0.extension)
                .unwrap_or(Extension::Linear);
            return LinearMap::on_basis(&name, &self.0.domain, &next.0.codomain, extension, images);
        }
        let extension = compose_extension(self.0.extension, next.0.extension).ok_or_else(|| {
            Error::Usage(format!("{name}: composite on a free domain is not multiplicative"))
        })?;
        let (first, second) = (self.clone(), next.clone());
        LinearMap::from_rule(&name, &self.0.domain, &next.0.codomain, extension, move |g| {
            let mid = first.generator_image(g).ok()?;
            second.apply(&mid.to_element()).ok()
        })
    }
}

fn compose_extension(first: Extension, second: Extension) -> Option<Extension> {
    use Extension::*;
    match (first, second) {
        (AlgebraHom, AlgebraHom) | (AlgebraAntiHom, AlgebraAntiHom) => Some(AlgebraHom),
        (AlgebraHom, AlgebraAntiHom) | (AlgebraAntiHom, AlgebraHom) => Some(AlgebraAntiHom),
        _ => None,
    }
}

fn check_free_extension(name: &str, domain: &Algebra, extension: Extension) -> Result<()> {
    if !domain.is_free() {
        return Err(Error::Usage(format!("{name}: generator images need a free domain")));
    }
    if extension == Extension::Linear {
        return Err(Error::InfiniteBasis(format!(
            "{} (linear extension of {name} needs a finite basis)",
            domain.name()
        )));
    }
    Ok(())
}

fn check_codomain(name: &str, t: &Tensor, codomain: &[Algebra]) -> Result<()> {
    if t.factors() != codomain {
        return Err(Error::FactorMismatch {
            left: format!("image under {name}"),
            right: format!("{codomain:?}"),
        });
    }
    Ok(())
}

/// Applies `maps[i]` to slot `i` of `x` and re-expands (`f_1 ⊗ ... ⊗ f_k`).
pub fn tensor_map(maps: &[&LinearMap], x: &Tensor) -> Result<Tensor> {
    if maps.len() != x.factors().len() {
        return Err(Error::FactorMismatch {
            left: format!("{} maps", maps.len()),
            right: format!("{} factors", x.factors().len()),
        });
    }
    for (m, a) in maps.iter().zip(x.factors()) {
        if m.domain() != a {
            return Err(Error::OwnerMismatch {
                left: m.domain().name().to_string(),
                right: a.name().to_string(),
            });
        }
    }
    let mut out = x.clone();
    let mut slot = 0;
    for m in maps {
        out = out.map_slot(slot, m.codomain(), |k| m.apply_key(k))?;
        slot += m.codomain().len();
    }
    Ok(out)
}

/// Applies `map` to slot `slot` only.
pub fn map_one_slot(map: &LinearMap, slot: usize, x: &Tensor) -> Result<Tensor> {
    if &x.factors()[slot] != map.domain() {
        return Err(Error::OwnerMismatch {
            left: map.domain().name().to_string(),
            right: x.factors()[slot].name().to_string(),
        });
    }
    x.map_slot(slot, map.codomain(), |k| map.apply_key(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_generator_is_an_error_not_zero() {
        let q = Field::Rational;
        let r = Algebra::free("R", q, &["y", "z"]);
        let y = GenId::named("y");
        let mut imgs = BTreeMap::new();
        imgs.insert(y, Tensor::from_element(&r.gen(y)));
        let f = LinearMap::on_generators("f", &r, &[r.clone()], Extension::AlgebraHom, imgs).unwrap();
        let z = r.gen(GenId::named("z"));
        match f.apply(&z) {
            Err(Error::MissingGeneratorImage { generator, .. }) => assert_eq!(generator, "z"),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(f.apply_element(&r.one()).unwrap(), r.one());
    }

    #[test]
    fn antihom_reverses_words() {
        let q = Field::Rational;
        let r = Algebra::free("R", q, &["y", "z"]);
        let rc = r.clone();
        let swap = LinearMap::from_rule("swap", &r, &[r.clone()], Extension::AlgebraAntiHom, move |g| {
            let other = if g.family == "y" { "z" } else { "y" };
            Some(Tensor::from_element(&rc.gen(GenId::named(other))))
        })
        .unwrap();
        let (y, z) = (GenId::named("y"), GenId::named("z"));
        let w = r.word(&[y, y, z]);
        assert_eq!(swap.apply_element(&w).unwrap(), r.word(&[y, z, z]));
    }

    #[test]
    fn linear_extension_needs_finite_basis() {
        let q = Field::Rational;
        let r = Algebra::free("R", q, &["y"]);
        let err = LinearMap::from_rule("f", &r, &[r.clone()], Extension::Linear, |_| None);
        assert!(matches!(err, Err(Error::InfiniteBasis(_))));
    }
}
