//! Degree-bounded membership in a two-sided ideal of a free algebra.
//!
//! The ideal generated by a finite relation set is truncated to the span of
//! all products `u·r·v` of degree at most `D` with `u`, `v` words over a
//! finite alphabet. That span is echelonized exactly (pivot = largest word in
//! the canonical order) while recording how each pivot row was formed, so a
//! positive answer comes with a certificate that can be re-checked
//! independently. A negative answer only says "not found up to `D`".

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::algebra::{add_into, Algebra, BasisKey, Element, GenId, Word};
use crate::error::{Error, Result};
use crate::linear_map::LinearMap;
use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// Generators of a two-sided ideal in a free algebra.
#[derive(Clone, Debug)]
pub struct RelationSet {
    algebra: Algebra,
    relations: Vec<Element>,
}

impl RelationSet {
    pub fn new(algebra: &Algebra, relations: Vec<Element>) -> Result<RelationSet> {
        if !algebra.is_free() {
            return Err(Error::Usage(format!("{} is not a free algebra", algebra.name())));
        }
        for r in &relations {
            if r.algebra() != algebra {
                return Err(Error::OwnerMismatch {
                    left: algebra.name().to_string(),
                    right: r.algebra().name().to_string(),
                });
            }
        }
        Ok(RelationSet { algebra: algebra.clone(), relations })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    /// Indices of relations not killed by `counit` (should be empty).
    pub fn counit_violations(&self, counit: &LinearMap) -> Result<Vec<usize>> {
        let mut bad = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            if !counit.apply(r)?.is_zero() {
                bad.push(i);
            }
        }
        Ok(bad)
    }
}

/// One product `coef · left · relation · right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateTerm {
    pub left: Word,
    pub relation: usize,
    pub right: Word,
    pub coef: Scalar,
}

/// A combination of relation products, claimed to equal some element.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Certificate {
    pub terms: Vec<CertificateTerm>,
}

impl Certificate {
    /// Evaluates the combination in the free algebra.
    pub fn evaluate(&self, relations: &RelationSet) -> Element {
        let alg = &relations.algebra;
        let mut out = alg.zero();
        for t in &self.terms {
            let u = alg.from_key(BasisKey::Word(t.left.clone()));
            let v = alg.from_key(BasisKey::Word(t.right.clone()));
            let p = &(&u * &relations.relations[t.relation]) * &v;
            out = &out + &p.scale(&t.coef);
        }
        out
    }

    /// True iff the combination evaluates exactly to `x`.
    pub fn verify(&self, relations: &RelationSet, x: &Element) -> bool {
        &self.evaluate(relations) == x
    }
}

type Origin = (Word, usize, Word);

#[derive(Clone, Debug)]
struct Row {
    terms: BTreeMap<Word, Scalar>,
    combo: BTreeMap<Origin, Scalar>,
}

fn axpy<K: Ord + Clone>(dst: &mut BTreeMap<K, Scalar>, c: &Scalar, src: &BTreeMap<K, Scalar>) {
    for (k, v) in src {
        add_into(dst, k.clone(), c * v);
    }
}

/// The echelonized truncation of an ideal.
pub struct IdealSpan {
    relations: RelationSet,
    alphabet: Vec<GenId>,
    degree: usize,
    pivots: BTreeMap<Word, Row>,
    reduced: Mutex<HashMap<Word, Arc<Row>>>,
}

/// Result of a bounded membership query.
#[derive(Clone, Debug)]
pub enum Membership {
    /// `x` lies in the ideal; `x` equals the certificate's combination.
    Member(Certificate),
    /// `x` is not in the truncated span. This is not a proof that `x` is
    /// outside the ideal. `normal_form` is the remainder after reduction.
    NotFoundUpTo { degree: usize, normal_form: Element },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// Builds the truncated span of `relations` over words in `alphabet`.
pub fn span_ideal(relations: &RelationSet, alphabet: &[GenId], degree: usize) -> Result<IdealSpan> {
    let mut alphabet = alphabet.to_vec();
    alphabet.sort();
    alphabet.dedup();
    for r in &relations.relations {
        if r.degree() > degree {
            return Err(Error::BoundTooSmall { relation_degree: r.degree(), bound: degree });
        }
    }
    let mut span = IdealSpan {
        relations: relations.clone(),
        alphabet,
        degree,
        pivots: BTreeMap::new(),
        reduced: Mutex::new(HashMap::new()),
    };
    let words = Word::all_up_to(&span.alphabet, degree);
    let field = relations.algebra.field();
    for (idx, r) in relations.relations.iter().enumerate() {
        if r.is_zero() {
            continue;
        }
        let room = degree - r.degree();
        let rel_terms: Vec<(Word, Scalar)> = r
            .terms()
            .iter()
            .map(|(k, c)| (k.as_word().expect("free algebra key").clone(), c.clone()))
            .collect();
        for u in words.iter().take_while(|w| w.degree() <= room) {
            for v in words.iter().take_while(|w| w.degree() + u.degree() <= room) {
                let mut terms = BTreeMap::new();
                for (w, c) in &rel_terms {
                    add_into(&mut terms, u.concat(w).concat(v), c.clone());
                }
                let mut combo = BTreeMap::new();
                combo.insert((u.clone(), idx, v.clone()), field.one());
                span.insert(Row { terms, combo });
            }
        }
    }
    Ok(span)
}

impl IdealSpan {
    fn insert(&mut self, mut row: Row) {
        loop {
            let Some((lead, c)) = row.terms.last_key_value() else {
                return;
            };
            let (lead, c) = (lead.clone(), c.clone());
            match self.pivots.get(&lead) {
                Some(p) => {
                    let m = -&c;
                    axpy(&mut row.terms, &m, &p.terms);
                    axpy(&mut row.combo, &m, &p.combo);
                }
                None => {
                    let inv = c.inv().expect("leading coefficient is nonzero");
                    for v in row.terms.values_mut() {
                        *v = &*v * &inv;
                    }
                    for v in row.combo.values_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alphabet(&self) -> &[GenId] {
        &self.alphabet
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    /// Number of independent rows, i.e. the dimension of the truncated span.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `terms` against the pivots. Returns the remainder and the
    /// combination that was subtracted, so `input = remainder + combination`.
    fn reduce(&self, mut terms: BTreeMap<Word, Scalar>) -> Row {
        let mut rem = BTreeMap::new();
        let mut used = BTreeMap::new();
        while let Some((lead, c)) = terms.pop_last() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    terms.insert(lead, c.clone());
                    axpy(&mut terms, &-&c, &p.terms);
                    axpy(&mut used, &c, &p.combo);
                }
                None => {
                    rem.insert(lead, c);
                }
            }
        }
        Row { terms: rem, combo: used }
    }

    fn reduce_word(&self, w: &Word) -> Arc<Row> {
        if let Some(r) = self.reduced.lock().expect("reduction cache poisoned").get(w) {
            return r.clone();
        }
        let mut t = BTreeMap::new();
        t.insert(w.clone(), self.relations.algebra.field().one());
        let r = Arc::new(self.reduce(t));
        self.reduced.lock().expect("reduction cache poisoned").insert(w.clone(), r.clone());
        r
    }

    fn to_element(&self, terms: &BTreeMap<Word, Scalar>) -> Element {
        self.relations
            .algebra
            .from_terms(terms.iter().map(|(w, c)| (BasisKey::Word(w.clone()), c.clone())))
    }

    fn certificate(combo: &BTreeMap<Origin, Scalar>) -> Certificate {
        Certificate {
            terms: combo
                .iter()
                .map(|((l, i, r), c)| CertificateTerm {
                    left: l.clone(),
                    relation: *i,
                    right: r.clone(),
                    coef: c.clone(),
                })
                .collect(),
        }
    }

    /// Normal form of `x`: its remainder modulo the truncated span.
    pub fn normal_form(&self, x: &Element) -> Element {
        let terms = x
            .terms()
            .iter()
            .map(|(k, c)| (k.as_word().expect("free algebra key").clone(), c.clone()))
            .collect();
        self.to_element(&self.reduce(terms).terms)
    }

    /// Decides whether `x` lies in the truncated span.
    pub fn member(&self, x: &Element) -> Result<Membership> {
        if x.algebra() != &self.relations.algebra {
            return Err(Error::OwnerMismatch {
                left: self.relations.algebra.name().to_string(),
                right: x.algebra().name().to_string(),
            });
        }
        if x.degree() > self.degree {
            return Err(Error::DegreeExceedsBound { degree: x.degree(), bound: self.degree });
        }
        let terms = x
            .terms()
            .iter()
            .map(|(k, c)| (k.as_word().expect("free algebra key").clone(), c.clone()))
            .collect();
        let row = self.reduce(terms);
        if row.terms.is_empty() {
            Ok(Membership::Member(Self::certificate(&row.combo)))
        } else {
            Ok(Membership::NotFoundUpTo { degree: self.degree, normal_form: self.to_element(&row.terms) })
        }
    }
}

/// One telescoping piece of a tensor certificate: `coef` times the pure
/// tensor `context` with slot `slot` replaced by the certified ideal element.
#[derive(Clone, Debug)]
pub struct TensorCertificatePart {
    pub slot: usize,
    pub context: Vec<BasisKey>,
    pub coef: Scalar,
    pub certificate: Certificate,
}

/// Certificate that a tensor lies in `Σ_s F ⊗ ... ⊗ I_s ⊗ ... ⊗ F`.
#[derive(Clone, Debug, Default)]
pub struct TensorCertificate {
    pub parts: Vec<TensorCertificatePart>,
}

impl TensorCertificate {
    /// Rebuilds the tensor from the parts and compares it with `x`.
    pub fn verify(&self, x: &Tensor, spans: &[Option<Arc<IdealSpan>>]) -> bool {
        let mut acc = Tensor::zero(x.field(), x.factors());
        for part in &self.parts {
            let Some(span) = spans.get(part.slot).and_then(|s| s.as_ref()) else {
                return false;
            };
            let ideal_elem = part.certificate.evaluate(&span.relations);
            for (k, c) in ideal_elem.terms() {
                let mut key = part.context.clone();
                key[part.slot] = k.clone();
                acc.add_term(key, &part.coef * c);
            }
        }
        &acc == x
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

#[derive(Clone, Debug)]
pub enum TensorMembership {
    Member(TensorCertificate),
    NotFoundUpTo { degree: usize, normal_form: Tensor },
}

/// Decides `x ∈ Σ_s (F ⊗ ... ⊗ I_s ⊗ ... ⊗ F)` where `spans[s]` truncates the
/// ideal in slot `s` (`None` for slots taken exactly).
///
/// Uses the normal-form projection in every ideal slot: `x` is in the sum iff
/// the slotwise projection kills it, and the differences telescope into a
/// certificate.
pub fn member_tensor(x: &Tensor, spans: &[Option<Arc<IdealSpan>>]) -> Result<TensorMembership> {
    assert_eq!(spans.len(), x.factors().len());
    let mut bound = 0;
    for (s, span) in spans.iter().enumerate() {
        if let Some(span) = span {
            bound = bound.max(span.degree);
            if &x.factors()[s] != span.relations.algebra() {
                return Err(Error::OwnerMismatch {
                    left: span.relations.algebra().name().to_string(),
                    right: x.factors()[s].name().to_string(),
                });
            }
            let deg = x.terms().keys().map(|k| k[s].degree()).max().unwrap_or(0);
            if deg > span.degree {
                return Err(Error::DegreeExceedsBound { degree: deg, bound: span.degree });
            }
        }
    }
    let mut cur = x.clone();
    let mut cert = TensorCertificate::default();
    for (s, span) in spans.iter().enumerate() {
        let Some(span) = span else { continue };
        let mut next = Tensor::zero(x.field(), x.factors());
        for (k, c) in cur.terms() {
            let w = k[s].as_word().expect("free algebra key");
            let row = span.reduce_word(w);
            for (rw, rc) in &row.terms {
                let mut key = k.clone();
                key[s] = BasisKey::Word(rw.clone());
                next.add_term(key, c * rc);
            }
            if !row.combo.is_empty() {
                cert.parts.push(TensorCertificatePart {
                    slot: s,
                    context: k.clone(),
                    coef: c.clone(),
                    certificate: IdealSpan::certificate(&row.combo),
                });
            }
        }
        cur = next;
    }
    if cur.is_zero() {
        Ok(TensorMembership::Member(cert))
    } else {
        Ok(TensorMembership::NotFoundUpTo { degree: bound, normal_form: cur })
    }
}

type RelationFn = dyn Fn(u32) -> Vec<Element> + Send + Sync;
type AlphabetFn = dyn Fn(u32) -> Vec<GenId> + Send + Sync;

/// A leveled family of relations on a free algebra, with memoized spans.
///
/// `relations(L)` must list the relations whose generators all have level
/// at most `L`, and must extend `relations(L - 1)` (so relation indices are
/// stable across levels). `alphabet(L)` lists the generators of level ≤ `L`.
pub struct IdealSource {
    algebra: Algebra,
    relations: Box<RelationFn>,
    alphabet: Box<AlphabetFn>,
    spans: Mutex<BTreeMap<(u32, usize), Arc<IdealSpan>>>,
}

impl IdealSource {
    pub fn new(
        algebra: &Algebra,
        relations: impl Fn(u32) -> Vec<Element> + Send + Sync + 'static,
        alphabet: impl Fn(u32) -> Vec<GenId> + Send + Sync + 'static,
    ) -> IdealSource {
        IdealSource {
            algebra: algebra.clone(),
            relations: Box::new(relations),
            alphabet: Box::new(alphabet),
            spans: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn relation_set(&self, levels: u32) -> Result<RelationSet> {
        RelationSet::new(&self.algebra, (self.relations)(levels))
    }

    pub fn alphabet(&self, levels: u32) -> Vec<GenId> {
        (self.alphabet)(levels)
    }

    /// The span over generators of level ≤ `levels` up to `degree`, built
    /// once per `(levels, degree)`.
    pub fn span(&self, levels: u32, degree: usize) -> Result<Arc<IdealSpan>> {
        if let Some(s) = self.spans.lock().expect("span cache poisoned").get(&(levels, degree)) {
            return Ok(s.clone());
        }
        let rels = self.relation_set(levels)?;
        let span = Arc::new(span_ideal(&rels, &self.alphabet(levels), degree)?);
        self.spans
            .lock()
            .expect("span cache poisoned")
            .entry((levels, degree))
            .or_insert(span.clone());
        Ok(span)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn yz() -> (Algebra, GenId, GenId) {
        (Algebra::free("R", Field::Rational, &["y", "z"]), GenId::named("y"), GenId::named("z"))
    }

    #[test]
    fn monomial_ideal_span() {
        let (r, y, z) = yz();
        let rels = RelationSet::new(&r, vec![r.gen(y)]).unwrap();
        let span = span_ideal(&rels, &[y, z], 2).unwrap();
        for w in [vec![y], vec![y, y], vec![y, z], vec![z, y]] {
            let x = r.word(&w);
            match span.member(&x).unwrap() {
                Membership::Member(c) => assert!(c.verify(&rels, &x)),
                other => panic!("{other:?}"),
            }
        }
        assert!(!span.member(&r.word(&[z, z])).unwrap().is_member());
        assert_eq!(span.rank(), 4);
    }

    #[test]
    fn empty_relations_give_empty_span() {
        let (r, y, z) = yz();
        let rels = RelationSet::new(&r, vec![]).unwrap();
        let span = span_ideal(&rels, &[y, z], 3).unwrap();
        assert_eq!(span.rank(), 0);
        assert!(span.member(&r.zero()).unwrap().is_member());
    }

    #[test]
    fn bounds_are_enforced() {
        let (r, y, z) = yz();
        let rels = RelationSet::new(&r, vec![r.word(&[y, z, y])]).unwrap();
        assert!(matches!(span_ideal(&rels, &[y, z], 2), Err(Error::BoundTooSmall { .. })));
        let span = span_ideal(&rels, &[y, z], 3).unwrap();
        let big = r.word(&[y, y, y, y]);
        assert!(matches!(span.member(&big), Err(Error::DegreeExceedsBound { .. })));
    }

    #[test]
    fn tensor_membership_telescopes() {
        let (r, y, z) = yz();
        let rels = RelationSet::new(&r, vec![&r.word(&[y, z]) - &r.one()]).unwrap();
        let span = Arc::new(span_ideal(&rels, &[y, z], 3).unwrap());
        let q = Field::Rational;
        let yz1 = &r.word(&[y, z]) - &r.one();
        // (yz - 1) ⊗ z + y ⊗ (yz - 1)·y
        let x = &Tensor::pure(q, &[&yz1, &r.gen(z)]) + &Tensor::pure(q, &[&r.gen(y), &(&yz1 * &r.gen(y))]);
        let spans = vec![Some(span.clone()), Some(span.clone())];
        match member_tensor(&x, &spans).unwrap() {
            TensorMembership::Member(c) => assert!(c.verify(&x, &spans)),
            other => panic!("{other:?}"),
        }
        let not = Tensor::pure(q, &[&r.gen(y), &r.gen(z)]);
        assert!(matches!(member_tensor(&not, &spans).unwrap(), TensorMembership::NotFoundUpTo { .. }));
    }
}
