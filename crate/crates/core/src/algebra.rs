//! Algebras given either freely on generators or by structure constants,
//! and their elements as sparse linear combinations of basis keys.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A generator of a free algebra: a family tag plus up to three indices.
///
/// The derived order (family, then indices) is the canonical generator order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenId {
    pub family: &'static str,
    pub indices: [u32; 3],
    pub arity: u8,
}

impl GenId {
    /// A generator with no indices, such as `y`.
    pub const fn named(family: &'static str) -> GenId {
        GenId { family, indices: [0; 3], arity: 0 }
    }

    /// A generator `family[level;i,j]`.
    pub const fn leveled(family: &'static str, level: u32, i: u32, j: u32) -> GenId {
        GenId { family, indices: [level, i, j], arity: 3 }
    }

    /// Level of a leveled generator; zero for every other shape.
    pub fn level(&self) -> u32 {
        if self.arity == 3 {
            self.indices[0]
        } else {
            0
        }
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.indices;
        match self.arity {
            0 => write!(f, "{}", self.family),
            1 => write!(f, "{}[{a}]", self.family),
            2 => write!(f, "{}[{a},{b}]", self.family),
            _ => write!(f, "{}[{a};{b},{c}]", self.family),
        }
    }
}

/// A monomial of a free algebra. Ordered by degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn max_level(&self) -> u32 {
        self.0.iter().map(GenId::level).max().unwrap_or(0)
    }

    /// All words over `alphabet` of degree at most `max_degree`, in canonical order.
    pub fn all_up_to(alphabet: &[GenId], max_degree: usize) -> Vec<Word> {
        let mut sorted = alphabet.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_degree {
            let mut next = Vec::with_capacity(layer.len() * sorted.len());
            for w in &layer {
                for g in &sorted {
                    let mut v = w.0.clone();
                    v.push(*g);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A basis element: a word of a free algebra or an index into a table basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisKey {
    Word(Word),
    Index(u32),
}

impl BasisKey {
    pub fn degree(&self) -> usize {
        match self {
            BasisKey::Word(w) => w.degree(),
            BasisKey::Index(_) => 0,
        }
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            BasisKey::Word(w) => Some(w),
            BasisKey::Index(_) => None,
        }
    }
}

/// Structure constants of a finite-dimensional algebra.
#[derive(Debug)]
pub struct Table {
    dim: usize,
    names: Vec<String>,
    unit: Vec<(u32, Scalar)>,
    products: Vec<Vec<(u32, Scalar)>>,
}

#[derive(Debug)]
enum Kind {
    Free { families: Vec<&'static str> },
    Table(Table),
}

#[derive(Debug)]
struct Inner {
    id: u64,
    name: String,
    field: Field,
    commutative: bool,
    kind: Kind,
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A shared handle to an algebra. Two handles are equal iff they were
/// produced by the same constructor call.
#[derive(Clone)]
pub struct Algebra(Arc<Inner>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({})", self.0.name)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

fn sparse(v: &[Scalar]) -> Vec<(u32, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32, c.clone()))
        .collect()
}

impl Algebra {
    /// The free algebra on generators whose family tag is in `families`.
    pub fn free(name: &str, field: Field, families: &[&'static str]) -> Algebra {
        Algebra(Arc::new(Inner {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: name.to_string(),
            field,
            commutative: false,
            kind: Kind::Free { families: families.to_vec() },
        }))
    }

    /// A finite-dimensional algebra from dense structure constants:
    /// `products[i][j]` are the coordinates of `b_i * b_j`.
    ///
    /// Associativity and the unit laws are checked on every basis triple;
    /// a `commutative` claim is checked on every pair.
    pub fn table(
        name: &str,
        field: Field,
        names: Vec<String>,
        unit: Vec<Scalar>,
        products: Vec<Vec<Vec<Scalar>>>,
        commutative: bool,
    ) -> Result<Algebra> {
        let dim = names.len();
        let bad = |m: String| Err(Error::InvalidTable(format!("{name}: {m}")));
        if unit.len() != dim || products.len() != dim {
            return bad("dimension mismatch".into());
        }
        for row in &products {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return bad("dimension mismatch".into());
            }
        }
        if unit.iter().chain(products.iter().flatten().flatten()).any(|c| c.field() != field) {
            return bad("structure constant over the wrong field".into());
        }
        let table = Table {
            dim,
            names,
            unit: sparse(&unit),
            products: products.iter().flatten().map(|v| sparse(v)).collect(),
        };
        let alg = Algebra(Arc::new(Inner {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: name.to_string(),
            field,
            commutative,
            kind: Kind::Table(table),
        }));
        let basis: Vec<Element> = (0..dim).map(|i| alg.basis_element(i)).collect();
        let one = alg.one();
        for (i, x) in basis.iter().enumerate() {
            if &one * x != *x || x * &one != *x {
                return bad(format!("unit law fails on basis element {i}"));
            }
            for (j, y) in basis.iter().enumerate() {
                let xy = x * y;
                if commutative && xy != y * x {
                    return bad(format!("claimed commutative but b{i}*b{j} != b{j}*b{i}"));
                }
                for (k, z) in basis.iter().enumerate() {
                    if &xy * z != x * &(y * z) {
                        return bad(format!("associativity fails on ({i},{j},{k})"));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// The base field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Algebra::table(
            "K",
            field,
            vec!["1".into()],
            vec![field.one()],
            vec![vec![vec![field.one()]]],
            true,
        )
        .expect("the one-dimensional table is an algebra")
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn is_commutative(&self) -> bool {
        self.0.commutative
    }

    pub fn is_free(&self) -> bool {
        matches!(self.0.kind, Kind::Free { .. })
    }

    /// Dimension of a table algebra, `None` for a free algebra.
    pub fn dim(&self) -> Option<usize> {
        match &self.0.kind {
            Kind::Table(t) => Some(t.dim),
            Kind::Free { .. } => None,
        }
    }

    /// The full basis of a table algebra.
    pub fn basis(&self) -> Result<Vec<BasisKey>> {
        match self.dim() {
            Some(d) => Ok((0..d as u32).map(BasisKey::Index).collect()),
            None => Err(Error::InfiniteBasis(self.name().to_string())),
        }
    }

    pub fn basis_name(&self, i: u32) -> String {
        match &self.0.kind {
            Kind::Table(t) => t.names.get(i as usize).cloned().unwrap_or_else(|| format!("b{i}")),
            Kind::Free { .. } => format!("b{i}"),
        }
    }

    pub fn key_valid(&self, key: &BasisKey) -> bool {
        match (&self.0.kind, key) {
            (Kind::Table(t), BasisKey::Index(i)) => (*i as usize) < t.dim,
            (Kind::Free { families }, BasisKey::Word(w)) => {
                w.0.iter().all(|g| families.contains(&g.family))
            }
            _ => false,
        }
    }

    pub fn key_name(&self, key: &BasisKey) -> String {
        match key {
            BasisKey::Word(w) => w.to_string(),
            BasisKey::Index(i) => self.basis_name(*i),
        }
    }

    pub fn unit_terms(&self) -> Vec<(BasisKey, Scalar)> {
        match &self.0.kind {
            Kind::Free { .. } => vec![(BasisKey::Word(Word::empty()), self.field().one())],
            Kind::Table(t) => t.unit.iter().map(|(i, c)| (BasisKey::Index(*i), c.clone())).collect(),
        }
    }

    /// Product of two basis keys as a list of (key, coefficient).
    pub fn mul_keys(&self, a: &BasisKey, b: &BasisKey) -> Vec<(BasisKey, Scalar)> {
        match (&self.0.kind, a, b) {
            (Kind::Free { .. }, BasisKey::Word(x), BasisKey::Word(y)) => {
                vec![(BasisKey::Word(x.concat(y)), self.field().one())]
            }
            (Kind::Table(t), BasisKey::Index(i), BasisKey::Index(j)) => t.products
                [*i as usize * t.dim + *j as usize]
                .iter()
                .map(|(k, c)| (BasisKey::Index(*k), c.clone()))
                .collect(),
            _ => panic!("basis key kind does not match algebra {}", self.name()),
        }
    }

    pub fn zero(&self) -> Element {
        Element { alg: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Element {
        let mut e = self.zero();
        for (k, c) in self.unit_terms() {
            e.add_term(k, c);
        }
        e
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        self.one().scale(&c)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        self.from_key(BasisKey::Index(i as u32))
    }

    pub fn from_key(&self, key: BasisKey) -> Element {
        assert!(self.key_valid(&key), "key {key:?} is not valid in {}", self.name());
        let mut e = self.zero();
        e.add_term(key, self.field().one());
        e
    }

    pub fn word(&self, gens: &[GenId]) -> Element {
        self.from_key(BasisKey::Word(Word(gens.to_vec())))
    }

    pub fn gen(&self, g: GenId) -> Element {
        self.word(&[g])
    }

    /// Builds an element from (key, coefficient) pairs, summing repeats.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (BasisKey, Scalar)>) -> Element {
        let mut e = self.zero();
        for (k, c) in terms {
            assert!(self.key_valid(&k), "key {k:?} is not valid in {}", self.name());
            e.add_term(k, c);
        }
        e
    }
}

/// Adds `c` at `key`, dropping the entry if it cancels.
pub(crate) fn add_into<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// A finite linear combination of basis keys of one algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    alg: Algebra,
    terms: BTreeMap<BasisKey, Scalar>,
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeMap<BasisKey, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &BasisKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(|| self.alg.field().zero())
    }

    /// Largest word length among the terms; zero for table algebras.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(BasisKey::degree).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, key: BasisKey, c: Scalar) {
        add_into(&mut self.terms, key, c);
    }

    fn check_owner(&self, other: &Element) -> Result<()> {
        if self.alg != other.alg {
            return Err(Error::OwnerMismatch {
                left: self.alg.name().to_string(),
                right: other.alg.name().to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_owner(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.check_owner(other)?;
        let mut out = self.alg.zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let cab = ca * cb;
                for (k, c) in self.alg.mul_keys(ka, kb) {
                    out.add_term(k, &cab * &c);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = self.alg.zero();
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    /// Panics if the operands belong to different algebras; see [`Element::try_add`].
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-&self.alg.field().one())
    }
}

pub(crate) fn render_terms<K>(
    terms: &BTreeMap<K, Scalar>,
    mut key: impl FnMut(&K) -> String,
) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|(k, c)| format!("{c}*{}", key(k)))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_terms(&self.terms, |k| self.alg.key_name(k)))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.alg.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yz() -> (Algebra, Element, Element) {
        let r = Algebra::free("R", Field::Rational, &["y", "z"]);
        let y = r.gen(GenId::named("y"));
        let z = r.gen(GenId::named("z"));
        (r, y, z)
    }

    #[test]
    fn additive_inverse_and_like_terms() {
        let (r, y, z) = yz();
        assert!((&y + &(-&y)).is_zero());
        let q = Field::Rational;
        let yz = &y * &z;
        assert_eq!(&yz.scale(&q.int(2)) + &yz.scale(&q.int(3)), yz.scale(&q.int(5)));
        assert_eq!(r.one().to_string(), "1*1");
    }

    #[test]
    fn free_product_is_concatenation() {
        let (_, y, z) = yz();
        let lhs = &(&y + &z) * &y;
        assert_eq!(lhs.to_string(), "1*y.y + 1*z.y");
    }

    #[test]
    fn word_order_is_degree_then_lex() {
        let y = GenId::named("y");
        let z = GenId::named("z");
        assert!(Word(vec![z]) < Word(vec![y, y]));
        assert!(Word(vec![y, z]) < Word(vec![z, y]));
        assert!(Word::empty() < Word(vec![y]));
        assert_eq!(Word::all_up_to(&[y, z], 2).len(), 7);
    }

    #[test]
    fn mismatched_owners_are_rejected() {
        let (_, y, _) = yz();
        let other = Algebra::free("R2", Field::Rational, &["y"]);
        let y2 = other.gen(GenId::named("y"));
        assert!(matches!(y.try_add(&y2), Err(Error::OwnerMismatch { .. })));
    }

    #[test]
    fn table_checks_unit_and_associativity() {
        let q = Field::Rational;
        let (z, o) = (q.zero(), q.one());
        let names = || vec!["e".to_string(), "x".to_string(), "w".to_string()];
        let v = |a: i64, b: i64, c: i64| vec![q.int(a), q.int(b), q.int(c)];
        // x*x = w, x*w = e, everything else involving x or w vanishes:
        // (x*x)*w = 0 but x*(x*w) = x.
        let mut products = vec![vec![v(0, 0, 0); 3]; 3];
        for i in 0..3 {
            products[0][i] = v((i == 0) as i64, (i == 1) as i64, (i == 2) as i64);
            products[i][0] = products[0][i].clone();
        }
        products[1][1] = v(0, 0, 1);
        products[1][2] = v(1, 0, 0);
        let unit = vec![o.clone(), z.clone(), z.clone()];
        let err = Algebra::table("bad", q, names(), unit.clone(), products.clone(), false);
        assert!(matches!(err, Err(Error::InvalidTable(_))));
        products[1][2] = v(0, 0, 0);
        assert!(Algebra::table("ok", q, names(), unit, products.clone(), false).is_ok());
        let wrong_unit = vec![z.clone(), o.clone(), z];
        assert!(Algebra::table("bad-unit", q, names(), wrong_unit, products, false).is_err());
    }
}
