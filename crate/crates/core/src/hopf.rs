//! Coalgebras, bialgebras and Hopf algebras: the matrix coalgebra, the free
//! Hopf algebra on a finite coalgebra, group algebras and function algebras.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::algebra::{Algebra, BasisKey, Element, GenId, Word};
use crate::error::{Error, Result};
use crate::ideal::IdealSource;
use crate::judge::Judge;
use crate::linear_map::{tensor_map, Extension, LinearMap};
use crate::report::CheckEntry;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;

/// A finite-dimensional coalgebra on a named basis.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    field: Field,
    names: Vec<String>,
    labels: Vec<(u32, u32)>,
    delta: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
}

impl Coalgebra {
    /// Builds a coalgebra and checks coassociativity and both counit laws on
    /// every basis element. `labels` are the index pairs used when the basis
    /// element becomes a generator of a free Hopf algebra.
    pub fn new(
        field: Field,
        names: Vec<String>,
        labels: Vec<(u32, u32)>,
        delta: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
    ) -> Result<Coalgebra> {
        let dim = names.len();
        if labels.len() != dim || delta.len() != dim || counit.len() != dim {
            return Err(Error::InvalidTable("coalgebra dimension mismatch".into()));
        }
        let c = Coalgebra { field, names, labels, delta, counit };
        for i in 0..dim {
            let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut cl = vec![field.zero(); dim];
            let mut cr = vec![field.zero(); dim];
            for (a, b, x) in &c.delta[i] {
                for (a1, a2, y) in &c.delta[*a] {
                    crate::algebra::add_into(&mut left, (*a1, *a2, *b), x * y);
                }
                for (b1, b2, y) in &c.delta[*b] {
                    crate::algebra::add_into(&mut right, (*a, *b1, *b2), x * y);
                }
                cl[*b] = &cl[*b] + &(x * &c.counit[*a]);
                cr[*a] = &cr[*a] + &(x * &c.counit[*b]);
            }
            if left != right {
                return Err(Error::InvalidTable(format!("coassociativity fails on {}", c.names[i])));
            }
            let expected: Vec<Scalar> = (0..dim).map(|k| field.int((k == i) as i64)).collect();
            if cl != expected || cr != expected {
                return Err(Error::InvalidTable(format!("counit law fails on {}", c.names[i])));
            }
        }
        Ok(c)
    }

    /// The dual of the `n × n` matrix algebra: basis `a[i,j]` (row `i`,
    /// column `j`) with `Δ(a[i,j]) = Σ_k a[i,k] ⊗ a[k,j]` and `ε(a[i,j]) = [i = j]`.
    pub fn matrix(n: u32, field: Field) -> Coalgebra {
        let idx = |i: u32, j: u32| (i * n + j) as usize;
        let mut names = Vec::new();
        let mut labels = Vec::new();
        let mut delta = Vec::new();
        let mut counit = Vec::new();
        for i in 0..n {
            for j in 0..n {
                names.push(format!("a[{i},{j}]"));
                labels.push((i, j));
                delta.push((0..n).map(|k| (idx(i, k), idx(k, j), field.one())).collect());
                counit.push(field.int((i == j) as i64));
            }
        }
        Coalgebra::new(field, names, labels, delta, counit).expect("matrix coalgebra axioms")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn label(&self, i: usize) -> (u32, u32) {
        self.labels[i]
    }

    pub fn delta(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.delta[i]
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }
}

type GeneratorFn = dyn Fn(u32) -> Vec<GenId> + Send + Sync;

/// A bialgebra with optional antipode. For a free presentation the
/// algebra is a quotient and `ideal` generates its relations.
#[derive(Clone)]
pub struct HopfAlgebra {
    name: String,
    algebra: Algebra,
    delta: LinearMap,
    counit: LinearMap,
    antipode: Option<LinearMap>,
    ideal: Option<Arc<IdealSource>>,
    generators: Option<Arc<GeneratorFn>>,
    cocommutative: bool,
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HopfAlgebra({})", self.name)
    }
}

impl HopfAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn delta(&self) -> &LinearMap {
        &self.delta
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    pub fn antipode(&self) -> Result<&LinearMap> {
        self.antipode.as_ref().ok_or_else(|| Error::NoAntipode(self.name.clone()))
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn ideal(&self) -> Option<&Arc<IdealSource>> {
        self.ideal.as_ref()
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutative
    }

    /// A judge that knows this algebra's relations (if any).
    pub fn judge(&self, degree: usize) -> Judge {
        match &self.ideal {
            Some(i) => Judge::new(vec![i.clone()], degree),
            None => Judge::exact(degree),
        }
    }

    /// Generators of level ≤ `levels` (free presentations only).
    pub fn generators(&self, levels: u32) -> Result<Vec<GenId>> {
        match &self.generators {
            Some(g) => Ok(g(levels)),
            None => Err(Error::Usage(format!("{} is not freely presented", self.name))),
        }
    }

    /// The elements on which identities are checked: the whole basis of a
    /// table algebra, or all words of degree ≤ `degree` in generators of
    /// level ≤ `levels`.
    pub fn spanning_set(&self, levels: u32, degree: usize) -> Result<Vec<Element>> {
        if let Ok(basis) = self.algebra.basis() {
            return Ok(basis.into_iter().map(|k| self.algebra.from_key(k)).collect());
        }
        let gens = self.generators(levels)?;
        Ok(Word::all_up_to(&gens, degree)
            .into_iter()
            .map(|w| self.algebra.from_key(BasisKey::Word(w)))
            .collect())
    }

    pub fn counit_value(&self, x: &Element) -> Result<Scalar> {
        Ok(self.counit.apply(x)?.scalar_value())
    }

    /// `η(ε(x))`.
    pub fn unit_counit(&self, x: &Element) -> Result<Element> {
        Ok(self.algebra.scalar(self.counit_value(x)?))
    }

    /// Builds a Hopf algebra on a table algebra from basis images.
    pub fn from_tables(
        name: &str,
        algebra: &Algebra,
        delta: Vec<Tensor>,
        counit: Vec<Scalar>,
        antipode: Option<Vec<Element>>,
    ) -> Result<HopfAlgebra> {
        let field = algebra.field();
        let pair = [algebra.clone(), algebra.clone()];
        let delta = LinearMap::on_basis("Δ", algebra, &pair, Extension::AlgebraHom, delta)?;
        let counit = LinearMap::on_basis(
            "ε",
            algebra,
            &[],
            Extension::AlgebraHom,
            counit.into_iter().map(|c| Tensor::scalar(field, c)).collect(),
        )?;
        let antipode = antipode
            .map(|imgs| {
                LinearMap::on_basis(
                    "S",
                    algebra,
                    &[algebra.clone()],
                    Extension::AlgebraAntiHom,
                    imgs.iter().map(Tensor::from_element).collect(),
                )
            })
            .transpose()?;
        let mut h = HopfAlgebra {
            name: name.to_string(),
            algebra: algebra.clone(),
            delta,
            counit,
            antipode,
            ideal: None,
            generators: None,
            cocommutative: false,
        };
        h.cocommutative = h
            .algebra
            .basis()?
            .iter()
            .map(|k| h.delta.apply_key(k))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|t| t.flip() == *t);
        Ok(h)
    }

    /// Replaces the comultiplication image of one basis element. Used to
    /// build deliberately broken instances.
    pub fn with_delta_image(&self, index: usize, image: Tensor) -> Result<HopfAlgebra> {
        let basis = self.algebra.basis()?;
        let mut imgs = basis.iter().map(|k| self.delta.apply_key(k)).collect::<Result<Vec<_>>>()?;
        imgs[index] = image;
        let pair = [self.algebra.clone(), self.algebra.clone()];
        let mut h = self.clone();
        h.name = format!("{}-corrupted", self.name);
        h.delta = LinearMap::on_basis("Δ'", &self.algebra, &pair, Extension::AlgebraHom, imgs)?;
        Ok(h)
    }
}

fn free_gen(label: (u32, u32), level: u32) -> GenId {
    GenId::leveled("a", level, label.0, label.1)
}

/// The free Hopf algebra on a finite coalgebra `C`: the free algebra on
/// generators `a[r;i,j]` (one copy of the basis of `C` per level `r ≥ 0`)
/// modulo the antipode relations, with `S(a[r;i,j]) = a[r+1;i,j]`.
/// Even levels carry the comultiplication of `C` and odd levels the opposite
/// one, as forced by `Δ∘S = (S⊗S)∘flip∘Δ`.
pub fn free_hopf(c: &Coalgebra) -> HopfAlgebra {
    let field = c.field();
    let alg = Algebra::free("H", field, &["a"]);
    let by_label: Arc<HashMap<(u32, u32), usize>> =
        Arc::new((0..c.dim()).map(|i| (c.label(i), i)).collect());
    let c = Arc::new(c.clone());
    let pair = [alg.clone(), alg.clone()];

    let (a2, c2, l2) = (alg.clone(), c.clone(), by_label.clone());
    let delta = LinearMap::from_rule("Δ", &alg, &pair, Extension::AlgebraHom, move |g| {
        let i = *l2.get(&(g.indices[1], g.indices[2]))?;
        if g.family != "a" || g.arity != 3 {
            return None;
        }
        let r = g.level();
        let mut t = Tensor::zero(field, &[a2.clone(), a2.clone()]);
        for (x, y, coef) in c2.delta(i) {
            let (x, y) = if r % 2 == 0 { (*x, *y) } else { (*y, *x) };
            let kx = BasisKey::Word(Word(vec![free_gen(c2.label(x), r)]));
            let ky = BasisKey::Word(Word(vec![free_gen(c2.label(y), r)]));
            t.add_term(vec![kx, ky], coef.clone());
        }
        Some(t)
    })
    .expect("free domain");

    let (c3, l3) = (c.clone(), by_label.clone());
    let counit = LinearMap::from_rule("ε", &alg, &[], Extension::AlgebraHom, move |g| {
        let i = *l3.get(&(g.indices[1], g.indices[2]))?;
        Some(Tensor::scalar(field, c3.counit(i).clone()))
    })
    .expect("free domain");

    let (a4, l4) = (alg.clone(), by_label.clone());
    let antipode = LinearMap::from_rule("S", &alg, &[alg.clone()], Extension::AlgebraAntiHom, move |g| {
        l4.get(&(g.indices[1], g.indices[2]))?;
        Some(Tensor::from_element(&a4.gen(GenId::leveled("a", g.level() + 1, g.indices[1], g.indices[2]))))
    })
    .expect("free domain");

    let c5 = c.clone();
    let generators: Arc<GeneratorFn> = Arc::new(move |levels: u32| {
        let mut v: Vec<GenId> = (0..=levels)
            .flat_map(|r| (0..c5.dim()).map(move |i| (r, i)))
            .map(|(r, i)| free_gen(c5.label(i), r))
            .collect();
        v.sort();
        v
    });

    let (a6, d6, s6, e6, c6) = (alg.clone(), delta.clone(), antipode.clone(), counit.clone(), c.clone());
    let relations = move |levels: u32| -> Vec<Element> {
        let mut out = Vec::new();
        for r in 0..levels {
            for i in 0..c6.dim() {
                let g = a6.gen(free_gen(c6.label(i), r));
                let eps = a6.scalar(e6.apply(&g).expect("counit on generator").scalar_value());
                let dg = d6.apply(&g).expect("comultiplication on generator");
                let id = LinearMap::identity(&a6);
                let left = tensor_map(&[&s6, &id], &dg).expect("S⊗id").multiply_slots(0).expect("μ");
                let right = tensor_map(&[&id, &s6], &dg).expect("id⊗S").multiply_slots(0).expect("μ");
                out.push(&left.to_element() - &eps);
                out.push(&right.to_element() - &eps);
            }
        }
        out
    };
    let g7 = generators.clone();
    let ideal = Arc::new(IdealSource::new(&alg, relations, move |l| g7(l)));

    HopfAlgebra {
        name: "H".into(),
        algebra: alg,
        delta,
        counit,
        antipode: Some(antipode),
        ideal: Some(ideal),
        generators: Some(generators),
        cocommutative: false,
    }
}

/// The generator `a[r;i,j]` of a free Hopf algebra as an element.
pub fn free_generator(h: &HopfAlgebra, level: u32, i: u32, j: u32) -> Element {
    h.algebra().gen(GenId::leveled("a", level, i, j))
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = names.len();
        let bad = |m: String| Err(Error::InvalidGroupTable(m));
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return bad(format!("expected a {n}×{n} table"));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return bad("entry out of range".into());
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("associativity fails on ({a},{b},{c})"));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x));
        let Some(identity) = identity else {
            return bad("no identity element".into());
        };
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        Ok(FiniteGroup { names, table, identity, inverses })
    }

    /// The cyclic group `Z/n`; elements `e, g, g2, ...` (`e, u` for `n = 2`).
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::InvalidGroupTable("order must be positive".into()));
        }
        let names = (0..n)
            .map(|k| match (k, n) {
                (0, _) => "e".to_string(),
                (1, 2) => "u".to_string(),
                (1, _) => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(names, table)
    }

    /// `Z/2 × Z/2` with elements `e, a, b, ab`.
    pub fn klein() -> FiniteGroup {
        let names = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
        let table = (0..4).map(|x: usize| (0..4).map(|y: usize| x ^ y).collect()).collect();
        FiniteGroup::from_table(names, table).expect("Klein four-group")
    }

    /// The symmetric group on three letters (order 6, nonabelian).
    pub fn symmetric3() -> FiniteGroup {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let names = ["e", "r", "r2", "s", "sr", "sr2"].iter().map(|s| s.to_string()).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        FiniteGroup::from_table(names, table).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Short label such as `Z2` or `G6`.
    pub fn label(&self) -> String {
        let n = self.order();
        let cyclic = (0..n).any(|g| {
            let mut x = g;
            let mut k = 1;
            while x != self.identity {
                x = self.mul(x, g);
                k += 1;
            }
            k == n
        });
        if cyclic {
            format!("Z{n}")
        } else if n == 4 && self.is_abelian() {
            "Z2xZ2".into()
        } else {
            format!("G{n}")
        }
    }
}

/// The group algebra `K[G]`: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_hopf(g: &FiniteGroup, field: Field) -> HopfAlgebra {
    let n = g.order();
    let names = (0..n).map(|a| g.name(a).to_string()).collect();
    let unit = (0..n).map(|a| field.int((a == g.identity()) as i64)).collect();
    let products = (0..n)
        .map(|a| (0..n).map(|b| (0..n).map(|c| field.int((c == g.mul(a, b)) as i64)).collect()).collect())
        .collect();
    let name = format!("K[{}]", g.label());
    let alg = Algebra::table(&name, field, names, unit, products, g.is_abelian()).expect("group algebra");
    let delta = (0..n)
        .map(|a| {
            let e = alg.basis_element(a);
            Tensor::pure(field, &[&e, &e])
        })
        .collect();
    let counit = vec![field.one(); n];
    let antipode = (0..n).map(|a| alg.basis_element(g.inv(a))).collect();
    HopfAlgebra::from_tables(&name, &alg, delta, counit, Some(antipode)).expect("group Hopf algebra")
}

/// The function algebra `K^G` on the basis of point masses `d_g`:
/// pointwise product, `Δ(d_g) = Σ_{hk=g} d_h⊗d_k`, `ε(d_g) = [g = e]`,
/// `S(d_g) = d_{g⁻¹}`.
pub fn function_hopf(g: &FiniteGroup, field: Field) -> HopfAlgebra {
    let n = g.order();
    let names = (0..n).map(|a| format!("d_{}", g.name(a))).collect();
    let unit = vec![field.one(); n];
    let products = (0..n)
        .map(|a| (0..n).map(|b| (0..n).map(|c| field.int((a == b && b == c) as i64)).collect()).collect())
        .collect();
    let name = format!("K^{}", g.label());
    let alg = Algebra::table(&name, field, names, unit, products, true).expect("function algebra");
    let delta = (0..n)
        .map(|target| {
            let mut t = Tensor::zero(field, &[alg.clone(), alg.clone()]);
            for h in 0..n {
                for k in 0..n {
                    if g.mul(h, k) == target {
                        t.add_term(vec![BasisKey::Index(h as u32), BasisKey::Index(k as u32)], field.one());
                    }
                }
            }
            t
        })
        .collect();
    let counit = (0..n).map(|a| field.int((a == g.identity()) as i64)).collect();
    let antipode = (0..n).map(|a| alg.basis_element(g.inv(a))).collect();
    HopfAlgebra::from_tables(&name, &alg, delta, counit, Some(antipode)).expect("function Hopf algebra")
}

fn label_of(x: &Element) -> String {
    if x.terms().len() == 1 {
        let (k, c) = x.terms().iter().next().expect("one term");
        if c.is_one() {
            return x.algebra().key_name(k);
        }
    }
    x.to_string()
}

/// Checks the bialgebra and Hopf axioms.
///
/// Coassociativity, counit laws and antipode laws are checked on `elements`;
/// multiplicativity of `Δ` and `ε` on all products `x·y` with `x` in
/// `elements` and `y` in `factors`; compatibility `Δ∘S = (S⊗S)∘flip∘Δ` and
/// `ε∘S = ε` on `factors`.
pub fn check_hopf_axioms(
    h: &HopfAlgebra,
    elements: &[Element],
    factors: &[Element],
    judge: &Judge,
    scenario: &str,
) -> Result<Vec<CheckEntry>> {
    let mut out = Vec::new();
    let alg = h.algebra();
    let field = h.field();
    let id = LinearMap::identity(alg);
    let d = h.delta();
    let e = h.counit();
    out.push(judge.check(scenario, "delta-unit", "1", d.apply(&alg.one())?, Tensor::unit(field, &[alg.clone(), alg.clone()]))?);
    out.push(judge.check(scenario, "counit-unit", "1", e.apply(&alg.one())?, Tensor::scalar(field, field.one()))?);
    for x in elements {
        let name = label_of(x);
        let dx = d.apply(x)?;
        let lhs = tensor_map(&[d, &id], &dx)?;
        let rhs = tensor_map(&[&id, d], &dx)?;
        out.push(judge.check(scenario, "coassociativity", &name, lhs, rhs)?);
        let tx = Tensor::from_element(x);
        out.push(judge.check(scenario, "counit-left", &name, tensor_map(&[e, &id], &dx)?, tx.clone())?);
        out.push(judge.check(scenario, "counit-right", &name, tensor_map(&[&id, e], &dx)?, tx)?);
        if let Some(s) = &h.antipode {
            let eps = Tensor::from_element(&h.unit_counit(x)?);
            let left = tensor_map(&[s, &id], &dx)?.multiply_slots(0)?;
            let right = tensor_map(&[&id, s], &dx)?.multiply_slots(0)?;
            out.push(judge.check(scenario, "antipode-left", &name, left, eps.clone())?);
            out.push(judge.check(scenario, "antipode-right", &name, right, eps)?);
        }
    }
    for x in elements {
        for y in factors {
            let name = format!("{} * {}", label_of(x), label_of(y));
            let xy = x.try_mul(y)?;
            let lhs = d.apply(&xy)?;
            let rhs = d.apply(x)?.try_mul(&d.apply(y)?)?;
            out.push(judge.check(scenario, "delta-multiplicative", &name, lhs, rhs)?);
            let lhs = e.apply(&xy)?;
            let rhs = e.apply(x)?.try_mul(&e.apply(y)?)?;
            out.push(judge.check(scenario, "counit-multiplicative", &name, lhs, rhs)?);
        }
    }
    if let Some(s) = &h.antipode {
        for g in factors {
            let name = label_of(g);
            let sg = s.apply(g)?.to_element();
            let lhs = d.apply(&sg)?;
            let rhs = tensor_map(&[s, s], &d.apply(g)?.flip())?;
            out.push(judge.check(scenario, "delta-antipode", &name, lhs, rhs)?);
            out.push(judge.check(scenario, "counit-antipode", &name, e.apply(&sg)?, e.apply(g)?)?);
        }
    }
    Ok(out)
}

/// Checks that `K^G` and `K[G]` are dual under `⟨d_g, h⟩ = [g = h]`:
/// the comultiplication of each is the transpose of the other's product,
/// and units and counits correspond.
pub fn check_duality(
    group: &FiniteGroup,
    kg: &HopfAlgebra,
    fun: &HopfAlgebra,
    scenario: &str,
) -> Result<Vec<CheckEntry>> {
    let n = group.order();
    let field = kg.field();
    let mut out = Vec::new();
    let coeff = |t: &Tensor, a: usize, b: usize| {
        t.terms()
            .get(&vec![BasisKey::Index(a as u32), BasisKey::Index(b as u32)])
            .cloned()
            .unwrap_or_else(|| field.zero())
    };
    let mut ok_fun = true;
    let mut ok_group = true;
    for g in 0..n {
        let dfun = fun.delta().apply_key(&BasisKey::Index(g as u32))?;
        let dgrp = kg.delta().apply_key(&BasisKey::Index(g as u32))?;
        for a in 0..n {
            for b in 0..n {
                // ⟨Δ d_g, a⊗b⟩ = ⟨d_g, ab⟩
                ok_fun &= coeff(&dfun, a, b) == field.int((group.mul(a, b) == g) as i64);
                // ⟨d_a d_b, g⟩ = ⟨d_a⊗d_b, Δ g⟩
                let prod = fun.algebra().basis_element(a).try_mul(&fun.algebra().basis_element(b))?;
                ok_group &= prod.coefficient(&BasisKey::Index(g as u32)) == coeff(&dgrp, a, b);
            }
        }
    }
    let name = group.label();
    out.push(CheckEntry::assertion(scenario, "duality-coproduct", &name, ok_fun, "Δ of K^G is the transpose of the product of K[G]"));
    out.push(CheckEntry::assertion(scenario, "duality-product", &name, ok_group, "product of K^G is the transpose of Δ of K[G]"));
    let mut ok_units = true;
    for g in 0..n {
        let x = kg.algebra().basis_element(g);
        ok_units &= kg.counit_value(&x)? == fun.algebra().one().coefficient(&BasisKey::Index(g as u32));
        let f = fun.algebra().basis_element(g);
        ok_units &= fun.counit_value(&f)? == kg.algebra().one().coefficient(&BasisKey::Index(g as u32));
    }
    out.push(CheckEntry::assertion(scenario, "duality-unit-counit", &name, ok_units, "units pair with counits"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_coalgebra_delta() {
        let c = Coalgebra::matrix(2, Field::Rational);
        assert_eq!(c.delta(0).len(), 2);
        assert!(c.counit(1).is_zero());
    }

    #[test]
    fn group_tables_are_validated() {
        assert!(FiniteGroup::cyclic(3).is_ok());
        assert!(FiniteGroup::symmetric3().order() == 6 && !FiniteGroup::symmetric3().is_abelian());
        let bad = FiniteGroup::from_table(vec!["e".into(), "x".into()], vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(bad, Err(Error::InvalidGroupTable(_))));
    }

    #[test]
    fn free_hopf_antipode_raises_level() {
        let h = free_hopf(&Coalgebra::matrix(2, Field::Rational));
        let s = h.antipode().unwrap();
        let x = free_generator(&h, 1, 0, 1);
        assert_eq!(s.apply_element(&x).unwrap(), free_generator(&h, 2, 0, 1));
    }
}
