//! Algebraic invariants as property tests over small random inputs.

use proptest::prelude::*;

use nebcheck::convolution::{convolution, convolution_inverse, convolution_unit, maps_agree};
use nebcheck::counterexample::MatrixSetting;
use nebcheck::hopf::free_generator;
use nebcheck::ideal::Membership;
use nebcheck::module::extend_scalars;
use nebcheck::{
    free_hopf, group_hopf, tensor_map, Coalgebra, Element, Extension, Field, FiniteGroup, HopfAlgebra, LinearMap,
    ModVec, ModuleMatrix, Tensor,
};

type Gen = (u32, u32, u32);
type Combo = Vec<(Vec<Gen>, i64)>;

fn gen() -> impl Strategy<Value = Gen> {
    (0u32..2, 0u32..2, 0u32..2)
}

fn combo(max_len: usize) -> impl Strategy<Value = Combo> {
    prop::collection::vec((prop::collection::vec(gen(), 0..=max_len), -3i64..=3), 1..4)
}

fn free() -> HopfAlgebra {
    free_hopf(&Coalgebra::matrix(2, Field::Rational))
}

fn build(h: &HopfAlgebra, c: &Combo) -> Element {
    let a = h.algebra();
    c.iter().fold(a.zero(), |acc, (word, k)| {
        let w = word.iter().fold(a.one(), |p, &(l, i, j)| &p * &free_generator(h, l, i, j));
        &acc + &w.scale(&Field::Rational.int(*k))
    })
}

fn s3_map(name: &str, h: &HopfAlgebra, coefs: &[i64]) -> LinearMap {
    let a = h.algebra();
    let n = a.dim().unwrap();
    let images = (0..n)
        .map(|i| {
            let terms = a.basis().unwrap().into_iter().enumerate().map(|(j, k)| (k, Field::Rational.int(coefs[i * n + j])));
            Tensor::from_element(&a.from_terms(terms))
        })
        .collect();
    LinearMap::on_basis(name, a, &[a.clone()], Extension::Linear, images).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn free_multiplication_is_associative_and_unital(x in combo(2), y in combo(2), z in combo(1)) {
        let h = free();
        let (x, y, z) = (build(&h, &x), build(&h, &y), build(&h, &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &h.algebra().one(), x.clone());
        prop_assert_eq!(&h.algebra().one() * &x, x);
    }

    #[test]
    fn antipode_reverses_products(x in combo(2), y in combo(2)) {
        let h = free();
        let s = h.antipode().unwrap();
        let (x, y) = (build(&h, &x), build(&h, &y));
        let lhs = s.apply_element(&(&x * &y)).unwrap();
        let rhs = &s.apply_element(&y).unwrap() * &s.apply_element(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_is_multiplicative_and_coassociative(x in combo(2), y in combo(1)) {
        let h = free();
        let d = h.delta();
        let (x, y) = (build(&h, &x), build(&h, &y));
        let prod = d.apply(&(&x * &y)).unwrap();
        prop_assert_eq!(prod, d.apply(&x).unwrap().try_mul(&d.apply(&y).unwrap()).unwrap());
        let id = LinearMap::identity(h.algebra());
        let dx = d.apply(&x).unwrap();
        prop_assert_eq!(tensor_map(&[d, &id], &dx).unwrap(), tensor_map(&[&id, d], &dx).unwrap());
    }

    #[test]
    fn normal_form_is_linear(x in combo(2), y in combo(2), c in -3i64..=3) {
        let h = free();
        let span = h.ideal().unwrap().span(1, 2).unwrap();
        let (x, y) = (build(&h, &x), build(&h, &y));
        let c = Field::Rational.int(c);
        let lhs = span.normal_form(&(&x + &y.scale(&c)));
        let rhs = &span.normal_form(&x) + &span.normal_form(&y).scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ideal_membership_is_linear_and_monotone(
        i in 0usize..8, j in 0usize..8, left in gen(), c in -3i64..=3,
    ) {
        let h = free();
        let source = h.ideal().unwrap();
        let relations = source.relation_set(1).unwrap();
        let rels = relations.relations();
        let (ri, rj) = (&rels[i % rels.len()], &rels[j % rels.len()]);
        let x = &(&free_generator(&h, left.0, left.1, left.2) * ri) + &rj.scale(&Field::Rational.int(c));
        let small = source.span(1, 3).unwrap();
        let large = source.span(1, 4).unwrap();
        match small.member(&x).unwrap() {
            Membership::Member(cert) => prop_assert!(cert.verify(small.relations(), &x)),
            Membership::NotFoundUpTo { .. } => prop_assert!(false, "combination of relations not found"),
        }
        prop_assert!(large.member(&x).unwrap().is_member());
    }

    #[test]
    fn membership_rejects_level_zero_words(word in prop::collection::vec((Just(0u32), 0u32..2, 0u32..2), 1..3)) {
        let h = free();
        let x = word.iter().fold(h.algebra().one(), |p, &(l, i, j)| &p * &free_generator(&h, l, i, j));
        let span = h.ideal().unwrap().span(1, 3).unwrap();
        prop_assert!(!span.member(&x).unwrap().is_member());
    }

    #[test]
    fn convolution_is_associative_with_unit(f in prop::collection::vec(-2i64..=2, 36), g in prop::collection::vec(-2i64..=2, 36), k in prop::collection::vec(-2i64..=2, 36)) {
        let h = group_hopf(&FiniteGroup::symmetric3(), Field::Rational);
        let (f, g, k) = (s3_map("f", &h, &f), s3_map("g", &h, &g), s3_map("k", &h, &k));
        let left = convolution(&h, &convolution(&h, &f, &g).unwrap(), &k).unwrap();
        let right = convolution(&h, &f, &convolution(&h, &g, &k).unwrap()).unwrap();
        prop_assert!(maps_agree(&left, &right).unwrap());
        let unit = convolution_unit(&h, h.algebra()).unwrap();
        prop_assert!(maps_agree(&convolution(&h, &f, &unit).unwrap(), &f).unwrap());
        prop_assert!(maps_agree(&convolution(&h, &unit, &f).unwrap(), &f).unwrap());
    }

    #[test]
    fn neb_sides_are_linear_over_the_base(a in combo(1), q in 0usize..2) {
        let s = MatrixSetting::new(Field::Rational);
        let theta = s.example_theta();
        let a = build(&s.hopf, &a);
        let alg = s.hopf.algebra().clone();
        let e = ModVec::basis(Field::Rational, &[alg.clone()], 2, q);
        let ae = e.left_mul(&Tensor::from_element(&a)).unwrap();
        let one = alg.one();
        let lifted = Tensor::pure(Field::Rational, &[&one, &one, &a]);
        let (l0, r0) = theta.coassociativity_sides(&e).unwrap();
        let (l1, r1) = theta.coassociativity_sides(&ae).unwrap();
        prop_assert_eq!(l1, l0.left_mul(&lifted).unwrap());
        prop_assert_eq!(r1, r0.left_mul(&lifted).unwrap());
    }

    #[test]
    fn extension_of_scalars_respects_composition(m in prop::collection::vec(-2i64..=2, 8), n in prop::collection::vec(-2i64..=2, 8)) {
        let h = group_hopf(&FiniteGroup::cyclic(2).unwrap(), Field::Rational);
        let a = h.algebra().clone();
        let entry = |v: &[i64]| Tensor::from_element(&a.from_terms(a.basis().unwrap().into_iter().zip(v).map(|(k, &c)| (k, Field::Rational.int(c)))));
        let matrix = |v: &[i64]| {
            ModuleMatrix::new(Field::Rational, &[a.clone()], vec![vec![entry(&v[0..2]), entry(&v[2..4])], vec![entry(&v[4..6]), entry(&v[6..8])]]).unwrap()
        };
        let (m, n) = (matrix(&m), matrix(&n));
        // u ↦ -u is an algebra automorphism of K[Z2].
        let sign = LinearMap::on_basis(
            "sign",
            &a,
            &[a.clone()],
            Extension::AlgebraHom,
            vec![Tensor::from_element(&a.basis_element(0)), Tensor::from_element(&a.basis_element(1).scale(&Field::Rational.int(-1)))],
        ).unwrap();
        let phi = |t: &Tensor| tensor_map(&[&sign], t);
        let lhs = extend_scalars(&[a.clone()], phi, &m.compose(&n).unwrap()).unwrap();
        let rhs = extend_scalars(&[a.clone()], phi, &m).unwrap().compose(&extend_scalars(&[a.clone()], phi, &n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn identity_inverse_is_antipode_on_function_algebras() {
    for g in [FiniteGroup::cyclic(4).unwrap(), FiniteGroup::klein(), FiniteGroup::symmetric3()] {
        let h = nebcheck::function_hopf(&g, Field::Rational);
        let inv = convolution_inverse(&h, &LinearMap::identity(h.algebra())).unwrap();
        assert!(maps_agree(&inv, h.antipode().unwrap()).unwrap(), "{}", h.name());
    }
}
