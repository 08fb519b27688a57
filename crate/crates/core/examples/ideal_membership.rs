//! Degree-bounded ideal membership with a re-checkable certificate.

use nebcheck::hopf::free_generator;
use nebcheck::ideal::Membership;
use nebcheck::{free_hopf, Coalgebra, Field, Result};

fn main() -> Result<()> {
    let h = free_hopf(&Coalgebra::matrix(2, Field::Rational));
    let source = h.ideal().expect("free Hopf algebras carry their relations");
    let span = source.span(1, 3)?;
    println!("ideal span: {} relations, degree ≤ {}, rank {}", span.relations().relations().len(), span.degree(), span.rank());

    // Σ_k S(a[0;0,k]) a[0;k,1] is an antipode relation; multiply it by a generator.
    let rel = &(&free_generator(&h, 1, 0, 0) * &free_generator(&h, 0, 0, 1))
        + &(&free_generator(&h, 1, 0, 1) * &free_generator(&h, 0, 1, 1));
    let x = &rel * &free_generator(&h, 0, 1, 0);
    match span.member(&x)? {
        Membership::Member(cert) => {
            println!("{x} is in the ideal:");
            for t in &cert.terms {
                println!("  {} · {} · r{} · {}", t.coef, t.left, t.relation, t.right);
            }
            println!("certificate verifies: {}", cert.verify(span.relations(), &x));
        }
        Membership::NotFoundUpTo { normal_form, .. } => println!("not found; normal form {normal_form}"),
    }

    let y = &free_generator(&h, 0, 0, 1) * &free_generator(&h, 1, 1, 0);
    if let Membership::NotFoundUpTo { degree, normal_form } = span.member(&y)? {
        println!("{y} is not in the span up to degree {degree} (normal form {normal_form})");
    }
    Ok(())
}
