//! Deciding whether two computed sides of an identity agree: exactly first,
//! then modulo the relation ideal of any quotient factor.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::ideal::{member_tensor, IdealSource, IdealSpan, TensorCertificate, TensorMembership};
use crate::module::ModVec;
use crate::report::{CertificateRecord, CheckEntry, Status, Witness};
use crate::tensor::Tensor;

/// Either side of an identity: a tensor or a module vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Tensor(Tensor),
    Vector(ModVec),
}

impl Value {
    fn parts(&self) -> Vec<&Tensor> {
        match self {
            Value::Tensor(t) => vec![t],
            Value::Vector(v) => v.slots().iter().collect(),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Value::Tensor(t) => t.render(),
            Value::Vector(v) => v.render(),
        }
    }

    fn difference(&self, other: &Value) -> Result<Value> {
        Ok(match (self, other) {
            (Value::Tensor(a), Value::Tensor(b)) => Value::Tensor(a.try_sub(b)?),
            (Value::Vector(a), Value::Vector(b)) => Value::Vector(a.try_sub(b)?),
            _ => panic!("comparing a tensor with a module vector"),
        })
    }
}

impl From<Tensor> for Value {
    fn from(t: Tensor) -> Value {
        Value::Tensor(t)
    }
}

impl From<ModVec> for Value {
    fn from(v: ModVec) -> Value {
        Value::Vector(v)
    }
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Equal,
    /// Equal after adding an element of the ideal; one certificate per part
    /// that needed it (part index = module coordinate).
    EqualModIdeal(Vec<(usize, TensorCertificate)>),
    Different { residual: Value },
}

/// Compares computed values, consulting the registered quotient ideals.
#[derive(Clone)]
pub struct Judge {
    ideals: Vec<Arc<IdealSource>>,
    degree: usize,
}

impl Judge {
    /// A judge for identities in algebras without relations.
    pub fn exact(degree: usize) -> Judge {
        Judge { ideals: Vec::new(), degree }
    }

    pub fn new(ideals: Vec<Arc<IdealSource>>, degree: usize) -> Judge {
        Judge { ideals, degree }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn with_degree(&self, degree: usize) -> Judge {
        Judge { ideals: self.ideals.clone(), degree }
    }

    fn source_for(&self, a: &Algebra) -> Option<&Arc<IdealSource>> {
        self.ideals.iter().find(|s| s.algebra() == a)
    }

    /// Ideal spans for each slot of `t`, sized to cover it: generators one
    /// level above the highest level present, and degree at least the
    /// configured bound.
    pub fn spans_for(&self, t: &Tensor) -> Result<Vec<Option<Arc<IdealSpan>>>> {
        let levels = t.max_level() + 1;
        let degree = self.degree.max(t.degree());
        t.factors()
            .iter()
            .map(|a| self.source_for(a).map(|s| s.span(levels, degree)).transpose())
            .collect()
    }

    pub fn compare(&self, lhs: &Value, rhs: &Value) -> Result<Verdict> {
        let diff = rhs.difference(lhs)?;
        if diff.parts().iter().all(|t| t.is_zero()) {
            return Ok(Verdict::Equal);
        }
        let mut certs = Vec::new();
        for (i, part) in diff.parts().into_iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            let spans = self.spans_for(part)?;
            if spans.iter().all(Option::is_none) {
                return Ok(Verdict::Different { residual: diff });
            }
            match member_tensor(part, &spans)? {
                TensorMembership::Member(c) => {
                    debug_assert!(c.verify(part, &spans), "certificate does not rebuild the residual");
                    certs.push((i, c));
                }
                TensorMembership::NotFoundUpTo { .. } => return Ok(Verdict::Different { residual: diff }),
            }
        }
        Ok(Verdict::EqualModIdeal(certs))
    }

    /// Compares and packages the outcome as a report entry.
    pub fn check(
        &self,
        scenario: &str,
        check: &str,
        element: &str,
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
    ) -> Result<CheckEntry> {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let verdict = self.compare(&lhs, &rhs)?;
        let mut entry = CheckEntry::new(scenario, check, element, Status::Pass, self.degree);
        match verdict {
            Verdict::Equal => {}
            Verdict::EqualModIdeal(certs) => {
                entry.status = Status::PassModIdeal;
                let is_vector = matches!(lhs, Value::Vector(_));
                let diff = rhs.difference(&lhs)?;
                let parts = diff.parts();
                let mut records = Vec::new();
                for (i, cert) in certs {
                    let factors = parts[i].factors();
                    for part in &cert.parts {
                        let ctx: Vec<String> = factors
                            .iter()
                            .zip(&part.context)
                            .enumerate()
                            .map(|(s, (a, k))| if s == part.slot { "_".into() } else { a.key_name(k) })
                            .collect();
                        for t in &part.certificate.terms {
                            records.push(CertificateRecord {
                                component: is_vector.then_some(i),
                                slot: (factors.len() > 1).then_some(part.slot),
                                context: (factors.len() > 1).then(|| ctx.join("|")),
                                left: t.left.to_string(),
                                relation: t.relation,
                                right: t.right.to_string(),
                                coefficient: (&part.coef * &t.coef).to_string(),
                            });
                        }
                    }
                }
                entry.certificate = Some(records);
            }
            Verdict::Different { residual } => {
                entry.status = Status::Fail;
                entry.witness = Some(Witness {
                    lhs: lhs.render(),
                    rhs: rhs.render(),
                    residual: residual.render(),
                });
            }
        }
        Ok(entry)
    }
}
