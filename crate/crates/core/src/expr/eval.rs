use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ast::Expr;
use crate::logic::{weak_conj, weak_neg, Logic, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("predicate `{0}` has no truth value in the valuation")]
    UnboundPredicate(String),
    #[error("predicate family `{0}` has no truth values in the valuation")]
    UnboundFamily(String),
    #[error("unknown quantifier domain `{0}`")]
    UnknownDomain(String),
    #[error("quantifier domain `{0}` is empty")]
    EmptyDomain(String),
    #[error("index variable `{0}` is not bound")]
    UnboundIndex(String),
    #[error("family `{family}` has {len} values but domain `{domain}` has {size} indices")]
    FamilyLength {
        family: String,
        len: usize,
        domain: String,
        size: usize,
    },
}

/// Truth values for the predicates of a formula.
///
/// Serialised as `{"scalars": {...}, "families": {...}, "domains": {...}}`;
/// every key is optional when reading.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Valuation {
    pub scalars: BTreeMap<String, TruthValue>,
    pub families: BTreeMap<String, Vec<TruthValue>>,
    pub domains: BTreeMap<String, usize>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: impl Into<String>, value: TruthValue) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: impl Into<String>, value: TruthValue) {
        self.scalars.insert(name.into(), value);
    }

    /// Binds a family and declares a domain of the same size.
    pub fn set_family(
        &mut self,
        name: impl Into<String>,
        domain: impl Into<String>,
        values: Vec<TruthValue>,
    ) {
        self.domains.insert(domain.into(), values.len());
        self.families.insert(name.into(), values);
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Index variables currently in scope, innermost last.
struct Scope<'a> {
    frames: Vec<(&'a str, &'a str, usize)>,
}

impl<'a> Scope<'a> {
    fn lookup(&self, var: &str) -> Option<(&'a str, usize)> {
        self.frames
            .iter()
            .rev()
            .find(|(v, _, _)| *v == var)
            .map(|&(_, d, i)| (d, i))
    }
}

/// Truth value of `expr` under `logic`.
pub fn evaluate(expr: &Expr, logic: Logic, valuation: &Valuation) -> Result<TruthValue, EvalError> {
    let mut scope = Scope { frames: Vec::new() };
    eval_in(expr, logic, valuation, &mut scope)
}

fn eval_in<'a>(
    expr: &'a Expr,
    logic: Logic,
    val: &Valuation,
    scope: &mut Scope<'a>,
) -> Result<TruthValue, EvalError> {
    Ok(match expr {
        Expr::True => TruthValue::ONE,
        Expr::False => TruthValue::ZERO,
        Expr::Pred { name, index: None } => *val
            .scalars
            .get(name)
            .ok_or_else(|| EvalError::UnboundPredicate(name.clone()))?,
        Expr::Pred {
            name,
            index: Some(var),
        } => {
            let family = val
                .families
                .get(name)
                .ok_or_else(|| EvalError::UnboundFamily(name.clone()))?;
            let (domain, i) = scope
                .lookup(var)
                .ok_or_else(|| EvalError::UnboundIndex(var.clone()))?;
            let size = val.domains[domain];
            if family.len() != size {
                return Err(EvalError::FamilyLength {
                    family: name.clone(),
                    len: family.len(),
                    domain: domain.to_string(),
                    size,
                });
            }
            family[i]
        }
        Expr::StrongNeg(c) => logic.strong_neg(eval_in(c, logic, val, scope)?),
        Expr::WeakNeg(c) => weak_neg(eval_in(c, logic, val, scope)?),
        Expr::StrongConj(l, r) => {
            let (l, r) = (eval_in(l, logic, val, scope)?, eval_in(r, logic, val, scope)?);
            logic.tnorm(l, r)
        }
        Expr::WeakConj(l, r) => {
            let (l, r) = (eval_in(l, logic, val, scope)?, eval_in(r, logic, val, scope)?);
            weak_conj(l, r)
        }
        Expr::Implies(l, r) => {
            let (l, r) = (eval_in(l, logic, val, scope)?, eval_in(r, logic, val, scope)?);
            logic.residuum(l, r)
        }
        Expr::Iff(l, r) => {
            let (l, r) = (eval_in(l, logic, val, scope)?, eval_in(r, logic, val, scope)?);
            logic.tnorm(logic.residuum(l, r), logic.residuum(r, l))
        }
        Expr::ForAll { var, domain, body } => {
            forall(var, domain, val, scope, |v| eval_in(body, logic, val, v))?
        }
        Expr::Exists { var, domain, body } => {
            // ∃x φ ≜ ¬∀x ¬φ with strong negation
            let inf = forall(var, domain, val, scope, |v| {
                Ok(logic.strong_neg(eval_in(body, logic, val, v)?))
            })?;
            logic.strong_neg(inf)
        }
    })
}

fn forall<'a>(
    var: &'a str,
    domain: &'a str,
    val: &Valuation,
    scope: &mut Scope<'a>,
    mut body: impl FnMut(&mut Scope<'a>) -> Result<TruthValue, EvalError>,
) -> Result<TruthValue, EvalError> {
    let size = *val
        .domains
        .get(domain)
        .ok_or_else(|| EvalError::UnknownDomain(domain.to_string()))?;
    if size == 0 {
        return Err(EvalError::EmptyDomain(domain.to_string()));
    }
    let mut acc = TruthValue::ONE;
    for i in 0..size {
        scope.frames.push((var, domain, i));
        let v = body(scope);
        scope.frames.pop();
        acc = weak_conj(acc, v?);
    }
    Ok(acc)
}
