//! Reductions of many per-group (or per-individual) biases into one truth
//! value. For every logic `Fair → Unbias → Rawl`, so
//! `fair_conjunction ≤ unbias ≤ rawl`.

use thiserror::Error;

use crate::logic::{weak_neg, Logic, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bias vector is empty")]
pub struct EmptyBiasVector;

/// One bias truth value per group, subgroup or individual.
#[derive(Debug, Clone, PartialEq)]
pub struct BiasVector(Vec<TruthValue>);

impl BiasVector {
    pub fn new(biases: Vec<TruthValue>) -> Result<Self, EmptyBiasVector> {
        if biases.is_empty() {
            Err(EmptyBiasVector)
        } else {
            Ok(BiasVector(biases))
        }
    }

    pub fn as_slice(&self) -> &[TruthValue] {
        &self.0
    }
}

/// Difference principle: `min_i (1 − bias_i)`.
pub fn rawl(biases: &BiasVector) -> TruthValue {
    biases
        .0
        .iter()
        .map(|&b| weak_neg(b))
        .fold(TruthValue::ONE, |acc, x| if x < acc { x } else { acc })
}

/// Lack of bias: `&_i ~Bias_i`, folded left to right.
pub fn unbias(logic: Logic, biases: &BiasVector) -> TruthValue {
    fold(logic, biases.0.iter().map(|&b| weak_neg(b)))
}

/// Strong fairness: `&_i !Bias_i`, folded left to right.
pub fn fair_conjunction(logic: Logic, biases: &BiasVector) -> TruthValue {
    fold(logic, biases.0.iter().map(|&b| logic.strong_neg(b)))
}

fn fold(logic: Logic, items: impl Iterator<Item = TruthValue>) -> TruthValue {
    items
        .reduce(|acc, x| logic.tnorm(acc, x))
        .unwrap_or(TruthValue::ONE)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(xs: &[f64]) -> BiasVector {
        BiasVector::new(xs.iter().map(|&x| TruthValue::new(x).unwrap()).collect()).unwrap()
    }

    #[test]
    fn rawl_examples() {
        assert_eq!(rawl(&bv(&[0.2, 0.5, 0.1])).get(), 0.5);
        assert_eq!(rawl(&bv(&[0.0, 0.0])).get(), 1.0);
        assert_eq!(rawl(&bv(&[1.0])).get(), 0.0);
    }

    #[test]
    fn unbias_examples() {
        assert_eq!(unbias(Logic::Product, &bv(&[0.5, 0.5])).get(), 0.25);
        assert_eq!(unbias(Logic::Godel, &bv(&[0.2, 0.5])).get(), 0.5);
        assert!((unbias(Logic::Lukasiewicz, &bv(&[0.4, 0.4])).get() - 0.2).abs() < 1e-15);
    }

    #[test]
    fn fair_examples() {
        assert_eq!(fair_conjunction(Logic::Godel, &bv(&[0.0, 0.0, 0.0])).get(), 1.0);
        assert_eq!(fair_conjunction(Logic::Godel, &bv(&[0.0, 0.01])).get(), 0.0);
        assert!((fair_conjunction(Logic::Lukasiewicz, &bv(&[0.3, 0.3])).get() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn empty_vector_rejected() {
        assert_eq!(BiasVector::new(vec![]), Err(EmptyBiasVector));
    }
}
