//! Classical group-discrimination measures over binary predictions, and the
//! per-logic truth value of discrimination between two measured properties.

use serde::Serialize;
use thiserror::Error;

use crate::logic::{Logic, TruthValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("column lengths differ: {0} predictions, {1} other")]
    LengthMismatch(usize, usize),
    #[error("group selects no samples")]
    EmptyGroup,
    #[error("no labelled samples with label {0} in the group")]
    EmptyConditionedGroup(u8),
    #[error("p-rule is undefined when a positive rate is zero")]
    ZeroRate,
}

/// Binary predictions with optional ground truth, one entry per sample.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditDataset {
    pub predictions: Vec<bool>,
    pub labels: Vec<Option<bool>>,
}

impl AuditDataset {
    pub fn new(predictions: Vec<bool>, labels: Vec<Option<bool>>) -> Result<Self, MeasureError> {
        if predictions.is_empty() {
            return Err(MeasureError::EmptyDataset);
        }
        if labels.len() != predictions.len() {
            return Err(MeasureError::LengthMismatch(predictions.len(), labels.len()));
        }
        Ok(AuditDataset {
            predictions,
            labels,
        })
    }

    pub fn unlabelled(predictions: Vec<bool>) -> Result<Self, MeasureError> {
        let n = predictions.len();
        Self::new(predictions, vec![None; n])
    }

    pub fn len(&self) -> usize {
        self.predictions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.predictions.is_empty()
    }

    fn check_mask(&self, mask: &[bool]) -> Result<(), MeasureError> {
        if mask.len() != self.len() {
            return Err(MeasureError::LengthMismatch(self.len(), mask.len()));
        }
        if !mask.iter().any(|&m| m) {
            return Err(MeasureError::EmptyGroup);
        }
        Ok(())
    }

    /// `P(c(x) = 1 | x ∈ group, Y(x) = y)`.
    pub fn conditional_positive_rate(&self, mask: &[bool], y: bool) -> Result<TruthValue, MeasureError> {
        self.check_mask(mask)?;
        ratio(
            self.iter_group(mask)
                .filter(|&(_, l)| l == Some(y))
                .map(|(p, _)| p),
        )
        .ok_or(MeasureError::EmptyConditionedGroup(y as u8))
    }

    fn iter_group<'a>(&'a self, mask: &'a [bool]) -> impl Iterator<Item = (bool, Option<bool>)> + 'a {
        self.predictions
            .iter()
            .zip(&self.labels)
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|((&p, &l), _)| (p, l))
    }
}

fn ratio(items: impl Iterator<Item = bool>) -> Option<TruthValue> {
    let (mut hits, mut total) = (0usize, 0usize);
    for b in items {
        total += 1;
        hits += b as usize;
    }
    (total > 0).then(|| TruthValue::saturate(hits as f64 / total as f64))
}

/// Empirical conditional frequencies for one group. Rates whose denominator
/// is empty are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupRates {
    pub count: usize,
    pub positive_rate: TruthValue,
    pub tpr: Option<TruthValue>,
    pub fnr: Option<TruthValue>,
    pub fpr: Option<TruthValue>,
}

pub fn group_rates(dataset: &AuditDataset, mask: &[bool]) -> Result<GroupRates, MeasureError> {
    dataset.check_mask(mask)?;
    let group: Vec<_> = dataset.iter_group(mask).collect();
    let positive_rate = ratio(group.iter().map(|&(p, _)| p)).ok_or(MeasureError::EmptyGroup)?;
    let tpr = ratio(group.iter().filter(|(_, l)| *l == Some(true)).map(|&(p, _)| p));
    let fpr = ratio(group.iter().filter(|(_, l)| *l == Some(false)).map(|&(p, _)| p));
    Ok(GroupRates {
        count: group.len(),
        positive_rate,
        tpr,
        fnr: tpr.map(crate::logic::weak_neg),
        fpr,
    })
}

/// `min{p/p′, p′/p}`.
pub fn prule(p: TruthValue, p_prime: TruthValue) -> Result<TruthValue, MeasureError> {
    let (a, b) = (p.get(), p_prime.get());
    if a == 0.0 || b == 0.0 {
        return Err(MeasureError::ZeroRate);
    }
    Ok(TruthValue::saturate((a / b).min(b / a)))
}

/// Calders–Verwer disparity `|p − p′|`.
pub fn cv(p: TruthValue, p_prime: TruthValue) -> TruthValue {
    delta_measure(p, p_prime)
}

/// `|m − m′|` for any measured property.
pub fn delta_measure(m: TruthValue, m_prime: TruthValue) -> TruthValue {
    TruthValue::saturate((m.get() - m_prime.get()).abs())
}

/// Equalized-odds difference for class `y`.
pub fn equalized_odds_diff(
    dataset: &AuditDataset,
    group: &[bool],
    other: &[bool],
    y: bool,
) -> Result<TruthValue, MeasureError> {
    Ok(delta_measure(
        dataset.conditional_positive_rate(group, y)?,
        dataset.conditional_positive_rate(other, y)?,
    ))
}

/// Truth value of discrimination `E ≜ ~(M(S) <-> M(S′))` between measured
/// properties `m` and `m′`, in closed form per logic:
///
/// | logic        | `P(E)`                        |
/// |--------------|-------------------------------|
/// | Gödel        | `1 − min{m, m′}`              |
/// | Product      | `1 − min{m,m′} / max{m,m′}`, 0 at `(0,0)` |
/// | Łukasiewicz  | `|m − m′|`                    |
///
/// The Gödel row is the tabulated form; it differs from evaluating the
/// expression only at `m = m′`, where the expression gives 0.
pub fn discrimination_truth(logic: Logic, m: TruthValue, m_prime: TruthValue) -> TruthValue {
    let (a, b) = (m.get(), m_prime.get());
    let (lo, hi) = (a.min(b), a.max(b));
    TruthValue::saturate(match logic {
        Logic::Godel => 1.0 - lo,
        Logic::Product => {
            if hi == 0.0 {
                0.0
            } else {
                1.0 - lo / hi
            }
        }
        Logic::Lukasiewicz => hi - lo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(x: f64) -> TruthValue {
        TruthValue::new(x).unwrap()
    }

    #[test]
    fn positive_rate_of_a_group() {
        let ds = AuditDataset::unlabelled(vec![true, true, false, false]).unwrap();
        let r = group_rates(&ds, &[true, true, false, false]).unwrap();
        assert_eq!(r.positive_rate.get(), 1.0);
        assert_eq!(r.count, 2);
        assert_eq!(r.tpr, None);
        assert_eq!(r.fpr, None);
    }

    #[test]
    fn false_positive_rate() {
        let ds = AuditDataset::new(vec![true, false], vec![Some(false), Some(false)]).unwrap();
        let r = group_rates(&ds, &[true, true]).unwrap();
        assert_eq!(r.fpr.unwrap().get(), 0.5);
        assert_eq!(r.tpr, None);
    }

    #[test]
    fn hand_counted_rates() {
        let ds = AuditDataset::new(
            vec![true, true, true, false],
            vec![Some(true), Some(false), Some(true), Some(true)],
        )
        .unwrap();
        let r = group_rates(&ds, &[true; 4]).unwrap();
        assert_eq!(r.tpr.unwrap().get(), 2.0 / 3.0);
        assert_eq!(r.fpr.unwrap().get(), 1.0);
        assert!((r.tpr.unwrap().get() + r.fnr.unwrap().get() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn empty_group_is_an_error() {
        let ds = AuditDataset::unlabelled(vec![true, false]).unwrap();
        assert_eq!(group_rates(&ds, &[false, false]), Err(MeasureError::EmptyGroup));
        assert!(matches!(
            group_rates(&ds, &[true]),
            Err(MeasureError::LengthMismatch(2, 1))
        ));
        assert_eq!(AuditDataset::unlabelled(vec![]), Err(MeasureError::EmptyDataset));
    }

    #[test]
    fn prule_examples() {
        assert_eq!(prule(tv(0.5), tv(0.5)).unwrap().get(), 1.0);
        assert_eq!(prule(tv(0.77), tv(1.0)).unwrap().get(), 0.77);
        assert_eq!(prule(tv(0.2), tv(0.8)).unwrap().get(), 0.25);
        assert_eq!(prule(tv(0.8), tv(0.2)).unwrap().get(), 0.25);
        assert_eq!(prule(TruthValue::ZERO, tv(0.3)), Err(MeasureError::ZeroRate));
    }

    #[test]
    fn difference_measures() {
        assert_eq!(cv(tv(0.5), tv(0.5)).get(), 0.0);
        assert!((cv(tv(0.2), tv(0.8)).get() - 0.6).abs() < 1e-15);
        assert_eq!(cv(TruthValue::ONE, TruthValue::ZERO).get(), 1.0);
        assert_eq!(delta_measure(tv(0.3), tv(0.3)).get(), 0.0);
        assert!((delta_measure(tv(0.1), tv(0.4)).get() - 0.3).abs() < 1e-15);
        let mistreatment =
            delta_measure(tv(0.1), tv(0.4)).get() + delta_measure(tv(0.2), tv(0.2)).get();
        assert!((mistreatment - 0.3).abs() < 1e-15);
    }

    #[test]
    fn equalized_odds() {
        // group A: tpr 0.9 over 10 positives; group B: tpr 0.6.
        let mut preds = Vec::new();
        let mut labels = Vec::new();
        let mut a = Vec::new();
        for i in 0..10 {
            preds.push(i < 9);
            labels.push(Some(true));
            a.push(true);
        }
        for i in 0..10 {
            preds.push(i < 6);
            labels.push(Some(true));
            a.push(false);
        }
        // negatives: fpr 0.2 in A, 0.5 in B
        for i in 0..10 {
            preds.push(i < 2);
            labels.push(Some(false));
            a.push(true);
        }
        for i in 0..10 {
            preds.push(i < 5);
            labels.push(Some(false));
            a.push(false);
        }
        let b: Vec<bool> = a.iter().map(|x| !x).collect();
        let ds = AuditDataset::new(preds, labels).unwrap();
        let d1 = equalized_odds_diff(&ds, &a, &b, true).unwrap().get();
        let d0 = equalized_odds_diff(&ds, &a, &b, false).unwrap().get();
        assert!((d1 - 0.3).abs() < 1e-15);
        assert!((d0 - 0.3).abs() < 1e-15);
        assert_eq!(equalized_odds_diff(&ds, &a, &a, true).unwrap().get(), 0.0);
        let unl = AuditDataset::unlabelled(vec![true, false]).unwrap();
        assert_eq!(
            equalized_odds_diff(&unl, &[true, false], &[false, true], true),
            Err(MeasureError::EmptyConditionedGroup(1))
        );
    }

    #[test]
    fn discrimination_per_logic() {
        assert!((discrimination_truth(Logic::Lukasiewicz, tv(0.7), tv(0.4)).get() - 0.3).abs() < 1e-15);
        assert_eq!(
            discrimination_truth(Logic::Product, TruthValue::ZERO, TruthValue::ZERO).get(),
            0.0
        );
        assert!((discrimination_truth(Logic::Godel, tv(0.9), tv(0.6)).get() - 0.4).abs() < 1e-15);
        assert!((discrimination_truth(Logic::Product, tv(0.77), TruthValue::ONE).get() - 0.23).abs() < 1e-15);
    }

    #[test]
    fn godel_tie_differs_from_expression() {
        use crate::expr::{evaluate, parse, Valuation};
        let val = Valuation::new().with("M", tv(0.6)).with("Mp", tv(0.6));
        let via_expr = evaluate(&parse("~(M <-> Mp)").unwrap(), Logic::Godel, &val).unwrap();
        assert_eq!(via_expr.get(), 0.0);
        assert!((discrimination_truth(Logic::Godel, tv(0.6), tv(0.6)).get() - 0.4).abs() < 1e-15);
    }
}
