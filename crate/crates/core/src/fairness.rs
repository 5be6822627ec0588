//! Standard-form group bias and fairness.
//!
//! With `s = P(S)` (group membership), `e = P(E)` (discrimination) and
//! `f = P(F(S,E))` (the free expression), the standard form of imbalance is
//! `S → (S & E & F)`, group bias evaluates to `s ⋆ e ⋆ f`, and no bias
//! definition exceeds the worst case `s ⋆ e`. Fairness is the strong negation
//! of bias.

use serde::Serialize;

use crate::logic::{Logic, TruthValue};

/// `s ⇒ (s ⋆ e ⋆ f)`.
pub fn imbalance_standard(logic: Logic, s: TruthValue, e: TruthValue, f: TruthValue) -> TruthValue {
    logic.residuum(s, bias_standard(logic, s, e, f))
}

/// `s ⋆ e ⋆ f`, folded as `s ⋆ (e ⋆ f)`.
pub fn bias_standard(logic: Logic, s: TruthValue, e: TruthValue, f: TruthValue) -> TruthValue {
    logic.tnorm(s, logic.tnorm(e, f))
}

/// Upper bound `s ⋆ e` on any bias definition, attained by the generator.
pub fn worst_case_bias(logic: Logic, s: TruthValue, e: TruthValue) -> TruthValue {
    logic.tnorm(s, e)
}

pub fn fairness_of_bias(logic: Logic, bias: TruthValue) -> TruthValue {
    logic.strong_neg(bias)
}

/// `inf { d : s ⋆ d ≥ s ⋆ e }` in closed form.
///
/// For `s = 0` every `d` satisfies the constraint and the infimum is 0.
pub fn infimum_d(logic: Logic, s: TruthValue, e: TruthValue) -> TruthValue {
    let (sv, ev) = (s.get(), e.get());
    if sv == 0.0 {
        return TruthValue::ZERO;
    }
    match logic {
        Logic::Godel => {
            if ev < sv {
                e
            } else {
                s
            }
        }
        Logic::Product => e,
        // s ⋆ e > 0 forces d ≥ e; s ⋆ e = 0 is met by d = 0.
        Logic::Lukasiewicz => {
            if logic.tnorm_raw(sv, ev) > 0.0 {
                e
            } else {
                TruthValue::ZERO
            }
        }
    }
}

/// Truth value of the worst-case generator, `e ⇒ inf { d : s ⋆ d ≥ s ⋆ e }`,
/// evaluated literally with the logic's residuum.
pub fn f_gen(logic: Logic, s: TruthValue, e: TruthValue) -> TruthValue {
    logic.residuum(e, infimum_d(logic, s, e))
}

/// Whether `e` lies in the generation space of the standard form for group
/// membership `s`, as tabulated per logic: all of `[0, 1]` for Gödel and
/// Product, `[1 − s, 1] ∪ {0}` for Łukasiewicz.
///
/// For Gödel this differs from testing `f_gen == 1`: with the usual residuum,
/// `f_gen(Gödel, s, e) = s` whenever `e > s`. Both are exposed.
pub fn in_generation_space(logic: Logic, s: TruthValue, e: TruthValue) -> bool {
    match logic {
        Logic::Godel | Logic::Product => true,
        Logic::Lukasiewicz => e.get() == 0.0 || e.get() >= 1.0 - s.get(),
    }
}

/// Generator truth value following the tabulated generation spaces: 1 inside
/// the space, the literal [`f_gen`] outside it.
pub fn f_gen_published(logic: Logic, s: TruthValue, e: TruthValue) -> TruthValue {
    if in_generation_space(logic, s, e) {
        TruthValue::ONE
    } else {
        f_gen(logic, s, e)
    }
}

/// Largest discrimination compatible with perfect worst-case fairness under
/// Łukasiewicz: `e ≤ 1 − s`, the truth value of not encountering the group.
pub fn lukasiewicz_fair_threshold(s: TruthValue) -> TruthValue {
    crate::logic::weak_neg(s)
}

/// Accepted discrimination values for a given `s`, as closed intervals plus
/// isolated points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenerationSpace {
    pub logic: Logic,
    pub s: TruthValue,
    pub intervals: Vec<[f64; 2]>,
    pub points: Vec<f64>,
}

pub fn generation_space(logic: Logic, s: TruthValue) -> GenerationSpace {
    let (intervals, points) = match logic {
        Logic::Godel | Logic::Product => (vec![[0.0, 1.0]], vec![]),
        Logic::Lukasiewicz => {
            let lo = 1.0 - s.get();
            if lo <= 0.0 {
                (vec![[0.0, 1.0]], vec![])
            } else {
                (vec![[lo, 1.0]], vec![0.0])
            }
        }
    };
    GenerationSpace {
        logic,
        s,
        intervals,
        points,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FairnessInputs {
    pub s: TruthValue,
    pub e: TruthValue,
    pub f: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FairnessReport {
    pub logic: Logic,
    pub imbalance: TruthValue,
    pub bias: TruthValue,
    pub worst_case_bias: TruthValue,
    pub fairness: TruthValue,
    pub in_generation_space: bool,
}

impl FairnessReport {
    pub fn compute(logic: Logic, inputs: FairnessInputs) -> Self {
        let FairnessInputs { s, e, f } = inputs;
        let bias = bias_standard(logic, s, e, f);
        FairnessReport {
            logic,
            imbalance: imbalance_standard(logic, s, e, f),
            bias,
            worst_case_bias: worst_case_bias(logic, s, e),
            fairness: fairness_of_bias(logic, bias),
            in_generation_space: in_generation_space(logic, s, e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(x: f64) -> TruthValue {
        TruthValue::new(x).unwrap()
    }

    fn close(a: TruthValue, b: f64) -> bool {
        (a.get() - b).abs() < 1e-12
    }

    #[test]
    fn imbalance_examples() {
        for logic in Logic::ALL {
            for (e, f) in [(0.0, 0.0), (0.3, 0.7), (1.0, 1.0)] {
                assert_eq!(imbalance_standard(logic, TruthValue::ZERO, tv(e), tv(f)).get(), 1.0);
            }
            for s in [0.0, 0.2, 0.9, 1.0] {
                assert_eq!(
                    imbalance_standard(logic, tv(s), TruthValue::ONE, TruthValue::ONE).get(),
                    1.0
                );
            }
        }
        let v = imbalance_standard(Logic::Lukasiewicz, tv(0.5), tv(0.8), TruthValue::ONE);
        assert!(close(v, 0.8));
    }

    #[test]
    fn bias_examples() {
        assert_eq!(
            bias_standard(Logic::Godel, tv(0.05), tv(0.19), TruthValue::ZERO).get(),
            0.0
        );
        for logic in Logic::ALL {
            assert_eq!(bias_standard(logic, tv(0.7), TruthValue::ZERO, tv(0.4)).get(), 0.0);
        }
        assert!(close(
            bias_standard(Logic::Product, tv(0.5), tv(0.4), TruthValue::ONE),
            0.2
        ));
    }

    #[test]
    fn worst_case_examples() {
        assert!(close(worst_case_bias(Logic::Lukasiewicz, tv(0.9), tv(0.3)), 0.2));
        for logic in Logic::ALL {
            assert_eq!(worst_case_bias(logic, TruthValue::ONE, tv(0.37)).get(), 0.37);
        }
        assert_eq!(worst_case_bias(Logic::Godel, tv(0.05), tv(0.19)).get(), 0.05);
    }

    #[test]
    fn fairness_examples() {
        assert_eq!(fairness_of_bias(Logic::Godel, TruthValue::ZERO).get(), 1.0);
        assert_eq!(fairness_of_bias(Logic::Godel, tv(0.01)).get(), 0.0);
        assert!(close(fairness_of_bias(Logic::Lukasiewicz, tv(0.2)), 0.8));
    }

    #[test]
    fn generator_examples() {
        for e in [0.0, 0.1, 0.5, 1.0] {
            assert_eq!(f_gen(Logic::Product, tv(0.4), tv(e)).get(), 1.0);
        }
        assert!(close(f_gen(Logic::Lukasiewicz, tv(0.5), tv(0.3)), 0.7));
        for logic in Logic::ALL {
            assert_eq!(f_gen(logic, tv(0.6), TruthValue::ZERO).get(), 1.0);
        }
        // Literal residuum: Gödel generator is s, not 1, above the diagonal.
        assert_eq!(f_gen(Logic::Godel, tv(0.3), tv(0.7)).get(), 0.3);
        assert_eq!(f_gen_published(Logic::Godel, tv(0.3), tv(0.7)).get(), 1.0);
    }

    #[test]
    fn infimum_examples() {
        assert_eq!(infimum_d(Logic::Godel, tv(0.5), tv(0.7)).get(), 0.5);
        assert_eq!(infimum_d(Logic::Godel, tv(0.5), tv(0.3)).get(), 0.3);
        assert_eq!(infimum_d(Logic::Lukasiewicz, tv(0.4), tv(0.3)).get(), 0.0);
        assert_eq!(infimum_d(Logic::Lukasiewicz, tv(0.4), tv(0.8)).get(), 0.8);
        assert_eq!(infimum_d(Logic::Product, tv(0.5), tv(0.3)).get(), 0.3);
        for logic in Logic::ALL {
            assert_eq!(infimum_d(logic, TruthValue::ZERO, tv(0.9)).get(), 0.0);
        }
    }

    #[test]
    fn generation_space_membership() {
        assert!(!in_generation_space(Logic::Lukasiewicz, tv(0.3), tv(0.5)));
        assert!(in_generation_space(Logic::Lukasiewicz, tv(0.3), tv(0.8)));
        assert!(in_generation_space(Logic::Lukasiewicz, tv(0.3), TruthValue::ZERO));
        for (s, e) in [(0.0, 0.5), (0.3, 0.1), (1.0, 1.0)] {
            assert!(in_generation_space(Logic::Godel, tv(s), tv(e)));
            assert!(in_generation_space(Logic::Product, tv(s), tv(e)));
        }
        let space = generation_space(Logic::Lukasiewicz, tv(0.25));
        assert_eq!(space.intervals, vec![[0.75, 1.0]]);
        assert_eq!(space.points, vec![0.0]);
    }

    #[test]
    fn lukasiewicz_threshold() {
        assert!(close(lukasiewicz_fair_threshold(tv(0.2)), 0.8));
        assert_eq!(lukasiewicz_fair_threshold(TruthValue::ONE).get(), 0.0);
        assert_eq!(lukasiewicz_fair_threshold(TruthValue::ZERO).get(), 1.0);
    }

    #[test]
    fn report_invariants() {
        let r = FairnessReport::compute(
            Logic::Lukasiewicz,
            FairnessInputs {
                s: tv(0.05),
                e: tv(0.19),
                f: TruthValue::ONE,
            },
        );
        assert_eq!(r.worst_case_bias.get(), 0.0);
        assert_eq!(r.fairness.get(), 1.0);
        assert!(r.bias <= r.worst_case_bias);
    }
}
