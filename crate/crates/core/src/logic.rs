//! Truth values and the three base BL connective sets.
//!
//! Every continuous t-norm is locally isomorphic to one of Gödel, Product or
//! Łukasiewicz; each fixes a t-norm (strong conjunction), its residuum
//! (implication) and the strong negation `x ⇒ 0`.
//!
//! The Łukasiewicz t-norm is `max{x + y − 1, 0}`. Some printed tables give it
//! as `min{x + y − 1, 0}`, which is non-positive everywhere and cannot be a
//! t-norm; the `max` form is the one used in every derivation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Absolute slack accepted when validating a truth value, to absorb float
/// drift from composed operations. Values inside the slack are clamped.
pub const TRUTH_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TruthValueError {
    #[error("truth value {0} is outside [0, 1]")]
    OutOfRange(f64),
    #[error("truth value is not a finite number")]
    NotFinite,
}

/// A real number in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize)]
#[serde(transparent)]
pub struct TruthValue(f64);

impl TruthValue {
    pub const ZERO: TruthValue = TruthValue(0.0);
    pub const ONE: TruthValue = TruthValue(1.0);

    pub fn new(value: f64) -> Result<Self, TruthValueError> {
        if !value.is_finite() {
            return Err(TruthValueError::NotFinite);
        }
        if value < -TRUTH_TOLERANCE || value > 1.0 + TRUTH_TOLERANCE {
            return Err(TruthValueError::OutOfRange(value));
        }
        Ok(TruthValue(value.clamp(0.0, 1.0)))
    }

    /// Clamps a result that is in `[0, 1]` by construction.
    pub(crate) fn saturate(value: f64) -> Self {
        debug_assert!(value.is_finite());
        TruthValue(value.clamp(0.0, 1.0))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for TruthValue {
    type Error = TruthValueError;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        TruthValue::new(value)
    }
}

impl From<TruthValue> for f64 {
    fn from(v: TruthValue) -> f64 {
        v.0
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = f64::deserialize(deserializer)?;
        TruthValue::new(raw).map_err(serde::de::Error::custom)
    }
}

/// One of the three base BL subclasses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Logic {
    Godel,
    Product,
    Lukasiewicz,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown logic {0:?}; expected one of \"godel\", \"product\", \"lukasiewicz\"")]
pub struct UnknownLogic(pub String);

impl Logic {
    pub const ALL: [Logic; 3] = [Logic::Godel, Logic::Product, Logic::Lukasiewicz];

    pub fn name(self) -> &'static str {
        match self {
            Logic::Godel => "godel",
            Logic::Product => "product",
            Logic::Lukasiewicz => "lukasiewicz",
        }
    }

    /// Strong conjunction `x ⋆ y`.
    pub fn tnorm(self, x: TruthValue, y: TruthValue) -> TruthValue {
        TruthValue::saturate(self.tnorm_raw(x.0, y.0))
    }

    /// Implication `x ⇒ y`, the residuum of the t-norm.
    pub fn residuum(self, x: TruthValue, y: TruthValue) -> TruthValue {
        TruthValue::saturate(self.residuum_raw(x.0, y.0))
    }

    /// `x ⇒ 0`.
    pub fn strong_neg(self, x: TruthValue) -> TruthValue {
        self.residuum(x, TruthValue::ZERO)
    }

    pub(crate) fn tnorm_raw(self, x: f64, y: f64) -> f64 {
        match self {
            Logic::Godel => x.min(y),
            Logic::Product => x * y,
            // The identity cases are exact; x + 1 − 1 is not always x in floats.
            Logic::Lukasiewicz => {
                if y == 1.0 {
                    x
                } else if x == 1.0 {
                    y
                } else {
                    (x + y - 1.0).max(0.0)
                }
            }
        }
    }

    pub(crate) fn residuum_raw(self, x: f64, y: f64) -> f64 {
        match self {
            Logic::Godel => {
                if x <= y {
                    1.0
                } else {
                    y
                }
            }
            // x = 0 always takes the first branch, so no division by zero.
            Logic::Product => {
                if x <= y {
                    1.0
                } else {
                    y / x
                }
            }
            Logic::Lukasiewicz => {
                if x <= y {
                    1.0
                } else {
                    1.0 - x + y
                }
            }
        }
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Logic {
    type Err = UnknownLogic;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "godel" => Ok(Logic::Godel),
            "product" => Ok(Logic::Product),
            "lukasiewicz" => Ok(Logic::Lukasiewicz),
            other => Err(UnknownLogic(other.to_string())),
        }
    }
}

/// Weak negation, the fuzzy complement `1 − x`. Logic independent.
pub fn weak_neg(x: TruthValue) -> TruthValue {
    TruthValue::saturate(1.0 - x.0)
}

/// Idempotent conjunction `x ∧ y`; `min` in every BL subclass.
pub fn weak_conj(x: TruthValue, y: TruthValue) -> TruthValue {
    TruthValue(x.0.min(y.0))
}
